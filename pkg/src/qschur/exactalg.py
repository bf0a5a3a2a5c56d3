"""Exact coefficient arithmetic and sparse ranks.

Three coefficient regimes are supported, selected by a :class:`RingSpec`:

* ``generic``: Laurent polynomials ``Z[t, t^-1]`` (:class:`LaurentInt`), with
  ranks taken over the fraction field ``Q(t)``;
* ``Q:<q>``: rationals, with the parameter specialised to a nonzero rational;
* ``F<p>:<q>``: the prime field ``F_p``, parameter a unit mod ``p``.

Nothing here ever touches floating point.
"""

from __future__ import annotations

import heapq
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple, Union


class LaurentInt:
    """Element of ``Z[t, t^-1]``, stored as sorted ``(exponent, coefficient)`` pairs."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[int, int], Iterable[Tuple[int, int]], None] = None):
        if terms is None:
            items = ()
        else:
            if isinstance(terms, Mapping):
                terms = terms.items()
            acc: Dict[int, int] = {}
            for e, c in terms:
                if c:
                    acc[e] = acc.get(e, 0) + c
            items = tuple(sorted((e, c) for e, c in acc.items() if c))
        self._terms = items
        self._hash = None

    @classmethod
    def _raw(cls, items: tuple) -> "LaurentInt":
        obj = cls.__new__(cls)
        obj._terms = items
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int) -> "LaurentInt":
        return cls._raw(((0, c),) if c else ())

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "LaurentInt":
        return cls._raw(((e, c),) if c else ())

    @classmethod
    def t(cls) -> "LaurentInt":
        return cls.monomial(1)

    @property
    def terms(self) -> Dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_unit(self) -> bool:
        return len(self._terms) == 1 and abs(self._terms[0][1]) == 1

    def __eq__(self, other):
        if isinstance(other, LaurentInt):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == (((0, other),) if other else ())
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    @staticmethod
    def _coerce(x) -> "LaurentInt":
        if isinstance(x, LaurentInt):
            return x
        if isinstance(x, int):
            return LaurentInt.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentInt")

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        acc = dict(self._terms)
        for e, c in other._terms:
            v = acc.get(e, 0) + c
            if v:
                acc[e] = v
            else:
                acc.pop(e, None)
        return LaurentInt._raw(tuple(sorted(acc.items())))

    __radd__ = __add__

    def __neg__(self):
        return LaurentInt._raw(tuple((e, -c) for e, c in self._terms))

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentInt._raw(())
            return LaurentInt._raw(tuple((e, c * other) for e, c in self._terms))
        if not isinstance(other, LaurentInt):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return LaurentInt._raw(())
        if len(b) == 1:
            e2, c2 = b[0]
            return LaurentInt._raw(tuple((e + e2, c * c2) for e, c in a))
        if len(a) == 1:
            e1, c1 = a[0]
            return LaurentInt._raw(tuple((e1 + e, c1 * c) for e, c in b))
        acc: Dict[int, int] = {}
        for e1, c1 in a:
            for e2, c2 in b:
                k = e1 + e2
                acc[k] = acc.get(k, 0) + c1 * c2
        return LaurentInt._raw(tuple(sorted((e, c) for e, c in acc.items() if c)))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_unit():
                raise ValueError("only units have negative powers in Z[t,t^-1]")
            (e, c), = self._terms
            return LaurentInt.monomial(e * k, c ** (-k))
        out = LaurentInt.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def unit_inverse(self) -> "LaurentInt":
        if not self.is_unit():
            raise ZeroDivisionError(f"{self} is not a unit of Z[t,t^-1]")
        (e, c), = self._terms
        return LaurentInt.monomial(-e, c)

    def size(self) -> int:
        """Pivot cost: sum of |coefficients| times (1 + exponent span)."""
        if not self._terms:
            return 0
        span = self._terms[-1][0] - self._terms[0][0]
        return sum(abs(c) for _, c in self._terms) * (1 + span)

    def content(self) -> Tuple[int, int]:
        """(integer content with the sign of the lowest term, lowest exponent)."""
        if not self._terms:
            return (1, 0)
        g = 0
        for _, c in self._terms:
            g = math.gcd(g, c)
        if self._terms[0][1] < 0:
            g = -g
        return g, self._terms[0][0]

    def shift_div(self, g: int, e: int) -> "LaurentInt":
        """Exact division by ``g * t^e``; ``g`` must divide every coefficient."""
        return LaurentInt._raw(tuple((x - e, c // g) for x, c in self._terms))

    def evaluate(self, q, one=1):
        """Evaluate at ``t = q`` in any ring whose elements support ``**`` by negative ints."""
        total = one * 0
        for e, c in self._terms:
            total = total + (q ** e) * c
        return total

    def __str__(self):
        return format_laurent(self)

    def __repr__(self):
        return f"LaurentInt({format_laurent(self)!r})"


def format_laurent(x: LaurentInt) -> str:
    if not x._terms:
        return "0"
    out = []
    for idx, (e, c) in enumerate(x._terms):
        mag = abs(c)
        if e == 0:
            body = str(mag)
        elif e == 1 and mag == 1:
            body = "t"
        elif mag == 1:
            body = f"t^{e}"
        else:
            body = f"{mag}*t^{e}"
        if idx == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


_TERM_RE = re.compile(r"^(?:(\d+)\*t\^(-?\d+)|t\^(-?\d+)|(\d+)|(t))$")


def parse_laurent(s: str) -> LaurentInt:
    """Inverse of :func:`format_laurent` (whitespace-insensitive)."""
    s = s.replace(" ", "")
    if not s:
        raise ValueError("empty Laurent polynomial")
    # split at +/- that are not exponent signs
    pieces = re.split(r"(?<!\^)(?=[+-])", s)
    acc: Dict[int, int] = {}
    for piece in pieces:
        if not piece:
            continue
        sign = 1
        if piece[0] in "+-":
            sign = -1 if piece[0] == "-" else 1
            piece = piece[1:]
        m = _TERM_RE.match(piece)
        if not m:
            raise ValueError(f"bad Laurent term {piece!r} in {s!r}")
        if m.group(1) is not None:
            c, e = int(m.group(1)), int(m.group(2))
        elif m.group(3) is not None:
            c, e = 1, int(m.group(3))
        elif m.group(4) is not None:
            c, e = int(m.group(4)), 0
        else:
            c, e = 1, 1
        acc[e] = acc.get(e, 0) + sign * c
    return LaurentInt(acc)


class ModP:
    """Residue class modulo a prime."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise ValueError("mixed moduli")
            return other.v
        if isinstance(other, int):
            return other
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ModP(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ModP(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ModP(o - self.v, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ModP(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return ModP(-self.v, self.p)

    def __pow__(self, k: int):
        return ModP(pow(self.v, k, self.p), self.p)

    def __truediv__(self, other):
        o = self._lift(other)
        return ModP(self.v * pow(o, -1, self.p), self.p)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return (self.v - o) % self.p == 0

    def __hash__(self):
        return hash((self.v, self.p))

    def __repr__(self):
        return f"ModP({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


Scalar = Union[LaurentInt, Fraction, ModP]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p ** 0.5) + 1))


@dataclass(frozen=True)
class RingSpec:
    """Coefficient ring selector: ``generic``, ``Q:<q>`` or ``F<p>:<q>``."""

    kind: str = "generic"
    q_value: Fraction | int | None = None
    p: int | None = None

    def __post_init__(self):
        if self.kind == "generic":
            return
        if self.kind == "rational":
            if self.q_value is None or Fraction(self.q_value) == 0:
                raise ValueError("q must be a nonzero rational")
            object.__setattr__(self, "q_value", Fraction(self.q_value))
        elif self.kind == "prime":
            if self.p is None or not _is_prime(self.p):
                raise ValueError(f"{self.p} is not prime")
            if self.q_value is None or int(self.q_value) % self.p == 0:
                raise ValueError("q must be a unit mod p")
            object.__setattr__(self, "q_value", int(self.q_value) % self.p)
        else:
            raise ValueError(f"unknown ring kind {self.kind!r}")

    @classmethod
    def generic(cls) -> "RingSpec":
        return cls("generic")

    @classmethod
    def rationals_at(cls, q) -> "RingSpec":
        return cls("rational", Fraction(q))

    @classmethod
    def prime_field_at(cls, p: int, q: int) -> "RingSpec":
        return cls("prime", q, p)

    @classmethod
    def parse(cls, s: str) -> "RingSpec":
        s = s.strip()
        if s.lower() == "generic":
            return cls.generic()
        m = re.fullmatch(r"Q:(-?\d+(?:/\d+)?)", s)
        if m:
            return cls.rationals_at(Fraction(m.group(1)))
        m = re.fullmatch(r"F(\d+):(-?\d+)", s)
        if m:
            return cls.prime_field_at(int(m.group(1)), int(m.group(2)))
        raise ValueError(f"bad ring selector {s!r}; expected generic | Q:<rational> | F<p>:<q>")

    def __str__(self):
        if self.kind == "generic":
            return "generic"
        if self.kind == "rational":
            return f"Q:{self.q_value}"
        return f"F{self.p}:{self.q_value}"

    @property
    def is_generic(self) -> bool:
        return self.kind == "generic"

    def from_int(self, c: int) -> Scalar:
        if self.kind == "generic":
            return LaurentInt.const(c)
        if self.kind == "rational":
            return Fraction(c)
        return ModP(c, self.p)

    @property
    def zero(self) -> Scalar:
        return self.from_int(0)

    @property
    def one(self) -> Scalar:
        return self.from_int(1)

    @property
    def q(self) -> Scalar:
        if self.kind == "generic":
            return LaurentInt.t()
        if self.kind == "rational":
            return self.q_value
        return ModP(self.q_value, self.p)

    def q_pow(self, k: int) -> Scalar:
        if self.kind == "generic":
            return LaurentInt.monomial(k)
        return self.q ** k

    def from_laurent(self, x: LaurentInt) -> Scalar:
        if self.kind == "generic":
            return x
        return specialize(x, self)

    def format(self, x: Scalar) -> str:
        if isinstance(x, LaurentInt):
            return format_laurent(x)
        return str(x)

    def parse_scalar(self, s: str) -> Scalar:
        if self.kind == "generic":
            return parse_laurent(s)
        if self.kind == "rational":
            return Fraction(s)
        return ModP(int(s), self.p)


GENERIC = RingSpec.generic()

#: rings covered by the verification sweep
VERIFICATION_RINGS = (
    GENERIC,
    RingSpec.rationals_at(1),
    RingSpec.rationals_at(-1),
    RingSpec.rationals_at(2),
    RingSpec.prime_field_at(5, 2),
)


def specialize(x: LaurentInt, spec: RingSpec) -> Scalar:
    """Image of ``x`` under ``t -> q`` in the ring named by ``spec``."""
    if spec.is_generic:
        raise ValueError("specialize needs a non-generic ring")
    if spec.kind == "rational":
        q = spec.q_value
        total = Fraction(0)
        for e, c in x.items():
            total += c * q ** e
        return total
    p = spec.p
    v = 0
    for e, c in x.items():
        v += c * pow(spec.q_value, e, p)
    return ModP(v, p)


def laurent_arith(a: LaurentInt, b: LaurentInt, op: str) -> LaurentInt:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


@dataclass(frozen=True)
class SparseMatrix:
    """``rows x cols`` matrix with entries ``{(i, j): value}``; zeros are never stored."""

    rows: int
    cols: int
    entries: Mapping[Tuple[int, int], Scalar]

    def __post_init__(self):
        clean = {}
        for (i, j), v in self.entries.items():
            if not (0 <= i < self.rows and 0 <= j < self.cols):
                raise IndexError(f"entry {(i, j)} outside {self.rows}x{self.cols}")
            if v:
                clean[(i, j)] = v
        object.__setattr__(self, "entries", clean)

    @classmethod
    def from_dense(cls, rows) -> "SparseMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        return cls(len(rows), ncols, {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r) if v})

    def to_dense(self, zero=0):
        out = [[zero] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def nnz(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def row_dicts(self):
        rows = [dict() for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            rows[i][j] = v
        return rows

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.cols, self.rows, {(j, i): v for (i, j), v in self.entries.items()})

    def map(self, f) -> "SparseMatrix":
        return SparseMatrix(self.rows, self.cols, {k: f(v) for k, v in self.entries.items()})

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        by_row = other.row_dicts()
        acc: Dict[Tuple[int, int], Scalar] = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row[k].items():
                key = (i, j)
                acc[key] = acc[key] + a * b if key in acc else a * b
        return SparseMatrix(self.rows, other.cols, acc)

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        acc = dict(self.entries)
        for k, v in other.entries.items():
            acc[k] = acc[k] - v if k in acc else -v
        return SparseMatrix(self.rows, self.cols, acc)


def _strip(row: Dict[int, LaurentInt]) -> Dict[int, LaurentInt]:
    # divide out integer content and the lowest power of t
    g, e = 0, None
    for v in row.values():
        cg, ce = v.content()
        g = math.gcd(g, cg)
        e = ce if e is None else min(e, ce)
    if (g == 1 and e == 0) or not row:
        return row
    return {j: v.shift_div(g, e) for j, v in row.items()}


def _rank_fraction_free(rows) -> int:
    pivots: Dict[int, Tuple[int, Dict[int, LaurentInt]]] = {}  # col -> (birth, row)
    birth = 0
    for row in rows:
        if not row:
            continue
        row = dict(row)
        heap = [(pivots[c][0], c) for c in row if c in pivots]
        heapq.heapify(heap)
        seen = set()
        while heap:
            _, c = heapq.heappop(heap)
            if c in seen or c not in row:
                continue
            seen.add(c)
            _, prow = pivots[c]
            p, a = prow[c], row[c]
            if p.is_unit():
                f = a * p.unit_inverse()
                for j, v in prow.items():
                    w = row.get(j)
                    w = -(f * v) if w is None else w - f * v
                    if w:
                        row[j] = w
                    else:
                        row.pop(j, None)
                    if j != c and j in pivots and j not in seen and j in row:
                        heapq.heappush(heap, (pivots[j][0], j))
            else:
                new = {}
                for j, v in row.items():
                    new[j] = v * p
                for j, v in prow.items():
                    w = new.get(j)
                    w = -(a * v) if w is None else w - a * v
                    if w:
                        new[j] = w
                    else:
                        new.pop(j, None)
                row = _strip(new)
                for j in row:
                    if j in pivots and j not in seen:
                        heapq.heappush(heap, (pivots[j][0], j))
            if not row:
                break
        if row:
            c = min(row, key=lambda j: (row[j].size(), j))
            pivots[c] = (birth, _strip(row))
            birth += 1
    return len(pivots)


def _rank_laurent(rows) -> int:
    """Eliminate with unit pivots of least Markowitz cost; fraction-free on what is left."""
    rows = {i: dict(r) for i, r in enumerate(rows) if r}
    cols: Dict[int, set] = {}
    for i, r in rows.items():
        for j in r:
            cols.setdefault(j, set()).add(i)
    found = 0
    while rows:
        best = None
        for i, r in rows.items():
            for j, v in r.items():
                if v.is_unit():
                    cost = (len(r) - 1) * (len(cols[j]) - 1)
                    if best is None or cost < best[0]:
                        best = (cost, i, j)
                        if cost == 0:
                            break
            if best is not None and best[0] == 0:
                break
        if best is None:
            return found + _rank_fraction_free([rows[i] for i in sorted(rows)])
        _, p, c = best
        prow = rows.pop(p)
        inv = prow[c].unit_inverse()
        for j in prow:
            cols[j].discard(p)
        for i in list(cols[c]):
            r = rows[i]
            f = r[c] * inv
            for j, v in prow.items():
                w = r.get(j)
                w = -(f * v) if w is None else w - f * v
                if w:
                    if j not in r:
                        cols[j].add(i)
                    r[j] = w
                else:
                    r.pop(j, None)
                    cols[j].discard(i)
            if not r:
                del rows[i]
        del cols[c]
        found += 1
    return found


def _rank_field(rows, inv) -> int:
    pivots: Dict[int, Tuple[int, dict]] = {}
    birth = 0
    for row in rows:
        if not row:
            continue
        row = dict(row)
        heap = [(pivots[c][0], c) for c in row if c in pivots]
        heapq.heapify(heap)
        seen = set()
        while heap and row:
            _, c = heapq.heappop(heap)
            if c in seen or c not in row:
                continue
            seen.add(c)
            _, prow = pivots[c]
            f = row[c]
            for j, v in prow.items():
                w = row.get(j)
                w = -(f * v) if w is None else w - f * v
                if w:
                    row[j] = w
                else:
                    row.pop(j, None)
                if j != c and j in pivots and j not in seen and j in row:
                    heapq.heappush(heap, (pivots[j][0], j))
        if row:
            c = min(row)
            s = inv(row[c])
            pivots[c] = (birth, {j: v * s for j, v in row.items()})
            birth += 1
    return len(pivots)


def rank(m: SparseMatrix, spec: RingSpec = GENERIC) -> int:
    """Rank over the fraction field of the ring named by ``spec``."""
    if m.is_zero():
        return 0
    if m.rows > m.cols:
        m = m.transpose()
    rows = m.row_dicts()
    if spec.is_generic:
        return _rank_laurent([{j: LaurentInt._coerce(v) for j, v in r.items()} for r in rows])
    if spec.kind == "rational":
        return _rank_field([{j: Fraction(v) for j, v in r.items()} for r in rows], lambda x: 1 / x)
    p = spec.p
    ints = [{j: (v.v if isinstance(v, ModP) else int(v)) % p for j, v in r.items()} for r in rows]
    ints = [{j: v for j, v in r.items() if v} for r in ints]
    return _rank_field_modp(ints, p)


def _rank_field_modp(rows, p: int) -> int:
    pivots: Dict[int, Tuple[int, dict]] = {}
    birth = 0
    for row in rows:
        if not row:
            continue
        row = dict(row)
        heap = [(pivots[c][0], c) for c in row if c in pivots]
        heapq.heapify(heap)
        seen = set()
        while heap and row:
            _, c = heapq.heappop(heap)
            if c in seen or c not in row:
                continue
            seen.add(c)
            _, prow = pivots[c]
            f = row[c]
            for j, v in prow.items():
                w = (row.get(j, 0) - f * v) % p
                if w:
                    row[j] = w
                else:
                    row.pop(j, None)
                if j != c and j in pivots and j not in seen and j in row:
                    heapq.heappush(heap, (pivots[j][0], j))
        if row:
            c = min(row)
            s = pow(row[c], -1, p)
            pivots[c] = (birth, {j: v * s % p for j, v in row.items()})
            birth += 1
    return len(pivots)
