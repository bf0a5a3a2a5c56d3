"""Bar-type complexes over S(n, r) and H, chain maps between them, and homology ranks.

Every complex is stored as free R-modules with explicit labelled bases and
sparse differentials ``d_k`` of shape ``dim_{k-1} x dim_k``.  A degree-k label
is ``(chain, items)`` where ``chain = (mu1, ..., muk)`` runs over strict
dominance chains above ``lam``; ``items`` holds one basis element per tensor
factor.  On the Schur side those are Y-pairs, on the Hecke side permutations
(a coset representative for the dual-module slot, double coset
representatives for the hom slots).

All bar-type differentials share one shape: ``d_k = sum_t (-1)^t d_kt`` where
``d_kt`` multiplies the factors in slots ``t`` and ``t+1`` and drops ``chain[t]``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Sequence, Tuple

from . import combin as cb
from . import hecke as hk
from .combin import Composition
from .exactalg import GENERIC, RingSpec, Scalar, SparseMatrix, rank, specialize
from .schur import schur_algebra

Label = Tuple[Tuple[Composition, ...], tuple]

EXPORT_FORMAT = "qschur-complex"
EXPORT_VERSION = 1


@dataclass
class ChainComplex:
    ring: RingSpec
    labels: List[List[Label]]
    diffs: Dict[int, SparseMatrix]
    kind: str = ""
    n: int = 0
    r: int = 0
    lam: Composition = ()

    def __post_init__(self):
        for k, m in self.diffs.items():
            if (m.rows, m.cols) != (self.dim(k - 1), self.dim(k)):
                raise ValueError(
                    f"d_{k} has shape {m.rows}x{m.cols}, expected {self.dim(k - 1)}x{self.dim(k)}"
                )

    @property
    def top(self) -> int:
        return len(self.labels) - 1

    def dim(self, k: int) -> int:
        return len(self.labels[k]) if 0 <= k < len(self.labels) else 0

    def dims(self) -> List[int]:
        return [len(x) for x in self.labels]

    def d(self, k: int) -> SparseMatrix:
        m = self.diffs.get(k)
        if m is None:
            return SparseMatrix(self.dim(k - 1), self.dim(k), {})
        return m

    def d_squared_residuals(self) -> Dict[int, int]:
        """Nonzero entry count of ``d_{k-1} d_k`` for every ``k >= 2``."""
        return {k: (self.d(k - 1) @ self.d(k)).nnz() for k in range(2, self.top + 1)}

    def d_squared_zero(self) -> bool:
        return all(v == 0 for v in self.d_squared_residuals().values())

    def index(self, k: int) -> Dict[Label, int]:
        return {lab: pos for pos, lab in enumerate(self.labels[k])}


@dataclass
class ChainMap:
    """Degree-wise matrices ``source_k -> target_k``."""

    source: ChainComplex
    target: ChainComplex
    maps: Dict[int, SparseMatrix]
    inverses: Dict[int, SparseMatrix] = field(default_factory=dict)

    def square_residuals(self) -> Dict[int, int]:
        """Nonzero entry count of ``tau_{k-1} d_k - d_k tau_k`` for each ``k >= 1``."""
        out = {}
        for k in range(1, self.source.top + 1):
            lhs = self.maps[k - 1] @ self.source.d(k)
            rhs = self.target.d(k) @ self.maps[k]
            out[k] = (lhs - rhs).nnz()
        return out

    def commutes(self) -> bool:
        return all(v == 0 for v in self.square_residuals().values())

    def invertible(self) -> bool:
        if set(self.inverses) != set(self.maps):
            return False
        for k, m in self.maps.items():
            inv = self.inverses[k]
            if not (_is_identity(m @ inv) and _is_identity(inv @ m)):
                return False
        return True


def _is_identity(m: SparseMatrix) -> bool:
    if m.rows != m.cols or m.nnz() != m.rows:
        return False
    return all(i == j and v == 1 for (i, j), v in m.entries.items())


# generic bar-type assembly --------------------------------------------------------

def _check_weight(lam, n: int, r: int) -> Composition:
    lam = tuple(lam)
    if len(lam) > n or any(x < 0 for x in lam) or sum(lam) != r:
        raise ValueError(f"{lam} is not in Lambda({n},{r})")
    return lam + (0,) * (n - len(lam))


def _bar_labels(lam: Composition, slots: Callable[[Tuple[Composition, ...]], List[Sequence]]):
    labels: List[List[Label]] = []
    k = 0
    while True:
        chs = cb.chains(lam, k)
        if not chs:
            break
        deg = []
        for ch in chs:
            for combo in itertools.product(*slots(ch)):
                deg.append((ch, tuple(combo)))
        labels.append(deg)
        k += 1
    return labels


def _bar_diffs(labels, merge, ring: RingSpec) -> Dict[int, SparseMatrix]:
    """``merge(chain, t, a, b)`` returns ``[(item, coeff)]`` for the product of slots t, t+1."""
    diffs = {}
    for k in range(1, len(labels)):
        target = {lab: pos for pos, lab in enumerate(labels[k - 1])}
        entries: Dict[Tuple[int, int], Scalar] = {}
        for col, (ch, items) in enumerate(labels[k]):
            for t in range(k):
                new_ch = ch[:t] + ch[t + 1:]
                for item, c in merge(ch, t, items[t], items[t + 1]):
                    lab = (new_ch, items[:t] + (item,) + items[t + 2:])
                    row = target.get(lab)
                    if row is None:
                        raise ValueError(f"d_{k} leaves the complex: {lab}")
                    if t % 2:
                        c = -c
                    hk._acc(entries, (row, col), c)
        diffs[k] = SparseMatrix(len(labels[k - 1]), len(labels[k]), entries)
    return diffs


def _schur_bar(n, r, lam, ring, kind, first_slot) -> ChainComplex:
    S = schur_algebra(n, r, ring)

    def slots(ch):
        mus = ch + (lam,)
        return [first_slot(S, mus[0])] + [S.J_basis(mus[t], mus[t + 1]) for t in range(len(ch))]

    def merge(ch, t, a, b):
        return S.mul_basis(a, b)

    labels = _bar_labels(lam, slots)
    return ChainComplex(ring, labels, _bar_diffs(labels, merge, ring), kind, n, r, lam)


def build_bar_plus(n: int, r: int, lam, ring: RingSpec = GENERIC) -> ChainComplex:
    """The normalised bar resolution of R_lam over S^+."""
    lam = _check_weight(lam, n, r)
    return _schur_bar(n, r, lam, ring, "bar_plus", lambda S, mu: S.left_ideal_basis(mu, plus=True))


def build_weyl(n: int, r: int, lam, ring: RingSpec = GENERIC) -> ChainComplex:
    """``S (x)_{S^+}`` applied to the bar resolution; H_0 is the Weyl module."""
    lam = _check_weight(lam, n, r)
    return _schur_bar(n, r, lam, ring, "weyl", lambda S, mu: S.left_ideal_basis(mu))


def apply_F(c: ChainComplex) -> ChainComplex:
    """Cut a complex from :func:`build_weyl` down to the xi_omega block."""
    if c.kind != "weyl":
        raise ValueError("apply_F expects a complex from build_weyl")
    if c.n < c.r:
        raise ValueError(f"the Schur functor needs n >= r (n={c.n}, r={c.r})")
    return _schur_bar(c.n, c.r, c.lam, c.ring, "schur_functor", lambda S, mu: S.schur_functor_basis(mu))


def _check_partition(lam, n: int, r: int) -> Composition:
    lam = _check_weight(lam, n, r)
    if not cb.is_partition(lam):
        raise ValueError(f"{lam} is not a partition")
    return lam


def _ascending_reps(n: int, lam: Composition, mu: Composition) -> Tuple:
    """``D^wedge_{lam,mu}``, listed in the order of the matching Y-pairs."""
    pairs = [p for p in cb.y_pairs_with(lam, mu) if cb.leq(*p)]
    return tuple(cb.y_to_dcoset(p, n) for p in pairs)


def build_bm(n: int, r: int, lam, ring: RingSpec = GENERIC) -> ChainComplex:
    """The dual-permutation-module complex C~^lam over H, degrees >= 0."""
    lam = _check_partition(lam, n, r)
    H = hk.hecke_algebra(r, ring)

    def slots(ch):
        mus = ch + (lam,)
        return [cb.dist_reps(mus[0])] + [
            _ascending_reps(n, mus[t], mus[t + 1]) for t in range(len(ch))
        ]

    memo: Dict = {}

    def merge(ch, t, a, b):
        # slot 0 is a form on M^{mus[0]}; slot s >= 1 is a hom M^{mus[s]} -> M^{mus[s-1]}
        mus = ch + (lam,)
        key = (mus[max(t - 1, 0)], mus[t], mus[t + 1], t == 0, a, b)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if t == 0:
            eps = hk.LinFunc(mus[0], {a: ring.one})
            phi = hk.HomElem(mus[0], mus[1], {b: ring.one})
            out = tuple(hk.compose_func(H, eps, phi).coords.items())
        else:
            f = hk.HomElem(mus[t - 1], mus[t], {a: ring.one})
            g = hk.HomElem(mus[t], mus[t + 1], {b: ring.one})
            out = tuple(hk.phi_compose(H, f, g).coords.items())
        memo[key] = out
        return out

    labels = _bar_labels(lam, slots)
    return ChainComplex(ring, labels, _bar_diffs(labels, merge, ring), "bm", n, r, lam)


# the chain isomorphism F(B) -> C~ ------------------------------------------------

def tau_iso(fb: ChainComplex, bm: ChainComplex) -> ChainMap:
    """``frak_F`` on the first slot and the identity (via the pair <-> coset bijection) elsewhere."""
    if fb.kind != "schur_functor" or bm.kind != "bm":
        raise ValueError("tau_iso expects apply_F(build_weyl(...)) and build_bm(...)")
    if (fb.n, fb.r, fb.lam, fb.ring) != (bm.n, bm.r, bm.lam, bm.ring):
        raise ValueError("complexes built for different data")
    if fb.dims() != bm.dims():
        raise ValueError(f"shape mismatch: {fb.dims()} vs {bm.dims()}")
    n, r, ring = fb.n, fb.r, fb.ring
    H = hk.hecke_algebra(r, ring)
    omega = hk.omega_of(r, n)
    maps, inverses = {}, {}
    for k in range(fb.top + 1):
        rows, cols = bm.index(k), fb.index(k)
        fwd: Dict[Tuple[int, int], Scalar] = {}
        back: Dict[Tuple[int, int], Scalar] = {}
        for col, (ch, items) in enumerate(fb.labels[k]):
            mu1 = (ch + (fb.lam,))[0]
            rest = tuple(cb.y_to_dcoset(p, n) for p in items[1:])
            psi = hk.HomElem(omega, mu1, {cb.y_to_dcoset(items[0], n): ring.one})
            for e, c in hk.frak_F(H, psi).coords.items():
                fwd[(rows[(ch, (e,) + rest)], col)] = c
        for row, (ch, items) in enumerate(bm.labels[k]):
            mu1 = (ch + (bm.lam,))[0]
            back_pairs = cb.dcoset_to_y(omega, mu1)
            rest = tuple(cb.dcoset_to_y(a, b)[d] for a, b, d in
                         zip(ch + (bm.lam,), (ch + (bm.lam,))[1:], items[1:]))
            psi = hk.hat(H, hk.LinFunc(mu1, {items[0]: ring.one}), omega)
            for d, c in psi.coords.items():
                back[(cols[(ch, (back_pairs[d],) + rest)], row)] = c
        maps[k] = SparseMatrix(bm.dim(k), fb.dim(k), fwd)
        inverses[k] = SparseMatrix(fb.dim(k), bm.dim(k), back)
    return ChainMap(fb, bm, maps, inverses)


# homology -------------------------------------------------------------------------

def homology_ranks(c: ChainComplex) -> List[int]:
    """Betti numbers over the fraction field of the coefficient ring."""
    ranks = {k: rank(c.d(k), c.ring) for k in range(1, c.top + 1)}
    return [c.dim(k) - ranks.get(k, 0) - ranks.get(k + 1, 0) for k in range(c.top + 1)]


@dataclass
class Report:
    passed: bool
    dims: List[int]
    betti: List[int]
    d_squared_zero: bool
    status: str = ""
    notes: List[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "passed": self.passed,
            "status": self.status,
            "dims": list(self.dims),
            "betti": list(self.betti),
            "d_squared_zero": self.d_squared_zero,
            "notes": list(self.notes),
        }


def verify_exact(c: ChainComplex, tolerate_H0: bool = True) -> Report:
    dsq = c.d_squared_zero()
    if not dsq:
        return Report(False, c.dims(), [], False, "FAIL", ["d^2 != 0"])
    betti = homology_ranks(c)
    ok = all(b == 0 for b in betti[1:]) and (tolerate_H0 or not betti or betti[0] == 0)
    return Report(ok, c.dims(), betti, True, "EXACT" if ok else "NOT_EXACT")


def tor_report(n: int, r: int, lam, ring: RingSpec = GENERIC) -> Report:
    """Tor_i^{S^+}(S, R_lam) for i >= 1, read off the induced bar complex."""
    lam = _check_weight(lam, n, r)
    rep = verify_exact(build_weyl(n, r, lam, ring))
    tor = rep.betti[1:]
    if cb.is_partition(lam):
        status = "VANISHES" if rep.d_squared_zero and all(x == 0 for x in tor) else "NONVANISHING"
        passed = status == "VANISHES"
    else:
        status, passed = "INFORMATIONAL", True
    return Report(passed, rep.dims, rep.betti, rep.d_squared_zero, status,
                  [f"Tor_{i} rank {x}" for i, x in enumerate(tor, start=1)])


# base change and export -------------------------------------------------------------

def specialize_complex(c: ChainComplex, ring: RingSpec) -> ChainComplex:
    """Entrywise image under ``t -> q`` of a complex built over the generic ring."""
    if not c.ring.is_generic:
        raise ValueError("only generic complexes can be specialised")
    diffs = {k: m.map(lambda x: specialize(x, ring)) for k, m in c.diffs.items()}
    return ChainComplex(ring, [list(x) for x in c.labels], diffs, c.kind, c.n, c.r, c.lam)


def _label_json(kind: str, lab: Label):
    ch, items = lab
    if kind == "bm":
        entries = [list(p) for p in items]
    else:
        entries = [[list(i), list(j)] for i, j in items]
    return {"chain": [list(mu) for mu in ch], "entries": entries}


def _label_from_json(kind: str, obj) -> Label:
    ch = tuple(tuple(mu) for mu in obj["chain"])
    if kind == "bm":
        items = tuple(tuple(p) for p in obj["entries"])
    else:
        items = tuple((tuple(i), tuple(j)) for i, j in obj["entries"])
    return ch, items


def to_json(c: ChainComplex) -> dict:
    return {
        "format": EXPORT_FORMAT,
        "version": EXPORT_VERSION,
        "kind": c.kind,
        "n": c.n,
        "r": c.r,
        "lambda": list(c.lam),
        "ring": str(c.ring),
        "degrees": [
            {"degree": k, "labels": [_label_json(c.kind, lab) for lab in labs]}
            for k, labs in enumerate(c.labels)
        ],
        "differentials": [
            {
                "degree": k,
                "rows": m.rows,
                "cols": m.cols,
                "entries": [[i, j, c.ring.format(v)] for (i, j), v in sorted(m.entries.items())],
            }
            for k, m in sorted(c.diffs.items())
        ],
    }


def from_json(obj: dict) -> ChainComplex:
    if obj.get("format") != EXPORT_FORMAT or obj.get("version") != EXPORT_VERSION:
        raise ValueError("not a complex export of a supported version")
    ring = RingSpec.parse(obj["ring"])
    kind = obj["kind"]
    labels = [[_label_from_json(kind, lab) for lab in d["labels"]] for d in obj["degrees"]]
    diffs = {}
    for d in obj["differentials"]:
        entries = {(i, j): ring.parse_scalar(s) for i, j, s in d["entries"]}
        diffs[d["degree"]] = SparseMatrix(d["rows"], d["cols"], entries)
    return ChainComplex(ring, labels, diffs, kind, obj["n"], obj["r"], tuple(obj["lambda"]))


def dumps(c: ChainComplex) -> str:
    return json.dumps(to_json(c), sort_keys=True, separators=(",", ":"))


def loads(s: str) -> ChainComplex:
    return from_json(json.loads(s))
