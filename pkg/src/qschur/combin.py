"""Index combinatorics: compositions, multi-indices, Y(n, r), cosets, tableaux.

Conventions used throughout the package:

* permutations are tuples of 1-based images (one-line notation) and compose
  as functions, ``(sigma * pi)(a) = sigma(pi(a))``;
* permutations act on multi-indices from the right, ``(i pi)_a = i_{pi(a)}``,
  which is a right action for the composition above;
* compositions are listed in reverse lexicographic order, multi-indices in
  lexicographic order, permutations by length and then lexicographically.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

Composition = Tuple[int, ...]
MultiIndex = Tuple[int, ...]
Perm = Tuple[int, ...]
YPair = Tuple[MultiIndex, MultiIndex]


# compositions and dominance -------------------------------------------------

@lru_cache(maxsize=None)
def compositions(n: int, r: int) -> Tuple[Composition, ...]:
    """All of Lambda(n, r) in reverse lexicographic order."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return ((r,),)
    out = []
    for first in range(r, -1, -1):
        for rest in compositions(n - 1, r - first):
            out.append((first,) + rest)
    return tuple(out)


def partitions(r: int, n: int | None = None) -> List[Composition]:
    """Partitions of ``r`` padded with zeros to length ``n`` (default ``r``)."""
    n = r if n is None else n
    return [lam for lam in compositions(n, r) if is_partition(lam)]


def is_partition(lam: Sequence[int]) -> bool:
    return all(lam[a] >= lam[a + 1] for a in range(len(lam) - 1))


def degree(lam: Sequence[int]) -> int:
    return sum(lam)


def length(lam: Sequence[int]) -> int:
    return sum(1 for x in lam if x)


def dominates(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """``mu`` dominates ``lam`` (reflexive)."""
    if len(mu) != len(lam) or sum(mu) != sum(lam):
        raise ValueError(f"cannot compare {tuple(mu)} and {tuple(lam)}")
    s = t = 0
    for a, b in zip(mu, lam):
        s += a
        t += b
        if s < t:
            return False
    return True


def strictly_dominates(mu, lam) -> bool:
    return tuple(mu) != tuple(lam) and dominates(mu, lam)


# multi-indices ----------------------------------------------------------------

def content(i: Sequence[int], n: int) -> Composition:
    c = [0] * n
    for x in i:
        c[x - 1] += 1
    return tuple(c)


def l_of(lam: Sequence[int]) -> MultiIndex:
    """The weakly increasing multi-index ``(1^lam_1, ..., n^lam_n)``."""
    out: List[int] = []
    for a, m in enumerate(lam, start=1):
        out.extend([a] * m)
    return tuple(out)


def leq(i: Sequence[int], j: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(i, j))


def lt(i: Sequence[int], j: Sequence[int]) -> bool:
    return tuple(i) != tuple(j) and leq(i, j)


def act(i: Sequence[int], pi: Perm) -> MultiIndex:
    return tuple(i[pi[a] - 1] for a in range(len(pi)))


def is_y_pair(i: Sequence[int], j: Sequence[int]) -> bool:
    for a in range(len(i) - 1):
        if i[a] > i[a + 1]:
            return False
        if i[a] == i[a + 1] and j[a] > j[a + 1]:
            return False
    return True


def _multisets(values: Sequence[int], size: int):
    return itertools.combinations_with_replacement(values, size)


@lru_cache(maxsize=None)
def y_pairs(n: int, r: int) -> Tuple[YPair, ...]:
    """Y(n, r) in lexicographic order of ``(i, j)``."""
    out = []
    for i in _multisets(range(1, n + 1), r):
        blocks = [len(list(g)) for _, g in itertools.groupby(i)]
        parts = [list(_multisets(range(1, n + 1), b)) for b in blocks]
        for choice in itertools.product(*parts):
            j = tuple(x for block in choice for x in block)
            out.append((tuple(i), j))
    out.sort()
    return tuple(out)


def y_pairs_with(lam: Composition, mu: Composition) -> List[YPair]:
    """``{(l(lam), j) in Y : content(j) = mu}`` in lexicographic order."""
    n = len(lam)
    i = l_of(lam)
    return [p for p in y_pairs(n, sum(lam)) if p[0] == i and content(p[1], n) == tuple(mu)]


# permutations -------------------------------------------------------------

def identity(r: int) -> Perm:
    return tuple(range(1, r + 1))


def compose(sigma: Perm, pi: Perm) -> Perm:
    return tuple(sigma[pi[a] - 1] for a in range(len(pi)))


def inverse(pi: Perm) -> Perm:
    out = [0] * len(pi)
    for a, b in enumerate(pi, start=1):
        out[b - 1] = a
    return tuple(out)


def lng(pi: Perm) -> int:
    r = len(pi)
    return sum(1 for a in range(r) for b in range(a + 1, r) if pi[a] > pi[b])


def simple(k: int, r: int) -> Perm:
    """The adjacent transposition ``s_k = (k, k+1)``."""
    p = list(range(1, r + 1))
    p[k - 1], p[k] = p[k], p[k - 1]
    return tuple(p)


@lru_cache(maxsize=None)
def sym_group(r: int) -> Tuple[Perm, ...]:
    """All of Sigma_r, sorted by length then lexicographically."""
    return tuple(sorted(itertools.permutations(range(1, r + 1)), key=lambda p: (lng(p), p)))


@lru_cache(maxsize=None)
def reduced_word(pi: Perm) -> Tuple[int, ...]:
    """Indices ``k_1..k_m`` with ``pi = s_{k_1} ... s_{k_m}`` and ``m = lng(pi)``."""
    r = len(pi)
    for k in range(1, r):
        s = simple(k, r)
        rest = compose(s, pi)
        if lng(rest) < lng(pi):
            return (k,) + reduced_word(rest)
    return ()


def blocks(lam: Sequence[int]) -> List[range]:
    out, start = [], 1
    for m in lam:
        out.append(range(start, start + m))
        start += m
    return out


@lru_cache(maxsize=None)
def young_subgroup(lam: Composition) -> Tuple[Perm, ...]:
    r = sum(lam)
    pieces = [list(itertools.permutations(b)) for b in blocks(lam)]
    out = []
    for choice in itertools.product(*pieces):
        out.append(tuple(x for part in choice for x in part))
    assert all(len(p) == r for p in out)
    return tuple(sorted(out, key=lambda p: (lng(p), p)))


@lru_cache(maxsize=None)
def _coset_table(lam: Composition) -> Dict[MultiIndex, Perm]:
    # right coset Sigma_lam sigma is labelled by l(lam) sigma
    li = l_of(lam)
    table: Dict[MultiIndex, Perm] = {}
    for pi in sym_group(sum(lam)):
        key = act(li, pi)
        if key not in table:
            table[key] = pi
    return table


def dist_reps(lam: Composition) -> Tuple[Perm, ...]:
    """D_lam: minimal-length members of the right cosets of Sigma_lam."""
    return tuple(sorted(_coset_table(tuple(lam)).values(), key=lambda p: (lng(p), p)))


def coset_rep(lam: Composition, sigma: Perm) -> Perm:
    """The distinguished member of ``Sigma_lam sigma``."""
    return _coset_table(tuple(lam))[act(l_of(lam), sigma)]


def dcoset_key(lam: Composition, mu: Composition, pi: Perm) -> Tuple[Tuple[int, ...], ...]:
    """Complete invariant of ``Sigma_lam pi Sigma_mu``: block incidence counts."""
    lam_block = {}
    for c, b in enumerate(blocks(lam)):
        for x in b:
            lam_block[x] = c
    rows = []
    for b in blocks(mu):
        counts = [0] * len(lam)
        for a in b:
            counts[lam_block[pi[a - 1]]] += 1
        rows.append(tuple(counts))
    return tuple(rows)


@lru_cache(maxsize=None)
def _dcoset_table(lam: Composition, mu: Composition):
    reps: Dict[tuple, Perm] = {}
    members: Dict[tuple, List[Perm]] = {}
    for pi in sym_group(sum(lam)):
        key = dcoset_key(lam, mu, pi)
        if key not in reps:
            reps[key] = pi
            members[key] = []
        members[key].append(pi)
    return reps, {k: tuple(v) for k, v in members.items()}


def double_reps(lam: Composition, mu: Composition) -> Tuple[Perm, ...]:
    """D_{lam,mu}: minimal-length representatives of the Sigma_lam-Sigma_mu double cosets."""
    if sum(lam) != sum(mu):
        raise ValueError("degree mismatch")
    reps, _ = _dcoset_table(tuple(lam), tuple(mu))
    return tuple(sorted(reps.values(), key=lambda p: (lng(p), p)))


def double_coset(lam: Composition, mu: Composition, pi: Perm) -> Tuple[Perm, ...]:
    _, members = _dcoset_table(tuple(lam), tuple(mu))
    return members[dcoset_key(lam, mu, pi)]


def double_rep(lam: Composition, mu: Composition, pi: Perm) -> Perm:
    reps, _ = _dcoset_table(tuple(lam), tuple(mu))
    return reps[dcoset_key(lam, mu, pi)]


def y_to_dcoset(p: YPair, n: int) -> Perm:
    """The bijection (l(lam), j) -> D_{lam,mu}, where lam = content(i), mu = content(j)."""
    i, j = p
    if not is_y_pair(i, j):
        raise ValueError(f"{p} is not in Y(n, r)")
    return _y_to_dcoset(content(i, n), content(j, n), tuple(j), len(i))


@lru_cache(maxsize=None)
def _y_to_dcoset(lam: Composition, mu: Composition, j: MultiIndex, r: int) -> Perm:
    # pi with l(mu) pi^{-1} = j: pi^{-1} lies in the right coset of Sigma_mu labelled j,
    # whose minimal member is the D_mu element; its inverse is the D_mu^{-1} element
    d_bar = inverse(_coset_table(mu)[j])
    return double_rep(lam, mu, d_bar)


@lru_cache(maxsize=None)
def dcoset_to_y(lam: Composition, mu: Composition) -> Dict[Perm, YPair]:
    """Inverse of :func:`y_to_dcoset` restricted to ``(lam, mu)``."""
    out = {}
    for p in y_pairs_with(lam, mu):
        d = _y_to_dcoset(tuple(lam), tuple(mu), p[1], sum(lam))
        if d in out:
            raise AssertionError(f"Y-pair to double coset map not injective at {p}")
        out[d] = p
    return out


# tableaux ---------------------------------------------------------------------

@dataclass(frozen=True)
class Tableau:
    shape: Composition
    rows: Tuple[Tuple[int, ...], ...]

    def is_row_semistandard(self) -> bool:
        return all(all(row[k] <= row[k + 1] for k in range(len(row) - 1)) for row in self.rows)

    def is_ascending(self) -> bool:
        return all(all(x >= a for x in row) for a, row in enumerate(self.rows, start=1))


def tableau_of(lam: Composition, j: Sequence[int]) -> Tableau:
    if len(j) != sum(lam):
        raise ValueError(f"multi-index of length {len(j)} does not fill shape {tuple(lam)}")
    rows = tuple(tuple(j[a - 1] for a in b) for b in blocks(lam))
    return Tableau(tuple(lam), rows)


def row_semistandard_tableaux(lam: Composition, mu: Composition) -> List[Tableau]:
    """Brute force: all row-semistandard lam-tableaux of content mu."""
    n = len(mu)
    r = sum(lam)
    out = set()
    for j in set(itertools.permutations(l_of(mu))):
        tab = tableau_of(lam, j)
        if tab.is_row_semistandard():
            out.add(tab)
    assert all(sum(len(row) for row in t.rows) == r for t in out)
    return sorted(out, key=lambda t: t.rows)


# dominance chains and Omega^+ ---------------------------------------------------

@lru_cache(maxsize=None)
def chains(lam: Composition, k: int) -> Tuple[Tuple[Composition, ...], ...]:
    """All ``(mu1, ..., muk)`` with ``mu1 > ... > muk > lam`` strictly in dominance."""
    lam = tuple(lam)
    if k == 0:
        return ((),)
    above = [mu for mu in compositions(len(lam), sum(lam)) if strictly_dominates(mu, lam)]
    out = []
    for mu in above:
        for rest in chains(mu, k - 1):
            out.append(rest + (mu,))
    return tuple(out)


def omega_plus(lam: Composition, mu: Composition, k: int) -> List[Tuple[YPair, ...]]:
    """Sequences of Y-pairs ``i1 < j1 ~ i2 < ... < jk`` with ``i1 in mu`` and ``jk in lam``."""
    n, r = len(lam), sum(lam)
    strict = [p for p in y_pairs(n, r) if lt(p[0], p[1])]
    by_source: Dict[Composition, List[YPair]] = {}
    for p in strict:
        by_source.setdefault(content(p[0], n), []).append(p)

    out = []

    def extend(prefix, src, left):
        if left == 0:
            if src == tuple(lam):
                out.append(tuple(prefix))
            return
        for p in by_source.get(src, []):
            extend(prefix + [p], content(p[1], n), left - 1)

    if k == 0:
        return [()] if tuple(mu) == tuple(lam) else []
    extend([], tuple(mu), k)
    return out


# b(lambda) ----------------------------------------------------------------------

@lru_cache(maxsize=None)
def b_of(lam: Composition) -> int:
    lam = tuple(lam)
    n = len(lam)
    diffs = [lam[j] - lam[j + 1] for j in range(n - 1)]
    if all(d >= 0 for d in diffs) or any(d == -1 for d in diffs):
        return 0
    best = None
    for j, d in enumerate(diffs):
        if d <= -2:
            m = -d
            vals = []
            for t in range(1, m):
                nu = list(lam)
                nu[j] += t
                nu[j + 1] -= t
                vals.append(b_of(tuple(nu)))
            bj = max(vals) + 1
            best = bj if best is None else min(best, bj)
    return best


# counting oracles ----------------------------------------------------------------

def ssyt_count(lam: Sequence[int], n: int) -> int:
    """Semistandard Young tableaux of shape ``lam`` with entries in 1..n."""
    shape = [x for x in lam if x]
    cells = [(a, b) for a, m in enumerate(shape) for b in range(m)]
    fill: Dict[Tuple[int, int], int] = {}

    def go(idx):
        if idx == len(cells):
            return 1
        a, b = cells[idx]
        lo = 1
        if b > 0:
            lo = max(lo, fill[(a, b - 1)])
        if a > 0:
            lo = max(lo, fill[(a - 1, b)] + 1)
        total = 0
        for v in range(lo, n + 1):
            fill[(a, b)] = v
            total += go(idx + 1)
        fill.pop((a, b), None)
        return total

    return go(0)


def syt_count(lam: Sequence[int]) -> int:
    """Standard Young tableaux of shape ``lam`` (brute-force enumeration)."""
    shape = [x for x in lam if x]
    r = sum(shape)
    count = 0
    # place 1..r one at a time onto an outer corner
    def go(filled, k):
        nonlocal count
        if k > r:
            count += 1
            return
        for a in range(len(shape)):
            if filled[a] < shape[a] and (a == 0 or filled[a - 1] > filled[a]):
                filled[a] += 1
                go(filled, k + 1)
                filled[a] -= 1

    go([0] * len(shape), 1)
    return count


def multinomial(lam: Sequence[int]) -> int:
    out = math.factorial(sum(lam))
    for x in lam:
        out //= math.factorial(x)
    return out
