"""Straightening in the quantum polynomial algebra A(n, r) over Z[t, t^-1].

A word is a tuple of ``(row, col)`` factors.  Normal monomials are the
products ``c_{ij}`` with ``(i, j)`` in Y(n, r): rows weakly increasing, and
columns weakly increasing inside each run of equal rows.  For rows ``i < j``
the rewriting rules are

    c_{jr} c_{is}  ->  t c_{is} c_{jr}                          (r <= s)
    c_{js} c_{ir}  ->  c_{ir} c_{js} + (t - 1) c_{is} c_{jr}      (r < s)

and factors in the same row commute.  Both rules remove one row inversion
from every word they produce, which gives termination.  The sign in the
second rule is the one for which the rewriting is confluent and the
determinant ``c11 c22 - c12 c21`` (n = 2) satisfies ``c_ij d = t^(i-j) d c_ij``;
with ``-(t - 1)`` neither holds.
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Dict, Optional, Sequence, Tuple

from .combin import YPair, y_pairs
from .exactalg import LaurentInt

Word = Tuple[Tuple[int, int], ...]
PolyElem = Dict[YPair, LaurentInt]

_ONE = LaurentInt.const(1)
_T = LaurentInt.t()
_T_MINUS_ONE = _T - _ONE


def word_of(i: Sequence[int], j: Sequence[int]) -> Word:
    return tuple(zip(i, j))


def _sorted_monomial(w: Word) -> YPair:
    w = tuple(sorted(w))
    return tuple(a for a, _ in w), tuple(b for _, b in w)


def _add(acc: PolyElem, poly, coeff: LaurentInt):
    for k, v in poly:
        x = acc.get(k)
        x = v * coeff if x is None else x + v * coeff
        if x:
            acc[k] = x
        else:
            acc.pop(k, None)


def _rewrite(w: Word, pos: int):
    """Apply the relation at the row inversion ``w[pos], w[pos+1]``."""
    (j, x), (i, y) = w[pos], w[pos + 1]
    head, tail = w[:pos], w[pos + 2:]
    if x <= y:
        return [(_T, head + ((i, y), (j, x)) + tail)]
    # c_{jx} c_{iy} with y < x
    return [
        (_ONE, head + ((i, y), (j, x)) + tail),
        (_T_MINUS_ONE, head + ((i, x), (j, y)) + tail),
    ]


@lru_cache(maxsize=None)
def _normal_form_cached(w: Word) -> Tuple[Tuple[YPair, LaurentInt], ...]:
    for pos in range(len(w) - 1):
        if w[pos][0] > w[pos + 1][0]:
            acc: PolyElem = {}
            for coeff, nw in _rewrite(w, pos):
                _add(acc, _normal_form_cached(nw), coeff)
            return tuple(sorted(acc.items()))
    return ((_sorted_monomial(w), _ONE),)


def normal_form(w: Word, rng: Optional[random.Random] = None) -> PolyElem:
    """Expansion of the product of ``w`` in the Y(n, r) basis.

    With ``rng`` the inversion to rewrite is chosen at random at every step
    (uncached); used to probe independence of the rewriting strategy.
    """
    w = tuple(tuple(f) for f in w)
    if rng is None:
        return dict(_normal_form_cached(w))
    inversions = [p for p in range(len(w) - 1) if w[p][0] > w[p + 1][0]]
    if not inversions:
        return {_sorted_monomial(w): _ONE}
    acc: PolyElem = {}
    for coeff, nw in _rewrite(w, rng.choice(inversions)):
        _add(acc, normal_form(nw, rng).items(), coeff)
    return acc


def multiply(a: PolyElem, b: PolyElem) -> PolyElem:
    """Product of two straightened elements."""
    acc: PolyElem = {}
    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            _add(acc, _normal_form_cached(word_of(i1 + i2, j1 + j2)), c1 * c2)
    return acc


def eval_dual(p: YPair, w: Word) -> LaurentInt:
    """xi_p(c_w): the coefficient of the basis monomial ``c_p`` in ``w``."""
    if len(p[0]) != len(w):
        raise ValueError("length mismatch")
    return dict(_normal_form_cached(tuple(w))).get(p, LaurentInt())


@lru_cache(maxsize=None)
def _nf_dict(w: Word) -> Dict[YPair, LaurentInt]:
    return dict(_normal_form_cached(w))


def pairing_product(a: YPair, b: YPair, target: YPair, n: int) -> LaurentInt:
    """Coefficient of xi_target in xi_a xi_b, from the comultiplication of A(n, r)."""
    it, jt = target
    r = len(it)
    total = LaurentInt()
    for h in _all_multi_indices(n, r):
        x = _nf_dict(word_of(it, h)).get(a)
        if not x:
            continue
        y = _nf_dict(word_of(h, jt)).get(b)
        if y:
            total = total + x * y
    return total


def pairing_product_all(a: YPair, b: YPair, n: int) -> Dict[YPair, LaurentInt]:
    """xi_a xi_b expanded over all targets in Y(n, r)."""
    r = len(a[0])
    out = {}
    for target in y_pairs(n, r):
        v = pairing_product(a, b, target, n)
        if v:
            out[target] = v
    return out


@lru_cache(maxsize=None)
def _all_multi_indices(n: int, r: int):
    import itertools

    return tuple(itertools.product(range(1, n + 1), repeat=r))


def in_plus_quotient(p: YPair) -> bool:
    """c_p survives in A^+ (the quotient killing c_ij with i > j)."""
    return all(a <= b for a, b in zip(*p))


def in_minus_quotient(p: YPair) -> bool:
    """c_p survives in the quotient by the ideal generated by c_ij with i < j."""
    return all(a >= b for a, b in zip(*p))
