import itertools
import math

import pytest
from hypothesis import given, strategies as st

from qschur import combin as cb


def test_compositions_examples():
    assert cb.compositions(2, 2) == ((2, 0), (1, 1), (0, 2))
    assert cb.compositions(1, 4) == ((4,),)
    assert len(cb.compositions(3, 3)) == 10


@pytest.mark.parametrize("n,r", [(1, 3), (2, 4), (3, 3), (4, 2)])
def test_compositions_are_all_weights_once(n, r):
    comps = cb.compositions(n, r)
    assert len(set(comps)) == len(comps) == math.comb(n + r - 1, r)
    assert list(comps) == sorted(comps, reverse=True)


def test_dominance_examples():
    assert cb.dominates((2, 0), (1, 1))
    assert cb.dominates((1, 1), (1, 1)) and not cb.strictly_dominates((1, 1), (1, 1))
    assert not cb.dominates((1, 1), (2, 0))
    with pytest.raises(ValueError):
        cb.dominates((1, 1), (1, 1, 0))


@pytest.mark.parametrize("n,r", [(2, 3), (3, 3), (3, 4)])
def test_dominance_is_a_partial_order(n, r):
    comps = cb.compositions(n, r)
    for a, b in itertools.product(comps, repeat=2):
        if cb.dominates(a, b) and cb.dominates(b, a):
            assert a == b
        for c in comps:
            if cb.dominates(a, b) and cb.dominates(b, c):
                assert cb.dominates(a, c)


def _y_brute(n, r):
    out = []
    for i in itertools.product(range(1, n + 1), repeat=r):
        for j in itertools.product(range(1, n + 1), repeat=r):
            if all(i[a] < i[a + 1] or (i[a] == i[a + 1] and j[a] <= j[a + 1]) for a in range(r - 1)):
                out.append((i, j))
    return out


@pytest.mark.parametrize("n,r", [(1, 3), (2, 1), (2, 2), (2, 3), (3, 2), (3, 3)])
def test_y_pairs_match_brute_force_and_count(n, r):
    ys = cb.y_pairs(n, r)
    assert sorted(ys) == sorted(_y_brute(n, r))
    assert len(ys) == math.comb(n * n + r - 1, r)


def test_y_pairs_examples():
    assert len(cb.y_pairs(2, 2)) == 10
    assert cb.y_pairs(1, 3) == (((1, 1, 1), (1, 1, 1)),)
    assert len(cb.y_pairs(2, 1)) == 4


def test_dist_reps_examples():
    assert set(cb.dist_reps((1, 1, 1))) == set(cb.sym_group(3))
    assert cb.dist_reps((3,)) == ((1, 2, 3),)
    assert len(cb.dist_reps((2, 1))) == 3


@pytest.mark.parametrize("lam", [(2, 1), (1, 2), (2, 2), (3, 1, 0), (1, 1, 2), (2, 0, 2)])
def test_dist_reps_are_minimal_in_their_cosets(lam):
    r = sum(lam)
    young = cb.young_subgroup(lam)
    reps = cb.dist_reps(lam)
    assert len(reps) == math.factorial(r) // math.prod(math.factorial(x) for x in lam)
    covered = set()
    for d in reps:
        coset = {cb.compose(w, d) for w in young}
        assert all(cb.lng(p) > cb.lng(d) for p in coset - {d})
        covered |= coset
    assert covered == set(cb.sym_group(r))


def test_double_reps_examples():
    assert cb.double_reps((3,), (3,)) == ((1, 2, 3),)
    assert len(cb.double_reps((2, 1), (1, 1, 1))) == 3
    assert len(cb.double_reps((1, 1, 1, 1), (2, 2))) == 6


@pytest.mark.parametrize("n,r", [(2, 2), (2, 3), (3, 3), (2, 4), (4, 4)])
def test_double_reps_count_row_semistandard_tableaux(n, r):
    for lam in cb.compositions(n, r):
        for mu in cb.compositions(n, r):
            assert len(cb.double_reps(lam, mu)) == len(cb.row_semistandard_tableaux(lam, mu))


@pytest.mark.parametrize("n,r", [(2, 2), (3, 2), (2, 3), (3, 3)])
def test_y_to_dcoset_is_a_bijection(n, r):
    for lam in cb.compositions(n, r):
        for mu in cb.compositions(n, r):
            pairs = [p for p in cb.y_pairs_with(lam, mu)]
            image = [cb.y_to_dcoset(p, n) for p in pairs]
            assert len(set(image)) == len(pairs)
            assert set(image) == set(cb.double_reps(lam, mu))


def test_y_to_dcoset_examples():
    assert cb.y_to_dcoset(((1, 1, 2), (1, 1, 2)), 2) == (1, 2, 3)
    assert cb.y_to_dcoset(((1, 2), (2, 1)), 2) == (2, 1)


def test_tableau_examples():
    lam = (2, 1)
    t = cb.tableau_of(lam, cb.l_of(lam))
    assert t.is_row_semistandard() and t.is_ascending()
    t = cb.tableau_of(lam, (1, 1, 2))
    assert t.rows == ((1, 1), (2,)) and t.is_row_semistandard() and t.is_ascending()
    t = cb.tableau_of(lam, (2, 2, 1))
    assert t.rows == ((2, 2), (1,)) and t.is_row_semistandard() and not t.is_ascending()
    with pytest.raises(ValueError):
        cb.tableau_of(lam, (1, 1))


@pytest.mark.parametrize("n,r", [(2, 3), (3, 3)])
def test_tableau_predicates_match_y_and_order(n, r):
    for lam in cb.compositions(n, r):
        li = cb.l_of(lam)
        for j in itertools.product(range(1, n + 1), repeat=r):
            t = cb.tableau_of(lam, j)
            assert t.is_row_semistandard() == cb.is_y_pair(li, j)
            assert t.is_ascending() == cb.leq(li, j)


def test_chain_examples():
    assert cb.chains((1, 1), 1) == (((2, 0),),)
    assert cb.omega_plus((1, 1), (2, 0), 1) == [(((1, 1), (1, 2)),)]
    assert cb.chains((2, 0), 1) == () and cb.chains((3, 0, 0), 2) == ()
    assert cb.chains((1, 1), 0) == ((),)


@pytest.mark.parametrize("n,r", [(2, 3), (3, 3)])
def test_chains_strict_and_omega_plus_needs_dominance(n, r):
    comps = cb.compositions(n, r)
    for lam in comps:
        for k in range(1, 4):
            for ch in cb.chains(lam, k):
                seq = ch + (lam,)
                assert all(cb.strictly_dominates(a, b) for a, b in zip(seq, seq[1:]))
        for mu in comps:
            if not cb.strictly_dominates(mu, lam):
                assert all(not cb.omega_plus(lam, mu, k) for k in (1, 2))


def test_b_of_examples():
    assert all(cb.b_of(lam) == 0 for lam in cb.partitions(4, 3))
    assert cb.b_of((0, 1)) == 0
    assert cb.b_of((0, 2)) == 1


@given(st.lists(st.integers(0, 4), min_size=1, max_size=5))
def test_b_of_shift_invariance(parts):
    lam = tuple(x + 1 for x in parts) + (0, 0)
    assert cb.b_of(lam) == cb.b_of(tuple(x - 1 if x else 0 for x in lam))


def test_counting_oracles():
    for n, r in [(2, 3), (3, 2), (4, 4)]:
        assert cb.ssyt_count((r,), n) == math.comb(n + r - 1, r)
    assert cb.ssyt_count((2, 1), 3) == 8
    assert cb.syt_count((2, 1)) == 2
    # hook length formula
    assert cb.syt_count((3, 2, 1)) == 16 and cb.syt_count((2, 2)) == 2
