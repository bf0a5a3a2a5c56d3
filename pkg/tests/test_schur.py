import itertools
import math
import random

import pytest

from qschur import combin as cb
from qschur.exactalg import VERIFICATION_RINGS, LaurentInt, RingSpec
from qschur.hecke import hecke_algebra, t_mul
from qschur.schur import d_stat, schur_algebra

S22 = schur_algebra(2, 2)
S33 = schur_algebra(3, 3)
t = LaurentInt.t()


def xi(S, p):
    return S.xi(*p)


@pytest.mark.parametrize("n,r", [(2, 2), (2, 3), (3, 2)])
def test_mul_matches_oracle_exhaustive(n, r):
    S = schur_algebra(n, r)
    for a, b in itertools.product(S.basis, repeat=2):
        assert S.mul(xi(S, a), xi(S, b)) == S.mul_oracle(xi(S, a), xi(S, b))


def test_mul_matches_oracle_sampled_n3_r3():
    rng = random.Random(17)
    for _ in range(200):
        a, b = rng.choice(S33.basis), rng.choice(S33.basis)
        assert S33.mul(xi(S33, a), xi(S33, b)) == S33.mul_oracle(xi(S33, a), xi(S33, b))


def test_mul_matches_oracle_over_special_rings():
    for ring in VERIFICATION_RINGS:
        S = schur_algebra(2, 2, ring)
        for a, b in itertools.product(S.basis, repeat=2):
            assert S.mul(xi(S, a), xi(S, b)) == S.mul_oracle(xi(S, a), xi(S, b))


def test_square_of_transposition_element():
    s = ((1, 2), (2, 1))
    sq = S22.mul(xi(S22, s), xi(S22, s))
    assert sq.coeffs == {((1, 2), (1, 2)): t, s: t - 1}


def test_idempotents_and_unit():
    for S in (S22, schur_algebra(3, 2), S33):
        one = S.one()
        for lam, mu in itertools.product(S.weights, repeat=2):
            prod = S.idempotent(lam) * S.idempotent(mu)
            assert prod == (S.idempotent(lam) if lam == mu else S.elem())
        for p in S.basis:
            assert one * xi(S, p) == xi(S, p) == xi(S, p) * one
        assert S.mul_oracle(one, xi(S, S.basis[-1])) == xi(S, S.basis[-1])


def test_selection_rule():
    for S in (S22, S33):
        for lam, mu in itertools.product(S.weights, repeat=2):
            for p in S.basis:
                got = S.idempotent(lam) * xi(S, p) * S.idempotent(mu)
                keep = S.content(p[0]) == lam and S.content(p[1]) == mu
                assert got == (xi(S, p) if keep else S.elem())


def test_associativity_sampled():
    rng = random.Random(4)
    for _ in range(150):
        a, b, c = (xi(S33, rng.choice(S33.basis)) for _ in range(3))
        assert (a * b) * c == a * (b * c)


def test_strictly_raising_elements_are_nilpotent():
    for S in (S22, S33):
        for p in S.basis:
            if cb.lt(*p):
                x = xi(S, p)
                power = x
                for _ in range(len(S.weights)):
                    power = power * x
                assert power.is_zero()


def test_borel_predicates_and_projections():
    lam = (1, 1)
    e = S22.idempotent(lam)
    assert S22.is_plus(e) and S22.is_minus(e) and S22.project_L(e) == e
    x = S22.xi((1, 1), (1, 2))
    assert S22.is_plus(x) and not S22.is_minus(x) and S22.project_J(x) == x
    for p in S22.plus_basis():
        y = xi(S22, p)
        assert S22.project_L(y) + S22.project_J(y) == y


def test_plus_basis_size():
    assert len(S22.plus_basis()) == 6


@pytest.mark.parametrize("n,r", [(2, 2), (3, 3)])
def test_J_is_a_two_sided_ideal_of_S_plus(n, r):
    S = schur_algebra(n, r)
    J = [p for p in S.plus_basis() if cb.lt(*p)]
    pool = J if n == 2 else random.Random(1).sample(J, 25)
    plus = S.plus_basis()
    for a in pool:
        for b in (plus if n == 2 else random.Random(2).sample(plus, 25)):
            for prod in (xi(S, a) * xi(S, b), xi(S, b) * xi(S, a)):
                assert all(cb.lt(*k) for k in prod.support())


@pytest.mark.parametrize("n,r", [(2, 2), (2, 3), (3, 3)])
def test_J_blocks_vanish_off_dominance(n, r):
    S = schur_algebra(n, r)
    for mu, tau in itertools.product(S.weights, repeat=2):
        block = S.J_basis(mu, tau)
        if not cb.strictly_dominates(mu, tau):
            assert block == ()
        else:
            expect = [p for p in S.basis if cb.lt(*p) and S.content(p[0]) == mu and S.content(p[1]) == tau]
            assert len(block) == len(expect) > 0


def test_act_on_R():
    lam = (1, 1)
    assert S22.act_on_R(S22.idempotent(lam), lam) == 1
    assert S22.act_on_R(S22.idempotent((2, 0)), lam) == 0
    for p in S22.plus_basis():
        if cb.lt(*p):
            assert S22.act_on_R(xi(S22, p), lam) == 0
    with pytest.raises(ValueError):
        S22.act_on_R(S22.xi((1, 2), (2, 1)), lam)


def test_d_stat():
    assert d_stat((1, 2)) == 1
    assert d_stat((2, 1)) == 0
    assert d_stat((1, 2, 3)) == 3


@pytest.mark.parametrize("n,r", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_J_inv_is_an_involution(n, r):
    S = schur_algebra(n, r)
    for p in S.basis:
        assert S.J_inv(S.J_inv(xi(S, p))) == xi(S, p)


@pytest.mark.parametrize("n,r", [(2, 2), (3, 2)])
def test_J_inv_is_an_anti_homomorphism(n, r):
    S = schur_algebra(n, r)
    for a, b in itertools.product(S.basis, repeat=2):
        x, y = xi(S, a), xi(S, b)
        assert S.J_inv(x * y) == S.J_inv(y) * S.J_inv(x)


def test_J_inv_swaps_borel_halves_and_fixes_idempotents():
    for S in (S22, S33):
        for lam in S.weights:
            assert S.J_inv(S.idempotent(lam)) == S.idempotent(lam)
        for p in S.plus_basis():
            assert S.is_minus(S.J_inv(xi(S, p)))
        for p in S.minus_basis():
            assert S.is_plus(S.J_inv(xi(S, p)))


def test_J_inv_keeps_Z_coefficients():
    for p in S33.basis:
        for v in S33.J_inv(xi(S33, p)).coeffs.values():
            assert isinstance(v, LaurentInt)


def test_omega_block_examples():
    u = (1, 2)
    assert S22.omega_block(S22.xi(u, u)) == S22.H.one()
    assert S22.omega_block(S22.xi(u, (2, 1))) == S22.H.T((2, 1))
    with pytest.raises(ValueError):
        S22.omega_block(S22.xi((1, 1), (1, 2)))
    with pytest.raises(ValueError):
        schur_algebra(2, 3).omega_block(schur_algebra(2, 3).one())


@pytest.mark.parametrize("r", [2, 3])
def test_omega_block_transports_products(r):
    S = schur_algebra(r, r)
    u = tuple(range(1, r + 1))
    block = [(u, p) for p in itertools.permutations(u)]
    for a, b in itertools.product(block, repeat=2):
        lhs = S.omega_block(xi(S, a) * xi(S, b))
        rhs = t_mul(S.omega_block(xi(S, a)), S.omega_block(xi(S, b)))
        assert lhs == rhs


def test_omega_block_over_special_rings():
    for ring in VERIFICATION_RINGS:
        S = schur_algebra(3, 3, ring)
        u = (1, 2, 3)
        for a, b in itertools.product(itertools.permutations(u), repeat=2):
            x, y = S.xi(u, a), S.xi(u, b)
            assert S.omega_block(x * y) == t_mul(S.omega_block(x), S.omega_block(y))


@pytest.mark.parametrize("n,r", [(2, 2), (3, 3), (4, 3)])
def test_schur_functor_basis_size(n, r):
    S = schur_algebra(n, r)
    for mu in S.weights:
        assert len(S.schur_functor_basis(mu)) == math.factorial(r) // math.prod(math.factorial(x) for x in mu)


def test_ambient_mismatch():
    with pytest.raises(ValueError):
        S22.mul(S22.one(), schur_algebra(2, 2, RingSpec.rationals_at(2)).one())
    with pytest.raises(ValueError):
        S22.xi((2, 1), (1, 1))
