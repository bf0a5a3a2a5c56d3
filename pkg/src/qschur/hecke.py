"""The Hecke algebra of Sigma_r in the T-basis, permutation modules and their homs.

Module elements are always computed inside H and read back: ``M^lam`` is
``x_lam H`` with basis ``x_lam T_d`` (d in D_lam), and an element of H lies in
``M^lam`` exactly when its coefficients are constant on right cosets
``Sigma_lam d``.  Homs ``M^mu -> M^lam`` are stored in the basis
``phi^{lam,mu}_d`` (d in D_{lam,mu}) with
``phi_d(x_mu) = sum of T_pi over the double coset Sigma_lam d Sigma_mu``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Tuple

from . import combin as cb
from .combin import Composition, Perm
from .exactalg import GENERIC, RingSpec, Scalar


class MembershipError(ValueError):
    """An element of H is not in the submodule it is being expanded in."""


def _acc(d: dict, key, value):
    x = d.get(key)
    x = value if x is None else x + value
    if x:
        d[key] = x
    else:
        d.pop(key, None)


class HeckeAlgebra:
    """H_{R,q}(Sigma_r) with a memoised table of basis products."""

    def __init__(self, r: int, ring: RingSpec = GENERIC):
        self.r = r
        self.ring = ring
        self.perms = cb.sym_group(r)
        self.lengths = {p: cb.lng(p) for p in self.perms}
        self._simple = [cb.simple(k, r) for k in range(1, r)]
        self._table: Dict[Tuple[Perm, Perm], Tuple[Tuple[Perm, Scalar], ...]] = {}
        self.q = ring.q
        self.q1 = ring.q - ring.one

    def __repr__(self):
        return f"HeckeAlgebra(r={self.r}, ring={self.ring})"

    @property
    def identity(self) -> Perm:
        return cb.identity(self.r)

    def gen_left(self, k: int, coeffs: Mapping[Perm, Scalar]) -> Dict[Perm, Scalar]:
        """``T_{s_k} * h`` for ``h`` given by its coefficients."""
        s = self._simple[k - 1]
        out: Dict[Perm, Scalar] = {}
        for w, c in coeffs.items():
            sw = cb.compose(s, w)
            if self.lengths[sw] == self.lengths[w] + 1:
                _acc(out, sw, c)
            else:
                _acc(out, sw, self.q * c)
                _acc(out, w, self.q1 * c)
        return out

    def basis_product(self, sigma: Perm, pi: Perm) -> Tuple[Tuple[Perm, Scalar], ...]:
        key = (sigma, pi)
        hit = self._table.get(key)
        if hit is not None:
            return hit
        cur: Dict[Perm, Scalar] = {pi: self.ring.one}
        for k in reversed(cb.reduced_word(sigma)):
            cur = self.gen_left(k, cur)
        out = tuple(cur.items())
        self._table[key] = out
        return out

    def elem(self, coeffs: Mapping[Perm, Scalar] | None = None) -> "HeckeElem":
        return HeckeElem(self, dict(coeffs or {}))

    def T(self, pi: Perm) -> "HeckeElem":
        return HeckeElem(self, {tuple(pi): self.ring.one})

    def one(self) -> "HeckeElem":
        return self.T(self.identity)

    def sum_T(self, perms: Iterable[Perm]) -> "HeckeElem":
        return HeckeElem(self, {p: self.ring.one for p in perms})


@lru_cache(maxsize=None)
def hecke_algebra(r: int, ring: RingSpec = GENERIC) -> HeckeAlgebra:
    return HeckeAlgebra(r, ring)


@dataclass
class HeckeElem:
    alg: HeckeAlgebra
    coeffs: Dict[Perm, Scalar] = field(default_factory=dict)

    def __post_init__(self):
        self.coeffs = {k: v for k, v in self.coeffs.items() if v}

    def __getitem__(self, pi: Perm) -> Scalar:
        return self.coeffs.get(tuple(pi), self.alg.ring.zero)

    def __eq__(self, other):
        if not isinstance(other, HeckeElem):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __add__(self, other: "HeckeElem") -> "HeckeElem":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            _acc(out, k, v)
        return HeckeElem(self.alg, out)

    def __neg__(self):
        return HeckeElem(self.alg, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: Scalar) -> "HeckeElem":
        return HeckeElem(self.alg, {k: v * c for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElem):
            return t_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def is_zero(self) -> bool:
        return not self.coeffs


def t_mul(a: HeckeElem, b: HeckeElem) -> HeckeElem:
    alg = a.alg
    out: Dict[Perm, Scalar] = {}
    for s, x in a.coeffs.items():
        for p, y in b.coeffs.items():
            xy = x * y
            for w, c in alg.basis_product(s, p):
                _acc(out, w, c * xy)
    return HeckeElem(alg, out)


def star(a: HeckeElem) -> HeckeElem:
    """The anti-automorphism ``T_pi -> T_{pi^-1}``."""
    return HeckeElem(a.alg, {cb.inverse(p): c for p, c in a.coeffs.items()})


def form_f(a: HeckeElem, b: HeckeElem) -> Scalar:
    """``f(T_s, T_p) = q^lng(s)`` if ``p = s^-1`` and 0 otherwise, extended bilinearly."""
    alg = a.alg
    total = alg.ring.zero
    for s, x in a.coeffs.items():
        y = b.coeffs.get(cb.inverse(s))
        if y:
            total = total + x * y * alg.ring.q_pow(alg.lengths[s])
    return total


# permutation modules -------------------------------------------------------------

@dataclass
class PermModElem:
    """``sum_d coords[d] x_shape T_d`` in ``M^shape``."""

    shape: Composition
    coords: Dict[Perm, Scalar]


@dataclass
class HomElem:
    """``sum_d coords[d] phi^{target,source}_d`` in ``Hom_H(M^source, M^target)``."""

    target: Composition
    source: Composition
    coords: Dict[Perm, Scalar]


@dataclass
class LinFunc:
    """R-linear form on ``M^source`` in the dual basis of ``{x_source T_d}``."""

    source: Composition
    coords: Dict[Perm, Scalar]


def x_of(alg: HeckeAlgebra, lam: Composition) -> HeckeElem:
    return alg.sum_T(cb.young_subgroup(tuple(lam)))


def expand_in_M(h: HeckeElem, lam: Composition) -> PermModElem:
    """Coordinates of ``h`` in the basis ``x_lam T_d``; raises if ``h`` is not in ``x_lam H``."""
    lam = tuple(lam)
    young = cb.young_subgroup(lam)
    coords: Dict[Perm, Scalar] = {}
    covered = 0
    for d in cb.dist_reps(lam):
        c = h.coeffs.get(d)
        if not c:
            for w in young:
                if h.coeffs.get(cb.compose(w, d)):
                    raise MembershipError(f"coefficients not constant on Sigma_{lam} {d}")
            continue
        for w in young:
            if h.coeffs.get(cb.compose(w, d)) != c:
                raise MembershipError(f"coefficients not constant on Sigma_{lam} {d}")
        covered += len(young)
        coords[d] = c
    if covered != len(h.coeffs):
        raise MembershipError("support outside the listed cosets")
    return PermModElem(lam, coords)


def m_to_hecke(alg: HeckeAlgebra, v: PermModElem) -> HeckeElem:
    young = cb.young_subgroup(v.shape)
    out: Dict[Perm, Scalar] = {}
    for d, c in v.coords.items():
        for w in young:
            out[cb.compose(w, d)] = c
    return HeckeElem(alg, out)


def dcoset_sum(alg: HeckeAlgebra, lam, mu, d: Perm) -> HeckeElem:
    return alg.sum_T(cb.double_coset(tuple(lam), tuple(mu), d))


@lru_cache(maxsize=None)
def _right_cosets_in(lam: Composition, mu: Composition, e: Perm) -> Tuple[Perm, ...]:
    # D_lam members of Sigma_lam e Sigma_mu: the double coset sum is x_lam times their T-sum
    young = set(cb.dist_reps(lam))
    return tuple(p for p in cb.double_coset(lam, mu, e) if p in young)


def phi_basis(lam, mu, d: Perm, ring: RingSpec = GENERIC) -> HomElem:
    lam, mu = tuple(lam), tuple(mu)
    if d not in cb.double_reps(lam, mu):
        raise ValueError(f"{d} is not in D_{{{lam},{mu}}}")
    return HomElem(lam, mu, {d: ring.one})


def hom_image_of_generator(alg: HeckeAlgebra, f: HomElem) -> HeckeElem:
    """``f(x_source)`` as an element of H."""
    out: Dict[Perm, Scalar] = {}
    for d, c in f.coords.items():
        for p in cb.double_coset(f.target, f.source, d):
            _acc(out, p, c)
    return HeckeElem(alg, out)


def phi_apply(alg: HeckeAlgebra, f: HomElem, v: PermModElem) -> PermModElem:
    if tuple(v.shape) != tuple(f.source):
        raise ValueError("shape mismatch")
    base = hom_image_of_generator(alg, f)
    h = alg.elem()
    for e, c in v.coords.items():
        h = h + (base * alg.T(e)).scale(c)
    return expand_in_M(h, f.target)


def read_hom(h: HeckeElem, lam, mu) -> HomElem:
    """Read ``h = g(x_mu)`` (an element of ``x_lam H`` fixed by ``Sigma_mu``) as a hom."""
    lam, mu = tuple(lam), tuple(mu)
    coords = {}
    covered = 0
    for d in cb.double_reps(lam, mu):
        c = h.coeffs.get(d)
        members = cb.double_coset(lam, mu, d)
        for p in members:
            if h.coeffs.get(p) != c:
                raise MembershipError(f"image not constant on Sigma_{lam} {d} Sigma_{mu}")
        if c:
            coords[d] = c
            covered += len(members)
    if covered != len(h.coeffs):
        raise MembershipError("support outside the double cosets")
    return HomElem(lam, mu, coords)


def phi_compose(alg: HeckeAlgebra, f: HomElem, g: HomElem) -> HomElem:
    """``f o g`` for ``g: M^nu -> M^mu`` and ``f: M^mu -> M^lam``."""
    if tuple(f.source) != tuple(g.target):
        raise ValueError("homs do not chain")
    lam, mu, nu = f.target, f.source, g.source
    left = hom_image_of_generator(alg, f)
    # g(x_nu) = x_mu * sum of T_{d'} over D_mu-members of each double coset
    right: Dict[Perm, Scalar] = {}
    for e, c in g.coords.items():
        for p in _right_cosets_in(mu, nu, e):
            _acc(right, p, c)
    return read_hom(left * HeckeElem(alg, right), lam, nu)


def hom_left_mul(h: HeckeElem, psi: HomElem) -> HomElem:
    """``(h psi)(m) = h psi(m)`` for ``psi`` with values in ``H = M^omega``."""
    alg = h.alg
    return read_hom(h * hom_image_of_generator(alg, psi), psi.target, psi.source)


def func_left_mul(alg: HeckeAlgebra, h: HeckeElem, eps: LinFunc) -> LinFunc:
    """``(h eps)(m) = eps(m h)``."""
    out = {}
    for d in cb.dist_reps(eps.source):
        m = m_to_hecke(alg, PermModElem(eps.source, {d: alg.ring.one}))
        val = pair(eps, expand_in_M(m * h, eps.source), alg.ring)
        if val:
            out[d] = val
    return LinFunc(eps.source, out)


def pair(eps: LinFunc, v: PermModElem, ring: RingSpec) -> Scalar:
    total = ring.zero
    for d, c in v.coords.items():
        x = eps.coords.get(d)
        if x:
            total = total + x * c
    return total


def compose_func(alg: HeckeAlgebra, eps: LinFunc, f: HomElem) -> LinFunc:
    """``eps o f`` for ``f: M^mu -> M^lam`` and ``eps`` a form on ``M^lam``."""
    if tuple(eps.source) != tuple(f.target):
        raise ValueError("shape mismatch")
    base = hom_image_of_generator(alg, f)
    out = {}
    for e in cb.dist_reps(f.source):
        val = pair(eps, expand_in_M(base * alg.T(e), f.target), alg.ring)
        if val:
            out[e] = val
    return LinFunc(f.source, out)


def omega_of(r: int, n: int | None = None) -> Composition:
    n = r if n is None else n
    return tuple([1] * r + [0] * (n - r))


def frak_F(alg: HeckeAlgebra, psi: HomElem) -> LinFunc:
    """``psi -> (m -> coefficient of T_id in psi(m))``."""
    base = hom_image_of_generator(alg, psi)
    ident = alg.identity
    out = {}
    for d in cb.dist_reps(psi.source):
        val = (base * alg.T(d))[ident]
        if val:
            out[d] = val
    return LinFunc(psi.source, out)


def hat(alg: HeckeAlgebra, eps: LinFunc, target: Composition) -> HomElem:
    """Inverse of :func:`frak_F`: ``m -> sum_s q^-lng(s) eps(m T_{s^-1}) T_s``."""
    ring = alg.ring
    mu = eps.source
    x_mu = x_of(alg, mu)
    out: Dict[Perm, Scalar] = {}
    for s in alg.perms:
        val = pair(eps, expand_in_M(x_mu * alg.T(cb.inverse(s)), mu), ring)
        if val:
            out[s] = val * ring.q_pow(-alg.lengths[s])
    return read_hom(HeckeElem(alg, out), target, mu)
