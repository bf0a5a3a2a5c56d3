"""The quantised Schur algebra S_{R,q}(n, r) on the xi_{ij} basis.

Products are computed in the Hecke model: ``xi_{l(lam), j}`` (``content(j) = mu``)
is sent to ``phi^{lam,mu}_d`` with ``d`` from :func:`combin.y_to_dcoset`, and
``xi_a xi_b`` corresponds to ``phi_a o phi_b``.  That orientation is forced by
weights (``xi_a xi_b`` is nonzero only when ``content(j_a) = content(i_b)``),
and is checked against :func:`mul_oracle`, which multiplies by dualising the
comultiplication of A(n, r).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Tuple

from . import combin as cb
from . import qpoly
from .combin import Composition, MultiIndex, YPair
from .exactalg import GENERIC, RingSpec, Scalar
from .hecke import HeckeElem, MembershipError, _acc, _right_cosets_in, hecke_algebra


class SchurAlgebra:
    def __init__(self, n: int, r: int, ring: RingSpec = GENERIC):
        self.n, self.r, self.ring = n, r, ring
        self.basis: Tuple[YPair, ...] = cb.y_pairs(n, r)
        self.index = {p: k for k, p in enumerate(self.basis)}
        self.H = hecke_algebra(r, ring)
        self.weights = cb.compositions(n, r)
        self._prod: Dict[Tuple[YPair, YPair], Tuple[Tuple[YPair, Scalar], ...]] = {}
        self._jinv: Dict[YPair, Dict[YPair, Scalar]] = {}
        self._pair_meta: Dict[YPair, Tuple[Composition, Composition, tuple]] = {}

    def __repr__(self):
        return f"SchurAlgebra(n={self.n}, r={self.r}, ring={self.ring})"

    def content(self, i: MultiIndex) -> Composition:
        return cb.content(i, self.n)

    def meta(self, p: YPair):
        hit = self._pair_meta.get(p)
        if hit is None:
            lam, mu = self.content(p[0]), self.content(p[1])
            hit = (lam, mu, cb.y_to_dcoset(p, self.n))
            self._pair_meta[p] = hit
        return hit

    # elements -------------------------------------------------------------

    def elem(self, coeffs: Mapping[YPair, Scalar] | None = None) -> "SchurElem":
        return SchurElem(self, dict(coeffs or {}))

    def xi(self, i, j) -> "SchurElem":
        p = (tuple(i), tuple(j))
        if p not in self.index:
            raise ValueError(f"{p} is not in Y({self.n},{self.r})")
        return SchurElem(self, {p: self.ring.one})

    def idempotent(self, lam: Composition) -> "SchurElem":
        li = cb.l_of(lam)
        return self.xi(li, li)

    def one(self) -> "SchurElem":
        return SchurElem(self, {(cb.l_of(l), cb.l_of(l)): self.ring.one for l in self.weights})

    # products -------------------------------------------------------------

    def mul_basis(self, a: YPair, b: YPair) -> Tuple[Tuple[YPair, Scalar], ...]:
        key = (a, b)
        hit = self._prod.get(key)
        if hit is not None:
            return hit
        lam, mu, d = self.meta(a)
        mu2, nu, e = self.meta(b)
        if mu != mu2:
            self._prod[key] = ()
            return ()
        H = self.H
        # phi_a(phi_b(x_nu)) = T(Sigma_lam d Sigma_mu) * sum of T_{d'} over the
        # D_mu-members d' of Sigma_mu e Sigma_nu
        acc: Dict = {}
        right = _right_cosets_in(mu, nu, e)
        for s in cb.double_coset(lam, mu, d):
            for p in right:
                for w, c in H.basis_product(s, p):
                    _acc(acc, w, c)
        back = cb.dcoset_to_y(lam, nu)
        out = []
        covered = 0
        for f, pair in back.items():
            c = acc.get(f)
            members = cb.double_coset(lam, nu, f)
            for m in members:
                if acc.get(m) != c:
                    raise MembershipError(f"product {a}*{b} not constant on a double coset")
            if c:
                out.append((pair, c))
                covered += len(members)
        if covered != len(acc):
            raise MembershipError(f"product {a}*{b} leaves Hom(M^nu, M^lam)")
        out = tuple(sorted(out))
        self._prod[key] = out
        return out

    def mul(self, a: "SchurElem", b: "SchurElem") -> "SchurElem":
        if a.alg is not self or b.alg is not self:
            raise ValueError("ambient mismatch")
        out: Dict[YPair, Scalar] = {}
        for p, x in a.coeffs.items():
            for p2, y in b.coeffs.items():
                xy = x * y
                for k, c in self.mul_basis(p, p2):
                    _acc(out, k, c * xy)
        return SchurElem(self, out)

    def mul_oracle(self, a: "SchurElem", b: "SchurElem") -> "SchurElem":
        """Product through the comultiplication pairing (meant for n, r <= 3)."""
        out: Dict[YPair, Scalar] = {}
        for p, x in a.coeffs.items():
            for p2, y in b.coeffs.items():
                xy = x * y
                for k, c in qpoly.pairing_product_all(p, p2, self.n).items():
                    _acc(out, k, self.ring.from_laurent(c) * xy)
        return SchurElem(self, out)

    # Borel subalgebras ----------------------------------------------------

    def is_plus(self, a: "SchurElem") -> bool:
        return all(cb.leq(i, j) for i, j in a.coeffs)

    def is_minus(self, a: "SchurElem") -> bool:
        return all(cb.leq(j, i) for i, j in a.coeffs)

    def project_L(self, a: "SchurElem") -> "SchurElem":
        return SchurElem(self, {p: c for p, c in a.coeffs.items() if p[0] == p[1]})

    def project_J(self, a: "SchurElem") -> "SchurElem":
        return SchurElem(self, {p: c for p, c in a.coeffs.items() if cb.lt(p[0], p[1])})

    def plus_basis(self) -> Tuple[YPair, ...]:
        return tuple(p for p in self.basis if cb.leq(*p))

    def minus_basis(self) -> Tuple[YPair, ...]:
        return tuple(p for p in self.basis if cb.leq(p[1], p[0]))

    def J_basis(self, mu: Composition, tau: Composition) -> Tuple[YPair, ...]:
        """Basis of ``xi_mu J xi_tau``: pairs ``i < j`` with ``i in mu`` and ``j in tau``."""
        mu, tau = tuple(mu), tuple(tau)
        return tuple(p for p in cb.y_pairs_with(mu, tau) if cb.lt(*p))

    def left_ideal_basis(self, mu: Composition, plus: bool = False) -> Tuple[YPair, ...]:
        """Basis of ``S xi_mu`` (or ``S^+ xi_mu``): pairs with ``j in mu``."""
        mu = tuple(mu)
        return tuple(
            p for p in self.basis
            if self.content(p[1]) == mu and (not plus or cb.leq(*p))
        )

    def act_on_R(self, a: "SchurElem", lam: Composition) -> Scalar:
        """Scalar by which ``a`` (in S^+ or S^-) acts on the rank-one module R_lam."""
        if not (self.is_plus(a) or self.is_minus(a)):
            raise ValueError("element is not supported in S^+ or S^-")
        li = cb.l_of(lam)
        return a.coeffs.get((li, li), self.ring.zero)

    # anti-automorphism J ---------------------------------------------------

    def J_basis_image(self, p: YPair) -> Dict[YPair, Scalar]:
        hit = self._jinv.get(p)
        if hit is not None:
            return hit
        ring = self.ring
        out = {}
        for (i, j) in self.basis:
            v = qpoly.eval_dual(p, qpoly.word_of(j, i))
            if v:
                out[(i, j)] = ring.from_laurent(v) * ring.q_pow(d_stat(j) - d_stat(i))
        self._jinv[p] = out
        return out

    def J_inv(self, a: "SchurElem") -> "SchurElem":
        out: Dict[YPair, Scalar] = {}
        for p, c in a.coeffs.items():
            for k, v in self.J_basis_image(p).items():
                _acc(out, k, v * c)
        return SchurElem(self, out)

    # the omega block --------------------------------------------------------

    def _omega(self) -> Tuple[Composition, MultiIndex]:
        if self.n < self.r:
            raise ValueError(f"the Schur functor needs n >= r (n={self.n}, r={self.r})")
        return tuple([1] * self.r + [0] * (self.n - self.r)), tuple(range(1, self.r + 1))

    def omega_block(self, a: "SchurElem") -> HeckeElem:
        """``xi_{u, u pi} -> T_{pi^-1}`` on ``xi_omega S xi_omega``."""
        _, u = self._omega()
        out = {}
        for (i, j), c in a.coeffs.items():
            if i != u or sorted(j) != list(u):
                raise ValueError(f"({i}, {j}) is outside the omega block")
            out[cb.inverse(tuple(j))] = c
        return self.H.elem(out)

    def schur_functor_basis(self, mu: Composition) -> Tuple[YPair, ...]:
        """Basis ``{xi_{u,j} : j in mu}`` of ``xi_omega S xi_mu``."""
        _, u = self._omega()
        return tuple(p for p in self.left_ideal_basis(mu) if p[0] == u)


@lru_cache(maxsize=None)
def schur_algebra(n: int, r: int, ring: RingSpec = GENERIC) -> SchurAlgebra:
    return SchurAlgebra(n, r, ring)


def d_stat(i: MultiIndex) -> int:
    """Number of pairs ``a < b`` with ``i_a < i_b``."""
    r = len(i)
    return sum(1 for a in range(r) for b in range(a + 1, r) if i[a] < i[b])


@dataclass
class SchurElem:
    alg: SchurAlgebra
    coeffs: Dict[YPair, Scalar] = field(default_factory=dict)

    def __post_init__(self):
        self.coeffs = {k: v for k, v in self.coeffs.items() if v}

    def __eq__(self, other):
        if not isinstance(other, SchurElem):
            return NotImplemented
        return self.alg is other.alg and self.coeffs == other.coeffs

    def __add__(self, other: "SchurElem") -> "SchurElem":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            _acc(out, k, v)
        return SchurElem(self.alg, out)

    def __neg__(self):
        return SchurElem(self.alg, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: Scalar) -> "SchurElem":
        return SchurElem(self.alg, {k: v * c for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, SchurElem):
            return self.alg.mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def is_zero(self) -> bool:
        return not self.coeffs

    def support(self) -> Iterable[YPair]:
        return self.coeffs.keys()
