"""The Koszul algebra Λ[u_1..u_m] ⊗ Z[K] and its finite quotient R*(K).

R*(K) is the quotient by v_i^2 = u_i v_i = 0.  It has the additive basis
u_ω v_σ with σ ∈ K and ω ∩ σ = ∅, represented here by :class:`Monomial`.
The (infinite) algebra E_m = Λ[u] ⊗ Z[v] and its quotient by the
Stanley-Reisner ideal use :class:`EMonomial`, which carries exponents.

Sign conventions (all code in this package follows them):

* u_ω means u_{i_1} u_{i_2} ... u_{i_k} with i_1 < ... < i_k;
* d(u_ω v_σ) = Σ_t (-1)^(t-1) u_{ω - i_t} v_{σ + i_t};
* u_ω v_σ · u_ω' v_σ' = (-1)^inv(ω, ω') u_{ω ∪ ω'} v_{σ ∪ σ'}, where
  inv(ω, ω') counts pairs p ∈ ω, q ∈ ω' with p > q.

Bidegrees are (-|ω|, 2|ω| + 2|σ|); topological degree is |ω| + 2|σ|.
"""

from __future__ import annotations

from itertools import product
from typing import NamedTuple

from .chains import Chain, count_below, fmt_set, lex_key, members, size, subsets
from .simplicial import SimplicialComplex


class NotHomogeneous(ValueError):
    pass


def koszul_sign(omega_a: int, omega_b: int) -> int:
    """(-1)^#{(p, q) : p in omega_a, q in omega_b, p > q}."""
    n = 0
    for q in members(omega_b):
        n += size(omega_a >> q)
    return -1 if n & 1 else 1


class Monomial(NamedTuple):
    """Basis element u_ω v_σ of R*(K), with ω and σ as bit masks."""

    omega: int
    sigma: int

    @property
    def degree(self) -> int:
        return size(self.omega) + 2 * size(self.sigma)

    @property
    def bidegree(self) -> tuple[int, int]:
        i = size(self.omega)
        return -i, 2 * (i + size(self.sigma))

    @property
    def support(self) -> int:
        return self.omega | self.sigma

    def sort_key(self):
        return lex_key(self.sigma), lex_key(self.omega)

    def __repr__(self):
        if not self.omega and not self.sigma:
            return "1"
        parts = []
        if self.omega:
            parts.append("u" + fmt_set(self.omega))
        if self.sigma:
            parts.append("v" + fmt_set(self.sigma))
        return "".join(parts)


ONE = Monomial(0, 0)


def u(*vertices: int) -> Monomial:
    from .chains import mask
    return Monomial(mask(vertices), 0)


def uv(omega, sigma) -> Monomial:
    from .chains import mask
    return Monomial(mask(omega), mask(sigma))


def basis(K: SimplicialComplex) -> dict[tuple[int, int], list[Monomial]]:
    """All admissible monomials grouped by bidegree, each list in (σ, ω) lex order."""
    full = K.full_mask
    out: dict[tuple[int, int], list[Monomial]] = {}
    for sigma in K.faces:
        for omega in subsets(full & ~sigma):
            mono = Monomial(omega, sigma)
            out.setdefault(mono.bidegree, []).append(mono)
    for key in out:
        out[key].sort(key=Monomial.sort_key)
    return dict(sorted(out.items(), key=lambda kv: (-kv[0][0], kv[0][1])))


def basis_of_support(K: SimplicialComplex, S: int) -> dict[int, list[Monomial]]:
    """Monomials with ω ∪ σ = S, keyed by i = |ω|, each list in (σ, ω) order."""
    out: dict[int, list[Monomial]] = {}
    for sigma in subsets(S):
        if sigma in K.faces:
            mono = Monomial(S & ~sigma, sigma)
            out.setdefault(size(mono.omega), []).append(mono)
    for key in out:
        out[key].sort(key=Monomial.sort_key)
    return out


def is_admissible(K: SimplicialComplex, mono: Monomial) -> bool:
    return not (mono.omega & mono.sigma) and mono.sigma in K.faces and \
        not ((mono.omega | mono.sigma) & ~K.full_mask)


def _homogeneous_bidegree(x: Chain):
    degs = {mono.bidegree for mono in x}
    if len(degs) > 1:
        raise NotHomogeneous(f"chain spans bidegrees {sorted(degs)}")
    return degs.pop() if degs else None


def d_monomial(K: SimplicialComplex, mono: Monomial) -> Chain:
    out = Chain()
    omega, sigma = mono
    for t, i in enumerate(members(omega)):
        bit = 1 << (i - 1)
        s2 = sigma | bit
        if s2 in K.faces:
            out.add_term(Monomial(omega & ~bit, s2), -1 if t & 1 else 1)
    return out


def differential(K: SimplicialComplex, x) -> Chain:
    """Differential of R*(K) on a homogeneous chain (or a single monomial)."""
    if isinstance(x, Monomial):
        return d_monomial(K, x)
    _homogeneous_bidegree(x)
    out = Chain()
    for mono, c in x.items():
        for m2, c2 in d_monomial(K, mono).items():
            out.add_term(m2, c * c2)
    return out


def multiply(K: SimplicialComplex, a: Monomial, b: Monomial):
    """Product of two basis monomials: ``(sign, monomial)`` or ``None`` for zero."""
    if (a.omega | a.sigma) & (b.omega | b.sigma):
        return None
    sigma = a.sigma | b.sigma
    if sigma not in K.faces:
        return None
    return koszul_sign(a.omega, b.omega), Monomial(a.omega | b.omega, sigma)


def multiply_chains(K: SimplicialComplex, x: Chain, y: Chain) -> Chain:
    out = Chain()
    for a, ca in x.items():
        for b, cb in y.items():
            res = multiply(K, a, b)
            if res is not None:
                out.add_term(res[1], res[0] * ca * cb)
    return out


def restrict_to_subcomplex(L: SimplicialComplex, K: SimplicialComplex, x: Chain) -> Chain:
    """The ring epimorphism R*(L) -> R*(K) for a subcomplex K of L on the same [m]."""
    if not K.is_subcomplex_of(L):
        raise ValueError("K is not a subcomplex of L on the same vertex set")
    return Chain({mono: c for mono, c in x.items() if mono.sigma in K.faces})


# ---------------------------------------------------------------------------
# E_m = Λ[u_1..u_m] ⊗ Z[v_1..v_m], and its quotient by the face ideal of K


class EMonomial(NamedTuple):
    """u_ω v_1^{a_1} ... v_m^{a_m}."""

    omega: int
    exps: tuple[int, ...]

    @property
    def degree(self) -> int:
        return size(self.omega) + 2 * sum(self.exps)

    @property
    def poly_support(self) -> int:
        s = 0
        for i, a in enumerate(self.exps):
            if a:
                s |= 1 << i
        return s

    def __repr__(self):
        parts = []
        if self.omega:
            parts.append("u" + fmt_set(self.omega))
        for i, a in enumerate(self.exps, start=1):
            if a == 1:
                parts.append(f"v{i}")
            elif a:
                parts.append(f"v{i}^{a}")
        return "*".join(parts) if parts else "1"


def _alive(K: SimplicialComplex | None, e: EMonomial) -> bool:
    return K is None or e.poly_support in K.faces


def e_basis(m: int, max_degree: int, K: SimplicialComplex | None = None) -> list[EMonomial]:
    """Basis of E_m (or of Λ[u] ⊗ Z[K]) in total degree <= max_degree."""
    out = []
    for omega in range(1 << m):
        budget = max_degree - size(omega)
        if budget < 0:
            continue
        for exps in _exponent_vectors(m, budget // 2):
            e = EMonomial(omega, exps)
            if _alive(K, e):
                out.append(e)
    out.sort(key=lambda e: (e.degree, e.exps, lex_key(e.omega)))
    return out


def _exponent_vectors(m: int, total: int):
    for exps in product(range(total + 1), repeat=m):
        if sum(exps) <= total:
            yield exps


def e_differential(x: Chain, K: SimplicialComplex | None = None) -> Chain:
    out = Chain()
    for e, c in x.items():
        for t, i in enumerate(members(e.omega)):
            exps = list(e.exps)
            exps[i - 1] += 1
            e2 = EMonomial(e.omega & ~(1 << (i - 1)), tuple(exps))
            if _alive(K, e2):
                out.add_term(e2, -c if t & 1 else c)
    return out


def e_multiply(a: EMonomial, b: EMonomial, K: SimplicialComplex | None = None):
    if a.omega & b.omega:
        return None
    e = EMonomial(a.omega | b.omega, tuple(x + y for x, y in zip(a.exps, b.exps)))
    if not _alive(K, e):
        return None
    return koszul_sign(a.omega, b.omega), e


def e_multiply_chains(x: Chain, y: Chain, K: SimplicialComplex | None = None) -> Chain:
    out = Chain()
    for a, ca in x.items():
        for b, cb in y.items():
            res = e_multiply(a, b, K)
            if res is not None:
                out.add_term(res[1], res[0] * ca * cb)
    return out


def rho_monomial(e: EMonomial, K: SimplicialComplex | None = None) -> Monomial | None:
    sigma = 0
    for i, a in enumerate(e.exps):
        if a >= 2:
            return None
        if a == 1:
            sigma |= 1 << i
    if sigma & e.omega:
        return None
    if K is not None and sigma not in K.faces:
        return None
    return Monomial(e.omega, sigma)


def rho(x: Chain, K: SimplicialComplex | None = None) -> Chain:
    """Canonical projection onto R*(K) (R*(Δ^{m-1}) when ``K`` is None)."""
    out = Chain()
    for e, c in x.items():
        mono = rho_monomial(e, K)
        if mono is not None:
            out.add_term(mono, c)
    return out


def iota(x: Chain, m: int) -> Chain:
    """Additive section of rho: each basis monomial goes to the same square-free monomial."""
    out = Chain()
    for mono, c in x.items():
        exps = tuple(1 if mono.sigma >> i & 1 else 0 for i in range(m))
        out.add_term(EMonomial(mono.omega, exps), c)
    return out


def _s_monomial(e: EMonomial) -> Chain:
    # s = Σ_t (ιρ)^{⊗(t-1)} ⊗ s_1 ⊗ id^{⊗(m-t)}, tensor factors in coordinate
    # order; s_1(v^a) = u v^(a-1) for a >= 2, zero on 1, v, and u v^a.
    out = Chain()
    for t, a in enumerate(e.exps):
        bit = 1 << t
        in_omega = e.omega & bit
        if not in_omega and a >= 2:
            exps = list(e.exps)
            exps[t] -= 1
            sign = -1 if count_below(e.omega, t + 1) & 1 else 1
            out.add_term(EMonomial(e.omega | bit, tuple(exps)), sign)
        # coordinate t must survive ιρ for later coordinates to contribute
        if a >= 2 or (a == 1 and in_omega):
            break
    return out


def homotopy_s(m: int, x: Chain, K: SimplicialComplex | None = None) -> Chain:
    """Cochain homotopy with ds + sd = id - ιρ on E_m (or its quotient by the face ideal)."""
    out = Chain()
    for e, c in x.items():
        if len(e.exps) != m:
            raise ValueError(f"{e!r} is not an element of E_{m}")
        if not _alive(K, e):
            continue
        for e2, c2 in _s_monomial(e).items():
            if _alive(K, e2):
                out.add_term(e2, c * c2)
    return out
