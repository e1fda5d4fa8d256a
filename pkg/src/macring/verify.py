"""Verification suites run by ``macring verify`` and by the test-suite.

Each suite returns a :class:`SuiteResult`; ``checks`` counts individual
equalities tested and ``failures`` keeps the first few counterexamples.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import cellular as cel
from . import koszul as kz
from .chains import Chain, size, subsets
from .corpus import simplex
from .hochster import compare
from .simplicial import SimplicialComplex

MAX_FAILURES = 10


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)
    detail: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, what) -> None:
        self.checks += 1
        if not ok and len(self.failures) < MAX_FAILURES:
            self.failures.append(what() if callable(what) else str(what))

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "pass": self.passed,
            "detail": {"checks": self.checks, "failures": self.failures, **self.detail},
        }


def all_monomials(K: SimplicialComplex) -> list[kz.Monomial]:
    return [mono for ms in kz.basis(K).values() for mono in ms]


def _random_pair(rng: random.Random, monos: list[kz.Monomial], m: int):
    a = rng.choice(monos)
    if rng.random() < 0.5:
        # bias towards factors with disjoint supports, whose product can be nonzero
        free = ((1 << m) - 1) & ~a.support
        pool = [b for b in monos if not b.support & ~free]
        if pool:
            return a, rng.choice(pool)
    return a, rng.choice(monos)


def hochster_suite(K: SimplicialComplex) -> SuiteResult:
    res = SuiteResult("hochster")
    mismatches = compare(K)
    res.check(not mismatches, lambda: "; ".join(map(str, mismatches)))
    return res


def homotopy_suite(K: SimplicialComplex, truncate: int | None = None) -> SuiteResult:
    """ds + sd = id - ιρ on E_m and on Λ[u] ⊗ Z[K], both truncated at ``truncate``.

    An element of degree n needs d of it (degree n + 1) inside the truncated
    model, and s of that; the identity is asserted for degree <= truncate - 2.
    """
    m = K.m
    if truncate is None:
        truncate = 2 * m + 2
    through = truncate - 2
    res = SuiteResult("homotopy", detail={"m": m, "truncate": truncate, "checked_through_degree": through})
    for label, model in (("E_m", None), ("quotient", K)):
        for e in kz.e_basis(m, through, model):
            x = Chain.of(e)
            lhs = kz.e_differential(kz.homotopy_s(m, x, model), model) + \
                kz.homotopy_s(m, kz.e_differential(x, model), model)
            rhs = x - kz.iota(kz.rho(x, model), m)
            res.check(lhs == rhs, lambda: f"{label}: (ds+sd)({e!r}) = {lhs!r}, expected {rhs!r}")
    return res


def diagonal_suite(K: SimplicialComplex, samples: int = 10_000, seed: int = 0,
                   exhaustive_limit: int = 300) -> SuiteResult:
    """g is a DG-algebra isomorphism R*(K) -> C*(Z_K), and q∘f = g∘p.

    Products are checked on all pairs of basis monomials when there are at
    most ``exhaustive_limit`` of them, otherwise on ``samples`` random pairs.
    """
    rng = random.Random(seed)
    m = K.m
    res = SuiteResult("diagonal")
    monos = all_monomials(K)
    cell_list = [c for cs in cel.cells(K).values() for c in cs]
    images = sorted(next(iter(cel.iso_g(Chain.of(x)))) for x in monos)
    res.check(images == sorted(cell_list), "g is not a bijection onto the cells of Z_K")
    for x in monos:
        cx = Chain.of(x)
        gx = cel.iso_g(cx)
        (cell,) = gx
        res.check(cell.dim == x.degree, lambda: f"g({x!r}) has dimension {cell.dim}")
        lhs = cel.iso_g(kz.differential(K, cx))
        rhs = cel.coboundary(K, gx)
        res.check(lhs == rhs, lambda: f"g(d {x!r}) = {lhs!r} but δ g = {rhs!r}")

    def mult(a, b):
        lhs = cel.iso_g(kz.multiply_chains(K, Chain.of(a), Chain.of(b)))
        rhs = cel.cup(K, cel.iso_g(Chain.of(a)), cel.iso_g(Chain.of(b)))
        res.check(lhs == rhs, lambda: f"g({a!r}*{b!r}) = {lhs!r} but g⌣g = {rhs!r}")

    if len(monos) <= exhaustive_limit:
        for a in monos:
            for b in monos:
                mult(a, b)
        res.detail["products"] = "exhaustive"
    else:
        for _ in range(samples):
            mult(*_random_pair(rng, monos, m))
        res.detail["products"] = f"{samples} random pairs"

    full = simplex(m)
    full_monos = all_monomials(full)
    if len(full_monos) <= 3 ** 6:
        square = full_monos
    else:
        square = [rng.choice(full_monos) for _ in range(samples)]
    for x in square:
        cx = Chain.of(x)
        lhs = cel.restrict_q(cel.iso_f(cx), K)
        rhs = cel.iso_g(kz.restrict_to_subcomplex(full, K, cx))
        res.check(lhs == rhs, lambda: f"q f({x!r}) != g p({x!r})")
    return res


def axioms_suite(K: SimplicialComplex, samples: int = 2_000, seed: int = 0) -> SuiteResult:
    """d² = 0, Leibniz, associativity, graded commutativity, ρ multiplicative, ρι = id."""
    rng = random.Random(seed)
    m = K.m
    res = SuiteResult("axioms")
    monos = all_monomials(K)
    d = lambda x: kz.differential(K, x) if x else Chain()  # noqa: E731
    mul = lambda x, y: kz.multiply_chains(K, x, y)  # noqa: E731

    for x in monos:
        cx = Chain.of(x)
        res.check(not d(d(cx)), lambda: f"d²({x!r}) != 0")
        res.check(kz.rho(kz.iota(cx, m), K) == cx, lambda: f"ρι({x!r}) != {x!r}")

    for _ in range(samples):
        a, b = _random_pair(rng, monos, m)
        c = rng.choice(monos)
        ca, cb, cc = Chain.of(a), Chain.of(b), Chain.of(c)
        sign_ab = -1 if a.degree & 1 else 1
        lhs = d(mul(ca, cb))
        rhs = mul(d(ca), cb) + sign_ab * mul(ca, d(cb))
        res.check(lhs == rhs, lambda: f"Leibniz fails on {a!r}, {b!r}")
        comm = -1 if (a.degree * b.degree) & 1 else 1
        res.check(mul(ca, cb) == comm * mul(cb, ca), lambda: f"{a!r}, {b!r} do not graded-commute")
        res.check(mul(mul(ca, cb), cc) == mul(ca, mul(cb, cc)),
                  lambda: f"associativity fails on {a!r}, {b!r}, {c!r}")

    # ρ is a ring map from the Stanley-Reisner quotient of E_m
    pool = kz.e_basis(m, min(2 * m + 2, 8), K)
    for _ in range(samples):
        x, y = rng.choice(pool), rng.choice(pool)
        cx, cy = Chain.of(x), Chain.of(y)
        lhs = kz.rho(kz.e_multiply_chains(cx, cy, K), K)
        rhs = kz.multiply_chains(K, kz.rho(cx, K), kz.rho(cy, K))
        res.check(lhs == rhs, lambda: f"ρ({x!r}*{y!r}) != ρ(x)ρ(y)")
    return res


SUITES = ("hochster", "homotopy", "diagonal", "axioms")


def run_suites(K: SimplicialComplex, names, truncate: int | None = None,
               samples: int = 10_000, seed: int = 0) -> list[SuiteResult]:
    out = []
    for name in SUITES:
        if name not in names:
            continue
        if name == "hochster":
            out.append(hochster_suite(K))
        elif name == "homotopy":
            out.append(homotopy_suite(K, truncate))
        elif name == "diagonal":
            out.append(diagonal_suite(K, samples, seed))
        else:
            out.append(axioms_suite(K, max(samples // 5, 1), seed))
    return out


def cellular_checks(K: SimplicialComplex) -> SuiteResult:
    """∂² = 0 on cells, δ² = 0 on cochains, cell count per degree equals the R*(K) basis count."""
    res = SuiteResult("cellular")
    m = K.m
    by_dim = cel.cells(K)
    for cs in by_dim.values():
        for c in cs:
            res.check(not cel.boundary_chain(cel.boundary(c, m), m), lambda: f"∂²{c!r} != 0")
            res.check(not cel.coboundary(K, cel.coboundary(K, Chain.of(c))), lambda: f"δ²{c!r}* != 0")
    counts: dict[int, int] = {}
    for sigma in K.faces:
        for omega in subsets(K.full_mask & ~sigma):
            n = size(omega) + 2 * size(sigma)
            counts[n] = counts.get(n, 0) + 1
    res.check(counts == {d: len(cs) for d, cs in by_dim.items()}, "cell census differs from basis census")
    return res
