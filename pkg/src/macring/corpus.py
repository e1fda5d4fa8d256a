"""Named simplicial complexes used by the tests, the verify command and the docs."""

from __future__ import annotations

import random
from itertools import combinations

from .simplicial import SimplicialComplex


def simplex(m: int) -> SimplicialComplex:
    """The full simplex Δ^{m-1} on [m]."""
    return SimplicialComplex.from_facets(m, [list(range(1, m + 1))])


def simplex_boundary(m: int) -> SimplicialComplex:
    """∂Δ^{m-1}: every proper subset of [m]."""
    if m == 1:
        return SimplicialComplex(1, {0})
    return SimplicialComplex.from_facets(m, [list(f) for f in combinations(range(1, m + 1), m - 1)])


def points(k: int) -> SimplicialComplex:
    return SimplicialComplex.from_facets(k, [[i] for i in range(1, k + 1)])


def empty(m: int) -> SimplicialComplex:
    """{∅} on [m]: every vertex is a ghost."""
    return SimplicialComplex(m, {0})


def cycle(n: int) -> SimplicialComplex:
    """Boundary of an n-gon, edges {i, i+1} mod n."""
    return SimplicialComplex.from_facets(n, [[i, i % n + 1] for i in range(1, n + 1)])


def rp2_6() -> SimplicialComplex:
    """Six-vertex triangulation of the real projective plane (hemi-icosahedron)."""
    facets = [
        [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
        [2, 3, 5], [3, 4, 6], [2, 4, 5], [3, 5, 6], [2, 4, 6],
    ]
    return SimplicialComplex.from_facets(6, facets)


def random_complex(m: int, rng: random.Random, max_facets: int | None = None,
                   max_dim: int | None = None) -> SimplicialComplex:
    """Downward closure of a few random facets; vertices may be left as ghosts."""
    if max_facets is None:
        max_facets = m + 2
    if max_dim is None:
        max_dim = min(m, 4) - 1
    facets = []
    for _ in range(rng.randint(0, max_facets)):
        k = rng.randint(1, max_dim + 1)
        facets.append(rng.sample(range(1, m + 1), k))
    return SimplicialComplex.from_facets(m, facets)


def acceptance_corpus(seed: int = 20240607, n_random: int = 20) -> dict[str, SimplicialComplex]:
    """The fixed oracle-equivalence corpus: named families plus seeded random complexes."""
    out: dict[str, SimplicialComplex] = {}
    for m in range(1, 6):
        out[f"simplex{m}"] = simplex(m)
        out[f"boundary{m}"] = simplex_boundary(m)
    for k in range(1, 7):
        out[f"points{k}"] = points(k)
    out["pentagon"] = cycle(5)
    out["hexagon"] = cycle(6)
    out["rp2_6"] = rp2_6()
    out["ghosts3"] = empty(3)
    rng = random.Random(seed)
    for n in range(n_random):
        m = rng.randint(2, 7)
        out[f"random{n:02d}_m{m}"] = random_complex(m, rng)
    return out


def small_corpus() -> dict[str, SimplicialComplex]:
    """Everything in the acceptance corpus with m <= 4."""
    return {name: K for name, K in acceptance_corpus().items() if K.m <= 4}
