"""Hochster's formula as an independent additive check.

    Tor^{-i,2j}(Z[K], Z) = ⊕_{|ω| = j} H̃^{j-i-1}(K_ω; Z)

Everything here goes through simplicial coboundary matrices of full
subcomplexes; nothing is shared with the Koszul algebra code.  The empty
complex {∅} has H̃^{-1} = Z, which is what populates bidegree (0, 0).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .chains import mask
from .intlinalg import AbelianGroup, IntMatrix, cohomology_group
from .simplicial import SimplicialComplex, full_subcomplex, reduced_cochain_complex


def reduced_cohomology(K: SimplicialComplex) -> dict[int, AbelianGroup]:
    """``{d: H̃^d(K; Z)}`` for d = -1 .. dim K."""
    deltas = reduced_cochain_complex(K)
    n = {d: len(fs) for d, fs in K.face_table.items()}
    out = {}
    for d in range(-1, K.dim + 1):
        d_in = deltas.get(d - 1, IntMatrix(n[d], 0))
        d_out = deltas.get(d, IntMatrix(0, n[d]))
        out[d] = cohomology_group(d_in, d_out)
    return out


@dataclass
class OracleReport:
    """Groups keyed by ``(i, j2)`` plus the nonzero per-subset contributions."""

    groups: dict[tuple[int, int], AbelianGroup] = field(default_factory=dict)
    log: list[tuple[tuple[int, ...], int, AbelianGroup]] = field(default_factory=list)

    def group(self, i: int, j2: int) -> AbelianGroup:
        return self.groups.get((i, j2), AbelianGroup())


class HochsterOracle:
    """Caches H̃*(K_ω) per subset ω.

    ``shift`` is the degree offset in H̃^{j-i-shift}; anything other than 1
    is wrong and only exists so the comparison harness can be tested.
    """

    def __init__(self, K: SimplicialComplex, shift: int = 1):
        self.K = K
        self.shift = shift
        self._cache = lru_cache(maxsize=None)(self._full_sub_cohomology)

    def _full_sub_cohomology(self, omega: tuple[int, ...]) -> dict[int, AbelianGroup]:
        sub, _ = full_subcomplex(self.K, mask(omega))
        return reduced_cohomology(sub)

    def bigraded(self, i: int, j: int) -> AbelianGroup:
        if not 0 <= j <= self.K.m:
            raise ValueError(f"j={j} outside 0..{self.K.m}")
        out = AbelianGroup()
        for omega in combinations(range(1, self.K.m + 1), j):
            out = out + self._cache(omega).get(j - i - self.shift, AbelianGroup())
        return out

    def report(self) -> OracleReport:
        rep = OracleReport()
        m = self.K.m
        for j in range(m + 1):
            for omega in combinations(range(1, m + 1), j):
                for d, grp in self._cache(omega).items():
                    if grp.is_zero():
                        continue
                    i = j - d - self.shift
                    key = (i, 2 * j)
                    rep.groups[key] = rep.group(*key) + grp
                    rep.log.append((omega, d, grp))
        rep.groups = dict(sorted(rep.groups.items(), key=lambda kv: (kv[0][1], kv[0][0])))
        return rep


def oracle_bigraded(K: SimplicialComplex, i: int, j: int) -> AbelianGroup:
    """⊕_{|ω|=j} H̃^{j-i-1}(K_ω; Z)."""
    return HochsterOracle(K).bigraded(i, j)


@dataclass
class Mismatch:
    i: int
    j2: int
    engine: AbelianGroup
    oracle: AbelianGroup

    def __str__(self):
        return f"({-self.i},{self.j2}): engine {self.engine}, oracle {self.oracle}"


def compare(K: SimplicialComplex, shift: int = 1, table=None) -> list[Mismatch]:
    """Every bidegree where the Koszul-side groups and the Hochster groups differ."""
    from .cohomology import bigraded_cohomology

    if table is None:
        table = bigraded_cohomology(K, representatives=False)
    report = HochsterOracle(K, shift).report()
    keys = set(table.nonzero()) | set(report.groups)
    out = []
    for i, j2 in sorted(keys, key=lambda k: (k[1], k[0])):
        a, b = table.group(i, j2), report.group(i, j2)
        if a != b:
            out.append(Mismatch(i, j2, a, b))
    return out
