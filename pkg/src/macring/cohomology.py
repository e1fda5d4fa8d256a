"""Bigraded cohomology H^{-i,2j}(R*(K)) and its ring structure.

The differential of R*(K) preserves the support ω ∪ σ of a monomial, so each
bidegree splits into independent blocks, one per support set S with |S| = j.
That split is the default; ``split=False`` assembles one matrix per bidegree
instead and exists as a cross-check.

Table keys are ``(i, j2)`` for the bidegree (-i, j2), with j2 = 2j even.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .chains import Chain, lex_key, size, subsets
from .intlinalg import (
    AbelianGroup,
    CohomologyData,
    IntMatrix,
    InconsistentComplex,
    cohomology_at,
    cohomology_group,
)
from .koszul import Monomial, basis, basis_of_support, d_monomial, multiply_chains
from .simplicial import SimplicialComplex


def _support_order(m: int) -> list[int]:
    return sorted(range(1 << m), key=lambda s: (size(s), lex_key(s)))


def _d_matrix(K: SimplicialComplex, source: list[Monomial], target: list[Monomial]) -> IntMatrix:
    index = {mono: n for n, mono in enumerate(target)}
    entries = {}
    for col, mono in enumerate(source):
        for m2, c in d_monomial(K, mono).items():
            entries[index[m2], col] = c
    return IntMatrix(len(target), len(source), entries)


@dataclass
class _Block:
    basis: list[Monomial]
    index: dict[Monomial, int]
    data: CohomologyData


@dataclass
class BidegreeCohomology:
    """H^{-i, j2} with generators, their orders (0 = infinite) and coordinates."""

    i: int
    j2: int
    group: AbelianGroup
    generators: list[Chain] = field(default_factory=list)
    orders: list[int] = field(default_factory=list)
    blocks: list[_Block] = field(default_factory=list, repr=False)

    @property
    def bidegree(self) -> tuple[int, int]:
        return -self.i, self.j2

    @property
    def degree(self) -> int:
        return self.j2 - self.i

    def coordinates(self, x: Chain) -> list[int]:
        """Coordinates of a cocycle in the generators (torsion ones reduced)."""
        located: dict[int, dict[int, int]] = {}
        for mono, c in x.items():
            for n, blk in enumerate(self.blocks):
                k = blk.index.get(mono)
                if k is not None:
                    located.setdefault(n, {})[k] = c
                    break
            else:
                raise InconsistentComplex(
                    f"{mono!r} is not a basis element of bidegree {self.bidegree}")
        out = []
        for n, blk in enumerate(self.blocks):
            vec = located.get(n, {})
            if not blk.data.is_cocycle(vec):
                raise InconsistentComplex(f"chain is not a cocycle in bidegree {self.bidegree}")
            out.extend(blk.data.coordinates(vec, check=False))
        return out

    def combination(self, coords) -> Chain:
        out = Chain()
        for c, gen in zip(coords, self.generators):
            if c:
                out = out + c * gen
        return out


@dataclass
class BigradedTable:
    K: SimplicialComplex
    entries: dict[tuple[int, int], BidegreeCohomology]
    with_representatives: bool = True

    @property
    def m(self) -> int:
        return self.K.m

    def group(self, i: int, j2: int) -> AbelianGroup:
        e = self.entries.get((i, j2))
        return e.group if e is not None else AbelianGroup()

    def nonzero(self) -> dict[tuple[int, int], AbelianGroup]:
        return {k: e.group for k, e in self.entries.items() if not e.group.is_zero()}

    def total_degree(self, n: int) -> AbelianGroup:
        out = AbelianGroup()
        for e in self.entries.values():
            if e.degree == n:
                out = out + e.group
        return out

    def to_dict(self) -> dict:
        return {
            "schema": "macring/1",
            "m": self.m,
            "entries": [
                {"i": i, "j2": j2, "rank": e.group.rank, "torsion": list(e.group.torsion)}
                for (i, j2), e in sorted(self.entries.items(), key=lambda kv: (kv[0][1], kv[0][0]))
            ],
        }


def _block_data(K, bases: dict[int, list[Monomial]], i: int, with_reps: bool):
    here = bases[i]
    below = bases.get(i - 1, [])
    above = bases.get(i + 1, [])
    d_out = _d_matrix(K, here, below)
    d_in = _d_matrix(K, above, here)
    if with_reps:
        return cohomology_at(d_in, d_out)
    return cohomology_group(d_in, d_out)


def bigraded_cohomology(K: SimplicialComplex, split: bool = True,
                        representatives: bool = True) -> BigradedTable:
    """H of R*(K) in every bidegree whose basis is nonempty.

    With ``representatives=False`` only the isomorphism types are computed,
    skipping the transformation matrices.
    """
    entries: dict[tuple[int, int], BidegreeCohomology] = {}

    def entry(i, j2):
        e = entries.get((i, j2))
        if e is None:
            e = entries[i, j2] = BidegreeCohomology(i, j2, AbelianGroup())
        return e

    def absorb(e: BidegreeCohomology, bas: list[Monomial], data) -> None:
        if not representatives:
            e.group = e.group + data
            return
        e.group = e.group + data.group
        e.blocks.append(_Block(bas, {mono: n for n, mono in enumerate(bas)}, data))
        for rep, order in zip(data.representatives, data.orders):
            e.generators.append(Chain({bas[k]: c for k, c in sorted(rep.items())}))
            e.orders.append(order)

    if split:
        for S in _support_order(K.m):
            bases = basis_of_support(K, S)
            j2 = 2 * size(S)
            for i in sorted(bases):
                absorb(entry(i, j2), bases[i], _block_data(K, bases, i, representatives))
    else:
        by_bideg = basis(K)
        for (neg_i, j2) in by_bideg:
            bases = {-a: by_bideg.get((a, j2), []) for a in (neg_i - 1, neg_i, neg_i + 1)}
            i = -neg_i
            absorb(entry(i, j2), bases[i], _block_data(K, bases, i, representatives))

    ordered = dict(sorted(entries.items(), key=lambda kv: (kv[0][1], kv[0][0])))
    return BigradedTable(K, ordered, representatives)


def poincare_series(table: BigradedTable) -> dict[int, int]:
    """``{n: rank H^n}`` for the degrees with nonzero rank."""
    out: dict[int, int] = {}
    for e in table.entries.values():
        if e.group.rank:
            out[e.degree] = out.get(e.degree, 0) + e.group.rank
    return dict(sorted(out.items()))


def format_series(series: dict[int, int]) -> str:
    terms = []
    for n, c in series.items():
        mono = "" if n == 0 else ("t" if n == 1 else f"t^{n}")
        terms.append(str(c) if n == 0 else (mono if c == 1 else f"{c}{mono}"))
    return " + ".join(terms) if terms else "0"


def cup_on_cohomology(table: BigradedTable, a, b):
    """Product of two classes given as ``((i, j2), coords)``; returns the same shape.

    Representatives are multiplied in R*(K) and the product cocycle is
    expressed in the generators of the target bidegree.
    """
    if not table.with_representatives:
        raise ValueError("table was computed without representatives")
    (ka, ca), (kb, cb) = a, b
    ea, eb = table.entries[ka], table.entries[kb]
    x = multiply_chains(table.K, ea.combination(ca), eb.combination(cb))
    target = (ka[0] + kb[0], ka[1] + kb[1])
    et = table.entries.get(target)
    if et is None:
        if x:
            raise InconsistentComplex(f"nonzero product in empty bidegree {target}")
        return target, []
    return target, et.coordinates(x)


@dataclass
class Generator:
    i: int
    j2: int
    index: int  # position within its bidegree
    representative: Chain
    order: int  # 0 = infinite

    @property
    def degree(self) -> int:
        return self.j2 - self.i


@dataclass
class RingPresentation:
    m: int
    generators: list[Generator]
    products: dict[tuple[int, int], dict[int, int]]

    def product(self, a: int, b: int) -> dict[int, int]:
        """Product of generators ``a`` and ``b`` (graded commutativity fills in a > b)."""
        if a <= b:
            return self.products.get((a, b), {})
        ga, gb = self.generators[a], self.generators[b]
        sign = -1 if (ga.degree * gb.degree) & 1 else 1
        out = {}
        for k, c in self.products.get((b, a), {}).items():
            order = self.generators[k].order
            c = sign * c
            if order:
                c %= order
            if c:
                out[k] = c
        return out

    def to_dict(self) -> dict:
        gens = []
        for n, g in enumerate(self.generators):
            gens.append({
                "id": n,
                "i": g.i,
                "j2": g.j2,
                "degree": g.degree,
                "order": g.order,
                "representative": [
                    {"omega": _verts(mono.omega), "sigma": _verts(mono.sigma), "coeff": c}
                    for mono, c in sorted(g.representative.items(), key=lambda kv: kv[0].sort_key())
                ],
            })
        prods = [
            {"left": a, "right": b, "result": [{"id": k, "coeff": c} for k, c in sorted(res.items())]}
            for (a, b), res in sorted(self.products.items())
            if res
        ]
        return {"schema": "macring/1", "m": self.m, "generators": gens, "products": prods}


def _verts(s: int) -> list[int]:
    return list(lex_key(s))


def ring_presentation(K: SimplicialComplex, table: BigradedTable | None = None) -> RingPresentation:
    """All generators of H(R*(K)) and every product of pairs of them.

    Products are tabulated for unordered pairs; the result is nonzero only if
    the target bidegree is populated.
    """
    if table is None:
        table = bigraded_cohomology(K)
    gens: list[Generator] = []
    where: dict[tuple[int, int], list[int]] = {}
    for (i, j2), e in table.entries.items():
        for k, (rep, order) in enumerate(zip(e.generators, e.orders)):
            where.setdefault((i, j2), []).append(len(gens))
            gens.append(Generator(i, j2, k, rep, order))

    products: dict[tuple[int, int], dict[int, int]] = {}
    for a, ga in enumerate(gens):
        for b in range(a, len(gens)):
            gb = gens[b]
            target = (ga.i + gb.i, ga.j2 + gb.j2)
            if target not in where:
                products[a, b] = {}
                continue
            unit_a = [0] * len(table.entries[ga.i, ga.j2].generators)
            unit_a[ga.index] = 1
            unit_b = [0] * len(table.entries[gb.i, gb.j2].generators)
            unit_b[gb.index] = 1
            _, coords = cup_on_cohomology(table, ((ga.i, ga.j2), unit_a), ((gb.i, gb.j2), unit_b))
            products[a, b] = {where[target][k]: c for k, c in enumerate(coords) if c}
    return RingPresentation(K.m, gens, products)
