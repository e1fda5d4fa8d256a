import random

import pytest

from macring import cellular as cel
from macring import koszul as kz
from macring.cellular import CellWord
from macring.chains import Chain, mask
from macring.corpus import simplex, simplex_boundary
from macring.verify import cellular_checks, diagonal_suite

from oracles import euler_char_cells


def W(word):
    return CellWord.from_word(word)


def dual(*words):
    out = Chain()
    for w in words:
        coeff = 1
        if isinstance(w, tuple):
            coeff, w = w
        out.add_term(W(w), coeff)
    return out


def test_cells_point(point):
    assert {d: [c.word(1) for c in cs] for d, cs in cel.cells(point).items()} == \
        {0: ["1"], 1: ["T"], 2: ["D"]}


def test_cells_two_points_is_s3(two_points):
    cs = cel.cells(two_points)
    assert sum(map(len, cs.values())) == 8
    chi = sum((-1) ** d * len(c) for d, c in cs.items())
    assert chi == euler_char_cells(two_points) == 0


def test_cells_empty_complex(empty1):
    assert {d: [c.word(1) for c in cs] for d, cs in cel.cells(empty1).items()} == {0: ["1"], 1: ["T"]}


def test_cell_word_round_trip():
    c = W("D1T")
    assert c == CellWord(mask([1]), mask([3]))
    assert c.word(3) == "D1T" and c.dim == 3
    with pytest.raises(ValueError):
        W("DX")


def test_boundary_examples():
    assert cel.boundary(W("D"), 1) == dual("T")
    assert cel.boundary(W("T"), 1) == Chain()
    assert cel.boundary(W("1"), 1) == Chain()
    assert cel.boundary(W("DD"), 2) == dual("TD", "DT")
    assert cel.boundary(W("TD"), 2) == dual((-1, "TT"))
    for c in (W("DD"), W("TDD"), W("DTD")):
        assert cel.boundary_chain(cel.boundary(c, 3), 3) == Chain()


def test_cup_examples():
    K = simplex(2)
    assert cel.cup(K, dual("T1"), dual("D1")) == Chain()
    assert cel.cup(K, dual("D1"), dual("1D")) == dual("DD")
    assert cel.cup(simplex_boundary(2), dual("D1"), dual("1D")) == Chain()
    c = dual("TD", (3, "DT"))
    assert cel.cup(K, dual("11"), c) == c == cel.cup(K, c, dual("11"))
    # T ⊗ T terms do not occur in the coproduct of D
    assert cel.cup(simplex(1), dual("T"), dual("T")) == Chain()
    assert cel.cup(K, dual("1T"), dual("T1")) == dual((-1, "TT"))


def test_cup_rejects_mismatched_m():
    with pytest.raises(ValueError):
        cel.cup(simplex(2), dual("11"), dual("11"), m=3)


def test_iso_g_examples():
    K = simplex(2)
    assert cel.iso_g(Chain.of(kz.uv([1], [2]))) == dual("TD")
    assert cel.iso_g(Chain.of(kz.ONE)) == dual("11")
    assert cel.coboundary(K, cel.iso_g(Chain.of(kz.uv([1], [])))) == cel.iso_g(Chain.of(kz.uv([], [1])))
    assert cel.iso_g_inverse(dual("TD")) == Chain.of(kz.uv([1], [2]))


def test_restrict_q_examples():
    K = simplex_boundary(3)
    assert cel.restrict_q(dual("DDD"), K) == Chain()
    assert cel.restrict_q(dual("DT1"), K) == dual("DT1")


def test_cellular_invariants(corpus):
    for K in corpus.values():
        if K.m > 6:
            continue
        res = cellular_checks(K)
        assert res.passed, res.failures


def test_coboundary_is_dual_of_boundary(small_corpus):
    # <δa, e> == <a, ∂e> for all cells a, e
    for K in small_corpus.values():
        all_cells = [c for cs in cel.cells(K).values() for c in cs]
        for a in all_cells:
            da = cel.coboundary(K, Chain.of(a))
            for e in all_cells:
                if e.dim == a.dim + 1:
                    assert da.get(e, 0) == cel.boundary(e, K.m).get(a, 0)


def test_cup_algebra_laws_exhaustive(small_corpus):
    for K in small_corpus.values():
        if K.m > 3:
            continue
        all_cells = [c for cs in cel.cells(K).values() for c in cs]
        unit = Chain.of(CellWord(0, 0))
        for a in all_cells:
            ca = Chain.of(a)
            assert cel.cup(K, unit, ca) == ca == cel.cup(K, ca, unit)
            for b in all_cells:
                cb = Chain.of(b)
                ab = cel.cup(K, ca, cb)
                sign = -1 if a.dim * b.dim % 2 else 1
                assert ab == sign * cel.cup(K, cb, ca)
                lhs = cel.coboundary(K, ab)
                s = -1 if a.dim % 2 else 1
                rhs = cel.cup(K, cel.coboundary(K, ca), cb) + s * cel.cup(K, ca, cel.coboundary(K, cb))
                assert lhs == rhs
                for c in all_cells[::2]:
                    cc = Chain.of(c)
                    assert cel.cup(K, ab, cc) == cel.cup(K, ca, cel.cup(K, cb, cc))


def test_cup_associative_random():
    rng = random.Random(7)
    K = simplex(6)
    all_cells = [c for cs in cel.cells(K).values() for c in cs]
    for _ in range(3000):
        a, b, c = (Chain.of(rng.choice(all_cells)) for _ in range(3))
        assert cel.cup(K, cel.cup(K, a, b), c) == cel.cup(K, a, cel.cup(K, b, c))


def test_g_is_dg_algebra_isomorphism(small_corpus):
    for K in small_corpus.values():
        res = diagonal_suite(K)
        assert res.passed, res.failures
        assert res.detail["products"] == "exhaustive"


def test_number_of_cells_matches_basis(corpus):
    for K in corpus.values():
        basis_counts = {}
        for x in (x for ms in kz.basis(K).values() for x in ms):
            basis_counts[x.degree] = basis_counts.get(x.degree, 0) + 1
        assert basis_counts == cel.cell_census(K)
