"""Cellular chains and cochains of the moment-angle complex Z_K ⊆ (D^2)^m.

Each disc is split into a vertex ``1``, an open arc ``T`` and an open disc
``D``, so a cell of (D^2)^m is a word in {D, T, 1}^m.  The word with ``D`` at
the positions of σ and ``T`` at the positions of ω is a cell of Z_K exactly
when σ ∈ K.

Orientations: ``D`` carries the standard orientation, ``T`` runs by increasing
angle, so ∂D = T.  Products of cells use the usual tensor boundary with the
Koszul sign (-1)^(sum of dimensions to the left).

The cup product is dual to the coproduct induced by the cellular diagonal
approximation of the disc, which on one factor reads

    1 -> 1⊗1,   T -> T⊗1 + 1⊗T,   D -> D⊗1 + 1⊗D.

There is no T⊗T term in the coproduct of D; that is what makes the cochain
algebra satisfy u_i v_i = v_i^2 = 0.  Cochains are evaluated on tensors
without an extra sign: (α⊗β)(a⊗b) = α(a)β(b).
"""

from __future__ import annotations

from typing import NamedTuple

from .chains import Chain, fmt_set, lex_key, size, subsets
from .koszul import Monomial
from .simplicial import SimplicialComplex

LETTER_DIM = {"1": 0, "T": 1, "D": 2}

# single-factor coproduct: cell -> list of (left, right)
COPRODUCT = {
    "1": [("1", "1")],
    "T": [("T", "1"), ("1", "T")],
    "D": [("D", "1"), ("1", "D")],
}
_COPRODUCT_INV = {pair: cell for cell, pairs in COPRODUCT.items() for pair in pairs}


class CellWord(NamedTuple):
    """The cell with ``D`` on σ and ``T`` on ω (bit masks)."""

    sigma: int
    omega: int

    @property
    def dim(self) -> int:
        return 2 * size(self.sigma) + size(self.omega)

    def letter(self, i: int) -> str:
        bit = 1 << (i - 1)
        if self.sigma & bit:
            return "D"
        if self.omega & bit:
            return "T"
        return "1"

    def word(self, m: int) -> str:
        return "".join(self.letter(i) for i in range(1, m + 1))

    @classmethod
    def from_word(cls, word: str) -> "CellWord":
        sigma = omega = 0
        for i, ch in enumerate(word):
            if ch == "D":
                sigma |= 1 << i
            elif ch == "T":
                omega |= 1 << i
            elif ch != "1":
                raise ValueError(f"bad letter {ch!r} in cell word {word!r}")
        return cls(sigma, omega)

    def sort_key(self):
        return lex_key(self.sigma), lex_key(self.omega)

    def __repr__(self):
        return f"T({fmt_set(self.sigma)},{fmt_set(self.omega)})"


def is_cell(K: SimplicialComplex, cell: CellWord) -> bool:
    return not (cell.sigma & cell.omega) and cell.sigma in K.faces


def cells(K: SimplicialComplex) -> dict[int, list[CellWord]]:
    """Cells of Z_K by dimension, each list in (σ, ω) lex order."""
    out: dict[int, list[CellWord]] = {}
    full = K.full_mask
    for sigma in K.faces:
        for omega in subsets(full & ~sigma):
            c = CellWord(sigma, omega)
            out.setdefault(c.dim, []).append(c)
    for d in out:
        out[d].sort(key=CellWord.sort_key)
    return dict(sorted(out.items()))


def cell_census(K: SimplicialComplex) -> dict[int, int]:
    return {d: len(cs) for d, cs in cells(K).items()}


def boundary(cell: CellWord, m: int) -> Chain:
    """Cellular boundary, computed factor by factor (only ∂D = T is nonzero)."""
    out = Chain()
    left_dim = 0
    for i in range(1, m + 1):
        ch = cell.letter(i)
        if ch == "D":
            bit = 1 << (i - 1)
            sign = -1 if left_dim & 1 else 1
            out.add_term(CellWord(cell.sigma & ~bit, cell.omega | bit), sign)
        left_dim += LETTER_DIM[ch]
    return out


def boundary_chain(x: Chain, m: int) -> Chain:
    out = Chain()
    for cell, c in x.items():
        for c2, k in boundary(cell, m).items():
            out.add_term(c2, c * k)
    return out


def coboundary(K: SimplicialComplex, x: Chain) -> Chain:
    """δc = c∘∂, restricted to cells of Z_K."""
    m = K.m
    out = Chain()
    for cell, c in x.items():
        # cells whose boundary can contain `cell`: turn one T into a D
        for i in range(1, m + 1):
            bit = 1 << (i - 1)
            if not cell.omega & bit:
                continue
            top = CellWord(cell.sigma | bit, cell.omega & ~bit)
            if not is_cell(K, top):
                continue
            k = boundary(top, m).get(cell, 0)
            if k:
                out.add_term(top, c * k)
    return out


def cup_cells(K: SimplicialComplex, a: CellWord, b: CellWord):
    """Cup product of dual basis cochains: ``(sign, cell)`` or ``None``.

    Walks the factors left to right, looking up the pair of letters in the
    coproduct table and accumulating the sign for moving each left-hand
    factor past the right-hand factors already emitted.
    """
    sigma = omega = 0
    right_parity = 0
    sign = 1
    for i in range(1, K.m + 1):
        la, lb = a.letter(i), b.letter(i)
        target = _COPRODUCT_INV.get((la, lb))
        if target is None:
            return None
        if LETTER_DIM[la] & 1 and right_parity:
            sign = -sign
        right_parity ^= LETTER_DIM[lb] & 1
        bit = 1 << (i - 1)
        if target == "D":
            sigma |= bit
        elif target == "T":
            omega |= bit
    c = CellWord(sigma, omega)
    if not is_cell(K, c):
        return None
    return sign, c


def cup(K: SimplicialComplex, x: Chain, y: Chain, m: int | None = None) -> Chain:
    if m is not None and m != K.m:
        raise ValueError(f"cochains on m={m} cannot be multiplied in a complex with m={K.m}")
    out = Chain()
    for a, ca in x.items():
        for b, cb in y.items():
            res = cup_cells(K, a, b)
            if res is not None:
                out.add_term(res[1], res[0] * ca * cb)
    return out


def iso_g(x: Chain) -> Chain:
    """u_ω v_σ -> T(σ, ω)^*."""
    return Chain({CellWord(mono.sigma, mono.omega): c for mono, c in x.items()})


def iso_g_inverse(x: Chain) -> Chain:
    return Chain({Monomial(cell.omega, cell.sigma): c for cell, c in x.items()})


def iso_f(x: Chain) -> Chain:
    """g for the full simplex: R*(Δ^{m-1}) -> C*((D^2)^m)."""
    return iso_g(x)


def restrict_q(c: Chain, K: SimplicialComplex) -> Chain:
    """C*((D^2)^m) -> C*(Z_K): forget dual cells that are not cells of Z_K."""
    return Chain({cell: k for cell, k in c.items() if is_cell(K, cell)})
