"""Subsets of [m] as bit masks, and sparse integer chains.

Vertex ``i`` (1-based) lives at bit ``i - 1``.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Iterator


def mask(vertices: Iterable[int]) -> int:
    out = 0
    for v in vertices:
        out |= 1 << (v - 1)
    return out


def members(s: int) -> list[int]:
    """Sorted 1-based vertices of the mask ``s``."""
    out = []
    i = 1
    while s:
        if s & 1:
            out.append(i)
        s >>= 1
        i += 1
    return out


def size(s: int) -> int:
    return bin(s).count("1")


def lex_key(s: int) -> tuple[int, ...]:
    return tuple(members(s))


def subsets(s: int) -> Iterator[int]:
    """All submasks of ``s``, ascending as integers."""
    sub = 0
    while True:
        yield sub
        if sub == s:
            return
        sub = (sub - s) & s


def count_below(s: int, i: int) -> int:
    """Number of elements of ``s`` strictly smaller than vertex ``i``."""
    return size(s & ((1 << (i - 1)) - 1))


def fmt_set(s: int) -> str:
    return "{" + ",".join(map(str, members(s))) + "}"


class Chain(dict):
    """Finite integer combination of hashable basis keys.

    Zero coefficients are never stored, so two chains are equal exactly when
    they are equal as dicts.
    """

    @classmethod
    def of(cls, key: Hashable, coeff: int = 1) -> "Chain":
        out = cls()
        if coeff:
            out[key] = coeff
        return out

    def add_term(self, key, coeff: int) -> None:
        if not coeff:
            return
        c = self.get(key, 0) + coeff
        if c:
            self[key] = c
        else:
            del self[key]

    def __add__(self, other: "Chain") -> "Chain":
        out = type(self)(self)
        for k, c in other.items():
            out.add_term(k, c)
        return out

    def __sub__(self, other: "Chain") -> "Chain":
        out = type(self)(self)
        for k, c in other.items():
            out.add_term(k, -c)
        return out

    def __neg__(self) -> "Chain":
        return type(self)({k: -c for k, c in self.items()})

    def __rmul__(self, n: int) -> "Chain":
        if not n:
            return type(self)()
        return type(self)({k: n * c for k, c in self.items()})

    def __repr__(self):
        if not self:
            return "Chain(0)"
        return "Chain(" + " + ".join(f"{c}*{k!r}" for k, c in self.items()) + ")"
