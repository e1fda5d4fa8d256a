"""Finite simplicial complexes on the ground set [m] = {1, ..., m}.

Faces are stored as bit masks (see :mod:`macring.chains`).  Vertices need not
be faces themselves ("ghost" vertices), which is why ``m`` is carried
separately from the face set.

The JSON exchange format is ``{"m": 3, "facets": [[1, 2], [1, 3], [2, 3]]}``.
"""

from __future__ import annotations

import json
from functools import cached_property

from .chains import lex_key, mask, members, size, subsets
from .intlinalg import IntMatrix

MAX_M = 63


class ComplexFormatError(ValueError):
    """Raised for malformed complex documents; the message names the location."""


class SimplicialComplex:
    """Downward-closed family of subsets of [m], always containing the empty face."""

    __slots__ = ("m", "faces", "__dict__")

    def __init__(self, m: int, faces):
        if not isinstance(m, int) or m < 1 or m > MAX_M:
            raise ComplexFormatError(f"m: expected an integer in 1..{MAX_M}, got {m!r}")
        faces = frozenset(faces) | {0}
        full = (1 << m) - 1
        for f in faces:
            if f & ~full:
                raise ComplexFormatError(f"face {members(f)} is not a subset of [{m}]")
            for sub in subsets(f):
                if sub not in faces:
                    raise ComplexFormatError(
                        f"face {members(f)} has non-face subset {members(sub)}")
        self.m = m
        self.faces = faces

    @classmethod
    def from_facets(cls, m: int, facets) -> "SimplicialComplex":
        faces = {0}
        for facet in facets:
            f = facet if isinstance(facet, int) else mask(facet)
            if f not in faces:
                faces.update(subsets(f))
        return cls(m, faces)

    # ---- basic queries -------------------------------------------------

    def __contains__(self, s: int) -> bool:
        return s in self.faces

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.m == other.m and self.faces == other.faces

    def __hash__(self):
        return hash((self.m, self.faces))

    def __repr__(self):
        return f"SimplicialComplex(m={self.m}, facets={[members(f) for f in self.facets]})"

    def __len__(self):
        return len(self.faces)

    @property
    def full_mask(self) -> int:
        return (1 << self.m) - 1

    @cached_property
    def dim(self) -> int:
        return max(size(f) for f in self.faces) - 1

    @cached_property
    def facets(self) -> list[int]:
        """Maximal nonempty faces in canonical order."""
        out = []
        for f in self.faces:
            if not f:
                continue
            rest = ~f & self.full_mask
            maximal = True
            while rest:
                bit = rest & -rest
                rest ^= bit
                if f | bit in self.faces:
                    maximal = False
                    break
            if maximal:
                out.append(f)
        return sorted(out, key=lambda f: (size(f), lex_key(f)))

    @cached_property
    def face_table(self) -> dict[int, list[int]]:
        """Faces grouped by dimension, each list in lexicographic vertex order.

        Dimension -1 holds exactly the empty face.
        """
        table: dict[int, list[int]] = {}
        for f in self.faces:
            table.setdefault(size(f) - 1, []).append(f)
        for d in table:
            table[d].sort(key=lex_key)
        return dict(sorted(table.items()))

    def f_vector(self) -> list[int]:
        """Face counts for dimensions -1, 0, 1, ..."""
        return [len(self.face_table[d]) for d in range(-1, self.dim + 1)]

    def is_subcomplex_of(self, other: "SimplicialComplex") -> bool:
        return self.m == other.m and self.faces <= other.faces

    # ---- serialization --------------------------------------------------

    def to_dict(self) -> dict:
        return {"m": self.m, "facets": [members(f) for f in self.facets]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def is_face(K: SimplicialComplex, s: int) -> bool:
    return s in K.faces


def full_subcomplex(K: SimplicialComplex, omega: int):
    """Faces of ``K`` inside ``omega``, relabelled onto 1..|omega|.

    Returns ``(K_omega, relabel)`` where ``relabel`` maps each new vertex to the
    original one.  For ``omega`` empty the result is the complex {∅} on a
    one-point ground set, since a ground set must be nonempty; callers that
    need the true vertex count use ``len(relabel)``.
    """
    verts = members(omega)
    relabel = {new: old for new, old in enumerate(verts, start=1)}
    pos = {old: new for new, old in relabel.items()}
    faces = set()
    for f in K.faces:
        if f & ~omega:
            continue
        faces.add(mask(pos[v] for v in members(f)))
    return SimplicialComplex(max(len(verts), 1), faces), relabel


def parse_complex(text: str) -> SimplicialComplex:
    """Parse the JSON exchange format, returning the downward closure of the facets."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ComplexFormatError(f"malformed JSON at line {e.lineno} column {e.colno}: {e.msg}") from e
    return complex_from_dict(doc)


def complex_from_dict(doc) -> SimplicialComplex:
    if not isinstance(doc, dict):
        raise ComplexFormatError("document: expected a JSON object")
    if "m" not in doc:
        raise ComplexFormatError("m: missing field")
    m = doc["m"]
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise ComplexFormatError(f"m: expected a positive integer, got {m!r}")
    if m > MAX_M:
        raise ComplexFormatError(f"m: {m} exceeds the supported maximum {MAX_M}")
    facets = doc.get("facets")
    if not isinstance(facets, list):
        raise ComplexFormatError("facets: expected a list of vertex lists")
    masks = []
    for k, facet in enumerate(facets):
        if not isinstance(facet, list):
            raise ComplexFormatError(f"facets[{k}]: expected a list of vertices")
        seen = set()
        for n, v in enumerate(facet):
            where = f"facets[{k}][{n}]"
            if isinstance(v, bool) or not isinstance(v, int):
                raise ComplexFormatError(f"{where}: expected an integer vertex, got {v!r}")
            if not 1 <= v <= m:
                raise ComplexFormatError(f"{where}: vertex {v} out of range 1..{m}")
            if v in seen:
                raise ComplexFormatError(f"{where}: duplicate vertex {v} in facet")
            seen.add(v)
        masks.append(mask(facet))
    return SimplicialComplex.from_facets(m, masks)


def load_complex(path) -> SimplicialComplex:
    with open(path) as fh:
        return parse_complex(fh.read())


def reduced_cochain_complex(K: SimplicialComplex) -> dict[int, IntMatrix]:
    """Augmented simplicial coboundaries ``{d: delta^d}`` for d = -1 .. dim-1.

    ``delta^d`` has rows indexed by the (d+1)-faces and columns by the d-faces,
    both in face-table order.  The entry for a (d+1)-face tau and its face
    obtained by deleting the k-th vertex (0-based) is (-1)^k.
    """
    table = K.face_table
    out = {}
    for d in range(-1, K.dim):
        lower = table[d]
        upper = table[d + 1]
        index = {f: n for n, f in enumerate(lower)}
        entries = {}
        for r, tau in enumerate(upper):
            for k, v in enumerate(members(tau)):
                entries[r, index[tau & ~(1 << (v - 1))]] = -1 if k % 2 else 1
        out[d] = IntMatrix(len(upper), len(lower), entries)
    return out
