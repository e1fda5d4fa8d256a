"""Exact linear algebra over the integers.

Everything here works on sparse matrices with Python ``int`` entries, so
intermediate coefficient growth never overflows.  The central routine is
:func:`smith_normal_form`; cohomology groups, integral solving and cocycle
coordinates are all read off its transformation matrices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd


class InconsistentComplex(ValueError):
    """Raised when a pair of maps handed to :func:`cohomology_at` does not compose to zero."""


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(x, y, g)`` with ``x*a + y*b == g == gcd(a, b) >= 0``."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def _axpy(dst: dict, src: dict, q: int) -> None:
    # dst += q * src, in place
    for k, v in src.items():
        w = dst.get(k, 0) + q * v
        if w:
            dst[k] = w
        else:
            dst.pop(k, None)


def _combine(a: dict, b: dict, x: int, y: int) -> dict:
    out = {k: x * v for k, v in a.items()} if x else {}
    if y:
        _axpy(out, b, y)
    return out


class IntMatrix:
    """Sparse integer matrix; no zero entries are stored."""

    __slots__ = ("rows", "cols", "_rows")

    def __init__(self, rows: int, cols: int, entries=None):
        self.rows = rows
        self.cols = cols
        self._rows: list[dict[int, int]] = [{} for _ in range(rows)]
        if entries:
            for (r, c), v in entries.items():
                if not (0 <= r < rows and 0 <= c < cols):
                    raise IndexError(f"entry ({r}, {c}) outside a {rows}x{cols} matrix")
                if v:
                    self._rows[r][c] = v

    @classmethod
    def from_dense(cls, data, cols: int | None = None) -> "IntMatrix":
        data = [list(row) for row in data]
        if cols is None:
            cols = len(data[0]) if data else 0
        out = cls(len(data), cols)
        for r, row in enumerate(data):
            if len(row) != cols:
                raise ValueError("ragged matrix")
            out._rows[r] = {c: int(v) for c, v in enumerate(row) if v}
        return out

    @classmethod
    def from_row_dicts(cls, rows: list[dict], cols: int) -> "IntMatrix":
        out = cls(len(rows), cols)
        out._rows = [{c: v for c, v in row.items() if v} for row in rows]
        return out

    @classmethod
    def from_col_dicts(cls, cols: list[dict], rows: int) -> "IntMatrix":
        out = cls(rows, len(cols))
        for c, col in enumerate(cols):
            for r, v in col.items():
                if v:
                    out._rows[r][c] = v
        return out

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        out = cls(n, n)
        out._rows = [{i: 1} for i in range(n)]
        return out

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def entries(self) -> dict[tuple[int, int], int]:
        return {(r, c): v for r, row in enumerate(self._rows) for c, v in row.items()}

    @property
    def nnz(self) -> int:
        return sum(map(len, self._rows))

    def row(self, r: int) -> dict[int, int]:
        return dict(self._rows[r])

    def row_dicts(self) -> list[dict[int, int]]:
        return [dict(row) for row in self._rows]

    def col_dicts(self) -> list[dict[int, int]]:
        cols: list[dict[int, int]] = [{} for _ in range(self.cols)]
        for r, row in enumerate(self._rows):
            for c, v in row.items():
                cols[c][r] = v
        return cols

    def __getitem__(self, rc):
        r, c = rc
        return self._rows[r].get(c, 0)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for r, row in enumerate(self._rows):
            for c, v in row.items():
                out[r][c] = v
        return out

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_row_dicts(self.col_dicts(), self.rows)

    @property
    def T(self) -> "IntMatrix":
        return self.transpose()

    def is_zero(self) -> bool:
        return not any(self._rows)

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __repr__(self):
        return f"IntMatrix({self.rows}x{self.cols}, nnz={self.nnz})"

    def apply(self, vec: dict[int, int]) -> dict[int, int]:
        """Matrix times a sparse column vector ``{index: value}``."""
        out = {}
        for r, row in enumerate(self._rows):
            s = 0
            if len(row) < len(vec):
                for c, v in row.items():
                    w = vec.get(c)
                    if w:
                        s += v * w
            else:
                for c, w in vec.items():
                    v = row.get(c)
                    if v:
                        s += v * w
            if s:
                out[r] = s
        return out

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            if self.cols != other.rows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            out = IntMatrix(self.rows, other.cols)
            orows = other._rows
            for r, row in enumerate(self._rows):
                acc: dict[int, int] = {}
                for k, v in row.items():
                    _axpy(acc, orows[k], v)
                out._rows[r] = acc
            return out
        vec = list(other)
        if len(vec) != self.cols:
            raise ValueError(f"vector of length {len(vec)} for {self.cols} columns")
        res = self.apply({i: v for i, v in enumerate(vec) if v})
        return [res.get(r, 0) for r in range(self.rows)]

    def submatrix(self, rows=None, cols=None) -> "IntMatrix":
        rows = range(self.rows) if rows is None else list(rows)
        cols = range(self.cols) if cols is None else list(cols)
        cpos = {c: n for n, c in enumerate(cols)}
        out = IntMatrix(len(rows), len(cols))
        for n, r in enumerate(rows):
            out._rows[n] = {cpos[c]: v for c, v in self._rows[r].items() if c in cpos}
        return out


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass
class SNFResult:
    """``U @ A @ V`` is diagonal with entries ``diag`` (each dividing the next).

    ``U``, ``V`` and their inverses are ``None`` unless transforms were requested.
    """

    diag: list[int]
    shape: tuple[int, int]
    U: IntMatrix | None = None
    V: IntMatrix | None = None
    U_inv: IntMatrix | None = None
    V_inv: IntMatrix | None = None

    @property
    def rank(self) -> int:
        return len(self.diag)

    def diagonal_matrix(self) -> IntMatrix:
        return IntMatrix(*self.shape, {(k, k): d for k, d in enumerate(self.diag)})


class _Workspace:
    """Row-major matrix with a column index, plus optional transform tracking.

    ``U`` is kept by rows and ``U_inv`` by columns (so a row operation touches
    one row of each); ``V`` is kept by columns and ``V_inv`` by rows.
    """

    def __init__(self, A: IntMatrix, track: bool):
        self.nrows, self.ncols = A.shape
        self.a = A.row_dicts()
        self.colidx: list[set[int]] = [set() for _ in range(self.ncols)]
        for r, row in enumerate(self.a):
            for c in row:
                self.colidx[c].add(r)
        self.track = track
        if track:
            self.U = [{i: 1} for i in range(self.nrows)]
            self.U_inv = [{i: 1} for i in range(self.nrows)]
            self.V = [{i: 1} for i in range(self.ncols)]
            self.V_inv = [{i: 1} for i in range(self.ncols)]

    # row operations ----------------------------------------------------

    def _set_row(self, r: int, new: dict) -> None:
        old = self.a[r]
        for c in old.keys() - new.keys():
            self.colidx[c].discard(r)
        for c in new.keys() - old.keys():
            self.colidx[c].add(r)
        self.a[r] = new

    def row_axpy(self, dst: int, src: int, q: int) -> None:
        row = dict(self.a[dst])
        _axpy(row, self.a[src], q)
        self._set_row(dst, row)
        if self.track:
            _axpy(self.U[dst], self.U[src], q)
            _axpy(self.U_inv[src], self.U_inv[dst], -q)

    def row_swap(self, i: int, j: int) -> None:
        if i == j:
            return
        ri, rj = self.a[i], self.a[j]
        self._set_row(i, {})
        self._set_row(j, {})
        self._set_row(i, rj)
        self._set_row(j, ri)
        if self.track:
            self.U[i], self.U[j] = self.U[j], self.U[i]
            self.U_inv[i], self.U_inv[j] = self.U_inv[j], self.U_inv[i]

    def row_neg(self, i: int) -> None:
        self.a[i] = {c: -v for c, v in self.a[i].items()}
        if self.track:
            self.U[i] = {k: -v for k, v in self.U[i].items()}
            self.U_inv[i] = {k: -v for k, v in self.U_inv[i].items()}

    def row_2x2(self, i: int, j: int, x: int, y: int, z: int, w: int) -> None:
        # rows (i, j) <- [[x, y], [z, w]] @ rows (i, j); requires xw - yz == 1
        ri, rj = self.a[i], self.a[j]
        self._set_row(i, _combine(ri, rj, x, y))
        self._set_row(j, _combine(ri, rj, z, w))
        if self.track:
            ui, uj = self.U[i], self.U[j]
            self.U[i], self.U[j] = _combine(ui, uj, x, y), _combine(ui, uj, z, w)
            ci, cj = self.U_inv[i], self.U_inv[j]
            self.U_inv[i], self.U_inv[j] = _combine(ci, cj, w, -z), _combine(ci, cj, -y, x)

    # column operations -------------------------------------------------

    def col_axpy(self, dst: int, src: int, q: int) -> None:
        for r in list(self.colidx[src]):
            row = self.a[r]
            v = row.get(dst, 0) + q * row[src]
            if v:
                if dst not in row:
                    self.colidx[dst].add(r)
                row[dst] = v
            elif dst in row:
                del row[dst]
                self.colidx[dst].discard(r)
        if self.track:
            _axpy(self.V[dst], self.V[src], q)
            _axpy(self.V_inv[src], self.V_inv[dst], -q)

    def col_swap(self, i: int, j: int) -> None:
        if i == j:
            return
        for r in self.colidx[i] | self.colidx[j]:
            row = self.a[r]
            vi, vj = row.pop(i, 0), row.pop(j, 0)
            if vj:
                row[i] = vj
            if vi:
                row[j] = vi
        self.colidx[i], self.colidx[j] = self.colidx[j], self.colidx[i]
        if self.track:
            self.V[i], self.V[j] = self.V[j], self.V[i]
            self.V_inv[i], self.V_inv[j] = self.V_inv[j], self.V_inv[i]

    # elimination -------------------------------------------------------

    def choose_pivot(self, t: int):
        best = None
        for r in range(t, self.nrows):
            row = self.a[r]
            if not row:
                continue
            rfill = len(row) - 1
            for c, v in row.items():
                key = (abs(v), rfill * (len(self.colidx[c]) - 1), r, c)
                if best is None or key < best:
                    best = key
        return None if best is None else best[2:]

    def diagonalize(self) -> int:
        t = 0
        limit = min(self.nrows, self.ncols)
        while t < limit:
            pivot = self.choose_pivot(t)
            if pivot is None:
                break
            self.row_swap(t, pivot[0])
            self.col_swap(t, pivot[1])
            while True:
                p = self.a[t][t]
                if p < 0:
                    self.row_neg(t)
                    p = -p
                restart = False
                for r in sorted(self.colidx[t] - {t}):
                    self.row_axpy(r, t, -(self.a[r][t] // p))
                    if t in self.a[r]:
                        self.row_swap(r, t)
                        restart = True
                        break
                if restart:
                    continue
                for c in sorted(k for k in self.a[t] if k != t):
                    self.col_axpy(c, t, -(self.a[t][c] // p))
                    if c in self.a[t]:
                        self.col_swap(c, t)
                        restart = True
                        break
                if not restart:
                    break
            t += 1
        return t

    def enforce_divisibility(self, rank: int) -> None:
        for i in range(rank):
            for j in range(i + 1, rank):
                a, b = self.a[i][i], self.a[j][j]
                if b % a == 0:
                    continue
                self.col_axpy(i, j, 1)
                x, y, g = xgcd(a, b)
                self.row_2x2(i, j, x, y, -b // g, a // g)
                self.col_axpy(j, i, -(self.a[i][j] // g))


def smith_normal_form(A: IntMatrix, transforms: bool = True) -> SNFResult:
    """Smith normal form of ``A``.

    Pivots are chosen by smallest absolute value, then by a fill-in estimate,
    then by lowest row and column, so the result is deterministic.
    """
    ws = _Workspace(A, transforms)
    rank = ws.diagonalize()
    ws.enforce_divisibility(rank)
    diag = [ws.a[k][k] for k in range(rank)]
    res = SNFResult(diag=diag, shape=A.shape)
    if transforms:
        res.U = IntMatrix.from_row_dicts(ws.U, A.rows)
        res.U_inv = IntMatrix.from_col_dicts(ws.U_inv, A.rows)
        res.V = IntMatrix.from_col_dicts(ws.V, A.cols)
        res.V_inv = IntMatrix.from_row_dicts(ws.V_inv, A.cols)
    return res


def rank(A: IntMatrix) -> int:
    return smith_normal_form(A, transforms=False).rank


def solve(A: IntMatrix, b) -> list[int] | None:
    """An integer ``x`` with ``A @ x == b``, or ``None`` if there is none."""
    b = list(b)
    if len(b) != A.rows:
        raise ValueError(f"right-hand side of length {len(b)} for {A.rows} rows")
    snf = smith_normal_form(A)
    c = snf.U @ b
    y = [0] * A.cols
    for k, d in enumerate(snf.diag):
        if c[k] % d:
            return None
        y[k] = c[k] // d
    if any(c[snf.rank:]):
        return None
    return snf.V @ y


# ---------------------------------------------------------------------------
# abelian groups and cohomology


def invariant_factors(orders) -> list[int]:
    """Canonical divisibility chain (entries >= 2) of a direct sum of cyclic groups."""
    ds = [abs(d) for d in orders if abs(d) > 1]
    for i in range(len(ds)):
        for j in range(i + 1, len(ds)):
            a, b = ds[i], ds[j]
            g = gcd(a, b)
            ds[i], ds[j] = g, a // g * b
    return [d for d in ds if d > 1]


@dataclass(frozen=True)
class AbelianGroup:
    rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        if list(self.torsion) != invariant_factors(self.torsion):
            raise ValueError(f"torsion {self.torsion} is not a divisibility chain")

    @classmethod
    def from_orders(cls, orders) -> "AbelianGroup":
        """Group generated by cyclic summands of the given orders (0 means infinite)."""
        orders = list(orders)
        return cls(sum(1 for d in orders if d == 0),
                   tuple(invariant_factors(d for d in orders if d)))

    def direct_sum(self, other: "AbelianGroup") -> "AbelianGroup":
        return AbelianGroup(self.rank + other.rank,
                            tuple(invariant_factors(self.torsion + other.torsion)))

    def __add__(self, other):
        return self.direct_sum(other)

    def is_zero(self) -> bool:
        return self.rank == 0 and not self.torsion

    def to_dict(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion)}

    def __str__(self):
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


@dataclass
class CohomologyData:
    """``ker(d_out) / im(d_in)`` with chosen generators.

    ``orders[k]`` is 0 for a free generator and its (>= 2) order otherwise.
    ``functionals[k]`` is a row vector that, applied to a cocycle, gives its
    ``k``-th coordinate (to be read modulo ``orders[k]`` when nonzero).
    """

    group: AbelianGroup
    representatives: list[dict[int, int]]
    orders: list[int]
    functionals: list[dict[int, int]] = field(repr=False)
    d_out: IntMatrix = field(repr=False)

    def is_cocycle(self, z: dict[int, int]) -> bool:
        return not self.d_out.apply(z)

    def coordinates(self, z: dict[int, int], check: bool = True) -> list[int]:
        if check and not self.is_cocycle(z):
            raise InconsistentComplex("vector is not a cocycle")
        out = []
        for f, d in zip(self.functionals, self.orders):
            c = sum(v * z.get(k, 0) for k, v in f.items())
            out.append(c % d if d else c)
        return out


def _check_composable(d_in: IntMatrix, d_out: IntMatrix) -> None:
    if d_in.rows != d_out.cols:
        raise ValueError(f"d_in has {d_in.rows} rows but d_out has {d_out.cols} columns")
    if not (d_out @ d_in).is_zero():
        raise InconsistentComplex("d_out @ d_in != 0")


def cohomology_group(d_in: IntMatrix, d_out: IntMatrix, check: bool = True) -> AbelianGroup:
    """Isomorphism type of ``ker(d_out) / im(d_in)`` without computing generators."""
    if check:
        _check_composable(d_in, d_out)
    r_out = rank(d_out)
    snf_in = smith_normal_form(d_in, transforms=False)
    return AbelianGroup(d_in.rows - r_out - snf_in.rank,
                        tuple(d for d in snf_in.diag if d > 1))


def cohomology_at(d_in: IntMatrix, d_out: IntMatrix, check: bool = True) -> CohomologyData:
    """``ker(d_out) / im(d_in)`` with representative cocycles and coordinates."""
    if check:
        _check_composable(d_in, d_out)
    n = d_in.rows
    outer = smith_normal_form(d_out)
    r = outer.rank
    kernel_basis = outer.V.submatrix(cols=range(r, n))
    kernel_coords = outer.V_inv.submatrix(rows=range(r, n))
    inner = smith_normal_form(kernel_coords @ d_in)
    gens_in_kernel = kernel_basis @ inner.U_inv
    functionals = inner.U @ kernel_coords

    reps, orders, funcs = [], [], []
    gen_cols = gens_in_kernel.col_dicts()
    for k in range(n - r):
        d = inner.diag[k] if k < inner.rank else 0
        if d == 1:
            continue
        reps.append(gen_cols[k])
        orders.append(d)
        funcs.append(functionals.row(k))
    return CohomologyData(AbelianGroup.from_orders(orders), reps, orders, funcs, d_out)
