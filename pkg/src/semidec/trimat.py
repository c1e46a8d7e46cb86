"""Upper triangular matrices over a SemiringTable, and affine maps of row vectors.

Entry patterns are tuples of tuples of ring element indices; all values are
immutable.  Vectors are row vectors acted on from the right, so a map is
applied as ``v -> v @ X + c`` and composition reads left to right.
"""

from __future__ import annotations

from dataclasses import dataclass

from semidec.errors import DimensionMismatch, DimensionTooSmall, IllegalDirection, RingMismatch
from semidec.semiring import SemiringTable

Entries = tuple[tuple[int, ...], ...]


def is_triangular_entries(ring: SemiringTable, entries: Entries) -> bool:
    return all(entries[i][j] == ring.zero for i in range(len(entries)) for j in range(i))


@dataclass(frozen=True)
class TriMatrix:
    n: int
    entries: Entries
    ring: SemiringTable

    def __post_init__(self):
        if len(self.entries) != self.n or any(len(r) != self.n for r in self.entries):
            raise DimensionMismatch(f"expected {self.n}x{self.n} entries")
        if not is_triangular_entries(self.ring, self.entries):
            raise ValueError("entries below the diagonal must all be zero")

    def __getitem__(self, pos):
        i, j = pos
        return self.entries[i][j]


def matrix(ring: SemiringTable, rows) -> TriMatrix:
    entries = tuple(tuple(int(x) for x in row) for row in rows)
    return TriMatrix(len(entries), entries, ring)


def identity_entries(ring: SemiringTable, n: int) -> Entries:
    return tuple(
        tuple(ring.one if i == j else ring.zero for j in range(n)) for i in range(n)
    )


def identity(ring: SemiringTable, n: int) -> TriMatrix:
    return TriMatrix(n, identity_entries(ring, n), ring)


def zero_matrix(ring: SemiringTable, n: int) -> TriMatrix:
    z = ring.zero
    return TriMatrix(n, tuple(tuple(z for _ in range(n)) for _ in range(n)), ring)


def mul_entries(ring: SemiringTable, a: Entries, b: Entries) -> Entries:
    n = len(a)
    mul, s = ring.mul, ring.sum_of
    return tuple(
        tuple(s(mul[a[i][k]][b[k][j]] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def mat_mul(a: TriMatrix, b: TriMatrix) -> TriMatrix:
    if a.ring is not b.ring and a.ring != b.ring:
        raise RingMismatch(f"{a.ring.label} vs {b.ring.label}")
    if a.n != b.n:
        raise DimensionMismatch(f"{a.n} vs {b.n}")
    entries = mul_entries(a.ring, a.entries, b.entries)
    assert is_triangular_entries(a.ring, entries)
    return TriMatrix(a.n, entries, a.ring)


def classify(m: TriMatrix) -> dict:
    """Flags: triangular (always), unitriangular, subidentity."""
    ring = m.ring
    unitri = all(m.entries[i][i] in (ring.zero, ring.one) for i in range(m.n))
    subid = unitri and all(
        m.entries[i][j] == ring.zero for i in range(m.n) for j in range(m.n) if i != j
    )
    return {"triangular": True, "unitriangular": unitri, "subidentity": subid}


@dataclass(frozen=True)
class ElementaryOp:
    """``add``: add scalar * (row/column ``source``) to row/column ``target``.
    ``scale``: multiply row/column ``target`` by scalar."""

    kind: str  # "add" | "scale"
    target: int
    scalar: int
    source: int | None = None


def _elementary_matrix(ring: SemiringTable, n: int, op: ElementaryOp, rows: bool) -> TriMatrix:
    ent = [list(row) for row in identity_entries(ring, n)]
    if op.kind == "scale":
        ent[op.target][op.target] = op.scalar
    elif op.kind == "add":
        if rows:
            # row target += scalar * row source; as left multiplication the
            # factor has `scalar` at (target, source), triangular iff target < source
            if not op.target < op.source:
                raise IllegalDirection("rows may only receive multiples of rows below them")
            ent[op.target][op.source] = op.scalar
        else:
            if not op.target > op.source:
                raise IllegalDirection("columns may only receive multiples of columns to their left")
            ent[op.source][op.target] = op.scalar
    else:
        raise ValueError(f"unknown op kind {op.kind!r}")
    return TriMatrix(n, tuple(tuple(r) for r in ent), ring)


def apply_row_op(m: TriMatrix, op: ElementaryOp) -> TriMatrix:
    """Apply a row operation; equals left multiplication by a triangular matrix."""
    left = _elementary_matrix(m.ring, m.n, op, rows=True)
    out = mat_mul(left, m)
    ent = [list(row) for row in m.entries]
    if op.kind == "scale":
        ent[op.target] = [m.ring.mul[op.scalar][x] for x in ent[op.target]]
    else:
        ent[op.target] = [
            m.ring.add[ent[op.target][j]][m.ring.mul[op.scalar][ent[op.source][j]]]
            for j in range(m.n)
        ]
    assert out.entries == tuple(tuple(r) for r in ent)
    return out


def apply_col_op(m: TriMatrix, op: ElementaryOp) -> TriMatrix:
    """Apply a column operation; equals right multiplication by a triangular matrix."""
    right = _elementary_matrix(m.ring, m.n, op, rows=False)
    out = mat_mul(m, right)
    ent = [list(row) for row in m.entries]
    if op.kind == "scale":
        for i in range(m.n):
            ent[i][op.target] = m.ring.mul[ent[i][op.target]][op.scalar]
    else:
        for i in range(m.n):
            ent[i][op.target] = m.ring.add[ent[i][op.target]][
                m.ring.mul[ent[i][op.source]][op.scalar]
            ]
    assert out.entries == tuple(tuple(r) for r in ent)
    return out


@dataclass(frozen=True)
class BlockParts:
    """Top-left block, top-right column, bottom-right scalar of a matrix."""

    M: TriMatrix
    v: tuple[int, ...]
    c: int

    def reassemble(self) -> TriMatrix:
        ring, m = self.M.ring, self.M.n
        rows = [tuple(self.M.entries[i]) + (self.v[i],) for i in range(m)]
        rows.append(tuple(ring.zero for _ in range(m)) + (self.c,))
        return TriMatrix(m + 1, tuple(rows), ring)


def block_decompose(s: TriMatrix) -> BlockParts:
    if s.n < 2:
        raise DimensionTooSmall("block decomposition needs dimension >= 2")
    m = s.n - 1
    top = TriMatrix(m, tuple(tuple(s.entries[i][:m]) for i in range(m)), s.ring)
    v = tuple(s.entries[i][m] for i in range(m))
    parts = BlockParts(top, v, s.entries[m][m])
    assert parts.reassemble().entries == s.entries
    return parts


# -- affine maps -------------------------------------------------------------

Vector = tuple[int, ...]


@dataclass(frozen=True)
class AffineMap:
    """``v -> v @ X + c`` with X upper triangular, or ``v -> v*lam + c``.

    Exactly one of ``x`` (matrix entries) and ``scaling`` (a ring index) is
    set.  This is the formal presentation; over degenerate semirings two
    presentations may induce the same transformation of R^dim.
    """

    dim: int
    ring: SemiringTable
    c: Vector
    x: Entries | None = None
    scaling: int | None = None

    def __post_init__(self):
        assert (self.x is None) != (self.scaling is None)
        if len(self.c) != self.dim:
            raise DimensionMismatch("shift vector length must equal dim")

    def matrix_entries(self) -> Entries:
        if self.x is not None:
            return self.x
        lam, ring = self.scaling, self.ring
        return tuple(
            tuple(lam if i == j else ring.zero for j in range(self.dim))
            for i in range(self.dim)
        )

    def apply(self, v: Vector) -> Vector:
        ring = self.ring
        if self.scaling is not None:
            return tuple(ring.add[ring.mul[v[i]][self.scaling]][self.c[i]] for i in range(self.dim))
        x = self.x
        return tuple(
            ring.add[ring.sum_of(ring.mul[v[i]][x[i][j]] for i in range(self.dim))][self.c[j]]
            for j in range(self.dim)
        )

    def compose(self, other: "AffineMap") -> "AffineMap":
        """Right-action composition: apply self first, then other."""
        ring = self.ring
        if self.scaling is not None and other.scaling is not None:
            lam = ring.mul[self.scaling][other.scaling]
            c = tuple(
                ring.add[ring.mul[self.c[i]][other.scaling]][other.c[i]]
                for i in range(self.dim)
            )
            return AffineMap(self.dim, ring, c, scaling=lam)
        x = mul_entries(ring, self.matrix_entries(), other.matrix_entries())
        c = other.apply(self.c)
        return AffineMap(self.dim, ring, c, x=x)


def scaling_map(ring: SemiringTable, dim: int, lam: int, shift: Vector) -> AffineMap:
    return AffineMap(dim, ring, tuple(shift), scaling=lam)


def identity_affine(ring: SemiringTable, dim: int) -> AffineMap:
    return scaling_map(ring, dim, ring.one, tuple(ring.zero for _ in range(dim)))


def affine_to_matrix(f: AffineMap) -> TriMatrix:
    """Corner embedding: the (dim+1)-square matrix [[1, c], [0, X]].

    Identifying v with the row (1, v), one has (1, v) @ M_f = (1, f(v)),
    and M on formal maps is injective and multiplicative.
    """
    ring, m = f.ring, f.dim
    x = f.matrix_entries()
    rows = [(ring.one,) + tuple(f.c)]
    for i in range(m):
        rows.append((ring.zero,) + tuple(x[i]))
    out = TriMatrix(m + 1, tuple(rows), ring)
    assert is_triangular_entries(ring, out.entries)
    return out
