"""Constructors for the named monoid families.

Matrix kinds (T, UT, PT and their unit groups) have entry-pattern tuples as
element values.  Affine kinds (A, AT, AS and unit groups) are transformation
monoids on R^n: element values are extensional tables over the points of
R^n in lexicographic order, so two presentations inducing the same map are
the same element.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from semidec.errors import ActionNotFaithful, FieldRequired, SizeLimitExceeded
from semidec.monoid import (
    DEFAULT_LIMIT,
    Monoid,
    from_elements,
    is_aperiodic,
    maximal_subgroup,
    quotient_by_central_units,
)
from semidec.semiring import SemiringTable, units
from semidec.trimat import AffineMap, identity_entries, mul_entries

FAMILY_KINDS = (
    "T", "UT", "PT", "T*", "UT*", "PT*",
    "A", "AT", "AS", "A*", "AT*", "AS*",
    "Xtilde", "U1", "augmented",
)


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    n: int
    ring: SemiringTable

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.kind in ("PT", "PT*") and not self.ring.is_field:
            raise FieldRequired(f"{self.kind} needs a field, got {self.ring.label}")
        if self.n < 1 and self.kind not in ("U1",):
            raise ValueError("degree must be >= 1")

    def label(self) -> str:
        if self.kind == "U1":
            return "U_1"
        if self.kind == "Xtilde":
            return f"({self.ring.label}^{self.n})~"
        return f"{self.kind}_{self.n}({self.ring.label})"

    def descriptor(self) -> dict:
        return {
            "kind": "family",
            "family": self.kind,
            "n": self.n,
            "ring": self.ring.descriptor(),
        }


def points(ring: SemiringTable, n: int) -> list[tuple[int, ...]]:
    return list(product(range(ring.size), repeat=n))


def point_index(ring: SemiringTable, n: int) -> dict[tuple[int, ...], int]:
    return {p: i for i, p in enumerate(points(ring, n))}


def compose_tables(f: tuple[int, ...], g: tuple[int, ...]) -> tuple[int, ...]:
    """Right-action composition: apply f first, then g."""
    return tuple(g[x] for x in f)


def transformation_of_affine(f: AffineMap) -> tuple[int, ...]:
    idx = point_index(f.ring, f.dim)
    return tuple(idx[f.apply(p)] for p in points(f.ring, f.dim))


# -- matrix families ----------------------------------------------------------


def _matrix_elements(kind: str, n: int, ring: SemiringTable) -> list[tuple]:
    all_vals = list(range(ring.size))
    unit_vals = sorted(units(ring))
    diag_choices = {
        "T": all_vals,
        "UT": sorted({ring.zero, ring.one}),
        "T*": unit_vals,
        "UT*": [ring.one],
    }[kind]
    positions = [(i, j) for i in range(n) for j in range(i, n)]
    choices = [diag_choices if i == j else all_vals for (i, j) in positions]
    out = []
    for combo in product(*choices):
        ent = [[ring.zero] * n for _ in range(n)]
        for (i, j), v in zip(positions, combo):
            ent[i][j] = v
        out.append(tuple(tuple(row) for row in ent))
    return out


def _zp_matrix_table(p: int, elements: list[tuple]) -> np.ndarray:
    """Multiplication table for Z_p matrix entry patterns, in bulk."""
    m = len(elements)
    n = len(elements[0])
    stack = np.array(elements, dtype=np.int64)
    lookup = {e: i for i, e in enumerate(elements)}
    table = np.empty((m, m), dtype=np.int32)
    for i in range(m):
        prods = np.einsum("jk,mkl->mjl", stack[i], stack) % p
        for j in range(m):
            table[i, j] = lookup[tuple(map(tuple, prods[j]))]
    return table


def _matrix_monoid(kind: str, n: int, ring: SemiringTable, limit: int) -> Monoid:
    count_positions = n * (n + 1) // 2
    if ring.size ** count_positions > limit:
        raise SizeLimitExceeded(limit, f"{kind}_{n}({ring.label}) enumeration")
    elements = _matrix_elements(kind, n, ring)
    ident = identity_entries(ring, n)
    spec = FamilySpec(kind, n, ring)

    def mul(a, b):
        return mul_entries(ring, a, b)

    table = None
    if ring.label.startswith("Z_") and len(elements) > 64:
        table = _zp_matrix_table(ring.size, elements)
    if table is not None:
        return Monoid(elements, ident, mul_fn=mul, table=table,
                      label=spec.label(), provenance=spec.descriptor())
    return from_elements(elements, mul, ident, label=spec.label(), provenance=spec.descriptor())


# -- affine families ----------------------------------------------------------


def _affine_presentations(kind: str, n: int, ring: SemiringTable):
    """Yield AffineMap presentations in lexicographic pattern order."""
    shifts = points(ring, n)
    if kind == "AS":
        for lam in range(ring.size):
            for c in shifts:
                yield AffineMap(n, ring, c, scaling=lam)
        return
    rows = points(ring, n)
    if kind == "AT":
        mats = [
            x
            for x in product(rows, repeat=n)
            if all(x[i][j] == ring.zero for i in range(n) for j in range(i))
        ]
    else:  # full affine monoid
        mats = list(product(rows, repeat=n))
    for x in mats:
        for c in shifts:
            yield AffineMap(n, ring, c, x=x)


def _affine_monoid(kind: str, n: int, ring: SemiringTable, limit: int) -> Monoid:
    pattern_count = {
        "AS": ring.size ** (n + 1),
        "AT": ring.size ** (n * (n + 1) // 2 + n),
        "A": ring.size ** (n * n + n),
    }[kind]
    if pattern_count > limit or ring.size**n > limit:
        raise SizeLimitExceeded(limit, f"{kind}_{n}({ring.label}) enumeration")
    idx = point_index(ring, n)
    pts = points(ring, n)
    seen = {}
    for f in _affine_presentations(kind, n, ring):
        tab = tuple(idx[f.apply(p)] for p in pts)
        if tab not in seen:
            seen[tab] = f
    elements = list(seen)
    ident = tuple(range(len(pts)))
    spec = FamilySpec(kind, n, ring)
    return from_elements(
        elements,
        compose_tables,
        ident,
        label=spec.label(),
        provenance=spec.descriptor(),
    )


# -- simple families ----------------------------------------------------------


def u1() -> Monoid:
    """The two-element semilattice {1, e} with e^2 = e."""
    return from_elements([0, 1], lambda a, b: a | b, 0, label="U_1", provenance={"kind": "family", "family": "U1"})


def transformation_closure(gens: list[tuple[int, ...]], label: str = "",
                           limit: int = DEFAULT_LIMIT) -> Monoid:
    """Closure of transformation tables under right-action composition."""
    from semidec.keys import value_json
    from semidec.monoid import close_generators

    point_count = len(gens[0])
    ident = tuple(range(point_count))
    return close_generators(
        gens,
        compose_tables,
        ident,
        limit=limit,
        label=label,
        provenance={
            "kind": "transformation_close",
            "points": point_count,
            "generators": [value_json(g) for g in gens],
            "label": label,
        },
    )


CONSTANTS_IDENTITY = (1, 0)


def constant_at(x: int) -> tuple[int, int]:
    return (0, x)


def constants_mul(a, b):
    """Right-action composition: a constant on the right wins."""
    return b if b[0] == 0 else a


def constants_monoid(point_count: int, label: str = "", provenance: dict | None = None) -> Monoid:
    """The identity plus one constant per point, as a formal monoid.

    Elements are tagged pairs rather than transformation tables: on a
    one-point set the identity and the constant coincide extensionally,
    but this monoid always has order point_count + 1.
    """
    if point_count < 1:
        raise ValueError("need a non-empty point set")
    elements = [CONSTANTS_IDENTITY] + [constant_at(x) for x in range(point_count)]
    m = from_elements(
        elements,
        constants_mul,
        CONSTANTS_IDENTITY,
        label=label or f"~{point_count}",
        provenance=provenance or {"kind": "family", "family": "constants", "points": point_count},
    )
    assert is_aperiodic(m)
    return m


def augmented_monoid(acting: Monoid, action: list[tuple[int, ...]] | None = None,
                     limit: int = DEFAULT_LIMIT) -> Monoid:
    """Closure of a transformation monoid together with all constant maps.

    ``acting`` must consist of transformation tables, or ``action`` must give
    one table per element (a faithful right action).
    """
    if action is None:
        tables = list(acting.elements)
    else:
        tables = list(action)
        if len(tables) != len(acting):
            raise ValueError("action must give one table per element")
        for i in range(len(acting)):
            for j in range(len(acting)):
                if compose_tables(tables[i], tables[j]) != tables[acting.mul(i, j)]:
                    raise ValueError("action is not a right action")
    if len(set(tables)) != len(tables):
        raise ActionNotFaithful("distinct elements act identically")
    point_count = len(tables[0])
    ident = tuple(range(point_count))
    constants = [tuple(x for _ in range(point_count)) for x in range(point_count)]
    from semidec.monoid import close_generators

    return close_generators(
        [ident] + tables + constants,
        compose_tables,
        ident,
        limit=limit,
        label=f"aug({acting.label})",
        provenance={"kind": "augmented", "base": acting.descriptor()},
    )


# -- dispatcher ---------------------------------------------------------------


def build_family(spec: FamilySpec, limit: int = DEFAULT_LIMIT) -> Monoid:
    kind, n, ring = spec.kind, spec.n, spec.ring
    if kind == "U1":
        return u1()
    if kind == "Xtilde":
        if ring.size**n > limit:
            raise SizeLimitExceeded(limit, "point set enumeration")
        return constants_monoid(ring.size**n, label=spec.label(), provenance=spec.descriptor())
    if kind in ("T", "UT", "T*", "UT*"):
        return _matrix_monoid(kind, n, ring, limit)
    if kind in ("PT", "PT*"):
        base = _matrix_monoid("T" if kind == "PT" else "T*", n, ring, limit)
        scalars = _scalar_unit_indices(base, ring)
        quotient, _ = quotient_by_central_units(base, scalars)
        quotient.label = spec.label()
        quotient.provenance = spec.descriptor()
        return quotient
    if kind in ("A", "AT", "AS"):
        return _affine_monoid(kind, n, ring, limit)
    if kind in ("A*", "AT*", "AS*"):
        base = _affine_monoid(kind[:-1], n, ring, limit)
        group = maximal_subgroup(base, base.identity)
        group.label = spec.label()
        group.provenance = spec.descriptor()
        return group
    if kind == "augmented":
        star = build_family(FamilySpec("AS*", n, ring), limit)
        return augmented_monoid(star, limit=limit)
    raise ValueError(f"unknown family kind {kind!r}")


def family(kind: str, n: int, ring: SemiringTable, limit: int = DEFAULT_LIMIT) -> Monoid:
    return build_family(FamilySpec(kind, n, ring), limit)


def _scalar_unit_indices(matrix_monoid: Monoid, ring: SemiringTable) -> list[int]:
    n = len(matrix_monoid.elements[0])
    out = []
    for lam in sorted(units(ring)):
        ent = tuple(
            tuple(lam if i == j else ring.zero for j in range(n)) for i in range(n)
        )
        out.append(matrix_monoid.index[ent])
    return out
