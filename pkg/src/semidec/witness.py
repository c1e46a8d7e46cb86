"""Division witnesses: certificates that one monoid divides another.

A witness holds generator pairs (t, s) in target x source.  Verification
closes the pairs under componentwise multiplication and checks that the
closed relation is the graph of a function from a subsemigroup of the
target onto the source.  A relation that contains the generators, is
closed under products, and is functional is exactly a homomorphism graph,
so nothing else needs checking.  Certificates store only the generator
pairs plus construction provenance; verification always recomputes the
closure, so a serialized witness is independently re-checkable.
"""

from __future__ import annotations

from itertools import product as iter_product

from semidec.carriers import ProductCarrier, build_carrier, build_monoid
from semidec.errors import (
    FieldRequired,
    NotFunctional,
    NotSurjective,
    PreimageMissing,
    SizeLimitExceeded,
    WitnessError,
)
from semidec.keys import value_from_json, value_json
from semidec.monoid import DEFAULT_LIMIT, Monoid, direct_product, from_elements
from semidec.semiring import SemiringTable, units
from semidec.wreath import WreathContext, constant_table


class DivisionWitness:
    def __init__(self, source: Monoid, target, pairs, steps=None, label=""):
        self.source = source
        self.target = target
        self.pairs = list(pairs)  # (target value, source index)
        self.steps = list(steps or [])
        self.label = label
        self.status = "unverified"
        self.closure_size: int | None = None
        self.failure: str | None = None
        self._closure: list[tuple] | None = None
        self._mapping: dict | None = None

    def __repr__(self):
        return f"DivisionWitness({self.label or 'anonymous'}, {self.status})"

    @property
    def verified(self) -> bool:
        return self.status == "verified"

    def closure_pairs(self) -> list[tuple]:
        assert self._closure is not None, "witness has not been verified"
        return self._closure

    def preimage_of(self, source_index: int):
        """Canonically-least target value mapping to a source element."""
        assert self._closure is not None, "witness has not been verified"
        for t, s in self._closure:
            if s == source_index:
                return t
        raise PreimageMissing(f"no preimage for source index {source_index}")

    def preimage_table(self) -> list:
        assert self._closure is not None
        out: list = [None] * len(self.source)
        for t, s in self._closure:
            if out[s] is None:
                out[s] = t
        return out

    def image_submonoid(self, label: str = "") -> Monoid:
        """The closure's target elements as a restricted monoid.

        Canonical order is closure discovery order.  The closure must
        contain an element acting as a two-sided identity on it (always the
        case when the witness pairs the identities, as the pipelines do).
        """
        assert self._closure is not None, "witness has not been verified"
        values = [t for t, _ in self._closure]
        mul = self.target.mul_value
        ident = None
        for v in values:
            if all(mul(v, u) == u and mul(u, v) == u for u in values):
                ident = v
                break
        if ident is None:
            raise WitnessError("closure has no two-sided identity; cannot form a base monoid")
        return from_elements(
            values,
            self.target.mul_value,
            ident,
            label=label or f"im({self.label})",
            provenance={
                "kind": "close",
                "carrier": self.target.descriptor(),
                "generators": [value_json(t) for t, _ in self.pairs],
                "identity": value_json(ident),
                "label": label or f"im({self.label})",
            },
        )


def verify(w: DivisionWitness, limit: int = DEFAULT_LIMIT) -> DivisionWitness:
    """Close the pairs and check functionality and surjectivity.

    Closure is breadth-first in rounds, scanning (left, right) pair indices
    in ascending order, so discovery order is deterministic.
    """
    mapping: dict = {}
    order: list = []
    srcs: list[int] = []
    source, target = w.source, w.target
    mul_t, mul_s = target.mul_value, source.mul
    try:
        for t, s in w.pairs:
            prev = mapping.get(t)
            if prev is None:
                mapping[t] = s
                order.append(t)
                srcs.append(s)
            elif prev != s:
                raise NotFunctional(t, source.elements[prev], source.elements[s])
        frontier_start = 0
        while True:
            n = len(order)
            grew = False
            for i in range(n):
                ti, si = order[i], srcs[i]
                j_start = 0 if i >= frontier_start else frontier_start
                for j in range(j_start, n):
                    t = mul_t(ti, order[j])
                    s = mul_s(si, srcs[j])
                    prev = mapping.get(t)
                    if prev is None:
                        mapping[t] = s
                        order.append(t)
                        srcs.append(s)
                        grew = True
                        if len(order) > limit:
                            raise SizeLimitExceeded(limit, "witness closure")
                    elif prev != s:
                        raise NotFunctional(t, source.elements[prev], source.elements[s])
            if not grew:
                break
            frontier_start = n
        covered = set(mapping.values())
        missing = [i for i in range(len(source)) if i not in covered]
        if missing:
            raise NotSurjective([source.elements[i] for i in missing])
        # The first-coordinate projection of the closure equals the
        # multiplicative closure of the target generators: the loop above
        # keys on target values and enumerates exactly the same products.
        # Recompute it independently while that is cheap.
        if len(order) <= 1024:
            t_closure = _target_closure([t for t, _ in w.pairs], target, limit)
            assert t_closure == set(order), "closure projection mismatch"
    except (NotFunctional, NotSurjective, SizeLimitExceeded) as exc:
        w.status = "failed"
        w.failure = str(exc)
        raise
    w.status = "verified"
    w.closure_size = len(order)
    w._closure = [(t, mapping[t]) for t in order]
    w._mapping = mapping
    return w


def _target_closure(gens, target, limit) -> set:
    seen = set()
    order = []
    for g in gens:
        if g not in seen:
            seen.add(g)
            order.append(g)
    frontier_start = 0
    while True:
        n = len(order)
        grew = False
        for i in range(n):
            for j in range(n):
                if i < frontier_start and j < frontier_start:
                    continue
                t = target.mul_value(order[i], order[j])
                if t not in seen:
                    seen.add(t)
                    order.append(t)
                    grew = True
                    if len(order) > limit:
                        raise SizeLimitExceeded(limit, "target generator closure")
        if not grew:
            break
        frontier_start = n
    return seen


def mapped_witness(source: Monoid, value_map, target, steps=None, label="",
                   limit: int = DEFAULT_LIMIT) -> DivisionWitness:
    """Witness with one pair per source element, then verified."""
    pairs = [(value_map(source.elements[i]), i) for i in range(len(source))]
    w = DivisionWitness(source, target, pairs, steps=steps, label=label)
    return verify(w, limit)


def identity_witness(m: Monoid, limit: int = DEFAULT_LIMIT) -> DivisionWitness:
    return mapped_witness(m, lambda v: v, m, steps=[{"kind": "identity"}],
                          label=f"id({m.label})", limit=limit)


# -- combinators ---------------------------------------------------------------


def times_to_wreath(a: Monoid, b: Monoid, source: Monoid | None = None,
                    limit: int = DEFAULT_LIMIT) -> DivisionWitness:
    """A x B divides A wr B via (a, b) -> (constant-a table, b)."""
    ctx = WreathContext(a, b)
    src = source or direct_product(a, b)

    def embed(value):
        return (constant_table(ctx, value[0]), value[1])

    return mapped_witness(
        src, embed, ctx,
        steps=[{"kind": "times_to_wreath", "left": a.descriptor(), "right": b.descriptor()}],
        label=f"{src.label} into {ctx.label}", limit=limit,
    )


def absorb(top, b: Monoid, c: Monoid, source: Monoid | None = None,
           limit: int = DEFAULT_LIMIT) -> DivisionWitness:
    """(top wr B) x C embeds in top wr (B x C).

    The embedded table ignores the C coordinate of its argument.  ``source``
    may be a restricted monoid of ((table, b), c) values; by default the full
    product is enumerated under the limit.
    """
    from semidec.wreath import enumerate_wreath

    base = direct_product(b, c)
    ctx = WreathContext(top, base)
    if source is None:
        source = direct_product(enumerate_wreath(WreathContext(top, b), limit), c)
    csize = len(c)

    def embed(value):
        (table, bval), cval = value
        new_table = tuple(table[k // csize] for k in range(len(base)))
        return (new_table, (bval, cval))

    return mapped_witness(
        source, embed, ctx,
        steps=[{
            "kind": "absorb",
            "top": top.descriptor(), "base": b.descriptor(), "factor": c.descriptor(),
        }],
        label=f"{source.label} into {ctx.label}", limit=limit,
    )


def lift_left(w: DivisionWitness, top, source: Monoid | None = None,
              limit: int = DEFAULT_LIMIT) -> DivisionWitness:
    """From A div B derive (top wr A) div (top wr B).

    Lifted tables are constant on the fibers of the verified map B' -> A, so
    they are built as g-compose-phi over the restricted base B'; the
    restriction step records the formal inclusion into top wr B.
    """
    assert w.verified, "lift_left needs a verified witness"
    from semidec.wreath import enumerate_wreath

    sub = w.image_submonoid()
    ctx = WreathContext(top, sub)
    if source is None:
        source = enumerate_wreath(WreathContext(top, w.source), limit)
    phi = [w._mapping[v] for v in sub.elements]  # base element -> source index of w
    preim = w.preimage_table()
    a_index = w.source.index

    def embed(value):
        table, aval = value
        return (tuple(table[phi[k]] for k in range(len(sub))), preim[a_index[aval]])

    steps = list(w.steps) + [{
        "kind": "lift_left",
        "top": top.descriptor(),
        "witness": w.label,
        "restrict": {"base_from": w.target.descriptor(), "base_to": sub.descriptor()},
    }]
    return mapped_witness(source, embed, ctx, steps=steps,
                          label=f"lift_left({w.label})", limit=limit)


def lift_right(w: DivisionWitness, base: Monoid, source: Monoid | None = None,
               limit: int = DEFAULT_LIMIT) -> DivisionWitness:
    """From A div B derive (A wr C) div (B wr C): apply preimages pointwise."""
    assert w.verified, "lift_right needs a verified witness"
    from semidec.wreath import enumerate_wreath

    ctx = WreathContext(w.target, base)
    if source is None:
        source = enumerate_wreath(WreathContext(w.source, base), limit)
    preim = w.preimage_table()
    a_index = w.source.index

    def embed(value):
        table, cval = value
        return (tuple(preim[a_index[x]] for x in table), cval)

    steps = list(w.steps) + [{"kind": "lift_right", "base": base.descriptor(), "witness": w.label}]
    return mapped_witness(source, embed, ctx, steps=steps,
                          label=f"lift_right({w.label})", limit=limit)


def interchange(a: Monoid, b: Monoid, c: Monoid, d: Monoid,
                limit: int = DEFAULT_LIMIT) -> DivisionWitness:
    """(A wr B) x (C wr D) divides (A x C) wr (B x D)."""
    from semidec.wreath import enumerate_wreath

    w1 = enumerate_wreath(WreathContext(a, b), limit)
    w2 = enumerate_wreath(WreathContext(c, d), limit)
    source = direct_product(w1, w2)
    top = direct_product(a, c)
    base = direct_product(b, d)
    ctx = WreathContext(top, base)
    dsize = len(d)

    def embed(value):
        (f, bval), (g, dval) = value
        table = tuple((f[k // dsize], g[k % dsize]) for k in range(len(base)))
        return (table, (bval, dval))

    return mapped_witness(
        source, embed, ctx,
        steps=[{"kind": "interchange"}],
        label=f"{source.label} into {ctx.label}", limit=limit,
    )


def augmentation(acting: Monoid, limit: int = DEFAULT_LIMIT) -> DivisionWitness:
    """The augmented monoid of a transformation monoid divides X~ wr A.

    Generator pairs: each a in A pairs with (constant-identity table, a);
    each point x pairs the constant map onto x with ((b -> constant at x.b), 1).
    The construction is checked by the verifier, never assumed; a failure is
    surfaced as the verifier's error.
    """
    from semidec.families import CONSTANTS_IDENTITY, augmented_monoid, constant_at, constants_monoid

    tables = list(acting.elements)
    point_count = len(tables[0])
    source = augmented_monoid(acting, limit=limit)
    xt = constants_monoid(point_count)
    ctx = WreathContext(xt, acting)
    pairs = []
    for aval in acting.elements:
        pairs.append(((constant_table(ctx, CONSTANTS_IDENTITY), aval), source.index[aval]))
    for x in range(point_count):
        h_x = tuple(constant_at(bval[x]) for bval in acting.elements)
        const_x = tuple(x for _ in range(point_count))
        pairs.append(((h_x, acting.identity_value), source.index[const_x]))
    w = DivisionWitness(
        source, ctx, pairs,
        steps=[{"kind": "augmentation", "acting": acting.descriptor()}],
        label=f"{source.label} into {ctx.label}",
    )
    return verify(w, limit)


def group_with_zero(ring: SemiringTable, limit: int = DEFAULT_LIMIT) -> DivisionWitness:
    """The multiplicative monoid of a field divides (unit group) x U_1."""
    if not ring.is_field:
        raise FieldRequired(f"{ring.label} is not a field")
    from semidec.families import family, u1

    t1 = family("T", 1, ring)
    t1s = family("T*", 1, ring)
    semilattice = u1()
    target = ProductCarrier(t1s, semilattice)
    pairs = []
    for g in sorted(units(ring)):
        val = ((g,),)
        pairs.append(((val, 0), t1.index[val]))
    pairs.append(((t1s.identity_value, 1), t1.index[((ring.zero,),)]))
    w = DivisionWitness(
        t1, target, pairs,
        steps=[{"kind": "group_with_zero", "ring": ring.descriptor()}],
        label=f"{t1.label} into {t1s.label} x U_1",
    )
    return verify(w, limit)


def product_witness(w1: DivisionWitness, w2: DivisionWitness,
                    source: Monoid | None = None, limit: int = DEFAULT_LIMIT) -> DivisionWitness:
    """Componentwise product: A div B and C div D give A x C div B x D."""
    assert w1.verified and w2.verified
    target = ProductCarrier(w1.target, w2.target)
    src = source or direct_product(w1.source, w2.source)
    pre1, pre2 = w1.preimage_table(), w2.preimage_table()
    i1, i2 = w1.source.index, w2.source.index

    def embed(value):
        return (pre1[i1[value[0]]], pre2[i2[value[1]]])

    steps = list(w1.steps) + list(w2.steps) + [{"kind": "product_witness"}]
    return mapped_witness(src, embed, target, steps=steps,
                          label=f"({w1.label}) x ({w2.label})", limit=limit)


def compose(w1: DivisionWitness, w2: DivisionWitness,
            limit: int = DEFAULT_LIMIT) -> DivisionWitness:
    """From S div T and T div U derive S div U.

    Each generator pair (t, s) of the first witness is replaced by
    (least preimage of t under the second witness, s).
    """
    assert w1.verified and w2.verified, "compose needs verified witnesses"
    pairs = []
    for t, s in w1.pairs:
        idx = w2.source.index.get(t)
        if idx is None:
            raise PreimageMissing(f"{t!r} is not an element of the middle monoid")
        pairs.append((w2.preimage_of(idx), s))
    w = DivisionWitness(
        w1.source, w2.target, pairs,
        steps=list(w1.steps) + list(w2.steps) + [{"kind": "compose"}],
        label=f"{w1.source.label} into {getattr(w2.target, 'label', '?')}",
    )
    return verify(w, limit)


# -- exhaustive search ---------------------------------------------------------


def search_division(source: Monoid, target: Monoid, target_limit: int = 12,
                    assignment_budget: int = 200_000) -> DivisionWitness | None:
    """Exhaustive search for a division witness, or None.

    Enumerates generator subsets of the target in ascending bitmask order
    (one per distinct generated subsemigroup), then all generator-image
    assignments in lexicographic order, verifying each candidate.
    """
    n = len(target)
    if n > target_limit:
        raise SizeLimitExceeded(target_limit, "search target too large")
    if len(source) > n:
        return None
    seen_subs: set[frozenset] = set()
    for mask in range(1, 1 << n):
        gens = [i for i in range(n) if mask >> i & 1]
        closure = _index_closure(target, gens)
        key = frozenset(closure)
        if key in seen_subs:
            continue
        seen_subs.add(key)
        if len(closure) < len(source):
            continue
        total = len(source) ** len(gens)
        if total > assignment_budget:
            raise SizeLimitExceeded(assignment_budget, "generator assignment enumeration")
        for assignment in iter_product(range(len(source)), repeat=len(gens)):
            pairs = [(target.elements[g], s) for g, s in zip(gens, assignment)]
            w = DivisionWitness(source, target, pairs,
                                steps=[{"kind": "search", "generators": gens}],
                                label=f"search {source.label} in {target.label}")
            try:
                return verify(w, limit=n * len(source) + 1)
            except (NotFunctional, NotSurjective, SizeLimitExceeded):
                continue
    return None


def _index_closure(m: Monoid, gens: list[int]) -> list[int]:
    out = list(gens)
    seen = set(gens)
    frontier_start = 0
    while True:
        k = len(out)
        grew = False
        for i in range(k):
            for j in range(k):
                if i < frontier_start and j < frontier_start:
                    continue
                p = m.mul(out[i], out[j])
                if p not in seen:
                    seen.add(p)
                    out.append(p)
                    grew = True
        if not grew:
            break
        frontier_start = k
    return out


# -- serialization -------------------------------------------------------------


def witness_to_json(w: DivisionWitness) -> dict:
    verdict = {"status": w.status}
    if w.closure_size is not None:
        verdict["closure_size"] = w.closure_size
    if w.failure is not None:
        verdict["failure"] = w.failure
    return {
        "label": w.label,
        "source": w.source.descriptor(),
        "target": w.target.descriptor(),
        "pairs": [[value_json(t), value_json(w.source.elements[s])] for t, s in w.pairs],
        "steps": w.steps,
        "verdict": verdict,
    }


def witness_from_json(obj: dict) -> DivisionWitness:
    source = build_monoid(obj["source"])
    target = build_carrier(obj["target"])
    pairs = []
    for t_json, s_json in obj["pairs"]:
        sval = value_from_json(s_json)
        pairs.append((value_from_json(t_json), source.index[sval]))
    return DivisionWitness(source, target, pairs, steps=obj.get("steps", []),
                           label=obj.get("label", ""))
