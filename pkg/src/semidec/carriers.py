"""Multiplication carriers and their serializable descriptors.

A carrier is anything a division witness can multiply target values in:
an enumerated Monoid, a direct product of carriers, or a WreathContext.
All three expose mul_value / identity_value / label / descriptor().
Descriptors are plain dicts from which ``build_carrier`` reconstructs an
equivalent carrier in a fresh process, which is what makes certificates
re-checkable from their serialized form.
"""

from __future__ import annotations

from semidec.monoid import Monoid
from semidec.wreath import WreathContext


class ProductCarrier:
    def __init__(self, left, right):
        self.left = left
        self.right = right
        self.label = f"({left.label} x {right.label})"

    @property
    def identity_value(self):
        return (self.left.identity_value, self.right.identity_value)

    def mul_value(self, x, y):
        return (self.left.mul_value(x[0], y[0]), self.right.mul_value(x[1], y[1]))

    def descriptor(self) -> dict:
        return {
            "kind": "product_carrier",
            "left": self.left.descriptor(),
            "right": self.right.descriptor(),
        }


def build_ring(desc: dict):
    from semidec.semiring import from_json, make_boolean_semiring, make_prime_field

    if "builtin" in desc:
        if desc["builtin"] == "zp":
            return make_prime_field(desc["p"])
        if desc["builtin"] == "bool":
            return make_boolean_semiring()
        raise ValueError(f"unknown builtin ring {desc['builtin']!r}")
    return from_json(desc["table"])


def build_monoid(desc: dict) -> Monoid:
    from semidec.families import FamilySpec, augmented_monoid, build_family, constants_monoid, u1
    from semidec.keys import value_from_json
    from semidec.monoid import close_generators, direct_product, maximal_subgroup, quotient_by_central_units

    kind = desc["kind"]
    if kind == "family":
        fam = desc["family"]
        if fam == "U1":
            return u1()
        if fam == "constants":
            return constants_monoid(desc["points"])
        return build_family(FamilySpec(fam, desc["n"], build_ring(desc["ring"])))
    if kind == "close":
        carrier = build_carrier(desc["carrier"])
        gens = [value_from_json(g) for g in desc["generators"]]
        ident = value_from_json(desc["identity"]) if "identity" in desc else carrier.identity_value
        return close_generators(
            gens,
            carrier.mul_value,
            ident,
            label=desc.get("label", ""),
            provenance=desc,
        )
    if kind == "transformation_close":
        from semidec.families import transformation_closure

        return transformation_closure(
            [tuple(value_from_json(g)) for g in desc["generators"]],
            label=desc.get("label", ""),
        )
    if kind == "product":
        return direct_product(build_monoid(desc["left"]), build_monoid(desc["right"]))
    if kind == "quotient_central":
        base = build_monoid(desc["base"])
        z = [base.index[value_from_json(v)] for v in desc["subgroup"]]
        return quotient_by_central_units(base, z)[0]
    if kind == "h_class_group":
        base = build_monoid(desc["base"])
        return maximal_subgroup(base, base.index[value_from_json(desc["idempotent"])])
    if kind == "augmented":
        return augmented_monoid(build_monoid(desc["base"]))
    if kind == "wreath_enum":
        from semidec.wreath import enumerate_wreath

        return enumerate_wreath(WreathContext(build_carrier(desc["top"]), build_monoid(desc["base"])))
    raise ValueError(f"cannot rebuild monoid from descriptor kind {kind!r}")


def build_carrier(desc: dict):
    kind = desc["kind"]
    if kind == "wreath_ctx":
        return WreathContext(build_carrier(desc["top"]), build_monoid(desc["base"]))
    if kind == "product_carrier":
        return ProductCarrier(build_carrier(desc["left"]), build_carrier(desc["right"]))
    return build_monoid(desc)
