import pytest

from propchecks import (
    elementary_row_orbits_match_l_classes,
    greens_vs_multiplication_orbits,
    projective_quotient_respects_structure,
    regularity_three_ways,
)


@pytest.mark.parametrize("kind,n,spec", [("T", 2, "2"), ("T", 2, "3"), ("UT", 3, "2")])
def test_greens_match_orbits(fam, kind, n, spec):
    assert greens_vs_multiplication_orbits(fam(kind, n, spec)) == 0


@pytest.mark.parametrize("spec", ["2", "3"])
def test_elementary_row_operations_generate_l(fam, spec, request):
    ring = request.getfixturevalue({"2": "z2", "3": "z3"}[spec])
    assert elementary_row_orbits_match_l_classes(fam("T", 2, spec), ring) == 0


@pytest.mark.parametrize("kind,n,spec", [("T", 2, "2"), ("T", 2, "3"), ("UT", 3, "2")])
def test_regularity_three_ways(fam, kind, n, spec, request):
    ring = request.getfixturevalue({"2": "z2", "3": "z3"}[spec])
    assert regularity_three_ways(fam(kind, n, spec), ring) == 0


def test_projective_quotient(fam):
    t2 = fam("T", 2, "3")
    scalars = [t2.identity, t2.index[((2, 0), (0, 2))]]
    assert projective_quotient_respects_structure(t2, scalars) == 0
