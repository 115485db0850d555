from fractions import Fraction

import pytest

from drgkit import catalog
from drgkit.freealg import format_poly, parse_presentation
from drgkit.ncgb import complete
from drgkit.normal2 import (graded_automorphism_candidates,
                            normal_elements_deg2)


def test_commutative_plane_all_normal():
    kxy = parse_presentation("vars x y\nrel x*y - y*x\n")
    gb = complete(kxy, 4)
    rep = normal_elements_deg2(gb)
    assert rep.all_of_degree_two
    assert rep.dimension == 3 and rep.central_dimension == 3


def test_missing_point_data_rejected(S):
    gb = complete(S.presentation, 6)
    with pytest.raises(ValueError):
        normal_elements_deg2(gb)


def test_automorphism_candidates_of_S(S):
    bundle = catalog.geometry_bundle("S")
    sigmas = graded_automorphism_candidates(S.presentation, bundle.points,
                                            bundle.tau)
    assert len(sigmas) == 8
    ident = [[Fraction(int(i == j)) for j in range(4)] for i in range(4)]
    assert ident in sigmas
