from fractions import Fraction

import pytest

from drgkit import catalog
from drgkit.dual import (frobenius_check, hypersurface_dual_check,
                         koszul_complex_check, koszul_matrices,
                         koszul_numerical_identity, matrix_from_json,
                         matrix_to_json, quadratic_dual)
from drgkit.freealg import (Presentation, parse_presentation,
                            relation_span_equal)
from drgkit.ncgb import complete, hilbert_function
from drgkit.scalars import QQ


def test_dual_of_S_spans_stated_relations(S):
    dual = quadratic_dual(S.presentation, order_priority=(3, 1, 2, 0))
    want = Presentation(dual.field, dual.gens, dual.degrees,
                        [dual.poly(x) for x in catalog.DUAL_RELATIONS_S],
                        dual.order)
    assert relation_span_equal(dual, want)


def test_dual_of_commutative_plane_is_exterior():
    kxy = parse_presentation("vars x y\nrel x*y - y*x\n")
    dual = quadratic_dual(kxy)
    ext = Presentation(dual.field, dual.gens, dual.degrees,
                       [dual.poly(s) for s in ("a1^2", "a2^2", "a1*a2 + a2*a1")],
                       dual.order)
    assert relation_span_equal(dual, ext)
    rep = frobenius_check(dual, 2, 4)
    assert rep.nondegenerate


def test_dual_of_free_algebra():
    free = parse_presentation("vars x1 x2 x3\n")
    dual = quadratic_dual(free)
    assert len(dual.relations) == 9
    gb = complete(dual, 4)
    assert hilbert_function(gb, 3) == [1, 3, 0, 0]


def test_double_dual(S):
    dd = quadratic_dual(quadratic_dual(S.presentation))
    back = Presentation(S.presentation.field, S.presentation.gens,
                        S.presentation.degrees, dd.relations,
                        S.presentation.order)
    assert relation_span_equal(back, S.presentation)


def test_nonquadratic_rejected():
    cubic = parse_presentation("vars x y\nrel x*y*x - y^3\n")
    with pytest.raises(ValueError):
        quadratic_dual(cubic)


def test_frobenius_matrices_match_statement(S):
    dual = quadratic_dual(S.presentation, order_priority=(3, 1, 2, 0))
    bases = {k: [next(iter(dual.poly(x))) for x in v]
             for k, v in catalog.FROBENIUS_BASES_S.items()}
    rep = frobenius_check(dual, 4, 8, bases=bases)
    assert rep.nondegenerate and rep.hilbert[:5] == [1, 4, 6, 4, 1]
    ident6 = [[Fraction(int(i == j)) for j in range(6)] for i in range(6)]
    assert rep.splits[2]["matrix"] == ident6
    assert [[int(x) for x in row] for row in rep.splits[1]["matrix"]] == \
        catalog.FROBENIUS_M13_S
    assert [[int(x) for x in row] for row in rep.splits[3]["matrix"]] == \
        catalog.FROBENIUS_M31_S


def test_frobenius_split_symmetry(S):
    """(k, top-k) and (top-k, k) splits are both full rank or both singular."""
    dual = quadratic_dual(S.presentation, order_priority=(3, 1, 2, 0))
    rep = frobenius_check(dual, 4, 6)
    for k in rep.splits:
        assert rep.splits[k]["full_rank"] == rep.splits[4 - k]["full_rank"]


def test_koszul_complex_of_S_small_depth(S):
    rep = koszul_complex_check(S.presentation, S.aux["koszul_matrices"], 5)
    assert rep.is_complex and rep.euler_ok and not rep.failures


def test_derived_matrices_give_exact_complex(T):
    mats = koszul_matrices(T.presentation)
    assert [(len(m), len(m[0])) for m in mats] == [(1, 4), (4, 6), (6, 4), (4, 1)]
    rep = koszul_complex_check(T.presentation, mats, 5)
    assert rep.is_complex and not rep.failures


def test_sabotaged_complex_fails(S):
    mats = [m for m in S.aux["koszul_matrices"]]
    zero_col = [[{}], [{}], [{}], [{}]]
    rep = koszul_complex_check(S.presentation, mats[:3] + [zero_col], 5)
    assert any("A(-4)" in f for f in rep.failures)


def test_numerical_koszul(S, T):
    assert koszul_numerical_identity(S.presentation, 8)
    assert koszul_numerical_identity(T.presentation, 8)


def test_hypersurface_dual(S):
    rep = hypersurface_dual_check(S.presentation, S.aux["z"], 8)
    assert rep.central_ok and rep.hilbert_ok
    assert rep.quotient_hilbert[:5] == [1, 4, 6, 4, 1]
    with pytest.raises(ValueError):
        hypersurface_dual_check(S.presentation, {}, 6)
    with pytest.raises(ValueError):
        hypersurface_dual_check(S.presentation, S.presentation.poly("x1^2"), 6)


def test_matrix_json_round_trip(S):
    mats = S.aux["koszul_matrices"]
    enc = matrix_to_json(mats[1], S.presentation.gens, S.presentation.order)
    assert enc["rows"] == 4 and enc["cols"] == 6
    back = matrix_from_json(enc, S.presentation.gens, QQ)
    assert back == mats[1]
