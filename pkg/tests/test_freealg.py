import random
from fractions import Fraction

import pytest

from drgkit.freealg import (MonomialOrder, Presentation, PresentationError,
                            apply_linear_substitution, compare_words,
                            format_poly, nc_mul, parse_poly,
                            parse_presentation, print_presentation,
                            relation_span_equal)
from drgkit import catalog
from drgkit.scalars import QQ


def test_parse_catalog_and_round_trip():
    for key, src in catalog.PRESENTATION_SOURCES.items():
        pres = parse_presentation(src)
        text = print_presentation(pres)
        again = parse_presentation(text)
        assert print_presentation(again) == text
        assert relation_span_equal(pres, again)


def test_free_algebra_on_one_generator():
    pres = parse_presentation("vars x\n")
    assert pres.relations == [] and pres.field == QQ


def test_inhomogeneous_rejected_with_position():
    with pytest.raises(PresentationError) as err:
        parse_presentation("vars x1 x2 x3\nrel x1*x2 - x3\n")
    assert "line 2" in str(err.value)


def test_unknown_generator_rejected():
    with pytest.raises(PresentationError):
        parse_presentation("vars x\nrel x*y\n")


def test_scalar_literals_in_relations():
    pres = parse_presentation(
        "field QQ(zeta8)\nvars x y\nrel x*y - 3/2*zeta8^3*y*x\n")
    rel = pres.relations[0]
    assert len(rel) == 2


def test_compare_words_order(S):
    o = S.presentation.order
    # variable priority x3 < x2 < x1 < x4
    assert compare_words(o, (2,), (3,)) == -1
    assert compare_words(o, (0, 1), (0, 1)) == 0
    assert compare_words(o, (3, 2), (2, 3, 2)) == -1   # degree first
    assert compare_words(o, (0, 1), (2, 2)) == 1


def test_order_is_total_and_sort_stable(S):
    o = S.presentation.order
    rng = random.Random(2)
    words = [tuple(rng.randrange(4) for _ in range(rng.randrange(5)))
             for _ in range(60)]
    once = sorted(set(words), key=o.key)
    assert sorted(once, key=o.key) == once
    for u, v in zip(once, once[1:]):
        assert compare_words(o, u, v) == -1


def test_substitution_inverse_restores_span():
    R = catalog.load_builtin("R_original").presentation
    A = [[Fraction(x) for x in row] for row in catalog.CHANGE_OF_VARIABLES_R]
    sub = apply_linear_substitution(R, A)
    from drgkit.linalg import mat_inverse
    back = apply_linear_substitution(sub, mat_inverse(A))
    assert relation_span_equal(back, R)


def test_substitution_identity_and_singular():
    R = catalog.load_builtin("R_original").presentation
    ident = [[Fraction(int(i == j)) for j in range(4)] for i in range(4)]
    assert relation_span_equal(apply_linear_substitution(R, ident), R)
    singular = [[Fraction(1)] * 4 for _ in range(4)]
    with pytest.raises(ValueError):
        apply_linear_substitution(R, singular)


def test_span_equal_scaling_and_difference(S, T):
    scaled = Presentation(S.presentation.field, S.presentation.gens,
                          S.presentation.degrees,
                          [{w: -c for w, c in rel.items()}
                           for rel in S.presentation.relations],
                          S.presentation.order)
    assert relation_span_equal(S.presentation, scaled)
    assert relation_span_equal(S.presentation, S.presentation)
    assert not relation_span_equal(S.presentation, T.presentation)


def test_poly_printing_parses_back(S):
    gens = S.presentation.gens
    rng = random.Random(9)
    for _ in range(30):
        p = {}
        for _ in range(rng.randrange(1, 5)):
            w = tuple(rng.randrange(4) for _ in range(rng.randrange(4)))
            p[w] = Fraction(rng.randint(-5, 5) or 1, rng.randint(1, 3))
        text = format_poly(p, gens, S.presentation.order)
        back = parse_poly(text, gens, QQ)
        assert back == {w: c for w, c in p.items()}, text
