import random
from fractions import Fraction

import pytest

from drgkit import catalog
from drgkit.commalg import c_eval, c_subs_polys, hilbert_data, parse_cpoly
from drgkit.geometry import (MVARS, NotExpressibleError, component_intersections,
                             derive_ruling_two, line_from_pluecker, line_matrix,
                             lines_through_point, pluecker_embed,
                             pluecker_polynomial, point_on_line,
                             point_scheme_ideal, proj_eq, proj_normalize,
                             quadric_ruling_check, relation_matrix,
                             rewrite_in_pluecker, ruling_to_pluecker_curve,
                             verify_point_and_tau)
from drgkit.scalars import IMAG, Zeta8, is_zero


def test_relation_matrix_matches_statement(S):
    geo = S.aux["geometry_presentation"]
    M = relation_matrix(geo)
    X = ("x1", "x2", "x3", "x4")
    expect = [["0", "x1", "-x3", "0"],
              ["x2", "0", "0", "-x4"],
              ["0", "0", "x1", "-x2"],
              ["-x3", "0", "x2", "0"],
              ["0", "-x4", "0", "x1"],
              ["-x4", "x3", "0", "0"]]
    for r in range(6):
        for k in range(4):
            assert M[r][k] == parse_cpoly(expect[r][k], X)


def test_relation_matrix_reconstructs_relations(S):
    geo = S.aux["geometry_presentation"]
    M = relation_matrix(geo)
    # M x reproduces the relation list in order
    for r, rel in enumerate(geo.relations):
        rebuilt = {}
        for k in range(4):
            for mono, c in M[r][k].items():
                j = mono.index(1)
                w = (j, k)
                rebuilt[w] = rebuilt.get(w, Fraction(0)) + c
        rebuilt = {w: c for w, c in rebuilt.items() if c}
        assert rebuilt == rel


def test_pluecker_embedding_invariance():
    rng = random.Random(3)
    for _ in range(25):
        p = tuple(Fraction(rng.randint(-5, 5)) for _ in range(4))
        q = tuple(Fraction(rng.randint(-5, 5)) for _ in range(4))
        try:
            line = line_matrix(p, q)
        except ValueError:
            continue
        plk = pluecker_embed(line)
        # invariance: scaling and row operations do not change the class
        p2 = tuple(3 * x for x in p)
        mixed = tuple(a + b for a, b in zip(p, q))
        try:
            line2 = line_matrix(p2, mixed)
        except ValueError:
            continue
        assert pluecker_embed(line2) == plk
        # the Plucker relation holds exactly
        P = pluecker_polynomial()
        assert is_zero(c_eval(P, list(plk)))
        back = line_from_pluecker(plk)
        assert pluecker_embed(back) == plk


def test_pluecker_injective_on_samples():
    rng = random.Random(5)
    seen = {}
    for _ in range(40):
        pts = [tuple(Fraction(rng.randint(-4, 4)) for _ in range(4))
               for _ in range(2)]
        try:
            line = line_matrix(*pts)
        except ValueError:
            continue
        plk = pluecker_embed(line)
        if plk in seen:
            assert seen[plk] == line
        seen[plk] = line


def test_basis_line_images():
    e1 = (Fraction(1), 0, 0, 0)
    e4 = (0, 0, 0, Fraction(1))
    e2 = (0, Fraction(1), 0, 0)
    e3 = (0, 0, Fraction(1), 0)
    assert pluecker_embed(line_matrix(e1, e4)) == \
        proj_normalize([0, 0, 1, 0, 0, 0])
    assert pluecker_embed(line_matrix(e2, e3)) == \
        proj_normalize([0, 0, 0, 1, 0, 0])


def test_point_scheme_of_S(S):
    bundle = catalog.geometry_bundle("S")
    hf, dim, deg = hilbert_data(bundle.point_ideal, 12)
    assert (dim, deg) == (0, 20)
    assert bundle.tau == catalog.expected_tau_map("S")
    p0 = bundle.points["p0,0"]
    ok, img = verify_point_and_tau(p0, bundle.matrix)
    assert ok and proj_eq(img, p0)
    not_point = tuple(map(Fraction, (1, 1, 1, 0)))
    ok, _ = verify_point_and_tau(not_point, bundle.matrix)
    assert not ok


def test_degenerate_matrix_reported(S):
    M = relation_matrix(S.aux["geometry_presentation"])
    with pytest.raises(ValueError):
        # the zero vector of a generic constant-free matrix row pattern:
        # rank at e1 of a sabotaged matrix drops below three
        sab = [[{} for _ in range(4)] for _ in range(6)]
        verify_point_and_tau((Fraction(1), 0, 0, 0), sab)


def test_rewrite_rejects_non_invariant_input():
    # u1*v1^3-type monomials cannot come from exterior coordinates
    bad = {(1, 0, 0, 0, 1, 0, 0, 0): Fraction(1)}
    bad = {(1, 0, 0, 0, 3, 0, 0, 0): Fraction(1)}
    with pytest.raises(NotExpressibleError):
        rewrite_in_pluecker({(4, 0, 0, 0, 0, 0, 0, 4): Fraction(1)})


def test_line_scheme_dims(S, T):
    for key in ("S", "T"):
        bundle = catalog.geometry_bundle(key)
        hf, dim, deg = hilbert_data(bundle.line_ideal, 12)
        assert (dim, deg) == (1, 20)
        assert len(bundle.line_ideal.gens) == 46


def test_ruling_rows_S():
    bundle = catalog.geometry_bundle("S")
    for comp in bundle.components:
        res = quadric_ruling_check(bundle.rulings[comp.label], comp,
                                   full_ideal=bundle.line_ideal)
        assert res["ok"], (comp.label, res)


def test_ruling_derivation_rejects_non_ruling():
    X = ("x1", "x2", "x3", "x4")
    quad = parse_cpoly("x1*x3 - x2*x4", X)
    bad = ([parse_cpoly(c, ("s", "t")) for c in ("s", "0", "t", "0")],
           [parse_cpoly(c, ("s", "t")) for c in ("0", "s", "0", "t")])
    with pytest.raises(ValueError):
        derive_ruling_two(quad, bad)


def test_intersections_table_S():
    bundle = catalog.geometry_bundle("S")
    inter = component_intersections(bundle.components)
    assert set(inter) == set(catalog.INTERSECTION_TABLE_S)
    for pair, plks in inter.items():
        assert len(plks) == 2
        want = {frozenset(ab) for ab in catalog.INTERSECTION_TABLE_S[pair]}
        got = set()
        for plk in plks:
            line = line_from_pluecker(plk)
            got.add(frozenset(n for n, p in bundle.points.items()
                              if point_on_line(p, line)))
        assert got == want


def test_lines_through_point_and_generic_miss():
    bundle = catalog.geometry_bundle("S")
    p = bundle.points["e1"]
    found = lines_through_point(p, bundle.components)
    plks = {plk for _, plk in found}
    assert len(plks) == 3
    rng = random.Random(7)
    q = tuple(Fraction(rng.randint(1, 30), rng.randint(1, 7)) for _ in range(4))
    assert lines_through_point(q, bundle.components) == []


def test_r_prime_point_scheme_claims():
    alg = catalog.load_builtin("R_prime")
    M = relation_matrix(alg.presentation)
    ideal = point_scheme_ideal(M)
    line = [parse_cpoly(c, ("a", "b")) for c in ("a", "0", "b", "0")]
    assert all(not c_subs_polys(g, line, nparams=2) for g in ideal.gens)
    for sign in (1, -1):
        plane = [{(0, 0, 1): IMAG * sign}, {(1, 0, 0): Zeta8(1)},
                 {(0, 0, 1): Zeta8(1)}, {(0, 1, 0): Zeta8(1)}]
        assert all(not c_subs_polys(g, plane, nparams=3) for g in ideal.gens)
