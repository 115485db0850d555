import itertools
import random

import pytest

from drgkit.groups import (FiniteGroup, GroupError, NOT_CYCLOTOMIC, build_group,
                           closure, cyclic, cyclotomic_factorization,
                           cyclotomic_polynomial, dihedral, length_function,
                           m16, m16_craw, poincare_polynomial, poly_mul, sd16)


def test_m16_structure():
    G = m16()
    a, b = G.letters["a"], G.letters["b"]
    assert G.element_order(a) == 8
    ab = G.mul(a, b)
    assert G.conjugate(a, ab) == G.mul_word([a] * 5)
    assert G.mul(a, a) == G.letters["c"]
    assert G.mul_word([a] * 4) == G.letters["d"]


def test_sd16_magma_relations():
    G = sd16()
    L = G.letters
    assert G.mul(L["a"], L["a"]) == L["d"] == G.mul(L["c"], L["c"])
    assert G.mul(L["b"], L["b"]) == 0 and G.mul(L["d"], L["d"]) == 0
    inv_a = G.inverse[L["a"]]
    assert G.mul_word([inv_a, L["b"], L["a"]]) == G.mul(L["b"], L["c"])
    assert G.mul_word([inv_a, L["c"], L["a"]]) == G.mul(L["c"], L["d"])
    assert G.mul_word([G.inverse[L["b"]], L["c"], L["b"]]) == G.mul(L["c"], L["d"])
    assert all(G.mul(L["d"], g) == G.mul(g, L["d"]) for g in range(16))


def test_dihedral8():
    D = dihedral(8)
    r, rho = D.index_of("r"), D.index_of("rho")
    assert D.element_order(r) == 2 and D.element_order(rho) == 4
    assert D.mul(r, rho) == D.mul_word([rho, rho, rho, r])


def test_verification_rejects_broken_tables():
    with pytest.raises(GroupError):
        FiniteGroup([[0, 1], [1, 1]])
    # non-associative Latin square (order 5 loop)
    loop = [[0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 3, 4, 0, 1],
            [3, 4, 1, 2, 0],
            [4, 2, 0, 1, 3]]
    with pytest.raises(GroupError):
        FiniteGroup(loop)


def test_closures():
    G = m16()
    a, b = G.letters["a"], G.letters["b"]
    assert len(closure(G, [a, G.mul(a, b)])) == 16
    assert closure(G, []) == {0}
    S = sd16()
    # Magma's a = rho*sigma has order four in the semidihedral group
    assert len(closure(S, [S.letters["a"]])) == 4
    assert len(closure(S, [1])) == 8


def test_lengths_and_poincare():
    C = m16_craw()
    gens = [C.letters["a"], C.letters["b"]]
    dist = length_function(C, gens)
    assert dist[0] == 0
    p = poincare_polynomial(C, gens)
    assert p == [1, 2, 3, 4, 3, 2, 1]
    assert sum(p) == 16
    # subadditivity on random pairs
    rng = random.Random(4)
    for _ in range(60):
        g, h = rng.randrange(16), rng.randrange(16)
        assert dist[C.mul(g, h)] <= dist[g] + dist[h]
    # all-elements generating set: everything has length one
    G = m16()
    p_all = poincare_polynomial(G, list(range(1, 16)))
    assert p_all == [1, 15]
    with pytest.raises(GroupError):
        length_function(G, [G.letters["c"]])   # does not generate


def test_poincare_value_at_one_random_sets():
    G = sd16()
    rng = random.Random(6)
    trials = 0
    while trials < 10:
        size = rng.randint(2, 5)
        gens = rng.sample(range(1, 16), size)
        if len(closure(G, gens)) != 16:
            continue
        p = poincare_polynomial(G, gens)
        assert sum(p) == 16
        trials += 1


def test_cyclotomic_basics():
    assert list(cyclotomic_polynomial(1)) == [-1, 1]
    assert list(cyclotomic_polynomial(2)) == [1, 1]
    assert list(cyclotomic_polynomial(4)) == [1, 0, 1]
    assert list(cyclotomic_polynomial(8)) == [1, 0, 0, 0, 1]
    # Phi_n(1) = p for prime powers, 1 otherwise
    for n, val in ((2, 2), (3, 3), (4, 2), (8, 2), (9, 3), (6, 1), (12, 1)):
        assert sum(cyclotomic_polynomial(n)) == val


def test_cyclotomic_factorization_examples():
    assert cyclotomic_factorization([1, 4, 6, 4, 1]) == [(2, 4)]
    assert cyclotomic_factorization([1, 2, 3, 4, 3, 2, 1]) == [(2, 2), (4, 2)]
    assert cyclotomic_factorization([1, 1, 0, 1]) == NOT_CYCLOTOMIC
    assert cyclotomic_factorization([1]) == []


def test_factorizer_agrees_with_exhaustive_search():
    """Seeded sampling of products of cyclotomics of degree <= 8 and of
    non-products with small coefficients."""
    rng = random.Random(12)
    candidates = [n for n in range(1, 31)
                  if len(cyclotomic_polynomial(n)) - 1 <= 8]

    def exhaustive(p):
        hits = []

        def rec(q, start):
            if q == [1]:
                return True
            for n in candidates[start:]:
                phi = list(cyclotomic_polynomial(n))
                from drgkit.groups import poly_divmod_exact
                res = poly_divmod_exact(q, phi)
                if res is not None and res[1] == [0]:
                    if rec(res[0], candidates.index(n)):
                        return True
            return False

        return rec(list(p), 0)

    for _ in range(15):
        k = rng.randint(1, 3)
        prod = [1]
        for _ in range(k):
            n = rng.choice(candidates[1:])   # avoid Phi_1 (negative constant)
            if len(poly_mul(prod, list(cyclotomic_polynomial(n)))) - 1 > 8:
                continue
            prod = poly_mul(prod, list(cyclotomic_polynomial(n)))
        got = cyclotomic_factorization(prod)
        assert got != NOT_CYCLOTOMIC
        rebuilt = [1]
        for n, m in got:
            for _ in range(m):
                rebuilt = poly_mul(rebuilt, list(cyclotomic_polynomial(n)))
        assert rebuilt == prod
    for _ in range(15):
        deg = rng.randint(2, 8)
        p = [1] + [rng.randint(0, 5) for _ in range(deg)]
        if p[-1] == 0:
            p[-1] = 1
        assert (cyclotomic_factorization(p) != NOT_CYCLOTOMIC) == exhaustive(p)


def test_group_json_round_trip():
    G = sd16()
    back = FiniteGroup.from_json(G.to_json())
    assert back.table == G.table and back.names == G.names


def test_build_group_kinds():
    assert build_group("cyclic", 1).order == 1
    assert build_group("dihedral", 8).order == 8
    assert build_group("M16").order == 16
    prod = build_group("direct_product", cyclic(2), cyclic(3))
    assert prod.order == 6
    with pytest.raises(GroupError):
        build_group("semidirect_C_m_by_C2", 8, 2)   # 2^2 != 1 mod 8
