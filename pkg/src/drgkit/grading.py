"""Group gradings on presentations and the dual-reflection-group search.

A GradeAssignment puts every generator in a non-identity grade; relation
synthesis equates same-grade quadratic products of generators, which is how
the catalog algebras arise from their grade tables.  The identity-component
machinery certifies generator sets, free-module ranks, and the covariant
Hilbert identity entirely through bounded-degree Groebner data.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .freealg import (Presentation, MonomialOrder, nc_mul, nc_sub, nc_add,
                      format_poly, nc_homogeneous_degree)
from .groups import closure, generates, poincare_polynomial, cyclotomic_factorization, NOT_CYCLOTOMIC
from .ncgb import (complete, normal_form, standard_monomials, hilbert_function,
                   quotient_presentation, series_times_products)
from .scalars import QQ, is_zero


@dataclass
class GradeAssignment:
    group: object
    grades: tuple   # element index per generator

    def __post_init__(self):
        if any(g == 0 for g in self.grades):
            raise ValueError("generator grades must avoid the identity")
        if not generates(self.group, set(self.grades)):
            raise ValueError("generator grades must generate the group "
                             "(inner-faithfulness proxy)")

    def word_grade(self, word):
        g = 0
        for x in word:
            g = self.group.table[g][self.grades[x]]
        return g

    def grade_set(self):
        return sorted(set(self.grades))


def check_homogeneous(p, ga):
    """True iff every relation's words all share one group grade."""
    for rel in p.relations:
        grades = {ga.word_grade(w) for w in rel}
        if len(grades) > 1:
            return False
    return True


def relation_grades(p, ga):
    out = []
    for rel in p.relations:
        grades = {ga.word_grade(w) for w in rel}
        out.append(grades.pop() if len(grades) == 1 else None)
    return out


def grade_table(ga):
    """Matrix of grades of the quadratic products x_i x_j."""
    n = len(ga.grades)
    return [[ga.word_grade((i, j)) for j in range(n)] for i in range(n)]


def synthesize_relations(ga, coeff_set=(Fraction(1),), gens=None, field=QQ,
                         order_priority=None):
    """All candidate presentations obtained by equating same-grade products.

    Products sharing a non-identity grade are chained pairwise in row-major
    table order, giving relations p - lambda*q with lambda from coeff_set;
    one presentation is returned per coefficient vector.
    """
    n = len(ga.grades)
    gens = tuple(gens) if gens else tuple(f"x{i+1}" for i in range(n))
    table = grade_table(ga)
    by_grade = {}
    for i in range(n):
        for j in range(n):
            by_grade.setdefault(table[i][j], []).append((i, j))
    pair_slots = []
    for g in sorted(by_grade):
        if g == 0:
            continue
        prods = by_grade[g]
        for a, b in zip(prods, prods[1:]):
            pair_slots.append((a, b))
    out = []
    for lambdas in itertools.product(sorted(coeff_set, key=str), repeat=len(pair_slots)):
        rels = []
        for ((i1, j1), (i2, j2)), lam in zip(pair_slots, lambdas):
            rels.append({(i1, j1): field.one, (i2, j2): -field.coerce(lam)})
        pres = Presentation(field, gens, (1,) * n, rels,
                            MonomialOrder(tuple(order_priority) if order_priority
                                          else tuple(range(n)), (1,) * n))
        assert check_homogeneous(pres, ga)
        out.append(pres)
    return out


# ---------------------------------------------------------------------------
# identity component analysis
# ---------------------------------------------------------------------------

def _span_rows(polys, word_index):
    rows = []
    for p in polys:
        row = [Fraction(0)] * len(word_index)
        for w, c in p.items():
            row[word_index[w]] = c
        rows.append(row)
    return rows


@dataclass
class IdentityComponentReport:
    hilbert: list           # dim (A_e)_d for d = 0..D
    generators: list        # minimal generating set, as NCPolys (here monomials)
    generator_degrees: list
    commutation: dict       # (i, j) -> 'commute' | 'anticommute' | 'neither'

    def generator_strings(self, gens):
        return [format_poly(g, gens) for g in self.generators]


def identity_component_report(gb, ga, D):
    """Hilbert function, minimal generators, and commutation data of A_e.

    Generator discovery is greedy by degree: a grade-e basis element is a new
    generator iff it falls outside the span of products of earlier ones.
    """
    gb.require(D)
    e_basis = {}
    for d in range(D + 1):
        e_basis[d] = [w for w in standard_monomials(gb, d) if ga.word_grade(w) == 0]
    hilbert = [len(e_basis[d]) for d in range(D + 1)]

    generators = []
    gen_degrees = []
    # spans[d]: list of NCPolys spanning the degree-d part of the subalgebra
    spans = {0: [{(): Fraction(1)}]}
    for d in range(1, D + 1):
        produced = []
        for k, y in enumerate(generators):
            dy = gen_degrees[k]
            if dy < d and spans.get(d - dy):
                for s in spans[d - dy]:
                    produced.append(normal_form(nc_mul(y, s), gb))
        word_index = {w: i for i, w in enumerate(e_basis[d])}
        rows = _span_rows([p for p in produced if p], word_index)
        basis_rows = linalg.row_space_basis(rows) if rows else []
        covered = len(basis_rows)
        if covered < len(e_basis[d]):
            # extend to a basis of (A_e)_d with new generators (monomials)
            current = list(basis_rows)
            for w in e_basis[d]:
                vec = [Fraction(0)] * len(e_basis[d])
                vec[word_index[w]] = Fraction(1)
                if not linalg.in_row_space(vec, current):
                    generators.append({w: Fraction(1)})
                    gen_degrees.append(d)
                    current.append(vec)
                    current = linalg.row_space_basis(current)
        spans[d] = [{e_basis[d][i]: c for i, c in enumerate(row) if not is_zero(c)}
                    for row in linalg.row_space_basis(
                        _span_rows([{w: Fraction(1)} for w in e_basis[d]], word_index))]
        # (A_e)_d itself is now covered; store its full span for later products
    commutation = {}
    for i in range(len(generators)):
        for j in range(i + 1, len(generators)):
            if gen_degrees[i] + gen_degrees[j] > gb.complete_through:
                commutation[(i, j)] = "unknown"  # product outside the certificate
                continue
            yi, yj = generators[i], generators[j]
            if not normal_form(nc_sub(nc_mul(yi, yj), nc_mul(yj, yi)), gb):
                commutation[(i, j)] = "commute"
            elif not normal_form(nc_add(nc_mul(yi, yj), nc_mul(yj, yi)), gb):
                commutation[(i, j)] = "anticommute"
            else:
                commutation[(i, j)] = "neither"
    return IdentityComponentReport(hilbert, generators, gen_degrees, commutation)


def free_module_certificate(gb, ga, D, report=None):
    """Certify H_{A/<Y>} = prod(1 - t^{d_i}) H_A through D for the found Y.

    Returns (ok, coset_basis_words, quotient_hilbert); ok is False with the
    first mismatching degree encoded in the hilbert comparison if the free
    module identity fails.
    """
    p = gb.source
    if report is None:
        report = identity_component_report(gb, ga, D)
    h_a = hilbert_function(gb, D)
    expected = series_times_products(h_a, report.generator_degrees, D)
    q = quotient_presentation(p, report.generators)
    gb_q = complete(q, D)
    h_q = hilbert_function(gb_q, D)
    ok = h_q == expected
    basis = []
    for d in range(D + 1):
        basis.extend(standard_monomials(gb_q, d))
    return ok, basis, h_q


def covariant_hilbert_check(gb, ga, gen_set, D):
    """True iff H_{A/<(A_e)_{>=1}>} equals the Poincare polynomial through D."""
    p = gb.source
    report = identity_component_report(gb, ga, D)
    q = quotient_presentation(p, report.generators)
    gb_q = complete(q, D)
    h_q = hilbert_function(gb_q, D)
    target = poincare_polynomial(ga.group, gen_set)
    target = list(target) + [0] * (D + 1 - len(target))
    return h_q == target[:D + 1], h_q


# ---------------------------------------------------------------------------
# the dual-reflection-group search
# ---------------------------------------------------------------------------

@dataclass
class Candidate:
    generating_set: tuple
    poincare: list
    poincare_factorization: object
    presentation: Presentation
    grades: tuple
    hilbert: list
    hilbert_ok: bool
    identity_component: IdentityComponentReport

    def to_json(self, group):
        return {
            "generating_set": [group.names[g] for g in self.generating_set],
            "grades": [group.names[g] for g in self.grades],
            "poincare": self.poincare,
            "poincare_factorization": self.poincare_factorization,
            "relations": [format_poly(r, self.presentation.gens, self.presentation.order)
                          for r in self.presentation.relations],
            "hilbert": self.hilbert,
            "hilbert_ok": self.hilbert_ok,
            "identity_component": {
                "hilbert": self.identity_component.hilbert,
                "generators": self.identity_component.generator_strings(
                    self.presentation.gens),
                "generator_degrees": self.identity_component.generator_degrees,
                "commutation": {f"{i},{j}": v for (i, j), v
                                in self.identity_component.commutation.items()},
            },
            "verdict": "survivor" if self.hilbert_ok else "rejected",
        }


@dataclass
class SearchReport:
    group_name: str
    n: int
    depth: int
    sets_examined: int
    sets_cyclotomic: int
    candidates: list          # all screened candidates
    survivors: list           # candidates passing the Hilbert screen

    def to_json(self, group):
        return {
            "group": self.group_name,
            "generators_per_set": self.n,
            "depth": self.depth,
            "sets_examined": self.sets_examined,
            "sets_with_cyclotomic_poincare": self.sets_cyclotomic,
            "survivors": [c.to_json(group) for c in self.survivors],
        }


def _conjugacy_canonical(group, subset):
    best = None
    for h in range(group.order):
        img = tuple(sorted(group.conjugate(g, h) for g in subset))
        if best is None or img < best:
            best = img
    return best


def search_dual_reflection(group, n, D, coeff_set=(Fraction(1),),
                           group_name="G", exhaustive=False, max_candidates=200000):
    """Search size-n generating subsets for dual-reflection-group candidates.

    Pipeline per subset: generation check, cyclotomic Poincare filter,
    relation synthesis over coeff_set, then a Hilbert screen against
    (1-t)^{-n} through D plus an identity-component report for survivors.
    Candidates are screened in deterministic input order.
    """
    if group.is_abelian():
        raise ValueError("the group is abelian; dual reflection groups are "
                         "nonabelian by assumption")
    if n > 6 or group.order > 32:
        raise ValueError("search is desk-scale: n <= 6 and |G| <= 32")
    from math import comb
    target = [comb(d + n - 1, n - 1) for d in range(D + 1)]
    seen_orbits = set()
    examined = 0
    cyclo = 0
    candidates = []
    survivors = []
    for subset in itertools.combinations(range(1, group.order), n):
        if not exhaustive:
            canon = _conjugacy_canonical(group, subset)
            if canon in seen_orbits:
                continue
            seen_orbits.add(canon)
        examined += 1
        if not generates(group, set(subset)):
            continue
        p_poly = poincare_polynomial(group, list(subset))
        fact = cyclotomic_factorization(p_poly)
        if fact == NOT_CYCLOTOMIC:
            continue
        cyclo += 1
        ga = GradeAssignment(group, tuple(subset))
        for pres in synthesize_relations(ga, coeff_set):
            if len(candidates) >= max_candidates:
                raise ResourceWarning("candidate budget exceeded")
            gb = complete(pres, D)
            h = hilbert_function(gb, D)
            ok = h == target
            report = identity_component_report(gb, ga, D) if ok else \
                IdentityComponentReport([], [], [], {})
            cand = Candidate(tuple(subset), p_poly, fact, pres, tuple(subset),
                             h, ok, report)
            candidates.append(cand)
            if ok:
                survivors.append(cand)
    return SearchReport(group_name, n, D, examined, cyclo, candidates, survivors)


def matches_up_to_relabeling(candidate_pres, candidate_grades, target_pres,
                             target_grades):
    """Does some generator permutation carry the candidate onto the target?

    Both the relation span and the grade assignment must match.
    """
    from .freealg import relation_span_equal
    n = candidate_pres.ngens
    for perm in itertools.permutations(range(n)):
        if tuple(candidate_grades[perm[i]] for i in range(n)) != tuple(target_grades):
            continue
        relabeled = [{tuple(perm.index(g) for g in w): c for w, c in rel.items()}
                     for rel in candidate_pres.relations]
        relabeled_pres = Presentation(candidate_pres.field, target_pres.gens,
                                      target_pres.degrees, relabeled,
                                      target_pres.order)
        if relation_span_equal(relabeled_pres, target_pres):
            return True
    return False
