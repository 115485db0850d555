"""Point schemes, line schemes, Plucker geometry, and incidence.

The pipeline follows the determinantal method: factor the relations as
M x = 0 and take 4x4 minors for the point scheme; for the line scheme, pass
to the quadratic dual, double the variables, take the 45 8x8 minors of the
10x8 matrix, rewrite them in the exterior coordinates N_ij = u_i v_j - u_j v_i,
and apply the orthogonality substitution into Plucker coordinates M_ij.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .commalg import (CIdeal, c_add, c_sub, c_mul, c_scale, c_eval, c_neg,
                      c_subs_polys, parse_cpoly, format_cpoly, lead_term,
                      deglex, c_normal_form, is_homogeneous)
from .dual import quadratic_dual
from .freealg import nc_homogeneous_degree
from .scalars import QQ, QQ_ZETA8, Zeta8, is_zero, zeta8_sqrt

MVARS = ("M12", "M13", "M14", "M23", "M24", "M34")
PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
# orthogonality: N_ij -> (sign, M-index)
ORTHO = {0: (1, 5), 1: (-1, 4), 2: (1, 3), 3: (1, 2), 4: (-1, 1), 5: (1, 0)}


def pluecker_polynomial():
    P = {}
    one = Fraction(1)

    def mon(*idx):
        m = [0] * 6
        for i in idx:
            m[i] += 1
        return tuple(m)

    P[mon(0, 5)] = one
    P[mon(1, 4)] = -one
    P[mon(2, 3)] = one
    return P


# ---------------------------------------------------------------------------
# points and lines
# ---------------------------------------------------------------------------

def proj_normalize(coords):
    """Scale so the first nonzero coordinate is 1; None for the zero vector."""
    coords = list(coords)
    pivot = None
    for x in coords:
        if not is_zero(x):
            pivot = x
            break
    if pivot is None:
        return None
    return tuple(x / pivot for x in coords)


def proj_eq(p, q):
    return proj_normalize(p) == proj_normalize(q)


def line_matrix(p, q):
    """Canonical (RREF) 2x4 representative of the line through p and q."""
    rows, pivots = linalg.rref([list(p), list(q)])
    if len(pivots) != 2:
        raise ValueError("points are equal; no unique line")
    return tuple(tuple(r) for r in rows[:2])


def pluecker_embed(line):
    """The six 2x2 minors (M12, M13, M14, M23, M24, M34), normalized."""
    a, b = line
    coords = [a[i] * b[j] - a[j] * b[i] for (i, j) in PAIRS]
    out = proj_normalize(coords)
    if out is None:
        raise ValueError("matrix has rank < 2")
    assert is_zero(out[0] * out[5] - out[1] * out[4] + out[2] * out[3])
    return out


def line_from_pluecker(m):
    """A 2x4 representative of the line with Plucker coordinates m."""
    A = [[Fraction(0)] * 4 for _ in range(4)]
    for (i, j), v in zip(PAIRS, (m[0], m[1], m[2], m[3], m[4], m[5])):
        A[i][j] = v
        A[j][i] = -v
    cols = [[A[r][c] for r in range(4)] for c in range(4)]
    rows = [c for c in cols if any(not is_zero(x) for x in c)]
    basis = linalg.row_space_basis(rows)
    if len(basis) != 2:
        raise ValueError("not a decomposable (rank-2) Plucker point")
    return tuple(tuple(r) for r in basis)


def point_on_line(p, line):
    return linalg.rank([list(line[0]), list(line[1]), list(p)]) == 2


# ---------------------------------------------------------------------------
# relation matrix and point scheme
# ---------------------------------------------------------------------------

def relation_matrix(pres):
    """Factor the quadratic relations as M x = 0 with M linear forms.

    Entry (r, k) is the linear form multiplying x_k from the left in
    relation r; the row order is the relation order of the presentation.
    """
    n = pres.ngens
    if n != 4:
        raise ValueError("the scheme pipeline expects 4 generators")
    rows = []
    for rel in pres.relations:
        if nc_homogeneous_degree(rel, pres.degrees) != 2:
            raise ValueError("relations must be quadratic")
        row = [{} for _ in range(n)]
        for w, c in rel.items():
            j, k = w
            mono = tuple(1 if t == j else 0 for t in range(n))
            row[k] = c_add(row[k], {mono: c})
        rows.append(row)
    return rows


def _det_cpoly(matrix):
    """Determinant of a small matrix of commutative polynomials."""
    n = len(matrix)
    if n == 1:
        return matrix[0][0]
    out = {}
    for i in range(n):
        entry = matrix[i][0]
        if not entry:
            continue
        sub = [row[1:] for r, row in enumerate(matrix) if r != i]
        term = c_mul(entry, _det_cpoly(sub))
        out = c_add(out, term if i % 2 == 0 else c_neg(term))
    return out


def point_scheme_ideal(M, varnames=("x1", "x2", "x3", "x4")):
    """The fifteen 4x4 minors of the 6x4 relation matrix."""
    if len(M) < 5:
        raise ValueError("need at least five relations for maximal minors")
    gens = []
    for rows in itertools.combinations(range(len(M)), 4):
        sub = [M[r] for r in rows]
        d = _det_cpoly(sub)
        if d:
            gens.append(d)
    return CIdeal(tuple(varnames), gens)


def evaluate_matrix(M, point):
    return [[c_eval(entry, list(point)) for entry in row] for row in M]


def verify_point_and_tau(p, M):
    """(is_point, tau_image): rank test of M(p) and its kernel direction."""
    scalar = evaluate_matrix(M, p)
    r = linalg.rank(scalar)
    if r < 3:
        raise ValueError(f"M(p) has rank {r} < 3 at {p}: degenerate point")
    if r == 4:
        return False, None
    kern = linalg.kernel_basis(scalar, 4)
    assert len(kern) == 1
    return True, proj_normalize(kern[0])


def tau_orbits(points, tau_map):
    """Partition point names into tau-orbits (tau_map: name -> name)."""
    seen = set()
    orbits = []
    for name in points:
        if name in seen:
            continue
        orbit = [name]
        seen.add(name)
        cur = tau_map[name]
        while cur != name:
            orbit.append(cur)
            seen.add(cur)
            cur = tau_map[cur]
        orbits.append(orbit)
    return orbits


# ---------------------------------------------------------------------------
# the 45-quartic line scheme pipeline
# ---------------------------------------------------------------------------

def _dual_relation_matrix(pres):
    dual = quadratic_dual(pres)
    return relation_matrix(dual), dual


_N_MONOMIALS = None
_N_PIVOTS = None


def _n_monomials():
    """Exponent tuples of the 126 quartic monomials in the six N variables."""
    global _N_MONOMIALS
    if _N_MONOMIALS is None:
        out = []
        for combo in itertools.combinations_with_replacement(range(6), 4):
            m = [0] * 6
            for i in combo:
                m[i] += 1
            out.append(tuple(m))
        _N_MONOMIALS = sorted(out)
    return _N_MONOMIALS


def _n_expansion(mono):
    """Expansion of an N-monomial as a polynomial in (u1..u4, v1..v4)."""
    poly = {(0,) * 8: Fraction(1)}
    for idx, e in enumerate(mono):
        i, j = PAIRS[idx]
        ui = tuple(1 if t == i else 0 for t in range(4)) + (0,) * 4
        vj = (0,) * 4 + tuple(1 if t == j else 0 for t in range(4))
        uj = tuple(1 if t == j else 0 for t in range(4)) + (0,) * 4
        vi = (0,) * 4 + tuple(1 if t == i else 0 for t in range(4))
        n_ij = {tuple(a + b for a, b in zip(ui, vj)): Fraction(1),
                tuple(a + b for a, b in zip(uj, vi)): Fraction(-1)}
        for _ in range(e):
            poly = c_mul(poly, n_ij)
    return poly


def _n_pivots():
    """Triangularized expansions: lead uv-monomial -> (expansion, N-combination).

    Built once; rewriting a bidegree-(4,4) polynomial in the N coordinates is
    then a sparse elimination whose exactness is guaranteed by construction.
    """
    global _N_PIVOTS
    if _N_PIVOTS is None:
        pivots = {}
        for mono in _n_monomials():
            exp = _n_expansion(mono)
            comb = {mono: Fraction(1)}
            while exp:
                mu = max(exp)
                if mu in pivots:
                    pe, pc = pivots[mu]
                    f = exp[mu] / pe[mu]
                    exp = c_sub(exp, c_scale(pe, f))
                    comb = c_sub(comb, c_scale(pc, f))
                else:
                    pivots[mu] = (exp, comb)
                    break
        _N_PIVOTS = pivots
    return _N_PIVOTS


class NotExpressibleError(RuntimeError):
    """A minor failed to rewrite in the N coordinates: pipeline invariant broken."""


def rewrite_in_pluecker(poly_uv):
    """Rewrite a bidegree-(4,4) polynomial in N's, then substitute M's."""
    pivots = _n_pivots()
    work = dict(poly_uv)
    comb = {}
    while work:
        mu = max(work)
        if mu not in pivots:
            raise NotExpressibleError(f"monomial {mu} is outside the N-span")
        pe, pc = pivots[mu]
        f = work[mu] / pe[mu]
        work = c_sub(work, c_scale(pe, f))
        comb = c_add(comb, c_scale(pc, f))
    out = {}
    for mono, c in comb.items():
        sign = 1
        m = [0] * 6
        for idx, e in enumerate(mono):
            s, tgt = ORTHO[idx]
            if s < 0 and e % 2 == 1:
                sign = -sign
            m[tgt] += e
        out = c_add(out, {tuple(m): c if sign > 0 else -c})
    return out


def line_scheme_ideal(pres):
    """The ideal of 45 quartics plus the Plucker polynomial, in M12..M34."""
    Mhat, dual = _dual_relation_matrix(pres)
    nrows = len(Mhat)
    if nrows != 10:
        raise ValueError("expected a 10x4 dual relation matrix")
    # coefficient tensor c[r][k][j]: coefficient of z_j in entry (r, k)
    coeff = [[[Fraction(0)] * 4 for _ in range(4)] for _ in range(nrows)]
    for r in range(nrows):
        for k in range(4):
            for mono, c in Mhat[r][k].items():
                j = mono.index(1)
                coeff[r][k][j] = c

    # 4x4 u-determinants for every 4-subset of rows, as 4-variable polynomials
    su_cache = {}

    def su(rows4):
        key = rows4
        if key not in su_cache:
            mat = []
            for r in rows4:
                row = []
                for k in range(4):
                    entry = {}
                    for j in range(4):
                        c = coeff[r][k][j]
                        if not is_zero(c):
                            mono = tuple(1 if t == j else 0 for t in range(4))
                            entry[mono] = c
                    row.append(entry)
                mat.append(row)
            su_cache[key] = _det_cpoly(mat)
        return su_cache[key]

    def extend_u(p):
        return {m + (0, 0, 0, 0): c for m, c in p.items()}

    def extend_v(p):
        return {(0, 0, 0, 0) + m: c for m, c in p.items()}

    gens = []
    for rows8 in itertools.combinations(range(nrows), 8):
        minor = {}
        for upos in itertools.combinations(range(8), 4):
            urows = tuple(rows8[i] for i in upos)
            vrows = tuple(rows8[i] for i in range(8) if i not in upos)
            du = su(urows)
            if not du:
                continue
            dv = su(vrows)
            if not dv:
                continue
            sign = (-1) ** (sum(upos) + 6)   # positions 0-based: sum + 0+1+2+3
            term = c_mul(extend_u(du), extend_v(dv))
            minor = c_add(minor, term if sign > 0 else c_neg(term))
        if minor:
            gens.append(rewrite_in_pluecker(minor))
        else:
            gens.append({})
    quartics = [g for g in gens if g]
    return CIdeal(MVARS, quartics + [pluecker_polynomial()])


# ---------------------------------------------------------------------------
# components, parametrizations, quadrics, rulings
# ---------------------------------------------------------------------------

@dataclass
class SchemeComponent:
    label: str
    ideal: CIdeal
    parametrization: list = None   # 6 CPolys in the parameters ("s","t")

    def check_parametrization(self, against=None):
        """Substituting the parametrization kills every generator."""
        ideal = against if against is not None else self.ideal
        if self.parametrization is None:
            raise ValueError(f"component {self.label} has no parametrization")
        for g in ideal.gens:
            if c_subs_polys(g, self.parametrization):
                return False
        return True


def component_parametrization_check(component, ideal):
    return component.check_parametrization(against=ideal)


def kernel_line_pluecker(form1, form2, nx=4):
    """Plucker coordinates of the solution line of two linear x-forms.

    The forms may have polynomial coefficients (e.g. in ruling parameters);
    entry i of each form is its x_i coefficient, a polynomial.  Returns the
    six coordinates as polynomials via the complementary-minor duality.
    """
    a, b = form1, form2
    p = {}
    for idx, (i, j) in enumerate(PAIRS):
        p[idx] = c_sub(c_mul(a[i], b[j]), c_mul(a[j], b[i]))
    # dual line: (m12..m34) = (p34, -p24, p23, p14, -p13, p12)
    return [p[5], c_neg(p[4]), p[3], p[2], c_neg(p[1]), p[0]]


def ruling_to_pluecker_curve(ruling, param_vars=("s", "t")):
    """Plucker parametrization (s,t) -> pi(line of the ruling).

    ruling is a pair of forms; each form is a list of 4 polynomials in the
    parameters (the x_i coefficients).
    """
    return kernel_line_pluecker(ruling[0], ruling[1])


@dataclass
class QuadricRuling:
    label: str
    quadric: dict                  # CPoly in x1..x4
    ruling_one: tuple              # pair of coefficient vectors over (s, t)
    ruling_two: tuple


def derive_ruling_two(quadric, ruling_one):
    """The opposite ruling, from the determinantal shape of the quadric.

    Writing ruling one as V(sA + tB, sC + tD) forces Q ~ AD - BC; the other
    ruling is then V(sA + tC, sB + tD).  Raises if Q is not proportional to
    AD - BC (i.e. the given family is not a ruling of the given quadric).
    """
    s_mono, t_mono = (1, 0), (0, 1)

    def split(formvec):
        a = [p.get(s_mono, Fraction(0)) for p in formvec]
        b = [p.get(t_mono, Fraction(0)) for p in formvec]
        return a, b

    A, B = split(ruling_one[0])
    C, D = split(ruling_one[1])

    def lin_poly(vec):
        return {tuple(1 if t == i else 0 for t in range(4)): c
                for i, c in enumerate(vec) if not is_zero(c)}

    ad_bc = c_sub(c_mul(lin_poly(A), lin_poly(D)), c_mul(lin_poly(B), lin_poly(C)))
    lam = None
    for m, c in ad_bc.items():
        if m in quadric:
            lam = c / quadric[m]
            break
    if lam is None or is_zero(lam) or c_sub(ad_bc, c_scale(quadric, lam)):
        raise ValueError("ruling one is not a ruling of the quadric")

    def form(svec, tvec):
        return [c_add({s_mono: sc} if not is_zero(sc) else {},
                      {t_mono: tc} if not is_zero(tc) else {})
                for sc, tc in zip(svec, tvec)]

    return (form(A, C), form(B, D))


def _point_on_ruling_line(ruling):
    """A generic point of the ruling line, as polynomials in (s, t, al, be)."""
    curve = ruling_to_pluecker_curve(ruling)
    # reconstruct two spanning columns of the antisymmetric matrix symbolically
    A = [[{} for _ in range(4)] for _ in range(4)]
    for idx, (i, j) in enumerate(PAIRS):
        A[i][j] = curve[idx]
        A[j][i] = c_neg(curve[idx])
    cols = [[A[r][c] for r in range(4)] for c in range(4)]
    nz = [c for c in cols if any(c)]
    # generic point = al * col_a + be * col_b for the first two independent cols
    return nz


def quadric_ruling_check(qr, component, full_ideal=None):
    """Table row verification for one line-scheme component.

    (a) both rulings lie on the quadric; (b) ruling one maps into the
    component ideal under pi; (c) ruling two does not; (d) the rank-drop
    locus of the component's incidence conditions is exactly the quadric.
    """
    results = {}
    # embed parameters: polynomials in (s, t); points in (s, t, al, be)
    for which, ruling in (("one", qr.ruling_one), ("two", qr.ruling_two)):
        cols = _point_on_ruling_line(ruling)
        # the ruling line must lie on the quadric: every point al*c1+be*c2
        spans = [c for c in cols]
        # check Q on the span of ALL nonzero columns (they all lie on the line)
        ok = True
        var_n = None
        for ca, cb in itertools.combinations(spans, 2):
            point = [c_add(_embed_st(a, 4, 0), _embed_st(b, 4, 1))
                     for a, b in zip(ca, cb)]
            # quadric is in the x-vars; point coords live in (s,t,al,be)
            val = c_subs_polys(qr.quadric, point, nparams=4)
            if val:
                ok = False
        results[f"ruling_{which}_on_quadric"] = ok
    curve1 = ruling_to_pluecker_curve(qr.ruling_one)
    curve2 = ruling_to_pluecker_curve(qr.ruling_two)
    results["ruling_one_in_component"] = all(
        not c_subs_polys(g, curve1) for g in component.ideal.gens)
    if full_ideal is not None:
        results["ruling_one_in_line_scheme"] = all(
            not c_subs_polys(g, curve1) for g in full_ideal.gens)
    results["ruling_two_in_component"] = all(
        not c_subs_polys(g, curve2) for g in component.ideal.gens)
    # (d) rank-drop locus: 3 incidence conditions, y-coefficient matrix
    lin_forms = [g for g in component.ideal.gens if _is_linear(g)]
    mat = _bilinear_condition_matrix(lin_forms)
    minors = []
    for colsub in itertools.combinations(range(4), 3):
        sub = [[mat[r][c] for c in colsub] for r in range(3)]
        minors.append(_det_cpoly(sub))
    quad_ok = True
    quotients = []
    for m in minors:
        quo = _exact_divide(m, qr.quadric)
        if quo is None:
            quad_ok = False
        else:
            quotients.append(quo)
    if quad_ok and quotients:
        rows = []
        for q in quotients:
            row = [Fraction(0)] * 4
            for mono, c in q.items():
                if sum(mono) == 1:
                    row[mono.index(1)] = c
            rows.append(row)
        r = linalg.rank(rows)
        if r < 4:
            kern = linalg.kernel_basis(rows, 4)
            quad_ok = all(is_zero(c_eval(qr.quadric, k)) for k in kern)
    results["rank_drop_is_quadric"] = quad_ok
    results["ok"] = (results["ruling_one_on_quadric"]
                     and results["ruling_two_on_quadric"]
                     and results["ruling_one_in_component"]
                     and not results["ruling_two_in_component"]
                     and results["rank_drop_is_quadric"])
    return results


def _embed_st(p, total, which):
    """Lift an (s,t)-polynomial into (s,t,al,be) multiplying by al or be."""
    out = {}
    for m, c in p.items():
        mm = list(m) + [0] * (total - len(m))
        mm[2 + which] += 1
        out[tuple(mm)] = c
    return out


def _is_linear(g):
    return g and all(sum(m) == 1 for m in g)


def _bilinear_condition_matrix(lin_forms):
    """Rows: substitute M_ij = x_i y_j - x_j y_i, collect y-coefficients.

    Entry (r, c) is the x-linear coefficient of y_c in condition r.
    """
    rows = []
    for form in lin_forms:
        row = [{} for _ in range(4)]
        for mono, c in form.items():
            idx = mono.index(1)
            i, j = PAIRS[idx]
            xi = tuple(1 if t == i else 0 for t in range(4))
            xj = tuple(1 if t == j else 0 for t in range(4))
            row[j] = c_add(row[j], {xi: c})
            row[i] = c_add(row[i], {xj: -c})
        rows.append(row)
    return rows


def _exact_divide(f, q):
    """f / q in the polynomial ring, or None if q does not divide f."""
    if not f:
        return {}
    order = deglex(len(next(iter(q))))
    quo = {}
    rem = dict(f)
    qm, qc = lead_term(q, order)
    while rem:
        m = max(rem, key=order.key)
        c = rem[m]
        if not all(a >= b for a, b in zip(m, qm)):
            return None
        shift = tuple(a - b for a, b in zip(m, qm))
        f2 = c / qc
        quo[shift] = f2
        rem = c_sub(rem, c_mul({shift: f2}, q))
    return quo


# ---------------------------------------------------------------------------
# incidence
# ---------------------------------------------------------------------------

def _binary_form_coeffs(p, degree):
    """Coefficients [c_0..c_degree] of a homogeneous (s,t)-poly, s^k t^(d-k)."""
    out = [Fraction(0)] * (degree + 1)
    for m, c in p.items():
        out[m[0]] = c
    return out


def _poly_gcd_univ(a, b):
    """Monic gcd of univariate coefficient lists (ascending degree)."""
    def trim(p):
        while p and is_zero(p[-1]):
            p.pop()
        return p

    a, b = trim(list(a)), trim(list(b))
    while b:
        # a mod b
        while len(a) >= len(b) and a:
            f = a[-1] / b[-1]
            shift = len(a) - len(b)
            for i in range(len(b)):
                a[shift + i] = a[shift + i] - f * b[i]
            trim(a)
        a, b = b, a
    if a:
        lc = a[-1]
        a = [x / lc for x in a]
    return a


def _roots_in_field(coeffs):
    """Roots of a univariate polynomial of degree <= 2 over QQ(zeta8)."""
    coeffs = [Zeta8.coerce(c) for c in coeffs]
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    if not coeffs:
        raise ValueError("zero polynomial")
    deg = len(coeffs) - 1
    if deg == 0:
        return []
    if deg == 1:
        return [-coeffs[0] / coeffs[1]]
    if deg == 2:
        a, b, c = coeffs[2], coeffs[1], coeffs[0]
        disc = b * b - 4 * a * c
        s = zeta8_sqrt(disc)
        if s is None:
            return []
        r1 = (-b + s) / (2 * a)
        r2 = (-b - s) / (2 * a)
        return [r1] if r1 == r2 else [r1, r2]
    raise ValueError("root extraction implemented through degree 2")


def common_roots_of_binary_forms(forms, degree):
    """Common projective roots [s:t] of homogeneous binary forms over QQ(zeta8)."""
    coeff_lists = [_binary_form_coeffs(f, degree) for f in forms if f]
    if not coeff_lists:
        return None   # identically zero system: whole P^1
    g = coeff_lists[0]
    for c in coeff_lists[1:]:
        g = _poly_gcd_univ(g, c)
        if len(g) == 1:
            break
    roots = []
    # root at t = 0 <=> all forms have zero coefficient at s^degree
    if all(is_zero(cl[degree]) for cl in coeff_lists):
        roots.append((Fraction(1), Fraction(0)))
    if len(g) > 1:
        for r in _roots_in_field([x for x in g]):
            roots.append((r, Fraction(1)))
    return roots


def incidence_conditions(point):
    """For fixed p, the four linear conditions on Plucker coords of lines
    through p: p_i m_jk - p_j m_ik + p_k m_ij for i<j<k."""
    conds = []
    pair_index = {pr: k for k, pr in enumerate(PAIRS)}
    for (i, j, k) in itertools.combinations(range(4), 3):
        form = {}
        for coef, (a, b) in ((point[i], (j, k)), (-point[j], (i, k)),
                             (point[k], (i, j))):
            if not is_zero(coef):
                mono = tuple(1 if t == pair_index[(a, b)] else 0 for t in range(6))
                form[mono] = form.get(mono, Fraction(0)) + coef
        conds.append({m: c for m, c in form.items() if not is_zero(c)})
    return conds


def lines_through_point(point, components):
    """All lines of the parametrized components through the point.

    Returns a list of (component_label, pluecker_point); lines found on
    several components are reported once per component.
    """
    conds = incidence_conditions(point)
    found = []
    for comp in components:
        if comp.parametrization is None:
            raise ValueError(f"component {comp.label} lacks a parametrization")
        forms = []
        for cond in conds:
            val = c_subs_polys(cond, comp.parametrization)
            forms.append(val)
        if all(not f for f in forms):
            found.append((comp.label, None))   # whole component through the point
            continue
        roots = common_roots_of_binary_forms([f for f in forms if f], 2)
        for (s, t) in roots or []:
            coords = [c_eval(p, [s, t]) for p in comp.parametrization]
            pt = proj_normalize(coords)
            if pt is not None:
                found.append((comp.label, pt))
    return found


def points_on_line(line, points):
    """The subset of the given points lying on the line."""
    out = []
    for name, p in points:
        if point_on_line(p, line):
            out.append(name)
    return out


def component_intersections(components):
    """Pairwise intersections of linear-section conics in P^5.

    Returns {(label_i, label_j): [pluecker points]}, omitting empty pairs.
    """
    out = {}
    P = pluecker_polynomial()
    for ca, cb in itertools.combinations(components, 2):
        lin = [g for g in ca.ideal.gens if _is_linear(g)] + \
              [g for g in cb.ideal.gens if _is_linear(g)]
        rows = []
        for g in lin:
            row = [Fraction(0)] * 6
            for m, c in g.items():
                row[m.index(1)] = c
            rows.append(row)
        kern = linalg.kernel_basis(rows, 6)
        pts = []
        if len(kern) == 0:
            pass
        elif len(kern) == 1:
            if is_zero(c_eval(P, kern[0])):
                pts.append(proj_normalize(kern[0]))
        elif len(kern) == 2:
            e1, e2 = kern
            # P(s*e1 + t*e2) as a binary quadratic
            quad = {}
            for (m, c) in P.items():
                idx = [i for i, e in enumerate(m) for _ in range(e)]
                i, j = idx
                # expand (s e1_i + t e2_i)(s e1_j + t e2_j)
                for (mi, ci) in (((2, 0), e1[i] * e1[j]),
                                 ((1, 1), e1[i] * e2[j] + e2[i] * e1[j]),
                                 ((0, 2), e2[i] * e2[j])):
                    cur = quad.get(mi, Fraction(0)) + c * ci
                    if is_zero(cur):
                        quad.pop(mi, None)
                    else:
                        quad[mi] = cur
            roots = common_roots_of_binary_forms([quad], 2)
            if roots is None:
                raise ValueError("conic intersection is the whole pencil")
            for (s, t) in roots:
                coords = [s * a + t * b for a, b in zip(e1, e2)]
                pt = proj_normalize(coords)
                if pt is not None:
                    pts.append(pt)
        else:
            raise ValueError("intersection has dimension > 1; not conic-style")
        # dedupe
        uniq = []
        for p in pts:
            if p not in uniq:
                uniq.append(p)
        if uniq:
            out[(ca.label, cb.label)] = uniq
    return out
