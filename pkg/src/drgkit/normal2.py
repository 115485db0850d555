"""Degree-two normal elements of a quadratic algebra with finite point scheme.

A nonzero z in A_2 of a graded domain is normal iff z x = sigma(x) z for an
automorphism sigma of A; degree-one automorphism candidates are enumerated
through the finite point scheme (they permute its closed points compatibly
with the shift automorphism), and for each candidate the normal elements form
the kernel of a linear pencil A - mu B.  Scalars mu are located through
determinant gcds of square subsystems; when a candidate spectrum factor
resists root extraction the locus is certified instead through the Hilbert
function of the proportionality-minor ideal, which decides emptiness over the
algebraic closure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from . import linalg
from .commalg import CIdeal, hilbert_data, StabilizationError
from .freealg import nc_mul, nc_sub
from .geometry import (point_scheme_ideal, relation_matrix, verify_point_and_tau,
                       proj_normalize)
from .ncgb import complete, normal_form, standard_monomials, central_elements
from .scalars import QQ_ZETA8, Zeta8, is_zero, zeta8_sqrt


@dataclass
class NormalPiece:
    """Normal elements sharing one conjugation matrix (a linear subspace)."""

    sigma: list            # 4x4 matrix, the candidate automorphism on generators
    mu: object             # the scalar normalization
    basis: list            # NCPolys spanning the piece


@dataclass
class Normal2Report:
    basis_words: list
    pieces: list
    certified_empty: bool
    dimension: int               # max piece dimension (0 if empty)
    central_dimension: int
    all_of_degree_two: bool
    notes: list = dc_field(default_factory=list)

    def elements(self):
        out = []
        for piece in self.pieces:
            out.extend(piece.basis)
        return out


def _conj_variants(h):
    """Candidate generator matrices attached to a projective point map."""
    out = [h, [list(r) for r in zip(*h)]]
    inv = linalg.mat_inverse(h)
    if inv is not None:
        out.append(inv)
        out.append([list(r) for r in zip(*inv)])
    return out


def _relation_rows(pres):
    cols = [(i, j) for i in range(4) for j in range(4)]
    colindex = {c: k for k, c in enumerate(cols)}
    rows = []
    for rel in pres.relations:
        row = [pres.field.zero] * 16
        for w, c in rel.items():
            row[colindex[w]] = c
        rows.append(row)
    return rows


def _preserves_relations(g, rel_rows):
    """(g (x) g) applied to the relation span reproduces the span."""
    transformed = []
    for row in rel_rows:
        new = [Fraction(0)] * 16
        for idx in range(16):
            c = row[idx]
            if is_zero(c):
                continue
            i, j = divmod(idx, 4)
            # x_i x_j -> (sum_a g[i][a] x_a)(sum_b g[j][b] x_b)
            for a in range(4):
                ga = g[i][a]
                if is_zero(ga):
                    continue
                for b in range(4):
                    gb = g[j][b]
                    if is_zero(gb):
                        continue
                    new[a * 4 + b] = new[a * 4 + b] + c * ga * gb
        transformed.append(new)
    return linalg.same_row_space(transformed, rel_rows)


def graded_automorphism_candidates(pres, points, tau_map):
    """All projective matrices with (g (x) g)R = R, via point permutations.

    points: dict name -> coordinates; tau_map: name -> name.  Enumerates
    tau-orbit-compatible bijections of the point scheme, solves for the
    projective transformation, and keeps generator matrices preserving the
    relation span.  The list contains the identity and is deduplicated up to
    scalar.
    """
    from .geometry import tau_orbits
    names = list(points)
    orbits = tau_orbits(names, tau_map)
    orbits.sort(key=len)
    by_size = {}
    for o in orbits:
        by_size.setdefault(len(o), []).append(o)

    rel_rows = _relation_rows(pres)
    found = []
    seen = set()

    def solve_map(correspondences):
        """Projective h with h(p) ~ q; returns matrices of kernel dim 1."""
        # unknowns: 16 entries of h, plus one scale per correspondence
        ncor = len(correspondences)
        rows = []
        for t, (p, q) in enumerate(correspondences):
            for r in range(4):
                row = [Fraction(0)] * (16 + ncor)
                for c in range(4):
                    row[r * 4 + c] = p[c]
                row[16 + t] = -q[r]
                rows.append(row)
        kern = linalg.kernel_basis(rows, 16 + ncor)
        if len(kern) != 1:
            return None, len(kern)
        vec = kern[0]
        h = [[vec[r * 4 + c] for c in range(4)] for r in range(4)]
        if linalg.rank(h) < 4:
            return None, 0
        return h, 1

    def collect(h):
        for g in _conj_variants(h):
            if linalg.rank(g) < 4:
                continue
            if not _preserves_relations(g, rel_rows):
                continue
            key = _projective_key(g)
            if key in seen:
                continue
            seen.add(key)
            found.append(g)

    def search(idx, cors, used):
        """Assign orbits incrementally; stop a branch once h is pinned."""
        if cors:
            h, dim = solve_map(cors)
            if h is None and dim == 0:
                return
            if h is not None:
                collect(h)
                return
        if idx == len(orbits):
            return
        orbit = orbits[idx]
        for target in by_size[len(orbit)]:
            tid = id(target)
            if tid in used:
                continue
            for offset in range(len(orbit)):
                extra = [(points[name], points[target[(offset + k) % len(target)]])
                         for k, name in enumerate(orbit)]
                search(idx + 1, cors + extra, used | {tid})

    search(0, [], frozenset())
    ident = [[Fraction(1) if i == j else Fraction(0) for j in range(4)]
             for i in range(4)]
    if _projective_key(ident) not in seen:
        found.insert(0, ident)
    return found


def _projective_key(g):
    flat = [x for row in g for x in row]
    pivot = next(x for x in flat if not is_zero(x))
    normed = tuple(Zeta8.coerce(x / pivot).coeffs for x in flat)
    return normed


def _charpoly_by_interpolation(a_rows, b_rows):
    """det(A - mu B) for square A, B, via exact interpolation in mu."""
    n = len(a_rows)
    samples = []
    for k in range(n + 1):
        mu = Fraction(k)
        m = [[a_rows[i][j] - mu * b_rows[i][j] for j in range(n)] for i in range(n)]
        samples.append((mu, linalg.det(m)))
    # Lagrange interpolation to coefficient list (ascending powers)
    coeffs = [Fraction(0)] * (n + 1)
    for (xi, yi) in samples:
        basis = [Fraction(1)]
        denom = Fraction(1)
        for (xj, _) in samples:
            if xj == xi:
                continue
            new = [Fraction(0)] * (len(basis) + 1)
            for t, c in enumerate(basis):
                new[t] -= c * xj
                new[t + 1] += c
            basis = new
            denom *= (xi - xj)
        scale = yi / denom
        for t, c in enumerate(basis):
            coeffs[t] = coeffs[t] + scale * c
    while len(coeffs) > 1 and is_zero(coeffs[-1]):
        coeffs.pop()
    return coeffs


def _poly_gcd(a, b):
    def trim(p):
        while len(p) > 1 and is_zero(p[-1]):
            p.pop()
        return p

    a, b = trim(list(a)), trim(list(b))
    while len(b) > 1 or not is_zero(b[0]):
        while len(a) >= len(b):
            if len(a) == 1 and is_zero(a[0]):
                break
            f = a[-1] / b[-1]
            shift = len(a) - len(b)
            for i in range(len(b)):
                a[shift + i] = a[shift + i] - f * b[i]
            trim(a)
            if len(a) < len(b):
                break
        a, b = b, a
        if len(b) == 1 and is_zero(b[0]):
            break
    lc = a[-1]
    return [x / lc for x in a]


def _poly_roots_in_field(coeffs):
    """Roots in QQ(zeta8) of a low-degree polynomial, or None if unresolved."""
    coeffs = [Zeta8.coerce(c) for c in coeffs]
    roots = []
    # strip mu = 0 roots
    while len(coeffs) > 1 and not coeffs[0]:
        roots.append(Zeta8(0))
        coeffs = coeffs[1:]
    deg = len(coeffs) - 1
    if deg == 0:
        return roots
    if deg == 1:
        roots.append(-coeffs[0] / coeffs[1])
        return roots
    if deg == 2:
        a, b, c = coeffs[2], coeffs[1], coeffs[0]
        disc = b * b - 4 * a * c
        s = zeta8_sqrt(disc)
        if s is not None:
            r1, r2 = (-b + s) / (2 * a), (-b - s) / (2 * a)
            roots.append(r1)
            if r2 != r1:
                roots.append(r2)
            return roots
        return roots   # irreducible quadratic: no roots in the field
    if deg == 4 and not coeffs[1] and not coeffs[3]:
        # biquadratic: solve for mu^2 then take square roots
        inner = _poly_roots_in_field([coeffs[0], coeffs[2], coeffs[4]])
        if inner is None:
            return None
        for r in inner:
            s = zeta8_sqrt(r)
            if s is not None:
                roots.append(s)
                if s:
                    roots.append(-s)
        return roots
    return None


def normal_elements_deg2(gb, points=None, tau_map=None, hilbert_depth=8):
    """Report on {z in A_2 : z A_1 = A_1 z} for a domain with finite points.

    Returns a Normal2Report: a union of linear pieces (one per conjugation
    matrix), a certified-emptiness flag, and the degree-two center.  When the
    center is all of A_2 the geometric enumeration is skipped.  Emptiness and
    the residual cases are certified through hilbert_data on the ideal of
    2x2 proportionality minors, which decides the question over the algebraic
    closure of the coefficient field.
    """
    pres = gb.source
    basis2 = standard_monomials(gb, 2)
    basis3 = standard_monomials(gb, 3)
    n2 = len(basis2)
    central = central_elements(gb, 2)
    notes = []
    if len(central) == n2:
        piece = NormalPiece([[Fraction(1) if i == j else Fraction(0)
                              for j in range(4)] for i in range(4)],
                            Fraction(1),
                            [{m: Fraction(1)} for m in basis2])
        return Normal2Report(basis2, [piece], False, n2, len(central), True,
                             ["degree-two component is entirely central"])

    if points is None or tau_map is None:
        M = relation_matrix(pres)
        ideal = point_scheme_ideal(M)
        hf, dim, deg = hilbert_data(ideal, 12)
        if dim != 0:
            raise ValueError("normal-element solver needs a finite point scheme")
        raise ValueError("finite point scheme found but no points supplied; "
                         "pass the closed points and the shift map")

    ngens = len(pres.gens)
    w3 = {w: i for i, w in enumerate(basis3)}

    def mult_rows(left_vec):
        """Rows of z -> NF((sum_j left_vec[j] x_j) z) over the A_3 basis."""
        rows = []
        for widx in range(len(basis3)):
            rows.append([Fraction(0)] * n2)
        for mi, m in enumerate(basis2):
            poly = {}
            for j in range(ngens):
                c = left_vec[j]
                if is_zero(c):
                    continue
                prod = normal_form(nc_mul({(j,): c}, {m: Fraction(1)}), gb)
                for w, v in prod.items():
                    poly[w] = poly.get(w, Fraction(0)) + v
            for w, v in poly.items():
                rows[w3[w]][mi] = v
        return rows

    right_rows = {}
    for i in range(ngens):
        rows = [[Fraction(0)] * n2 for _ in range(len(basis3))]
        for mi, m in enumerate(basis2):
            prod = normal_form(nc_mul({m: Fraction(1)}, {(i,): Fraction(1)}), gb)
            for w, v in prod.items():
                rows[w3[w]][mi] = v
        right_rows[i] = rows

    sigmas = graded_automorphism_candidates(pres, points, tau_map)
    notes.append(f"{len(sigmas)} projective automorphism candidates")
    pieces = []
    unresolved = []
    for g in sigmas:
        a_rows = []
        b_rows = []
        for i in range(ngens):
            a_rows.extend(right_rows[i])
            b_rows.extend(mult_rows(g[i]))
        candidates = _pencil_spectrum(a_rows, b_rows, n2)
        if candidates is None:
            unresolved.append((g, a_rows, b_rows))
            continue
        for mu in candidates:
            stacked = [[a - mu * b for a, b in zip(ra, rb)]
                       for ra, rb in zip(a_rows, b_rows)]
            kern = linalg.kernel_basis(stacked, n2)
            if kern:
                basis = [{m: c for m, c in zip(basis2, vec) if not is_zero(c)}
                         for vec in kern]
                pieces.append(NormalPiece(g, mu, basis))
    for (g, a_rows, b_rows) in unresolved:
        empty, note = _certify_by_minors(a_rows, b_rows, n2, hilbert_depth)
        notes.append(note)
        if not empty:
            raise RuntimeError("pencil spectrum unresolved and minor ideal "
                               "not empty: extend the root solver")
    dimension = max((len(p.basis) for p in pieces), default=0)
    certified_empty = not pieces
    return Normal2Report(basis2, pieces, certified_empty, dimension,
                         len(central), False, notes)


def _pencil_spectrum(a_rows, b_rows, n):
    """Candidate scalars mu with ker(A - mu B) != 0, or None if unresolved.

    Works with determinant gcds over several independent square subsystems;
    the returned list is a superset of the true spectrum in QQ(zeta8), and
    every zero of det on all subsystems appears, so kernel computation at the
    candidates is exhaustive for field-rational normal elements.  Returns
    None when gcd factoring fails (caller certifies via minors).
    """
    # choose a few distinct independent row subsets of B
    subsets = []
    skip = frozenset()
    for _ in range(3):
        chosen = _independent_subset(b_rows, n, skip=skip)
        if chosen is None or chosen in subsets:
            break
        subsets.append(chosen)
        skip = frozenset({chosen[0]}) | skip
    if not subsets:
        return None   # B rank-deficient everywhere: certify via minors
    g = None
    for chosen in subsets:
        a_sub = [a_rows[i] for i in chosen]
        b_sub = [b_rows[i] for i in chosen]
        p = _charpoly_by_interpolation(a_sub, b_sub)
        g = p if g is None else _poly_gcd(g, p)
        if len(g) == 1:
            return []
    # square-free part
    deriv = [g[i] * i for i in range(1, len(g))]
    if any(not is_zero(c) for c in deriv):
        common = _poly_gcd(g, deriv)
        if len(common) > 1:
            g = _poly_divide(g, common)
    roots = _poly_roots_in_field(g)
    return roots


def _poly_divide(a, b):
    out = [Fraction(0)] * (len(a) - len(b) + 1)
    rem = list(a)
    for k in range(len(a) - len(b), -1, -1):
        f = rem[k + len(b) - 1] / b[-1]
        out[k] = f
        for i in range(len(b)):
            rem[k + i] = rem[k + i] - f * b[i]
    return out


def _independent_subset(rows, n, skip=frozenset()):
    chosen = []
    mat = []
    for i, row in enumerate(rows):
        if i in skip:
            continue
        mat.append(list(row))
        if linalg.rank(mat) == len(mat):
            chosen.append(i)
            if len(chosen) == n:
                return chosen
        else:
            mat.pop()
    return None


def _certify_by_minors(a_rows, b_rows, n, depth):
    """Empty iff V(2x2 minors of [Ac | Bc]) = {0} over the closure."""
    # build minor quadrics in the n coefficient variables
    gens = []
    m = len(a_rows)
    pair_budget = 0
    varnames = tuple(f"c{i}" for i in range(n))
    for i in range(m):
        for j in range(i + 1, m):
            quad = {}
            for s in range(n):
                for t in range(n):
                    coef = (a_rows[i][s] * b_rows[j][t]
                            - a_rows[j][s] * b_rows[i][t])
                    if is_zero(coef):
                        continue
                    mono = [0] * n
                    mono[s] += 1
                    mono[t] += 1
                    mono = tuple(mono)
                    cur = quad.get(mono, Fraction(0)) + coef
                    if is_zero(cur):
                        quad.pop(mono, None)
                    else:
                        quad[mono] = cur
            if quad:
                gens.append(quad)
                pair_budget += 1
            if pair_budget >= 160:
                break
        if pair_budget >= 160:
            break
    ideal = CIdeal(varnames, gens)
    try:
        hf, dim, deg = hilbert_data(ideal, depth)
    except StabilizationError:
        return False, "minor ideal Hilbert function did not stabilize"
    if dim == -1:
        return True, "minor ideal certified empty over the closure"
    return False, f"minor ideal has projective dimension {dim}"
