"""Commutative polynomial toolbox for the geometry pipeline.

Polynomials are dicts mapping exponent tuples to field values over a named
variable list.  Buchberger completion is deterministic (normal selection,
lcm/chain criteria); for homogeneous ideals a degree bound gives a certified
truncated basis, which is all the Hilbert-data driver needs.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .scalars import QQ, is_zero


class StabilizationError(RuntimeError):
    """hilbert_data could not see a stabilized Hilbert polynomial within D."""


# ---------------------------------------------------------------------------
# monomial orders on exponent tuples
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CommOrder:
    kind: str            # 'deglex' | 'lex' | 'block'
    nvars: int
    block: int = 0       # size of the leading (eliminated) block for 'block'

    def key(self, exps):
        if self.kind == "deglex":
            return (sum(exps), exps)
        if self.kind == "lex":
            return exps
        if self.kind == "block":
            head, tail = exps[:self.block], exps[self.block:]
            return (sum(head), head, sum(tail), tail)
        raise ValueError(self.kind)


def deglex(nvars):
    return CommOrder("deglex", nvars)


def lex(nvars):
    return CommOrder("lex", nvars)


def block_order(nvars, block):
    return CommOrder("block", nvars, block)


# ---------------------------------------------------------------------------
# polynomial helpers
# ---------------------------------------------------------------------------

def c_add(p, q):
    out = dict(p)
    for m, c in q.items():
        s = out.get(m)
        s = c if s is None else s + c
        if is_zero(s):
            out.pop(m, None)
        else:
            out[m] = s
    return out


def c_neg(p):
    return {m: -c for m, c in p.items()}


def c_sub(p, q):
    return c_add(p, c_neg(q))


def c_scale(p, c):
    if is_zero(c):
        return {}
    return {m: c * x for m, x in p.items()}


def c_mul(p, q):
    out = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = tuple(a + b for a, b in zip(m1, m2))
            s = out.get(m)
            s = c1 * c2 if s is None else s + c1 * c2
            if is_zero(s):
                out.pop(m, None)
            else:
                out[m] = s
    return out


def c_mul_term(p, m0, c0):
    return {tuple(a + b for a, b in zip(m, m0)): c * c0 for m, c in p.items()}


def monom_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def monom_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def monom_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def c_degree(p):
    return max((sum(m) for m in p), default=-1)


def is_homogeneous(p):
    return len({sum(m) for m in p}) <= 1


def lead_term(p, order):
    m = max(p, key=order.key)
    return m, p[m]


def c_eval(p, point):
    """Evaluate at a point (list of field values)."""
    total = None
    for m, c in p.items():
        v = c
        for x, e in zip(point, m):
            for _ in range(e):
                v = v * x
        total = v if total is None else total + v
    return total if total is not None else Fraction(0)


def c_subs_polys(p, images, nparams=None):
    """Substitute variable i by the polynomial images[i] (in a new ring)."""
    if nparams is None:
        for img in images:
            if img:
                nparams = len(next(iter(img)))
                break
        else:
            nparams = 0
    zero_mono = (0,) * nparams
    out = {}
    for m, c in p.items():
        term = {zero_mono: c}
        for i, e in enumerate(m):
            for _ in range(e):
                term = c_mul(term, images[i])
        out = c_add(out, term)
    return out


# ---------------------------------------------------------------------------
# reduction and Buchberger completion
# ---------------------------------------------------------------------------

def c_normal_form(p, basis, order):
    """Full remainder of p on division by the list of polynomials."""
    work = dict(p)
    out = {}
    leads = [(lead_term(g, order), g) for g in basis if g]
    while work:
        m = max(work, key=order.key)
        c = work[m]
        hit = None
        for (lm, lc), g in leads:
            if monom_divides(lm, m):
                hit = (lm, lc, g)
                break
        if hit is None:
            del work[m]
            out[m] = c
            continue
        lm, lc, g = hit
        f = c / lc
        shift = monom_div(m, lm)
        for gm, gc in g.items():
            nm = tuple(a + b for a, b in zip(gm, shift))
            cur = work.get(nm)
            val = -f * gc if cur is None else cur - f * gc
            if is_zero(val):
                work.pop(nm, None)
            else:
                work[nm] = val
    return out


def buchberger(gens, order, degree_bound=None):
    """Reduced Groebner basis; with degree_bound, certified through that degree
    for homogeneous input (pairs are processed by ascending lcm degree)."""
    basis = []
    for g in gens:
        if g:
            m, c = lead_term(g, order)
            basis.append({k: v / c for k, v in g.items()})
    basis.sort(key=lambda g: order.key(lead_term(g, order)[0]))
    pairs = []
    seq = 0
    for i in range(len(basis)):
        for j in range(i):
            lm_i = lead_term(basis[i], order)[0]
            lm_j = lead_term(basis[j], order)[0]
            l = monom_lcm(lm_i, lm_j)
            heapq.heappush(pairs, (sum(l), order.key(l), seq, i, j))
            seq += 1

    def lead(i):
        return lead_term(basis[i], order)[0]

    while pairs:
        total, _, _, i, j = heapq.heappop(pairs)
        if degree_bound is not None and total > degree_bound:
            break
        lmi, lmj = lead(i), lead(j)
        l = monom_lcm(lmi, lmj)
        # coprime criterion
        if l == tuple(a + b for a, b in zip(lmi, lmj)):
            continue
        # chain criterion: some k with lead(k) | lcm and both mixed lcms seen
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if monom_divides(lead(k), l):
                lik = monom_lcm(lmi, lead(k))
                ljk = monom_lcm(lmj, lead(k))
                if lik != l and ljk != l:
                    skip = True
                    break
        if skip:
            continue
        fi, fj = basis[i], basis[j]
        s = c_sub(c_mul_term(fi, monom_div(l, lmi), Fraction(1)),
                  c_mul_term(fj, monom_div(l, lmj), Fraction(1)))
        h = c_normal_form(s, basis, order)
        if not h:
            continue
        m, c = lead_term(h, order)
        h = {k: v / c for k, v in h.items()}
        basis.append(h)
        new = len(basis) - 1
        for k in range(new):
            l2 = monom_lcm(lead(k), m)
            heapq.heappush(pairs, (sum(l2), order.key(l2), seq, new, k))
            seq += 1
    # minimalize: drop elements whose lead is divisible by another lead
    keep = []
    leads = [lead_term(g, order)[0] for g in basis]
    for i, g in enumerate(basis):
        if any(j != i and monom_divides(leads[j], leads[i]) and
               (leads[j] != leads[i] or j < i) for j in range(len(basis))):
            continue
        keep.append(g)
    # reduce each element against the others
    reduced = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1:]
        h = c_normal_form(g, others, order)
        if h:
            m, c = lead_term(h, order)
            reduced.append({k: v / c for k, v in h.items()})
    reduced.sort(key=lambda g: order.key(lead_term(g, order)[0]))
    return reduced


@dataclass
class CIdeal:
    """An ideal with its variable names and a cached Groebner basis."""

    varnames: tuple
    gens: list
    _gb: dict = dc_field(default_factory=dict)   # (order kind, block, bound) -> basis

    @property
    def nvars(self):
        return len(self.varnames)

    def groebner(self, order=None, degree_bound=None):
        if order is None:
            order = deglex(self.nvars)
        key = (order.kind, order.block, degree_bound)
        if key not in self._gb:
            full = (order.kind, order.block, None)
            if full in self._gb:
                self._gb[key] = self._gb[full]
            else:
                self._gb[key] = buchberger(self.gens, order, degree_bound)
        return self._gb[key]

    def normal_form(self, f, order=None, degree_bound=None):
        order = order or deglex(self.nvars)
        return c_normal_form(f, self.groebner(order, degree_bound), order)

    def contains(self, f, degree_bound=None):
        order = deglex(self.nvars)
        if degree_bound is not None and is_homogeneous(f):
            bound = max(degree_bound, c_degree(f))
            return not self.normal_form(f, order, bound)
        return not self.normal_form(f, order)


def ideal_membership(f, ideal):
    return ideal.contains(f)


def radical_membership(f, ideal):
    """f in sqrt(I) iff 1 in I + <1 - t f> in one extra variable."""
    if not f:
        return not ideal_contains_one(ideal)
    n = ideal.nvars
    ext = [{m + (0,): c for m, c in g.items()} for g in ideal.gens]
    rab = {(0,) * n + (0,): Fraction(1)}
    rab = c_sub(rab, {m + (1,): c for m, c in f.items()})
    gens = ext + [rab]
    gb = buchberger(gens, deglex(n + 1))
    return any(set(g) == {(0,) * (n + 1)} for g in gb)


def ideal_contains_one(ideal):
    gb = ideal.groebner()
    return any(set(g) == {(0,) * ideal.nvars} for g in gb)


def eliminate(ideal, kill_indices):
    """I cap k[remaining vars], by a block order on the killed variables."""
    kill = sorted(kill_indices)
    keep = [i for i in range(ideal.nvars) if i not in kill]
    perm = kill + keep

    def permute(g):
        return {tuple(m[perm[i]] for i in range(len(m))): c for m, c in g.items()}

    gens = [permute(g) for g in ideal.gens]
    gb = buchberger(gens, block_order(ideal.nvars, len(kill)))
    out = []
    for g in gb:
        if all(all(m[i] == 0 for i in range(len(kill))) for m in g):
            out.append({tuple(m[len(kill):]): c for m, c in g.items()})
    names = tuple(ideal.varnames[i] for i in keep)
    return CIdeal(names, out)


def intersect(ideal_a, ideal_b):
    """I cap J via the t-trick: eliminate t from t*I + (1-t)*J."""
    n = ideal_a.nvars
    gens = []
    t_mon = (1,) + (0,) * n
    one = {(0,) * (n + 1): Fraction(1)}
    t_poly = {t_mon: Fraction(1)}
    one_minus_t = c_sub(one, t_poly)
    for g in ideal_a.gens:
        gens.append(c_mul(t_poly, {(0,) + m: c for m, c in g.items()}))
    for g in ideal_b.gens:
        gens.append(c_mul(one_minus_t, {(0,) + m: c for m, c in g.items()}))
    ext = CIdeal(("t",) + tuple(ideal_a.varnames), gens)
    return eliminate(ext, [0])


# ---------------------------------------------------------------------------
# Hilbert data
# ---------------------------------------------------------------------------

def _count_standard(leads, nvars, degree):
    """Number of degree-d monomials divisible by no lead monomial."""
    count = 0

    def rec(prefix, remaining, pos):
        nonlocal count
        if pos == nvars - 1:
            m = prefix + (remaining,)
            if not any(monom_divides(L, m) for L in leads):
                count += 1
            return
        for e in range(remaining + 1):
            m = prefix + (e,)
            # prune: a lead supported on the first pos+1 vars that already divides
            if any(all(L[i] <= m[i] for i in range(pos + 1)) and
                   all(L[i] == 0 for i in range(pos + 1, nvars)) for L in leads):
                continue
            rec(m, remaining - e, pos + 1)
    if nvars == 0:
        return 1 if degree == 0 else 0
    rec((), degree, 0)
    return count


def _fit_hilbert_polynomial(values, D):
    """Finite-difference fit on the tail, cross-checked at two window origins.

    Uses the last max(4, delta+2) values and repeats one step earlier.
    Returns (proj_dim, degree); proj_dim = -1 for an eventually-zero
    function (empty projective scheme).
    """

    def diff_const(tail, delta):
        diffs = list(tail)
        for _ in range(delta):
            diffs = [b - a for a, b in zip(diffs, diffs[1:])]
        return diffs[0] if diffs and len(set(diffs)) == 1 else None

    for delta in range(0, min(8, D)):
        window = max(4, delta + 2)
        lo = D - window + 1
        if lo - 1 < 0:
            continue
        lead = diff_const(values[lo:D + 1], delta)
        if lead is None:
            continue
        if delta > 0 and lead == 0:
            continue   # a smaller delta would have caught constancy
        if diff_const(values[lo - 1:D], delta) != lead:
            continue
        if lead == 0:
            return -1, 0
        return delta, lead
    raise StabilizationError(
        f"Hilbert function not stabilized within degree {D}: {values}")


def hilbert_data(ideal, D, degree_bound_margin=1):
    """(hilbert function through D, projective dimension, degree) of V(I).

    Requires homogeneous generators.  Standard monomials are counted against
    the lead-term ideal of a degree-(D+margin) truncated Groebner basis;
    the Hilbert polynomial is fitted from the stabilized tail.
    """
    for g in ideal.gens:
        if g and not is_homogeneous(g):
            raise ValueError("hilbert_data needs a homogeneous ideal")
    order = deglex(ideal.nvars)
    gb = ideal.groebner(order, degree_bound=D + degree_bound_margin)
    leads = sorted({lead_term(g, order)[0] for g in gb if c_degree(g) <= D})
    # drop non-minimal leads
    leads = [L for L in leads
             if not any(M != L and monom_divides(M, L) for M in leads)]
    values = [_count_standard(leads, ideal.nvars, d) for d in range(D + 1)]
    proj_dim, degree = _fit_hilbert_polynomial(values, D)
    return values, proj_dim, degree


# ---------------------------------------------------------------------------
# parsing / printing (shared textual grammar, commutative mode)
# ---------------------------------------------------------------------------

def ideal_to_json(ideal):
    """{"vars": [...], "generators": [poly strings]} in the shared grammar."""
    return {"vars": list(ideal.varnames),
            "generators": [format_cpoly(g, ideal.varnames)
                           for g in ideal.gens]}


def ideal_from_json(obj, field=QQ):
    names = tuple(obj["vars"])
    return CIdeal(names, [parse_cpoly(src, names, field)
                          for src in obj["generators"]])


def parse_cpoly(text, varnames, field=QQ):
    """Parse a commutative polynomial via the free-algebra grammar."""
    from .freealg import parse_poly
    nc = parse_poly(text, tuple(varnames), field)
    out = {}
    n = len(varnames)
    for w, c in nc.items():
        m = [0] * n
        for g in w:
            m[g] += 1
        m = tuple(m)
        s = out.get(m)
        s = c if s is None else s + c
        if is_zero(s):
            out.pop(m, None)
        else:
            out[m] = s
    return out


def format_cpoly(p, varnames):
    from .scalars import format_scalar
    if not p:
        return "0"
    items = sorted(p.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)
    parts = []
    for m, c in items:
        factors = []
        for i, e in enumerate(m):
            if e == 1:
                factors.append(varnames[i])
            elif e > 1:
                factors.append(f"{varnames[i]}^{e}")
        cs = format_scalar(c)
        if not factors:
            term = cs
        elif cs == "1":
            term = "*".join(factors)
        elif cs == "-1":
            term = "-" + "*".join(factors)
        else:
            if ("+" in cs[1:]) or ("-" in cs[1:]):
                cs = "(" + cs + ")"
            term = cs + "*" + "*".join(factors)
        if parts and not term.startswith("-"):
            term = "+" + term
        parts.append(term)
    return "".join(parts)
