"""Degree-bounded noncommutative Groebner bases via the diamond lemma.

Completion resolves all overlap ambiguities of combined degree up to an
explicit bound; the result carries a ``complete_through`` certificate and
every downstream query (normal forms, monomial bases, Hilbert functions,
centrality, regularity) refuses inputs beyond it.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .freealg import (Presentation, nc_add, nc_neg, nc_scale, nc_sub,
                      word_degree, nc_homogeneous_degree)
from .scalars import QQ, is_zero


class BoundExceeded(RuntimeError):
    """A query reached beyond the completion certificate of a basis."""


@dataclass(frozen=True)
class RewriteRule:
    """lead -> tail, with every tail word strictly smaller than lead."""

    lead: tuple
    tail: tuple   # tuple of (word, coeff), sorted for hashability

    def tail_dict(self):
        return dict(self.tail)

    def poly(self):
        p = {self.lead: Fraction(1)}
        for w, c in self.tail:
            p[w] = -c
        return p


@dataclass
class NCGroebnerBasis:
    source: Presentation
    degree_bound: int
    rules: list
    complete_through: int

    @property
    def order(self):
        return self.source.order

    @property
    def degrees(self):
        return self.source.degrees

    def require(self, degree):
        if degree > self.complete_through:
            raise BoundExceeded(
                f"degree {degree} exceeds completion bound {self.complete_through}")

    def normal_form(self, f):
        return normal_form(f, self)

    def standard_monomials(self, d):
        return standard_monomials(self, d)

    def hilbert_function(self, D):
        return hilbert_function(self, D)


def _make_rule(h, order):
    lead = order.lead_word(h)
    lc = h[lead]
    tail = []
    for w, c in h.items():
        if w != lead:
            tail.append((w, -(c / lc)))
    tail.sort(key=lambda t: order.key(t[0]))
    return RewriteRule(lead, tuple(tail))


def _reductions_index(rules):
    by_first = {}
    for idx, r in enumerate(rules):
        if r is None:
            continue
        by_first.setdefault(r.lead[0], []).append((idx, r))
    return by_first


def _find_reduction(word, by_first):
    n = len(word)
    for pos in range(n):
        cands = by_first.get(word[pos])
        if not cands:
            continue
        for _, rule in cands:
            L = len(rule.lead)
            if pos + L <= n and word[pos:pos + L] == rule.lead:
                return pos, rule
    return None


def _normal_form_raw(f, by_first, order):
    work = dict(f)
    out = {}
    while work:
        w = max(work, key=order.key)
        c = work.pop(w)
        red = _find_reduction(w, by_first)
        if red is None:
            prev = out.get(w)
            s = c if prev is None else prev + c
            if is_zero(s):
                out.pop(w, None)
            else:
                out[w] = s
            continue
        pos, rule = red
        prefix, suffix = w[:pos], w[pos + len(rule.lead):]
        for tw, tc in rule.tail:
            nw = prefix + tw + suffix
            s = work.get(nw)
            s = c * tc if s is None else s + c * tc
            if is_zero(s):
                work.pop(nw, None)
            else:
                work[nw] = s
    return out


def normal_form(f, gb):
    """Unique normal form of f modulo the (bounded) Groebner basis."""
    if f:
        d = max(word_degree(w, gb.degrees) for w in f)
        gb.require(d)
    by_first = _reductions_index(gb.rules)
    return _normal_form_raw(f, by_first, gb.order)


def _overlaps(u, v):
    """Proper overlaps: k with a suffix of u of length k equal to a prefix of v."""
    out = []
    for k in range(1, min(len(u), len(v))):
        if u[len(u) - k:] == v[:k]:
            out.append(k)
    return out


def complete(p, degree_bound):
    """Diamond-lemma completion of the presentation's ideal up to degree_bound.

    Deterministic: ambiguities are processed in increasing combined degree and
    FIFO within a degree; the returned rule list is inter-reduced and sorted.
    """
    order = p.order
    degs = p.degrees
    if p.relations:
        maxrel = max(nc_homogeneous_degree(r, degs) for r in p.relations)
        if degree_bound < maxrel:
            raise ValueError("degree_bound below maximal relation degree")
    rules = []           # slots; None = retired
    queue = []           # (degree, seq, payload); payload = poly or pair
    seq = 0
    for rel in p.relations:
        heapq.heappush(queue, (nc_homogeneous_degree(rel, degs), seq, ("poly", rel)))
        seq += 1

    def push_pairs(i):
        nonlocal seq
        ri = rules[i]
        for j, rj in enumerate(rules):
            if rj is None:
                continue
            for (a, b, ra, rb) in ((i, j, ri, rj), (j, i, rj, ri)):
                if a == b and (i, j) != (a, b):
                    continue
                for k in _overlaps(ra.lead, rb.lead):
                    wdeg = word_degree(ra.lead + rb.lead[k:], degs)
                    if wdeg <= degree_bound:
                        heapq.heappush(queue, (wdeg, seq, ("pair", a, b, k)))
                        seq += 1

    while queue:
        _, _, payload = heapq.heappop(queue)
        if payload[0] == "poly":
            h = payload[1]
        else:
            _, a, b, k = payload
            ra, rb = rules[a], rules[b]
            if ra is None or rb is None:
                continue
            suffix = rb.lead[k:]
            prefix = ra.lead[:len(ra.lead) - k]
            left = {tw + suffix: tc for tw, tc in ra.tail}
            right = {}
            for tw, tc in rb.tail:
                nw = prefix + tw
                right[nw] = right.get(nw, Fraction(0)) + tc
            h = nc_sub(left, right)
        by_first = _reductions_index(rules)
        h = _normal_form_raw(h, by_first, order)
        if not h:
            continue
        rule = _make_rule(h, order)
        # retire rules whose lead contains the new lead as a subword
        L = rule.lead
        for j, rj in enumerate(rules):
            if rj is None or rj.lead == L:
                continue
            for pos in range(len(rj.lead) - len(L) + 1):
                if rj.lead[pos:pos + len(L)] == L:
                    rules[j] = None
                    heapq.heappush(queue, (word_degree(rj.lead, degs), seq,
                                           ("poly", rj.poly())))
                    seq += 1
                    break
        rules.append(rule)
        push_pairs(len(rules) - 1)

    final = [r for r in rules if r is not None]
    # inter-reduce tails against the full set
    by_first = _reductions_index(final)
    reduced = []
    for r in final:
        tail = _normal_form_raw(dict(r.tail), by_first, order)
        tail_t = tuple(sorted(tail.items(), key=lambda t: order.key(t[0])))
        reduced.append(RewriteRule(r.lead, tail_t))
    reduced.sort(key=lambda r: order.key(r.lead))
    return NCGroebnerBasis(p, degree_bound, reduced, degree_bound)


def standard_monomials(gb, d):
    """All degree-d words containing no lead word, sorted by the ambient order."""
    gb.require(d)
    degs = gb.degrees
    leads = [r.lead for r in gb.rules]
    letters = sorted(range(len(degs)), key=lambda g: gb.order._ranks[g])
    out = []

    def extend(word, deg):
        if deg == d:
            out.append(word)
            return
        for g in letters:
            nd = deg + degs[g]
            if nd > d:
                continue
            w = word + (g,)
            if any(len(L) <= len(w) and w[len(w) - len(L):] == L for L in leads):
                continue
            extend(w, nd)

    extend((), 0)
    return out


def hilbert_function(gb, D):
    """dim A_d for d = 0..D, by path counting in the forbidden-factor automaton."""
    gb.require(D)
    degs = gb.degrees
    leads = set(r.lead for r in gb.rules)
    prefixes = {()}
    for L in leads:
        for k in range(1, len(L)):
            prefixes.add(L[:k])
    maxlen = max((len(L) for L in leads), default=1)

    transitions = {}

    def delta(state, g):
        key = (state, g)
        if key in transitions:
            return transitions[key]
        w = state + (g,)
        dead = any(w[len(w) - k:] in leads for k in range(1, len(w) + 1))
        if dead:
            nxt = None
        else:
            nxt = ()
            for k in range(min(len(w), maxlen - 1), 0, -1):
                if w[len(w) - k:] in prefixes:
                    nxt = w[len(w) - k:]
                    break
        transitions[key] = nxt
        return nxt

    ngens = len(degs)
    counts = [{} for _ in range(D + 1)]
    counts[0][()] = 1
    values = []
    for d in range(D + 1):
        values.append(sum(counts[d].values()))
        for state, n in counts[d].items():
            for g in range(ngens):
                nd = d + degs[g]
                if nd > D:
                    continue
                nxt = delta(state, g)
                if nxt is not None:
                    counts[nd][nxt] = counts[nd].get(nxt, 0) + n
    return values


def groebner_polys(gb):
    """The basis elements as monic polynomials (lead - tail)."""
    return [r.poly() for r in gb.rules]


def is_central(z, gb, check_degree=None):
    """True iff z commutes with every generator, decided by normal forms."""
    if not z:
        return True
    dz = max(word_degree(w, gb.degrees) for w in z)
    gb.require(dz + max(gb.degrees))
    for g in range(len(gb.degrees)):
        xg = {(g,): Fraction(1)}
        from .freealg import nc_mul
        comm = nc_sub(nc_mul(z, xg), nc_mul(xg, z))
        if normal_form(comm, gb):
            return False
    return True


def central_elements(gb, d):
    """A basis of the degree-d center, by exact linear algebra on commutators."""
    gb.require(d + max(gb.degrees))
    from .freealg import nc_mul
    basis = standard_monomials(gb, d)
    if not basis:
        return []
    rows = []
    colindex = {}
    columns = []

    def vector_of(p):
        row = {}
        for w, c in p.items():
            if w not in colindex:
                colindex[w] = len(columns)
                columns.append(w)
            row[colindex[w]] = c
        return row

    sparse_rows = []
    for m in basis:
        entry = []
        for g in range(len(gb.degrees)):
            xg = {(g,): Fraction(1)}
            comm = normal_form(nc_sub(nc_mul({m: Fraction(1)}, xg),
                                      nc_mul(xg, {m: Fraction(1)})), gb)
            entry.append(vector_of(comm))
        sparse_rows.append(entry)
    ncols = len(columns)
    ngens = len(gb.degrees)
    # unknowns: coefficients over basis; equations: all commutator coordinates
    mat = []
    for g in range(ngens):
        for col in range(ncols):
            mat.append([sparse_rows[i][g].get(col, Fraction(0)) for i in range(len(basis))])
    kern = linalg.kernel_basis(mat, len(basis))
    out = []
    for vec in kern:
        p = {}
        for m, c in zip(basis, vec):
            if not is_zero(c):
                p[m] = c
        out.append(p)
    return out


def left_regular_check(x, gb, D):
    """True iff left multiplication by x is injective on A_d for all d <= D."""
    from .freealg import nc_mul
    dx = max(word_degree(w, gb.degrees) for w in x)
    gb.require(dx + D)
    for d in range(D + 1):
        basis = standard_monomials(gb, d)
        if not basis:
            continue
        colindex = {}
        rows = []
        for m in basis:
            img = normal_form(nc_mul(x, {m: Fraction(1)}), gb)
            row = {}
            for w, c in img.items():
                row[colindex.setdefault(w, len(colindex))] = c
            rows.append(row)
        ncols = len(colindex)
        dense = [[row.get(j, Fraction(0)) for j in range(ncols)] for row in rows]
        if gb.source.field == QQ:
            r = linalg.rank_exact_via_certificate(dense, upper_bound=len(basis))
        else:
            r = linalg.rank(dense)
        if r < len(basis):
            return False
    return True


def quotient_presentation(p, elems):
    """p with extra homogeneous relations adjoined."""
    for e in elems:
        if nc_homogeneous_degree(e, p.degrees) is None:
            raise ValueError("quotient element is not homogeneous")
    return Presentation(p.field, p.gens, p.degrees,
                        list(p.relations) + [dict(e) for e in elems], p.order)


def series_times_products(h, elem_degrees, D):
    """Coefficients of prod_i (1 - t^{d_i}) * sum h[d] t^d, through degree D."""
    vals = list(h[:D + 1]) + [0] * max(0, D + 1 - len(h))
    for d in elem_degrees:
        nxt = [0] * (D + 1)
        for k in range(D + 1):
            nxt[k] = vals[k] - (vals[k - d] if k >= d else 0)
        vals = nxt
    return vals


def regular_sequence_check(p, elems, D, declared_normal=False):
    """Hilbert-series test for a (central or normal) sequence being regular.

    Returns (ok, quotient_hilbert).  Centrality of every element is verified
    first unless the caller declares the elements normal.
    """
    degs = [nc_homogeneous_degree(e, p.degrees) for e in elems]
    if any(d is None for d in degs):
        raise ValueError("sequence elements must be homogeneous")
    base_bound = max(D, max(degs) + max(p.degrees))
    gb_a = complete(p, base_bound)
    if not declared_normal:
        for e in elems:
            if not is_central(e, gb_a):
                raise ValueError("sequence element is not central; "
                                 "pass declared_normal=True to override")
    h_a = hilbert_function(gb_a, D)
    expected = series_times_products(h_a, degs, D)
    gb_q = complete(quotient_presentation(p, elems), D)
    h_q = hilbert_function(gb_q, D)
    return h_q == expected, h_q
