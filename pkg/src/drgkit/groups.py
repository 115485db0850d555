"""Finite groups as multiplication tables, plus length/Poincare machinery.

Groups are verified on construction (Latin square + associativity, which is
cheap at order <= 64).  The order-16 groups from the dual-reflection search
are exposed with their conventional generator names so that grade labels
like "acd" or "abcd" resolve to element indices.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache


class GroupError(ValueError):
    pass


class FiniteGroup:
    """Multiplication-table group; element 0 is the identity."""

    def __init__(self, table, names=None, check=True):
        self.table = tuple(tuple(row) for row in table)
        self.order = len(self.table)
        self.names = list(names) if names else [f"g{i}" for i in range(self.order)]
        if check:
            self._verify()
        self.inverse = [0] * self.order
        for g in range(self.order):
            for h in range(self.order):
                if self.table[g][h] == 0:
                    self.inverse[g] = h

    def _verify(self):
        n = self.order
        for row in self.table:
            if len(row) != n or sorted(row) != list(range(n)):
                raise GroupError("multiplication table is not a Latin square")
        for g in range(n):
            if self.table[0][g] != g or self.table[g][0] != g:
                raise GroupError("element 0 does not act as identity")
        if n <= 64:
            t = self.table
            for a in range(n):
                ta = t[a]
                for b in range(n):
                    tab = t[ta[b]]
                    tb = t[b]
                    for c in range(n):
                        if tab[c] != ta[tb[c]]:
                            raise GroupError("table is not associative")

    def mul(self, a, b):
        return self.table[a][b]

    def mul_word(self, elements):
        g = 0
        for x in elements:
            g = self.table[g][x]
        return g

    def element_order(self, g):
        k, x = 1, g
        while x != 0:
            x = self.table[x][g]
            k += 1
        return k

    def is_abelian(self):
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(self.order))

    def conjugate(self, g, h):
        """h g h^-1"""
        return self.table[self.table[h][g]][self.inverse[h]]

    def index_of(self, name):
        return self.names.index(name)

    def resolve_word(self, word, letters):
        """Product of named letters, e.g. resolve_word('acd', {'a': 1, ...})."""
        g = 0
        for ch in word:
            if ch not in letters:
                raise GroupError(f"unknown letter {ch!r} in grade word {word!r}")
            g = self.table[g][letters[ch]]
        return g

    def to_json(self):
        return {"order": self.order, "names": self.names,
                "table": [list(r) for r in self.table]}

    @staticmethod
    def from_json(obj):
        return FiniteGroup(obj["table"], obj.get("names"))


def cyclic(n):
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    names = ["e"] + [f"g^{i}" if i > 1 else "g" for i in range(1, n)]
    return FiniteGroup(table, names)


def dihedral(order):
    """Dihedral group of the given (even) order: rho of order n, r of order 2."""
    if order % 2 or order < 2:
        raise GroupError("dihedral group order must be even and positive")
    n = order // 2
    # elements (i, e) = rho^i r^e, index i + n*e
    def idx(i, e):
        return i % n + n * e

    table = [[0] * order for _ in range(order)]
    for i in range(n):
        for e in (0, 1):
            for j in range(n):
                for f in (0, 1):
                    # (rho^i r^e)(rho^j r^f): r rho^j = rho^-j r
                    jj = j if e == 0 else (-j) % n
                    table[idx(i, e)][idx(j, f)] = idx(i + jj, e ^ f)
    names = [("e" if i == 0 else f"rho^{i}" if i > 1 else "rho") if e == 0
             else ("r" if i == 0 else f"rho^{i}*r" if i > 1 else "rho*r")
             for e in (0, 1) for i in range(n)]
    return FiniteGroup(table, names)


def semidirect_c_by_c2(m, exponent):
    """C_m x| C_2 where the involution conjugates r to r^exponent."""
    if (exponent * exponent) % m != 1:
        raise GroupError("automorphism exponent must square to 1 mod m")
    order = 2 * m
    # element (i, e) = r^i s^e, index i + m*e; s r s = r^exponent
    def idx(i, e):
        return i % m + m * e

    table = [[0] * order for _ in range(order)]
    for i in range(m):
        for e in (0, 1):
            for j in range(m):
                for f in (0, 1):
                    jj = j if e == 0 else (exponent * j) % m
                    table[idx(i, e)][idx(j, f)] = idx(i + jj, e ^ f)
    names = [("e" if i == 0 else f"r^{i}" if i > 1 else "r") if e == 0
             else (f"r^{i}*s" if i > 1 else ("r*s" if i == 1 else "s"))
             for e in (0, 1) for i in range(m)]
    return FiniteGroup(table, names)


def direct_product(g1, g2):
    n1, n2 = g1.order, g2.order

    def idx(a, b):
        return a * n2 + b

    table = [[0] * (n1 * n2) for _ in range(n1 * n2)]
    for a in range(n1):
        for b in range(n2):
            for c in range(n1):
                for d in range(n2):
                    table[idx(a, b)][idx(c, d)] = idx(g1.table[a][c], g2.table[b][d])
    names = [f"({g1.names[a]},{g2.names[b]})" for a in range(n1) for b in range(n2)]
    return FiniteGroup(table, names)


def build_group(kind, *params):
    """Constructors keyed by kind; M16 and SD16 come with their letter names."""
    if kind == "cyclic":
        return cyclic(*params)
    if kind == "dihedral":
        return dihedral(*params)
    if kind == "semidirect_C_m_by_C2":
        return semidirect_c_by_c2(*params)
    if kind == "direct_product":
        return direct_product(*params)
    if kind == "from_table":
        return FiniteGroup(*params)
    if kind == "M16":
        return m16()
    if kind == "SD16":
        return sd16()
    if kind == "D8":
        return dihedral(8)
    raise GroupError(f"unknown group kind {kind!r}")


def m16():
    """Modular group of order 16: alpha of order 8, beta alpha beta = alpha^5.

    Letter names: a = alpha, b = beta, c = a^2, d = a^4 (so c^2 = d, d^2 = e,
    a^-1 b a = b d, with c and d central).
    """
    g = semidirect_c_by_c2(8, 5)
    g.letters = {"a": 1, "b": 8, "c": 2, "d": 4}
    return g


def sd16():
    """Semidihedral group of order 16: rho of order 8, sigma rho sigma = rho^3.

    Letter names satisfy the relations a^2 = c^2 = d, b^2 = d^2 = e,
    a^-1 b a = bc, a^-1 c a = cd, b^-1 c b = cd, with d central: in terms of
    rho and sigma, a = rho*sigma, b = sigma, c = rho^2, d = rho^4.
    """
    g = semidirect_c_by_c2(8, 3)
    g.letters = {"a": 8 + 1, "b": 8, "c": 2, "d": 4}
    return g


def m16_craw():
    """M16 with the length-table labeling a = alpha, b = alpha^3 beta.

    Here a^2 = b^2, (ab)^2 = e, matching the rank-two dual reflection data of
    the global-dimension-two classification at m = 2.
    """
    g = semidirect_c_by_c2(8, 5)
    g.letters = {"a": 1, "b": 8 + 3}
    return g


# ---------------------------------------------------------------------------
# lengths and Poincare polynomials
# ---------------------------------------------------------------------------

def closure(group, subset):
    """Smallest subset containing the input and closed under multiplication."""
    seen = {0}
    frontier = deque([0])
    gens = [g for g in subset]
    while frontier:
        x = frontier.popleft()
        for g in gens:
            y = group.table[x][g]
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return seen


def generates(group, subset):
    return len(closure(group, subset)) == group.order


def length_function(group, gens):
    """BFS word length of every element with respect to the generating set."""
    if 0 in gens:
        raise GroupError("generating set must not contain the identity")
    if not generates(group, gens):
        raise GroupError("the set does not generate the group")
    dist = {0: 0}
    frontier = deque([0])
    while frontier:
        x = frontier.popleft()
        for g in gens:
            y = group.table[x][g]
            if y not in dist:
                dist[y] = dist[x] + 1
                frontier.append(y)
    return dist


def poincare_polynomial(group, gens):
    """Coefficient k of t^n = number of elements of length n."""
    if group.order == 1 and not gens:
        return [1]
    dist = length_function(group, gens)
    coeffs = [0] * (max(dist.values()) + 1)
    for length in dist.values():
        coeffs[length] += 1
    return coeffs


# ---------------------------------------------------------------------------
# integer polynomials and cyclotomic factorization
# ---------------------------------------------------------------------------

def poly_trim(p):
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return list(p)


def poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def poly_divmod_exact(p, q):
    """Division in Z[t]; returns (quotient, remainder) or None if non-integral."""
    p = poly_trim(p)
    q = poly_trim(q)
    if q == [0]:
        raise ZeroDivisionError
    rem = list(p)
    dq = len(q) - 1
    if len(rem) - 1 < dq:
        return [0], rem
    quot = [0] * (len(rem) - dq)
    for k in range(len(rem) - 1 - dq, -1, -1):
        c = rem[k + dq]
        if c % q[-1] != 0:
            return None
        f = c // q[-1]
        quot[k] = f
        if f:
            for i, b in enumerate(q):
                rem[k + i] -= f * b
    return quot, poly_trim(rem)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Coefficient list of Phi_n, by exact division of t^n - 1."""
    p = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            res = poly_divmod_exact(p, tuple_to_list(cyclotomic_polynomial(d)))
            p, rem = res
            assert rem == [0]
    return tuple(p)


def tuple_to_list(t):
    return list(t)


def _euler_phi(n):
    out, k = n, 2
    m = n
    while k * k <= m:
        if m % k == 0:
            while m % k == 0:
                m //= k
            out -= out // k
        k += 1
    if m > 1:
        out -= out // m
    return out


NOT_CYCLOTOMIC = "NOT_CYCLOTOMIC"


def cyclotomic_factorization(coeffs):
    """Factor an integer polynomial with p(0) = 1 into cyclotomics.

    Returns a list of (n, multiplicity) pairs sorted by n, or NOT_CYCLOTOMIC.
    Because Z[t] is a UFD and the Phi_n are irreducible, repeated trial
    division cannot misfactor; the search range follows phi(n) <= deg p.
    """
    p = poly_trim(coeffs)
    if p[0] != 1:
        return NOT_CYCLOTOMIC
    deg = len(p) - 1
    if deg == 0:
        return []
    out = []
    for n in range(1, 2 * deg * deg + 2):
        if _euler_phi(n) > deg:
            continue
        phi = list(cyclotomic_polynomial(n))
        mult = 0
        while True:
            res = poly_divmod_exact(p, phi)
            if res is None or res[1] != [0]:
                break
            p = res[0]
            mult += 1
        if mult:
            out.append((n, mult))
        if len(p) == 1:
            break
    if poly_trim(p) != [1]:
        return NOT_CYCLOTOMIC
    return out
