"""Free-algebra data model: words, polynomials, monomial orders, presentations.

A Word is a tuple of generator indices; an NCPoly is a dict mapping Word to a
nonzero field value.  Presentations carry named generators, optional degrees,
a DEGLEX monomial order, and a list of homogeneous relations, and can be
parsed from / printed to a small line-oriented text grammar.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .scalars import QQ, QQ_ZETA8, ZETA, IMAG, Zeta8, is_zero, format_scalar, join_fields
from . import linalg


class PresentationError(ValueError):
    """Lex/parse or validation failure, with source position when known."""

    def __init__(self, msg, line=None, col=None):
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", col {col}" if col is not None else "") + ")"
        super().__init__(msg + where)


# ---------------------------------------------------------------------------
# words and polynomials
# ---------------------------------------------------------------------------

def word_degree(word, degrees):
    return sum(degrees[g] for g in word)


def nc_add(p, q):
    out = dict(p)
    for w, c in q.items():
        s = out.get(w)
        if s is None:
            out[w] = c
        else:
            s = s + c
            if is_zero(s):
                del out[w]
            else:
                out[w] = s
    return out


def nc_neg(p):
    return {w: -c for w, c in p.items()}


def nc_sub(p, q):
    return nc_add(p, nc_neg(q))


def nc_scale(p, c):
    if is_zero(c):
        return {}
    return {w: c * x for w, x in p.items()}


def nc_mul(p, q):
    out = {}
    for w1, c1 in p.items():
        for w2, c2 in q.items():
            w = w1 + w2
            c = c1 * c2
            s = out.get(w)
            if s is None:
                out[w] = c
            else:
                s = s + c
                if is_zero(s):
                    del out[w]
                else:
                    out[w] = s
    return out


def nc_eq(p, q):
    return nc_sub(p, q) == {}


def nc_homogeneous_degree(p, degrees):
    """The common degree of all words of p, or None if p is 0 or mixed."""
    degs = {word_degree(w, degrees) for w in p}
    if len(degs) == 1:
        return degs.pop()
    return None


@dataclass(frozen=True)
class MonomialOrder:
    """Degree-first left-lexicographic order with an explicit variable priority.

    priority lists generator indices from lowest to highest; degrees gives the
    weight of each generator (all 1 in the standard grading).
    """

    priority: tuple
    degrees: tuple

    def __post_init__(self):
        ranks = [0] * len(self.priority)
        for r, g in enumerate(self.priority):
            ranks[g] = r
        object.__setattr__(self, "_ranks", tuple(ranks))

    @property
    def kind(self):
        return "DEGLEX"

    def key(self, word):
        ranks = self._ranks
        return (word_degree(word, self.degrees), tuple(ranks[g] for g in word))

    def compare(self, u, v):
        ku, kv = self.key(u), self.key(v)
        if ku < kv:
            return -1
        if ku > kv:
            return 1
        return 0

    def lead_word(self, p):
        return max(p, key=self.key)


def compare_words(order, u, v):
    """-1, 0 or 1 as u <, =, > v in the given order."""
    return order.compare(u, v)


# ---------------------------------------------------------------------------
# presentations
# ---------------------------------------------------------------------------

@dataclass
class Presentation:
    field: object
    gens: tuple
    degrees: tuple
    relations: list
    order: MonomialOrder

    def __post_init__(self):
        if len(set(self.gens)) != len(self.gens):
            raise PresentationError("generator names must be distinct")
        for k, rel in enumerate(self.relations):
            if not rel:
                raise PresentationError(f"relation {k + 1} is zero")
            if nc_homogeneous_degree(rel, self.degrees) is None:
                raise PresentationError(
                    f"relation {k + 1} ({format_poly(rel, self.gens)}) is not homogeneous")

    @property
    def ngens(self):
        return len(self.gens)

    def gen_index(self, name):
        return self.gens.index(name)

    def poly(self, text):
        """Parse a polynomial in this presentation's generators."""
        return parse_poly(text, self.gens, self.field)


def default_order(ngens, degrees=None):
    degrees = tuple(degrees) if degrees else (1,) * ngens
    return MonomialOrder(tuple(range(ngens)), degrees)


def make_presentation(field, gens, relations, order_priority=None, degrees=None):
    """Convenience constructor taking relation strings or dicts."""
    gens = tuple(gens)
    degrees = tuple(degrees) if degrees else (1,) * len(gens)
    if order_priority is None:
        order = default_order(len(gens), degrees)
    else:
        prio = tuple(gens.index(n) if isinstance(n, str) else n for n in order_priority)
        order = MonomialOrder(prio, degrees)
    rels = [parse_poly(r, gens, field) if isinstance(r, str) else r for r in relations]
    return Presentation(field, gens, degrees, rels, order)


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
                       r"|(?P<op>[-+*/^()<=]))")


def _tokenize(text, lineno):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            if text[pos:].strip() == "":
                break
            raise PresentationError(f"unexpected character {text[pos]!r}", lineno, pos + 1)
        if m.lastgroup == "int":
            tokens.append(("int", int(m.group("int")), m.start("int")))
        elif m.lastgroup == "name":
            tokens.append(("name", m.group("name"), m.start("name")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _PolyParser:
    """Recursive-descent parser for polynomial expressions."""

    def __init__(self, tokens, gens, field, lineno):
        self.tokens = tokens
        self.i = 0
        self.gens = gens
        self.gen_index = {n: k for k, n in enumerate(gens)}
        self.field = field
        self.lineno = lineno

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise PresentationError(msg, self.lineno, tok[2] + 1)

    def parse(self):
        p = self.expr()
        kind, val, _ = self.peek()
        if kind != "end":
            self.error(f"trailing input {val!r}")
        return p

    def expr(self):
        kind, val, _ = self.peek()
        sign = 1
        if kind == "op" and val in "+-":
            self.next()
            sign = -1 if val == "-" else 1
        p = self.term()
        if sign < 0:
            p = nc_neg(p)
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.next()
                q = self.term()
                p = nc_add(p, nc_neg(q) if val == "-" else q)
            else:
                return p

    def term(self):
        p = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.next()
                p = nc_mul(p, self.factor())
            elif kind in ("name", "int") or (kind == "op" and val == "("):
                # juxtaposition: "2 x1" or "x1 x2"
                p = nc_mul(p, self.factor())
            else:
                return p

    def factor(self):
        p = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.next()
            kind, e, tok_pos = self.next()
            if kind != "int":
                self.error("exponent must be an integer")
            if e < 0:
                self.error("negative exponent")
            out = {(): self.field.one}
            for _ in range(e):
                out = nc_mul(out, p)
            return out
        return p

    def atom(self):
        kind, val, pos = self.next()
        if kind == "int":
            num = Fraction(val)
            k2, v2, _ = self.peek()
            if k2 == "op" and v2 == "/":
                self.next()
                k3, v3, _ = self.next()
                if k3 != "int" or v3 == 0:
                    self.error("malformed rational literal")
                num = num / v3
            return {(): self.field.coerce(num)}
        if kind == "name":
            if val in self.gen_index:
                return {(self.gen_index[val],): self.field.one}
            if val in ("zeta8", "i"):
                if self.field != QQ_ZETA8:
                    self.error(f"scalar {val!r} requires field QQ(zeta8)")
                return {(): IMAG if val == "i" else ZETA}
            self.error(f"unknown generator {val!r}")
        if kind == "op" and val == "(":
            p = self.expr()
            k2, v2, _ = self.next()
            if not (k2 == "op" and v2 == ")"):
                self.error("expected ')'")
            return p
        if kind == "op" and val == "-":
            return nc_neg(self.factor())
        self.error(f"unexpected token {val!r}")


def parse_poly(text, gens, field, lineno=None):
    tokens = _tokenize(text, lineno)
    p = _PolyParser(tokens, gens, field, lineno).parse()
    return {w: c for w, c in p.items() if not is_zero(c)}


def parse_presentation(text):
    """Parse the presentation file grammar (see the README for the syntax)."""
    field = None
    gens = None
    degrees = None
    priority = None
    relations = []
    rel_lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "field":
            name = rest.replace(" ", "")
            if name == "QQ":
                field = QQ
            elif name in ("QQ(zeta8)", "QQ_ZETA8"):
                field = QQ_ZETA8
            else:
                raise PresentationError(f"unknown field {rest!r}", lineno)
        elif head == "vars":
            gens = tuple(rest.split())
            if not gens:
                raise PresentationError("vars line declares no generators", lineno)
        elif head == "deg":
            if gens is None:
                raise PresentationError("deg before vars", lineno)
            degrees = list(degrees or (1,) * len(gens))
            for item in rest.split():
                name, _, d = item.partition("=")
                if name not in gens or not d.isdigit() or int(d) < 1:
                    raise PresentationError(f"bad degree assignment {item!r}", lineno)
                degrees[gens.index(name)] = int(d)
            degrees = tuple(degrees)
        elif head == "order":
            if gens is None:
                raise PresentationError("order before vars", lineno)
            kind, _, chain = rest.partition(" ")
            if kind != "deglex":
                raise PresentationError(f"unsupported order {kind!r}", lineno)
            names = [n.strip() for n in chain.split("<")]
            if sorted(names) != sorted(gens):
                raise PresentationError("order must list every generator once", lineno)
            priority = tuple(gens.index(n) for n in names)
        elif head == "rel":
            rel_lines.append((lineno, rest))
        else:
            raise PresentationError(f"unknown directive {head!r}", lineno)
    if field is None:
        field = QQ
    if gens is None:
        raise PresentationError("missing vars line")
    if degrees is None:
        degrees = (1,) * len(gens)
    order = MonomialOrder(priority or tuple(range(len(gens))), degrees)
    for lineno, src in rel_lines:
        if not src:
            continue
        rel = parse_poly(src, gens, field, lineno)
        if not rel:
            raise PresentationError("relation is zero", lineno)
        if nc_homogeneous_degree(rel, degrees) is None:
            raise PresentationError(f"relation {src!r} is not homogeneous", lineno)
        relations.append(rel)
    return Presentation(field, gens, degrees, relations, order)


# ---------------------------------------------------------------------------
# printing
# ---------------------------------------------------------------------------

def format_word(word, gens):
    if not word:
        return "1"
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        name = gens[word[i]]
        parts.append(name if j - i == 1 else f"{name}^{j - i}")
        i = j
    return "*".join(parts)


def format_poly(p, gens, order=None):
    if not p:
        return "0"
    words = sorted(p, key=order.key if order else None, reverse=order is not None)
    if order is None:
        words = sorted(p, key=lambda w: (len(w), w))
    parts = []
    for w in words:
        c = p[w]
        cs = format_scalar(c)
        if w == ():
            term = cs
        elif cs == "1":
            term = format_word(w, gens)
        elif cs == "-1":
            term = "-" + format_word(w, gens)
        else:
            if ("+" in cs[1:]) or ("-" in cs[1:]):
                cs = "(" + cs + ")"
            term = cs + "*" + format_word(w, gens)
        if parts and not term.startswith("-"):
            term = "+" + term
        parts.append(term)
    return "".join(parts)


def print_presentation(p):
    lines = []
    lines.append("field QQ" if p.field == QQ else "field QQ(zeta8)")
    lines.append("vars " + " ".join(p.gens))
    if any(d != 1 for d in p.degrees):
        lines.append("deg " + " ".join(f"{n}={d}" for n, d in zip(p.gens, p.degrees)))
    lines.append("order deglex " + " < ".join(p.gens[g] for g in p.order.priority))
    for rel in p.relations:
        lines.append("rel " + format_poly(rel, p.gens, p.order))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# substitution and relation-span comparison
# ---------------------------------------------------------------------------

def apply_linear_substitution(p, matrix):
    """Rewrite p's relations in new generators Y_i = sum_j matrix[i][j] x_j.

    The new presentation keeps the generator names and order of p; the matrix
    must be invertible.
    """
    n = p.ngens
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise ValueError("substitution matrix has wrong shape")
    fld = p.field
    for row in matrix:
        for x in row:
            fld = join_fields(fld, QQ_ZETA8 if isinstance(x, Zeta8)
                              and not x.is_rational() else QQ)
    inv = linalg.mat_inverse([[fld.coerce(x) for x in row] for row in matrix])
    if inv is None:
        raise ValueError("substitution matrix is singular")
    # x_j = sum_k inv[j][k] Y_k
    images = [{(k,): inv[j][k] for k in range(n) if not is_zero(inv[j][k])}
              for j in range(n)]
    new_rels = []
    for rel in p.relations:
        out = {}
        for w, c in rel.items():
            term = {(): c}
            for g in w:
                term = nc_mul(term, images[g])
            out = nc_add(out, term)
        new_rels.append(out)
    return Presentation(fld, p.gens, p.degrees, new_rels, p.order)


def relation_span_equal(p, q):
    """True iff the relation sets span the same graded subspace of the free algebra."""
    if p.ngens != q.ngens or p.degrees != q.degrees:
        return False
    by_deg_p, by_deg_q = {}, {}
    for rels, acc, degs in ((p.relations, by_deg_p, p.degrees),
                            (q.relations, by_deg_q, q.degrees)):
        for rel in rels:
            acc.setdefault(nc_homogeneous_degree(rel, degs), []).append(rel)
    if set(by_deg_p) != set(by_deg_q):
        return False
    for d in by_deg_p:
        words = sorted({w for rel in by_deg_p[d] + by_deg_q[d] for w in rel})
        col = {w: i for i, w in enumerate(words)}
        def mat(rels):
            rows = []
            for rel in rels:
                row = [Fraction(0)] * len(words)
                for w, c in rel.items():
                    row[col[w]] = c
                rows.append(row)
            return rows
        if not linalg.same_row_space(mat(by_deg_p[d]), mat(by_deg_q[d])):
            return False
    return True
