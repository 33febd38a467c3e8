"""Replay derivations of the derived rewrite rules from the defining relations.

Expressions are linear combinations of words in the raw generators
(``g_i^{+-1}, e_i, y_1^{+-1}`` or ``T_i^{+-1}, t_1^{+-1}``), every letter with
power +-1.  A relation ``L = R`` yields one rewrite ``m -> X`` for each word
m of ``L - R`` whose coefficient is a unit; the empty word gives insertions.

A certificate is a chain of waypoint expressions.  Each link is checked by
a bounded search: the next waypoint must be reachable from the current one
by a single rewrite applied at one position of one term (either link
direction is accepted, since each link is an equation).  Once a rule is
certified it becomes available as a rewrite to later certificates.
"""

from __future__ import annotations

import re
import time
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import lincomb as lc
from .errors import ParseError
from .relations import Relation, bmw_relations, hecke_relations
from .scalars import ONE, Scalar, ScalarError, rho
from .textfmt import parse_terms

Letter = Tuple[str, int, int]
Word = Tuple[Letter, ...]
Expr = Dict[Word, Scalar]


@dataclass(frozen=True)
class Rewrite:
    name: str
    lhs: Word
    rhs: Tuple[Tuple[Scalar, Word], ...]


def _is_unit(c: Scalar) -> bool:
    try:
        c.inverse_unit()
        return c.denom_power == 0
    except ScalarError:
        return False


def rewrites_from(rel: Relation) -> List[Rewrite]:
    """All orientations m -> X of L - R = 0 with m a unit-coefficient word."""
    poly: Expr = {}
    for c, wd in rel.lhs:
        lc.add_into(poly, {normalize_word(wd): ONE}, c)
    for c, wd in rel.rhs:
        lc.add_into(poly, {normalize_word(wd): ONE}, -c)
    out = []
    for m, c in poly.items():
        if not _is_unit(c):
            continue
        inv = c.inverse_unit()
        rhs = tuple((-(v * inv), wd) for wd, v in poly.items() if wd != m)
        out.append(Rewrite(rel.name, m, rhs))
    return out


def normalize_word(wd: Sequence[Letter]) -> Word:
    out: List[Letter] = []
    for kind, i, p in wd:
        if kind in "eE":
            out.extend([(kind, i, 1)] * p)
        else:
            out.extend([(kind, i, 1 if p > 0 else -1)] * abs(p))
    return tuple(out)


def apply_at(expr: Expr, word: Word, pos: int, rw: Rewrite) -> Optional[Expr]:
    k = len(rw.lhs)
    if word[pos:pos + k] != rw.lhs:
        return None
    c = expr[word]
    out = dict(expr)
    del out[word]
    pre, post = word[:pos], word[pos + k:]
    for cf, mid in rw.rhs:
        lc.add_into(out, {pre + mid + post: ONE}, c * cf)
    return out


def single_steps(expr: Expr, rules: Sequence[Rewrite]):
    for word in list(expr):
        for rw in rules:
            k = len(rw.lhs)
            for pos in range(len(word) - k + 1):
                if word[pos:pos + k] == rw.lhs:
                    yield rw, word, pos, apply_at(expr, word, pos, rw)


def _reaches(a: Expr, b: Expr, rules: Sequence[Rewrite]) -> bool:
    return any(res == b for _, _, _, res in single_steps(a, rules))


# -- text form with macros --------------------------------------------------------

_TOKEN = re.compile(r"^([gexyTt])(\d+)(?:\^(-?\d+))?$")


def _macro_x(j: int, p: int) -> Tuple[Scalar, Word]:
    # x_1 = r^-1 y_1, x_{h+1} = g_h x_h g_h; inverses use g^-1 and y^-1
    sgn = 1 if p > 0 else -1
    core: List[Letter] = [("g", i, sgn) for i in range(j - 1, 0, -1)] + [("y", 1, sgn)] + \
                         [("g", i, sgn) for i in range(1, j)]
    return rho(-p), tuple(core) * abs(p)


def _macro_t(j: int, p: int) -> Word:
    sgn = 1 if p > 0 else -1
    core = [("T", i, sgn) for i in range(j - 1, 0, -1)] + [("t", 1, sgn)] + [("T", i, sgn) for i in range(1, j)]
    return tuple(core) * abs(p)


def parse_macro_word(text: str) -> Tuple[Scalar, Word]:
    text = text.strip()
    if text == "1":
        return ONE, ()
    coeff, out = ONE, []
    for tok in text.split():
        m = _TOKEN.match(tok)
        if not m:
            raise ParseError(f"bad letter {tok!r}")
        kind, idx, p = m.group(1), int(m.group(2)), int(m.group(3)) if m.group(3) else 1
        if kind == "x":
            c, wd = _macro_x(idx, p)
            coeff = coeff * c
            out.extend(wd)
        elif kind == "t" and idx > 1:
            out.extend(_macro_t(idx, p))
        else:
            out.extend(normalize_word([(kind, idx, p)]))
    return coeff, tuple(out)


def parse_expr(text: str) -> Expr:
    out: Expr = {}
    for c, (c2, wd) in parse_terms(text, parse_macro_word):
        lc.add_into(out, {wd: ONE}, c * c2)
    return out


def expr_text(expr: Expr) -> str:
    from .textfmt import format_terms
    items = sorted(expr.items(), key=lambda kv: (len(kv[0]), kv[0]))
    return format_terms([(c, _word_text(wd)) for wd, c in items])


def _word_text(wd: Word) -> str:
    if not wd:
        return "1"
    return " ".join(f"{k}{i}" + ("^-1" if p == -1 else "") for k, i, p in wd)


# -- certificates -------------------------------------------------------------------

@dataclass
class Certificate:
    name: str
    lhs: str
    rhs: str
    chain: List[str]
    algebra: str = "bmw"
    n: int = 3


@dataclass
class CheckResult:
    name: str
    ok: bool
    message: str
    seconds: float
    steps: int = 0


@dataclass
class RuleBook:
    algebra: str
    n: int
    rules: List[Rewrite] = field(default_factory=list)

    @classmethod
    def defining(cls, algebra: str, n: int) -> "RuleBook":
        rels = bmw_relations(n) if algebra == "bmw" else hecke_relations(n)
        book = cls(algebra, n)
        for rel in rels:
            book.rules.extend(rewrites_from(rel))
        return book

    def add_lemma(self, name: str, lhs: Expr, rhs: Expr):
        self.rules.extend(rewrites_from(Relation(name, tuple((c, w) for w, c in lhs.items()),
                                                 tuple((c, w) for w, c in rhs.items()))))


def check_certificate(cert: Certificate, book: RuleBook) -> CheckResult:
    t0 = time.perf_counter()
    try:
        points = [parse_expr(cert.lhs)] + [parse_expr(s) for s in cert.chain] + [parse_expr(cert.rhs)]
    except (ParseError, ScalarError) as e:
        return CheckResult(cert.name, False, f"unparsable waypoint: {e}", 0.0)
    for k in range(len(points) - 1):
        cur, nxt = points[k], points[k + 1]
        if cur == nxt:
            continue
        if not (_reaches(cur, nxt, book.rules) or _reaches(nxt, cur, book.rules)):
            return CheckResult(cert.name, False, f"link {k} not justified: {expr_text(cur)}  =>  {expr_text(nxt)}",
                               time.perf_counter() - t0, k)
    return CheckResult(cert.name, True, f"{len(points) - 1} links", time.perf_counter() - t0, len(points) - 1)


def run_certificates(certs: Iterable[Certificate]) -> List[CheckResult]:
    books: Dict[Tuple[str, int], RuleBook] = {}
    lemmas: List[Certificate] = []
    results = []
    for cert in certs:
        key = (cert.algebra, cert.n)
        if key not in books:
            book = books[key] = RuleBook.defining(*key)
            for lem in lemmas:
                if lem.algebra == cert.algebra and lem.n <= cert.n:
                    book.add_lemma(lem.name, parse_expr(lem.lhs), parse_expr(lem.rhs))
        res = check_certificate(cert, books[key])
        results.append(res)
        if res.ok:
            # a certified rule may be used by the certificates that follow
            lemmas.append(cert)
            for (alg, n), book in books.items():
                if alg == cert.algebra and n >= cert.n:
                    book.add_lemma(cert.name, parse_expr(cert.lhs), parse_expr(cert.rhs))
    return results
