"""Extended affine Hecke algebra of type A in the basis tau_pi t^b.

Generators are tau_1..tau_{n-1} and t_1^{+-1}; the relations are the braid
relations, tau_i - tau_i^-1 = q - q^-1, t_1 tau_1 t_1 tau_1 = tau_1 t_1 tau_1 t_1
and t_1 tau_j = tau_j t_1 for j >= 2.  With t_j = tau_{j-1}...tau_1 t_1
tau_1...tau_{j-1} every element is uniquely a combination of tau_pi t^b.

Left multiplication by t_h^{+-1} is computed by pushing it to the right
through a reduced word of pi with four commutation rules (Q = q - q^-1):

    t_h tau_h         = tau_h t_{h+1} - Q t_{h+1}
    t_{h+1} tau_h     = tau_h t_h + Q t_{h+1}
    t_h^-1 tau_h      = tau_h t_{h+1}^-1 + Q t_h^-1
    t_{h+1}^-1 tau_h  = tau_h t_h^-1 - Q t_h^-1

and t_h commutes with tau_i for i not in {h-1, h}.  Each rule is replayed
from the defining relations in :mod:`abmw.bootstrap`.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from . import lincomb as lc
from .errors import BudgetExceeded, CycleDetected, ParseError, Unsupported, default_budget
from .scalars import ONE, QDIFF, QINV, ZERO, Scalar, qpow
from .symmgrp import (Perm, from_word, identity, inverse, is_left_descent, left_mul_simple,
                      length, reduced_word)
from .textfmt import format_terms, parse_terms

HKey = Tuple[Perm, Tuple[int, ...]]


class HeckeEngine:
    """Memoized left actions of tau_i and t_h^{+-1} on basis monomials, for one n."""

    _engines: Dict[int, "HeckeEngine"] = {}

    def __init__(self, n: int):
        if n < 0:
            raise ValueError("n must be non-negative")
        self.n = n
        self._t_cache: Dict[Tuple[int, int, Perm, Tuple[int, ...]], dict] = {}
        self._active = set()
        self.steps = 0
        self.budget = default_budget()

    @classmethod
    def get(cls, n: int) -> "HeckeEngine":
        eng = cls._engines.get(n)
        if eng is None:
            eng = cls._engines[n] = HeckeEngine(n)
        return eng

    def _tick(self):
        self.steps += 1
        if self.steps > self.budget:
            raise BudgetExceeded(self.budget)

    # -- generator actions on basis keys --------------------------------
    def tau_key(self, i: int, key: HKey) -> dict:
        pi, b = key
        self._tick()
        up = left_mul_simple(i, pi)
        if not is_left_descent(i, pi):
            return {(up, b): ONE}
        # tau_i^2 = 1 + Q tau_i
        return {(up, b): ONE, (pi, b): QDIFF}

    def tau(self, i: int, x: Mapping) -> dict:
        if not 1 <= i < self.n:
            raise ValueError(f"tau_{i} does not exist for n={self.n}")
        return lc.combine((c, self.tau_key(i, k)) for k, c in x.items())

    def tau_inv(self, i: int, x: Mapping) -> dict:
        # tau^-1 = tau - Q
        return lc.add_into(self.tau(i, x), x, -QDIFF)

    def t_key(self, h: int, eps: int, key: HKey) -> dict:
        ck = (h, eps, key[0], key[1])
        hit = self._t_cache.get(ck)
        if hit is not None:
            return hit
        if ck in self._active:
            raise CycleDetected(f"t_{h}^{eps} * {format_key(key)}")
        self._active.add(ck)
        try:
            out = self._t_push(h, eps, key)
        finally:
            self._active.discard(ck)
        self._t_cache[ck] = out
        return out

    def _t_push(self, h: int, eps: int, key: HKey) -> dict:
        pi, b = key
        self._tick()
        if pi == identity(self.n):
            nb = list(b)
            nb[h - 1] += eps
            return {(pi, tuple(nb)): ONE}
        i = reduced_word(pi)[0]
        rest = (left_mul_simple(i, pi), b)
        if i not in (h - 1, h):
            return self.tau(i, self.t_key(h, eps, rest))
        if i == h:
            if eps == 1:
                x = self.t_key(h + 1, 1, rest)
                return lc.add_into(self.tau(i, x), x, -QDIFF)
            return lc.add_into(self.tau(i, self.t_key(h + 1, -1, rest)), self.t_key(h, -1, rest), QDIFF)
        # i == h - 1
        if eps == 1:
            return lc.add_into(self.tau(i, self.t_key(i, 1, rest)), self.t_key(h, 1, rest), QDIFF)
        y = self.t_key(i, -1, rest)
        return lc.add_into(self.tau(i, y), y, -QDIFF)

    def t(self, h: int, eps: int, x: Mapping) -> dict:
        if not 1 <= h <= self.n:
            raise ValueError(f"t_{h} does not exist for n={self.n}")
        return lc.combine((c, self.t_key(h, eps, k)) for k, c in x.items())

    # -- products ---------------------------------------------------------
    def left_mul_key(self, key: HKey, x: Mapping) -> dict:
        """tau_pi t^b * x."""
        pi, b = key
        cur = dict(x)
        for h, e in enumerate(b, start=1):
            for _ in range(abs(e)):
                cur = self.t(h, 1 if e > 0 else -1, cur)
        for i in reversed(reduced_word(pi)):
            cur = self.tau(i, cur)
        return cur

    def mul(self, x: Mapping, y: Mapping) -> dict:
        self.steps = 0
        return lc.combine((c, self.left_mul_key(k, y)) for k, c in x.items())

    def apply_letters(self, letters: Sequence[Tuple[str, int, int]], x: Mapping) -> dict:
        """Left-multiply x by a word given as (kind, index, power) letters."""
        cur = dict(x)
        for kind, i, p in reversed(letters):
            for _ in range(abs(p)):
                if kind == "T":
                    cur = self.tau(i, cur) if p > 0 else self.tau_inv(i, cur)
                else:
                    cur = self.t(i, 1 if p > 0 else -1, cur)
        return cur

    def one(self) -> dict:
        return {(identity(self.n), (0,) * self.n): ONE}


@dataclass(frozen=True)
class HeckeElem:
    n: int
    terms: Mapping[HKey, Scalar] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", {k: v for k, v in self.terms.items() if v})

    @property
    def engine(self) -> HeckeEngine:
        return HeckeEngine.get(self.n)

    def __add__(self, other: "HeckeElem") -> "HeckeElem":
        _same_n(self, other)
        return HeckeElem(self.n, lc.add_into(dict(self.terms), other.terms))

    def __sub__(self, other: "HeckeElem") -> "HeckeElem":
        _same_n(self, other)
        return HeckeElem(self.n, lc.add_into(dict(self.terms), other.terms, -ONE))

    def __neg__(self):
        return HeckeElem(self.n, lc.scale(self.terms, -ONE))

    def __mul__(self, other):
        if isinstance(other, HeckeElem):
            return h_mul(self, other)
        if isinstance(other, (Scalar, int)):
            return HeckeElem(self.n, lc.scale(self.terms, Scalar.const(other) if isinstance(other, int) else other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, HeckeElem):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> List[Tuple[HKey, Scalar]]:
        return sorted(self.terms.items(), key=lambda kv: _key_order(kv[0]))

    def to_text(self) -> str:
        return format_terms([(c, format_key(k)) for k, c in self.sorted_terms()])

    __str__ = to_text

    def __repr__(self):
        return f"HeckeElem(n={self.n}, {self.to_text()!r})"

    def to_json(self) -> dict:
        return {"n": self.n, "terms": [{"perm": list(k[0]), "t": list(k[1]), "coeff": c.to_json()}
                                       for k, c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, obj) -> "HeckeElem":
        if isinstance(obj, str):
            obj = json.loads(obj)
        n = int(obj["n"])
        terms: dict = {}
        for t in obj["terms"]:
            key = (tuple(int(v) for v in t["perm"]), tuple(int(v) for v in t["t"]))
            lc.add_into(terms, {key: Scalar.from_json(t["coeff"])})
        return cls(n, terms)


def _same_n(a, b):
    if a.n != b.n:
        raise ValueError(f"elements live in different algebras (n={a.n} vs n={b.n})")


def _key_order(key: HKey):
    pi, b = key
    return (length(pi), pi, sum(abs(v) for v in b), b)


def format_key(key: HKey) -> str:
    pi, b = key
    parts = [f"T{i}" for i in reduced_word(pi)]
    if any(b):
        parts.append("t^[" + ",".join(str(v) for v in b) + "]")
    return " ".join(parts) if parts else "1"


def basis_elem(n: int, pi: Optional[Perm] = None, b: Optional[Sequence[int]] = None, coeff: Scalar = ONE) -> HeckeElem:
    pi = identity(n) if pi is None else tuple(pi)
    b = (0,) * n if b is None else tuple(int(v) for v in b)
    if len(pi) != n or len(b) != n:
        raise ValueError("permutation and exponent vector must have length n")
    return HeckeElem(n, {(pi, b): coeff})


def one(n: int) -> HeckeElem:
    return basis_elem(n)


def scalar_elem(n: int, c: Scalar) -> HeckeElem:
    return basis_elem(n, coeff=c)


def h_mul(a: HeckeElem, b: HeckeElem) -> HeckeElem:
    _same_n(a, b)
    return HeckeElem(a.n, a.engine.mul(a.terms, b.terms))


def tau(i: int, n: int) -> HeckeElem:
    eng = HeckeEngine.get(n)
    return HeckeElem(n, eng.tau(i, eng.one()))


def t_j(j: int, n: int) -> HeckeElem:
    """Normal form of the defining word tau_{j-1}..tau_1 t_1 tau_1..tau_{j-1}."""
    if not 1 <= j <= n:
        raise ValueError(f"t_{j} needs 1 <= j <= n (n={n})")
    letters = [("T", i, 1) for i in range(j - 1, 0, -1)] + [("t", 1, 1)] + [("T", i, 1) for i in range(1, j)]
    return reduce_letters(n, letters)


def reduce_letters(n: int, letters: Sequence[Tuple[str, int, int]]) -> HeckeElem:
    eng = HeckeEngine.get(n)
    eng.steps = 0
    return HeckeElem(n, eng.apply_letters(letters, eng.one()))


def h_star(a: HeckeElem) -> HeckeElem:
    """Anti-automorphism fixing tau_i and t_1: (tau_pi t^b)* = t^b tau_{pi^-1}."""
    eng = a.engine
    eng.steps = 0
    parts = []
    for (pi, b), c in a.terms.items():
        x = {(inverse(pi), (0,) * a.n): ONE}
        for h, e in enumerate(b, start=1):
            for _ in range(abs(e)):
                x = eng.t(h, 1 if e > 0 else -1, x)
        parts.append((c, x))
    return HeckeElem(a.n, lc.combine(parts))


def h_basis_window(n: int, perms: Optional[Iterable[Perm]] = None, bound: int = 0) -> List[HKey]:
    from itertools import permutations
    perms = sorted(permutations(range(1, n + 1)), key=lambda p: (length(p), p)) if perms is None else list(perms)
    exps = list(product(range(-bound, bound + 1), repeat=n))
    return [(tuple(p), e) for p in perms for e in exps]


# -- text grammar -----------------------------------------------------------

_TOK = re.compile(r"^(T|t)(\d*)(?:\^(?:(-?\d+)|\[([-\d,\s]*)\]))?$")


def parse_word(text: str, n: int) -> List[Tuple[str, int, int]]:
    """Parse ``T1 T2^-1 t1^3 t^[1,-2]`` into letters; ``1`` is the empty word."""
    text = text.strip()
    if text == "1":
        return []
    letters = []
    for tok in text.split():
        m = _TOK.match(tok)
        if not m:
            raise ParseError(f"bad Hecke letter {tok!r}")
        kind, idx, pw, vec = m.groups()
        if vec is not None:
            if kind != "t" or idx:
                raise ParseError(f"bad Hecke letter {tok!r}")
            exps = [int(v) for v in vec.split(",") if v.strip()]
            if len(exps) != n:
                raise ParseError(f"t^[...] needs {n} exponents")
            # t^b with t_j = tau_{j-1}..tau_1 t_1 tau_1..tau_{j-1}
            for j, e in enumerate(exps, start=1):
                if e:
                    letters.append(("t", j, e))
            continue
        if not idx:
            raise ParseError(f"missing index in {tok!r}")
        i, p = int(idx), int(pw) if pw is not None else 1
        if kind == "T" and not 1 <= i < n:
            raise ParseError(f"T{i} out of range for n={n}")
        if kind == "t" and not 1 <= i <= n:
            raise ParseError(f"t{i} out of range for n={n}")
        if p:
            letters.append((kind, i, p))
    return letters


def parse_hecke(text: str, n: int) -> HeckeElem:
    eng = HeckeEngine.get(n)
    total: dict = {}
    for coeff, letters in parse_terms(text, lambda w: parse_word(w, n)):
        eng.steps = 0
        lc.add_into(total, eng.apply_letters(letters, eng.one()), coeff)
    return HeckeElem(n, total)


# -- built-in affine cell data ------------------------------------------------

@dataclass(frozen=True)
class CommAlgebra:
    """A free commutative S-algebra on polynomial and Laurent generators.

    ``images`` sends each generator to a Hecke element of the ambient
    algebra (used for the right action c * b); ``involution`` gives the
    exponent map of sigma on monomials, identity by default.
    """

    gens: Tuple[str, ...]
    laurent: Tuple[bool, ...]
    images: Callable[[str], HeckeElem]
    central: bool = True

    def monomials(self, bound: int) -> List[Tuple[int, ...]]:
        ranges = [range(-bound, bound + 1) if lau else range(0, bound + 1) for lau in self.laurent]
        mons = list(product(*ranges))
        mons.sort(key=lambda m: (sum(abs(v) for v in m), m))
        return mons

    def sigma(self, mono: Tuple[int, ...]) -> Tuple[int, ...]:
        return mono

    def mono_text(self, mono: Tuple[int, ...]) -> str:
        parts = [g if e == 1 else f"{g}^{e}" for g, e in zip(self.gens, mono) if e]
        return "*".join(parts) if parts else "1"

    def image(self, mono: Tuple[int, ...], n: int) -> HeckeElem:
        out = one(n)
        for g, e in zip(self.gens, mono):
            if e == 0:
                continue
            base = self.images(g)
            if e < 0:
                base = self._inverse(g, n)
            for _ in range(abs(e)):
                out = h_mul(out, base)
        return out

    def _inverse(self, g: str, n: int) -> HeckeElem:
        return self.images(g + "^-1")


@dataclass(frozen=True)
class AffineCellDatum:
    """Poset, index sets, algebras B_lambda and cell elements for the Hecke layer."""

    n: int
    cells: Tuple[str, ...]
    greater: Tuple[Tuple[str, str], ...]
    index_sets: Mapping[str, Tuple]
    algebras: Mapping[str, CommAlgebra]
    elements: Mapping[Tuple[str, object, object], HeckeElem]
    labels: Mapping[str, str] = field(default_factory=dict)

    def is_greater(self, a: str, b: str) -> bool:
        return (a, b) in self.greater

    def above(self, lam: str) -> List[str]:
        return [m for m in self.cells if self.is_greater(m, lam)]

    def cell_element(self, lam: str, u, v) -> HeckeElem:
        return self.elements[(lam, u, v)]

    def check_order(self) -> bool:
        g = set(self.greater)
        irreflexive = all((a, a) not in g for a in self.cells)
        transitive = all((a, c) in g for a, b in g for b2, c in g if b == b2)
        antisym = all((b, a) not in g for a, b in g)
        return irreflexive and transitive and antisym


def _laurent_images(n: int) -> Callable[[str], HeckeElem]:
    def img(g: str) -> HeckeElem:
        if g == "u":
            return t_j(1, n)
        if g == "u^-1":
            return basis_elem(n, b=(-1,) + (0,) * (n - 1))
        raise KeyError(g)
    return img


def builtin_cell_datum(s: int) -> AffineCellDatum:
    if s == 0:
        alg = CommAlgebra((), (), lambda g: one(0))
        return AffineCellDatum(0, ("0",), (), {"0": ("*",)}, {"0": alg}, {("0", "*", "*"): one(0)},
                               {"0": "()"})
    if s == 1:
        alg = CommAlgebra(("u",), (True,), _laurent_images(1))
        return AffineCellDatum(1, ("1",), (), {"1": ("*",)}, {"1": alg}, {("1", "*", "*"): one(1)},
                               {"1": "(1)"})
    if s == 2:
        n = 2
        bvec = tau(1, n) + scalar_elem(n, QINV)
        t1 = t_j(1, n)

        def top_images(g: str) -> HeckeElem:
            if g == "s1":
                return t1 + t_j(2, n)
            if g == "p1":
                return basis_elem(n, b=(1, 1))
            if g == "p1^-1":
                return basis_elem(n, b=(-1, -1))
            raise KeyError(g)

        top = CommAlgebra(("s1", "p1"), (False, True), top_images)
        bot = CommAlgebra(("u",), (True,), _laurent_images(n))
        pw = [one(n), t1]
        elements = {("top", i, j): h_mul(h_mul(pw[i], bvec), pw[j]) for i in (0, 1) for j in (0, 1)}
        elements[("bot", "*", "*")] = one(n)
        return AffineCellDatum(n, ("top", "bot"), (("top", "bot"),),
                               {"top": (0, 1), "bot": ("*",)}, {"top": top, "bot": bot}, elements,
                               {"top": "(2)", "bot": "(1,1)"})
    raise Unsupported(f"built-in Hecke cell data exist only for s <= 2 (got s={s})")


def cell_generator(n: int) -> HeckeElem:
    """b = tau_1 + q^-1, which spans the ideal cell of the n = 2 datum."""
    return tau(1, n) + scalar_elem(n, QINV)
