"""Affine BMW algebra: normal forms in the T_D basis, involution, x_j, p and t.

A basis monomial is ``T_D = g_alpha x^a (e_1 e_3 ...) x^c (g_pi x^b) g_beta^*``
with alpha, beta in D_{f,n}.  Elements are dicts from :class:`NormalMonomial`
to :class:`~abmw.scalars.Scalar`.  Products are computed by letting the
generators g_i, e_i and x_1^{+-1} act on basis monomials from the left:

* on the rank-n layer g_pi x^b, g_i lengthens pi or uses
  g_i^2 = 1 + Q g_i - Q r^-1 e_i (Q = q - q^-1); x_h is pushed to the right
  through a reduced word of pi using x_{h+1} = g_h x_h g_h;
* a rank-(n-2) monomial factors as u * (x_1^c g_beta^*) where
  u = g_alpha x_1^a e_1 x_3^k spans the left ideal generated by e_1, and
  the generators act on u through a finite table.

Only n <= 3 is implemented (every rank below n then has a single cap);
larger n raises :class:`~abmw.errors.Unsupported`.
"""

from __future__ import annotations

import json
import re
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from . import lincomb as lc
from .affine_hecke import HeckeElem
from .errors import BudgetExceeded, CycleDetected, ParseError, Unsupported, default_budget
from .scalars import ONE, QDIFF, ZERO, Scalar, delta, rho
from .symmgrp import (Perm, embed, enum_D_fn, factor_shuffle, identity, in_D, inverse,
                      is_left_descent, is_shuffle, left_mul_simple, length, reduced_word)
from .textfmt import format_terms, parse_terms
from .zbrauer import MiddleDiagram, ZBrauerDiagram, factorize, recompose

MAX_N = 3


class NormalMonomial(NamedTuple):
    n: int
    f: int
    alpha: Perm
    a: Tuple[int, ...]
    pi: Perm
    b: Tuple[int, ...]
    c: Tuple[int, ...]
    beta: Perm

    @property
    def rank(self) -> int:
        return self.n - 2 * self.f

    @property
    def alpha1(self) -> Perm:
        return factor_shuffle(self.alpha, self.f)[0]

    @property
    def alpha2(self) -> Perm:
        return factor_shuffle(self.alpha, self.f)[1]

    @property
    def beta1(self) -> Perm:
        return factor_shuffle(self.beta, self.f)[0]

    @property
    def beta2(self) -> Perm:
        return factor_shuffle(self.beta, self.f)[1]

    def validate(self) -> "NormalMonomial":
        n, f = self.n, self.f
        s = n - 2 * f
        ok = (0 <= 2 * f <= n and in_D(self.alpha, f) and in_D(self.beta, f)
              and len(self.a) == f and len(self.c) == f and len(self.b) == s
              and sorted(self.pi) == list(range(1, s + 1)))
        if not ok:
            raise ValueError(f"malformed normal monomial {tuple(self)}")
        return self


def rank_n(pi: Perm, b: Sequence[int]) -> NormalMonomial:
    n = len(pi)
    return NormalMonomial(n, 0, identity(n), (), tuple(pi), tuple(b), (), identity(n))


def identity_monomial(n: int) -> NormalMonomial:
    return rank_n(identity(n), (0,) * n)


def _cap(n: int, alpha: Perm, a: int, k: int, c: int, beta: Perm) -> NormalMonomial:
    b = (k,) if n == 3 else ()
    return NormalMonomial(n, 1, alpha, (a,), identity(n - 2), b, (c,), beta)


def star_monomial(m: NormalMonomial) -> NormalMonomial:
    """T_D^* for a monomial with at most one cap and trivial pi (exact swap)."""
    if m.f == 0 or len(m.pi) > 1:
        raise ValueError("exact swap only holds for capped monomials with one vertical strand at most")
    return NormalMonomial(m.n, m.f, m.beta, m.c, m.pi, m.b, m.a, m.alpha)


# cup-module keys (alpha, a, k) stand for g_alpha x_1^a e_1 x_3^k
CupKey = Tuple[Perm, int, int]

ID3, A2, A12 = (1, 2, 3), (1, 3, 2), (2, 3, 1)


class BmwEngine:
    """Left actions of the generators on basis monomials for a fixed n <= 3."""

    _engines: Dict[int, "BmwEngine"] = {}

    def __init__(self, n: int):
        if not 1 <= n <= MAX_N:
            raise Unsupported(f"the normal-form engine supports 1 <= n <= {MAX_N} (got n={n})")
        self.n = n
        self.budget = default_budget()
        self.steps = 0
        self._memo: Dict[tuple, dict] = {}
        self._active = set()
        self._Z: Dict[int, Scalar] = {}
        self._G: Dict[int, Dict[int, Scalar]] = {}
        if n >= 2:
            self.E = {1: _cap(n, identity(n), 0, 0, 0, identity(n))}
            if n == 3:
                self.E[2] = _cap(n, A12, 0, 0, 0, A12)

    @classmethod
    def get(cls, n: int) -> "BmwEngine":
        eng = cls._engines.get(n)
        if eng is None:
            eng = cls._engines[n] = BmwEngine(n)
        return eng

    def reset(self):
        self.steps = 0

    def _tick(self, where=None):
        self.steps += 1
        if self.steps > self.budget:
            raise BudgetExceeded(self.budget, str(where) if where is not None else "")

    def _memoized(self, key, fn):
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if key in self._active:
            raise CycleDetected(str(key))
        self._active.add(key)
        try:
            self._tick(key)
            out = fn()
        finally:
            self._active.discard(key)
        self._memo[key] = out
        return out

    # -- closed loops and the n = 2 cup table -------------------------------
    def Z(self, a: int) -> Scalar:
        """e_1 x_1^a e_1 = Z(a) e_1."""
        if a in self._Z:
            return self._Z[a]
        if a >= 1:
            val = rho(-a) * delta(a)
        elif a == 0:
            val = delta(0)
        else:
            # e_1 x_1^-1 = r e_1 x_1 g_1, so e_1 x_1^a e_1 = r e_1 x_1 G(a+1)
            val = rho(1) * lc_sum_scalars((cf, self.Z(j + 1)) for j, cf in self.G(a + 1).items())
        self._Z[a] = val
        return val

    def G(self, a: int) -> Dict[int, Scalar]:
        """g_1 x_1^a e_1 = sum_j G(a)[j] x_1^j e_1."""
        if a in self._G:
            return self._G[a]
        self._tick(("G", a))
        if a == 0:
            out = {0: rho(-1)}
        elif a > 0:
            # g_1 x_1 = x_2 g_1^-1 and x_2 x_1^j e_1 = r^-2 x_1^(j-1) e_1
            out = {j - 1: cf * rho(-2) for j, cf in self.G(a - 1).items()}
            lc.add_into(out, {a - 2: rho(-2)}, -QDIFF)
            lc.add_into(out, {-1: rho(-2)}, QDIFF * self.Z(a - 1))
        else:
            # g_1 x_1^-1 = x_2^-1 g_1 + Q x_1^-1 - Q e_1 x_1^-1
            out = {j + 1: cf * rho(2) for j, cf in self.G(a + 1).items()}
            lc.add_into(out, {a: ONE}, QDIFF)
            lc.add_into(out, {0: ONE}, -QDIFF * self.Z(a))
        out = {j: v for j, v in out.items() if v}
        self._G[a] = out
        return out

    # -- cup module: left ideal generated by e_1 ---------------------------
    def _u(self, alpha: Perm, a: int, k: int = 0) -> dict:
        return {(alpha, a, k): ONE}

    def cup(self, letter: str, i: int, key: CupKey) -> dict:
        return self._memoized(("cup", letter, i, key), lambda: self._cup(letter, i, key))

    def cup_lc(self, letter: str, i: int, x: Mapping) -> dict:
        return lc.combine((cf, self.cup(letter, i, k)) for k, cf in x.items())

    def cup_ginv(self, i: int, x: Mapping) -> dict:
        out = self.cup_lc("g", i, x)
        lc.add_into(out, x, -QDIFF)
        lc.add_into(out, self.cup_lc("e", i, x), QDIFF)
        return out

    def _cup(self, letter: str, i: int, key: CupKey) -> dict:
        alpha, a, k = key
        if self.n == 2:
            if letter == "x":
                return self._u(alpha, a + i, k)
            if letter == "e":
                return {(alpha, 0, k): self.Z(a)}
            return {(alpha, j, k): cf for j, cf in self.G(a).items()}
        Q = QDIFF
        if letter == "x":
            eps = i
            if alpha in (ID3, A2):
                return self._u(alpha, a + eps, k)
            if eps == 1:
                # x_1 g_1 g_2 = g_1^-1 g_2^-1 x_3
                return self.cup_ginv(1, self.cup_ginv(2, self._u(ID3, a, k + 1)))
            # x_1^-1 g_1 g_2 v = g_1 x_2^-1 g_2 v + Q x_1^-1 g_2 v - Q x_1^-1 e_1 g_2 v
            m = a + k
            w = self._u(A12, -1, m)
            lc.add_into(w, self._u(A2, -1, m), -Q)
            lc.add_into(w, self.cup("e", 1, (A2, -1, m)), Q)
            inner = self._u(A2, a, k - 1)
            lc.add_into(inner, self._u(ID3, a + 1, k), Q * rho(2))
            lc.add_into(inner, w, -Q)
            out = self.cup_lc("g", 1, inner)
            lc.add_into(out, self._u(A2, a - 1, k), Q)
            lc.add_into(out, self.cup_lc("x", -1, self.cup("e", 1, (A2, a, k))), -Q)
            return out
        if letter == "g" and i == 1:
            if alpha == ID3:
                return {(ID3, j, k): cf for j, cf in self.G(a).items()}
            if alpha == A2:
                return self._u(A12, a, k)
            out = self._u(A2, a, k)
            lc.add_into(out, self._u(A12, a, k), Q)
            lc.add_into(out, self.cup("e", 1, (A2, a, k)), -Q * rho(-1))
            return out
        if letter == "g" and i == 2:
            if alpha == ID3:
                return self._u(A2, a, k)
            if alpha == A2:
                out = self._u(ID3, a, k)
                lc.add_into(out, self._u(A2, a, k), Q)
                lc.add_into(out, self._u(A12, 0, a + k), -Q * rho(-1))
                return out
            # g_2 g_1 g_2 = g_1 g_2 g_1
            return {(A12, j, k): cf for j, cf in self.G(a).items()}
        if letter == "e" and i == 1:
            if alpha == ID3:
                return {(ID3, 0, k): self.Z(a)}
            if alpha == A2:
                # e_1 g_2 = e_1 e_2 g_1^-1, e_2 x_1^j e_1 = e_2 e_1 x_3^j, e_1 e_2 e_1 = e_1
                v = {(ID3, j, k): cf for j, cf in self.G(a).items()}
                lc.add_into(v, self._u(ID3, a, k), -Q)
                lc.add_into(v, {(ID3, 0, k): self.Z(a)}, Q)
                out: dict = {}
                for (_, j, kk), cf in v.items():
                    lc.add_into(out, {(ID3, 0, j + kk): cf})
                return out
            if a == 0:
                return self._u(ID3, 0, k)
            return lc.scale(self.cup("e", 1, (A2, a, k)), rho(-1))
        if letter == "e" and i == 2:
            if alpha == ID3:
                return self._u(A12, 0, a + k)
            if alpha == A2:
                return {(A12, 0, a + k): rho(-1)}
            # e_2 g_1 g_2 = e_2 e_1
            return {(A12, 0, k): self.Z(a)}
        raise ValueError(f"unknown cup action {letter}{i}")

    # -- layer dispatch ------------------------------------------------------
    def _to_cup(self, m: NormalMonomial) -> CupKey:
        return (m.alpha, m.a[0], m.b[0] if self.n == 3 else 0)

    def _from_cup(self, key: CupKey, m: NormalMonomial) -> NormalMonomial:
        alpha, a, k = key
        return _cap(self.n, alpha, a, k, m.c[0], m.beta)

    def _lift_cup(self, x: Mapping, m: NormalMonomial) -> dict:
        return {self._from_cup(k, m): cf for k, cf in x.items()}

    # -- generator actions on single monomials ---------------------------------
    def g_key(self, i: int, m: NormalMonomial) -> dict:
        if m.f:
            return self._lift_cup(self.cup("g", i, self._to_cup(m)), m)
        pi, b = m.pi, m.b
        up = rank_n(left_mul_simple(i, pi), b)
        if not is_left_descent(i, pi):
            return {up: ONE}
        # g_i^2 = 1 + Q g_i - Q r^-1 e_i
        out = {up: ONE, m: QDIFF}
        lc.add_into(out, self.e_key(i, up), -QDIFF * rho(-1))
        return out

    def e_key(self, i: int, m: NormalMonomial) -> dict:
        if m.f:
            return self._lift_cup(self.cup("e", i, self._to_cup(m)), m)
        return self._memoized(("e", i, m), lambda: self._e_rank_n(i, m))

    def _e_rank_n(self, i: int, m: NormalMonomial) -> dict:
        pi, coeff = m.pi, ONE
        while is_left_descent(i, pi):
            pi = left_mul_simple(i, pi)
            coeff = coeff * rho(-1)
        y = {self.E[i]: coeff}
        for j in reduced_word(pi):
            y = self.right_g(j, y)
        for h, e in enumerate(m.b, start=1):
            for _ in range(abs(e)):
                y = self.right_x(h, 1 if e > 0 else -1, y)
        return y

    def x_key(self, h: int, eps: int, m: NormalMonomial) -> dict:
        if m.f:
            return self._x_conj(h, eps, {m: ONE})
        return self._memoized(("x", h, eps, m), lambda: self._x_push(h, eps, m))

    def _x_push(self, h: int, eps: int, m: NormalMonomial) -> dict:
        pi, b = m.pi, m.b
        if pi == identity(self.n):
            nb = list(b)
            nb[h - 1] += eps
            return {rank_n(pi, nb): ONE}
        i = reduced_word(pi)[0]
        rest = rank_n(left_mul_simple(i, pi), b)
        Q = QDIFF
        if i not in (h - 1, h):
            return self.g(i, self.x_key(h, eps, rest))
        if i == h:
            if eps == 1:
                # x_h g_h = g_h^-1 x_{h+1}
                return self.ginv(h, self.x_key(h + 1, 1, rest))
            # x_h^-1 g_h = g_h x_{h+1}^-1 + Q x_h^-1 - Q x_h^-1 e_h
            out = self.g(h, self.x_key(h + 1, -1, rest))
            lc.add_into(out, self.x_key(h, -1, rest), Q)
            lc.add_into(out, self.x(h, -1, self.e_key(h, rest)), -Q)
            return out
        j = h - 1
        if eps == 1:
            # x_{j+1} g_j = g_j x_j + Q x_{j+1} - Q r^-1 g_j x_j e_j
            out = self.g(j, self.x_key(j, 1, rest))
            lc.add_into(out, self.x_key(h, 1, rest), Q)
            lc.add_into(out, self.g(j, self.x(j, 1, self.e_key(j, rest))), -Q * rho(-1))
            return out
        # x_{j+1}^-1 g_j = g_j^-1 x_j^-1
        return self.ginv(j, self.x_key(j, -1, rest))

    def _x_conj(self, h: int, eps: int, y: Mapping) -> dict:
        # x_h = g_{h-1}..g_1 x_1 g_1..g_{h-1} on the capped layer
        act = self.g if eps == 1 else self.ginv
        cur = dict(y)
        for i in range(h - 1, 0, -1):
            cur = act(i, cur)
        cur = self._cup_x1(eps, cur)
        for i in range(1, h):
            cur = act(i, cur)
        return cur

    def _cup_x1(self, eps: int, y: Mapping) -> dict:
        parts = []
        for m, cf in y.items():
            if not m.f:
                raise AssertionError("rank-n term in capped layer")
            parts.append((cf, self._lift_cup(self.cup("x", eps, self._to_cup(m)), m)))
        return lc.combine(parts)

    # -- actions on linear combinations ----------------------------------------
    def _check_index(self, i: int):
        if not 1 <= i < self.n:
            raise ValueError(f"generator index {i} out of range for n={self.n}")

    def g(self, i: int, y: Mapping) -> dict:
        self._check_index(i)
        return lc.combine((cf, self.g_key(i, m)) for m, cf in y.items())

    def e(self, i: int, y: Mapping) -> dict:
        self._check_index(i)
        return lc.combine((cf, self.e_key(i, m)) for m, cf in y.items())

    def ginv(self, i: int, y: Mapping) -> dict:
        # g^-1 = g - Q + Q e
        out = self.g(i, y)
        lc.add_into(out, y, -QDIFF)
        lc.add_into(out, self.e(i, y), QDIFF)
        return out

    def x(self, h: int, eps: int, y: Mapping) -> dict:
        if not 1 <= h <= self.n:
            raise ValueError(f"x_{h} out of range for n={self.n}")
        top = {m: cf for m, cf in y.items() if not m.f}
        low = {m: cf for m, cf in y.items() if m.f}
        out = lc.combine((cf, self.x_key(h, eps, m)) for m, cf in top.items())
        if low:
            lc.add_into(out, self._x_conj(h, eps, low))
        return out

    # -- right actions on the capped layer, via the involution -----------------
    def _star_low(self, y: Mapping) -> dict:
        return {star_monomial(m): cf for m, cf in y.items()}

    def right_g(self, i: int, y: Mapping) -> dict:
        return self._star_low(self.g(i, self._star_low(y)))

    def right_x(self, h: int, eps: int, y: Mapping) -> dict:
        return self._star_low(self.x(h, eps, self._star_low(y)))

    # -- words, products, involution -----------------------------------------------
    def apply_letter(self, kind: str, i: int, p: int, y: Mapping) -> dict:
        cur = dict(y)
        if kind == "e":
            if p < 1:
                raise ParseError("e_i has no inverse")
            cur = self.e(i, cur)
            if p > 1:
                cur = lc.scale(cur, delta(0) ** (p - 1))
            return cur
        for _ in range(abs(p)):
            if kind == "g":
                cur = self.g(i, cur) if p > 0 else self.ginv(i, cur)
            elif kind == "x":
                cur = self.x(i, 1 if p > 0 else -1, cur)
            elif kind == "y":
                cur = lc.scale(self.x(1, 1 if p > 0 else -1, cur), rho(1 if p > 0 else -1))
            else:
                raise ParseError(f"unknown letter {kind}")
        return cur

    def apply_word(self, letters: Sequence[Tuple[str, int, int]], y: Mapping) -> dict:
        cur = dict(y)
        for kind, i, p in reversed(letters):
            cur = self.apply_letter(kind, i, p, cur)
        return cur

    def left_mul_monomial(self, m: NormalMonomial, y: Mapping) -> dict:
        return self.apply_word(monomial_letters(m), y)

    def mul(self, x: Mapping, y: Mapping) -> dict:
        self.reset()
        return lc.combine((cf, self.left_mul_monomial(m, y)) for m, cf in x.items())

    def star(self, x: Mapping) -> dict:
        self.reset()
        parts = []
        for m, cf in x.items():
            if m.f:
                parts.append((cf, {star_monomial(m): ONE}))
                continue
            y = {rank_n(inverse(m.pi), (0,) * self.n): ONE}
            for h, e in enumerate(m.b, start=1):
                for _ in range(abs(e)):
                    y = self.x(h, 1 if e > 0 else -1, y)
            parts.append((cf, y))
        return lc.combine(parts)


def lc_sum_scalars(items: Iterable[Tuple[Scalar, Scalar]]) -> Scalar:
    total = ZERO
    for a, b in items:
        total = total + a * b
    return total


# -- words -----------------------------------------------------------------------

Letter = Tuple[str, int, int]

_LETTER = re.compile(r"^([gexy])(\d+)(?:\^(-?\d+))?$")


class GenWord(NamedTuple):
    n: int
    letters: Tuple[Letter, ...]

    def text(self) -> str:
        return word_text(self.letters)

    def reverse(self) -> "GenWord":
        return GenWord(self.n, tuple(reversed(self.letters)))


def word_text(letters: Sequence[Letter]) -> str:
    if not letters:
        return "1"
    return " ".join(f"{k}{i}" + (f"^{p}" if p != 1 else "") for k, i, p in letters)


def parse_word(text: str, n: int) -> GenWord:
    """Parse ``g1 g2^-1 e1 y1^3 x1^-2``; ``1`` is the empty word.

    ``x_j`` for j >= 2 is accepted as shorthand for g_{j-1}..g_1 x_1 g_1..g_{j-1}.
    """
    text = text.strip()
    if text == "1" or text == "":
        return GenWord(n, ())
    letters = []
    for tok in text.split():
        m = _LETTER.match(tok)
        if not m:
            raise ParseError(f"bad letter {tok!r}")
        kind, idx, pw = m.group(1), int(m.group(2)), int(m.group(3)) if m.group(3) else 1
        if kind in "ge" and not 1 <= idx < n:
            raise ParseError(f"{kind}{idx} out of range for n={n}")
        if kind == "y" and idx != 1:
            raise ParseError("only y1 is a generator")
        if kind == "x" and not 1 <= idx <= n:
            raise ParseError(f"x{idx} out of range for n={n}")
        if kind == "e" and pw < 1:
            raise ParseError("e_i is not invertible")
        if pw:
            letters.append((kind, idx, pw))
    return GenWord(n, tuple(letters))


def monomial_letters(m: NormalMonomial) -> List[Letter]:
    """The literal word of T_D: g_alpha x^a e_1 e_3.. x^c g_pi x^b g_beta^*."""
    out: List[Letter] = [("g", i, 1) for i in reduced_word(m.alpha)]
    f = m.f
    for k in range(f):
        if m.a[k]:
            out.append(("x", 2 * k + 1, m.a[k]))
    out += [("e", 2 * k + 1, 1) for k in range(f)]
    for k in range(f):
        if m.c[k]:
            out.append(("x", 2 * k + 1, m.c[k]))
    out += [("g", i + 2 * f, 1) for i in reduced_word(m.pi)]
    for j, e in enumerate(m.b):
        if e:
            out.append(("x", 2 * f + 1 + j, e))
    out += [("g", i, 1) for i in reversed(reduced_word(m.beta))]
    return out


def monomial_word(m: NormalMonomial) -> GenWord:
    return GenWord(m.n, tuple(monomial_letters(m)))


def monomial_text(m: NormalMonomial) -> str:
    return word_text(monomial_letters(m))


def monomial_latex(m: NormalMonomial) -> str:
    letters = monomial_letters(m)
    if not letters:
        return "1"
    parts = []
    for k, i, p in letters:
        parts.append(f"{k}_{{{i}}}" + (f"^{{{p}}}" if p != 1 else ""))
    return " ".join(parts)


def _monomial_order(m: NormalMonomial):
    return (-m.rank, length(m.alpha), m.alpha, sum(map(abs, m.a)), m.a, length(m.pi), m.pi,
            sum(map(abs, m.b)), m.b, sum(map(abs, m.c)), m.c, length(m.beta), m.beta)


# -- diagrams ----------------------------------------------------------------------

def diagram_of(m: NormalMonomial) -> ZBrauerDiagram:
    """Read the exponents of T_D as strand labels.

    Top caps carry a (read left to right), bottom cups carry c (read left to
    right), vertical strands carry b (read top to bottom, indexed by their
    bottom point in the middle factor).
    """
    mid = MiddleDiagram(m.n, m.f, m.a, m.c, m.pi, m.b)
    return recompose(m.alpha, mid, m.beta)


def monomial_of(d: ZBrauerDiagram) -> NormalMonomial:
    alpha, mid, beta = factorize(d)
    return NormalMonomial(d.n, mid.f, alpha, mid.top_labels, mid.pi, mid.vertical_labels,
                          mid.bottom_labels, beta)


def enumerate_monomials(n: int, s: int, bound: int) -> List[NormalMonomial]:
    from .zbrauer import enumerate_diagrams
    return sorted((monomial_of(d) for d in enumerate_diagrams(n, s, bound)), key=_monomial_order)


# -- elements ----------------------------------------------------------------------

class BmwElem:
    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Optional[Mapping[NormalMonomial, Scalar]] = None):
        self.n = n
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @property
    def engine(self) -> BmwEngine:
        return BmwEngine.get(self.n)

    def _check(self, other):
        if not isinstance(other, BmwElem):
            raise TypeError("expected a BmwElem")
        if other.n != self.n:
            raise ValueError(f"elements live in different algebras (n={self.n} vs n={other.n})")

    def __add__(self, other):
        self._check(other)
        return BmwElem(self.n, lc.add_into(dict(self.terms), other.terms))

    def __sub__(self, other):
        self._check(other)
        return BmwElem(self.n, lc.add_into(dict(self.terms), other.terms, -ONE))

    def __neg__(self):
        return BmwElem(self.n, lc.scale(self.terms, -ONE))

    def __mul__(self, other):
        if isinstance(other, BmwElem):
            return b_mul(self, other)
        if isinstance(other, int):
            other = Scalar.const(other)
        if isinstance(other, Scalar):
            return BmwElem(self.n, lc.scale(self.terms, other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Scalar)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, BmwElem):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, m: NormalMonomial) -> Scalar:
        return self.terms.get(m, ZERO)

    def sorted_terms(self) -> List[Tuple[NormalMonomial, Scalar]]:
        return sorted(self.terms.items(), key=lambda kv: _monomial_order(kv[0]))

    def max_rank(self) -> int:
        return max((m.rank for m in self.terms), default=-1)

    def to_text(self) -> str:
        return format_terms([(c, monomial_text(m)) for m, c in self.sorted_terms()])

    __str__ = to_text

    def __repr__(self):
        return f"BmwElem(n={self.n}, {self.to_text()!r})"

    def to_latex(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            cs = str(c)
            parts.append(f"\\left({cs}\\right) {monomial_latex(m)}" if c != ONE else monomial_latex(m))
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {"n": self.n, "terms": [{"diagram": diagram_of(m).to_json(), "coeff": c.to_json()}
                                       for m, c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, obj) -> "BmwElem":
        from .zbrauer import diagram_from_json
        if isinstance(obj, str):
            obj = json.loads(obj)
        n = int(obj["n"])
        terms: dict = {}
        for t in obj["terms"]:
            m = monomial_of(diagram_from_json(t["diagram"]))
            lc.add_into(terms, {m: Scalar.from_json(t["coeff"])})
        return cls(n, terms)


def monomial_elem(m: NormalMonomial, coeff: Scalar = ONE) -> BmwElem:
    return BmwElem(m.n, {m.validate(): coeff})


def one(n: int) -> BmwElem:
    return monomial_elem(identity_monomial(n))


def reduce(w, n: Optional[int] = None) -> BmwElem:
    """Normal form of a word (GenWord or text)."""
    if isinstance(w, str):
        if n is None:
            raise ValueError("n is required for a text word")
        w = parse_word(w, n)
    eng = BmwEngine.get(w.n)
    eng.reset()
    return BmwElem(w.n, eng.apply_word(w.letters, {identity_monomial(w.n): ONE}))


def parse_element(text: str, n: int) -> BmwElem:
    eng = BmwEngine.get(n)
    total: dict = {}
    for coeff, w in parse_terms(text, lambda s: parse_word(s, n)):
        eng.reset()
        lc.add_into(total, eng.apply_word(w.letters, {identity_monomial(n): ONE}), coeff)
    return BmwElem(n, total)


def b_mul(a: BmwElem, b: BmwElem) -> BmwElem:
    a._check(b)
    return BmwElem(a.n, a.engine.mul(a.terms, b.terms))


def b_star(a: BmwElem) -> BmwElem:
    return BmwElem(a.n, a.engine.star(a.terms))


def x_j(j: int, n: int) -> BmwElem:
    """Normal form of g_{j-1}..g_1 x_1 g_1..g_{j-1}, built letter by letter."""
    if not 1 <= j <= n:
        raise ValueError(f"x_{j} needs 1 <= j <= n")
    letters = [("g", i, 1) for i in range(j - 1, 0, -1)] + [("y", 1, 1)] + [("g", i, 1) for i in range(1, j)]
    return reduce(GenWord(n, tuple(letters))) * rho(-1)


def gen(kind: str, i: int, n: int, p: int = 1) -> BmwElem:
    return reduce(GenWord(n, ((kind, i, p),)))


# -- structured product: caps halves around a Hecke middle ----------------------------

class CapsHalf(NamedTuple):
    """x = g_{alpha2} x^a (cap_{2f-1} ... cap_1) with alpha2 in D_{f,2f}."""

    f: int
    alpha2: Perm
    exps: Tuple[int, ...]

    @classmethod
    def plain(cls, exps: Sequence[int]) -> "CapsHalf":
        f = len(exps)
        return cls(f, identity(2 * f), tuple(exps))


def lemma41_elem(alpha: Perm, x: CapsHalf, y: CapsHalf, h: HeckeElem, beta: Perm) -> BmwElem:
    """g_alpha (x y^* (.) t(h)) g_beta^* expanded on the basis, without reduction."""
    n = len(alpha)
    if x.f != y.f:
        raise ValueError("x and y must have the same number of caps")
    f = x.f
    s = n - 2 * f
    if h.n != s or len(beta) != n:
        raise ValueError("size mismatch between shuffles, caps and Hecke element")
    if not (is_shuffle(alpha, 2 * f) and is_shuffle(beta, 2 * f)):
        raise ValueError("alpha and beta must be (2f, s)-shuffles")
    a_full = alpha if f == 0 else _glue(alpha, x.alpha2, n)
    b_full = beta if f == 0 else _glue(beta, y.alpha2, n)
    terms = {}
    for (pi, b), c in h.terms.items():
        m = NormalMonomial(n, f, a_full, x.exps, pi, b, y.exps, b_full).validate()
        terms[m] = c
    return BmwElem(n, terms)


def _glue(shuffle: Perm, inner: Perm, n: int) -> Perm:
    from .symmgrp import compose
    return compose(shuffle, embed(inner, n, 0))


# -- maps to and from the affine Hecke algebra -----------------------------------------

def p_map(a: BmwElem) -> HeckeElem:
    """g_i -> tau_i, e_i -> 0, x_1 -> t_1; kills every monomial of rank < n."""
    return HeckeElem(a.n, {(m.pi, m.b): c for m, c in a.terms.items() if m.f == 0})


def t_section(h: HeckeElem) -> BmwElem:
    return BmwElem(h.n, {rank_n(pi, b): c for (pi, b), c in h.terms.items()})


def residual_rank_below(a: BmwElem, r: int) -> bool:
    """True if every monomial of a has rank < r."""
    return all(m.rank < r for m in a.terms)
