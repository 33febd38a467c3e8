"""Property suites shared by the test-suite and ``abmw verify props``.

Every function returns a dict with at least ``name``, ``ok`` and ``checked``;
failures carry a few counterexamples in ``failures``.
"""

from __future__ import annotations

import random
import time
from itertools import permutations, product
from math import factorial
from typing import Dict, List, Sequence

from . import lincomb as lc
from .affine_bmw import (BmwElem, GenWord, b_mul, b_star, enumerate_monomials, monomial_elem, p_map,
                         reduce, residual_rank_below, t_section)
from .affine_hecke import HeckeElem, h_mul, h_star, reduce_letters
from .bootstrap import normalize_word, rewrites_from
from .relations import bmw_relations, hecke_relations
from .scalars import ONE, Q, QINV, ZERO, delta, rho
from .symmgrp import enum_D_fn
from .zbrauer import MiddleDiagram, enumerate_diagrams, factorize, recompose


def _result(name: str, failures: List, checked: int, t0: float, **extra) -> dict:
    return {"name": name, "ok": not failures, "checked": checked, "failures": failures[:10],
            "seconds": round(time.perf_counter() - t0, 3), **extra}


def ground_ring_identity() -> dict:
    t0 = time.perf_counter()
    # (q^-1 - q)(delta_0 - 1) - (r^-1 - r)
    val = (QINV - Q) * (delta(0) - ONE) - (rho(-1) - rho(1))
    return _result("ground ring identity", [] if val == ZERO else [str(val)], 1, t0)


def _side_bmw(n: int, expr) -> BmwElem:
    total = BmwElem(n)
    for c, wd in expr:
        total = total + reduce(GenWord(n, tuple(wd))) * c
    return total


def _side_hecke(n: int, expr) -> HeckeElem:
    total = HeckeElem(n)
    for c, wd in expr:
        total = total + reduce_letters(n, list(wd)) * c
    return total


def relation_suite(ns: Sequence[int] = (2, 3)) -> dict:
    """reduce(L) = reduce(R) for every defining relation of both algebras."""
    t0 = time.perf_counter()
    fails, count = [], 0
    for n in ns:
        for rel in bmw_relations(n):
            count += 1
            if _side_bmw(n, rel.lhs) != _side_bmw(n, rel.rhs):
                fails.append(f"bmw n={n}: {rel.name}")
        for rel in hecke_relations(n):
            count += 1
            if _side_hecke(n, rel.lhs) != _side_hecke(n, rel.rhs):
                fails.append(f"hecke n={n}: {rel.name}")
    return _result("relation suite", fails, count, t0)


def double_factorial_odd(n: int) -> int:
    out = 1
    for k in range(1, 2 * n, 2):
        out *= k
    return out


def ordinary_closure(n: int) -> dict:
    """Label-zero monomials are closed under products; count (2n-1)!!."""
    t0 = time.perf_counter()
    mons = [m for s in range(n % 2, n + 1, 2) for m in enumerate_monomials(n, s, 0)]
    allowed = set(mons)
    fails = []
    for a in mons:
        for b in mons:
            p = b_mul(monomial_elem(a), monomial_elem(b))
            extra = set(p.terms) - allowed
            if extra:
                fails.append(f"{monomial_elem(a)} * {monomial_elem(b)} leaves the label-zero span")
    want = double_factorial_odd(n)
    if len(mons) != want:
        fails.append(f"{len(mons)} label-zero monomials, expected {want}")
    return _result("ordinary BMW closure", fails, len(mons) ** 2, t0, count=len(mons), expected=want)


def coset_counts(nmax: int = 6) -> dict:
    t0 = time.perf_counter()
    fails, count = [], 0
    for n in range(0, nmax + 1):
        for f in range(0, n // 2 + 1):
            want = factorial(n) // (2 ** f * factorial(f) * factorial(n - 2 * f))
            got = len(enum_D_fn(f, n))
            count += 1
            if got != want:
                fails.append(f"|D_{f},{n}| = {got}, expected {want}")
    return _result("coset counts", fails, count, t0)


def _middles(n: int, f: int, L: int):
    labs = range(-L, L + 1)
    s = n - 2 * f
    for top in product(labs, repeat=f):
        for bot in product(labs, repeat=f):
            for pi in permutations(range(1, s + 1)):
                for vl in product(labs, repeat=s):
                    yield MiddleDiagram(n, f, top, bot, pi, vl)


def zbrauer_exhaustion(nmax: int = 4, L: int = 1) -> dict:
    """factorize then recompose is the identity, and every triple
    (alpha, d, beta) gives a different diagram, covering all of them."""
    t0 = time.perf_counter()
    fails, count = [], 0
    for n in range(1, nmax + 1):
        for s in range(n % 2, n + 1, 2):
            f = (n - s) // 2
            diagrams = enumerate_diagrams(n, s, L)
            for d in diagrams:
                count += 1
                a, mid, b = factorize(d)
                if recompose(a, mid, b) != d:
                    fails.append(f"recompose(factorize(D)) != D for {d}")
            D = enum_D_fn(f, n)
            seen = set()
            for a in D:
                for mid in _middles(n, f, L):
                    for b in D:
                        d = recompose(a, mid, b)
                        if d in seen:
                            fails.append(f"{d} has two factorizations")
                        seen.add(d)
            if seen != set(diagrams):
                fails.append(f"n={n}, s={s}: {len(seen)} products for {len(diagrams)} diagrams")
    return _result("Z-Brauer factorization", fails, count, t0)


def random_word(rng: random.Random, n: int, max_len: int) -> GenWord:
    letters = []
    for _ in range(rng.randint(0, max_len)):
        kind = rng.choice("gey") if n > 1 else "y"
        if kind == "y":
            letters.append(("y", 1, rng.choice((1, -1))))
        elif kind == "g":
            letters.append(("g", rng.randint(1, n - 1), rng.choice((1, -1))))
        else:
            letters.append(("e", rng.randint(1, n - 1), 1))
    return GenWord(n, tuple(letters))


def associativity_fuzz(n: int, trials: int, max_len: int, seed: int = 0) -> dict:
    t0 = time.perf_counter()
    rng = random.Random(seed)
    fails = []
    for _ in range(trials):
        u, v, w = (random_word(rng, n, max_len) for _ in range(3))
        left = b_mul(reduce(GenWord(n, u.letters + v.letters)), reduce(w))
        right = b_mul(reduce(u), reduce(GenWord(n, v.letters + w.letters)))
        whole = reduce(GenWord(n, u.letters + v.letters + w.letters))
        if not (left == right == whole):
            fails.append(f"{u.text()} | {v.text()} | {w.text()}")
    return _result(f"associativity n={n}", fails, trials, t0)


def involution_fuzz(n: int, trials: int, max_len: int, seed: int = 0) -> dict:
    t0 = time.perf_counter()
    rng = random.Random(seed)
    fails = []
    for _ in range(trials):
        u, v = random_word(rng, n, max_len), random_word(rng, n, max_len)
        U, V = reduce(u), reduce(v)
        lhs = reduce(GenWord(n, u.letters + v.letters).reverse())
        if lhs != b_mul(b_star(V), b_star(U)) or b_star(b_star(U)) != U:
            fails.append(f"{u.text()} | {v.text()}")
    return _result(f"involution n={n}", fails, trials, t0)


def _expr_bmw(n: int, expr: Dict) -> BmwElem:
    total: dict = {}
    for wd, c in expr.items():
        lc.add_into(total, reduce(GenWord(n, wd)).terms, c)
    return BmwElem(n, total)


def overlap_confluence(n: int = 2, max_len: int = 5) -> dict:
    """Apply two defining-relation rewrites at overlapping positions of a word;
    both results must have the same normal form."""
    t0 = time.perf_counter()
    rules = [rw for rel in bmw_relations(n) for rw in rewrites_from(rel) if rw.lhs]
    fails, pairs = [], 0
    cache: Dict = {}

    def nf(expr):
        key = frozenset(expr.items())
        if key not in cache:
            cache[key] = _expr_bmw(n, expr)
        return cache[key]

    for a in rules:
        for b in rules:
            la, lb = len(a.lhs), len(b.lhs)
            # b starts inside a at offset k and the union has length <= max_len
            for k in range(la):
                span = max(la, k + lb)
                if span > max_len:
                    continue
                overlap = a.lhs[k:k + lb]
                if b.lhs[:len(overlap)] != overlap:
                    continue
                word = a.lhs + b.lhs[len(overlap):]
                if len(word) != span:
                    continue
                pairs += 1
                ra = _apply(word, 0, a)
                rb = _apply(word, k, b)
                if nf(ra) != nf(rb):
                    fails.append(f"{a.name} / {b.name} on {word}")
    return _result(f"overlap confluence n={n}", fails, pairs, t0)


def _apply(word, pos, rw) -> Dict:
    out: Dict = {}
    pre, post = word[:pos], word[pos + len(rw.lhs):]
    for c, mid in rw.rhs:
        lc.add_into(out, {normalize_word(pre + mid + post): ONE}, c)
    return out


def hecke_fuzz(trials: int = 200, pairs: int = 50, bound: int = 2, seed: int = 0) -> dict:
    """Closure and associativity in H_2, and the properties of p and t."""
    t0 = time.perf_counter()
    rng = random.Random(seed)
    n = 2
    fails = []

    def rnd():
        terms = {}
        for _ in range(rng.randint(1, 3)):
            pi = rng.choice([(1, 2), (2, 1)])
            b = (rng.randint(-bound, bound), rng.randint(-bound, bound))
            terms[(pi, b)] = terms.get((pi, b), ZERO) + ONE * rng.choice((-2, -1, 1, 2))
        return HeckeElem(n, terms)

    for _ in range(trials):
        x, y, z = rnd(), rnd(), rnd()
        if h_mul(h_mul(x, y), z) != h_mul(x, h_mul(y, z)):
            fails.append(f"assoc {x} | {y} | {z}")
    for _ in range(pairs):
        x, y = rnd(), rnd()
        tx, ty = t_section(x), t_section(y)
        if p_map(tx) != x:
            fails.append(f"p t != id on {x}")
        if not residual_rank_below(b_mul(tx, ty) - t_section(h_mul(x, y)), n):
            fails.append(f"t(x)t(y) != t(xy) mod I on {x} | {y}")
        if not residual_rank_below(t_section(h_star(x)) - b_star(tx), n):
            fails.append(f"t(x*) != t(x)* mod I on {x}")
        if p_map(b_mul(tx, ty)) != h_mul(x, y):
            fails.append(f"p not multiplicative on {x} | {y}")
    return _result("hecke layer", fails, trials + pairs, t0)


def p_star_compat(n: int, trials: int, max_len: int, seed: int = 0) -> dict:
    t0 = time.perf_counter()
    rng = random.Random(seed)
    fails = []
    for _ in range(trials):
        a = reduce(random_word(rng, n, max_len))
        if p_map(b_star(a)) != h_star(p_map(a)):
            fails.append(str(a))
    return _result(f"p and * n={n}", fails, trials, t0)


def suite(n: int, trials: int, seed: int) -> List[dict]:
    """The ``verify props`` bundle."""
    max_len = 6 if n <= 2 else 5
    out = [relation_suite((n,)) if n >= 2 else ground_ring_identity(),
           associativity_fuzz(n, trials, max_len, seed),
           involution_fuzz(n, max(1, trials // 2), max_len, seed + 1),
           p_star_compat(n, max(1, trials // 2), max_len, seed + 2)]
    if n == 2:
        out.append(overlap_confluence(2, 5))
        out.append(hecke_fuzz(trials, max(1, trials // 4), 2, seed + 3))
    return out


__all__ = ["ground_ring_identity", "relation_suite", "ordinary_closure", "coset_counts", "associativity_fuzz",
           "involution_fuzz", "overlap_confluence", "hecke_fuzz", "p_star_compat", "suite", "random_word",
           "double_factorial_odd", "zbrauer_exhaustion"]
