"""Permutations in one-line notation, reduced words and coset representatives.

A permutation of ``{1..n}`` is a tuple ``p`` with ``p[i-1] = p(i)``.
Composition follows functions: ``compose(a, b)(i) = a(b(i))``.  A word
``[i1, ..., ir]`` stands for ``s_{i1} s_{i2} ... s_{ir}`` (rightmost factor
applied first), which is also the order in which ``g_{i1} ... g_{ir}`` is
written in the algebras.
"""

from __future__ import annotations

import json
from functools import lru_cache
from itertools import combinations, permutations
from math import comb
from typing import Iterable, List, Sequence, Tuple

Perm = Tuple[int, ...]


class PermError(ValueError):
    pass


def perm(images: Iterable[int]) -> Perm:
    p = tuple(int(i) for i in images)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise PermError(f"{list(p)} is not a permutation of 1..{len(p)}")
    return p


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def compose(a: Perm, b: Perm) -> Perm:
    if len(a) != len(b):
        raise PermError(f"size mismatch: {len(a)} vs {len(b)}")
    return tuple(a[b[i] - 1] for i in range(len(b)))


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p, start=1):
        out[v - 1] = i
    return tuple(out)


def length(p: Perm) -> int:
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def transposition(i: int, n: int) -> Perm:
    """The simple transposition s_i = (i, i+1) in S_n."""
    if not 1 <= i < n:
        raise PermError(f"s_{i} does not exist in S_{n}")
    p = list(range(1, n + 1))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def left_mul_simple(i: int, p: Perm) -> Perm:
    """s_i * p: swap the values i and i+1."""
    return tuple(i + 1 if v == i else i if v == i + 1 else v for v in p)


def right_mul_simple(p: Perm, i: int) -> Perm:
    """p * s_i: swap the entries in positions i and i+1."""
    q = list(p)
    q[i - 1], q[i] = q[i], q[i - 1]
    return tuple(q)


def is_left_descent(i: int, p: Perm) -> bool:
    # l(s_i p) < l(p)  iff  i+1 appears before i in one-line notation
    return p.index(i + 1) < p.index(i)


@lru_cache(maxsize=None)
def reduced_word(p: Perm) -> Tuple[int, ...]:
    """Canonical reduced word: repeatedly strip the smallest left descent."""
    word: List[int] = []
    cur = p
    while True:
        for i in range(1, len(cur)):
            if is_left_descent(i, cur):
                word.append(i)
                cur = left_mul_simple(i, cur)
                break
        else:
            return tuple(word)


def from_word(word: Sequence[int], n: int) -> Perm:
    p = identity(n)
    for i in reversed(word):
        p = left_mul_simple(i, p)
    return p


def in_D(p: Perm, f: int) -> bool:
    """The three order conditions that define D_{f,n}."""
    n = len(p)
    if 2 * f > n:
        return False
    evens = [p[i - 1] for i in range(2, 2 * f + 1, 2)]
    if any(a > b for a, b in zip(evens, evens[1:])):
        return False
    if any(p[i - 1] > p[i] for i in range(1, 2 * f, 2)):
        return False
    tail = p[2 * f:]
    return all(a < b for a, b in zip(tail, tail[1:]))


@lru_cache(maxsize=None)
def enum_D_fn(f: int, n: int) -> Tuple[Perm, ...]:
    if f < 0 or 2 * f > n:
        raise PermError(f"need 0 <= 2f <= n, got f={f}, n={n}")
    return tuple(p for p in permutations(range(1, n + 1)) if in_D(p, f))


def is_shuffle(p: Perm, k: int) -> bool:
    """Order preserving on {1..k} and on {k+1..n}."""
    head, tail = p[:k], p[k:]
    return all(a < b for a, b in zip(head, head[1:])) and all(a < b for a, b in zip(tail, tail[1:]))


@lru_cache(maxsize=None)
def enum_shuffles(f: int, s: int) -> Tuple[Perm, ...]:
    """All (2f, s)-shuffles of 2f + s points."""
    n = 2 * f + s
    out = []
    for head in combinations(range(1, n + 1), 2 * f):
        rest = [v for v in range(1, n + 1) if v not in head]
        out.append(tuple(head) + tuple(rest))
    out.sort()
    assert len(out) == comb(n, s)
    return tuple(out)


def factor_shuffle(p: Perm, f: int) -> Tuple[Perm, Perm]:
    """Split p in D_{f,n} as p = p1 p2 with p1 a (2f, s)-shuffle and p2 in D_{f,2f}.

    ``p2`` is returned embedded in S_n (it fixes 2f+1..n).
    """
    if not in_D(p, f):
        raise PermError(f"{list(p)} is not in D_({f},{len(p)})")
    k = 2 * f
    p1 = tuple(sorted(p[:k])) + tuple(sorted(p[k:]))
    p2 = compose(inverse(p1), p)
    assert all(p2[i] == i + 1 for i in range(k, len(p)))
    assert in_D(p2[:k], f)
    assert length(p) == length(p1) + length(p2)
    return p1, p2


def embed(p: Perm, n: int, offset: int = 0) -> Perm:
    """Place p on the points offset+1..offset+len(p) of {1..n}."""
    out = list(range(1, n + 1))
    for i, v in enumerate(p):
        out[offset + i] = offset + v
    return tuple(out)


def perm_to_text(p: Perm) -> str:
    return "[" + ",".join(str(v) for v in p) + "]"


def perm_from_text(text: str) -> Perm:
    return perm(json.loads(text))
