from itertools import product

import pytest

from abmw.symmgrp import enum_D_fn
from abmw.zbrauer import (DiagramError, MiddleDiagram, diagram_from_json, enumerate_diagrams, factorize,
                          parse_diagram, recompose, underlying_diagrams)


def double_factorial(n):
    out = 1
    for k in range(1, 2 * n, 2):
        out *= k
    return out


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_underlying_count(n):
    # perfect matchings of 2n vertices
    assert len(underlying_diagrams(n)) == double_factorial(n)
    by_rank = sum(len(underlying_diagrams(n, s)) for s in range(n % 2, n + 1, 2))
    assert by_rank == double_factorial(n)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_factorize_recompose(n):
    for s in range(n % 2, n + 1, 2):
        for d in enumerate_diagrams(n, s, 1):
            a, mid, b = factorize(d)
            assert recompose(a, mid, b) == d


def _middles(n, f, L):
    s = n - 2 * f
    labs = range(-L, L + 1)
    from itertools import permutations
    for top in product(labs, repeat=f):
        for bot in product(labs, repeat=f):
            for pi in permutations(range(1, s + 1)):
                for vl in product(labs, repeat=s):
                    yield MiddleDiagram(n, f, top, bot, pi, vl)


def test_uniqueness_n3():
    n = 3
    for f in (0, 1):
        seen = {}
        D = enum_D_fn(f, n)
        for a in D:
            for mid in _middles(n, f, 1):
                for b in D:
                    d = recompose(a, mid, b)
                    assert d not in seen
                    seen[d] = (a, mid, b)
        assert len(seen) == len(enumerate_diagrams(n, n - 2 * f, 1))


def test_text_json_round_trip():
    for d in enumerate_diagrams(2, 0, 1) + enumerate_diagrams(3, 1, 1)[:20]:
        assert parse_diagram(d.to_text()) == d
        assert diagram_from_json(d.to_json()) == d


def test_transpose_is_involution():
    for d in enumerate_diagrams(3, 1, 1):
        assert d.transpose().transpose() == d


def test_bad_input():
    with pytest.raises(DiagramError):
        enumerate_diagrams(3, 2, 0)
    with pytest.raises(DiagramError):
        parse_diagram("1->2#0")
    with pytest.raises(DiagramError):
        parse_diagram("n=2; 1->2#0; 1->1~#0")
