import random

import pytest

from abmw.affine_hecke import (HeckeElem, HeckeEngine, basis_elem, builtin_cell_datum, cell_generator, h_basis_window,
                               h_mul, h_star, one, parse_hecke, scalar_elem, t_j, tau)
from abmw.errors import BudgetExceeded, ParseError, Unsupported
from abmw.scalars import ONE, Q, QDIFF, QINV, ZERO
from abmw.symmgrp import length

N = 2


def rnd(rng, n=N, bound=2):
    from itertools import permutations
    perms = list(permutations(range(1, n + 1)))
    terms = {}
    for _ in range(rng.randint(1, 3)):
        key = (rng.choice(perms), tuple(rng.randint(-bound, bound) for _ in range(n)))
        terms[key] = terms.get(key, ZERO) + ONE * rng.choice((-1, 1, 2))
    return HeckeElem(n, terms)


def test_quadratic():
    t = tau(1, N)
    assert h_mul(t, t) == one(N) + t * QDIFF


def test_laurent_part():
    assert h_mul(basis_elem(N, b=(1, -2)), basis_elem(N, b=(2, 5))) == basis_elem(N, b=(3, 3))


def test_t1_past_tau():
    lhs = h_mul(t_j(1, N), tau(1, N))
    t2 = basis_elem(N, b=(0, 1))
    assert lhs == h_mul(tau(1, N), t2) - t2 * QDIFF


def test_t_j_are_monomials():
    assert t_j(1, N) == basis_elem(N, b=(1, 0))
    assert t_j(2, N) == basis_elem(N, b=(0, 1))
    assert t_j(3, 3) == basis_elem(3, b=(0, 0, 1))
    for i in range(1, 4):
        for j in range(1, 4):
            assert h_mul(t_j(i, 3), t_j(j, 3)) == h_mul(t_j(j, 3), t_j(i, 3))


def test_symmetric_laurent_central():
    s1 = t_j(1, N) + t_j(2, N)
    p1 = basis_elem(N, b=(1, 1))
    for z in (s1, p1):
        for g in (tau(1, N), t_j(1, N)):
            assert h_mul(z, g) == h_mul(g, z)


def test_star():
    assert h_star(tau(1, N)) == tau(1, N)
    assert h_star(t_j(1, N)) == t_j(1, N)
    # tau_w* = tau_{w^-1}: w = s1 s2 in S_3
    w = basis_elem(3, pi=(2, 3, 1))
    assert h_star(w) == basis_elem(3, pi=(3, 1, 2))
    rng = random.Random(3)
    for _ in range(50):
        a, b = rnd(rng), rnd(rng)
        assert h_star(h_star(a)) == a
        assert h_star(h_mul(a, b)) == h_mul(h_star(b), h_star(a))


def test_associativity():
    rng = random.Random(11)
    for _ in range(60):
        x, y, z = rnd(rng), rnd(rng), rnd(rng)
        assert h_mul(h_mul(x, y), z) == h_mul(x, h_mul(y, z))


def test_associativity_n3():
    rng = random.Random(5)
    for _ in range(15):
        x, y, z = (rnd(rng, 3, 1) for _ in range(3))
        assert h_mul(h_mul(x, y), z) == h_mul(x, h_mul(y, z))


def _quotient(h):
    # H_2 / <b>: tau_1 -> -q^-1, t_2 -> q^-2 t_1
    out = {}
    for (pi, b), c in h.terms.items():
        k = b[0] + b[1]
        out[k] = out.get(k, ZERO) + c * (-QINV) ** length(pi) * QINV ** (2 * b[1])
    return {k: v for k, v in out.items() if v != ZERO}


def _lmul(a, b):
    out = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, ZERO) + x * y
    return {k: v for k, v in out.items() if v != ZERO}


def test_quotient_by_b_is_a_homomorphism():
    b = cell_generator(N)
    assert _quotient(b) == {}
    rng = random.Random(2)
    for _ in range(40):
        x, y = rnd(rng), rnd(rng)
        assert _quotient(h_mul(x, y)) == _lmul(_quotient(x), _quotient(y))


def test_b_identities():
    b = cell_generator(N)
    assert h_mul(b, b) == b * (Q + QINV)
    assert h_mul(tau(1, N), b) == b * Q


def test_basis_window():
    assert len(h_basis_window(1, bound=1)) == 3
    assert len(h_basis_window(2, bound=0)) == 2
    assert len(h_basis_window(2, bound=1)) == 18


def test_cell_datum_shape():
    d = builtin_cell_datum(2)
    assert d.check_order()
    assert d.is_greater("top", "bot")
    assert d.labels["top"] == "(2)"
    assert d.cell_element("top", 0, 0) == cell_generator(2)
    for s in (0, 1):
        assert builtin_cell_datum(s).check_order()
    with pytest.raises(Unsupported):
        builtin_cell_datum(3)


def test_parse_round_trip():
    x = parse_hecke("T1 t^[1,-2] + (q-q^-1) t^[0,1]", 2)
    assert parse_hecke(x.to_text(), 2) == x
    assert HeckeElem.from_json(x.to_json()) == x
    with pytest.raises(ParseError):
        parse_hecke("T5", 2)


def test_budget_is_enforced(monkeypatch):
    eng = HeckeEngine(3)
    eng.budget = 1
    monkeypatch.setitem(HeckeEngine._engines, 3, eng)
    with pytest.raises(BudgetExceeded):
        h_mul(basis_elem(3, b=(4, -3, 2)), basis_elem(3, pi=(3, 2, 1)))
