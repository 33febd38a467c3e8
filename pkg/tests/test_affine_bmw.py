import random

import pytest

from abmw import affine_hecke as H
from abmw.affine_bmw import (BmwElem, BmwEngine, CapsHalf, NormalMonomial, b_mul, b_star, diagram_of,
                             enumerate_monomials, gen, identity_monomial, lemma41_elem, monomial_elem,
                             monomial_of, monomial_word, one, p_map, parse_element, parse_word, reduce,
                             residual_rank_below, t_section, x_j)
from abmw.errors import BudgetExceeded, ParseError, Unsupported
from abmw.props import random_word
from abmw.scalars import ONE, Q, QINV, ZERO, delta, rho
from abmw.zbrauer import enumerate_diagrams, normalize


def red(text, n=2):
    return reduce(parse_word(text, n))


def test_defining_examples():
    e1 = red("e1")
    assert red("g1 g1^-1") == one(2)
    assert red("e1 e1") == e1 * delta(0)
    assert red("e1 y1 e1") == e1 * delta(1)
    assert red("e1 y1^-1 e1") == e1 * (rho(-2) * delta(1))
    assert red("g1 g1") == one(2) - red("g1") * (QINV - Q) + e1 * ((QINV - Q) * rho(-1))
    assert red("e1 e2 e1", 3) == red("e1", 3)


def test_x_commute():
    assert b_mul(x_j(1, 2), x_j(2, 2)) == b_mul(x_j(2, 2), x_j(1, 2))
    assert b_mul(x_j(2, 3), x_j(3, 3)) == b_mul(x_j(3, 3), x_j(2, 3))
    assert x_j(2, 2) == red("g1 x1 g1")
    assert list(x_j(2, 2).terms) == [NormalMonomial(2, 0, (1, 2), (), (1, 2), (0, 1), (), (1, 2))]
    assert list(x_j(1, 1).terms)[0].b == (1,)


@pytest.mark.parametrize("a", [1, 2, 3])
@pytest.mark.parametrize("c", [-1, 0, 2])
def test_cap_absorbs_winding(a, c):
    # e1 . (x1^a e1 x1^c) = rho^-a delta_a (e1 x1^c)
    m = NormalMonomial(2, 1, (1, 2), (a,), (), (), (c,), (1, 2))
    target = NormalMonomial(2, 1, (1, 2), (0,), (), (), (c,), (1, 2))
    assert b_mul(red("e1"), monomial_elem(m)) == monomial_elem(target, rho(-a) * delta(a))


def test_unit():
    rng = random.Random(0)
    for _ in range(20):
        a = reduce(random_word(rng, 3, 4))
        assert b_mul(one(3), a) == a == b_mul(a, one(3))


def test_star():
    assert b_star(parse_element("g1 x1", 2)) == parse_element("x1 g1", 2)
    assert b_star(red("e1")) == red("e1")
    rng = random.Random(1)
    for _ in range(100):
        a = reduce(random_word(rng, 2, 5))
        assert b_star(b_star(a)) == a


def test_monomial_word_shapes():
    m = NormalMonomial(2, 1, (1, 2), (1,), (), (), (2,), (1, 2))
    assert monomial_word(m).text() == "x1 e1 x1^2"
    assert monomial_word(identity_monomial(2)).letters == ()
    assert monomial_word(NormalMonomial(2, 0, (1, 2), (), (2, 1), (1, -1), (), (1, 2))).text().startswith("g1")


@pytest.mark.parametrize("n,s,L", [(2, 0, 1), (2, 2, 1), (3, 1, 1), (3, 3, 0)])
def test_word_reduces_to_itself(n, s, L):
    for m in enumerate_monomials(n, s, L):
        assert reduce(monomial_word(m)) == monomial_elem(m)


def test_diagram_bijection():
    for d in enumerate_diagrams(3, 1, 1):
        assert diagram_of(monomial_of(d)) == d
    e1 = list(red("e1").terms)[0]
    assert e1.f == 1 and e1.a == (0,) and e1.c == (0,)
    assert diagram_of(e1) == normalize(2, [(1, 2, 0), (-1, -2, 0)])
    assert len(enumerate_monomials(3, 1, 1)) == 243


def test_lemma41_examples():
    x, y = CapsHalf(1, (1, 2), (1,)), CapsHalf(1, (1, 2), (-1,))
    el = lemma41_elem((1, 2), x, y, H.one(0), (1, 2))
    assert el == red("x1 e1 x1^-1")
    h = H.basis_elem(2, (2, 1), (1, -2))
    el = lemma41_elem((1, 2), CapsHalf(0, (), ()), CapsHalf(0, (), ()), h, (1, 2))
    assert el == t_section(h)


def test_p_and_t():
    assert p_map(red("e1")) == H.HeckeElem(2, {})
    assert t_section(H.tau(1, 2)) == red("g1")
    assert p_map(red("g1 x1^2")) == H.h_mul(H.tau(1, 2), H.basis_elem(2, b=(2, 0)))
    rng = random.Random(4)
    for _ in range(40):
        a, b = reduce(random_word(rng, 2, 4)), reduce(random_word(rng, 2, 4))
        assert p_map(b_mul(a, b)) == H.h_mul(p_map(a), p_map(b))
        assert p_map(b_star(a)) == H.h_star(p_map(a))
    assert residual_rank_below(red("e1") * Q, 2)
    assert not residual_rank_below(red("g1"), 2)


def test_json_round_trip():
    a = red("x1 e1 x1^-1") * delta(3) + red("g1 x1^2") * QINV
    assert BmwElem.from_json(a.to_json()) == a
    assert parse_element(a.to_text(), 2) == a


def test_errors():
    with pytest.raises(ParseError):
        parse_word("g3", 2)
    with pytest.raises(ParseError):
        parse_word("e1^2 x", 2)
    with pytest.raises(Unsupported):
        gen("g", 1, 4)


def test_budget_is_enforced(monkeypatch):
    # a fresh engine, so no memoized products hide the work
    eng = BmwEngine(3)
    eng.budget = 5
    monkeypatch.setitem(BmwEngine._engines, 3, eng)
    with pytest.raises(BudgetExceeded):
        red("e1 y1 g2 y1 e2 g1^-1 y1^-1 e1 g2 e2", 3)
