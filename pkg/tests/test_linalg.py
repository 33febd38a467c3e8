import pytest

from abmw.linalg import Echelon, ExactField, PrimeField, make_field, rank_of
from abmw.scalars import ONE, Q, QDIFF, QINV, R, delta


@pytest.fixture(params=["exact", "prime"])
def F(request):
    return make_field(request.param, seed=1)


def test_convert_is_a_ring_map(F):
    a, b = R + Q * delta(1), delta(0) - QINV
    assert F.is_zero(F.sub(F.convert(a * b), F.mul(F.convert(a), F.convert(b))))
    assert F.is_zero(F.sub(F.convert(a + b), F.add(F.convert(a), F.convert(b))))
    assert not F.is_zero(F.convert(QDIFF))


def test_prime_assignment_keeps_qdiff_invertible():
    for seed in range(50):
        P = PrimeField(seed=seed)
        assert P.convert(QDIFF) != 0


def test_exact_localized_value():
    E = ExactField()
    d0 = E.convert(delta(0))
    assert E.is_zero(E.sub(E.mul(d0, E.convert(QDIFF)), E.convert(QDIFF + R - R ** -1)))


def test_echelon_solve_and_dependence(F):
    c = lambda s: F.convert(ONE * s if isinstance(s, int) else s)
    e = Echelon(F)
    assert e.add_column("u", {0: c(1), 1: c(R)})
    assert e.add_column("v", {1: c(Q), 2: c(2)})
    assert not e.add_column("w", {0: c(2), 1: F.add(c(R * 2), c(Q)), 2: c(2)})
    assert e.rank == 2 and e.dependent[0][0] == "w"
    sol = e.solve({0: c(3), 1: F.add(c(R * 3), c(Q * 5)), 2: c(10)})
    assert F.is_zero(F.sub(sol["u"], c(3))) and F.is_zero(F.sub(sol["v"], c(5)))
    assert e.solve({3: c(1)}) is None


def test_rank_of(F):
    one = F.convert(ONE)
    vecs = [{0: one}, {1: one}, {0: one, 1: one}]
    assert rank_of(F, vecs) == 2


def test_unknown_mode():
    with pytest.raises(ValueError):
        make_field("float")
