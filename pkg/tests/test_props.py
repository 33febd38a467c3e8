import random

from abmw import props


def ok(res):
    assert res["ok"], res["failures"]
    return res


def test_ground_identity():
    ok(props.ground_ring_identity())


def test_relations():
    assert ok(props.relation_suite((1, 2, 3)))["checked"] > 40


def test_closure():
    assert ok(props.ordinary_closure(2))["count"] == 3
    assert ok(props.ordinary_closure(3))["count"] == 15


def test_double_factorial():
    assert [props.double_factorial_odd(n) for n in range(1, 5)] == [1, 3, 15, 105]


def test_coset_counts():
    ok(props.coset_counts(6))


def test_fuzz_small():
    ok(props.associativity_fuzz(2, 30, 6, seed=3))
    ok(props.associativity_fuzz(3, 10, 4, seed=3))
    ok(props.involution_fuzz(2, 20, 6, seed=3))
    ok(props.p_star_compat(3, 10, 4, seed=3))


def test_confluence_and_hecke():
    assert ok(props.overlap_confluence(2, 4))["checked"] > 0
    ok(props.hecke_fuzz(30, 10, 2, seed=1))


def test_random_word_is_seeded():
    a = [props.random_word(random.Random(9), 3, 6) for _ in range(3)]
    b = [props.random_word(random.Random(9), 3, 6) for _ in range(3)]
    assert a == b


def test_suite_shape():
    reports = props.suite(2, 10, 0)
    assert all(r["ok"] for r in reports)
    assert {"name", "ok", "checked", "failures", "seconds"} <= set(reports[0])
