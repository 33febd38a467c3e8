import dataclasses

import pytest

from abmw.cellular import (Window, all_passed, b_samples, cell_form, check_axiom_a, check_axiom_b, check_axiom_c,
                           form_symmetric, make_layer, verify)
from abmw.errors import Unsupported
from abmw.linalg import make_field
from abmw.scalars import ONE, delta, rho


def statuses(reports):
    return {(r["check"], tuple(r["cell"]) if r.get("cell") else None): r["status"] for r in reports}


@pytest.mark.parametrize("s", [0, 1, 2])
def test_hecke_datum_prime(s):
    assert all_passed(verify("hecke", s, Window(2, 2), "prime"))


def test_bmw2_prime():
    reports = verify("bmw", 2, Window(1, 1), "prime", n_random=5)
    assert all_passed(reports)
    assert {r["check"] for r in reports} == {"axiom_a", "axiom_b", "axiom_c"}


def test_bmw3_axiom_b_small():
    gens = ["g1", "e2", "x1"]
    reports = verify("bmw", 3, Window(0, 0), "prime", n_random=2, axioms="b", generators=gens)
    assert all_passed(reports)
    assert any(r["status"] == "skipped" for r in reports)


def test_skips_are_reported_not_silent():
    layer = make_layer("bmw", 3, make_field("prime"))
    assert layer.skipped


def test_mutated_order_is_caught():
    layer = make_layer("hecke", 2, make_field("prime"))
    layer.datum = dataclasses.replace(layer.datum, greater=(("bot", "top"),))
    reports = check_axiom_b(layer, Window(1, 1), n_random=3)
    bad = [r for r in reports if r["status"] == "fail"]
    assert bad and bad[0]["counterexamples"]


def test_mutated_rank_order_is_caught():
    layer = make_layer("bmw", 2, make_field("prime"))
    layer.greater = lambda a, b: a[0] > b[0] or (a[0] == b[0] and a[1] == "top" and b[1] == "bot")
    assert not all_passed(check_axiom_b(layer, Window(1, 1), n_random=2))


def test_unsupported_sizes():
    with pytest.raises(Unsupported):
        make_layer("bmw", 4, make_field("prime"))
    with pytest.raises(Unsupported):
        make_layer("hecke", 3, make_field("prime"))


def test_b_samples_start_with_unit():
    layer = make_layer("hecke", 2, make_field("prime"))
    samples = b_samples(layer, (2, "top"), 1, 3, 0)
    assert samples[0] == {(0, 0): ONE}
    assert len(samples) == len(layer.b_monomials((2, "top"), 1)) + 3


def _value(F, form, layer, c, a):
    idx = form.index
    i = next(k for k, t in enumerate(idx) if t[1].exps == (c,))
    j = next(k for k, t in enumerate(idx) if t[1].exps == (a,))
    return form.value(i, j)


def test_cap_form_n2():
    F = make_field("exact")
    layer = make_layer("bmw", 2, F)
    cell = (0, "0")
    form = cell_form(layer, cell, Window(1, 0))
    assert not form.problems
    assert form_symmetric(layer, form)
    conv = lambda s: F.convert(s)
    for c in (-1, 0, 1):
        for a in (-1, 0, 1):
            v = _value(F, form, layer, c, a)
            assert len(v) == 1
            val = next(iter(v.values()))
            k = c + a
            if k == 0:
                assert F.is_zero(F.sub(val, conv(delta(0))))
            elif k > 0:
                assert F.is_zero(F.sub(val, conv(rho(-k) * delta(k))))
    # axiom a and c on the same layer in the exact field
    assert all_passed(check_axiom_a(layer, Window(1, 1)))
    assert all_passed(check_axiom_c(layer, Window(1, 0), n_random=2))
