from itertools import permutations
from math import comb, factorial

import pytest

from abmw.symmgrp import (PermError, compose, embed, enum_D_fn, enum_shuffles, factor_shuffle, from_word,
                          identity, in_D, inverse, is_shuffle, length, perm, perm_from_text, perm_to_text,
                          reduced_word)


def test_group_laws():
    for p in permutations(range(1, 5)):
        assert compose(p, inverse(p)) == identity(4)
        assert from_word(reduced_word(p), 4) == p
        assert len(reduced_word(p)) == length(p)


def test_word_convention():
    # s1 s2 applied to 1: s2 first (fixes 1), then s1 sends 1 to 2
    assert from_word([1, 2], 3)[0] == 2


@pytest.mark.parametrize("n", range(0, 7))
def test_coset_counts(n):
    for f in range(n // 2 + 1):
        want = factorial(n) // (2 ** f * factorial(f) * factorial(n - 2 * f))
        assert len(enum_D_fn(f, n)) == want


def test_shuffles():
    for f, s in [(1, 1), (1, 2), (2, 0), (2, 1)]:
        sh = enum_shuffles(f, s)
        assert len(sh) == comb(2 * f + s, s)
        assert all(is_shuffle(p, 2 * f) for p in sh)


def test_factor_shuffle_is_length_additive():
    for n in (3, 4, 5):
        for f in range(1, n // 2 + 1):
            for p in enum_D_fn(f, n):
                p1, p2 = factor_shuffle(p, f)
                assert compose(p1, p2) == p
                assert length(p) == length(p1) + length(p2)


def test_in_D_rejects():
    assert not in_D((2, 1, 3), 1)
    assert in_D((1, 2, 3), 1)
    with pytest.raises(PermError):
        factor_shuffle((2, 1, 3), 1)


def test_text_and_embed():
    p = perm([3, 1, 2])
    assert perm_from_text(perm_to_text(p)) == p
    assert embed((2, 1), 4, 2) == (1, 2, 4, 3)
    with pytest.raises(PermError):
        perm([1, 1])
