"""Finitely supported linear combinations stored as plain dicts key -> Scalar."""

from __future__ import annotations

from typing import Dict, Hashable, Iterable, Mapping, Tuple

from .scalars import ONE, Scalar, scalar_sum

LC = Dict[Hashable, Scalar]


def single(key, coeff: Scalar = ONE) -> LC:
    return {key: coeff} if coeff else {}


def add_into(acc: LC, other: Mapping, coeff: Scalar = ONE) -> LC:
    """acc += coeff * other, in place."""
    if not coeff:
        return acc
    unit = coeff == ONE
    for k, v in other.items():
        t = v if unit else v * coeff
        cur = acc.get(k)
        if cur is None:
            acc[k] = t
        else:
            s = cur + t
            if s:
                acc[k] = s
            else:
                del acc[k]
    return acc


def combine(parts: Iterable[Tuple[Scalar, Mapping]]) -> LC:
    """Sum of coeff * lc, normalizing each coefficient once."""
    buckets: Dict[Hashable, list] = {}
    for c, lc in parts:
        if not c:
            continue
        for k, v in lc.items():
            buckets.setdefault(k, []).append(v * c)
    out = {}
    for k, vs in buckets.items():
        s = vs[0] if len(vs) == 1 else scalar_sum(vs)
        if s:
            out[k] = s
    return out


def scale(lc: Mapping, coeff: Scalar) -> LC:
    if not coeff:
        return {}
    return {k: v * coeff for k, v in lc.items()}
