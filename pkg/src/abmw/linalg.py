"""Linear algebra over the fraction field of the ground ring, or over F_p.

Two fields share one interface.  :class:`ExactField` works in
Q(r, q, d1, d2, ...) through sympy's rational function fields, which is
slow but exact.  :class:`PrimeField` specializes every scalar to F_p at a
random point (a Schwartz-Zippel screen: an identity that fails generically
fails at a random point with probability at most deg/p).

:class:`Echelon` keeps an incrementally reduced column set together with
the combination that produced each reduced vector, so a target vector can
be written in the columns, and dependent columns are noticed on insertion.
"""

from __future__ import annotations

import random
from typing import Dict, Hashable, List, Mapping, Optional, Sequence, Tuple

from .scalars import Scalar

Vec = Dict[Hashable, object]

DEFAULT_PRIME = 2_147_483_647


class PrimeField:
    def __init__(self, p: int = DEFAULT_PRIME, seed: int = 0, max_delta: int = 16):
        self.p = p
        rng = random.Random(seed)
        while True:
            q = rng.randrange(2, p - 1)
            if (q * q - 1) % p:
                break
        self.assignment = {"r": rng.randrange(2, p - 1), "q": q}
        for j in range(1, max_delta + 1):
            self.assignment[f"d{j}"] = rng.randrange(1, p)
        self.zero, self.one = 0, 1
        self._cache: Dict[Scalar, int] = {}

    @property
    def name(self) -> str:
        return f"GF({self.p})"

    def convert(self, s: Scalar) -> int:
        v = self._cache.get(s)
        if v is None:
            v = self._cache[s] = s.specialize(self.assignment, self.p)
        return v

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def div(self, a, b):
        return a * pow(b, -1, self.p) % self.p

    def neg(self, a):
        return -a % self.p

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def text(self, a) -> str:
        return str(a)


class ExactField:
    """Q(r, q, d1, ..., dK) via sympy; deltas beyond K raise."""

    def __init__(self, max_delta: int = 16):
        from sympy import QQ
        names = ["r", "q"] + [f"d{j}" for j in range(1, max_delta + 1)]
        self.K = QQ.frac_field(*[__import__("sympy").Symbol(x) for x in names])
        gens = self.K.gens
        self._r, self._q, self._d = gens[0], gens[1], gens[2:]
        self.zero, self.one = self.K.zero, self.K.one
        self._qd = self._q - 1 / self._q
        self._cache: Dict[Scalar, object] = {}

    name = "exact"

    def convert(self, s: Scalar):
        v = self._cache.get(s)
        if v is not None:
            return v
        total = self.K.zero
        for (re_, qe, ds), c in s.numerator.items():
            term = self.K(c) * self._r ** re_ * self._q ** qe
            for j, e in ds:
                term = term * self._d[j - 1] ** e
            total = total + term
        if s.denom_power:
            total = total / self._qd ** s.denom_power
        self._cache[s] = total
        return total

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        return a / b

    def neg(self, a):
        return -a

    def is_zero(self, a) -> bool:
        return not a

    def text(self, a) -> str:
        return str(self.K.to_sympy(a))


def make_field(mode: str = "exact", p: int = DEFAULT_PRIME, seed: int = 0):
    if mode == "exact":
        return ExactField()
    if mode == "prime":
        return PrimeField(p, seed)
    raise ValueError(f"unknown field mode {mode!r}")


class Echelon:
    """Columns inserted one by one; reduced copies with pivot rows."""

    def __init__(self, field):
        self.F = field
        self.rows: List[Tuple[Hashable, Vec, Dict[Hashable, object]]] = []
        self.dependent: List[Tuple[Hashable, Dict[Hashable, object]]] = []
        self.columns: List[Hashable] = []

    def _reduce(self, vec: Vec, comb: Dict[Hashable, object]):
        F = self.F
        for piv, row, rcomb in self.rows:
            c = vec.get(piv)
            if c is None or F.is_zero(c):
                continue
            f = F.div(c, row[piv])
            for k, v in row.items():
                nv = F.sub(vec.get(k, F.zero), F.mul(f, v))
                if F.is_zero(nv):
                    vec.pop(k, None)
                else:
                    vec[k] = nv
            for k, v in rcomb.items():
                nv = F.sub(comb.get(k, F.zero), F.mul(f, v))
                if F.is_zero(nv):
                    comb.pop(k, None)
                else:
                    comb[k] = nv
        return vec, comb

    def add_column(self, name: Hashable, vec: Mapping) -> bool:
        """Insert a column; False if it is dependent on the earlier ones."""
        self.columns.append(name)
        v = {k: x for k, x in vec.items() if not self.F.is_zero(x)}
        v, comb = self._reduce(v, {name: self.F.one})
        if not v:
            self.dependent.append((name, comb))
            return False
        piv = min(v, key=repr)
        self.rows.append((piv, v, comb))
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)

    def solve(self, target: Mapping) -> Optional[Dict[Hashable, object]]:
        """Coefficients x with sum x_c col_c = target, or None if no solution."""
        F = self.F
        vec = {k: x for k, x in target.items() if not F.is_zero(x)}
        acc: Dict[Hashable, object] = {}
        for piv, row, rcomb in self.rows:
            c = vec.get(piv)
            if c is None or F.is_zero(c):
                continue
            f = F.div(c, row[piv])
            for k, v in row.items():
                nv = F.sub(vec.get(k, F.zero), F.mul(f, v))
                if F.is_zero(nv):
                    vec.pop(k, None)
                else:
                    vec[k] = nv
            for k, v in rcomb.items():
                nv = F.add(acc.get(k, F.zero), F.mul(f, v))
                if F.is_zero(nv):
                    acc.pop(k, None)
                else:
                    acc[k] = nv
        if vec:
            return None
        return acc


def rank_of(field, vectors: Sequence[Mapping]) -> int:
    e = Echelon(field)
    for i, v in enumerate(vectors):
        e.add_column(i, v)
    return e.rank
