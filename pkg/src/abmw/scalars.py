"""Exact arithmetic in the generic ground ring.

Elements live in Z[r^{+-1}, q^{+-1}, d1, d2, ...] localized at (q - q^-1),
where ``r`` is the framing parameter rho, ``q`` the Hecke parameter and
``dj`` the loop values delta_j (j >= 1).  The loop value delta_0 is not a
free generator: it is eliminated through

    r^-1 - r = (q^-1 - q) (delta_0 - 1).

A :class:`Scalar` stores an integer-coefficient numerator together with a
power ``k`` of the denominator (q - q^-1).  The representation is kept
canonical (the numerator is not divisible by q - q^-1 unless k == 0), so
structural equality is ring equality.
"""

from __future__ import annotations

import re
from collections import defaultdict
from typing import Dict, Iterable, Mapping, Tuple

# monomial key: (r exponent, q exponent, ((j, e), ...) sorted by j, e > 0)
Mono = Tuple[int, int, Tuple[Tuple[int, int], ...]]

_ONE_MONO: Mono = (0, 0, ())


class ScalarError(ValueError):
    pass


def _mono_mul(a: Mono, b: Mono) -> Mono:
    if not a[2]:
        ds = b[2]
    elif not b[2]:
        ds = a[2]
    else:
        acc = dict(a[2])
        for j, e in b[2]:
            acc[j] = acc.get(j, 0) + e
        ds = tuple(sorted(acc.items()))
    return (a[0] + b[0], a[1] + b[1], ds)


def _poly_mul(a: Dict[Mono, int], b: Dict[Mono, int]) -> Dict[Mono, int]:
    out: Dict[Mono, int] = defaultdict(int)
    for ma, ca in a.items():
        for mb, cb in b.items():
            out[_mono_mul(ma, mb)] += ca * cb
    return {m: c for m, c in out.items() if c}


def _poly_add(a: Dict[Mono, int], b: Dict[Mono, int], sign: int = 1) -> Dict[Mono, int]:
    out = dict(a)
    for m, c in b.items():
        v = out.get(m, 0) + sign * c
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


_QDIFF = {(0, 1, ()): 1, (0, -1, ()): -1}


def _qdiff_power(k: int) -> Dict[Mono, int]:
    out = {_ONE_MONO: 1}
    for _ in range(k):
        out = _poly_mul(out, _QDIFF)
    return out


def _try_div_qdiff(num: Dict[Mono, int]):
    """Return num / (q - q^-1) if it divides exactly, else None."""
    groups: Dict[Tuple, Dict[int, int]] = defaultdict(dict)
    for (re_, qe, ds), c in num.items():
        groups[(re_, ds)][qe] = c
    out: Dict[Mono, int] = {}
    for (re_, ds), coeffs in groups.items():
        top, bot = max(coeffs), min(coeffs)
        if top - bot < 2:
            return None
        # P_e = R_{e-1} - R_{e+1}, solved from the top exponent downwards
        quo: Dict[int, int] = {}
        for e in range(top, bot + 1, -1):
            quo[e - 1] = coeffs.get(e, 0) + quo.get(e + 1, 0)
        # the two lowest equations are the remainder check
        if coeffs.get(bot + 1, 0) != -quo.get(bot + 2, 0):
            return None
        if coeffs.get(bot, 0) != -quo.get(bot + 1, 0):
            return None
        for e, v in quo.items():
            if v:
                out[(re_, e, ds)] = v
    return out


class Scalar:
    """Immutable element of the localized ground ring."""

    __slots__ = ("_num", "_k", "_hash")

    def __init__(self, num: Mapping[Mono, int] | None = None, k: int = 0, *, _canonical: bool = False):
        if k < 0:
            raise ScalarError("denominator power must be non-negative")
        n = {m: c for m, c in (num or {}).items() if c}
        if not n:
            k = 0
        elif not _canonical:
            while k > 0:
                d = _try_div_qdiff(n)
                if d is None:
                    break
                n, k = d, k - 1
        self._num = n
        self._k = k
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def const(cls, c: int) -> "Scalar":
        return cls({_ONE_MONO: c} if c else {}, 0, _canonical=True)

    @classmethod
    def monomial(cls, coeff: int = 1, r: int = 0, q: int = 0, deltas: Mapping[int, int] | None = None) -> "Scalar":
        ds = tuple(sorted((j, e) for j, e in (deltas or {}).items() if e))
        for j, e in ds:
            if j < 1 or e < 0:
                raise ScalarError(f"invalid delta power d{j}^{e}")
        return cls({(r, q, ds): coeff}, 0, _canonical=True)

    # -- accessors ----------------------------------------------------
    @property
    def numerator(self) -> Dict[Mono, int]:
        return dict(self._num)

    @property
    def denom_power(self) -> int:
        return self._k

    def is_zero(self) -> bool:
        return not self._num

    def __bool__(self) -> bool:
        return bool(self._num)

    def delta_indices(self) -> set:
        return {j for (_, _, ds) in self._num for j, _ in ds}

    # -- arithmetic ---------------------------------------------------
    def _lift(self, k: int) -> Dict[Mono, int]:
        if k == self._k:
            return self._num
        return _poly_mul(self._num, _qdiff_power(k - self._k))

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._num:
            return self
        if not self._num:
            return other
        k = max(self._k, other._k)
        return Scalar(_poly_add(self._lift(k), other._lift(k)), k)

    __radd__ = __add__

    def __neg__(self):
        return Scalar({m: -c for m, c in self._num.items()}, self._k, _canonical=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._num or not other._num:
            return ZERO
        if other._is_unit_const():
            c = other._num[_ONE_MONO]
            return Scalar({m: c * v for m, v in self._num.items()}, self._k, _canonical=True)
        if self._is_unit_const():
            return other * self
        return Scalar(_poly_mul(self._num, other._num), self._k + other._k)

    __rmul__ = __mul__

    def _is_unit_const(self) -> bool:
        return self._k == 0 and len(self._num) == 1 and _ONE_MONO in self._num

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse_unit() ** (-e)
        out, base = ONE, self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def inverse_unit(self) -> "Scalar":
        """Inverse of +-r^a q^b / (q - q^-1)^k."""
        if len(self._num) != 1:
            raise ScalarError(f"{self} is not a unit of the ground ring")
        (m, c), = self._num.items()
        if c not in (1, -1) or m[2]:
            raise ScalarError(f"{self} is not a unit of the ground ring")
        return Scalar(_poly_mul({(-m[0], -m[1], ()): c}, _qdiff_power(self._k)), 0, _canonical=True)

    def div_monomial_unit(self, other: "Scalar") -> "Scalar":
        return self * other.inverse_unit()

    def exact_div_by_qdiff(self) -> "Scalar":
        if not self._num:
            return self
        return Scalar(self._num, self._k + 1)

    # -- comparison ---------------------------------------------------
    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._k == other._k and self._num == other._num

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((frozenset(self._num.items()), self._k))
        return self._hash

    # -- specialization ----------------------------------------------
    def specialize(self, assignment: Mapping[str, int], p: int) -> int:
        """Image under the homomorphism to F_p fixed by ``assignment``.

        ``assignment`` maps ``'r'``, ``'q'`` and ``'d1'``, ``'d2'``, ... to
        integers; missing delta values raise.
        """
        r = assignment["r"] % p
        q = assignment["q"] % p
        if r == 0 or q == 0:
            raise ScalarError("r and q must be invertible in the prime field")
        qinv = pow(q, -1, p)
        qd = (q - qinv) % p
        if qd == 0:
            raise ScalarError("q - q^-1 vanishes under this assignment")
        rinv = pow(r, -1, p)
        total = 0
        for (re_, qe, ds), c in self._num.items():
            v = c % p
            v = v * pow(r if re_ >= 0 else rinv, abs(re_), p) % p
            v = v * pow(q if qe >= 0 else qinv, abs(qe), p) % p
            for j, e in ds:
                key = f"d{j}"
                if key not in assignment:
                    raise ScalarError(f"no value for {key}")
                v = v * pow(assignment[key] % p, e, p) % p
            total = (total + v) % p
        if self._k:
            total = total * pow(pow(qd, self._k, p), -1, p) % p
        return total

    # -- text / json --------------------------------------------------
    def _num_str(self) -> str:
        if not self._num:
            return "0"
        parts = []
        for (re_, qe, ds), c in sorted(self._num.items(), key=_mono_sort_key):
            factors = []
            if re_:
                factors.append("r" if re_ == 1 else f"r^{re_}")
            if qe:
                factors.append("q" if qe == 1 else f"q^{qe}")
            for j, e in ds:
                factors.append(f"d{j}" if e == 1 else f"d{j}^{e}")
            body = "*".join(factors)
            if not body:
                term = str(abs(c))
            elif abs(c) == 1:
                term = body
            else:
                term = f"{abs(c)}*{body}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, term))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, term in parts[1:]:
            s += f" {sign} {term}"
        return s

    def __str__(self) -> str:
        body = self._num_str()
        if not self._k:
            return body
        if len(self._num) > 1:
            body = f"({body})"
        suffix = "/(q-q^-1)" if self._k == 1 else f"/(q-q^-1)^{self._k}"
        return body + suffix

    def __repr__(self) -> str:
        return f"Scalar('{self}')"

    def is_monomial_term(self) -> bool:
        return self._k == 0 and len(self._num) == 1

    def to_json(self) -> dict:
        return {
            "num": [
                [c, re_, qe, {f"d{j}": e for j, e in ds}]
                for (re_, qe, ds), c in sorted(self._num.items(), key=_mono_sort_key)
            ],
            "k": self._k,
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "Scalar":
        num: Dict[Mono, int] = {}
        for c, re_, qe, ds in obj["num"]:
            key = (int(re_), int(qe), tuple(sorted((int(k[1:]), int(v)) for k, v in ds.items() if v)))
            num[key] = num.get(key, 0) + int(c)
        return cls(num, int(obj.get("k", 0)))

    @classmethod
    def parse(cls, text: str) -> "Scalar":
        return _Parser(text).parse()


def _mono_sort_key(item):
    (re_, qe, ds), _ = item
    return (sum(e for _, e in ds), ds, re_, qe)


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, int):
        return Scalar.const(x)
    return NotImplemented


ZERO = Scalar()
ONE = Scalar.const(1)
R = Scalar.monomial(r=1)
RINV = Scalar.monomial(r=-1)
Q = Scalar.monomial(q=1)
QINV = Scalar.monomial(q=-1)
QDIFF = Q - QINV


def rho(e: int = 1) -> Scalar:
    return Scalar.monomial(r=e)


def qpow(e: int = 1) -> Scalar:
    return Scalar.monomial(q=e)


def delta(j: int) -> Scalar:
    """Loop value delta_j; delta_0 is forced by the ground-ring relation."""
    if j < 0:
        raise ScalarError("delta_j is only defined for j >= 0")
    if j == 0:
        return (QDIFF + R - RINV).exact_div_by_qdiff()
    return Scalar.monomial(deltas={j: 1})


def add(a: Scalar, b: Scalar) -> Scalar:
    return a + b


def mul(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def exact_div_by_qdiff(a: Scalar) -> Scalar:
    return a.exact_div_by_qdiff()


def specialize(a: Scalar, assignment: Mapping[str, int], p: int) -> int:
    return a.specialize(assignment, p)


def scalar_sum(items: Iterable[Scalar]) -> Scalar:
    """Sum with a single normalization at the end."""
    k = 0
    items = [x for x in items if x]
    if not items:
        return ZERO
    k = max(x.denom_power for x in items)
    acc: Dict[Mono, int] = {}
    for x in items:
        acc = _poly_add(acc, x._lift(k))
    return Scalar(acc, k)


class _Parser:
    _TOKEN = re.compile(r"\s*(?:(\d+)|(r|q|d\d+)|(\^)|([-+*/()]))")

    def __init__(self, text: str):
        self.tokens = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = self._TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ScalarError(f"cannot parse scalar at {text[pos:]!r}")
            num, var, caret, op = m.groups()
            if num is not None:
                self.tokens.append(("num", int(num)))
            elif var is not None:
                self.tokens.append(("var", var))
            elif caret is not None:
                self.tokens.append(("op", "^"))
            else:
                self.tokens.append(("op", op))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def parse(self) -> Scalar:
        if not self.tokens:
            raise ScalarError("empty scalar")
        v = self.expr()
        if self.i != len(self.tokens):
            raise ScalarError(f"trailing tokens in scalar: {self.tokens[self.i:]}")
        return v

    def expr(self) -> Scalar:
        sign = 1
        if self.peek() in (("op", "-"), ("op", "+")):
            sign = -1 if self.take()[1] == "-" else 1
        v = self.term() * sign
        while self.peek() in (("op", "-"), ("op", "+")):
            op = self.take()[1]
            t = self.term()
            v = v + t if op == "+" else v - t
        return v

    def term(self) -> Scalar:
        v = self.power()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            f = self.power()
            if op == "*":
                v = v * f
            else:
                v = _divide_by_unit(v, f)
        return v

    def power(self) -> Scalar:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            if self.peek() == ("op", "-"):
                self.take()
                sign = -1
            kind, val = self.take()
            if kind != "num":
                raise ScalarError("exponent must be an integer")
            e = sign * val
            if e < 0:
                return base.inverse_unit() ** (-e)
            return base ** e
        return base

    def atom(self) -> Scalar:
        kind, val = self.take()
        if kind == "num":
            return Scalar.const(val)
        if kind == "var":
            if val == "r":
                return R
            if val == "q":
                return Q
            return delta(int(val[1:]))
        if (kind, val) == ("op", "("):
            v = self.expr()
            if self.take() != ("op", ")"):
                raise ScalarError("unbalanced parenthesis")
            return v
        if (kind, val) == ("op", "-"):
            return -self.power()
        raise ScalarError(f"unexpected token {val!r}")


def _divide_by_unit(a: Scalar, b: Scalar) -> Scalar:
    # b must be (unit monomial) * (q - q^-1)^m
    m = 0
    cur = b
    while len(cur._num) != 1:
        d = _try_div_qdiff(cur._num)
        if d is None:
            raise ScalarError(f"division by non-unit {b}")
        cur = Scalar(d, cur._k, _canonical=True)
        m += 1
    out = a * cur.inverse_unit()
    for _ in range(m):
        out = out.exact_div_by_qdiff()
    return out
