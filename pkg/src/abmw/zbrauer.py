"""Integer-labelled Brauer diagrams and the factorization D = alpha d beta^-1.

Vertices are encoded as integers: ``i`` for the top vertex i and ``-i`` for
the bottom vertex i-bar.  They are ordered 1 < 2 < ... < n < n-bar < ... < 1-bar,
and every strand is stored oriented from its smaller endpoint.  Reversing a
strand negates its label.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from itertools import product
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from .symmgrp import Perm, in_D, inverse

Strand = Tuple[int, int, int]


class DiagramError(ValueError):
    pass


def vertex_key(v: int, n: int) -> int:
    return v if v > 0 else 2 * n + 1 + v


def vertex_text(v: int) -> str:
    return str(v) if v > 0 else f"{-v}~"


@dataclass(frozen=True)
class ZBrauerDiagram:
    n: int
    strands: FrozenSet[Strand]

    @property
    def rank(self) -> int:
        return sum(1 for a, b, _ in self.strands if (a > 0) != (b > 0))

    @property
    def f(self) -> int:
        return (self.n - self.rank) // 2

    def strand_at(self, v: int) -> Strand:
        for s in self.strands:
            if v in (s[0], s[1]):
                return s
        raise DiagramError(f"no strand at {vertex_text(v)}")

    def label_from(self, v: int) -> int:
        """Label of the strand through v, oriented away from v."""
        a, b, lab = self.strand_at(v)
        return lab if a == v else -lab

    def underlying(self) -> FrozenSet[Tuple[int, int]]:
        return frozenset((a, b) for a, b, _ in self.strands)

    def transpose(self) -> "ZBrauerDiagram":
        """Swap top and bottom, keeping cap labels read left to right and
        vertical labels read top to bottom."""
        out = []
        for a, b, lab in self.strands:
            if (a > 0) == (b > 0):
                lo, hi = sorted((abs(a), abs(b)))
                # left-to-right label of this horizontal strand
                lr = lab if abs(a) == lo else -lab
                sgn = -1 if a > 0 else 1
                out.append((sgn * lo, sgn * hi, lr))
            else:
                top, bot = (a, b) if a > 0 else (b, a)
                out.append((-bot, -top, lab))
        return normalize(self.n, out)

    def to_text(self) -> str:
        body = "; ".join(f"{vertex_text(a)}->{vertex_text(b)}#{lab}" for a, b, lab in self.sorted_strands())
        return f"n={self.n}" + (f"; {body}" if body else "")

    def sorted_strands(self) -> List[Strand]:
        return sorted(self.strands, key=lambda s: vertex_key(s[0], self.n))

    def to_json(self) -> dict:
        return {"n": self.n, "strands": [list(s) for s in self.sorted_strands()]}

    def __str__(self) -> str:
        return self.to_text()


def normalize(n: int, raw: Iterable[Sequence[int]]) -> ZBrauerDiagram:
    """Canonicalize a raw list of (from, to, label) strands."""
    seen = set()
    out = set()
    for item in raw:
        a, b, lab = (int(x) for x in item)
        for v in (a, b):
            if v == 0 or abs(v) > n:
                raise DiagramError(f"vertex {v} out of range for n={n}")
            if v in seen:
                raise DiagramError(f"vertex {vertex_text(v)} used twice")
            seen.add(v)
        if a == b:
            raise DiagramError("a strand needs two distinct endpoints")
        if vertex_key(a, n) > vertex_key(b, n):
            a, b, lab = b, a, -lab
        out.add((a, b, lab))
    if len(seen) != 2 * n:
        raise DiagramError("strands do not form a perfect matching")
    return ZBrauerDiagram(n, frozenset(out))


def perm_act(p: Perm, d: ZBrauerDiagram, side: str = "left") -> ZBrauerDiagram:
    """Stack the label-0 permutation diagram of p on top (left) or below (right)."""
    if len(p) != d.n:
        raise DiagramError(f"size mismatch: permutation of {len(p)} vs n={d.n}")
    if side == "left":
        def mv(v):
            return p[v - 1] if v > 0 else v
    elif side == "right":
        pinv = inverse(p)

        def mv(v):
            return -pinv[-v - 1] if v < 0 else v
    else:
        raise ValueError("side must be 'left' or 'right'")
    return normalize(d.n, [(mv(a), mv(b), lab) for a, b, lab in d.strands])


@dataclass(frozen=True)
class MiddleDiagram:
    """The middle factor d: caps (2k-1, 2k) top and bottom, then verticals.

    ``top_labels[k]`` labels the top cap (2k+1, 2k+2) read left to right,
    ``bottom_labels[k]`` the bottom cup likewise, ``pi`` permutes the last
    s points (as a permutation of 1..s, bottom point j goes to top pi(j)),
    ``vertical_labels[j]`` labels the vertical strand with bottom point
    2f+1+j, read top to bottom.
    """

    n: int
    f: int
    top_labels: Tuple[int, ...]
    bottom_labels: Tuple[int, ...]
    pi: Perm
    vertical_labels: Tuple[int, ...]

    def diagram(self) -> ZBrauerDiagram:
        strands = []
        for k in range(self.f):
            i = 2 * k + 1
            strands.append((i, i + 1, self.top_labels[k]))
            strands.append((-i, -(i + 1), self.bottom_labels[k]))
        off = 2 * self.f
        for j, lab in enumerate(self.vertical_labels):
            bottom = off + j + 1
            top = off + self.pi[j]
            strands.append((top, -bottom, lab))
        return normalize(self.n, strands)


def recompose(alpha: Perm, d: MiddleDiagram, beta: Perm) -> ZBrauerDiagram:
    return perm_act(alpha, perm_act(inverse(beta), d.diagram(), "right"), "left")


def _half_perm(n: int, caps: List[Tuple[int, int]], verticals: List[int], f: int) -> Perm:
    # caps given as (left, right) pairs; order by right endpoint (condition (1))
    caps = sorted(caps, key=lambda c: c[1])
    images = []
    for lo, hi in caps:
        images += [lo, hi]
    images += sorted(verticals)
    p = tuple(images)
    if not in_D(p, f):
        raise DiagramError("internal: half permutation not in D_{f,n}")
    return p


def factorize(d: ZBrauerDiagram) -> Tuple[Perm, MiddleDiagram, Perm]:
    n, f = d.n, d.f
    top_caps, bot_caps, verts = [], [], []
    for a, b, lab in d.strands:
        if a > 0 and b > 0:
            top_caps.append((min(a, b), max(a, b)))
        elif a < 0 and b < 0:
            bot_caps.append((min(-a, -b), max(-a, -b)))
        else:
            verts.append((a, b, lab))
    alpha = _half_perm(n, top_caps, [a for a, _, _ in verts], f)
    beta = _half_perm(n, bot_caps, [-b for _, b, _ in verts], f)
    ainv, binv = inverse(alpha), inverse(beta)
    top_labels, bottom_labels = [], []
    for k in range(f):
        top_labels.append(d.label_from(alpha[2 * k]))
        bottom_labels.append(d.label_from(-beta[2 * k]))
    s = n - 2 * f
    pi = [0] * s
    vlabels = [0] * s
    for a, b, lab in verts:
        mid_top = ainv[a - 1]
        mid_bot = binv[-b - 1]
        pi[mid_bot - 2 * f - 1] = mid_top - 2 * f
        vlabels[mid_bot - 2 * f - 1] = lab
    mid = MiddleDiagram(n, f, tuple(top_labels), tuple(bottom_labels), tuple(pi), tuple(vlabels))
    return alpha, mid, beta


def _matchings(vertices: List[int]) -> Iterable[List[Tuple[int, int]]]:
    if not vertices:
        yield []
        return
    a = vertices[0]
    for i in range(1, len(vertices)):
        b = vertices[i]
        rest = vertices[1:i] + vertices[i + 1:]
        for m in _matchings(rest):
            yield [(a, b)] + m


def underlying_diagrams(n: int, s: int | None = None) -> List[FrozenSet[Tuple[int, int]]]:
    verts = list(range(1, n + 1)) + [-i for i in range(1, n + 1)]
    out = []
    for m in _matchings(verts):
        rank = sum(1 for a, b in m if (a > 0) != (b > 0))
        if s is None or rank == s:
            out.append(normalize(n, [(a, b, 0) for a, b in m]).underlying())
    return out


def enumerate_diagrams(n: int, s: int, label_bound: int) -> List[ZBrauerDiagram]:
    if (n - s) % 2 or s < 0 or s > n:
        raise DiagramError(f"n - s must be even and 0 <= s <= n (n={n}, s={s})")
    labels = range(-label_bound, label_bound + 1)
    out = []
    for und in underlying_diagrams(n, s):
        pairs = sorted(und, key=lambda e: vertex_key(e[0], n))
        for labs in product(labels, repeat=len(pairs)):
            out.append(ZBrauerDiagram(n, frozenset((a, b, l) for (a, b), l in zip(pairs, labs))))
    return out


_STRAND = re.compile(r"^\s*(\d+)(~?)\s*->\s*(\d+)(~?)\s*#\s*(-?\d+)\s*$")


def parse_diagram(text: str) -> ZBrauerDiagram:
    parts = [p for p in text.split(";") if p.strip()]
    if not parts or not parts[0].strip().startswith("n="):
        raise DiagramError("diagram text must start with 'n=<size>'")
    n = int(parts[0].strip()[2:])
    raw = []
    for p in parts[1:]:
        m = _STRAND.match(p)
        if not m:
            raise DiagramError(f"cannot parse strand {p!r}")
        a = int(m.group(1)) * (-1 if m.group(2) else 1)
        b = int(m.group(3)) * (-1 if m.group(4) else 1)
        raw.append((a, b, int(m.group(5))))
    return normalize(n, raw)


def diagram_from_json(obj) -> ZBrauerDiagram:
    if isinstance(obj, str):
        obj = json.loads(obj)
    return normalize(int(obj["n"]), obj["strands"])
