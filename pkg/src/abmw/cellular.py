"""Affine cell bases of the affine BMW and affine Hecke algebras, and a checker.

For a rank s and a Hecke cell lambda of the built-in datum on s strands,
the cell elements are

    c_{(alpha,x,u),(beta,y,v)} . b = g_alpha (x y^* (.) t(c_{u,v} b)) g_beta^*

realized by :func:`abmw.affine_bmw.lemma41_elem`.  Index sets are infinite
(cap exponents are arbitrary integers), so every check runs inside a
:class:`Window`: cap exponents in [-L, L], B-monomials of degree <= M.

Coordinates are computed block by block.  A monomial of rank s is the
image of one Hecke monomial tau_pi t^b under a fixed outer datum
(alpha, x, y, beta), so an element of rank s splits into Hecke elements,
one per outer datum, and those are expanded in the Hecke cell datum by
exact linear algebra, one t-degree at a time (every relation is
homogeneous in t).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import product
from typing import Dict, Hashable, List, Mapping, Optional, Sequence, Tuple

from . import lincomb as lc
from .affine_bmw import (BmwElem, CapsHalf, NormalMonomial, b_mul, b_star, gen, lemma41_elem,
                         enumerate_monomials, x_j)
from .affine_hecke import (AffineCellDatum, HeckeElem, builtin_cell_datum, basis_elem, h_basis_window,
                           h_mul, h_star, tau)
from .errors import Unsupported
from .linalg import Echelon, make_field
from .scalars import ONE, Scalar, rho
from .symmgrp import enum_D_fn, enum_shuffles, factor_shuffle

Cell = Tuple[int, str]
BElem = Dict[Tuple[int, ...], object]


@dataclass(frozen=True)
class Window:
    L: int = 1
    M: int = 1

    def __post_init__(self):
        if self.L < 0 or self.M < 0:
            raise ValueError("window bounds must be non-negative")


class CoordsError(ArithmeticError):
    """An element could not be written in the cell basis."""


def hecke_degree(h: HeckeElem) -> int:
    degs = {sum(b) for (_, b) in h.terms}
    if len(degs) > 1:
        raise ValueError("element is not homogeneous in t")
    return degs.pop() if degs else 0


# -- the Hecke layer ------------------------------------------------------------

class HeckeCoords:
    """Coordinates in the built-in affine cell datum of H_s."""

    def __init__(self, datum: AffineCellDatum, field, max_k: int = 12):
        self.datum = datum
        self.F = field
        self.s = datum.n
        self.max_k = max_k
        self._img: Dict = {}
        self._elem: Dict = {}
        self._ech: Dict = {}
        self._gdeg = {lam: self._gen_degrees(lam) for lam in datum.cells}
        self._cdeg = {k: hecke_degree(h) for k, h in datum.elements.items()}

    def _gen_degrees(self, lam: str) -> Tuple[int, ...]:
        alg = self.datum.algebras[lam]
        return tuple(hecke_degree(alg.images(g)) for g in alg.gens)

    def image(self, lam: str, mono) -> HeckeElem:
        key = (lam, mono)
        if key not in self._img:
            self._img[key] = self.datum.algebras[lam].image(mono, self.s)
        return self._img[key]

    def element(self, lam: str, u, v, mono) -> HeckeElem:
        key = (lam, u, v, mono)
        if key not in self._elem:
            self._elem[key] = h_mul(self.datum.cell_element(lam, u, v), self.image(lam, mono))
        return self._elem[key]

    def monos_of_degree(self, lam: str, d: int, k: int) -> List[Tuple[int, ...]]:
        alg = self.datum.algebras[lam]
        gd = self._gdeg[lam]
        ranges = [range(-(k + abs(d)), k + abs(d) + 1) if lau else range(0, k + 1) for lau in alg.laurent]
        out = [m for m in product(*ranges) if sum(e * g for e, g in zip(m, gd)) == d]
        out.sort(key=lambda m: (sum(abs(e) for e in m), m))
        return out

    def echelon(self, d: int, k: int) -> Echelon:
        key = (d, k)
        if key in self._ech:
            return self._ech[key]
        ech = Echelon(self.F)
        for lam in self.datum.cells:
            idx = self.datum.index_sets[lam]
            for u in idx:
                for v in idx:
                    for mono in self.monos_of_degree(lam, d - self._cdeg[(lam, u, v)], k):
                        h = self.element(lam, u, v, mono)
                        ech.add_column((lam, u, v, mono), {kk: self.F.convert(c) for kk, c in h.terms.items()})
        self._ech[key] = ech
        return ech

    def solve(self, terms: Mapping) -> Dict[Tuple[str, object, object], BElem]:
        """terms: {hecke key: field element}.  Raises CoordsError."""
        by_deg: Dict[int, dict] = {}
        for key, c in terms.items():
            by_deg.setdefault(sum(key[1]), {})[key] = c
        out: Dict[Tuple[str, object, object], BElem] = {}
        for d, vec in sorted(by_deg.items()):
            sol = None
            for k in range(0, self.max_k + 1):
                ech = self.echelon(d, k)
                if ech.dependent:
                    raise CoordsError(f"cell elements of degree {d} are dependent: {ech.dependent[0][0]}")
                sol = ech.solve(vec)
                if sol is not None:
                    break
            if sol is None:
                raise CoordsError(f"degree-{d} part is not in the span of the cell basis (k <= {self.max_k})")
            for (lam, u, v, mono), c in sol.items():
                out.setdefault((lam, u, v), {})[mono] = c
        return out


# -- layers: a uniform view of the algebra being checked ---------------------------

class _Layer:
    F = None

    def b_monomials(self, cell: Cell, M: int):
        raise NotImplementedError

    def b_element(self, cell: Cell, b: Mapping) -> dict:
        return b


class HeckeLayer(_Layer):
    """H_s with its built-in datum; index sets are finite so L is ignored."""

    def __init__(self, s: int, field):
        self.n = s
        self.F = field
        self.datum = builtin_cell_datum(s)
        self.hc = HeckeCoords(self.datum, field)
        self.skipped: List[str] = []

    @property
    def name(self) -> str:
        return f"H_{self.n}"

    def cells(self) -> List[Cell]:
        return [(self.n, lam) for lam in self.datum.cells]

    def greater(self, a: Cell, b: Cell) -> bool:
        return self.datum.is_greater(a[1], b[1])

    def index_set(self, cell: Cell, L: int) -> List:
        return list(self.datum.index_sets[cell[1]])

    def b_monomials(self, cell: Cell, M: int):
        return self.datum.algebras[cell[1]].monomials(M)

    def b_text(self, cell: Cell, mono) -> str:
        return self.datum.algebras[cell[1]].mono_text(mono)

    def cell_element(self, cell: Cell, S, T, b: Mapping) -> HeckeElem:
        total: dict = {}
        for mono, c in b.items():
            lc.add_into(total, self.hc.element(cell[1], S, T, mono).terms, c)
        return HeckeElem(self.n, total)

    def coords(self, x: HeckeElem) -> Dict[Cell, Dict[Tuple, BElem]]:
        sol = self.hc.solve({k: self.F.convert(c) for k, c in x.terms.items()})
        out: Dict[Cell, Dict[Tuple, BElem]] = {}
        for (lam, u, v), be in sol.items():
            out.setdefault((self.n, lam), {})[(u, v)] = be
        return out

    def group_key(self, x: HeckeElem):
        return hecke_degree(x)

    def vector(self, x: HeckeElem) -> dict:
        return {k: self.F.convert(c) for k, c in x.terms.items()}

    def mul(self, a, b):
        return h_mul(a, b)

    def star(self, a):
        return h_star(a)

    def generators(self) -> List[Tuple[str, HeckeElem]]:
        s = self.n
        if s == 0:
            return [("1", basis_elem(0))]
        gens = [(f"T{i}", tau(i, s)) for i in range(1, s)]
        gens.append(("t1", basis_elem(s, b=(1,) + (0,) * (s - 1))))
        gens.append(("t1^-1", basis_elem(s, b=(-1,) + (0,) * (s - 1))))
        return gens

    def basis_window(self, s: int, L: int) -> List[HeckeElem]:
        return [basis_elem(self.n, pi, b) for pi, b in h_basis_window(self.n, bound=L)]

    def ranks(self) -> List[int]:
        return [self.n]

    def index_text(self, cell: Cell, idx) -> str:
        return str(idx)


class BmwLayer(_Layer):
    """The affine BMW algebra on n <= 3 strands with the cell basis built from caps halves and the Hecke data."""

    def __init__(self, n: int, field):
        self.n = n
        self.F = field
        self.hc: Dict[int, HeckeCoords] = {}
        self.skipped: List[str] = []
        for s in range(n % 2, n + 1, 2):
            try:
                self.hc[s] = HeckeCoords(builtin_cell_datum(s), field)
            except Unsupported as e:
                self.skipped.append(f"rank {s}: {e}")
        self._cell_cache: Dict = {}

    @property
    def name(self) -> str:
        return f"W_{self.n}"

    def ranks(self) -> List[int]:
        return sorted(self.hc)

    def cells(self) -> List[Cell]:
        return [(s, lam) for s in self.ranks() for lam in self.hc[s].datum.cells]

    def greater(self, a: Cell, b: Cell) -> bool:
        if a[0] != b[0]:
            return a[0] < b[0]
        return self.hc[a[0]].datum.is_greater(a[1], b[1])

    def index_set(self, cell: Cell, L: int) -> List[Tuple]:
        s, lam = cell
        f = (self.n - s) // 2
        caps = [CapsHalf(f, a2, exps) for a2 in enum_D_fn(f, 2 * f)
                for exps in product(range(-L, L + 1), repeat=f)]
        return [(alpha, x, u) for alpha in enum_shuffles(f, s) for x in caps
                for u in self.hc[s].datum.index_sets[lam]]

    def b_monomials(self, cell: Cell, M: int):
        return self.hc[cell[0]].datum.algebras[cell[1]].monomials(M)

    def b_text(self, cell: Cell, mono) -> str:
        return self.hc[cell[0]].datum.algebras[cell[1]].mono_text(mono)

    def _cell_mono(self, cell: Cell, S, T, mono) -> BmwElem:
        key = (cell, S, T, mono)
        if key not in self._cell_cache:
            (alpha, x, u), (beta, y, v) = S, T
            h = self.hc[cell[0]].element(cell[1], u, v, mono)
            self._cell_cache[key] = lemma41_elem(alpha, x, y, h, beta)
        return self._cell_cache[key]

    def cell_element(self, cell: Cell, S, T, b: Mapping) -> BmwElem:
        total: dict = {}
        for mono, c in b.items():
            lc.add_into(total, self._cell_mono(cell, S, T, mono).terms, c)
        return BmwElem(self.n, total)

    @staticmethod
    def outer(m: NormalMonomial):
        f = m.f
        a1, a2 = factor_shuffle(m.alpha, f)
        b1, b2 = factor_shuffle(m.beta, f)
        return (a1, CapsHalf(f, a2[:2 * f], m.a), b1, CapsHalf(f, b2[:2 * f], m.c))

    def blocks(self, x: BmwElem) -> Dict[Tuple, Dict]:
        out: Dict[Tuple, Dict] = {}
        for m, c in x.terms.items():
            out.setdefault((m.rank,) + self.outer(m), {})[(m.pi, m.b)] = c
        return out

    def coords(self, x: BmwElem) -> Dict[Cell, Dict[Tuple, BElem]]:
        out: Dict[Cell, Dict[Tuple, BElem]] = {}
        for (s, a1, xc, b1, yc), terms in self.blocks(x).items():
            if s not in self.hc:
                raise Unsupported(f"no cell datum for rank {s} at n={self.n}")
            sol = self.hc[s].solve({k: self.F.convert(c) for k, c in terms.items()})
            for (lam, u, v), be in sol.items():
                out.setdefault((s, lam), {})[((a1, xc, u), (b1, yc, v))] = be
        return out

    def group_key(self, x: BmwElem):
        keys = {(m.rank,) + self.outer(m) + (sum(m.b),) for m in x.terms}
        if len(keys) != 1:
            raise ValueError("cell element spans several blocks")
        return keys.pop()

    def vector(self, x: BmwElem) -> dict:
        return {m: self.F.convert(c) for m, c in x.terms.items()}

    def mul(self, a, b):
        return b_mul(a, b)

    def star(self, a):
        return b_star(a)

    def generators(self) -> List[Tuple[str, BmwElem]]:
        n = self.n
        gens = []
        for i in range(1, n):
            gens.append((f"g{i}", gen("g", i, n)))
        for i in range(1, n):
            gens.append((f"e{i}", gen("e", i, n)))
        gens.append(("x1", x_j(1, n)))
        gens.append(("x1^-1", gen("y", 1, n, -1) * rho(1)))
        return gens

    def basis_window(self, s: int, L: int) -> List[BmwElem]:
        return [BmwElem(self.n, {m: ONE}) for m in enumerate_monomials(self.n, s, L)]

    def index_text(self, cell: Cell, idx) -> str:
        alpha, x, u = idx
        return f"(alpha={''.join(map(str, alpha))}, a={list(x.exps)}, u={u})"


def make_layer(kind: str, n: int, field):
    if kind == "bmw":
        if n > 3:
            raise Unsupported("the normal-form engine supports n <= 3")
        return BmwLayer(n, field)
    if kind == "hecke":
        return HeckeLayer(n, field)
    raise ValueError(f"unknown algebra {kind!r}")


# -- helpers --------------------------------------------------------------------------

def _belem_mul(F, a: BElem, b: BElem) -> BElem:
    out: BElem = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            v = F.add(out.get(m, F.zero), F.mul(ca, cb))
            if F.is_zero(v):
                out.pop(m, None)
            else:
                out[m] = v
    return out


def _belem_eq(F, a: BElem, b: BElem) -> bool:
    keys = set(a) | set(b)
    return all(F.is_zero(F.sub(a.get(k, F.zero), b.get(k, F.zero))) for k in keys)


def _clean(F, d: Mapping[Tuple, BElem]) -> Dict[Tuple, BElem]:
    out = {}
    for k, be in d.items():
        be = {m: c for m, c in be.items() if not F.is_zero(c)}
        if be:
            out[k] = be
    return out


def b_samples(layer, cell: Cell, M: int, n_random: int, seed: int) -> List[Dict]:
    """B-monomials of degree <= M, then seeded random combinations of them."""
    monos = layer.b_monomials(cell, M)
    out = [{m: ONE} for m in monos]
    rng = random.Random(f"{seed}:{cell}")
    for _ in range(n_random):
        k = min(len(monos), rng.randint(1, 3))
        picks = rng.sample(monos, k)
        out.append({m: Scalar.const(rng.choice([-3, -2, -1, 1, 2, 3])) for m in picks})
    return out


def _report(check: str, layer, cell, window: Window, status: str, cex: List, t0: float, **stats) -> dict:
    return {"check": check, "algebra": layer.name, "cell": None if cell is None else [cell[0], cell[1]],
            "window": {"L": window.L, "M": window.M}, "field": layer.F.name, "status": status,
            "counterexamples": cex[:20], "violations": len(cex),
            "timing": round(time.perf_counter() - t0, 3), **stats}


def _skip_reports(check: str, layer, window: Window) -> List[dict]:
    return [{"check": check, "algebra": layer.name, "cell": None, "window": {"L": window.L, "M": window.M},
             "field": layer.F.name, "status": "skipped", "reason": why, "counterexamples": [],
             "violations": 0, "timing": 0.0} for why in layer.skipped]



# -- axiom (a) ----------------------------------------------------------------------

def check_axiom_a(layer, window: Window) -> List[dict]:
    """Independence of the cell elements in the window, and unique coordinates
    (verified by back-substitution) for every basis monomial in the window."""
    F = layer.F
    reports = []
    for s in layer.ranks():
        t0 = time.perf_counter()
        cex: List = []
        groups: Dict = {}
        ncols = 0
        for cell in [c for c in layer.cells() if c[0] == s]:
            idx = layer.index_set(cell, window.L)
            for S in idx:
                for T in idx:
                    for mono in layer.b_monomials(cell, window.M):
                        x = layer.cell_element(cell, S, T, {mono: ONE})
                        ech = groups.setdefault(layer.group_key(x), Echelon(F))
                        ncols += 1
                        if not ech.add_column((cell, S, T, mono), layer.vector(x)):
                            cex.append({"dependent": str((cell, S, T, mono))})
        nmono = 0
        for m in layer.basis_window(s, window.L):
            nmono += 1
            try:
                co = layer.coords(m)
            except CoordsError as e:
                cex.append({"element": m.to_text(), "error": str(e)})
                continue
            back: dict = {}
            for cell, entries in co.items():
                for (S, T), be in entries.items():
                    for mono, c in be.items():
                        for k, v in layer.vector(layer.cell_element(cell, S, T, {mono: ONE})).items():
                            back[k] = F.add(back.get(k, F.zero), F.mul(c, v))
            target = layer.vector(m)
            if not all(F.is_zero(F.sub(back.get(k, F.zero), target.get(k, F.zero))) for k in set(back) | set(target)):
                cex.append({"element": m.to_text(), "error": "back-substitution mismatch"})
        reports.append(_report("axiom_a", layer, (s, "*"), window, "pass" if not cex else "fail", cex, t0,
                               cell_elements=ncols, basis_monomials=nmono))
    return reports + _skip_reports("axiom_a", layer, window)


# -- axiom (b) ----------------------------------------------------------------------

def _split(layer, x, cell: Cell):
    """(components on `cell`, list of offending components)."""
    F = layer.F
    own, bad = {}, []
    for c2, entries in layer.coords(x).items():
        entries = _clean(F, entries)
        if not entries:
            continue
        if c2 == cell:
            own = entries
        elif not layer.greater(c2, cell):
            bad.append({"cell": list(c2), "entries": len(entries)})
    return own, bad


def check_axiom_b(layer, window: Window, n_random: int = 20, seed: int = 0,
                  generators: Optional[Sequence[str]] = None) -> List[dict]:
    F = layer.F
    gens = [(nm, w) for nm, w in layer.generators() if generators is None or nm in generators]
    reports = []
    for cell in layer.cells():
        t0 = time.perf_counter()
        cex: List = []
        idx = layer.index_set(cell, window.L)
        samples = b_samples(layer, cell, window.M, n_random, seed)
        products = 0
        for gname, w in gens:
            for S in idx:
                r_of_one = None
                for b in samples:
                    funcs = []
                    for T in idx:
                        prod = layer.mul(w, layer.cell_element(cell, S, T, b))
                        products += 1
                        own, bad = _split(layer, prod, cell)
                        if bad:
                            cex.append({"w": gname, "left": layer.index_text(cell, S), "right": layer.index_text(cell, T),
                                        "error": "component outside the cell and the cells above", "detail": bad})
                            continue
                        stray = [k for k in own if k[1] != T]
                        if stray:
                            cex.append({"w": gname, "left": layer.index_text(cell, S), "right": layer.index_text(cell, T),
                                        "error": "right index changed"})
                            continue
                        funcs.append((T, {k[0]: be for k, be in own.items()}))
                    if not funcs:
                        continue
                    ref = funcs[0][1]
                    for T, fn in funcs[1:]:
                        if set(fn) != set(ref) or not all(_belem_eq(F, fn[k], ref[k]) for k in ref):
                            cex.append({"w": gname, "left": layer.index_text(cell, S), "right": layer.index_text(cell, T),
                                        "error": "coefficients depend on the right index"})
                    if b == {tuple(0 for _ in next(iter(b))): ONE} and r_of_one is None:
                        r_of_one = ref
                    elif r_of_one is not None:
                        bf = {m: F.convert(c) for m, c in b.items()}
                        want = {k: _belem_mul(F, be, bf) for k, be in r_of_one.items()}
                        want = {k: v for k, v in want.items() if v}
                        if set(want) != set(ref) or not all(_belem_eq(F, want[k], ref[k]) for k in want):
                            cex.append({"w": gname, "left": layer.index_text(cell, S),
                                        "error": "coefficients are not r(w) * b"})
        reports.append(_report("axiom_b", layer, cell, window, "pass" if not cex else "fail", cex, t0,
                               products=products, generators=[g for g, _ in gens]))
    return reports + _skip_reports("axiom_b", layer, window)


# -- axiom (c) ----------------------------------------------------------------------

def check_axiom_c(layer, window: Window, n_random: int = 20, seed: int = 0) -> List[dict]:
    F = layer.F
    reports = []
    for cell in layer.cells():
        t0 = time.perf_counter()
        cex: List = []
        idx = layer.index_set(cell, window.L)
        samples = b_samples(layer, cell, window.M, n_random, seed)
        count = 0
        for S in idx:
            for T in idx:
                for b in samples:
                    lhs = layer.star(layer.cell_element(cell, S, T, b))
                    rhs = layer.cell_element(cell, T, S, b)  # sigma is the identity
                    count += 1
                    for c2, entries in layer.coords(lhs - rhs).items():
                        if c2 != cell and layer.greater(c2, cell):
                            continue
                        if _clean(F, entries):
                            cex.append({"left": layer.index_text(cell, S), "right": layer.index_text(cell, T),
                                        "b": {layer.b_text(cell, m): str(c) for m, c in b.items()},
                                        "error": f"residual on cell {list(c2)}"})
        reports.append(_report("axiom_c", layer, cell, window, "pass" if not cex else "fail", cex, t0, pairs=count))
    return reports + _skip_reports("axiom_c", layer, window)


# -- cell forms -----------------------------------------------------------------------

@dataclass
class CellForm:
    cell: Cell
    index: List
    values: Dict[Tuple[int, int], BElem]
    problems: List[dict]

    def value(self, i: int, j: int) -> BElem:
        return self.values.get((i, j), {})


def cell_form(layer, cell: Cell, window: Window, extra_pairs: int = 3, seed: int = 0) -> CellForm:
    """phi(T, S) from c_{P,T} c_{S,R} = c_{P,R} phi(T,S) mod the cells above.

    Computed at a base pair (P, R) and checked at ``extra_pairs`` more."""
    F = layer.F
    idx = layer.index_set(cell, window.L)
    unit = {tuple(0 for _ in layer.b_monomials(cell, 0)[0]): ONE}
    rng = random.Random(seed)
    pairs = [(idx[0], idx[0])] + [(rng.choice(idx), rng.choice(idx)) for _ in range(extra_pairs)]
    values: Dict[Tuple[int, int], BElem] = {}
    problems: List[dict] = []
    for i, T in enumerate(idx):
        for j, S in enumerate(idx):
            got = []
            for P, R in pairs:
                prod = layer.mul(layer.cell_element(cell, P, T, unit), layer.cell_element(cell, S, R, unit))
                own, bad = _split(layer, prod, cell)
                others = [k for k in own if k != (P, R)]
                if bad or others:
                    problems.append({"T": layer.index_text(cell, T), "S": layer.index_text(cell, S),
                                     "error": "product leaves the span of c_{P,R} modulo the cells above"})
                got.append(own.get((P, R), {}))
            if any(not _belem_eq(F, g, got[0]) for g in got[1:]):
                problems.append({"T": layer.index_text(cell, T), "S": layer.index_text(cell, S),
                                 "error": "phi depends on the outer indices"})
            if got[0]:
                values[(i, j)] = got[0]
    return CellForm(cell, idx, values, problems)


def form_symmetric(layer, form: CellForm) -> bool:
    """sigma(phi(u, v)) = phi(v, u); sigma is the identity on every built-in B."""
    F = layer.F
    n = len(form.index)
    return all(_belem_eq(F, form.value(i, j), form.value(j, i)) for i in range(n) for j in range(n))


# -- driver ---------------------------------------------------------------------------

def verify(kind: str, n: int, window: Window, field: str = "prime", seed: int = 0, n_random: int = 20,
           axioms: str = "abc", generators: Optional[Sequence[str]] = None, p: Optional[int] = None) -> List[dict]:
    """Run the axiom checks.  ``field='both'`` screens over F_p first and
    repeats exactly only if the screen passes."""
    if field == "both":
        first = verify(kind, n, window, "prime", seed, n_random, axioms, generators, p)
        if any(r["status"] == "fail" for r in first):
            return first
        return first + verify(kind, n, window, "exact", seed, n_random, axioms, generators, p)
    F = make_field(field, seed=seed) if p is None else make_field(field, p=p, seed=seed)
    layer = make_layer(kind, n, F)
    out: List[dict] = []
    if "a" in axioms:
        out += check_axiom_a(layer, window)
    if "b" in axioms:
        out += check_axiom_b(layer, window, n_random, seed, generators)
    if "c" in axioms:
        out += check_axiom_c(layer, window, n_random, seed)
    return out


def all_passed(reports: Sequence[dict]) -> bool:
    return all(r["status"] in ("pass", "skipped") for r in reports)
