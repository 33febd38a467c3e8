"""The defining relations of the affine BMW and affine Hecke algebras as data.

A relation is a pair of linear combinations of words; a word is a tuple of
letters ``(kind, index, power)`` with kinds ``g, e, y`` (BMW) or ``T, t``
(Hecke, where ``t`` is t_1).  Both sides are written so that every word
with a unit coefficient can be used as a rewrite in either direction.
"""

from __future__ import annotations

from typing import List, NamedTuple, Sequence, Tuple

from .scalars import ONE, QDIFF, QINV, Q, Scalar, delta, rho

Word = Tuple[Tuple[str, int, int], ...]
Expr = Tuple[Tuple[Scalar, Word], ...]


class Relation(NamedTuple):
    name: str
    lhs: Expr
    rhs: Expr


def w(*letters: str) -> Word:
    out = []
    for tok in letters:
        kind, rest = tok[0], tok[1:]
        if "^" in rest:
            idx, p = rest.split("^")
            out.append((kind, int(idx), int(p)))
        else:
            out.append((kind, int(rest) if rest else 1, 1))
    return tuple(out)


def ex(*terms) -> Expr:
    """ex((coeff, word), ...) with ints promoted to Scalars."""
    return tuple((Scalar.const(c) if isinstance(c, int) else c, wd) for c, wd in terms)


def bmw_relations(n: int, max_loop: int = 3) -> List[Relation]:
    rels: List[Relation] = []
    one = ()
    gens = range(1, n)
    for i in gens:
        rels.append(Relation(f"g{i} g{i}^-1 = 1", ex((1, w(f"g{i}", f"g{i}^-1"))), ex((1, one))))
        rels.append(Relation(f"g{i}^-1 g{i} = 1", ex((1, w(f"g{i}^-1", f"g{i}"))), ex((1, one))))
    rels.append(Relation("y1 y1^-1 = 1", ex((1, w("y1", "y1^-1"))), ex((1, one))))
    rels.append(Relation("y1^-1 y1 = 1", ex((1, w("y1^-1", "y1"))), ex((1, one))))
    for i in gens:
        rels.append(Relation(f"e{i}^2 = d0 e{i}", ex((1, w(f"e{i}", f"e{i}"))), ex((delta(0), w(f"e{i}")))))
    for i in gens:
        if i + 1 < n:
            rels.append(Relation(f"braid {i}", ex((1, w(f"g{i}", f"g{i+1}", f"g{i}"))),
                                 ex((1, w(f"g{i+1}", f"g{i}", f"g{i+1}")))))
        for j in gens:
            if j >= i + 2:
                rels.append(Relation(f"g{i} g{j} = g{j} g{i}", ex((1, w(f"g{i}", f"g{j}"))),
                                     ex((1, w(f"g{j}", f"g{i}")))))
    if n >= 2:
        rels.append(Relation("y1 g1 y1 g1 = g1 y1 g1 y1", ex((1, w("y1", "g1", "y1", "g1"))),
                             ex((1, w("g1", "y1", "g1", "y1")))))
    for j in gens:
        if j >= 2:
            rels.append(Relation(f"y1 g{j} = g{j} y1", ex((1, w("y1", f"g{j}"))), ex((1, w(f"g{j}", "y1")))))
    for i in gens:
        for j in gens:
            if abs(i - j) >= 2:
                rels.append(Relation(f"g{i} e{j} = e{j} g{i}", ex((1, w(f"g{i}", f"e{j}"))),
                                     ex((1, w(f"e{j}", f"g{i}")))))
                if i < j:
                    rels.append(Relation(f"e{i} e{j} = e{j} e{i}", ex((1, w(f"e{i}", f"e{j}"))),
                                         ex((1, w(f"e{j}", f"e{i}")))))
        if i >= 2:
            rels.append(Relation(f"y1 e{i} = e{i} y1", ex((1, w("y1", f"e{i}"))), ex((1, w(f"e{i}", "y1")))))
    for i in gens:
        for k in (i - 1, i + 1):
            if 1 <= k < n:
                rels.append(Relation(f"e{i} e{k} e{i} = e{i}", ex((1, w(f"e{i}", f"e{k}", f"e{i}"))),
                                     ex((1, w(f"e{i}")))))
                rels.append(Relation(f"g{i} g{k} e{i} = e{k} e{i}", ex((1, w(f"g{i}", f"g{k}", f"e{i}"))),
                                     ex((1, w(f"e{k}", f"e{i}")))))
                rels.append(Relation(f"e{i} g{k} g{i} = e{i} e{k}", ex((1, w(f"e{i}", f"g{k}", f"g{i}"))),
                                     ex((1, w(f"e{i}", f"e{k}")))))
    if n >= 2:
        for j in range(1, max_loop + 1):
            rels.append(Relation(f"e1 y1^{j} e1 = d{j} e1", ex((1, w("e1", f"y1^{j}", "e1"))),
                                 ex((delta(j), w("e1")))))
    # g - g^-1 = (q^-1 - q)(e - 1)
    for i in gens:
        rels.append(Relation(f"skein {i}", ex((1, w(f"g{i}")), (-1, w(f"g{i}^-1"))),
                             ex((-QDIFF, w(f"e{i}")), (QDIFF, one))))
    for i in gens:
        rels.append(Relation(f"g{i} e{i} = r^-1 e{i}", ex((1, w(f"g{i}", f"e{i}"))), ex((rho(-1), w(f"e{i}")))))
        rels.append(Relation(f"e{i} g{i} = r^-1 e{i}", ex((1, w(f"e{i}", f"g{i}"))), ex((rho(-1), w(f"e{i}")))))
        for k in (i - 1, i + 1):
            if 1 <= k < n:
                rels.append(Relation(f"e{i} g{k} e{i} = r e{i}", ex((1, w(f"e{i}", f"g{k}", f"e{i}"))),
                                     ex((rho(1), w(f"e{i}")))))
    if n >= 2:
        rels.append(Relation("e1 y1 g1 y1 = r e1", ex((1, w("e1", "y1", "g1", "y1"))), ex((rho(1), w("e1")))))
        rels.append(Relation("y1 g1 y1 e1 = r e1", ex((1, w("y1", "g1", "y1", "e1"))), ex((rho(1), w("e1")))))
    return rels


def hecke_relations(n: int) -> List[Relation]:
    rels: List[Relation] = []
    one = ()
    gens = range(1, n)
    for i in gens:
        rels.append(Relation(f"T{i} T{i}^-1 = 1", ex((1, w(f"T{i}", f"T{i}^-1"))), ex((1, one))))
        rels.append(Relation(f"T{i}^-1 T{i} = 1", ex((1, w(f"T{i}^-1", f"T{i}"))), ex((1, one))))
        rels.append(Relation(f"T{i} - T{i}^-1 = q - q^-1", ex((1, w(f"T{i}")), (-1, w(f"T{i}^-1"))),
                             ex((QDIFF, one))))
        if i + 1 < n:
            rels.append(Relation(f"braid {i}", ex((1, w(f"T{i}", f"T{i+1}", f"T{i}"))),
                                 ex((1, w(f"T{i+1}", f"T{i}", f"T{i+1}")))))
        for j in gens:
            if j >= i + 2:
                rels.append(Relation(f"T{i} T{j} = T{j} T{i}", ex((1, w(f"T{i}", f"T{j}"))),
                                     ex((1, w(f"T{j}", f"T{i}")))))
    rels.append(Relation("t1 t1^-1 = 1", ex((1, w("t1", "t1^-1"))), ex((1, one))))
    rels.append(Relation("t1^-1 t1 = 1", ex((1, w("t1^-1", "t1"))), ex((1, one))))
    if n >= 2:
        rels.append(Relation("t1 T1 t1 T1 = T1 t1 T1 t1", ex((1, w("t1", "T1", "t1", "T1"))),
                             ex((1, w("T1", "t1", "T1", "t1")))))
    for j in gens:
        if j >= 2:
            rels.append(Relation(f"t1 T{j} = T{j} t1", ex((1, w("t1", f"T{j}"))), ex((1, w(f"T{j}", "t1")))))
    return rels
