"""The catalog of derived rewrite rules used by the normal-form engines.

Each entry is a waypoint chain from the left side to the right side; every
link is one application of a defining relation or of an earlier entry (see
:mod:`abmw.bootstrap`).  In the text ``x_j`` abbreviates
``r^-1 g_{j-1}..g_1 y1 g_1..g_{j-1}`` and ``t_j`` the analogous tau word.
"""

from __future__ import annotations

from typing import List

from .bootstrap import Certificate, CheckResult, run_certificates

CATALOG: List[Certificate] = [
    Certificate('t1 T1 at n=2',
                't1 T1', 'T1 t2 - (q-q^-1) * t2',
                ['T1 T1^-1 t1 T1'], 'hecke', 2),
    Certificate('b^2 = (q+q^-1) b',
                'T1 T1 + 2*q^-1 * T1 + q^-2 * 1', '(q+q^-1) * T1 + (1+q^-2) * 1',
                ['q^-2 + (q^-1 + q) * T1 + T1 T1^-1'], 'hecke', 2),
    Certificate('T1 b = q b',
                'T1 T1 + q^-1 * T1', 'q * T1 + 1 * 1',
                ['q * T1 + T1 T1^-1'], 'hecke', 2),
    Certificate('t1 T1 = T1 t2 - (q-q^-1) * t2',
                't1 T1', 'T1 t2 - (q-q^-1) * t2',
                ['T1 T1^-1 t1 T1'], 'hecke', 3),
    Certificate('t2 T1 = T1 t1 + (q-q^-1) * t2',
                't2 T1', 'T1 t1 + (q-q^-1) * t2',
                ['(-q^-1 + q) * T1 t1 T1 + T1 t1 T1 T1^-1'], 'hecke', 3),
    Certificate('t1^-1 T1 = T1 t2^-1 + (q-q^-1) * t1^-1',
                't1^-1 T1', 'T1 t2^-1 + (q-q^-1) * t1^-1',
                ['(-q^-1 + q) * t1^-1 + t1^-1 T1^-1'], 'hecke', 3),
    Certificate('t2^-1 T1 = T1 t1^-1 - (q-q^-1) * t1^-1',
                't2^-1 T1', 'T1 t1^-1 - (q-q^-1) * t1^-1',
                ['T1^-1 t1^-1'], 'hecke', 3),
    Certificate('t2 T2 = T2 t3 - (q-q^-1) * t3',
                't2 T2', 'T2 t3 - (q-q^-1) * t3',
                ['T2 T2^-1 T1 t1 T1 T2'], 'hecke', 3),
    Certificate('t3 T2 = T2 t2 + (q-q^-1) * t3',
                't3 T2', 'T2 t2 + (q-q^-1) * t3',
                ['(-q^-1 + q) * T2 T1 t1 T1 T2 + T2 T1 t1 T1 T2 T2^-1'], 'hecke', 3),
    Certificate('t2^-1 T2 = T2 t3^-1 + (q-q^-1) * t2^-1',
                't2^-1 T2', 'T2 t3^-1 + (q-q^-1) * t2^-1',
                ['(-q^-1 + q) * T1^-1 t1^-1 T1^-1 + T1^-1 t1^-1 T1^-1 T2^-1'], 'hecke', 3),
    Certificate('t3^-1 T2 = T2 t2^-1 - (q-q^-1) * t2^-1',
                't3^-1 T2', 'T2 t2^-1 - (q-q^-1) * t2^-1',
                ['T2^-1 T1^-1 t1^-1 T1^-1'], 'hecke', 3),
    Certificate('t3 T1 = T1 t3',
                't3 T1', 'T1 t3',
                ['T2 T1 t1 T2 T1 T2', 'T2 T1 T2 t1 T1 T2'], 'hecke', 3),
    Certificate('g1 g1 = 1 + (q-q^-1) * g1 - (q*r^-1-q^-1*r^-1) * e1',
                'g1 g1', '1 + (q-q^-1) * g1 - (q*r^-1-q^-1*r^-1) * e1',
                ['(-q^-1 + q) * g1 + (q^-1 - q) * g1 e1 + g1 g1^-1', '1 + (-q^-1 + q) * g1 + (q^-1 - q) * g1 e1'], 'bmw', 3),
    Certificate('g1^-1 e1 = r * e1',
                'g1^-1 e1', 'r * e1',
                ['(q^-1 - q) * e1 + (-q^-1 + q) * e1 e1 + g1 e1', '(r^-1 + q^-1 - q) * e1 + (-q^-1 + q) * e1 e1'], 'bmw', 3),
    Certificate('e1 g1^-1 = r * e1',
                'e1 g1^-1', 'r * e1',
                ['(q^-1 - q) * e1 + (-q^-1 + q) * e1 e1 + e1 g1', '(r^-1 + q^-1 - q) * e1 + (-q^-1 + q) * e1 e1'], 'bmw', 3),
    Certificate('g2 g2 = 1 + (q-q^-1) * g2 - (q*r^-1-q^-1*r^-1) * e2',
                'g2 g2', '1 + (q-q^-1) * g2 - (q*r^-1-q^-1*r^-1) * e2',
                ['(-q^-1 + q) * g2 + (q^-1 - q) * g2 e2 + g2 g2^-1', '1 + (-q^-1 + q) * g2 + (q^-1 - q) * g2 e2'], 'bmw', 3),
    Certificate('g2^-1 e2 = r * e2',
                'g2^-1 e2', 'r * e2',
                ['(q^-1 - q) * e2 + (-q^-1 + q) * e2 e2 + g2 e2', '(r^-1 + q^-1 - q) * e2 + (-q^-1 + q) * e2 e2'], 'bmw', 3),
    Certificate('e2 g2^-1 = r * e2',
                'e2 g2^-1', 'r * e2',
                ['(q^-1 - q) * e2 + (-q^-1 + q) * e2 e2 + e2 g2', '(r^-1 + q^-1 - q) * e2 + (-q^-1 + q) * e2 e2'], 'bmw', 3),
    Certificate('e1 x1 x2 = r^-2 * e1',
                'e1 x1 x2', 'r^-2 * e1',
                ['r^-1 * e1 g1'], 'bmw', 3),
    Certificate('x1 x2 e1 = r^-2 * e1',
                'x1 x2 e1', 'r^-2 * e1',
                ['r^-3 * y1 g1 y1 e1'], 'bmw', 3),
    Certificate('x2 e1 = r^-2 * x1^-1 e1',
                'x2 e1', 'r^-2 * x1^-1 e1',
                ['r^-1 * y1^-1 y1 g1 y1 g1 e1'], 'bmw', 3),
    Certificate('e1 x1^-1 = r * e1 x1 g1',
                'e1 x1^-1', 'r * e1 x1 g1',
                ['e1 y1 g1 y1 y1^-1'], 'bmw', 3),
    Certificate('x1^-1 e1 = r * g1 x1 e1',
                'x1^-1 e1', 'r * g1 x1 e1',
                ['y1^-1 y1 g1 y1 e1'], 'bmw', 3),
    Certificate('x2^-1 e1 = r^2 * x1 e1',
                'x2^-1 e1', 'r^2 * x1 e1',
                ['r^2 * g1^-1 y1^-1 e1', 'r * g1^-1 y1^-1 y1 g1 y1 e1', 'r * g1^-1 g1 y1 e1'], 'bmw', 3),
    Certificate('e1 y1^-1 e1 = r^-2*d1 * e1',
                'e1 y1^-1 e1', 'r^-2*d1 * e1',
                ['r^-1 * e1 y1 g1 e1', 'r^-2 * e1 y1 e1'], 'bmw', 3),
    Certificate('e1 g2 = e1 e2 g1^-1',
                'e1 g2', 'e1 e2 g1^-1',
                ['e1 g2 g1 g1^-1'], 'bmw', 3),
    Certificate('e2 g1 = e2 e1 g2^-1',
                'e2 g1', 'e2 e1 g2^-1',
                ['e2 g1 g2 g2^-1'], 'bmw', 3),
    Certificate('g2 e1 = g1^-1 e2 e1',
                'g2 e1', 'g1^-1 e2 e1',
                ['g1^-1 g1 g2 e1'], 'bmw', 3),
    Certificate('g1 e2 = g2^-1 e1 e2',
                'g1 e2', 'g2^-1 e1 e2',
                ['g2^-1 g2 g1 e2'], 'bmw', 3),
    Certificate('y1 x3 = x3 y1',
                'y1 x3', 'x3 y1',
                ['r^-1 * g2 y1 g1 y1 g1 g2', 'r^-1 * g2 g1 y1 g1 y1 g2'], 'bmw', 3),
    Certificate('g1 x3 = x3 g1',
                'g1 x3', 'x3 g1',
                ['r^-1 * g2 g1 g2 y1 g1 g2', 'r^-1 * g2 g1 y1 g2 g1 g2'], 'bmw', 3),
    Certificate('e1 x3 = x3 e1',
                'e1 x3', 'x3 e1',
                ['r^-1 * e1 e2 y1 g1 g2', 'r^-1 * e1 y1 e2 g1 g2', 'r^-1 * e1 y1 e2 e1', 'r^-1 * e1 e2 y1 e1', 'r^-1 * g2 g1 e2 y1 e1', 'r^-1 * g2 g1 y1 e2 e1'], 'bmw', 3),
    Certificate('e2 x1 e1 = e2 e1 x3',
                'e2 x1 e1', 'e2 e1 x3',
                ['r^-1 * y1 e2 e1', 'r^-1 * y1 e2 g1 g2', 'r^-1 * e2 y1 g1 g2', 'r^-1 * e2 e1 e2 y1 g1 g2'], 'bmw', 3),
    Certificate('g1 x1 = x2 g1^-1',
                'g1 x1', 'x2 g1^-1',
                [], 'bmw', 3),
    Certificate('x1 g1 = g1^-1 x2',
                'x1 g1', 'g1^-1 x2',
                [], 'bmw', 3),
    Certificate('x2^-1 g1 = g1^-1 x1^-1',
                'x2^-1 g1', 'g1^-1 x1^-1',
                [], 'bmw', 3),
    Certificate('x2 g1 = g1 x1 + (q-q^-1) * x2 - ((q-q^-1)*r^-1) * g1 x1 e1',
                'x2 g1', 'g1 x1 + (q-q^-1) * x2 - ((q-q^-1)*r^-1) * g1 x1 e1',
                [], 'bmw', 3),
    Certificate('x1^-1 g1 = g1 x2^-1 + (q-q^-1) * x1^-1 - (q-q^-1) * x1^-1 e1',
                'x1^-1 g1', 'g1 x2^-1 + (q-q^-1) * x1^-1 - (q-q^-1) * x1^-1 e1',
                ['(-r*q^-1 + r*q) * y1^-1 + (r*q^-1 - r*q) * y1^-1 e1 + r * y1^-1 g1^-1'], 'bmw', 3),
    Certificate('g2 x2 = x3 g2^-1',
                'g2 x2', 'x3 g2^-1',
                [], 'bmw', 3),
    Certificate('x2 g2 = g2^-1 x3',
                'x2 g2', 'g2^-1 x3',
                [], 'bmw', 3),
    Certificate('x3^-1 g2 = g2^-1 x2^-1',
                'x3^-1 g2', 'g2^-1 x2^-1',
                [], 'bmw', 3),
    Certificate('x3 g2 = g2 x2 + (q-q^-1) * x3 - ((q-q^-1)*r^-1) * g2 x2 e2',
                'x3 g2', 'g2 x2 + (q-q^-1) * x3 - ((q-q^-1)*r^-1) * g2 x2 e2',
                [], 'bmw', 3),
    Certificate('x2^-1 g2 = g2 x3^-1 + (q-q^-1) * x2^-1 - (q-q^-1) * x2^-1 e2',
                'x2^-1 g2', 'g2 x3^-1 + (q-q^-1) * x2^-1 - (q-q^-1) * x2^-1 e2',
                ['(-r*q^-1 + r*q) * g1^-1 y1^-1 g1^-1 + (r*q^-1 - r*q) * g1^-1 y1^-1 g1^-1 e2 + r * g1^-1 y1^-1 g1^-1 g2^-1'], 'bmw', 3),
]


def check_catalog() -> List[CheckResult]:
    return run_certificates(CATALOG)
