import pytest

from abmw.affine_bmw import GenWord, reduce
from abmw.affine_hecke import HeckeElem, reduce_letters
from abmw.bootstrap import Certificate, RuleBook, check_certificate, parse_expr, run_certificates
from abmw.certificates import CATALOG, check_catalog


def test_catalog_passes():
    results = check_catalog()
    assert len(results) == len(CATALOG)
    bad = [(r.name, r.message) for r in results if not r.ok]
    assert not bad


def test_catalog_has_required_rules():
    names = " | ".join(c.lhs + " = " + c.rhs for c in CATALOG)
    assert "e1 y1^-1 e1" in names
    assert sum(1 for c in CATALOG if c.algebra == "hecke" and c.lhs.startswith("t")) >= 4


def _nf(cert, side):
    expr = parse_expr(side)
    if cert.algebra == "bmw":
        total = None
        for wd, c in expr.items():
            term = reduce(GenWord(cert.n, wd)) * c
            total = term if total is None else total + term
        return total
    total = HeckeElem(cert.n)
    for wd, c in expr.items():
        total = total + reduce_letters(cert.n, list(wd)) * c
    return total


@pytest.mark.parametrize("cert", CATALOG, ids=lambda c: c.name[:40])
def test_engine_agrees_with_catalog(cert):
    assert _nf(cert, cert.lhs) == _nf(cert, cert.rhs)


def test_false_certificate_fails():
    # wrong scalar: the true value is r^-2 d1 e1
    bogus = Certificate("bogus", "e1 y1^-1 e1", "r^-1 * d1 * e1",
                        ["r * e1 y1^-1 g1^-1 e1", "r * e1 g1 y1 e1"], "bmw", 2)
    res = check_certificate(bogus, RuleBook.defining("bmw", 2))
    assert not res.ok


def test_chain_without_waypoints_is_rejected():
    # true statement, but not a single rewrite away from the relations
    cert = Certificate("long jump", "e1 y1^-1 e1", "r^-2 * d1 * e1", [], "bmw", 2)
    assert not check_certificate(cert, RuleBook.defining("bmw", 2)).ok


def test_lemmas_feed_later_certificates():
    lemma = CATALOG[0]
    use = Certificate("uses lemma", "t1 T1 T1", "T1 t2 T1 - (q-q^-1) * t2 T1", [], "hecke", 2)
    assert not run_certificates([use])[0].ok
    assert [r.ok for r in run_certificates([lemma, use])] == [True, True]
