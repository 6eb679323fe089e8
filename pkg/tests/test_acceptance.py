"""Acceptance criteria, one test per criterion at its stated bound.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one line per
criterion.  The heavy ones (Poincare reproduction, orbit invariance to
p=200, the prime scan) take a few minutes in total on one core.
"""

import math

from ribbonpoly import verify


def _report(num, name, summary):
    print("criterion %2d pass  %-24s %s" % (num, name, summary))


def test_criterion_01_poincare_reproduction():
    display = verify.check_poincare()
    expected = ("z^12 - 24z^11 + 553z^10 - 6186z^9 + 42664z^8 - 193904z^7"
                " + 595168z^6 - 1238528z^5 + 1718528z^4 - 1518592z^3"
                " + 770816z^2 - 170496z")
    assert display == expected
    _report(1, "poincare reproduction", display)


def test_criterion_02_tau_consistency():
    summary = verify.check_tau_consistency(p_max=50)
    _report(2, "tau consistency", summary)


def test_criterion_03_orbit_invariance():
    summary = verify.check_orbit_invariance(p_max=200)
    _report(3, "orbit invariance", summary)


def test_criterion_04_square_shape():
    summary = verify.check_square_shape(p_max=100)
    _report(4, "square shape", summary)


def test_criterion_05_conjecture_scan():
    summary = verify.check_prime_scan(p_max=200)
    _report(5, "conjecture evidence", summary)


def test_criterion_06_penrose_evaluations():
    summary = verify.check_penrose_evaluations(p_max=8)
    _report(6, "penrose evaluations", summary)


def test_criterion_07_tutte_top_term():
    summary = verify.check_tutte_top_term(p_max=10)
    _report(7, "tutte top term", summary)


def test_criterion_08_q1_characterization():
    summary = verify.check_q1_characterization(p_max=8)
    _report(8, "q=1 characterization", summary)


def test_criterion_09_classification_oracle():
    summary = verify.check_classification_oracle(p_max=8)
    _report(9, "classification oracle", summary)


def test_criterion_10_engine_properties():
    summary = verify.check_engine_properties(n_random=200, max_edges=7)
    _report(10, "engine properties", summary)
