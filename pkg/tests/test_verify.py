import math

import pytest

from parity_descents.perms import ResourceLimit
from parity_descents.poly import parse_poly
from parity_descents.stats import Family
from parity_descents.verify import (EXPECTED, KNOWN_ERRATA, SUITES, VerificationReport,
                                    brute_distribution, brute_tally, eulerian_numbers,
                                    run_identity_suite)


@pytest.mark.parametrize("n, family, expected", [
    (3, Family.R, "4 + 2x"),
    (2, Family.P, "1 + z"),
    (1, Family.Q, "z"),
])
def test_brute_examples(n, family, expected):
    assert brute_distribution(n, family) == parse_poly(expected)


@pytest.mark.parametrize("n", range(1, 9))
def test_brute_totals(n):
    for family in Family:
        assert brute_distribution(n, family).total() == math.factorial(n)


def test_parallel_tally_matches_serial():
    assert brute_tally(7, jobs=3) == brute_tally(7, jobs=1)


def test_brute_cap():
    with pytest.raises(ResourceLimit):
        brute_distribution(12, Family.R)


def test_eulerian():
    assert eulerian_numbers(4) == [1, 11, 11, 1]
    for n in range(1, 9):
        left_even = brute_distribution(n, Family.R)
        left_odd = brute_distribution(n, Family.M)
        plain = [0] * n
        for d, c in brute_tally(n).items():
            plain[d.left_even + d.left_odd] += c
        assert plain == eulerian_numbers(n)
        assert left_even.total() + left_odd.total() == 2 * math.factorial(n)


def test_report_status():
    rep = VerificationReport("x", [1])
    assert rep.status == "pass"
    assert not rep.check("eq", 1, 1, 2)
    assert rep.status == "fail" and len(rep.failures) == 1
    assert rep.to_dict()["records"][0] == {"identity": "eq", "n": 1, "status": "fail",
                                           "left": "1", "right": "2", "note": ""}


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_identity_suite("nope")


def test_exhaustive_suite_respects_cap():
    with pytest.raises(ResourceLimit):
        run_identity_suite("recursion_vs_brute", range(1, 13))


@pytest.mark.parametrize("suite", ["r_eq_p_at_z1", "xi_transfer", "symmetries", "differential_forms"])
def test_examples_pass(suite):
    rep = run_identity_suite(suite, range(1, 10))
    assert rep.status == "pass" and rep.records


def test_printed_p8_flags_two_cells():
    rep = run_identity_suite("paper_table_p8")
    assert rep.status == "pass"
    devs = rep.deviations
    assert len(devs) == 2
    assert {(d.left, d.right) for d in devs} == {("6912", "6192")}
    assert set(KNOWN_ERRATA.values()) == {(6192, 6912)}
    assert all(d.status == EXPECTED and d.note for d in devs)


@pytest.mark.parametrize("suite", sorted(SUITES))
def test_every_suite_passes_small(suite):
    entry = SUITES[suite]
    top = min(entry.default_max, 6) if entry.exhaustive else entry.default_max
    rep = run_identity_suite(suite, range(1, top + 1), brute_max=6)
    assert rep.status == "pass", rep.failures[:3]
    assert rep.records


def test_reports_reproducible():
    a = run_identity_suite("closed_form_vs_recursion", range(1, 20)).to_dict()
    b = run_identity_suite("closed_form_vs_recursion", range(1, 20)).to_dict()
    assert a == b
