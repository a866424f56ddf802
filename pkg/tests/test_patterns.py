import itertools

import pytest
from hypothesis import given, strategies as st

from parity_descents.patterns import (InvalidPattern, ParityPattern, avoids_consecutive,
                                      count_consecutive_matches, format_pattern,
                                      is_parity_k_tau_avoiding_classical, iter_consecutive_avoiders,
                                      parity_k_pattern, parse_pattern)
from parity_descents.perms import all_perms
from parity_descents.stats import DescentKind, parity_descent_count
from strategies import perms

S = (2, 5, 3, 1, 4)


@pytest.mark.parametrize("text, expected", [("1o2e", 1), ("1o2o", 0), ("2e1*", 0), ("2*1o", 2)])
def test_parity_two_letter_examples(text, expected):
    assert count_consecutive_matches(S, parse_pattern(text)) == expected


def test_parity_k_matches():
    assert count_consecutive_matches((3, 2, 4, 5, 1), parity_k_pattern((2, 1), 2)) == 0
    assert count_consecutive_matches((3, 2, 4, 5, 1), parse_pattern("2%2:3 1%1:3")) == 1
    assert parse_pattern("2%2:3 1%1:3") == parity_k_pattern((2, 1), 3)


def test_long_pattern_is_zero_not_error():
    assert count_consecutive_matches((1, 2), parse_pattern("1*2*3*")) == 0


def test_length_one_pattern():
    assert count_consecutive_matches(S, parse_pattern("1e")) == 2
    assert count_consecutive_matches(S, parse_pattern("1*")) == 5


def test_avoids_consecutive_examples():
    def1 = [parse_pattern("1e2*"), parse_pattern("2o1*")]
    assert avoids_consecutive((2, 1, 3), def1)
    assert not avoids_consecutive((1, 2, 3), def1)
    assert avoids_consecutive(S, [])


def test_classical_avoidance_examples():
    # the subsequence 2 1 (even, odd) is a non-consecutive occurrence, even
    # though no consecutive window is a parity-2 match
    assert not is_parity_k_tau_avoiding_classical((3, 2, 4, 5, 1), (2, 1), 2)
    assert count_consecutive_matches((3, 2, 4, 5, 1), parity_k_pattern((2, 1), 2)) == 0
    assert is_parity_k_tau_avoiding_classical((1, 3, 5, 2, 4), (2, 1), 2)
    assert not is_parity_k_tau_avoiding_classical((3, 2, 4, 5, 1), (2, 1), 1)
    for k in (1, 2, 3, 5):
        assert is_parity_k_tau_avoiding_classical((1, 2, 3, 4, 5), (2, 1), k)


@pytest.mark.parametrize("bad", ["", "1x", "1e1e", "2e3o", "1e2%1:3", "1%3:3", "1%0:1", "12"])
def test_parse_rejects(bad):
    with pytest.raises(InvalidPattern):
        parse_pattern(bad)


def test_empty_pattern_object():
    with pytest.raises(InvalidPattern):
        ParityPattern((), ())
    with pytest.raises(InvalidPattern):
        parity_k_pattern((2, 1), 0)


@pytest.mark.parametrize("text", ["2e1*", "1o2e3*", "2%2:3 1%1:3", "1*"])
def test_format_roundtrip(text):
    assert format_pattern(parse_pattern(text)) == text


KIND_PATTERNS = {
    "2e1*": DescentKind.LEFT_EVEN,
    "2o1*": DescentKind.LEFT_ODD,
    "2*1e": DescentKind.RIGHT_EVEN,
    "2*1o": DescentKind.RIGHT_ODD,
}


@pytest.mark.parametrize("n", range(1, 9))
def test_two_letter_patterns_are_descent_kinds(n):
    pats = {parse_pattern(s): kind for s, kind in KIND_PATTERNS.items()}
    plain = parity_k_pattern((2, 1), 1)
    for p in all_perms(n):
        assert count_consecutive_matches(p, plain) == parity_descent_count(p, DescentKind.PLAIN)
        for pat, kind in pats.items():
            assert count_consecutive_matches(p, pat) == parity_descent_count(p, kind)


@given(perms(max_n=7), st.permutations([1, 2, 3]), st.integers(2, 5))
def test_any_pattern_ignores_modulus(p, tau, k):
    tau = tuple(tau)
    bare = ParityPattern(tau, (None,) * 3)
    with_mod = ParityPattern(tau, (None,) * 3, k)
    assert count_consecutive_matches(p, bare) == count_consecutive_matches(p, with_mod)


@pytest.mark.parametrize("text", ["1e2*", "2*1e", "1o3e2*", "2%1:3 1*"])
def test_pruned_avoiders_match_filter(text):
    pats = [parse_pattern(text)]
    for n in range(1, 7):
        assert list(iter_consecutive_avoiders(n, pats)) == [p for p in all_perms(n) if avoids_consecutive(p, pats)]


@given(perms(max_n=6), st.sampled_from([(2, 1), (1, 3, 2)]), st.integers(1, 3))
def test_classical_avoidance_by_definition(p, tau, k):
    m = len(tau)
    hit = False
    for idx in itertools.combinations(range(len(p)), m):
        sub = [p[i] for i in idx]
        order = all((sub[a] < sub[b]) == (tau[a] < tau[b]) for a in range(m) for b in range(m))
        if order and all((sub[j] - tau[j]) % k == 0 for j in range(m)):
            hit = True
            break
    assert is_parity_k_tau_avoiding_classical(p, tau, k) == (not hit)
