import itertools
import warnings

import numpy as np
import pytest

from betwixt.dfa import compile_min_dfa
from betwixt.monoid import (definability_report, fo2suc_definable, from_table, is_aperiodic,
                            is_in_DA, is_in_MeDA, j_leq, local_submonoid, omega_power,
                            syntactic_monoid)
from betwixt.words import Alphabet, enumerate_words

FIRST_EQ_LAST = "a+b+a(a+b)*a+b(a+b)*b"


def monoid_of(text, alphabet="ab"):
    return syntactic_monoid(compile_min_dfa(text, Alphabet.of(alphabet)))


@pytest.fixture
def ab_star():
    return monoid_of("(ab)*")


def test_ab_star_elements(ab_star):
    m = ab_star
    assert m.size == 6
    a, b = m.letter_map["a"], m.letter_map["b"]
    zero = m.mul(a, a)
    assert m.mul(b, b) == zero
    assert m.mul(a, b, a) == a and m.mul(b, a, b) == b
    assert all(m.mul(zero, x) == zero == m.mul(x, zero) for x in range(m.size))
    assert m.is_associative()


def test_syntactic_monoid_recognizes(ab_star):
    d = compile_min_dfa("(ab)*", Alphabet("ab"))
    accepted = {ab_star.image(w) for w in enumerate_words(Alphabet("ab"), 6) if d.accepts(w)}
    rejected = {ab_star.image(w) for w in enumerate_words(Alphabet("ab"), 6) if not d.accepts(w)}
    assert accepted.isdisjoint(rejected)


def test_first_equals_last():
    m = monoid_of(FIRST_EQ_LAST)
    assert m.size == 5
    assert len(m.idempotents()) == 5
    assert is_in_DA(m)


def test_trivial_monoid():
    m = monoid_of("(a+b)*")
    assert m.size == 1
    assert is_aperiodic(m) and is_in_DA(m) and is_in_MeDA(m)
    loc = local_submonoid(m, m.identity)
    assert loc.local_elements == (m.identity,)


def test_omega_power(ab_star):
    m = ab_star
    a, b = m.letter_map["a"], m.letter_map["b"]
    assert omega_power(m, a) == m.mul(a, a)
    ab = m.mul(a, b)
    assert omega_power(m, ab) == ab
    assert omega_power(m, m.identity) == m.identity


def test_omega_power_is_idempotent_power():
    m = monoid_of("(a(ab)*b)*")
    for x in range(m.size):
        e = omega_power(m, x)
        assert m.mul(e, e) == e
        assert any(m.mul(*([x] * k)) == e for k in range(1, m.size + 1))


def test_j_order(ab_star):
    m = ab_star
    ab = m.mul(m.letter_map["a"], m.letter_map["b"])
    assert j_leq(m, ab, m.identity)
    assert not j_leq(m, m.identity, ab)
    assert all(j_leq(m, x, x) for x in range(m.size))


def test_j_order_matches_brute_force():
    m = monoid_of("(a+b)*bab^+ab(a+b)*")
    for x, y in itertools.product(range(m.size), repeat=2):
        brute = any(m.mul(s, y, t) == x for s in range(m.size) for t in range(m.size))
        assert j_leq(m, x, y) == brute


def test_local_submonoid(ab_star):
    m = ab_star
    ab = m.mul(m.letter_map["a"], m.letter_map["b"])
    zero = m.mul(m.letter_map["a"], m.letter_map["a"])
    loc = local_submonoid(m, ab)
    assert set(loc.me_elements) == set(range(m.size))
    assert set(loc.local_elements) == {ab, zero}
    one = local_submonoid(m, m.identity)
    assert m.identity in one.local_elements
    with pytest.raises(ValueError):
        local_submonoid(m, m.letter_map["a"])


def test_aperiodicity():
    assert is_aperiodic(monoid_of("(a(ab)*b)*"))
    assert not is_aperiodic(monoid_of("(aa)*", "a"))


def test_da_and_meda():
    assert not is_in_DA(monoid_of("(ab)*"))
    assert is_in_MeDA(monoid_of("(ab)*"))
    assert not is_in_MeDA(monoid_of("(a(ab)*b)*"))
    assert is_in_MeDA(monoid_of("(a+b)*bab^+ab(a+b)*"))


def test_da_implies_meda():
    for text in [FIRST_EQ_LAST, "a(a+b)*b", "(a+b)*a(a+b)*", "b*ab*"]:
        m = monoid_of(text)
        assert is_in_DA(m)
        assert is_in_MeDA(m)


def test_da_identity_by_brute_force():
    for text in ["(ab)*", FIRST_EQ_LAST, "(a(ab)*b)*", "a^+b^+", "(a+b)*bab^+ab(a+b)*"]:
        m = monoid_of(text)
        brute = True
        for x, y in itertools.product(range(m.size), repeat=2):
            e = omega_power(m, m.mul(x, y))
            if m.mul(e, x, e) != e:
                brute = False
        assert is_in_DA(m) == brute


def test_fo2suc():
    assert not fo2suc_definable(compile_min_dfa("(a+b)*bab^+ab(a+b)*"))
    assert fo2suc_definable(compile_min_dfa("(ab)*"))
    assert fo2suc_definable(compile_min_dfa("(a+b)*", Alphabet("ab")))


def test_reports():
    r = definability_report("(a(ab)*b)*").to_json()
    assert r["aperiodic"] and not r["in_MeDA"]
    assert r["verdicts"]["FO"] == "yes" and r["verdicts"]["FO2bet"] == "no"
    r = definability_report("(ab)*").to_json()
    assert not r["in_DA"] and r["in_MeDA"]
    assert r["verdicts"]["FO2"] == "no" and r["verdicts"]["FO2bet"] == "yes"
    r = definability_report("(a+b+c)*", Alphabet("abc")).to_json()
    assert r["verdicts"]["FO2bet"] == "yes (necessary condition holds; sufficiency proven only for |A|=2)"
    assert all(r[k] for k in ("aperiodic", "in_DA", "in_MeDA", "fo2suc"))


def test_report_is_deterministic():
    a = definability_report("(a+b)*bab^+ab(a+b)*").to_json()
    b = definability_report("(a+b)*bab^+ab(a+b)*").to_json()
    assert a == b


def test_from_table_validates():
    m = from_table(np.array([[0, 1], [1, 0]]))
    assert not is_aperiodic(m)
    with pytest.raises(ValueError):
        from_table(np.array([[0, 1], [1, 1], [0, 0]]))


def test_size_cap_warning(monkeypatch):
    monkeypatch.setenv("BETWIXT_MAX_MONOID", "3")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        monoid_of("(ab)*")
    assert any("monoid" in str(w.message).lower() for w in caught)
