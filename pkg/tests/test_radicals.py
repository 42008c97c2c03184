import pytest

from ringlab.constructions import matrix_element
from ringlab.errors import CapExceeded, OracleDisagreement
from ringlab.ideals import Ideal, is_ideal, is_nilpotent_ideal
from ringlab.radicals import (
    jacobson_radical,
    nilpotents,
    prime_radical,
    prime_radical_fixpoint,
    prime_radical_ideal_nilpotency,
    prime_radical_prime_intersection,
    radical_profile,
    square_zero,
)
import ringlab.radicals as radicals

import oracles

CORPUS_SMALL = [
    "Z2", "Z4", "Z6", "Z12", "GF(2,x^2+x+1)", "Quot(2,x^3)", "T2(Z2)", "T3(Z2)",
    "S2(Z2)", "V2(Z4)", "V3(Z2)", "M2(Z2)", "Z4 x Z2", "pullback(Z4)",
]


def test_nilpotent_examples(ring):
    assert nilpotents(ring("Z12")).indices() == [0, 6]
    assert nilpotents(ring("Z6")).indices() == [0]


def test_m2_nilpotents_by_brute_force(constructed):
    cr = constructed("M2(Z2)")
    R = cr.ring
    found = nilpotents(R)
    assert set(found.indices()) == oracles.nilpotent_elements(R)
    # a nilpotent 2x2 matrix over a field squares to zero; there are q^(n(n-1)) = 4
    expected = {
        matrix_element(cr, m)
        for m in ([[0, 0], [0, 0]], [[0, 1], [0, 0]], [[0, 0], [1, 0]], [[1, 1], [1, 1]])
    }
    assert set(found.indices()) == expected
    assert square_zero(R) == found


def test_fixpoint_examples(ring, constructed):
    assert prime_radical_fixpoint(ring("Z12")).indices() == [0, 6]
    assert prime_radical_fixpoint(ring("M2(Z2)")).indices() == [0]
    cr = constructed("S4(Z2)")
    P = prime_radical_fixpoint(cr.ring)
    assert len(P) == 64
    # free parameter 0 is the shared diagonal entry
    assert P.indices() == [i for i, c in enumerate(cr.coords) if c[0] == 0]


def test_rar_examples(ring, constructed):
    T2 = constructed("T2(Z2)")
    e12 = matrix_element(T2, [[0, 1], [0, 0]])
    assert prime_radical_ideal_nilpotency(T2.ring).indices() == [0, e12]
    assert prime_radical_ideal_nilpotency(ring("Z12")).indices() == [0, 6]
    V3 = constructed("V3(Z2)")
    P = prime_radical_ideal_nilpotency(V3.ring)
    assert P.indices() == [i for i, c in enumerate(V3.coords) if c[0] == 0]
    assert len(P) == 4


def test_prime_intersection_examples(ring):
    assert prime_radical_prime_intersection(ring("Z12")).indices() == [0, 6]
    assert prime_radical_prime_intersection(ring("Z6")).indices() == [0]
    assert prime_radical_prime_intersection(ring("M2(Z2)")).indices() == [0]


def test_prime_intersection_respects_cap(ring, monkeypatch):
    monkeypatch.setenv("RINGLAB_ENUM_CAP", "16")
    with pytest.raises(CapExceeded):
        prime_radical_prime_intersection(ring("T3(Z2)"))


def test_jacobson_examples(ring, constructed):
    assert jacobson_radical(ring("Z12")).indices() == [0, 6]
    T2 = constructed("T2(Z2)")
    assert jacobson_radical(T2.ring).indices() == [0, matrix_element(T2, [[0, 1], [0, 0]])]
    assert jacobson_radical(ring("M2(Z2)")).indices() == [0]


def test_jacobson_left_and_right_agree(ring):
    for expr in ("T3(Z2)", "S4(Z2)", "M2(Z2)", "V2(Z4)"):
        R = ring(expr)
        U = oracles.units_set(R)
        right = [a for a in R.elements if all(R.minus(R.one, R.times(a, r)) in U for r in R.elements)]
        assert jacobson_radical(R).indices() == right


@pytest.mark.parametrize("expr", CORPUS_SMALL)
def test_three_algorithms_and_cycle_oracle_agree(ring, expr):
    R = ring(expr)
    a = prime_radical_fixpoint(R)
    b = prime_radical_ideal_nilpotency(R)
    c = prime_radical_prime_intersection(R)
    assert a == b == c
    assert set(a.indices()) == oracles.strongly_nilpotent_by_cycles(R)


@pytest.mark.parametrize("expr", CORPUS_SMALL + ["S4(Z2)"])
def test_profile_invariants(ring, expr):
    R = ring(expr)
    prof = radical_profile(R)
    assert prof.methods_agreed
    assert prof.P == prof.J
    assert prof.P.issubset(prof.N)
    assert prof.N2.issubset(prof.N)
    I = Ideal(R, prof.P.members, "two-sided")
    assert is_ideal(R, I, "two-sided")
    assert is_nilpotent_ideal(R, I)[0]
    assert set(prof.N.indices()) == oracles.nilpotent_elements(R)


def test_profile_examples(ring):
    prof = radical_profile(ring("Z12"))
    assert prof.P.indices() == prof.N.indices() == prof.J.indices() == [0, 6]
    js = prof.to_json()
    assert js["methodsAgreed"] is True
    assert sorted(js["perMethod"]) == ["fixpoint", "primes", "rar"]
    S4 = radical_profile(ring("S4(Z2)"))
    assert len(S4.P) == 64 and S4.P == S4.N == S4.J and S4.methods_agreed
    field = radical_profile(ring("GF(2,x^2+x+1)"))
    assert field.P.indices() == field.N.indices() == field.J.indices() == [0]


def test_single_method_does_not_claim_agreement(ring):
    prof = radical_profile(ring("Z6"), methods=("fixpoint",))
    assert not prof.methods_agreed


def test_disagreement_is_loud(ring, monkeypatch):
    R = ring("Z4")

    def broken(R):
        return prime_radical_fixpoint(R).__class__.from_indices(R, [0])

    monkeypatch.setitem(radicals._ALGORITHMS, "rar", broken)
    with pytest.raises(OracleDisagreement):
        radical_profile(R, methods=("fixpoint", "rar"))


def test_prime_radical_dispatch(ring):
    R = ring("Z12")
    for m in radicals.METHODS:
        assert prime_radical(R, m).indices() == [0, 6]
    with pytest.raises(ValueError):
        prime_radical(R, "bogus")
