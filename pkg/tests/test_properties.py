import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringlab.constructions import matrix_element
from ringlab.errors import CapExceeded
from ringlab.properties import (
    CHECKERS,
    all_primes_maximal,
    check_all,
    is_2_primal,
    is_armendariz_bounded,
    is_central_symmetric,
    is_generalized_weakly_symmetric,
    is_left_quasi_duo,
    is_p_semicommutative,
    is_p_symmetric,
    is_p_symmetric_poly_bounded,
    is_symmetric,
    is_weakly_reversible,
    n2_in_p,
    witness_violates,
)
from ringlab.radicals import radical_profile
from ringlab.ring import center

import oracles


def e(cr, n, *cells):
    """Sum of matrix units e_ij (1-based) in a matrix-family ring."""
    m = [[0] * n for _ in range(n)]
    for i, j in cells:
        m[i - 1][j - 1] = 1
    return matrix_element(cr, m)


# --- examples ---------------------------------------------------------------


def test_symmetric_examples(ring, constructed):
    assert is_symmetric(ring("Z12")).verdict
    S4 = constructed("S4(Z2)")
    rep = is_symmetric(S4.ring)
    assert not rep.verdict
    A, B = e(S4, 4, (2, 3)), e(S4, 4, (1, 2))
    assert witness_violates(S4.ring, "symmetric", (A, B, S4.ring.one))

    T2 = constructed("T2(Z2)")
    rep = is_symmetric(T2.ring)
    assert not rep.verdict
    e11, e12 = e(T2, 2, (1, 1)), e(T2, 2, (1, 2))
    assert witness_violates(T2.ring, "symmetric", (e12, e11, T2.ring.one))
    # the scanner returns the least triple, which need not be the one above
    assert rep.witness == oracles.symmetric_witness(T2.ring, lambda x: x == 0)


def test_p_symmetric_examples(ring, constructed):
    assert is_p_symmetric(ring("S4(Z2)")).verdict
    assert is_p_symmetric(ring("GF(2,x^2+x+1)")).verdict
    M2 = constructed("M2(Z2)")
    rep = is_p_symmetric(M2.ring)
    assert not rep.verdict
    A, B, C = e(M2, 2, (2, 1)), e(M2, 2, (1, 2)), e(M2, 2, (1, 1), (1, 2))
    R = M2.ring
    assert R.product(A, B, C) == 0
    bac = R.product(B, A, C)
    assert R.times(bac, bac) == bac != 0  # idempotent, hence not nilpotent
    assert witness_violates(R, "p_symmetric", (A, B, C))
    assert witness_violates(R, "generalized_weakly_symmetric", (A, B, C))
    assert rep.decoded is not None and all(s.startswith("[[") for s in rep.decoded)


def test_central_symmetric_examples(ring, constructed):
    assert is_central_symmetric(ring("Z12")).verdict
    assert not is_central_symmetric(ring("T2(Z2)")).verdict
    S4 = constructed("S4(Z2)")
    R = S4.ring
    assert not is_central_symmetric(R).verdict
    A, B = e(S4, 4, (2, 3)), e(S4, 4, (1, 2))
    assert R.times(A, B) == 0
    assert R.times(B, A) not in center(R)
    assert witness_violates(R, "central_symmetric", (A, B, R.one))


def test_weak_property_examples(ring):
    assert not is_generalized_weakly_symmetric(ring("M2(Z2)")).verdict
    assert is_generalized_weakly_symmetric(ring("GF(2,x^2+x+1)")).verdict
    assert is_p_semicommutative(ring("S4(Z2)")).verdict
    assert not is_p_semicommutative(ring("M2(Z2)")).verdict
    for n in (2, 4, 6, 12):
        assert is_p_semicommutative(ring(f"Z{n}")).verdict
    assert is_weakly_reversible(ring("Z4")).verdict
    rep = is_weakly_reversible(ring("M2(Z2)"))
    assert not rep.verdict and len(rep.witness) == 4


def test_two_primal_examples(ring):
    rep = is_2_primal(ring("T3(Z2)"))
    assert rep.verdict and all(rep.detail["forms"].values())
    rep = is_2_primal(ring("M2(Z2)"))
    assert not rep.verdict and not any(rep.detail["forms"].values())
    assert is_2_primal(ring("Z6")).verdict


def test_lattice_property_examples(ring):
    assert is_left_quasi_duo(ring("Z12")).verdict
    assert is_left_quasi_duo(ring("T2(Z2)")).verdict
    rep = is_left_quasi_duo(ring("M2(Z2)"))
    assert not rep.verdict
    R = ring("M2(Z2)")
    m, r = rep.witness
    assert R.times(m, r) not in rep.detail["ideal"]
    for expr in ("Z12", "M2(Z2)", "Z4"):
        assert all_primes_maximal(ring(expr)).verdict
    # in T2(Z2) the prime ideals are the two maximal ones
    assert all_primes_maximal(ring("T2(Z2)")).verdict


def test_polynomial_examples(ring):
    assert is_armendariz_bounded(ring("Z4"), 2).verdict
    for d in (1, 2, 3):
        assert is_armendariz_bounded(ring("Z2"), d).verdict
    rep = is_armendariz_bounded(ring("T2(Z2)"), 1)
    assert not rep.verdict
    assert witness_violates(ring("T2(Z2)"), "armendariz_d1", rep.witness)
    assert is_p_symmetric_poly_bounded(ring("Z4"), 1).verdict
    assert is_p_symmetric_poly_bounded(ring("Z2"), 2).verdict
    assert is_p_symmetric_poly_bounded(ring("V2(Z2)"), 1).verdict


def test_polynomial_budget(ring, monkeypatch):
    monkeypatch.setenv("RINGLAB_POLY_BUDGET", "1000")
    with pytest.raises(CapExceeded):
        is_p_symmetric_poly_bounded(ring("Z4"), 1)
    rep = [r for r in check_all(ring("Z4")) if r["property"] == "p_symmetric_poly_d1"][0]
    assert rep["verdict"] is None and "skipped" in rep


def test_armendariz_witness_is_least(ring):
    R = ring("T2(Z2)")
    polys = list(itertools.product(R.elements, repeat=2))
    expected = None
    for f in polys:
        for g in polys:
            if witness_violates(R, "armendariz_d1", f + g):
                expected = f + g
                break
        if expected:
            break
    assert is_armendariz_bounded(R, 1).witness == expected


# --- least witnesses against brute force -----------------------------------

SMALL = ["Z4", "Z12", "T2(Z2)", "M2(Z2)", "S2(Z2)", "V2(Z4)", "Z4 x Z2", "pullback(Z4)", "T2(Z3)"]


def _brute(R, prop):
    prof = radical_profile(R)
    P, N = set(prof.P.indices()), set(prof.N.indices())
    Z = oracles.center_set(R)
    target = {
        "symmetric": {0}, "p_symmetric": P, "central_symmetric": Z, "generalized_weakly_symmetric": N,
    }[prop]
    return oracles.symmetric_witness(R, lambda x: x in target)


@pytest.mark.parametrize("expr", SMALL)
@pytest.mark.parametrize("prop", ["symmetric", "p_symmetric", "central_symmetric", "generalized_weakly_symmetric"])
def test_triple_witness_is_lexicographically_least(ring, expr, prop):
    R = ring(expr)
    rep = CHECKERS[prop](R)
    assert rep.witness == _brute(R, prop)
    assert rep.verdict == (rep.witness is None)


@pytest.mark.parametrize("expr", SMALL)
def test_semicommutative_witness_is_least(ring, expr):
    R = ring(expr)
    P = radical_profile(R).P
    expected = oracles.least_triple(R, lambda a, b, r: R.times(a, b) == 0 and R.product(a, r, b) not in P)
    assert is_p_semicommutative(R).witness == expected


@pytest.mark.parametrize("expr", SMALL)
def test_weakly_reversible_matches_brute_force(ring, expr):
    R = ring(expr)
    N = oracles.nilpotent_elements(R)
    expected = None
    for a, b, r, s in itertools.product(R.elements, repeat=4):
        if R.times(a, b) == 0 and R.product(s, b, r, a) not in N:
            expected = (a, b, r, s)
            break
    assert is_weakly_reversible(R).witness == expected


@pytest.mark.parametrize("expr", SMALL)
def test_left_quasi_duo_matches_definition(ring, expr):
    from ringlab.ideals import enumerate_maximal_left_ideals, is_ideal

    R = ring(expr)
    expected = all(is_ideal(R, M, "two-sided") for M in enumerate_maximal_left_ideals(R, full_lattice=True))
    assert is_left_quasi_duo(R).verdict == expected


# --- the implication lattice ------------------------------------------------

LATTICE = [
    ("symmetric", "p_symmetric"),
    ("central_symmetric", "p_symmetric"),
    ("p_symmetric", "generalized_weakly_symmetric"),
    ("p_symmetric", "p_semicommutative"),
    ("p_symmetric", "weakly_reversible"),
    ("p_symmetric", "n2_in_p"),
]


def _assert_lattice(R):
    v = {name: CHECKERS[name](R).verdict for name in {x for pair in LATTICE for x in pair}}
    for hyp, concl in LATTICE:
        assert not v[hyp] or v[concl], f"{R.name}: {hyp} holds but {concl} fails"


def _assert_replay(R):
    P = radical_profile(R).P
    for name in ("symmetric", "p_symmetric", "central_symmetric", "generalized_weakly_symmetric",
                 "p_semicommutative", "n2_in_p", "2_primal", "weakly_reversible"):
        rep = CHECKERS[name](R)
        if not rep.verdict:
            assert witness_violates(R, name, rep.witness, P=P)


def _assert_permutations(R):
    if is_2_primal(R).verdict:
        verdicts = {is_p_symmetric(R, v).verdict for v in ("bac", "acb", "cba")}
        assert len(verdicts) == 1


CORPUS = [
    "Z2", "Z4", "Z6", "Z12", "GF(2,x^2+x+1)", "Quot(2,x^3)", "T2(Z2)", "T3(Z2)", "S2(Z2)",
    "S4(Z2)", "V2(Z4)", "V3(Z2)", "M2(Z2)", "Z4 x Z2", "pullback(Z4)",
]


@pytest.mark.parametrize("expr", CORPUS)
def test_corpus_lattice_replay_and_permutations(ring, expr):
    R = ring(expr)
    _assert_lattice(R)
    _assert_replay(R)
    _assert_permutations(R)


def test_strict_gaps_in_s4(ring):
    R = ring("S4(Z2)")
    assert is_p_symmetric(R).verdict
    assert not is_symmetric(R).verdict
    assert not is_central_symmetric(R).verdict


def test_n2_in_p(ring):
    assert n2_in_p(ring("S4(Z2)")).verdict
    rep = n2_in_p(ring("M2(Z2)"))
    assert not rep.verdict
    assert witness_violates(ring("M2(Z2)"), "n2_in_p", rep.witness)


def test_report_json_shape(ring):
    js = is_p_symmetric(ring("M2(Z2)")).to_json()
    assert set(js) == {"ring", "property", "verdict", "witness", "decodedWitness", "scanned"}
    assert js["verdict"] is False and len(js["witness"]) == 3
    ok = is_p_symmetric(ring("Z4")).to_json()
    assert ok["witness"] is None and ok["scanned"] == 64


def test_witness_replay_rejects_non_witness(ring):
    R = ring("Z4")
    assert not witness_violates(R, "symmetric", (1, 1, 1))
    with pytest.raises(ValueError):
        witness_violates(R, "nonsense", (0,))


# --- generated rings ---------------------------------------------------------

base = st.sampled_from(["Z2", "Z3", "Z4", "Z5", "Z6", "Z8", "GF(2,x^2+x+1)", "Quot(3,x^2)"])
small = st.one_of(
    base,
    st.builds(lambda k, n, b: f"{k}{n}({b})", st.sampled_from("TSV"), st.just(2), st.sampled_from(["Z2", "Z3"])),
    st.builds(lambda n: "S3(Z2)" if n else "V3(Z2)", st.booleans()),
    st.builds(lambda a, b: f"{a} x {b}", st.sampled_from(["Z2", "Z3", "Z4"]), st.sampled_from(["Z2", "T2(Z2)", "Z4"])),
    st.builds(lambda b: f"pullback({b})", st.sampled_from(["Z4", "Z8", "V2(Z2)", "T2(Z2)"])),
)


@settings(max_examples=30, deadline=None)
@given(expr=small)
def test_generated_rings_obey_lattice_and_replay(ring, expr):
    R = ring(expr)
    _assert_lattice(R)
    _assert_replay(R)
    _assert_permutations(R)
    rep = is_symmetric(R)
    if R.order <= 16:
        assert rep.witness == oracles.symmetric_witness(R, lambda x: x == 0)
