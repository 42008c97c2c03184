import json

import pytest

from ringlab import harness
from ringlab.ring import dumps_ring
from ringlab.expr import evaluate


def outcome(report, check_id, ring):
    chk = next(c for c in report["checks"] if c["id"] == check_id)
    return next(o for o in chk["outcomes"] if o["ring"] == ring)


@pytest.fixture(scope="module")
def full_report():
    return harness.run_suite()


def test_default_corpus_has_no_failures(full_report):
    s = full_report["summary"]
    assert s["fail"] == 0
    assert s["pass"] > 100
    assert full_report["corpus"] == list(harness.DEFAULT_CORPUS)
    assert "rejected" not in full_report


def test_every_check_has_anchor_and_non_vacuous_ring(full_report):
    assert [c["id"] for c in full_report["checks"]] == sorted(harness.CHECK_IDS)
    for chk in full_report["checks"]:
        assert chk["anchor"]
        assert any(o["status"] == "pass" and o.get("note") != "vacuous" for o in chk["outcomes"]), chk["id"]


def test_report_schema(full_report):
    assert set(full_report) == {"suiteVersion", "corpus", "checks", "summary"}
    assert set(full_report["summary"]) == {"pass", "fail", "skipped"}
    for chk in full_report["checks"]:
        assert set(chk) == {"id", "anchor", "outcomes"}
        rings = [o["ring"] for o in chk["outcomes"]]
        assert rings == sorted(rings)
        for o in chk["outcomes"]:
            assert o["status"] in ("pass", "fail", "skipped")
            assert set(o) <= {"ring", "status", "witness", "note"}


@pytest.mark.parametrize(
    "check_id,ring,status,note",
    [
        ("n2_in_p", "S4(Z2)", "pass", None),
        ("n2_in_p", "T3(Z2)", "pass", None),
        ("n2_in_p", "M2(Z2)", "skipped", None),
        ("quasiduo_theorem", "Z12", "pass", None),
        ("quasiduo_theorem", "T2(Z2)", "pass", None),
        ("quasiduo_theorem", "M2(Z2)", "pass", "vacuous"),
        ("quotient_lift", "T3(Z2)", "pass", None),
        ("quotient_lift", "M2(Z2)", "pass", "vacuous"),
        ("quotient_lift", "Z12", "pass", None),
        ("pullback", "Z4", "pass", "both true"),
        ("pullback", "T2(Z2)", "pass", "both true"),
        ("pullback", "M2(Z2)", "pass", "both false"),
        ("counterexamples", "S4(Z2)", "pass", None),
        ("counterexamples", "M2(Z2)", "pass", None),
    ],
)
def test_check_examples(full_report, check_id, ring, status, note):
    o = outcome(full_report, check_id, ring)
    assert o["status"] == status
    if note is not None:
        assert o.get("note") == note


def test_two_primal_equivalence_outcomes():
    for expr in ("Z12", "M2(Z2)", "T2(Z2)"):
        assert harness.check_2primal_equivalences(expr)["status"] == "pass"


def test_implication_chain_records_s4_gaps(full_report):
    note = outcome(full_report, "implication_chain", "S4(Z2)")["note"]
    assert "not symmetric" in note and "not central symmetric" in note
    assert outcome(full_report, "implication_chain", "Z6")["status"] == "pass"


def test_matrix_family_and_rab_outcomes(full_report):
    assert outcome(full_report, "matrix_families", "T3(Z2)")["status"] == "pass"
    assert outcome(full_report, "matrix_families", "V2(Z4)")["status"] == "pass"
    s4 = outcome(full_report, "matrix_families", "S4(Z2)")
    assert s4["status"] == "pass" and "|P| = 64" in s4["note"]
    assert outcome(full_report, "matrix_families", "T3(Z4)")["status"] == "skipped"
    for expr in harness.DEFAULT_RAB:
        assert outcome(full_report, "rab", expr)["status"] == "pass"
    assert outcome(full_report, "rab", harness.DEFAULT_RAB[2])["note"] == "both false"


def test_corner_examples(full_report):
    for ring in ("T2(Z2)", "S4(Z2)", "Z12"):
        assert outcome(full_report, "corner", ring)["status"] == "pass"


def test_pullback_of_large_ring_is_skipped():
    rep = harness.run_suite(["S4(Z2)"], ["pullback"])
    assert rep["summary"] == {"pass": 0, "fail": 0, "skipped": 1}


def test_fields_only_corpus():
    rep = harness.run_suite(["Z2", "Z3", "Z5", "GF(2,x^2+x+1)", "GF(3,x^2+1)"])
    assert rep["summary"]["fail"] == 0


def test_corrupted_file_is_rejected(tmp_path):
    text = dumps_ring(evaluate("Z4"))
    lines = text.splitlines()
    # the last line is the multiplication row of 3; break 3*3
    row = lines[-1].split()
    row[3] = "2"
    lines[-1] = " ".join(row)
    bad = tmp_path / "bad.ring"
    bad.write_text("\n".join(lines) + "\n")
    rep = harness.run_suite(["Z2", f"file({bad})"], ["radical_agreement"])
    assert rep["corpus"] == ["Z2"]
    assert len(rep["rejected"]) == 1
    assert rep["rejected"][0]["error"].startswith("AxiomViolation")
    assert rep["summary"]["pass"] == 1


def test_unknown_check_id():
    with pytest.raises(ValueError):
        harness.run_suite(["Z2"], ["nope"])


def test_load_corpus_skips_comments():
    assert harness.load_corpus(["# header", "", "Z2", "  T2(Z2)  "]) == ["Z2", "T2(Z2)"]


def test_output_independent_of_worker_count():
    corpus = ["Z4", "T2(Z2)", "M2(Z2)", "Z4 x Z2"]
    texts = {harness.report_json(harness.run_suite(corpus, workers=w)) for w in (1, 2, 4)}
    assert len(texts) == 1
    report = json.loads(texts.pop())
    assert report["summary"]["fail"] == 0


def test_text_report_has_same_verdicts():
    rep = harness.run_suite(["Z4", "M2(Z2)"], ["pullback", "n2_in_p"])
    text = harness.report_text(rep)
    assert "skipped M2(Z2)" in text
    assert "summary: 3 pass, 0 fail, 1 skipped" in text


def test_replay_witness():
    rep = harness.run_suite(["M2(Z2)"], ["implication_chain"])
    assert rep["summary"]["fail"] == 0
    from ringlab.properties import is_p_symmetric

    w = is_p_symmetric(evaluate("M2(Z2)")).witness
    assert harness.replay_witness("M2(Z2)", "p_symmetric", w)
    assert not harness.replay_witness("Z4", "p_symmetric", (0, 0, 0))
