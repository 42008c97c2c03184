"""Registry of theorem checks replayed over a corpus of ring expressions.

Each check names the rings it runs on and maps one ring expression to an
outcome ``{"ring", "status", "witness"?, "note"?}`` with status pass, fail or
skipped. Implications whose hypothesis fails pass with note "vacuous".
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable

from . import constructions as C
from . import properties as props
from .errors import CapExceeded, RingError
from .expr import evaluate, evaluate_constructed, parse_expression, to_string
from .ideals import Ideal, quotient_ring
from .radicals import prime_radical_ideal_nilpotency, radical_profile
from .ring import FiniteRing, validate_ring

SUITE_VERSION = "1.0"

DEFAULT_CORPUS = (
    "Z2",
    "Z4",
    "Z6",
    "Z12",
    "GF(2,x^2+x+1)",
    "Quot(2,x^3)",
    "T2(Z2)",
    "T3(Z2)",
    "S2(Z2)",
    "S4(Z2)",
    "V2(Z4)",
    "V3(Z2)",
    "M2(Z2)",
    "Z4 x Z2",
    "pullback(Z4)",
)

DEFAULT_FAMILY_BASES = ("Z2", "Z4", "M2(Z2)")

# S2(Z2) = {aI + b e12} sits inside T2(Z2) at indices 0, 2, 5, 7.
DEFAULT_RAB = (
    "RAB(Z4, sub=[0,1,2,3], L=2)",
    "RAB(T2(Z2), sub=[0,2,5,7], L=1)",
    "RAB(M2(Z2), sub=[0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15], L=1)",
)


def load_corpus(lines: Iterable[str]) -> list[str]:
    out = []
    for ln in lines:
        ln = ln.strip()
        if ln and not ln.startswith("#"):
            out.append(ln)
    return out


@dataclass
class CorpusEntry:
    expr: str
    ring: FiniteRing


def build_corpus(exprs: Iterable[str]) -> tuple[list[CorpusEntry], list[dict]]:
    """Evaluate and fully validate every expression; rejects are returned separately."""
    good, rejected = [], []
    for text in exprs:
        try:
            canon = to_string(parse_expression(text))
            R = evaluate(canon)
            validate_ring(R)
            good.append(CorpusEntry(canon, R))
        except (RingError, OSError) as exc:
            rejected.append({"expr": text, "error": f"{type(exc).__name__}: {exc}"})
    return good, rejected


def _pass(ring: str, note: str | None = None) -> dict:
    out = {"ring": ring, "status": "pass"}
    if note:
        out["note"] = note
    return out


def _fail(ring: str, note: str, witness=None) -> dict:
    out = {"ring": ring, "status": "fail", "note": note}
    if witness is not None:
        out["witness"] = [int(w) for w in witness]
    return out


def _skip(ring: str, note: str) -> dict:
    return {"ring": ring, "status": "skipped", "note": note}


def _implies(ring: str, hyp: bool, concl: props.PropertyReport) -> dict:
    if not hyp:
        return _pass(ring, "vacuous")
    if concl.verdict:
        return _pass(ring)
    return _fail(ring, f"{concl.property} fails", concl.witness)


# --- checks ------------------------------------------------------------------


def check_radical_agreement(expr: str) -> dict:
    R = evaluate(expr)
    prof = radical_profile(R)
    if not prof.methods_agreed:
        return _skip(expr, "fewer than two radical algorithms ran")
    if prof.P != prof.J:
        return _fail(expr, "P != J", sorted(set(prof.P.indices()) ^ set(prof.J.indices()))[:1])
    if not prof.P.issubset(prof.N):
        return _fail(expr, "P not inside N")
    note = None
    if prof.skipped:
        note = "skipped: " + ", ".join(sorted(prof.skipped))
    return _pass(expr, note)


def check_n2_in_p(expr: str) -> dict:
    R = evaluate(expr)
    if not props.is_p_symmetric(R).verdict:
        return _skip(expr, "hypothesis false: not P-symmetric")
    for rep in (props.n2_in_p(R), props.is_p_semicommutative(R)):
        if not rep.verdict:
            return _fail(expr, f"{rep.property} fails", rep.witness)
    return _pass(expr)


def check_2primal_equivalences(expr: str) -> dict:
    f1, f2, f3, w = props._two_primal_forms(evaluate(expr))
    if f1 == f2 == f3:
        return _pass(expr, f"all {str(f1).lower()}")
    return _fail(expr, f"forms disagree: N=P {f1}, ab-ba {f2}, quotient reduced {f3}", w)


def check_quasiduo_theorem(expr: str) -> dict:
    R = evaluate(expr)
    hyp = props.is_left_quasi_duo(R).verdict and props.all_primes_maximal(R).verdict
    return _implies(expr, hyp, props.is_p_symmetric(R))


def check_implication_chain(expr: str) -> dict:
    R = evaluate(expr)
    sym = props.is_symmetric(R).verdict
    cen = props.is_central_symmetric(R).verdict
    psym = props.is_p_symmetric(R)
    consequents = [
        props.is_generalized_weakly_symmetric(R),
        props.is_p_semicommutative(R),
        props.is_weakly_reversible(R),
        props.n2_in_p(R),
    ]
    if (sym or cen) and not psym.verdict:
        return _fail(expr, "symmetric or central symmetric but not P-symmetric", psym.witness)
    if psym.verdict:
        for rep in consequents:
            if not rep.verdict:
                return _fail(expr, f"P-symmetric but {rep.property} fails", rep.witness)
    gaps = []
    if psym.verdict and not sym:
        gaps.append("not symmetric")
    if psym.verdict and not cen:
        gaps.append("not central symmetric")
    if not psym.verdict:
        return _pass(expr, "vacuous")
    return _pass(expr, "P-symmetric; " + ", ".join(gaps) if gaps else None)


def check_corner(expr: str) -> dict:
    R = evaluate(expr)
    psym = props.is_p_symmetric(R).verdict
    for e in C.idempotents(R).indices():
        if e == 0:
            continue
        cr = C.corner_ring(R, e)
        P_corner = radical_profile(cr.ring).P
        if P_corner != cr.predicted_p:
            return _fail(expr, "P(eRe) != eP(R)e", (e,))
        if psym:
            rep = props.is_p_symmetric(cr.ring)
            if not rep.verdict:
                return _fail(expr, f"corner at e={e} not P-symmetric", (e,) + rep.witness)
    return _pass(expr, None if psym else "hypothesis false; P(eRe) = eP(R)e checked")


def check_quotient_lift(expr: str) -> dict:
    R = evaluate(expr)
    P = radical_profile(R).P
    Q = quotient_ring(R, Ideal(R, P.members, "two-sided"), name=f"{expr}/P").ring
    return _implies(expr, props.is_p_symmetric(Q).verdict, props.is_p_symmetric(R))


def check_pullback(expr: str) -> dict:
    R = evaluate(expr)
    cr = evaluate_constructed(f"pullback({expr})")
    S = cr.ring
    if radical_profile(S).P != cr.predicted_p:
        return _fail(expr, "P(pullback) differs from P(R) x P(R) restricted")
    x, y = cr.extra["projections"]
    if len(set(x.tolist())) != R.order or len(set(y.tolist())) != R.order:
        return _fail(expr, "pullback projections not surjective")
    left, right = props.is_p_symmetric(R).verdict, props.is_p_symmetric(S).verdict
    if left != right:
        return _fail(expr, f"R P-symmetric {left}, pullback P-symmetric {right}")
    return _pass(expr, f"both {str(left).lower()}")


def check_matrix_family(expr: str) -> dict:
    cr = evaluate_constructed(expr)
    node = parse_expression(expr)
    base = evaluate(node.arg)
    P = radical_profile(cr.ring).P
    if cr.predicted_p is not None and P != cr.predicted_p:
        return _fail(expr, "closed-form radical differs from computed P")
    b, m = props.is_p_symmetric(base).verdict, props.is_p_symmetric(cr.ring).verdict
    if b != m:
        return _fail(expr, f"base P-symmetric {b}, family P-symmetric {m}")
    return _pass(expr, f"|P| = {len(P)}; both {str(b).lower()}")


def check_rab(expr: str) -> dict:
    cr = evaluate_constructed(expr)
    A = evaluate(parse_expression(expr).arg)
    B = cr.extra["B"]
    if radical_profile(cr.ring).P != cr.predicted_p:
        return _fail(expr, "computed P differs from the R[P(A), P(A) ∩ P(B)] prediction")
    both = props.is_p_symmetric(A).verdict and props.is_p_symmetric(B).verdict
    whole = props.is_p_symmetric(cr.ring).verdict
    if both != whole:
        return _fail(expr, f"A and B P-symmetric {both}, R[A,B] P-symmetric {whole}")
    return _pass(expr, f"both {str(whole).lower()}")


def check_poly_theorem(expr: str) -> dict:
    R = evaluate(expr)
    hyp = props.is_p_symmetric(R).verdict and props.is_armendariz_bounded(R, 1).verdict
    return _implies(expr, hyp, props.is_p_symmetric_poly_bounded(R, 1))


def check_vn_polynomial_iso(expr: str) -> dict:
    node = parse_expression(expr)
    n, p = node.n, node.arg.n
    V = evaluate(expr)
    Q = C.polynomial_quotient_ring(p, [0] * n + [1])
    if V.same_tables(Q):
        return _pass(expr, f"coordinates match Quot({p},x^{n})")
    return _fail(expr, f"V{n}(Z{p}) tables differ from Z{p}[x]/(x^{n})")


def _registered_matrices() -> dict:
    S4 = evaluate_constructed("S4(Z2)")
    M2 = evaluate_constructed("M2(Z2)")

    def unit(n, i, j):
        m = [[0] * n for _ in range(n)]
        m[i][j] = 1
        return m

    return {
        "S4": (S4, C.matrix_element(S4, unit(4, 1, 2)), C.matrix_element(S4, unit(4, 0, 1))),
        "M2": (
            M2,
            C.matrix_element(M2, unit(2, 1, 0)),
            C.matrix_element(M2, unit(2, 0, 1)),
            C.matrix_element(M2, [[1, 1], [0, 0]]),
        ),
    }


def check_counterexamples(expr: str) -> dict:
    mats = _registered_matrices()
    if expr == "S4(Z2)":
        S4, A, B = mats["S4"]
        R = S4.ring
        if not props.is_p_symmetric(R).verdict:
            return _fail(expr, "S4(Z2) should be P-symmetric")
        if props.is_symmetric(R).verdict or props.is_central_symmetric(R).verdict:
            return _fail(expr, "S4(Z2) should be neither symmetric nor central symmetric")
        one = R.one
        if R.times(A, B) != 0 or R.times(B, A) == 0:
            return _fail(expr, "AB = 0 and BA != 0 not confirmed", (A, B))
        if not props.witness_violates(R, "symmetric", (A, B, one)):
            return _fail(expr, "(A, B, 1) is not a symmetry witness", (A, B, one))
        if not props.witness_violates(R, "central_symmetric", (A, B, one)):
            return _fail(expr, "BA lies in the center", (A, B, one))
        return _pass(expr, "P-symmetric; AB = 0, BA = e13 not central")
    if expr == "M2(Z2)":
        M2, A, B, Cm = mats["M2"]
        R = M2.ring
        if props.is_p_symmetric(R).verdict:
            return _fail(expr, "M2(Z2) should not be P-symmetric")
        if R.product(A, B, Cm) != 0:
            return _fail(expr, "ABC != 0", (A, B, Cm))
        bac = R.product(B, A, Cm)
        if R.times(bac, bac) != bac or bac == 0:
            return _fail(expr, "BAC is not a nonzero idempotent", (A, B, Cm))
        if not props.witness_violates(R, "p_symmetric", (A, B, Cm)):
            return _fail(expr, "registered triple is not a witness", (A, B, Cm))
        return _pass(expr, "ABC = 0, BAC nonzero idempotent outside P")
    return _skip(expr, "no registered counterexample")


@dataclass(frozen=True)
class TheoremCheck:
    id: str
    anchor: str
    run: Callable[[str], dict]
    targets: Callable[[list[str]], list[str]]


def _corpus(c: list[str]) -> list[str]:
    return list(c)


def _families(_: list[str]) -> list[str]:
    out = []
    for base in DEFAULT_FAMILY_BASES:
        for kind in "TSV":
            for n in (1, 2, 3):
                out.append(f"{kind}{n}({base})")
    out.append("S4(Z2)")
    return out


def _small_zmod_powers(_: list[str]) -> list[str]:
    return ["V2(Z2)", "V3(Z2)", "V2(Z3)", "V4(Z2)", "V2(Z5)"]


CHECKS: tuple[TheoremCheck, ...] = (
    TheoremCheck("radical_agreement", "P(R) = strongly nilpotent elements = {a : RaR nilpotent} = intersection of prime ideals; P = J and P ⊆ N in finite rings", check_radical_agreement, _corpus),
    TheoremCheck("n2_in_p", "R P-symmetric => N_2(R) ⊆ P(R) and R is P-semicommutative", check_n2_in_p, _corpus),
    TheoremCheck("2primal_equivalences", "N(R) = P(R) <=> (ab ∈ P(R) => ba ∈ P(R)) <=> R/P(R) reduced", check_2primal_equivalences, _corpus),
    TheoremCheck("quasiduo_theorem", "R left quasi-duo and every prime ideal maximal => R P-symmetric", check_quasiduo_theorem, _corpus),
    TheoremCheck("implication_chain", "symmetric => P-symmetric; central symmetric => P-symmetric; P-symmetric => generalized weakly symmetric, P-semicommutative, weakly reversible", check_implication_chain, _corpus),
    TheoremCheck("corner", "R P-symmetric, e = e^2 => eRe P-symmetric; P(eRe) = eP(R)e", check_corner, _corpus),
    TheoremCheck("quotient_lift", "R/P(R) P-symmetric => R P-symmetric", check_quotient_lift, _corpus),
    TheoremCheck("pullback", "R P-symmetric <=> {(x, y) ∈ R x R : x - y ∈ P(R)} P-symmetric", check_pullback, _corpus),
    TheoremCheck("matrix_families", "R P-symmetric <=> T_n(R), S_n(R), V_n(R) P-symmetric; P(T_n(R)) = {a_ii ∈ P(R)}, P(S_n(R)) = {a ∈ P(R)}, P(V_n(R)) = {a_0 ∈ P(R)}", check_matrix_family, _families),
    TheoremCheck("rab", "A, B P-symmetric <=> R[A, B] P-symmetric; P(R[A, B]) = R[P(A), P(A) ∩ P(B)]", check_rab, lambda _: list(DEFAULT_RAB)),
    TheoremCheck("poly_theorem", "R Armendariz and P-symmetric => fgh = 0 implies gfh ∈ P(R)[x] (degree <= 1)", check_poly_theorem, _corpus),
    TheoremCheck("vn_polynomial_iso", "V_n(R) ≅ R[x]/(x^n)", check_vn_polynomial_iso, _small_zmod_powers),
    TheoremCheck("counterexamples", "S_4: AB = 0, BA ∉ Z(R), P-symmetric; M_2: ABC = 0, BAC not nilpotent", check_counterexamples, lambda _: ["M2(Z2)", "S4(Z2)"]),
)

CHECK_IDS = tuple(c.id for c in CHECKS)


def _run_one(check: TheoremCheck, expr: str) -> dict:
    try:
        return check.run(expr)
    except CapExceeded as exc:
        return _skip(expr, f"cap: {exc}")
    except RingError as exc:
        return _fail(expr, f"{type(exc).__name__}: {exc}")


def run_suite(
    corpus: Iterable[str] = DEFAULT_CORPUS,
    check_ids: Iterable[str] | None = None,
    workers: int = 1,
) -> dict:
    """Run the registered checks and return the SuiteReport as a plain dict."""
    entries, rejected = build_corpus(corpus)
    exprs = [e.expr for e in entries]
    wanted = list(check_ids) if check_ids else list(CHECK_IDS)
    unknown = [c for c in wanted if c not in CHECK_IDS]
    if unknown:
        raise ValueError(f"unknown check ids: {unknown}")
    selected = sorted((c for c in CHECKS if c.id in wanted), key=lambda c: c.id)
    tasks = [(c, t) for c in selected for t in c.targets(exprs)]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda ct: _run_one(*ct), tasks))
    else:
        results = [_run_one(c, t) for c, t in tasks]

    checks = []
    summary = {"pass": 0, "fail": 0, "skipped": 0}
    for c in selected:
        outs = sorted((r for (cc, _), r in zip(tasks, results) if cc is c), key=lambda o: o["ring"])
        for o in outs:
            summary[o["status"]] += 1
        checks.append({"id": c.id, "anchor": c.anchor, "outcomes": outs})
    report = {"suiteVersion": SUITE_VERSION, "corpus": exprs, "checks": checks, "summary": summary}
    if rejected:
        report["rejected"] = rejected
    return report


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def report_text(report: dict) -> str:
    lines = [f"suite {report['suiteVersion']}: {len(report['corpus'])} corpus rings"]
    for rej in report.get("rejected", []):
        lines.append(f"  rejected {rej['expr']}: {rej['error']}")
    for chk in report["checks"]:
        lines.append(f"[{chk['id']}] {chk['anchor']}")
        for o in chk["outcomes"]:
            extra = f" ({o['note']})" if o.get("note") else ""
            wit = f" witness={o['witness']}" if "witness" in o else ""
            lines.append(f"  {o['status']:<7} {o['ring']}{extra}{wit}")
    s = report["summary"]
    lines.append(f"summary: {s['pass']} pass, {s['fail']} fail, {s['skipped']} skipped")
    return "\n".join(lines) + "\n"


def replay_witness(expr: str, prop: str, witness) -> bool:
    """Re-evaluate a stored witness, taking P(R) from the RaR algorithm."""
    R = evaluate(expr)
    return props.witness_violates(R, prop, witness, P=prime_radical_ideal_nilpotency(R))
