"""Exhaustive checkers for the symmetry-type ring properties.

Every checker scans its quantifier space in lexicographic tuple order and, on
failure, reports the least violating tuple. ``witness_violates`` re-evaluates
a witness with plain scalar arithmetic, independently of the scanners.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

from . import config
from .errors import CapExceeded, EquivalenceBroken
from .ideals import Ideal, enumerate_maximal_left_ideals, enumerate_two_sided_ideals, is_prime_ideal, maximal_ideals, quotient_ring
from .radicals import nilpotents, radical_profile
from .ring import FiniteRing, Subset, center, first_violation


@dataclass(frozen=True)
class PropertyReport:
    ring: str
    property: str
    verdict: bool
    witness: tuple[int, ...] | None = None
    scanned: int = 0
    decoded: list[str] | None = None
    detail: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "ring": self.ring,
            "property": self.property,
            "verdict": self.verdict,
            "witness": list(self.witness) if self.witness is not None else None,
            "decodedWitness": self.decoded,
            "scanned": self.scanned,
        }
        if self.detail:
            out["detail"] = self.detail
        return out


def _report(R: FiniteRing, prop: str, witness, scanned: int, **detail) -> PropertyReport:
    decoded = None if witness is None else [R.label(w) for w in witness]
    return PropertyReport(R.name, prop, witness is None, witness, int(scanned), decoded, detail)


# --- triple scans ----------------------------------------------------------

_PERMUTATIONS = ("bac", "acb", "cba")


def _permuted_product(R: FiniteRing, a: slice, perm: str) -> np.ndarray:
    """Products indexed [a, b, c] in the given letter order, for a in the slice."""
    ar = np.arange(R.order)
    mul = R.mul
    if perm == "bac":
        return mul[mul.T[a][:, :, None], ar[None, None, :]]
    if perm == "acb":
        return mul[mul[a][:, None, :], ar[None, :, None]]
    if perm == "cba":
        return mul[mul.T[None, :, :], ar[a][:, None, None]]
    raise ValueError(perm)


def _abc_zero(R: FiniteRing, a: slice) -> np.ndarray:
    ar = np.arange(R.order)
    return R.mul[R.mul[a][:, :, None], ar[None, None, :]] == 0


def _triple_scan(R: FiniteRing, target: np.ndarray, perm: str = "bac"):
    """Least (a, b, c) with abc = 0 and the permuted product outside target."""
    n = R.order
    return first_violation(
        n, n * n, lambda s: _abc_zero(R, s) & ~target[_permuted_product(R, s, perm)]
    )


def _zero_flags(R: FiniteRing) -> np.ndarray:
    flags = np.zeros(R.order, dtype=bool)
    flags[0] = True
    return flags


def is_symmetric(R: FiniteRing) -> PropertyReport:
    w, scanned = _triple_scan(R, _zero_flags(R))
    return _report(R, "symmetric", w, scanned)


def is_p_symmetric(R: FiniteRing, variant: str = "bac") -> PropertyReport:
    """abc = 0 implies bac in P(R); ``variant`` swaps in acb or cba."""
    P = radical_profile(R).P.members
    w, scanned = _triple_scan(R, P, variant)
    prop = "p_symmetric" if variant == "bac" else f"p_symmetric_{variant}"
    return _report(R, prop, w, scanned)


def is_central_symmetric(R: FiniteRing) -> PropertyReport:
    w, scanned = _triple_scan(R, center(R).members)
    return _report(R, "central_symmetric", w, scanned)


def is_generalized_weakly_symmetric(R: FiniteRing) -> PropertyReport:
    w, scanned = _triple_scan(R, radical_profile(R).N.members)
    return _report(R, "generalized_weakly_symmetric", w, scanned)


def is_p_semicommutative(R: FiniteRing) -> PropertyReport:
    """ab = 0 implies aRb in P(R); witness (a, b, r)."""
    n = R.order
    P = radical_profile(R).P.members
    ar = np.arange(n)

    def bad(s):
        arb = R.mul[R.mul[s][:, None, :], ar[None, :, None]]  # [a, b, r] = (a r) b
        return (R.mul[s] == 0)[:, :, None] & ~P[arb]

    w, scanned = first_violation(n, n * n, bad)
    return _report(R, "p_semicommutative", w, scanned)


def n2_in_p(R: FiniteRing) -> PropertyReport:
    prof = radical_profile(R)
    out = np.flatnonzero(prof.N2.members & ~prof.P.members)
    w = (int(out[0]),) if out.size else None
    return _report(R, "n2_in_p", w, int(out[0]) + 1 if out.size else R.order)


def _two_primal_forms(R: FiniteRing) -> tuple[bool, bool, bool, tuple[int, ...] | None]:
    prof = radical_profile(R)
    P, N = prof.P.members, prof.N.members
    form1 = bool(np.array_equal(P, N))
    # ab in P implies ba in P
    form2 = not bool(np.any(P[R.mul] & ~P[R.mul.T]))
    Q = quotient_ring(R, Ideal(R, P, "two-sided"), validate=False).ring
    form3 = len(nilpotents(Q)) == 1
    out = np.flatnonzero(N & ~P)
    return form1, form2, form3, ((int(out[0]),) if out.size else None)


def is_2_primal(R: FiniteRing) -> PropertyReport:
    """N(R) = P(R), cross-checked against the two equivalent forms."""
    f1, f2, f3, w = _two_primal_forms(R)
    if not f1 == f2 == f3:
        raise EquivalenceBroken(f"2-primal forms disagree on {R.name}: {f1}, {f2}, {f3}")
    return _report(R, "2_primal", w, R.order, forms={"N=P": f1, "ab in P => ba in P": f2, "R/P reduced": f3})


def is_weakly_reversible(R: FiniteRing) -> PropertyReport:
    """ab = 0 implies every s*b*r*a is nilpotent; witness (a, b, r, s)."""
    n = R.order
    N = radical_profile(R).N.members
    ar = np.arange(n)
    bad_x = ~np.all(N[R.mul], axis=0)  # some s with s*x not nilpotent
    br = R.mul  # br[b, r]

    def bad(s):
        bra = R.mul[br[None, :, :], ar[s][:, None, None]]  # [a, b, r] = (b r) a
        return (R.mul[s] == 0)[:, :, None] & bad_x[bra]

    w, scanned = first_violation(n, n * n, bad)
    if w is None:
        return _report(R, "weakly_reversible", None, n**4)
    a, b, r = w
    x = int(R.mul[R.mul[b, r], a])
    s = int(np.flatnonzero(~N[R.mul[:, x]])[0])
    return _report(R, "weakly_reversible", (a, b, r, s), (scanned - 1) * n + s + 1)


def is_left_quasi_duo(R: FiniteRing) -> PropertyReport:
    """Every maximal left ideal is two-sided; witness (m, r) with m r outside M."""
    best = None
    for M in enumerate_maximal_left_ideals(R):
        m = M.members
        idx = np.flatnonzero(m)
        bad = ~m[R.mul[idx, :]]
        hit = np.argwhere(bad)
        if hit.size:
            cand = (int(idx[hit[0][0]]), int(hit[0][1]))
            if best is None or cand < best[0]:
                best = (cand, M.indices())
    if best is None:
        return _report(R, "left_quasi_duo", None, R.order**2)
    return _report(R, "left_quasi_duo", best[0], R.order**2, ideal=best[1])


def all_primes_maximal(R: FiniteRing) -> PropertyReport:
    """Every prime two-sided ideal is maximal; witness is a non-maximal prime."""
    lattice = enumerate_two_sided_ideals(R)
    maxes = {M.key() for M in maximal_ideals(R, lattice)}
    for I in lattice:
        if is_prime_ideal(R, I) and I.key() not in maxes:
            return _report(R, "all_primes_maximal", tuple(I.indices()), len(lattice))
    return _report(R, "all_primes_maximal", None, len(lattice))


# --- bounded polynomial checks ---------------------------------------------


def _poly_mul(R: FiniteRing, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    """Coefficient arrays (index-valued, low degree first) multiplied in R[x]."""
    dx, dy = X.shape[-1], Y.shape[-1]
    shape = np.broadcast_shapes(X.shape[:-1], Y.shape[:-1])
    out = np.zeros(shape + (dx + dy - 1,), dtype=np.int64)
    for i in range(dx):
        for j in range(dy):
            out[..., i + j] = R.add[out[..., i + j], R.mul[X[..., i], Y[..., j]]]
    return out


def _all_polys(R: FiniteRing, d: int) -> np.ndarray:
    return np.array(list(itertools.product(range(R.order), repeat=d + 1)), dtype=np.int64)


def _budget(R: FiniteRing, what: str, size: int) -> None:
    if size > config.poly_budget():
        raise CapExceeded(f"{what} on {R.name}", size, config.poly_budget())


def is_armendariz_bounded(R: FiniteRing, d: int = 1) -> PropertyReport:
    """fg = 0 implies all a_i b_j = 0 for f, g of degree <= d.

    Witness is the coefficients of f then g, constant term first.
    """
    F = _all_polys(R, d)
    M = len(F)
    _budget(R, "Armendariz scan", M * M)

    def bad(s):
        fg = _poly_mul(R, F[s][:, None, :], F[None, :, :])
        coef = R.mul[F[s][:, None, :, None], F[None, :, None, :]]  # a_i b_j
        return np.all(fg == 0, axis=-1) & np.any(coef != 0, axis=(-1, -2))

    w, scanned = first_violation(M, M * (d + 1) ** 2, bad)
    prop = f"armendariz_d{d}"
    if w is None:
        return _report(R, prop, None, M * M)
    witness = tuple(F[w[0]].tolist()) + tuple(F[w[1]].tolist())
    return _report(R, prop, witness, w[0] * M + w[1] + 1, degree=d)


def is_p_symmetric_poly_bounded(R: FiniteRing, d: int = 1) -> PropertyReport:
    """fgh = 0 implies every coefficient of gfh lies in P(R), degrees <= d."""
    P = radical_profile(R).P.members
    F = _all_polys(R, d)
    M = len(F)
    _budget(R, "polynomial P-symmetry scan", M**3)

    def bad(s):
        f = F[s][:, None, None, :]
        g = F[None, :, None, :]
        h = F[None, None, :, :]
        fgh = _poly_mul(R, _poly_mul(R, f, g), h)
        gfh = _poly_mul(R, _poly_mul(R, g, f), h)
        return np.all(fgh == 0, axis=-1) & np.any(~P[gfh], axis=-1)

    w, _ = first_violation(M, M * M * (3 * d + 1) * 8, bad)
    prop = f"p_symmetric_poly_d{d}"
    if w is None:
        return _report(R, prop, None, M**3)
    witness = tuple(F[w[0]].tolist()) + tuple(F[w[1]].tolist()) + tuple(F[w[2]].tolist())
    return _report(R, prop, witness, (w[0] * M + w[1]) * M + w[2] + 1, degree=d)


# --- independent witness replay ---------------------------------------------


def _poly_mul_scalar(R: FiniteRing, f, g):
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = R.plus(out[i + j], R.times(a, b))
    return out


def _is_nilpotent_scalar(R: FiniteRing, x: int) -> bool:
    y = x
    for _ in range(R.order + 1):
        if y == 0:
            return True
        y = R.times(y, x)
    return False


def witness_violates(R: FiniteRing, prop: str, witness, *, P: Subset | None = None) -> bool:
    """True when plugging ``witness`` into the property's implication breaks it.

    Uses scalar table lookups only; P(R) is taken from ``P`` when given.
    """
    w = [int(x) for x in witness]
    if P is None:
        P = radical_profile(R).P
    inP = lambda x: x in P  # noqa: E731
    nil = lambda x: _is_nilpotent_scalar(R, x)  # noqa: E731
    central = lambda x: all(R.times(x, r) == R.times(r, x) for r in R.elements)  # noqa: E731
    if prop in ("symmetric", "p_symmetric", "central_symmetric", "generalized_weakly_symmetric",
                "p_symmetric_acb", "p_symmetric_cba"):
        a, b, c = w
        if R.product(a, b, c) != 0:
            return False
        perm = {"p_symmetric_acb": (a, c, b), "p_symmetric_cba": (c, b, a)}.get(prop, (b, a, c))
        x = R.product(*perm)
        test: Callable[[int], bool] = {
            "symmetric": lambda v: v == 0,
            "central_symmetric": central,
            "generalized_weakly_symmetric": nil,
        }.get(prop, inP)
        return not test(x)
    if prop == "p_semicommutative":
        a, b, r = w
        return R.times(a, b) == 0 and not inP(R.product(a, r, b))
    if prop == "n2_in_p":
        (a,) = w
        return R.times(a, a) == 0 and not inP(a)
    if prop == "2_primal":
        (a,) = w
        return nil(a) and not inP(a)
    if prop == "weakly_reversible":
        a, b, r, s = w
        return R.times(a, b) == 0 and not nil(R.product(s, b, r, a))
    if prop.startswith("armendariz_d"):
        k = len(w) // 2
        f, g = w[:k], w[k:]
        return all(c == 0 for c in _poly_mul_scalar(R, f, g)) and any(R.times(a, b) for a in f for b in g)
    if prop.startswith("p_symmetric_poly_d"):
        k = len(w) // 3
        f, g, h = w[:k], w[k : 2 * k], w[2 * k :]
        fgh = _poly_mul_scalar(R, _poly_mul_scalar(R, f, g), h)
        gfh = _poly_mul_scalar(R, _poly_mul_scalar(R, g, f), h)
        return all(c == 0 for c in fgh) and not all(inP(c) for c in gfh)
    raise ValueError(f"no witness replay for property {prop!r}")


# --- aggregate ----------------------------------------------------------------

CHECKERS: dict[str, Callable[[FiniteRing], PropertyReport]] = {
    "symmetric": is_symmetric,
    "p_symmetric": is_p_symmetric,
    "central_symmetric": is_central_symmetric,
    "generalized_weakly_symmetric": is_generalized_weakly_symmetric,
    "p_semicommutative": is_p_semicommutative,
    "n2_in_p": n2_in_p,
    "2_primal": is_2_primal,
    "weakly_reversible": is_weakly_reversible,
    "left_quasi_duo": is_left_quasi_duo,
    "all_primes_maximal": all_primes_maximal,
    "armendariz_d1": lambda R: is_armendariz_bounded(R, 1),
    "p_symmetric_poly_d1": lambda R: is_p_symmetric_poly_bounded(R, 1),
}


def check_all(R: FiniteRing, names: list[str] | None = None) -> list[dict]:
    """Run the named checkers (all by default); over-cap checks come back skipped."""
    out = []
    for name in names or list(CHECKERS):
        try:
            out.append(CHECKERS[name](R).to_json())
        except CapExceeded as exc:
            out.append({"ring": R.name, "property": name, "verdict": None, "skipped": str(exc)})
    return out
