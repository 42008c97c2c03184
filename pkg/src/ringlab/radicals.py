"""Prime radical (three independent algorithms) and related radicals."""

from __future__ import annotations

import threading
import weakref
from dataclasses import dataclass, field

import numpy as np

from . import config
from .errors import CapExceeded, OracleDisagreement, RingError
from .ideals import enumerate_two_sided_ideals, ideal_generated, is_nilpotent_ideal, is_prime_ideal
from .ring import FiniteRing, Subset, units

METHODS = ("fixpoint", "rar", "primes")


def nilpotents(R: FiniteRing) -> Subset:
    n = R.order
    ar = np.arange(n)
    cur = ar.copy()
    flags = cur == 0
    # a^k = 0 for some k <= n whenever a is nilpotent
    for _ in range(n):
        cur = R.mul[cur, ar]
        flags |= cur == 0
    return Subset.from_flags(R, flags)


def square_zero(R: FiniteRing) -> Subset:
    ar = np.arange(R.order)
    return Subset.from_flags(R, R.mul[ar, ar] == 0)


def prime_radical_fixpoint(R: FiniteRing) -> Subset:
    """Strongly nilpotent elements, via a greatest-fixpoint deletion loop.

    X is the largest set of nonzero x such that some xrx lies in X again; its
    members are exactly the starts of infinite nonzero sequences p_{i+1} in
    p_i R p_i. The prime radical is the complement.
    """
    ar = np.arange(R.order)
    xrx = R.mul[R.mul, ar[:, None]]  # xrx[x, r] = (x r) x
    alive = ar != 0
    while True:
        nxt = alive & np.any(alive[xrx], axis=1)
        if np.array_equal(nxt, alive):
            break
        alive = nxt
    return Subset.from_flags(R, ~alive)


def prime_radical_ideal_nilpotency(R: FiniteRing) -> Subset:
    """Elements a whose principal ideal RaR is nilpotent."""
    flags = np.zeros(R.order, dtype=bool)
    verdicts: dict[bytes, bool] = {}
    for a in range(R.order):
        I = ideal_generated(R, [a])
        key = I.key()
        if key not in verdicts:
            verdicts[key] = is_nilpotent_ideal(R, I)[0]
        flags[a] = verdicts[key]
    return Subset.from_flags(R, flags)


def prime_radical_prime_intersection(R: FiniteRing) -> Subset:
    flags = np.ones(R.order, dtype=bool)
    for I in enumerate_two_sided_ideals(R):
        if is_prime_ideal(R, I):
            flags &= I.members
    return Subset.from_flags(R, flags)


def _one_minus(R: FiniteRing, prod: np.ndarray) -> np.ndarray:
    return R.add[R.one, R.neg[prod]]


def jacobson_radical(R: FiniteRing) -> Subset:
    """{a : 1 - ra is a unit for every r}; the right-handed version must agree."""
    u = units(R).members
    left = np.all(u[_one_minus(R, R.mul)], axis=0)  # mul[r, a]
    right = np.all(u[_one_minus(R, R.mul)], axis=1)  # mul[a, r]
    if not np.array_equal(left, right):
        raise RingError(f"left and right quasi-regular sets differ in {R.name}")
    return Subset.from_flags(R, left)


_ALGORITHMS = {
    "fixpoint": prime_radical_fixpoint,
    "rar": prime_radical_ideal_nilpotency,
    "primes": prime_radical_prime_intersection,
}


def prime_radical(R: FiniteRing, method: str = "fixpoint") -> Subset:
    if method == "all":
        return radical_profile(R).P
    if method not in _ALGORITHMS:
        raise ValueError(f"unknown method {method!r}; choose from {', '.join(METHODS)} or all")
    return _ALGORITHMS[method](R)


@dataclass(frozen=True, eq=False)
class RadicalProfile:
    ring: FiniteRing
    P: Subset
    N: Subset
    N2: Subset
    J: Subset
    methods_agreed: bool
    per_method: dict[str, Subset]
    skipped: dict[str, str] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "ring": self.ring.name,
            "P": self.P.indices(),
            "N": self.N.indices(),
            "N2": self.N2.indices(),
            "J": self.J.indices(),
            "methodsAgreed": self.methods_agreed,
            "perMethod": {k: v.indices() for k, v in self.per_method.items()},
            "skipped": dict(self.skipped),
        }


_cache: "weakref.WeakKeyDictionary[FiniteRing, RadicalProfile]" = weakref.WeakKeyDictionary()
_lock = threading.Lock()


def radical_profile(R: FiniteRing, methods: tuple[str, ...] = METHODS) -> RadicalProfile:
    """Run every enabled P(R) algorithm and fail loudly if any two disagree."""
    full = tuple(methods) == METHODS
    if full:
        with _lock:
            hit = _cache.get(R)
        if hit is not None:
            return hit
    per_method: dict[str, Subset] = {}
    skipped: dict[str, str] = {}
    for m in methods:
        try:
            per_method[m] = _ALGORITHMS[m](R)
        except CapExceeded as exc:
            skipped[m] = str(exc)
    if not per_method:
        raise RingError("no prime radical algorithm could run")
    results = list(per_method.values())
    if any(r != results[0] for r in results[1:]):
        raise OracleDisagreement({k: v.indices() for k, v in per_method.items()})
    profile = RadicalProfile(
        ring=R,
        P=results[0],
        N=nilpotents(R),
        N2=square_zero(R),
        J=jacobson_radical(R),
        methods_agreed=len(per_method) >= 2,
        per_method=per_method,
        skipped=skipped,
    )
    if full:
        with _lock:
            _cache[R] = profile
    return profile


def cached_prime_radical(R: FiniteRing) -> Subset:
    """P(R) from the cached profile when present, else from the fixpoint loop."""
    with _lock:
        hit = _cache.get(R)
    return hit.P if hit is not None else _fixpoint_cached(R)


_fp_cache: "weakref.WeakKeyDictionary[FiniteRing, Subset]" = weakref.WeakKeyDictionary()


def _fixpoint_cached(R: FiniteRing) -> Subset:
    with _lock:
        hit = _fp_cache.get(R)
    if hit is None:
        hit = prime_radical_fixpoint(R)
        with _lock:
            _fp_cache[R] = hit
    return hit


def enum_cap_allows(R: FiniteRing) -> bool:
    return R.order <= config.enum_cap()
