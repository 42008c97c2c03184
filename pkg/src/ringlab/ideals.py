"""Ideals of finite rings: generation, lattices, primality, quotients."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal

import numpy as np

from . import config
from .errors import CapExceeded, ImproperIdeal, KindError
from .ring import FiniteRing, Subset, _frozen, make_ring_from_tables

Kind = Literal["left", "right", "two-sided"]


@dataclass(frozen=True, eq=False)
class Ideal(Subset):
    kind: Kind = "two-sided"
    generators: tuple[int, ...] | None = None

    def __repr__(self) -> str:
        return f"Ideal({self.kind}, {self.indices()})"


def _as_ideal(R: FiniteRing, flags: np.ndarray, kind: Kind, gens=None) -> Ideal:
    return Ideal(R, _frozen(flags.copy()), kind, None if gens is None else tuple(int(g) for g in gens))


def additive_closure(R: FiniteRing, flags: np.ndarray) -> np.ndarray:
    """Smallest additive subgroup containing the flagged elements."""
    flags = np.asarray(flags, dtype=bool).copy()
    flags[0] = True
    while True:
        idx = np.flatnonzero(flags)
        new = np.zeros_like(flags)
        new[R.add[np.ix_(idx, idx)]] = True
        if np.array_equal(new, flags):
            return flags
        flags |= new


def ideal_generated(R: FiniteRing, gens: Iterable[int], kind: Kind = "two-sided") -> Ideal:
    gens = sorted({int(g) for g in gens})
    flags = np.zeros(R.order, dtype=bool)
    if gens:
        g = np.array(gens)
        if kind == "left":
            flags[R.mul[:, g]] = True
        elif kind == "right":
            flags[R.mul[g, :]] = True
        elif kind == "two-sided":
            # r g s over all r, s
            flags[R.mul[R.mul[:, g][:, :, None], np.arange(R.order)[None, None, :]]] = True
        else:
            raise KindError(f"unknown ideal kind {kind!r}")
    return _as_ideal(R, additive_closure(R, flags), kind, gens)


def is_ideal(R: FiniteRing, members: Subset | np.ndarray, kind: Kind = "two-sided") -> bool:
    m = members.members if isinstance(members, Subset) else np.asarray(members, dtype=bool)
    if not m[0]:
        return False
    idx = np.flatnonzero(m)
    if not m[R.add[np.ix_(idx, idx)]].all() or not m[R.neg[idx]].all():
        return False
    if kind in ("left", "two-sided") and not m[R.mul[:, idx]].all():
        return False
    if kind in ("right", "two-sided") and not m[R.mul[idx, :]].all():
        return False
    return True


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    R = I.ring
    flags = np.zeros(R.order, dtype=bool)
    flags[R.add[np.ix_(I.indices(), J.indices())]] = True
    return _as_ideal(R, flags, I.kind if I.kind == J.kind else "left")


def ideal_product(I: Subset, J: Subset) -> np.ndarray:
    """Flags of the additive span of all products ij."""
    R = I.ring
    flags = np.zeros(R.order, dtype=bool)
    flags[R.mul[np.ix_(I.indices(), J.indices())]] = True
    return additive_closure(R, flags)


def _require_two_sided(I: Ideal) -> None:
    if getattr(I, "kind", "two-sided") != "two-sided":
        raise KindError(f"expected a two-sided ideal, got {I.kind}")


def is_nilpotent_ideal(R: FiniteRing, I: Ideal) -> tuple[bool, int | None]:
    """Return (nilpotent?, least k with I^k = 0)."""
    _require_two_sided(I)
    power = I.members
    for k in range(1, R.order + 2):
        if power.sum() == 1:
            return True, k
        nxt = ideal_product(Subset(R, power), I)
        if np.array_equal(nxt, power):
            return False, None
        power = nxt
    return False, None


def _check_cap(R: FiniteRing, what: str) -> None:
    cap = config.enum_cap()
    if R.order > cap:
        raise CapExceeded(what, R.order, cap)


def _close_under_sums(R: FiniteRing, seeds: list[np.ndarray], base: np.ndarray | None = None) -> list[np.ndarray]:
    """All sums of subsets of ``seeds`` (each an additive subgroup), plus ``base``."""
    start = np.zeros(R.order, dtype=bool) if base is None else base.copy()
    start[0] = True
    seen = {np.packbits(start).tobytes(): start}
    frontier = [start]
    seed_idx = [np.flatnonzero(s) for s in seeds]
    while frontier:
        nxt = []
        for cur in frontier:
            cur_idx = np.flatnonzero(cur)
            for s, sidx in zip(seeds, seed_idx):
                if not np.any(s & ~cur):
                    continue
                flags = np.zeros(R.order, dtype=bool)
                flags[R.add[np.ix_(cur_idx, sidx)]] = True
                key = np.packbits(flags).tobytes()
                if key not in seen:
                    seen[key] = flags
                    nxt.append(flags)
        frontier = nxt
    return list(seen.values())


def _sorted_ideals(R: FiniteRing, flag_list: list[np.ndarray], kind: Kind) -> list[Ideal]:
    out = [_as_ideal(R, f, kind) for f in flag_list]
    out.sort(key=lambda I: (len(I), I.indices()))
    return out


def _distinct(flag_list: Iterable[np.ndarray]) -> list[np.ndarray]:
    uniq: dict[bytes, np.ndarray] = {}
    for f in flag_list:
        uniq.setdefault(np.packbits(f).tobytes(), f)
    return list(uniq.values())


def enumerate_two_sided_ideals(R: FiniteRing) -> list[Ideal]:
    _check_cap(R, "two-sided ideal enumeration")
    principal = _distinct(ideal_generated(R, [a]).members for a in range(1, R.order))
    return _sorted_ideals(R, _close_under_sums(R, principal), "two-sided")


def enumerate_left_ideals(R: FiniteRing, containing: Subset | None = None) -> list[Ideal]:
    """Left ideals of R, optionally only those containing a given left ideal."""
    _check_cap(R, "left ideal enumeration")
    cyclic = _distinct(ideal_generated(R, [a], "left").members for a in range(1, R.order))
    base = None if containing is None else np.asarray(containing.members, dtype=bool)
    return _sorted_ideals(R, _close_under_sums(R, cyclic, base), "left")


def enumerate_maximal_left_ideals(R: FiniteRing, *, full_lattice: bool = False) -> list[Ideal]:
    """Maximal proper left ideals.

    Every maximal left ideal contains J(R), so by default only the part of the
    left-ideal lattice above J(R) is built. ``full_lattice`` builds everything.
    """
    if full_lattice:
        lattice = enumerate_left_ideals(R)
    else:
        from .radicals import jacobson_radical

        lattice = enumerate_left_ideals(R, containing=jacobson_radical(R))
    proper = [I for I in lattice if not I.members[R.one]]
    return [I for I in proper if not any(I is not K and I.issubset(K) for K in proper)]


def is_prime_ideal(R: FiniteRing, I: Ideal) -> bool:
    """For all a, b outside I there is r with arb outside I. Proper ideals only."""
    _require_two_sided(I)
    m = I.members
    out = np.flatnonzero(~m)
    if out.size == 0:
        return False
    step = max(1, (1 << 21) // (R.order * out.size))
    for start in range(0, out.size, step):
        a = out[start : start + step]
        arb = R.mul[R.mul[a][:, :, None], out[None, None, :]]  # indexed (a, r, b)
        if not np.all(np.any(~m[arb], axis=1)):
            return False
    return True


def prime_ideals(R: FiniteRing, lattice: list[Ideal] | None = None) -> list[Ideal]:
    lattice = enumerate_two_sided_ideals(R) if lattice is None else lattice
    return [I for I in lattice if is_prime_ideal(R, I)]


def maximal_ideals(R: FiniteRing, lattice: list[Ideal] | None = None) -> list[Ideal]:
    lattice = enumerate_two_sided_ideals(R) if lattice is None else lattice
    proper = [I for I in lattice if not I.members[R.one]]
    return [I for I in proper if not any(I is not K and I.issubset(K) for K in proper)]


@dataclass(frozen=True, eq=False)
class Quotient:
    ring: FiniteRing
    projection: np.ndarray  # element of R -> element of R/I
    representatives: np.ndarray  # element of R/I -> least element of its coset

    def project(self, a: int) -> int:
        return int(self.projection[a])


def quotient_ring(R: FiniteRing, I: Ideal, *, name: str | None = None, validate: bool = True) -> Quotient:
    _require_two_sided(I)
    if I.members[R.one]:
        raise ImproperIdeal(f"cannot form {R.name} modulo the whole ring")
    idx = np.array(I.indices())
    rep = R.add[:, idx].min(axis=1)
    reps = np.unique(rep)
    pos = np.full(R.order, -1, dtype=np.int64)
    pos[reps] = np.arange(reps.size)
    proj = pos[rep]
    add = proj[R.add[np.ix_(reps, reps)]]
    mul = proj[R.mul[np.ix_(reps, reps)]]
    labels = tuple(f"[{R.label(r)}]" for r in reps)
    nm = name or f"{R.name}/I"
    Q = make_ring_from_tables(nm, int(reps.size), add, mul, int(proj[R.one]), labels=labels, validate=validate)
    return Quotient(Q, _frozen(proj), _frozen(reps))
