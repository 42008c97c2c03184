"""Finite unital rings stored as dense Cayley tables.

Elements are plain integer indices into the tables. Index 0 is always the
additive identity.
"""

from __future__ import annotations

import io
import os
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import AxiomViolation, DimensionMismatch, IndexOutOfRange, RingError

# Rough element budget for one chunk of an n^3 boolean scan.
_CHUNK_ELEMS = 1 << 22


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr = np.ascontiguousarray(arr)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class FiniteRing:
    name: str
    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    one: int
    provenance: str = ""
    labels: tuple[str, ...] | None = field(default=None, repr=False)

    zero = 0

    @property
    def order(self) -> int:
        return int(self.add.shape[0])

    @property
    def elements(self) -> range:
        return range(self.order)

    def _check(self, *idx: int) -> None:
        n = self.order
        for i in idx:
            if not 0 <= int(i) < n:
                raise IndexOutOfRange(f"element {i} not in ring {self.name} of order {n}")

    def plus(self, a: int, b: int) -> int:
        self._check(a, b)
        return int(self.add[a, b])

    def times(self, a: int, b: int) -> int:
        self._check(a, b)
        return int(self.mul[a, b])

    def negate(self, a: int) -> int:
        self._check(a)
        return int(self.neg[a])

    def minus(self, a: int, b: int) -> int:
        self._check(a, b)
        return int(self.add[a, self.neg[b]])

    def product(self, *xs: int) -> int:
        """Left-to-right product of any number of elements (empty product is 1)."""
        acc = self.one
        for x in xs:
            acc = self.times(acc, x)
        return acc

    def power(self, a: int, k: int) -> int:
        acc = self.one
        for _ in range(k):
            acc = int(self.mul[acc, a])
        return acc

    def label(self, i: int) -> str:
        if self.labels is None:
            return str(int(i))
        return self.labels[int(i)]

    def same_tables(self, other: "FiniteRing") -> bool:
        return (
            self.order == other.order
            and self.one == other.one
            and np.array_equal(self.add, other.add)
            and np.array_equal(self.mul, other.mul)
        )

    def __repr__(self) -> str:
        return f"FiniteRing({self.name!r}, order={self.order})"


@dataclass(frozen=True, eq=False)
class Subset:
    """A set of elements of one ring, stored as membership flags."""

    ring: FiniteRing
    members: np.ndarray

    @classmethod
    def from_indices(cls, ring: FiniteRing, idx: Iterable[int]) -> "Subset":
        flags = np.zeros(ring.order, dtype=bool)
        flags[list(idx)] = True
        return cls(ring, _frozen(flags))

    @classmethod
    def from_flags(cls, ring: FiniteRing, flags: np.ndarray) -> "Subset":
        flags = np.asarray(flags, dtype=bool)
        if flags.shape != (ring.order,):
            raise DimensionMismatch(f"flags of shape {flags.shape} for ring of order {ring.order}")
        return cls(ring, _frozen(flags.copy()))

    def indices(self) -> list[int]:
        return [int(i) for i in np.flatnonzero(self.members)]

    def issubset(self, other: "Subset") -> bool:
        return not np.any(self.members & ~other.members)

    def __contains__(self, i: int) -> bool:
        return bool(self.members[int(i)])

    def __len__(self) -> int:
        return int(self.members.sum())

    def __iter__(self):
        return iter(self.indices())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subset):
            return NotImplemented
        return np.array_equal(self.members, other.members)

    def __hash__(self) -> int:
        return hash(self.key())

    def key(self) -> bytes:
        return np.packbits(self.members).tobytes()

    def __repr__(self) -> str:
        return f"Subset({self.indices()})"


def chunk_rows(n: int, per_row: int) -> Iterable[slice]:
    step = max(1, _CHUNK_ELEMS // max(1, per_row))
    for start in range(0, n, step):
        yield slice(start, min(n, start + step))


def first_violation(n: int, per_row: int, violations: Callable[[slice], np.ndarray]):
    """Scan ``violations(chunk)`` over chunks of the leading index.

    Returns ``(witness, scanned)`` where witness is the lexicographically least
    violating tuple (or None) and scanned counts tuples up to and including it.
    """
    for sl in chunk_rows(n, per_row):
        bad = violations(sl)
        hit = np.flatnonzero(bad.ravel())
        if hit.size:
            pos = np.unravel_index(int(hit[0]), bad.shape)
            witness = (pos[0] + sl.start,) + tuple(int(p) for p in pos[1:])
            return tuple(int(w) for w in witness), sl.start * per_row + int(hit[0]) + 1
    return None, n * per_row


def _validate(add: np.ndarray, mul: np.ndarray, neg: np.ndarray, one: int) -> None:
    n = add.shape[0]
    ar = np.arange(n)
    zr = np.flatnonzero((add[0] != ar) | (add[:, 0] != ar))
    if zr.size:
        raise AxiomViolation("additive-identity", (int(zr[0]),))
    w, _ = first_violation(n, n, lambda s: add[s] != add.T[s])
    if w:
        raise AxiomViolation("additive-commutativity", w)
    w, _ = first_violation(
        n, n * n, lambda s: add[add[s][:, :, None], ar] != add[ar[s, None, None], add[None, :, :]]
    )
    if w:
        raise AxiomViolation("additive-associativity", w)
    bad = np.flatnonzero(add[ar, neg] != 0)
    if bad.size:
        raise AxiomViolation("additive-inverse", (int(bad[0]),))
    bad = np.flatnonzero((mul[one] != ar) | (mul[:, one] != ar))
    if bad.size:
        raise AxiomViolation("identity", (int(bad[0]),))
    w, _ = first_violation(
        n, n * n, lambda s: mul[mul[s][:, :, None], ar] != mul[ar[s, None, None], mul[None, :, :]]
    )
    if w:
        raise AxiomViolation("associativity", w)
    # a(b+c) = ab + ac
    w, _ = first_violation(
        n,
        n * n,
        lambda s: mul[ar[s, None, None], add[None, :, :]]
        != add[mul[s][:, :, None], mul[s][:, None, :]],
    )
    if w:
        raise AxiomViolation("left-distributivity", w)
    # (a+b)c = ac + bc
    w, _ = first_violation(
        n,
        n * n,
        lambda s: mul[add[s][:, :, None], ar] != add[mul[s][:, None, :], mul[None, :, :]],
    )
    if w:
        raise AxiomViolation("right-distributivity", w)


def _swap_zero(add, mul, one, z, labels):
    perm = np.arange(add.shape[0])
    perm[0], perm[z] = z, 0
    # perm is an involution, so relabelling is perm[table[perm][:, perm]]
    add = perm[add[np.ix_(perm, perm)]]
    mul = perm[mul[np.ix_(perm, perm)]]
    if labels is not None:
        labels = tuple(labels[p] for p in perm)
    return add, mul, int(perm[one]), labels


def make_ring_from_tables(
    name: str,
    order: int,
    add: Sequence[Sequence[int]] | np.ndarray,
    mul: Sequence[Sequence[int]] | np.ndarray,
    one: int,
    *,
    provenance: str = "",
    labels: Sequence[str] | None = None,
    validate: bool = True,
) -> FiniteRing:
    """Build a FiniteRing, checking every ring axiom unless ``validate`` is off.

    If the additive identity is not index 0 it is swapped into place.
    """
    try:
        add = np.array(add, dtype=np.int64)
        mul = np.array(mul, dtype=np.int64)
    except ValueError as exc:
        raise DimensionMismatch(f"ragged table: {exc}") from None
    if order < 1:
        raise DimensionMismatch("order must be positive")
    for nm, t in (("add", add), ("mul", mul)):
        if t.shape != (order, order):
            raise DimensionMismatch(f"{nm} table has shape {t.shape}, expected ({order}, {order})")
        if t.size and (t.min() < 0 or t.max() >= order):
            raise DimensionMismatch(f"{nm} table has entries outside [0, {order})")
    if not 0 <= one < order:
        raise DimensionMismatch(f"one={one} outside [0, {order})")
    if labels is not None and len(labels) != order:
        raise DimensionMismatch("labels length differs from order")

    ar = np.arange(order)
    if not (np.array_equal(add[0], ar) and np.array_equal(add[:, 0], ar)):
        cands = np.flatnonzero(np.all(add == ar[None, :], axis=1) & np.all(add.T == ar[None, :], axis=1))
        if cands.size:
            add, mul, one, labels = _swap_zero(add, mul, one, int(cands[0]), labels)

    neg = np.argmax(add == 0, axis=1)
    if validate:
        _validate(add, mul, neg, one)
    dtype = np.int16 if order < 2**15 else np.int32
    return FiniteRing(
        name=name,
        add=_frozen(add.astype(dtype)),
        mul=_frozen(mul.astype(dtype)),
        neg=_frozen(neg.astype(dtype)),
        one=int(one),
        provenance=provenance or name,
        labels=tuple(labels) if labels is not None else None,
    )


def validate_ring(R: FiniteRing) -> None:
    """Re-check every ring axiom on an existing ring; raises AxiomViolation."""
    _validate(R.add, R.mul, R.neg, R.one)


def relabel(R: FiniteRing, name: str, provenance: str | None = None) -> FiniteRing:
    return FiniteRing(name, R.add, R.mul, R.neg, R.one, provenance or name, R.labels)


# --- distinguished subsets -------------------------------------------------


def center(R: FiniteRing) -> Subset:
    return Subset.from_flags(R, np.all(R.mul == R.mul.T, axis=1))


def idempotents(R: FiniteRing) -> Subset:
    ar = np.arange(R.order)
    return Subset.from_flags(R, R.mul[ar, ar] == ar)


def left_invertible(R: FiniteRing) -> Subset:
    """Elements u with vu = 1 for some v."""
    return Subset.from_flags(R, np.any(R.mul == R.one, axis=0))


def right_invertible(R: FiniteRing) -> Subset:
    """Elements u with uv = 1 for some v."""
    return Subset.from_flags(R, np.any(R.mul == R.one, axis=1))


def units(R: FiniteRing) -> Subset:
    left, right = left_invertible(R), right_invertible(R)
    if left != right:
        # one-sided units cannot exist in a finite ring
        raise RingError(f"one-sided unit found in {R.name}; tables are inconsistent")
    return left


def is_subring(R: FiniteRing, S: Subset) -> bool:
    idx = np.array(S.indices())
    m = S.members
    if not (m[0] and m[R.one]):
        return False
    return bool(
        m[R.add[np.ix_(idx, idx)]].all() and m[R.neg[idx]].all() and m[R.mul[np.ix_(idx, idx)]].all()
    )


# --- .ring file format -----------------------------------------------------


def dumps_ring(R: FiniteRing) -> str:
    name = "".join(R.name.split()) or "ring"
    out = io.StringIO()
    out.write(f"ring {name} order {R.order} one {R.one}\n")
    for table in (R.add, R.mul):
        for row in table:
            out.write(" ".join(str(int(v)) for v in row))
            out.write("\n")
    return out.getvalue()


def write_ring(R: FiniteRing, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_ring(R))


def loads_ring(text: str, *, validate: bool = True, provenance: str = "") -> FiniteRing:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise DimensionMismatch("empty .ring file")
    head = lines[0].split()
    if len(head) != 6 or head[0] != "ring" or head[2] != "order" or head[4] != "one":
        raise DimensionMismatch(f"bad header line: {lines[0]!r}")
    name, n, one = head[1], int(head[3]), int(head[5])
    rows = lines[1:]
    if len(rows) != 2 * n:
        raise DimensionMismatch(f"expected {2 * n} table rows, found {len(rows)}")
    try:
        table = [[int(v) for v in r.split()] for r in rows]
    except ValueError as exc:
        raise DimensionMismatch(str(exc)) from None
    add, mul = table[:n], table[n:]
    ar = list(range(n))
    if add[0] != ar or [r[0] for r in add] != ar:
        raise AxiomViolation("additive-identity", (0,))
    return make_ring_from_tables(name, n, add, mul, one, provenance=provenance or name, validate=validate)


def read_ring(path: str | os.PathLike, *, validate: bool = True) -> FiniteRing:
    with open(path, encoding="utf-8") as fh:
        return loads_ring(fh.read(), validate=validate, provenance=f"file({os.fspath(path)})")
