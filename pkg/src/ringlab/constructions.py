"""Ring constructions: Z_n, polynomial quotients, products, matrix families,
corner rings, pullbacks and truncated sequence rings R[A, B].

Each builder returns a :class:`ConstructedRing` carrying the element
coordinates and, where a closed form is known, the predicted prime radical.
Matrix-family elements are ordered lexicographically by their free entries,
taken in row-major order of first appearance, so index == mixed-radix code.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

import numpy as np

from . import config
from .errors import CapExceeded, NotASubring, NotIdempotent, NotIrreducible, NotMonic, NotPrime, RingError
from .radicals import cached_prime_radical
from .ring import FiniteRing, Subset, center, idempotents, is_subring, make_ring_from_tables, units


@dataclass(frozen=True, eq=False)
class ConstructedRing:
    ring: FiniteRing
    predicted_p: Subset | None = None
    coords: tuple[Any, ...] = ()
    extra: dict[str, Any] = field(default_factory=dict)

    def index_of(self, coord: Any) -> int:
        lookup = self.extra.get("_lookup")
        if lookup is None:
            lookup = {c: i for i, c in enumerate(self.coords)}
            self.extra["_lookup"] = lookup
        return lookup[coord]


def _cap(what: str, size: int) -> None:
    cap = config.order_cap()
    if size > cap:
        raise CapExceeded(what, size, cap)


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


# --- base rings ------------------------------------------------------------


def ring_zmod(n: int, *, name: str | None = None) -> FiniteRing:
    if n < 1:
        raise RingError("Z_n needs n >= 1")
    _cap(f"Z{n}", n)
    ar = np.arange(n)
    add = (ar[:, None] + ar[None, :]) % n
    mul = (ar[:, None] * ar[None, :]) % n
    return make_ring_from_tables(name or f"Z{n}", n, add, mul, 1 % n, validate=False)


def poly_to_str(coeffs: Sequence[int]) -> str:
    """Render low-to-high coefficients as e.g. ``x^2+x+1``."""
    out = ""
    for k in range(len(coeffs) - 1, -1, -1):
        c = int(coeffs[k])
        if c == 0:
            continue
        mon = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        body = str(abs(c)) if not mon else (mon if abs(c) == 1 else f"{abs(c)}{mon}")
        if c < 0:
            out += "-" + body
        else:
            out += ("+" if out else "") + body
    return out or "0"


def _poly_mod(num: list[int], den: list[int], p: int) -> list[int]:
    num = [c % p for c in num]
    inv = pow(den[-1], -1, p)
    while len(num) >= len(den) and any(num):
        if num[-1] == 0:
            num.pop()
            continue
        c = num[-1] * inv % p
        shift = len(num) - len(den)
        for i, d in enumerate(den):
            num[shift + i] = (num[shift + i] - c * d) % p
        num.pop()
    return num


def is_irreducible(p: int, f: Sequence[int]) -> bool:
    """Brute force: no monic factor of degree 1..deg(f)//2 divides f."""
    f = [c % p for c in f]
    k = len(f) - 1
    for d in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not any(_poly_mod(list(f), list(low) + [1], p)):
                return False
    return True


def polynomial_quotient_ring(
    p: int, f: Sequence[int], *, require_field: bool = False, name: str | None = None
) -> FiniteRing:
    """Z_p[x]/(f) for monic f given as low-to-high coefficients."""
    if not _is_prime(p):
        raise NotPrime(f"{p} is not prime")
    f = [int(c) % p for c in f]
    while len(f) > 1 and f[-1] == 0:
        f.pop()
    k = len(f) - 1
    if k < 1 or f[-1] != 1:
        raise NotMonic(f"{poly_to_str(f)} is not monic of positive degree over Z{p}")
    if require_field and not is_irreducible(p, f):
        raise NotIrreducible(f"{poly_to_str(f)} is reducible over Z{p}")
    N = p**k
    _cap(name or "polynomial quotient", N)
    # element index = coefficients (c0, ..., c_{k-1}) in mixed radix, c0 most significant
    E = np.array(list(itertools.product(range(p), repeat=k)), dtype=np.int64).reshape(N, k)
    weights = p ** np.arange(k - 1, -1, -1)
    add = ((E[:, None, :] + E[None, :, :]) % p) @ weights
    mul = np.empty((N, N), dtype=np.int64)
    for i in range(N):
        prod = np.zeros((N, 2 * k - 1), dtype=np.int64)
        for j in range(k):
            prod[:, j : j + k] += E[i, j] * E
        for d in range(2 * k - 2, k - 1, -1):
            c = prod[:, d] % p
            prod[:, d - k : d] -= c[:, None] * np.array(f[:k])
            prod[:, d] = 0
        mul[i] = (prod[:, :k] % p) @ weights
    one = int(weights[0]) if k >= 1 else 0
    label = name or (f"GF({p},{poly_to_str(f)})" if require_field else f"Quot({p},{poly_to_str(f)})")
    labels = [poly_to_str(row) for row in E]
    return make_ring_from_tables(label, N, add, mul, one, labels=labels, validate=False)


# --- products --------------------------------------------------------------


def _product_tables(A: FiniteRing, B: FiniteRing):
    na, nb = A.order, B.order
    ia = np.repeat(np.arange(na), nb)
    ib = np.tile(np.arange(nb), na)
    add = A.add[np.ix_(ia, ia)].astype(np.int64) * nb + B.add[np.ix_(ib, ib)]
    mul = A.mul[np.ix_(ia, ia)].astype(np.int64) * nb + B.mul[np.ix_(ib, ib)]
    return add, mul, ia, ib


def direct_product(A: FiniteRing, B: FiniteRing, *, name: str | None = None, validate: bool = False) -> ConstructedRing:
    _cap(name or f"{A.name} x {B.name}", A.order * B.order)
    add, mul, ia, ib = _product_tables(A, B)
    labels = [f"({A.label(a)}, {B.label(b)})" for a, b in zip(ia, ib)]
    R = make_ring_from_tables(
        name or f"{A.name} x {B.name}", A.order * B.order, add, mul, A.one * B.order + B.one,
        labels=labels, validate=validate,
    )
    PA, PB = cached_prime_radical(A), cached_prime_radical(B)
    predicted = Subset.from_flags(R, PA.members[ia] & PB.members[ib])
    coords = tuple(zip(ia.tolist(), ib.tolist()))
    return ConstructedRing(R, predicted, coords, {"projections": (ia, ib)})


# --- matrix families -------------------------------------------------------


def _family_layout(kind: str, n: int) -> list[list[int | None]]:
    """Map each matrix position to a free-parameter number (or None for 0)."""
    layout: list[list[int | None]] = [[None] * n for _ in range(n)]
    keys: dict[Any, int] = {}
    for i in range(n):
        for j in range(n):
            if kind == "M":
                key: Any = (i, j)
            elif j < i:
                continue
            elif kind == "T":
                key = (i, j)
            elif kind == "S":
                key = "diag" if i == j else (i, j)
            elif kind == "V":
                key = j - i
            else:
                raise ValueError(kind)
            if key not in keys:
                keys[key] = len(keys)
            layout[i][j] = keys[key]
    return layout


def _matrix_family(R: FiniteRing, n: int, kind: str, name: str | None, validate: bool) -> ConstructedRing:
    if n < 1:
        raise RingError("matrix size must be >= 1")
    name = name or f"{kind}{n}({R.name})"
    layout = _family_layout(kind, n)
    m = 1 + max(v for row in layout for v in row if v is not None)
    q = R.order
    N = q**m
    _cap(name, N)
    weights = q ** np.arange(m - 1, -1, -1, dtype=np.int64)
    params = (np.arange(N, dtype=np.int64)[:, None] // weights[None, :]) % q  # (N, m)
    mats = np.zeros((N, n, n), dtype=np.int64)
    first_pos: dict[int, tuple[int, int]] = {}
    for i in range(n):
        for j in range(n):
            t = layout[i][j]
            if t is not None:
                mats[:, i, j] = params[:, t]
                first_pos.setdefault(t, (i, j))

    add = np.zeros((N, N), dtype=np.int64)
    for t in range(m):
        add += R.add[params[:, t][:, None], params[:, t][None, :]] * weights[t]

    mul = np.zeros((N, N), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            acc = np.zeros((N, N), dtype=np.int64)
            for l in range(n):
                acc = R.add[acc, R.mul[mats[:, i, l][:, None], mats[:, l, j][None, :]]]
            t = layout[i][j]
            if t is None:
                if np.any(acc != 0):
                    raise RingError(f"{name} is not closed under multiplication")
            elif first_pos[t] == (i, j):
                mul += acc * weights[t]
            elif not np.array_equal(acc, (mul // weights[t]) % q):
                raise RingError(f"{name} is not closed under multiplication")

    one_params = [0] * m
    for i in range(n):
        one_params[layout[i][i]] = R.one
    one = int(np.dot(one_params, weights))
    labels = [
        "[" + ",".join("[" + ",".join(R.label(e) for e in row) + "]" for row in mat) + "]" for mat in mats
    ]
    ring = make_ring_from_tables(name, N, add, mul, one, labels=labels, validate=validate)

    P = cached_prime_radical(R).members
    diag_params = sorted({layout[i][i] for i in range(n)})
    predicted = None
    if kind in ("T", "S", "V"):
        predicted = Subset.from_flags(ring, np.all(P[params[:, diag_params]], axis=1))
    coords = tuple(tuple(row) for row in params.tolist())
    extra: dict[str, Any] = {"layout": layout, "base": R, "size": n, "kind": kind}
    return ConstructedRing(ring, predicted, coords, extra)


def matrix_ring(R: FiniteRing, n: int, *, name: str | None = None, validate: bool = False) -> ConstructedRing:
    return _matrix_family(R, n, "M", name, validate)


def upper_triangular(R: FiniteRing, n: int, *, name: str | None = None, validate: bool = False) -> ConstructedRing:
    return _matrix_family(R, n, "T", name, validate)


def sn_ring(R: FiniteRing, n: int, *, name: str | None = None, validate: bool = False) -> ConstructedRing:
    return _matrix_family(R, n, "S", name, validate)


def vn_ring(R: FiniteRing, n: int, *, name: str | None = None, validate: bool = False) -> ConstructedRing:
    """V_n(R); the coordinate tuple (a_0, ..., a_{n-1}) doubles as the
    coefficient vector of the isomorphic image in R[x]/(x^n)."""
    cr = _matrix_family(R, n, "V", name, validate)
    cr.extra["poly_isomorphism"] = "coords are coefficients a_0..a_{n-1} of R[x]/(x^n)"
    return cr


def matrix_element(cr: ConstructedRing, entries: Sequence[Sequence[int]]) -> int:
    """Index of the family element with the given full matrix of base indices."""
    layout = cr.extra["layout"]
    n = cr.extra["size"]
    m = 1 + max(v for row in layout for v in row if v is not None)
    params: list[int | None] = [None] * m
    for i in range(n):
        for j in range(n):
            t = layout[i][j]
            if t is None:
                if entries[i][j] != 0:
                    raise RingError(f"entry ({i},{j}) must be zero in {cr.ring.name}")
            elif params[t] is None:
                params[t] = int(entries[i][j])
            elif params[t] != entries[i][j]:
                raise RingError(f"entry ({i},{j}) breaks the pattern of {cr.ring.name}")
    return cr.index_of(tuple(params))


# --- subrings, corners, pullbacks ------------------------------------------


def _restrict(R: FiniteRing, elems: np.ndarray, one: int, name: str, validate: bool):
    pos = np.full(R.order, -1, dtype=np.int64)
    pos[elems] = np.arange(elems.size)
    add = pos[R.add[np.ix_(elems, elems)]]
    mul = pos[R.mul[np.ix_(elems, elems)]]
    if (add < 0).any() or (mul < 0).any():
        raise NotASubring(f"{name}: subset not closed under the ring operations")
    labels = [R.label(e) for e in elems]
    S = make_ring_from_tables(name, int(elems.size), add, mul, int(pos[one]), labels=labels, validate=validate)
    return S, pos


def subring(R: FiniteRing, members: Iterable[int] | Subset, *, name: str | None = None, validate: bool = False):
    """Subring on the given elements (must contain 0 and 1); returns (ring, embedding)."""
    S = members if isinstance(members, Subset) else Subset.from_indices(R, members)
    if not is_subring(R, S):
        raise NotASubring(f"{S.indices()} is not a unital subring of {R.name}")
    elems = np.array(S.indices())
    ring, _ = _restrict(R, elems, R.one, name or f"sub({R.name})", validate)
    return ring, elems


def corner_ring(R: FiniteRing, e: int, *, name: str | None = None, validate: bool = False) -> ConstructedRing:
    if R.mul[e, e] != e:
        raise NotIdempotent(f"{R.label(e)} is not idempotent in {R.name}")
    elems = np.unique(R.mul[R.mul[e, :], e])
    ring, pos = _restrict(R, elems, e, name or f"corner({R.name}, {e})", validate)
    P = cached_prime_radical(R)
    pidx = np.array(P.indices())
    ePe = np.unique(R.mul[R.mul[e, pidx], e])
    predicted = Subset.from_indices(ring, pos[ePe].tolist())
    return ConstructedRing(ring, predicted, tuple(elems.tolist()), {"inclusion": elems})


def pullback_ring(R: FiniteRing, *, name: str | None = None, validate: bool = False) -> ConstructedRing:
    """S = {(x, y) in R x R : x - y in P(R)}."""
    name = name or f"pullback({R.name})"
    P = cached_prime_radical(R)
    _cap(name, R.order * len(P))
    n = R.order
    x, y = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    x, y = x.ravel(), y.ravel()
    keep = P.members[R.add[x, R.neg[y]]]
    x, y = x[keep], y[keep]
    code = x * n + y
    pos = np.full(n * n, -1, dtype=np.int64)
    pos[code] = np.arange(code.size)
    add = pos[R.add[np.ix_(x, x)].astype(np.int64) * n + R.add[np.ix_(y, y)]]
    mul = pos[R.mul[np.ix_(x, x)].astype(np.int64) * n + R.mul[np.ix_(y, y)]]
    labels = [f"({R.label(a)}, {R.label(b)})" for a, b in zip(x, y)]
    one = int(pos[R.one * n + R.one])
    ring = make_ring_from_tables(name, int(code.size), add, mul, one, labels=labels, validate=validate)
    predicted = Subset.from_flags(ring, P.members[x] & P.members[y])
    coords = tuple(zip(x.tolist(), y.tolist()))
    return ConstructedRing(ring, predicted, coords, {"projections": (x, y)})


def rab_truncated(
    A: FiniteRing, sub: Iterable[int] | Subset, L: int, *, name: str | None = None, validate: bool = False
) -> ConstructedRing:
    """Sequences (a_1, ..., a_L, b, b, ...) with a_i in A and b in the subring B.

    Realised as A^L x B with componentwise operations.
    """
    if L < 1:
        raise RingError("truncation length L must be >= 1")
    B, emb = subring(A, sub, name=f"sub({A.name})")
    sub_idx = emb.tolist()
    name = name or f"RAB({A.name}, sub=[{','.join(map(str, sub_idx))}], L={L})"
    _cap(name, A.order**L * B.order)
    acc = A
    for _ in range(L - 1):
        acc = direct_product(acc, A, name="acc").ring
    acc_n = acc.order
    add, mul, ia, ib = _product_tables(acc, B)
    total = acc_n * B.order
    seq = np.array(list(itertools.product(range(A.order), repeat=L)), dtype=np.int64).reshape(acc_n, L)
    coords = tuple(tuple(seq[i].tolist()) + (int(emb[j]),) for i, j in zip(ia, ib))
    labels = [
        "(" + ", ".join(A.label(v) for v in c[:-1]) + f"; {A.label(c[-1])}...)" for c in coords
    ]
    one = acc.one * B.order + B.one
    ring = make_ring_from_tables(name, total, add, mul, one, labels=labels, validate=validate)
    PA = cached_prime_radical(A).members
    PB = cached_prime_radical(B).members
    tail_ok = PA[emb] & PB  # P(A) ∩ P(B), indexed by B-elements
    head_ok = np.all(PA[seq], axis=1)
    predicted = Subset.from_flags(ring, head_ok[ia] & tail_ok[ib])
    extra = {"B": B, "embedding": emb, "L": L, "sub": sub_idx}
    return ConstructedRing(ring, predicted, coords, extra)


def localize(R: FiniteRing, S: Iterable[int]) -> ConstructedRing:
    """S^{-1}R for a multiplicative set of central units, which is R itself.

    In a finite ring every regular element is a unit, so this is the only case.
    """
    S = sorted({int(s) for s in S} | {R.one})
    ok = center(R).members & units(R).members
    bad = [s for s in S if not ok[s]]
    if bad:
        raise RingError(f"elements {bad} are not central units of {R.name}")
    closed = set(S)
    if any(int(R.mul[a, b]) not in closed for a in S for b in S):
        raise RingError("S is not multiplicatively closed")
    return ConstructedRing(R, cached_prime_radical(R), tuple(range(R.order)), {"identity_map": True})


def nontrivial_idempotents(R: FiniteRing) -> list[int]:
    return [e for e in idempotents(R).indices() if e not in (0, R.one)]
