"""Ring expressions: a small recursive-descent parser, printer and evaluator.

Grammar (whitespace between tokens is ignored)::

    expr    := term (("x" | "×") term)*
    term    := "Z" INT | "GF(" INT "," poly ")" | "Quot(" INT "," poly ")"
             | ("M" | "T" | "S" | "V") INT "(" expr ")"
             | "corner(" expr "," INT ")" | "pullback(" expr ")"
             | "RAB(" expr "," "sub" "=" intlist "," "L" "=" INT ")"
             | "quot(" expr "," "gens" "=" intlist ")"
             | "file(" PATH ")" | "(" expr ")"
    poly    := mono (("+" | "-") mono)*
    mono    := INT | [INT ["*"]] "x" ["^" INT]
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Union

from . import constructions as C
from .errors import ParseError, RingError
from .ideals import ideal_generated, quotient_ring
from .ring import FiniteRing, read_ring, relabel


@dataclass(frozen=True)
class Zmod:
    n: int


@dataclass(frozen=True)
class PolyQuot:
    p: int
    coeffs: tuple[int, ...]  # low degree first
    field: bool = False


@dataclass(frozen=True)
class MatrixFamily:
    kind: str  # one of M, T, S, V
    n: int
    arg: "Expr"


@dataclass(frozen=True)
class Product:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Corner:
    arg: "Expr"
    idempotent: int


@dataclass(frozen=True)
class Pullback:
    arg: "Expr"


@dataclass(frozen=True)
class RAB:
    arg: "Expr"
    sub: tuple[int, ...]
    length: int


@dataclass(frozen=True)
class QuotBy:
    arg: "Expr"
    gens: tuple[int, ...]


@dataclass(frozen=True)
class File:
    path: str


Expr = Union[Zmod, PolyQuot, MatrixFamily, Product, Corner, Pullback, RAB, QuotBy, File]

_KEYWORDS = ("GF", "Quot", "quot", "corner", "pullback", "RAB", "file")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, *expected: str, at: int | None = None):
        raise ParseError(self.pos if at is None else at, list(expected), self.text)

    def ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def eat(self, s: str) -> None:
        self.ws()
        if not self.text.startswith(s, self.pos):
            self.error(repr(s))
        self.pos += len(s)

    def try_eat(self, s: str) -> bool:
        self.ws()
        if self.text.startswith(s, self.pos):
            self.pos += len(s)
            return True
        return False

    def integer(self) -> int:
        self.ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("integer")
        return int(self.text[start : self.pos])

    def int_list(self) -> tuple[int, ...]:
        self.eat("[")
        vals: list[int] = []
        if self.try_eat("]"):
            return ()
        vals.append(self.integer())
        while self.try_eat(","):
            vals.append(self.integer())
        self.eat("]")
        return tuple(vals)

    def word(self) -> str:
        self.ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        return self.text[start : self.pos]

    # expr := term (x term)*
    def expr(self) -> Expr:
        node = self.term()
        while True:
            self.ws()
            if self.pos < len(self.text) and self.text[self.pos] in "x×":
                self.pos += 1
                node = Product(node, self.term())
            else:
                return node

    def term(self) -> Expr:
        self.ws()
        start = self.pos
        if self.try_eat("("):
            node = self.expr()
            self.eat(")")
            return node
        # single-letter constructors are immediately followed by digits
        if self.pos < len(self.text) and self.text[self.pos] in "ZMTSV" and self.pos + 1 < len(self.text) and self.text[self.pos + 1].isdigit():
            letter = self.text[self.pos]
            self.pos += 1
            n = self.integer()
            if letter == "Z":
                return Zmod(n)
            self.eat("(")
            arg = self.expr()
            self.eat(")")
            return MatrixFamily(letter, n, arg)
        name = self.word()
        if name not in _KEYWORDS:
            self.error("Z<n>", "M<n>(", "T<n>(", "S<n>(", "V<n>(", *(k + "(" for k in _KEYWORDS), "(", at=start)
        self.eat("(")
        if name in ("GF", "Quot"):
            p = self.integer()
            self.eat(",")
            coeffs = self.poly()
            self.eat(")")
            return PolyQuot(p, coeffs, field=name == "GF")
        if name == "file":
            return File(self.path())
        arg = self.expr()
        if name == "pullback":
            self.eat(")")
            return Pullback(arg)
        self.eat(",")
        if name == "corner":
            e = self.integer()
            self.eat(")")
            return Corner(arg, e)
        if name == "quot":
            self.eat("gens")
            self.eat("=")
            gens = self.int_list()
            self.eat(")")
            return QuotBy(arg, gens)
        # RAB
        self.eat("sub")
        self.eat("=")
        sub = self.int_list()
        self.eat(",")
        self.eat("L")
        self.eat("=")
        length = self.integer()
        self.eat(")")
        return RAB(arg, sub, length)

    def path(self) -> str:
        self.ws()
        start = self.pos
        depth = 0
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch == "(":
                depth += 1
            elif ch == ")":
                if depth == 0:
                    break
                depth -= 1
            self.pos += 1
        if self.pos >= len(self.text):
            self.error("')'")
        path = self.text[start : self.pos].strip()
        if not path:
            self.error("path", at=start)
        self.pos += 1
        return path

    def poly(self) -> tuple[int, ...]:
        terms: dict[int, int] = {}
        sign = -1 if self.try_eat("-") else 1
        while True:
            coef, deg = self.monomial()
            terms[deg] = terms.get(deg, 0) + sign * coef
            if self.try_eat("+"):
                sign = 1
            elif self.try_eat("-"):
                sign = -1
            else:
                break
        top = max((d for d, c in terms.items() if c), default=0)
        return tuple(terms.get(d, 0) for d in range(top + 1))

    def monomial(self) -> tuple[int, int]:
        ch = self.peek()
        coef = 1
        if ch.isdigit():
            coef = self.integer()
            if self.try_eat("*"):
                self.eat("x")
            elif self.peek() != "x":
                return coef, 0
            else:
                self.eat("x")
        elif ch == "x":
            self.eat("x")
        else:
            self.error("integer", "'x'")
        deg = self.integer() if self.try_eat("^") else 1
        return coef, deg


def parse_expression(text: str) -> Expr:
    p = _Parser(text)
    node = p.expr()
    p.ws()
    if p.pos != len(text):
        p.error("'x'", "end of input")
    return node


def to_string(node: Expr) -> str:
    """Canonical text; ``parse_expression(to_string(e)) == e``."""
    if isinstance(node, Zmod):
        return f"Z{node.n}"
    if isinstance(node, PolyQuot):
        head = "GF" if node.field else "Quot"
        return f"{head}({node.p},{C.poly_to_str(node.coeffs)})"
    if isinstance(node, MatrixFamily):
        return f"{node.kind}{node.n}({to_string(node.arg)})"
    if isinstance(node, Product):
        right = to_string(node.right)
        if isinstance(node.right, Product):
            right = f"({right})"
        return f"{to_string(node.left)} x {right}"
    if isinstance(node, Corner):
        return f"corner({to_string(node.arg)}, {node.idempotent})"
    if isinstance(node, Pullback):
        return f"pullback({to_string(node.arg)})"
    if isinstance(node, RAB):
        return f"RAB({to_string(node.arg)}, sub=[{','.join(map(str, node.sub))}], L={node.length})"
    if isinstance(node, QuotBy):
        return f"quot({to_string(node.arg)}, gens=[{','.join(map(str, node.gens))}])"
    if isinstance(node, File):
        return f"file({node.path})"
    raise TypeError(node)


def _has_file(node: Expr) -> bool:
    if isinstance(node, File):
        return True
    if isinstance(node, Product):
        return _has_file(node.left) or _has_file(node.right)
    arg = getattr(node, "arg", None)
    return arg is not None and _has_file(arg)


_cache: dict[str, C.ConstructedRing] = {}
_cache_lock = threading.Lock()


def _build(node: Expr, validate: bool) -> C.ConstructedRing:
    name = to_string(node)
    if isinstance(node, Zmod):
        R = C.ring_zmod(node.n, name=name)
        return C.ConstructedRing(R, None, tuple(range(R.order)))
    if isinstance(node, PolyQuot):
        R = C.polynomial_quotient_ring(node.p, node.coeffs, require_field=node.field, name=name)
        return C.ConstructedRing(R, None, tuple(range(R.order)))
    if isinstance(node, File):
        R = read_ring(node.path)
        R = relabel(R, name)
        return C.ConstructedRing(R, None, tuple(range(R.order)))
    if isinstance(node, MatrixFamily):
        base = evaluate(node.arg)
        build = {"M": C.matrix_ring, "T": C.upper_triangular, "S": C.sn_ring, "V": C.vn_ring}[node.kind]
        return build(base, node.n, name=name, validate=validate)
    if isinstance(node, Product):
        return C.direct_product(evaluate(node.left), evaluate(node.right), name=name, validate=validate)
    if isinstance(node, Corner):
        return C.corner_ring(evaluate(node.arg), node.idempotent, name=name, validate=validate)
    if isinstance(node, Pullback):
        return C.pullback_ring(evaluate(node.arg), name=name, validate=validate)
    if isinstance(node, RAB):
        return C.rab_truncated(evaluate(node.arg), node.sub, node.length, name=name, validate=validate)
    if isinstance(node, QuotBy):
        base = evaluate(node.arg)
        q = quotient_ring(base, ideal_generated(base, node.gens), name=name, validate=validate)
        return C.ConstructedRing(q.ring, None, tuple(q.representatives.tolist()), {"projection": q.projection})
    raise TypeError(node)


def evaluate_constructed(expr: str | Expr, *, validate: bool = False) -> C.ConstructedRing:
    node = parse_expression(expr) if isinstance(expr, str) else expr
    key = to_string(node)
    cacheable = not _has_file(node)
    if cacheable:
        with _cache_lock:
            hit = _cache.get(key)
        if hit is not None:
            return hit
    try:
        cr = _build(node, validate)
    except RingError as exc:
        msg = str(exc.args[0]) if exc.args else str(exc)
        if not msg.startswith(key):
            exc.args = (f"{key}: {msg}",) + exc.args[1:]
        raise
    if cacheable:
        with _cache_lock:
            cr = _cache.setdefault(key, cr)
    return cr


def evaluate(expr: str | Expr, *, validate: bool = False) -> FiniteRing:
    return evaluate_constructed(expr, validate=validate).ring


def clear_cache() -> None:
    with _cache_lock:
        _cache.clear()

