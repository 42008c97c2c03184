"""Exception types raised across ringlab."""

from __future__ import annotations


class RingError(Exception):
    """Base class for every error raised by ringlab."""


class AxiomViolation(RingError):
    """A ring axiom failed; ``witness`` is the least offending tuple."""

    def __init__(self, law: str, witness: tuple[int, ...]):
        self.law = law
        self.witness = tuple(int(w) for w in witness)
        super().__init__(f"{law} law fails at {self.witness}")


class DimensionMismatch(RingError):
    pass


class IndexOutOfRange(RingError):
    pass


class CapExceeded(RingError):
    def __init__(self, what: str, size: int, cap: int):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what}: size {size} exceeds cap {cap}")


class KindError(RingError):
    pass


class ImproperIdeal(RingError):
    pass


class NotIdempotent(RingError):
    pass


class NotASubring(RingError):
    pass


class NotPrime(RingError):
    pass


class NotMonic(RingError):
    pass


class NotIrreducible(RingError):
    pass


class OracleDisagreement(RingError):
    """Independent algorithms for the same radical returned different sets."""

    def __init__(self, results: dict[str, list[int]]):
        self.results = results
        super().__init__(f"radical algorithms disagree: {results}")


class EquivalenceBroken(RingError):
    pass


class ParseError(RingError):
    def __init__(self, offset: int, expected: list[str] | tuple[str, ...], text: str = ""):
        self.offset = offset
        self.expected = sorted(set(expected))
        self.text = text
        msg = f"parse error at offset {offset}: expected one of {', '.join(self.expected)}"
        if text:
            msg += f"\n  {text}\n  {' ' * offset}^"
        super().__init__(msg)
