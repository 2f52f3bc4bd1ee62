"""Monomials as exponent vectors, with the text format `x<i>^<e>` (1-based).

The canonical internal ordering is (degree, then reverse-lexicographic with
the largest monomial first), which makes all generator listings reproducible.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

from .exceptions import InputFormatError

_TOKEN = re.compile(r"^x(\d+)(?:\^(\d+))?$")


class Monomial:
    """Immutable exponent vector; the all-zero vector is the monomial 1."""

    __slots__ = ("exps", "_deg")

    def __init__(self, exps: Iterable[int]):
        exps = tuple(int(e) for e in exps)
        if any(e < 0 for e in exps):
            raise InputFormatError(f"negative exponent in {exps}")
        object.__setattr__(self, "exps", exps)
        object.__setattr__(self, "_deg", sum(exps))

    def __setattr__(self, *args):
        raise AttributeError("Monomial is immutable")

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def variable(cls, i: int, n: int, power: int = 1) -> "Monomial":
        if not 1 <= i <= n:
            raise InputFormatError(f"variable index {i} outside 1..{n}")
        return cls(tuple(power if k == i - 1 else 0 for k in range(n)))

    @property
    def n(self) -> int:
        return len(self.exps)

    @property
    def degree(self) -> int:
        return self._deg

    @property
    def support(self) -> tuple:
        """1-based indices of the variables that occur."""
        return tuple(i + 1 for i, e in enumerate(self.exps) if e)

    @property
    def support_mask(self) -> int:
        mask = 0
        for i, e in enumerate(self.exps):
            if e:
                mask |= 1 << i
        return mask

    @property
    def is_one(self) -> bool:
        return self._deg == 0

    @property
    def is_pure_power(self) -> bool:
        return sum(1 for e in self.exps if e) == 1

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exps)

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(a + b for a, b in zip(self.exps, other.exps))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(max(a, b) for a, b in zip(self.exps, other.exps))

    def coprime(self, other: "Monomial") -> bool:
        return all(a == 0 or b == 0 for a, b in zip(self.exps, other.exps))

    def exponent(self, i: int) -> int:
        return self.exps[i - 1]

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self) -> int:
        return hash(self.exps)

    def __repr__(self) -> str:
        return f"Monomial({format_monomial(self)!r})"

    def sort_key(self):
        """Sort key: degree ascending, then degrevlex-largest first."""
        return (self._deg, tuple(reversed(self.exps)))


def format_monomial(m: Monomial) -> str:
    if m.is_one:
        return "1"
    parts = []
    for i, e in enumerate(m.exps, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return " ".join(parts)


def parse_monomial(text: str, n: int | None = None) -> Monomial:
    """Parse whitespace-separated `x<i>^<e>` tokens; `1` is the unit monomial.

    With n=None the ambient size is the largest index seen.
    """
    tokens = text.split()
    if not tokens:
        raise InputFormatError("empty monomial")
    if tokens == ["1"]:
        if n is None:
            raise InputFormatError("unit monomial needs an explicit variable count")
        return Monomial.one(n)
    pairs = []
    for tok in tokens:
        match = _TOKEN.match(tok)
        if not match:
            raise InputFormatError(f"bad monomial token {tok!r}")
        idx = int(match.group(1))
        exp = int(match.group(2)) if match.group(2) else 1
        if idx < 1:
            raise InputFormatError(f"variable index must be >= 1 in {tok!r}")
        if exp < 1:
            raise InputFormatError(f"exponent must be >= 1 in {tok!r}")
        pairs.append((idx, exp))
    size = max(idx for idx, _ in pairs)
    if n is not None:
        if size > n:
            raise InputFormatError(f"variable x{size} outside ambient of {n} variables")
        size = n
    exps = [0] * size
    for idx, exp in pairs:
        exps[idx - 1] += exp
    return Monomial(exps)


def monomials_sorted(monomials: Iterable[Monomial]) -> tuple:
    return tuple(sorted(monomials, key=Monomial.sort_key))


def extend_to(m: Monomial, n: int) -> Monomial:
    """Reinterpret m in a larger ambient ring."""
    if m.n > n:
        raise InputFormatError(f"cannot shrink ambient from {m.n} to {n}")
    return Monomial(m.exps + (0,) * (n - m.n)) if m.n < n else m


def parse_monomial_lines(lines: Sequence[str], n: int | None = None) -> tuple:
    """Parse one monomial per line, skipping blanks and `#` comments."""
    raw = []
    for line in lines:
        body = line.split("#", 1)[0].strip()
        if body:
            raw.append(body)
    if not raw:
        raise InputFormatError("no monomials in input")
    parsed = [None if body.split() == ["1"] else parse_monomial(body, None) for body in raw]
    sizes = [m.n for m in parsed if m is not None]
    size = max(sizes) if sizes else 1
    if n is not None:
        if size > n:
            raise InputFormatError(f"input uses x{size} but ambient is {n}")
        size = n
    return tuple(Monomial.one(size) if m is None else extend_to(m, size) for m in parsed)
