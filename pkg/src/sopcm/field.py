"""Prime field arithmetic (coefficients for the Groebner engine and homology)."""

from __future__ import annotations

from dataclasses import dataclass

from .exceptions import InputFormatError

DEFAULT_CHARACTERISTIC = 32003

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(m: int) -> bool:
    """Deterministic Miller-Rabin, valid for every machine-word modulus."""
    if m < 2:
        return False
    for q in _SMALL_PRIMES:
        if m % q == 0:
            return m == q
    d, s = m - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeField:
    """GF(p) with a word-sized prime modulus (default 32003)."""

    p: int = DEFAULT_CHARACTERISTIC

    def __post_init__(self):
        if not is_prime(self.p):
            raise InputFormatError(f"field characteristic {self.p} is not prime")
        if self.p.bit_length() > 31:
            raise InputFormatError(f"characteristic {self.p} too large for safe multiplication")

    def normalize(self, a: int) -> int:
        return a % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in GF(p)")
        return pow(a, self.p - 2, self.p)

    def neg(self, a: int) -> int:
        return -a % self.p
