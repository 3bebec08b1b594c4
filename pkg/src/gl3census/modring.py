"""Exact residue arithmetic over Z/n: factorization, units, inverses, quadratic residues.

Everything here is plain integer arithmetic; no floating point is used anywhere
in the package. Counts and intermediate values are ordinary Python ints, which
are unbounded.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class NotAUnit(ArithmeticError):
    """Raised when asked to invert a residue that shares a factor with the modulus."""


def is_prime(n: int) -> bool:
    """Trial-division primality test (desk-scale inputs only)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Modulus:
    """A modulus n >= 1 together with its prime factorization.

    ``factors`` holds (prime, exponent) pairs with strictly increasing primes
    whose prime powers multiply back to n; it is empty exactly when n == 1.
    """

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"modulus must be a positive integer, got {self.n}")
        prod = 1
        prev = 1
        for p, k in self.factors:
            if p <= prev:
                raise ValueError("prime factors must be strictly increasing")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            if k < 1:
                raise ValueError(f"exponent of {p} must be >= 1")
            prev = p
            prod *= p**k
        if prod != self.n:
            raise ValueError(f"factors {self.factors} do not multiply to {self.n}")

    def residue(self, value: int) -> "Residue":
        return Residue(value, self)

    def __str__(self) -> str:
        return f"Z/{self.n}"


@dataclass(frozen=True)
class Residue:
    """A canonical representative in [0, n) of a residue class mod n.

    Inputs are reduced on construction, so two equal residue classes always
    compare equal.
    """

    value: int
    modulus: Modulus

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", self.value % self.modulus.n)

    def __int__(self) -> int:
        return self.value


def factorize(n: int) -> Modulus:
    """Factor n >= 1 by trial division up to sqrt(n)."""
    if n < 1:
        raise ValueError(f"cannot factor {n}; need a positive integer")
    m = n
    factors = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            k = 0
            while m % d == 0:
                m //= d
                k += 1
            factors.append((d, k))
        d += 1 if d == 2 else 2
    if m > 1:
        factors.append((m, 1))
    return Modulus(n, tuple(factors))


def residue(value: int, n: int) -> Residue:
    """Convenience constructor: the class of ``value`` in Z/n."""
    return Residue(value, factorize(n))


def is_unit(a: Residue) -> bool:
    return math.gcd(a.value, a.modulus.n) == 1


def mod_inv(a: Residue) -> Residue:
    """Multiplicative inverse of a unit; raises NotAUnit otherwise."""
    try:
        inv = pow(a.value, -1, a.modulus.n)
    except ValueError as exc:
        raise NotAUnit(f"{a.value} is not invertible mod {a.modulus.n}") from exc
    return Residue(inv, a.modulus)


def totient(m: Modulus | int) -> int:
    """Euler's totient, computed from the factorization."""
    if isinstance(m, int):
        m = factorize(m)
    t = 1
    for p, k in m.factors:
        t *= p ** (k - 1) * (p - 1)
    return t


def is_quadratic_residue(a: Residue | int, p: int) -> bool:
    """Euler's criterion on an odd prime p.

    Returns True iff a is a nonzero square mod p; zero counts as a non-residue.
    """
    if p == 2:
        raise ValueError("quadratic residue test requires an odd prime, got 2")
    if not is_prime(p):
        raise ValueError(f"quadratic residue test requires a prime, got {p}")
    v = (a.value if isinstance(a, Residue) else a) % p
    return v != 0 and pow(v, (p - 1) // 2, p) == 1
