"""Exact integer primitives: valuations, gcd, primality, orders."""

from __future__ import annotations

import functools
import math
from math import isqrt


class DomainError(ValueError):
    """An argument lies outside the domain of an operation.

    ``param`` names the offending argument so front ends can point at it.
    """

    def __init__(self, param: str, message: str):
        super().__init__(f"{param}: {message}")
        self.param = param
        self.message = message


@functools.total_ordering
class Valuation:
    """A p-adic exponent: a natural number, or infinity (the valuation of 0).

    Compares and adds with plain ints; infinity exceeds every finite value.
    """

    __slots__ = ("_exponent",)

    def __init__(self, exponent: int | None):
        if exponent is not None:
            exponent = int(exponent)
            if exponent < 0:
                raise DomainError("exponent", f"must be >= 0, got {exponent}")
        self._exponent = exponent

    @classmethod
    def infinite(cls) -> Valuation:
        return INFINITY

    @property
    def exponent(self) -> int | None:
        """The finite exponent, or None when infinite."""
        return self._exponent

    @property
    def is_infinite(self) -> bool:
        return self._exponent is None

    def __int__(self) -> int:
        if self._exponent is None:
            raise OverflowError("infinite valuation has no integer value")
        return self._exponent

    def _key(self):
        return math.inf if self._exponent is None else self._exponent

    @staticmethod
    def _coerce(other):
        if isinstance(other, Valuation):
            return other
        if isinstance(other, int) and not isinstance(other, bool) and other >= 0:
            return Valuation(other)
        return None

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._exponent == other._exponent

    def __lt__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._key() < other._key()

    def __hash__(self):
        return hash(self._key())

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_infinite or other.is_infinite:
            return INFINITY
        return Valuation(self._exponent + other._exponent)

    __radd__ = __add__

    def __repr__(self):
        return "Valuation(inf)" if self.is_infinite else f"Valuation({self._exponent})"

    def __str__(self):
        return "infinity" if self.is_infinite else str(self._exponent)


INFINITY = Valuation(None)


def _check_prime(p: int, param: str = "p") -> None:
    if not is_prime(p):
        raise DomainError(param, f"{p} is not prime")


def valuation(p: int, c: int) -> Valuation:
    """Largest e with p**e dividing c; infinite for c == 0."""
    _check_prime(p)
    if c == 0:
        return INFINITY
    c = abs(c)
    if p == 2:
        return Valuation((c & -c).bit_length() - 1)
    e = 0
    while c % p == 0:
        c //= p
        e += 1
    return Valuation(e)


def gcd(a: int, b: int) -> int:
    """Nonnegative gcd; undefined (rejected) for a == b == 0."""
    if a == 0 and b == 0:
        raise DomainError("a, b", "gcd(0, 0) is undefined")
    return math.gcd(a, b)


# Deterministic Miller-Rabin witness set, exact for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_LIMIT = 3_317_044_064_679_887_385_961_981
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def _miller_rabin(n: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int) -> bool:
    if n < 0:
        raise DomainError("n", f"must be >= 0, got {n}")
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    if n < _SMALL_PRIMES[-1] ** 2:
        return True
    if not _miller_rabin(n):
        return False
    if n < _MR_LIMIT:
        return True
    # A pass is only proof inside the witness range; settle it by trial division.
    return smallest_prime_factor(n) == n


def smallest_prime_factor(n: int) -> int:
    if n < 2:
        raise DomainError("n", f"must be >= 2, got {n}")
    if n % 2 == 0:
        return 2
    if n % 3 == 0:
        return 3
    limit = isqrt(n)
    d = 5
    while d <= limit:
        if n % d == 0:
            return d
        if n % (d + 2) == 0:
            return d + 2
        d += 6
    return n


def prime_factors(n: int) -> dict[int, int]:
    """Factorization of |n| >= 1 as {prime: exponent}, by trial division."""
    n = abs(n)
    if n == 0:
        raise DomainError("n", "0 has no factorization")
    out: dict[int, int] = {}
    while n > 1:
        p = smallest_prime_factor(n)
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        out[p] = e
    return out


@functools.lru_cache(maxsize=8)
def primes_up_to(bound: int) -> tuple[int, ...]:
    """All primes <= bound (sieve of Eratosthenes)."""
    if bound < 2:
        return ()
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes(len(range(i * i, bound + 1, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def divisors_up_to(n: int, bound: int) -> list[int]:
    """Sorted positive divisors d of n with d <= bound.

    Every integer in [1, bound] divides n == 0.
    """
    if bound < 1:
        return []
    n = abs(n)
    if n == 0:
        return list(range(1, bound + 1))
    # Only primes <= bound can occur in a divisor <= bound.
    factors = []
    m = n
    for p in primes_up_to(bound):
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
    else:
        # Whatever remains has only prime factors above bound.
        m = 1
    if 1 < m <= bound:
        factors.append((m, 1))
    divs = [1]
    for p, e in factors:
        new = []
        for d in divs:
            q = d
            for _ in range(e):
                q *= p
                if q > bound:
                    break
                new.append(q)
        divs.extend(new)
    return sorted(divs)


def mod_pow(base: int, exp: int, modulus: int) -> int:
    """base**exp reduced into [0, modulus); base may be negative."""
    if modulus < 1:
        raise DomainError("modulus", f"must be >= 1, got {modulus}")
    if exp < 0:
        raise DomainError("exp", f"must be >= 0, got {exp}")
    return pow(base % modulus, exp, modulus)


def modular_inverse(u: int, p: int) -> int:
    """v in [1, p) with u*v == 1 (mod p)."""
    _check_prime(p)
    if u % p == 0:
        raise DomainError("u", f"{p} divides {u}; no inverse exists")
    return pow(u, -1, p)


def multiplicative_order(u: int, p: int) -> int:
    """Least k >= 1 with u**k == 1 (mod p); always divides p - 1."""
    _check_prime(p)
    if u % p == 0:
        raise DomainError("u", f"{p} divides {u}; order is undefined")
    u %= p
    order = p - 1
    for q in prime_factors(order) if order > 1 else ():
        while order % q == 0 and pow(u, order // q, p) == 1:
            order //= q
    return order
