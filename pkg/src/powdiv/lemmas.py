"""Lifting-the-exponent and the auxiliary divisibility lemmas.

Each closed-form procedure here has a brute-force twin (``lte_oracle``,
``lemma2_oracle``) that never touches the formula it is meant to check.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import isqrt

from .arith import DomainError, Valuation, gcd, is_prime, prime_factors, valuation


class PremiseError(DomainError):
    """A hypothesis of a lemma is not met by the given arguments."""


class LteBranch(enum.Enum):
    ODD_CASE = "odd"
    EVEN_TWO_CASE = "even-two"
    INAPPLICABLE = "inapplicable"


@dataclass(frozen=True)
class LtePremise:
    x: int
    y: int
    ell: int
    p: int

    def check(self) -> None:
        """Raise PremiseError naming the first violated hypothesis."""
        if self.ell < 1:
            raise PremiseError("ell", f"must be >= 1, got {self.ell}")
        if not is_prime(self.p):
            raise PremiseError("p", f"{self.p} is not prime")
        if (self.x * self.y) % self.p == 0:
            raise PremiseError("p", f"p | xy violates p ∤ xy (x={self.x}, y={self.y}, p={self.p})")
        if (self.x - self.y) % self.p != 0:
            raise PremiseError("p", f"p ∤ x-y (x={self.x}, y={self.y}, p={self.p})")


def lte_classify(premise: LtePremise) -> LteBranch:
    premise.check()
    x, y, ell, p = premise.x, premise.y, premise.ell, premise.p
    if p >= 3 or ell % 2 == 1 or (x - y) % 4 == 0:
        return LteBranch.ODD_CASE
    if p == 2 and ell % 2 == 0 and valuation(2, x - y) == 1:
        return LteBranch.EVEN_TWO_CASE
    return LteBranch.INAPPLICABLE


def lte_valuation(premise: LtePremise) -> Valuation:
    """e_p(x**ell - y**ell) by the closed form of the matching branch.

    Infinite only in the 2-adic even branch with x == -y, where the
    difference of powers really is 0.
    """
    branch = lte_classify(premise)
    x, y, ell, p = premise.x, premise.y, premise.ell, premise.p
    if x == y:
        raise PremiseError("x, y", "x == y makes x^ell - y^ell vanish")
    if branch is LteBranch.ODD_CASE:
        return valuation(p, x - y) + valuation(p, ell)
    if branch is LteBranch.EVEN_TWO_CASE:
        return valuation(2, x + y) + valuation(2, ell)
    raise AssertionError(f"no LTE branch covers {premise}")


def lte_oracle(premise: LtePremise) -> Valuation:
    """e_p(x**ell - y**ell) computed from the expanded difference."""
    x, y, ell, p = premise.x, premise.y, premise.ell, premise.p
    if x == y:
        raise PremiseError("x, y", "x == y makes x^ell - y^ell vanish")
    if ell < 1:
        raise PremiseError("ell", f"must be >= 1, got {ell}")
    return valuation(p, x**ell - y**ell)


@dataclass(frozen=True)
class OddPrimeBranch:
    """Conclusions for an odd prime p | gcd(z, ell) with gcd(ell, p - 1) == 1."""

    p: int
    p_divides_x_plus_y: bool
    ell_odd: bool
    bound_holds: bool

    @property
    def holds(self) -> bool:
        return self.p_divides_x_plus_y and self.ell_odd and self.bound_holds


@dataclass(frozen=True)
class Lemma2Report:
    x: int
    y: int
    z: int
    ell: int
    coprime_ok: bool
    no_q_divides_difference: bool
    four_does_not_divide_z: bool
    odd_prime_branches: tuple[OddPrimeBranch, ...] = ()

    @property
    def odd_prime_branch(self) -> OddPrimeBranch | None:
        """The branch for the smallest qualifying prime, if any."""
        return self.odd_prime_branches[0] if self.odd_prime_branches else None

    @property
    def holds(self) -> bool:
        return (
            self.coprime_ok
            and self.no_q_divides_difference
            and self.four_does_not_divide_z
            and all(b.holds for b in self.odd_prime_branches)
        )


def lemma_divides_check(x: int, y: int, z: int, ell: int) -> Lemma2Report:
    """Evaluate every conclusion for z | x**ell + y**ell with gcd(x, y) == 1.

    Precondition failures raise PremiseError. A False field in the returned
    report is a counterexample to the lemma, never a usage problem.
    """
    if ell < 1:
        raise PremiseError("ell", f"must be >= 1, got {ell}")
    if z == 0:
        raise PremiseError("z", "z must be nonzero")
    if gcd(x, y) != 1:
        raise PremiseError("x, y", f"gcd({x}, {y}) != 1")
    if (x**ell + y**ell) % z != 0:
        raise PremiseError("z", f"{z} does not divide {x}^{ell} + {y}^{ell}")

    primes = sorted(prime_factors(z)) if abs(z) > 1 else []
    coprime_ok = gcd(x * y, z) == 1
    # Every q >= 3 dividing z is a multiple of an odd prime factor of z or of 4.
    moduli = [q for q in primes if q >= 3] + ([4] if z % 4 == 0 else [])
    no_q = all((pow(x, ell, q) - pow(y, ell, q)) % q != 0 for q in moduli)
    four_ok = ell % 2 == 1 or z % 4 != 0

    branches = []
    for p in primes:
        if p == 2 or ell % p != 0 or gcd(ell, p - 1) != 1:
            continue
        branches.append(
            OddPrimeBranch(
                p=p,
                p_divides_x_plus_y=(x + y) % p == 0,
                ell_odd=ell % 2 == 1,
                bound_holds=valuation(p, z) <= valuation(p, x + y) + valuation(p, ell),
            )
        )
    return Lemma2Report(x, y, z, ell, coprime_ok, no_q, four_ok, tuple(branches))


def lemma2_solve(z: int) -> tuple[int, int] | None:
    """The odd pair x > y >= 0 with x^2 - y^2 == 2^z, or None if z < 3."""
    if z < 0:
        raise DomainError("z", f"must be >= 0, got {z}")
    if z < 3:
        return None
    h = 1 << (z - 2)
    return h + 1, h - 1


def lemma2_oracle(z: int, bound: int) -> list[tuple[int, int]]:
    """All odd 0 <= y < x <= bound with x^2 - y^2 == 2^z, by scanning x."""
    if z < 0:
        raise DomainError("z", f"must be >= 0, got {z}")
    if bound < 0:
        raise DomainError("bound", f"must be >= 0, got {bound}")
    target = 1 << z
    found = []
    for x in range(1, bound + 1, 2):
        rest = x * x - target
        if rest < 0:
            continue
        y = isqrt(rest)
        if y * y == rest and y % 2 == 1:
            found.append((x, y))
    return found
