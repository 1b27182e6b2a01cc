"""Divisibility of a^n ± b^n by n^k: R-set enumeration and theorem searches.

All searches partition the n-range into contiguous blocks. With ``jobs > 1``
the blocks run in a process pool; results are merged and sorted, so the
output never depends on the schedule.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd

from .arith import DomainError, mod_pow

THEOREM1_PART_I = ((1, 1, 2), (2, 2, 2), (4, 4, 2), (2, 1, 3))
THEOREM1_PART_II = ((3, 1, 2), (2, -1, 3))
COROLLARY_PAIRS = ((1, 2), (2, 3))


class Sign(enum.Enum):
    PLUS = "plus"
    MINUS = "minus"

    @property
    def symbol(self) -> str:
        return "+" if self is Sign.PLUS else "-"

    @classmethod
    def parse(cls, text: str) -> Sign:
        try:
            return {"plus": cls.PLUS, "+": cls.PLUS, "minus": cls.MINUS, "-": cls.MINUS}[text]
        except KeyError:
            raise DomainError("sign", f"expected 'plus' or 'minus', got {text!r}") from None


class Part(enum.Enum):
    PART_I = "i"
    PART_II = "ii"


@dataclass(frozen=True)
class SignedPower:
    """The question: does n**k divide a**n ± b**n?"""

    a: int
    b: int
    n: int
    k: int
    sign: Sign

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("n", f"must be >= 1, got {self.n}")
        if self.k < 0:
            raise DomainError("k", f"must be >= 0, got {self.k}")


def _member(a: int, b: int, n: int, k: int, minus: bool) -> bool:
    if k == 0 or n == 1:
        return True
    # n | a^n ± b^n is necessary and far cheaper than working mod n^k.
    first = pow(a, n, n) - pow(b, n, n) if minus else pow(a, n, n) + pow(b, n, n)
    if first % n:
        return False
    if k == 1:
        return True
    m = n**k
    total = pow(a, n, m) - pow(b, n, m) if minus else pow(a, n, m) + pow(b, n, m)
    return total % m == 0


def divides_signed_power(q: SignedPower) -> bool:
    m = q.n**q.k
    u, v = mod_pow(q.a, q.n, m), mod_pow(q.b, q.n, m)
    return (u + v if q.sign is Sign.PLUS else u - v) % m == 0


def divides(a: int, b: int, n: int, k: int, sign: Sign) -> bool:
    """Shorthand for ``divides_signed_power(SignedPower(a, b, n, k, sign))``."""
    return divides_signed_power(SignedPower(a, b, n, k, sign))


def _blocks(lo: int, hi: int, parts: int) -> list[tuple[int, int]]:
    if hi < lo:
        return []
    parts = max(1, min(parts, hi - lo + 1))
    size, extra = divmod(hi - lo + 1, parts)
    out, start = [], lo
    for i in range(parts):
        end = start + size + (1 if i < extra else 0) - 1
        out.append((start, end))
        start = end + 1
    return out


def _fan_out(worker, lo: int, hi: int, args: tuple, jobs: int) -> list:
    if jobs < 1:
        raise DomainError("jobs", f"must be >= 1, got {jobs}")
    if jobs == 1:
        return worker(*args, lo, hi)
    # Several blocks per worker evens out the cost growth with n.
    blocks = _blocks(lo, hi, 4 * jobs)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(worker, *args, b_lo, b_hi) for b_lo, b_hi in blocks]
        return [item for f in futures for item in f.result()]


@dataclass(frozen=True)
class RSetReport:
    """R_k^sign(a, b) intersected with [1, n_max]."""

    a: int
    b: int
    k: int
    sign: Sign
    n_max: int
    elements: tuple[int, ...]
    complete_up_to: int

    @property
    def largest(self) -> int:
        return self.elements[-1]


def _rset_block(a, b, k, minus, lo, hi):
    return [n for n in range(lo, hi + 1) if _member(a, b, n, k, minus)]


def rset_enumerate(a: int, b: int, k: int, sign: Sign, n_max: int, *, jobs: int = 1) -> RSetReport:
    if n_max < 1:
        raise DomainError("n_max", f"must be >= 1, got {n_max}")
    if k < 0:
        raise DomainError("k", f"must be >= 0, got {k}")
    found = _fan_out(_rset_block, 1, n_max, (a, b, k, sign is Sign.MINUS), jobs)
    return RSetReport(a, b, k, sign, n_max, tuple(sorted(found)), n_max)


@dataclass(frozen=True)
class Triple:
    a: int
    b: int
    n: int
    delta: int
    alpha: int
    beta: int
    part: Part

    @classmethod
    def of(cls, a: int, b: int, n: int, part: Part) -> Triple:
        d = gcd(a, b)
        return cls(a, b, n, d, a // d, b // d, part)

    @property
    def abn(self) -> tuple[int, int, int]:
        return self.a, self.b, self.n

    def sort_key(self):
        return self.n, self.a, self.b


@dataclass(frozen=True)
class SearchWindow:
    a_max: int = 1
    n_max: int = 1
    m_max: int = 1

    def __post_init__(self):
        for name in ("a_max", "n_max", "m_max"):
            value = getattr(self, name)
            if value < 1:
                raise DomainError(name, f"must be >= 1, got {value}")


def _theorem_block(minus, a_max, relaxed, lo, hi):
    out = []
    for n in range(lo, hi + 1):
        even = n % 2 == 0
        # Residues of b^n mod n for every b in [-a_max, a_max], offset by a_max.
        small = [pow(b, n, n) for b in range(-a_max, a_max + 1)]
        for a in range(1, a_max + 1):
            big = n**a
            a_small = small[a + a_max]
            a_big = None
            for b in range(0 if even else -a, a + 1):
                if minus:
                    if b == a:
                        continue
                    if (a_small - small[b + a_max]) % n:
                        continue
                else:
                    if b == -a:
                        continue
                    if (a_small + small[b + a_max]) % n:
                        continue
                if a_big is None:
                    a_big = pow(a, n, big)
                b_big = pow(b, n, big)
                if (a_big - b_big if minus else a_big + b_big) % big:
                    continue
                if not relaxed:
                    d = gcd(a, b)
                    if not _member(a // d, b // d, n, a // d, minus):
                        continue
                out.append((a, b, n))
    return out


def _verify_theorem1(window, part, relaxed, jobs):
    found = _fan_out(_theorem_block, 2, window.n_max, (part is Part.PART_II, window.a_max, relaxed), jobs)
    triples = [Triple.of(a, b, n, part) for a, b, n in found]
    return sorted(triples, key=Triple.sort_key)


def verify_theorem1_part_i(window: SearchWindow, *, relaxed: bool = False, jobs: int = 1) -> list[Triple]:
    """All (a, b, n) in the window with n^a | a^n + b^n and n^α | α^n + β^n.

    The search covers 2 <= n <= n_max, 1 <= a <= a_max, |b| <= a, with b >= 0
    for even n and b != -a for odd n. ``relaxed`` drops the condition on
    (α, β).
    """
    return _verify_theorem1(window, Part.PART_I, relaxed, jobs)


def verify_theorem1_part_ii(window: SearchWindow, *, relaxed: bool = False, jobs: int = 1) -> list[Triple]:
    """As for part (i) with differences, excluding b == a instead of b == -a."""
    return _verify_theorem1(window, Part.PART_II, relaxed, jobs)


def _corollary_block(m_max, lo, hi):
    out = []
    for n in range(lo, hi + 1):
        for m in range(1, m_max + 1):
            if (pow(m, n, n) + 1) % n:
                continue
            mod = n**m
            if (pow(m, n, mod) + 1) % mod == 0:
                out.append((m, n))
    return out


def verify_corollary(window: SearchWindow, *, jobs: int = 1) -> list[tuple[int, int]]:
    """All (m, n) with m <= m_max, 2 <= n <= n_max and n^m | m^n + 1.

    n == 1 is left out: it holds for every m. Sorted by (n, m).
    """
    found = _fan_out(_corollary_block, 2, window.n_max, (window.m_max,), jobs)
    return sorted(found, key=lambda mn: (mn[1], mn[0]))


def _within(window: SearchWindow, triples):
    return sorted(
        ((a, b, n) for a, b, n in triples if a <= window.a_max and 2 <= n <= window.n_max),
        key=lambda t: (t[2], t[0], t[1]),
    )


def expected_theorem1_part_i(window: SearchWindow) -> list[tuple[int, int, int]]:
    return _within(window, THEOREM1_PART_I)


def expected_theorem1_part_ii(window: SearchWindow) -> list[tuple[int, int, int]]:
    return _within(window, THEOREM1_PART_II)


def expected_corollary(window: SearchWindow) -> list[tuple[int, int]]:
    return sorted(
        ((m, n) for m, n in COROLLARY_PAIRS if m <= window.m_max and 2 <= n <= window.n_max),
        key=lambda mn: (mn[1], mn[0]),
    )


def canonical_pair(a: int, b: int, n: int) -> tuple[int, int]:
    """Rewrite (a, b) as (a', b') with a' >= |b'| and b' >= 0 for even n.

    Membership of n in R_k^±(a, b) is unchanged: swapping a and b only
    flips the sign of a difference, negating both flips it by (-1)^n, and
    b^n == (-b)^n for even n.
    """
    if abs(b) > abs(a):
        a, b = b, a
    if a < 0:
        a, b = -a, -b
    if n % 2 == 0:
        b = abs(b)
    return a, b


def theorem1_predicted_members(a: int, b: int, sign: Sign) -> list[int]:
    """Members of R_k^sign(a, b) for k = max(|a|, |b|) forced by Theorem 1.

    For coprime a, b with max(|a|, |b|) >= 2 these are n = 1 plus the n of
    any theorem triple the pair normalizes to.
    """
    if gcd(a, b) != 1 or max(abs(a), abs(b)) < 2:
        raise DomainError("a, b", "needs gcd(a, b) == 1 and max(|a|, |b|) >= 2")
    triples = THEOREM1_PART_I if sign is Sign.PLUS else THEOREM1_PART_II
    extra = {n for ta, tb, n in triples if canonical_pair(a, b, n) == (ta, tb)}
    return sorted({1} | extra)


@dataclass(frozen=True)
class FinitenessReport:
    plus: RSetReport
    minus: RSetReport

    @property
    def largest_plus(self) -> int:
        return self.plus.largest

    @property
    def largest_minus(self) -> int:
        return self.minus.largest


def finiteness_report(a: int, b: int, k: int, n_max: int, *, jobs: int = 1) -> FinitenessReport:
    """Both R-sets up to n_max under gcd(a, b) == 1, |ab| >= 2 and k >= 3.

    Nothing is claimed beyond n_max.
    """
    if a == 0 and b == 0 or gcd(a, b) != 1:
        raise DomainError("a, b", f"gcd({a}, {b}) != 1")
    if abs(a * b) < 2:
        raise DomainError("a, b", f"|ab| = {abs(a * b)} < 2")
    if k < 3:
        raise DomainError("k", f"must be >= 3, got {k}")
    return FinitenessReport(
        rset_enumerate(a, b, k, Sign.PLUS, n_max, jobs=jobs),
        rset_enumerate(a, b, k, Sign.MINUS, n_max, jobs=jobs),
    )
