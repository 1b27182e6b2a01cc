import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import gcd_by_enumeration, is_prime_by_trial, order_by_powers, spf_sieve, valuation_by_scan
from powdiv.arith import (
    INFINITY,
    DomainError,
    Valuation,
    divisors_up_to,
    gcd,
    is_prime,
    mod_pow,
    modular_inverse,
    multiplicative_order,
    prime_factors,
    primes_up_to,
    smallest_prime_factor,
    valuation,
)

SMALL_PRIMES = [p for p in range(2, 1000) if is_prime_by_trial(p)]


@pytest.mark.parametrize(
    "p, c, expected",
    [(3, 54, 3), (5, 7, 0), (2, 96, 5), (2, -96, 5), (7, 7**20 * 3, 20)],
)
def test_valuation_examples(p, c, expected):
    assert valuation(p, c) == expected
    assert valuation_by_scan(p, c) == expected


def test_valuation_of_zero_is_infinite():
    v = valuation(2, 0)
    assert v.is_infinite and v is INFINITY
    assert str(v) == "infinity"


def test_valuation_rejects_composite_base():
    with pytest.raises(DomainError) as exc:
        valuation(4, 8)
    assert exc.value.param == "p"


@given(st.sampled_from(SMALL_PRIMES), st.integers(-(10**6), 10**6).filter(bool))
def test_valuation_matches_scan(p, c):
    v = valuation(p, c)
    assert v.exponent == valuation_by_scan(p, c)
    assert c % p**v.exponent == 0 and c % p ** (v.exponent + 1) != 0


def test_valuation_exhaustive_small():
    for p in (2, 3, 5, 7, 11):
        for c in range(-3000, 3001):
            if c:
                assert valuation(p, c).exponent == valuation_by_scan(p, c)


class TestValuationType:
    def test_infinity_exceeds_finite(self):
        assert INFINITY > Valuation(10**9)
        assert INFINITY > 10**9
        assert Valuation(3) < INFINITY
        assert max(Valuation(2), INFINITY, Valuation(7)) is INFINITY

    def test_addition(self):
        assert Valuation(2) + Valuation(3) == 5
        assert Valuation(2) + 1 == Valuation(3)
        assert (INFINITY + 4).is_infinite
        assert (4 + INFINITY).is_infinite

    def test_equality_and_hash(self):
        assert Valuation(3) == 3
        assert Valuation(3) != INFINITY
        assert Valuation(None) == INFINITY
        assert len({Valuation(1), Valuation(1), INFINITY, Valuation(None)}) == 2

    def test_int_conversion(self):
        assert int(Valuation(4)) == 4
        with pytest.raises(OverflowError):
            int(INFINITY)

    def test_negative_rejected(self):
        with pytest.raises(DomainError):
            Valuation(-1)


@pytest.mark.parametrize("a, b, expected", [(12, -18, 6), (1, 0, 1), (2, 1, 1), (0, -5, 5)])
def test_gcd_examples(a, b, expected):
    assert gcd(a, b) == expected
    assert gcd_by_enumeration(a, b) == expected


def test_gcd_zero_zero_rejected():
    with pytest.raises(DomainError):
        gcd(0, 0)


def test_gcd_invariants_exhaustive():
    for a in range(-100, 101):
        for b in range(-100, 101):
            if a == 0 and b == 0:
                continue
            g = gcd(a, b)
            assert g == gcd(b, a) == gcd(abs(a), abs(b))
            assert a % g == 0 and b % g == 0


def test_gcd_matches_enumeration_sample():
    for a in range(-30, 31):
        for b in range(-30, 31):
            if a or b:
                assert gcd(a, b) == gcd_by_enumeration(a, b)


@pytest.mark.parametrize("n, expected", [(0, False), (1, False), (2, True), (91, False), (97, True)])
def test_is_prime_examples(n, expected):
    assert is_prime(n) is expected


def test_is_prime_matches_trial_division():
    for n in range(0, 20000):
        assert is_prime(n) == is_prime_by_trial(n), n


@pytest.mark.parametrize(
    "n",
    [
        561,  # Carmichael
        3215031751,  # strong pseudoprime to bases 2, 3, 5, 7
        3825123056546413051,  # strong pseudoprime to bases 2..23
        318665857834031151167461,  # strong pseudoprime to bases 2..37
        (2**61 - 1) * (2**31 - 1),
    ],
)
def test_is_prime_rejects_pseudoprimes(n):
    assert not is_prime(n)


@pytest.mark.parametrize("n", [2**31 - 1, 2**61 - 1, 10**18 + 9, 1000000000039])
def test_is_prime_accepts_large_primes(n):
    assert is_prime(n)


def test_is_prime_beyond_witness_range():
    assert not is_prime(3 * 10**30)
    assert not is_prime(10**25 + 1)


def test_is_prime_negative_rejected():
    with pytest.raises(DomainError):
        is_prime(-7)


@pytest.mark.parametrize("n, expected", [(15, 3), (7, 7), (2**10, 2), (91, 7), (10403, 101)])
def test_smallest_prime_factor_examples(n, expected):
    assert smallest_prime_factor(n) == expected


def test_smallest_prime_factor_matches_sieve():
    limit = 10**5
    spf = spf_sieve(limit)
    for n in range(2, limit + 1):
        q = smallest_prime_factor(n)
        assert q == spf[n]
        assert n % q == 0 and is_prime(q)


@pytest.mark.parametrize("n", [1, 0, -4])
def test_smallest_prime_factor_rejects_small(n):
    with pytest.raises(DomainError):
        smallest_prime_factor(n)


def test_prime_factors_roundtrip():
    for n in range(1, 3000):
        product = 1
        for p, e in prime_factors(n).items():
            assert is_prime(p)
            product *= p**e
        assert product == n


def test_primes_up_to_matches_trial():
    assert list(primes_up_to(5000)) == [n for n in range(5001) if is_prime_by_trial(n)]
    assert primes_up_to(1) == ()


@pytest.mark.parametrize("n", [0, 1, 12, 720720, 2**40, 2 * 3**20 * 9973, 10**12 + 39, -360])
def test_divisors_up_to_matches_scan(n):
    bound = 10**4
    assert divisors_up_to(n, bound) == [d for d in range(1, bound + 1) if n % d == 0]


@pytest.mark.parametrize(
    "base, exp, modulus, expected",
    [(2, 3, 9, 8), (-1, 3, 9, 8), (3, 2, 8, 1), (5, 0, 1, 0), (5, 0, 7, 1)],
)
def test_mod_pow_examples(base, exp, modulus, expected):
    assert mod_pow(base, exp, modulus) == expected


def test_mod_pow_huge_modulus():
    m = 100**100
    assert mod_pow(99, 100, m) == 99**100 % m
    assert mod_pow(-99, 101, m) == (-99) ** 101 % m


@given(st.integers(-(10**6), 10**6), st.integers(0, 64), st.integers(1, 10**9))
def test_mod_pow_matches_direct(base, exp, modulus):
    r = mod_pow(base, exp, modulus)
    assert 0 <= r < modulus
    assert r == base**exp % modulus


def test_mod_pow_rejects_bad_modulus():
    with pytest.raises(DomainError) as exc:
        mod_pow(2, 3, 0)
    assert exc.value.param == "modulus"


@pytest.mark.parametrize("u, p, expected", [(2, 7, 3), (1, 5, 1), (3, 7, 6), (-1, 7, 2), (10, 7, 6)])
def test_multiplicative_order_examples(u, p, expected):
    assert multiplicative_order(u, p) == expected


def test_multiplicative_order_brute_force():
    for p in (q for q in range(2, 201) if is_prime_by_trial(q)):
        for u in range(1, p):
            k = multiplicative_order(u, p)
            assert k == order_by_powers(u, p)
            assert (p - 1) % k == 0


def test_multiplicative_order_errors():
    with pytest.raises(DomainError):
        multiplicative_order(14, 7)
    with pytest.raises(DomainError):
        multiplicative_order(2, 9)


@pytest.mark.parametrize("u, p, expected", [(3, 7, 5), (1, 13, 1), (6, 7, 6), (-1, 7, 6)])
def test_modular_inverse_examples(u, p, expected):
    assert modular_inverse(u, p) == expected


def test_modular_inverse_brute_force():
    for p in (q for q in range(2, 120) if is_prime_by_trial(q)):
        for u in range(1, p):
            v = modular_inverse(u, p)
            assert 1 <= v < p and u * v % p == 1


def test_modular_inverse_rejects_multiple_of_p():
    with pytest.raises(DomainError):
        modular_inverse(21, 7)
