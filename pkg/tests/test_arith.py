import math
import random

import pytest

from src.arith import (
    Factorization,
    Residue,
    factorize,
    inv_mod,
    is_prime,
    jacobi,
    kronecker,
    mod_inv,
    mod_pow,
    multiplicative_order,
    prime_count,
    primes_in_range,
)
from src.utlis.errors import BoundViolationError, InvalidArgumentError, NotInvertibleError


def _euler(a: int, p: int) -> int:
    r = pow(a, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


@pytest.mark.parametrize("a, n, expected", [(5, 7, -1), (8, 13, -1), (12345, 1, 1), (5, 11, 1), (20, 5, 0)])
def test_kronecker_examples(a, n, expected):
    assert kronecker(a, n) == expected


def test_kronecker_matches_euler_criterion():
    for p in [3, 5, 7, 11, 13, 101, 997]:
        for a in range(-30, 60):
            assert kronecker(a, p) == _euler(a % p, p)


def test_kronecker_even_lower_argument():
    # (d/2) for d = 1 (mod 8) is 1, for d = 5 (mod 8) is -1
    assert kronecker(17, 2) == 1
    assert kronecker(5, 2) == -1
    assert kronecker(8, 4) == 0


def test_kronecker_is_multiplicative_in_lower_argument():
    rng = random.Random(7)
    for _ in range(300):
        a = rng.randint(-500, 500)
        m, n = rng.randint(1, 300), rng.randint(1, 300)
        assert kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n)


def test_kronecker_is_multiplicative_in_upper_argument():
    rng = random.Random(11)
    for _ in range(1000):
        a, b = rng.randint(-10 ** 6, 10 ** 6), rng.randint(-10 ** 6, 10 ** 6)
        n = rng.randint(1, 10 ** 4)
        assert kronecker(a, n) * kronecker(b, n) == kronecker(a * b, n), (a, b, n)


def test_kronecker_zero_rejected():
    with pytest.raises(InvalidArgumentError):
        kronecker(3, 0)


def test_jacobi_needs_odd_positive():
    with pytest.raises(InvalidArgumentError):
        jacobi(3, 4)


def test_residue_normalises_and_operates():
    x = Residue(-3, 7)
    assert x.value == 4
    assert (x + Residue(5, 7)).value == 2
    assert (x * Residue(2, 7)).value == 1
    assert (-x).value == 3
    assert (x - x).is_zero()
    with pytest.raises(InvalidArgumentError):
        x + Residue(1, 5)
    with pytest.raises(InvalidArgumentError):
        Residue(1, 1)


@pytest.mark.parametrize("base, exp, expected", [(Residue(2, 7), 10, 2), (Residue(5, 9), 0, 1), (Residue(3, 10), 4, 1)])
def test_mod_pow(base, exp, expected):
    assert mod_pow(base, exp).value == expected


def test_mod_pow_negative_exponent():
    with pytest.raises(InvalidArgumentError):
        mod_pow(Residue(2, 7), -1)


@pytest.mark.parametrize("value, modulus, expected", [(3, 7, 5), (1, 11, 1), (7, 5, 3)])
def test_mod_inv(value, modulus, expected):
    assert mod_inv(Residue(value, modulus)).value == expected
    assert inv_mod(value, modulus) == expected


@pytest.mark.parametrize("modulus", [7, 101, 10007, 2 ** 16, 3 ** 9, 101 ** 2, 1001, 2 ** 31 - 1])
def test_mod_inv_is_an_involution(modulus):
    rng = random.Random(modulus)
    checked = 0
    while checked < 500:
        x = Residue(rng.randrange(1, modulus), modulus)
        if math.gcd(x.value, modulus) != 1:
            continue
        inverse = mod_inv(x)
        assert (x * inverse).value == 1
        assert mod_inv(inverse) == x
        checked += 1


def test_mod_inv_not_invertible():
    with pytest.raises(NotInvertibleError) as info:
        inv_mod(6, 9)
    assert info.value.gcd == 3
    assert info.value.modulus == 9


@pytest.mark.parametrize(
    "n, factors",
    [(12, ((2, 2), (3, 1))), (1, ()), (168, ((2, 3), (3, 1), (7, 1))), (2 ** 61 - 1, ((2 ** 61 - 1, 1),))],
)
def test_factorize_examples(n, factors):
    assert factorize(n).factors == factors


def test_factorize_large_semiprime_uses_rho():
    p, q = 1_000_003, 998_244_353
    assert factorize(p * q).factors == ((p, 1), (q, 1))
    assert factorize(p * p * 3).factors == ((3, 1), (p, 2))


def test_factorize_reproduces_value():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(1, 10 ** 12)
        f = factorize(n)
        assert f.value == n
        assert all(is_prime(q) for q, _ in f)


def test_factorize_bounds():
    with pytest.raises(InvalidArgumentError):
        factorize(0)
    with pytest.raises(InvalidArgumentError):
        factorize(2 ** 63 + 1)


def test_factorize_one_is_empty():
    assert len(factorize(1)) == 0
    assert factorize(1).value == 1


def test_is_prime_against_trial_division():
    small = [n for n in range(2, 5000) if all(n % q for q in range(2, int(n ** 0.5) + 1))]
    assert [n for n in range(5000) if is_prime(n)] == small
    # strong pseudoprime to bases 2, 3, 5, 7
    assert not is_prime(3215031751)
    assert is_prime(2 ** 31 - 1)


@pytest.mark.parametrize("a, modulus, bound, expected", [(2, 7, 6, 3), (1, 9, 6, 1), (3, 13, 12, 3), (2, 13, 12, 12)])
def test_multiplicative_order(a, modulus, bound, expected):
    assert multiplicative_order(Residue(a, modulus), factorize(bound)) == expected


def test_multiplicative_order_divides_bound_and_is_least():
    rng = random.Random(3)
    primes = [p for p in range(3, 5000) if is_prime(p)]
    for _ in range(300):
        p = rng.choice(primes)
        for modulus, bound in ((p, p - 1), (p * p, p * (p - 1))):
            a = Residue(rng.randrange(1, modulus), modulus)
            if a.value % p == 0:
                continue
            order = multiplicative_order(a, factorize(bound))
            assert bound % order == 0
            assert pow(a.value, order, modulus) == 1
            for q, _ in factorize(order):
                assert pow(a.value, order // q, modulus) != 1, (a, order, q)


def test_multiplicative_order_bound_violation():
    # 2 has order 3 mod 7, which does not divide 4
    with pytest.raises(BoundViolationError):
        multiplicative_order(Residue(2, 7), factorize(4))
    with pytest.raises(NotInvertibleError):
        multiplicative_order(Residue(3, 9), factorize(6))


def test_malformed_factorization_rejected():
    with pytest.raises(InvalidArgumentError):
        Factorization(((3, 1), (2, 1)))


def test_primes_in_range_examples():
    assert list(primes_in_range(2, 10)) == [2, 3, 5, 7]
    assert list(primes_in_range(90, 100)) == [97]
    assert list(primes_in_range(10, 5)) == []
    assert list(primes_in_range(0, 2)) == [2]


def test_primes_in_range_crosses_segments():
    expected = [n for n in range(1000, 3000) if is_prime(n)]
    assert list(primes_in_range(1000, 2999, segment=97)) == expected


def test_primes_in_range_matches_trial_division_to_10_5():
    naive = [n for n in range(2, 10 ** 5 + 1) if all(n % q for q in range(2, math.isqrt(n) + 1))]
    assert list(primes_in_range(2, 10 ** 5)) == naive
    assert list(primes_in_range(2, 10 ** 5, segment=4099)) == naive


def test_prime_count_below_million():
    assert prime_count(2, 10 ** 6) == 78498
