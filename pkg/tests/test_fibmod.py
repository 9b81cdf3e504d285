import random

import pytest

from src.arith import primes_in_range
from src.arith.residue import kronecker
from src.criteria import (
    FibParams,
    fib_iter_oracle,
    fib_pair,
    is_fibonacci_wieferich,
    period_linear,
    rank_of_apparition,
    wall_period,
    wall_period_square,
)
from src.criteria.fibmod import rank_fact_residue
from src.field import field_invariants
from src.utlis.errors import ExcludedPrimeError, InvalidArgumentError, OracleLimitError
from tests.oracles import FUNDAMENTAL_100, PRIMES_1000, sequence_period

FIBONACCI = FibParams(a=1, b=-1)
PELL = FibParams(a=2, b=-1)


def _pairs_in_scope(p_max: int):
    for d in FUNDAMENTAL_100:
        field = field_invariants(d)
        for p in PRIMES_1000:
            if p > p_max:
                break
            if (d * field.unit.v) % p:
                yield field, p


@pytest.mark.parametrize("params, n, m, expected", [(FIBONACCI, 12, 10 ** 6, 144), (PELL, 7, 10 ** 6, 169), (FibParams(a=4, b=1), 5, 10 ** 4, 209)])
def test_fib_pair_examples(params, n, m, expected):
    assert fib_pair(params, n, m).f_n.value == expected


def test_fib_pair_seed():
    pair = fib_pair(FibParams(a=7, b=1), 0, 97)
    assert (pair.f_n.value, pair.f_n1.value) == (0, 1)
    assert pair.is_identity


def test_fib_iter_oracle_examples():
    assert fib_iter_oracle(FIBONACCI, 10, 1000).f_n.value == 55
    one = fib_iter_oracle(FibParams(a=12, b=1), 1, 1000)
    assert (one.f_n.value, one.f_n1.value) == (1, 12)


def test_fib_pair_matches_direct_recursion():
    rng = random.Random(2024)
    for _ in range(200):
        a, b = rng.randint(1, 500), rng.choice([1, -1])
        if a * a - 4 * b <= 0:
            continue
        params = FibParams(a=a, b=b)
        n, m = rng.randint(0, 10 ** 4), rng.randint(2, 10 ** 6)
        assert fib_pair(params, n, m) == fib_iter_oracle(params, n, m)


def test_fib_pair_argument_checks():
    with pytest.raises(InvalidArgumentError):
        fib_pair(FIBONACCI, 3, 1)
    with pytest.raises(InvalidArgumentError):
        fib_pair(FIBONACCI, -1, 10)


def test_fib_iter_oracle_cap():
    with pytest.raises(OracleLimitError):
        fib_iter_oracle(FIBONACCI, 10 ** 8, 7)


def test_fib_params_needs_positive_disc():
    with pytest.raises(ValueError):
        FibParams(a=1, b=1)
    with pytest.raises(ValueError):
        FibParams(a=3, b=2)


def test_rank_of_apparition_examples():
    assert rank_of_apparition(FIBONACCI, 11, 1) == 10
    # P_7 = 169 = 13^2
    assert rank_of_apparition(PELL, 13, -1) == 7
    with pytest.raises(ExcludedPrimeError):
        rank_of_apparition(FIBONACCI, 5, 0)


def test_rank_of_apparition_is_least_zero():
    for d in [5, 8, 12, 13, 21, 24]:
        params = FibParams.from_field(field_invariants(d))
        for p in PRIMES_1000[:40]:
            if params.disc % p == 0:
                continue
            z = rank_of_apparition(params, p, kronecker(d, p))
            assert z == sequence_period(params.a, params.b, p)[0]


@pytest.mark.parametrize("params, p, eps, k", [(FIBONACCI, 11, 1, 10), (FIBONACCI, 3, -1, 8), (PELL, 7, 1, 6)])
def test_wall_period_examples(params, p, eps, k):
    record = wall_period(params, p, eps)
    assert record.k == k
    assert record.k % record.z == 0


def test_wall_period_square_examples():
    assert wall_period_square(PELL, 13, wall_period(PELL, 13, -1).k) == wall_period(PELL, 13, -1).k
    assert wall_period_square(PELL, 31, wall_period(PELL, 31, 1).k) == wall_period(PELL, 31, 1).k
    assert wall_period_square(FIBONACCI, 11, 10) == 110


def test_wall_periods_against_iteration():
    for d in [5, 8, 12, 13, 17, 29, 40, 61]:
        field = field_invariants(d)
        params = FibParams.from_field(field)
        for p in PRIMES_1000:
            if p > 100:
                break
            if params.disc % p == 0:
                continue
            record = wall_period(params, p, kronecker(d, p))
            assert (record.z, record.k) == sequence_period(params.a, params.b, p), (d, p)
            k2 = wall_period_square(params, p, record.k)
            assert k2 in (record.k, p * record.k)
            assert k2 == sequence_period(params.a, params.b, p * p)[1], (d, p)


def test_period_linear_matches_iteration():
    assert (period_linear(FIBONACCI, 10).z, period_linear(FIBONACCI, 10).k) == (15, 60)
    assert period_linear(PELL, 7).k == 6
    assert period_linear(FIBONACCI, 2).k == 3
    with pytest.raises(OracleLimitError):
        period_linear(FIBONACCI, 10 ** 7)


@pytest.mark.parametrize("d, p, expected", [(8, 13, True), (5, 13, False), (29, 3, True), (8, 31, True), (12, 103, True)])
def test_is_fibonacci_wieferich_examples(d, p, expected):
    assert is_fibonacci_wieferich(field_invariants(d), p) is expected


def test_is_fibonacci_wieferich_excluded():
    with pytest.raises(ExcludedPrimeError):
        is_fibonacci_wieferich(field_invariants(5), 5)
    with pytest.raises(ExcludedPrimeError):
        is_fibonacci_wieferich(field_invariants(8), 2)
    # v = 250 for d = 73
    with pytest.raises(ExcludedPrimeError):
        is_fibonacci_wieferich(field_invariants(73), 5)


def test_classical_fibonacci_has_no_wieferich_prime_below_10_5():
    field = field_invariants(5)
    assert not any(is_fibonacci_wieferich(field, p) for p in PRIMES_1000 if p != 5)
    assert not any(is_fibonacci_wieferich(field, p) for p in primes_in_range(1001, 10 ** 5))


@pytest.mark.slow
def test_classical_fibonacci_has_no_wieferich_prime_below_10_6():
    field = field_invariants(5)
    assert not any(is_fibonacci_wieferich(field, p) for p in primes_in_range(7, 10 ** 6))


def test_rank_fact():
    for field, p in _pairs_in_scope(1000):
        assert rank_fact_residue(field, p) % p == 0, (field.d, p)


def test_wall_equality_iff_fibonacci_wieferich():
    for field, p in _pairs_in_scope(1000):
        params = FibParams.from_field(field)
        record = wall_period(params, p, kronecker(field.d, p))
        equal = wall_period_square(params, p, record.k) == record.k
        assert equal is is_fibonacci_wieferich(field, p), (field.d, p)
