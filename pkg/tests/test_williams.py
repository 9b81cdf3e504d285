import pytest

from src.criteria import (
    alpha,
    beta,
    golden_ratio_criterion,
    is_fibonacci_wieferich,
    special_criterion,
    williams_congruence,
    williams_criterion,
)
from src.criteria.williams import alpha_table, beta_table, sign_factor
from src.field import field_invariants
from src.utlis.errors import ExcludedPrimeError, InvalidArgumentError, RamifiedPrimeError
from tests.oracles import FUNDAMENTAL_100, PRIMES_1000, fundamental_up_to


def _williams_pairs(p_max: int):
    for d in FUNDAMENTAL_100:
        field = field_invariants(d)
        for p in PRIMES_1000:
            if p > p_max:
                break
            if (d * field.unit.v) % p:
                yield field, p


@pytest.mark.parametrize("d, p, i, expected", [(5, 7, 1, 0), (5, 7, 2, 0), (5, 7, 3, -1)])
def test_beta_examples(d, p, i, expected):
    assert beta(d, p, i) == expected


@pytest.mark.parametrize("d, p, i, expected", [(5, 7, 1, 1), (5, 7, 3, 5), (5, 7, 4, 0)])
def test_alpha_examples(d, p, i, expected):
    assert alpha(d, p, i) == expected


def test_beta_depends_on_residue_class_only():
    for d in (5, 8, 13, 24):
        for p in (7, 11, 31):
            if d % p == 0:
                continue
            for i in range(1, d + 1):
                assert beta(d, p, i) == beta(d, p, i + d) == beta(d, p, i + 7 * d)


def test_tables_match_pointwise():
    for d, p in [(5, 7), (13, 17), (40, 191), (88, 43)]:
        assert beta_table(d, p) == [beta(d, p, i) for i in range(1, d + 1)]
        assert alpha_table(d, p) == [alpha(d, p, i) for i in range(1, d + 1)]


def test_beta_ramified():
    with pytest.raises(RamifiedPrimeError):
        beta(5, 5, 1)
    with pytest.raises(InvalidArgumentError):
        alpha(5, 2, 1)


def test_williams_congruence_examples():
    report = williams_congruence(field_invariants(5), 7)
    assert report.lhs == report.rhs == 3
    assert report.p_inv == 3
    assert report.beta[:3] == [0, 0, -1]
    assert williams_congruence(field_invariants(8), 13).lhs == 0
    assert williams_congruence(field_invariants(5), 3).lhs == 1


def test_williams_congruence_scales_by_unit_coordinate():
    # eps_17 = 4 + sqrt 17 has v = 2; F_4 = 528 for X_{n+2} = 8 X_{n+1} + X_n
    field = field_invariants(17)
    assert field.unit.v == 2
    report = williams_congruence(field, 3)
    assert report.lhs == report.rhs == 2 * (528 // 3) % 3 == 1
    for d in (24, 33, 69, 88, 97):
        field = field_invariants(d)
        assert field.unit.v > 1
        for p in (7, 11, 13):
            if (d * field.unit.v) % p:
                assert williams_congruence(field, p).holds, (d, p)


def test_williams_congruence_excludes_unit_discriminant():
    with pytest.raises(ExcludedPrimeError):
        williams_congruence(field_invariants(73), 5)


def test_williams_congruence_sweep():
    for field, p in _williams_pairs(500):
        report = williams_congruence(field, p)
        assert report.holds
        assert report.criterion_sum == report.harmonic_sum


@pytest.mark.parametrize("d, p, expected", [(5, 7, True), (12, 103, False), (29, 3, False), (37, 631, False), (13, 241, False)])
def test_williams_criterion_examples(d, p, expected):
    assert williams_criterion(field_invariants(d), p) is expected


def test_williams_criterion_is_fibonacci_complement():
    for field, p in _williams_pairs(1000):
        assert williams_criterion(field, p) is not is_fibonacci_wieferich(field, p), (field.d, p)


def test_sign_factor_is_plus_minus_two():
    for field, p in _williams_pairs(100):
        assert sign_factor(field, p) in (2, -2)


@pytest.mark.parametrize(
    "d, p, expected",
    [
        (29, 3, False), (5, 3, True), (77, 3, False), (53, 3, True),
        (85, 3, False), (53, 5, False), (69, 5, False), (89, 5, False),
    ],
)
def test_special_criterion_examples(d, p, expected):
    assert special_criterion(d, p) is expected


def test_special_criterion_agrees_with_williams():
    for d in fundamental_up_to(300):
        field = field_invariants(d)
        for p in (3, 5):
            if (d * field.unit.v) % p == 0:
                continue
            assert special_criterion(d, p) is williams_criterion(field, p), (d, p)


def test_special_criterion_rejects_other_primes():
    with pytest.raises(InvalidArgumentError):
        special_criterion(5, 7)


def test_golden_ratio_criterion():
    rational, coefficients = golden_ratio_criterion(11)
    assert rational
    assert coefficients == [0, 1, 0, -1, 0]
    for p in (31, 41, 61, 71, 101, 131):
        assert golden_ratio_criterion(p)[0]
    with pytest.raises(InvalidArgumentError):
        golden_ratio_criterion(7)
