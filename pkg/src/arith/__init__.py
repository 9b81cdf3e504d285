from src.arith.factor import Factorization, factorize, is_prime
from src.arith.residue import (
    Residue,
    inv_mod,
    jacobi,
    kronecker,
    mod_inv,
    mod_pow,
    multiplicative_order,
)
from src.arith.sieve import primes_in_range, prime_count

__all__ = [
    "Factorization",
    "Residue",
    "factorize",
    "inv_mod",
    "is_prime",
    "jacobi",
    "kronecker",
    "mod_inv",
    "mod_pow",
    "multiplicative_order",
    "prime_count",
    "primes_in_range",
]
