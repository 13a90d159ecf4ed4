"""Bi-unitary perfect polynomials over F2.

Bit-packed F2[x] arithmetic, factorization, the divisor sums sigma, sigma*
and sigma**, Mersenne primes 1 + x^a (x+1)^b, and exhaustive searches that
classify the bi-unitary perfect polynomials with at most four distinct
irreducible factors.
"""

from .divisor_sums import (
    PrimePower,
    enumerate_divisors,
    gcd_unitary,
    is_bup,
    is_perfect,
    is_unitary_perfect,
    sigma,
    sigma_bistar,
    sigma_bistar_oracle,
    sigma_prime_power,
    sigma_star,
)
from .factor import Factorization, factorize, is_irreducible, is_odd_poly, omega
from .gf2poly import (
    NEG_INF,
    Poly,
    PolySyntaxError,
    add,
    divrem,
    format_poly,
    gcd,
    mul,
    parse_poly,
    power,
    reciprocal,
    translate,
)
from .mersenne import MersennePrime, enumerate_mersenne, is_mersenne_prime, lookup, named_constants
from .search import (
    BupRecord,
    SearchReport,
    SearchSpace,
    blind_search,
    conjugate_closure,
    is_ibup,
    search_omega3,
    search_omega4_mersenne,
    search_omega4_nonmersenne,
    verify_theorems,
)

__version__ = "0.1.0"
