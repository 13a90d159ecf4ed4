"""Divisor sums sigma, sigma* and sigma** over F2[x], with brute-force oracles.

sigma** is evaluated per prime power with the closed forms

    sigma**(T^(2n))   = (1+T) * sigma(T^n) * sigma(T^(n-1))
    sigma**(T^(2n+1)) = sigma(T^(2n+1))

and multiplied over the factorization. :func:`sigma_bistar_oracle` instead
sums the bi-unitary divisors one by one and exists only to check the
closed form.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .factor import _factor_mask, _is_irreducible
from .gf2poly import Poly, _clmul, _pow, divrem, gcd

__all__ = [
    "DEFAULT_DIVISOR_CAP",
    "DivisorCapExceeded",
    "PrimePower",
    "sigma_prime_power",
    "sigma",
    "sigma_star",
    "sigma_bistar",
    "sigma_bistar_factored",
    "gcd_unitary",
    "enumerate_divisors",
    "divisor_count",
    "sigma_bistar_oracle",
    "is_bup",
    "is_perfect",
    "is_unitary_perfect",
]

DEFAULT_DIVISOR_CAP = 1 << 20


class DivisorCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class PrimePower:
    prime: Poly
    exp: int

    def __post_init__(self):
        if self.exp < 0:
            raise ValueError("exponent must be nonnegative")
        if not _is_irreducible(self.prime.mask):
            raise ValueError(f"{self.prime} is not irreducible")


# ---------- mask-level kernels


def _geometric(t: int, n: int) -> int:
    """1 + t + ... + t^n."""
    s = 1
    for _ in range(n):
        s = _clmul(s, t) ^ 1
    return s


@lru_cache(maxsize=1 << 16)
def _bistar_pp(t: int, e: int) -> int:
    if e == 0:
        return 1
    if e & 1:
        return _geometric(t, e)
    n = e >> 1
    return _clmul(_clmul(t ^ 1, _geometric(t, n)), _geometric(t, n - 1))


def _product(values: Iterable[int]) -> int:
    r = 1
    for v in values:
        r = _clmul(r, v)
    return r


def _nonzero(s: Poly):
    if not s:
        raise ValueError("divisor sums are undefined for the zero polynomial")


# ---------- public API


def sigma_prime_power(pp: PrimePower) -> Poly:
    return Poly(_geometric(pp.prime.mask, pp.exp))


def sigma(s: Poly) -> Poly:
    _nonzero(s)
    return Poly(_product(_geometric(p, e) for p, e in _factor_mask(s.mask)))


def sigma_star(s: Poly) -> Poly:
    _nonzero(s)
    return Poly(_product(_pow(p, e) ^ 1 for p, e in _factor_mask(s.mask)))


def sigma_bistar_factored(factors: Iterable[tuple[Poly, int]]) -> Poly:
    """sigma** of prod p^e for a known factorization (primes distinct)."""
    return Poly(_product(_bistar_pp(p.mask, e) for p, e in factors))


def sigma_bistar(s: Poly) -> Poly:
    _nonzero(s)
    return Poly(_product(_bistar_pp(p, e) for p, e in _factor_mask(s.mask)))


def _exponent_map(s: Poly) -> dict[int, int]:
    return dict(_factor_mask(s.mask))


def gcd_unitary(s: Poly, t: Poly) -> Poly:
    """Greatest common unitary divisor.

    A prime contributes its full power p^k exactly when it occurs with the
    same exponent k in both arguments.
    """
    _nonzero(s)
    _nonzero(t)
    es, et = _exponent_map(s), _exponent_map(t)
    return Poly(_product(_pow(p, k) for p, k in es.items() if et.get(p) == k))


def divisor_count(s: Poly) -> int:
    n = 1
    for _, e in _factor_mask(s.mask):
        n *= e + 1
    return n


def enumerate_divisors(s: Poly, kind: str = "all", cap: int = DEFAULT_DIVISOR_CAP) -> list[Poly]:
    """All divisors of ``s`` of the given kind, ordered by (degree, mask).

    ``kind`` is ``"all"``, ``"unitary"`` (gcd(D, S/D) = 1) or
    ``"biunitary"`` (gcd_u(D, S/D) = 1). Raises :class:`DivisorCapExceeded`
    when ``s`` has more than ``cap`` divisors.
    """
    _nonzero(s)
    if kind not in ("all", "unitary", "biunitary"):
        raise ValueError(f"unknown divisor kind {kind!r}")
    count = divisor_count(s)
    if count > cap:
        raise DivisorCapExceeded(f"{count} divisors exceeds cap {cap}")
    factors = _factor_mask(s.mask)
    one = Poly(1)
    out = []
    for vec in itertools.product(*(range(e + 1) for _, e in factors)):
        d = Poly(_product(_pow(p, k) for k, (p, _) in zip(vec, factors)))
        if kind != "all":
            cofactor, rem = divrem(s, d)
            assert not rem
            if kind == "unitary" and gcd(d, cofactor) != one:
                continue
            if kind == "biunitary" and gcd_unitary(d, cofactor) != one:
                continue
        out.append(d)
    out.sort()
    return out


def sigma_bistar_oracle(s: Poly, cap: int = DEFAULT_DIVISOR_CAP) -> Poly:
    """Reference sigma**: XOR-sum of every bi-unitary divisor."""
    acc = 0
    for d in enumerate_divisors(s, "biunitary", cap):
        acc ^= d.mask
    return Poly(acc)


def is_bup(s: Poly) -> bool:
    """Bi-unitary perfect: sigma**(s) = s."""
    return sigma_bistar(s) == s


def is_perfect(s: Poly) -> bool:
    return sigma(s) == s


def is_unitary_perfect(s: Poly) -> bool:
    return sigma_star(s) == s

