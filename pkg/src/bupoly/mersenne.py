"""Mersenne primes 1 + x^a (x+1)^b and the catalog of named polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd as igcd
from types import MappingProxyType
from typing import Mapping, Optional

from .divisor_sums import is_bup
from .factor import _factor_mask, _is_irreducible, is_irreducible
from .gf2poly import Poly, _clmul, _pow, format_poly, parse_poly

__all__ = [
    "MersennePrime",
    "NamedPoly",
    "is_mersenne_prime",
    "enumerate_mersenne",
    "named_constants",
    "catalog_polys",
    "lookup",
    "CatalogError",
]


@dataclass(frozen=True, order=True)
class MersennePrime:
    poly: Poly
    a: int
    b: int


def is_mersenne_prime(p: Poly) -> Optional[MersennePrime]:
    """Return the (a, b) witness if p = 1 + x^a (x+1)^b is irreducible with gcd(a, b) = 1."""
    if p.degree < 2 or not _is_irreducible(p.mask):
        return None
    factors = dict(_factor_mask(p.mask ^ 1))
    a, b = factors.pop(0b10, 0), factors.pop(0b11, 0)
    if factors or a < 1 or b < 1 or igcd(a, b) != 1:
        return None
    return MersennePrime(p, a, b)


def enumerate_mersenne(max_degree: int) -> list[MersennePrime]:
    """All Mersenne primes of degree <= max_degree, ordered by (degree, mask)."""
    if max_degree < 2:
        raise ValueError("max_degree must be at least 2")
    out = []
    for total in range(2, max_degree + 1):
        for a in range(1, total):
            b = total - a
            if igcd(a, b) != 1:
                continue
            m = _clmul(1 << a, _pow(0b11, b)) ^ 1
            if _is_irreducible(m):
                out.append(MersennePrime(Poly(m), a, b))
    out.sort(key=lambda mp: mp.poly)
    return out


# ---------- named catalog

# Odd building blocks first, then the b.u.p. entries in terms of them.
_CATALOG_SOURCE = (
    ("M1", "1+x+x^2"),
    ("M2", "1+x+x^3"),
    ("M3", "1+x^2+x^3"),
    ("M4", "1+x+x^2+x^3+x^4"),
    ("M5", "1+x^3+x^4"),
    ("S1", "1+x*(x+1)*@M1"),
    ("C1", "x^3*(x+1)^4*@M1"),
    ("C2", "x^3*(x+1)^5*@M1^2"),
    ("C3", "x^4*(x+1)^4*@M1^2"),
    ("C4", "x^6*(x+1)^6*@M1^2"),
    ("C5", "x^4*(x+1)^5*@M1^3"),
    ("C6", "x^7*(x+1)^8*@M5"),
    ("C7", "x^7*(x+1)^9*@M5^2"),
    ("C8", "x^8*(x+1)^8*@M4*@M5"),
    ("C9", "x^8*(x+1)^9*@M4*@M5^2"),
    ("C10", "x^7*(x+1)^10*@M1^2*@M5"),
    ("C11", "x^7*(x+1)^13*@M2^2*@M3^2"),
    ("C12", "x^9*(x+1)^9*@M4^2*@M5^2"),
    ("C13", "x^14*(x+1)^14*@M2^2*@M3^2"),
    ("D1", "x^4*(x+1)^5*@M1^4*@S1"),
    ("D2", "x^4*(x+1)^5*@M1^5*@S1^2"),
)

MERSENNE_NAMES = ("M1", "M2", "M3", "M4", "M5")
BUP_NAMES = tuple(f"C{j}" for j in range(1, 14)) + ("D1", "D2")


class CatalogError(RuntimeError):
    pass


@dataclass(frozen=True)
class NamedPoly:
    name: str
    poly: Poly
    expression: str

    @property
    def factored(self) -> str:
        return format_poly(self.poly, "factored")


@lru_cache(maxsize=1)
def named_constants() -> Mapping[str, NamedPoly]:
    """The fixed table M1..M5, S1, C1..C13, D1, D2.

    The table is expanded from its factored source and self-checked: the M's
    must be Mersenne primes, S1 irreducible, every C and D bi-unitary perfect.
    """
    polys: dict[str, Poly] = {}
    table: dict[str, NamedPoly] = {}
    for name, expr in _CATALOG_SOURCE:
        p = parse_poly(expr, polys)
        polys[name] = p
        table[name] = NamedPoly(name, p, expr.replace("@", ""))
    for name in MERSENNE_NAMES:
        if is_mersenne_prime(polys[name]) is None:
            raise CatalogError(f"{name} is not a Mersenne prime")
    if not is_irreducible(polys["S1"]):
        raise CatalogError("S1 is not irreducible")
    for name in BUP_NAMES:
        if not is_bup(polys[name]):
            raise CatalogError(f"{name} is not bi-unitary perfect")
    return MappingProxyType(table)


def catalog_polys() -> dict[str, Poly]:
    return {name: entry.poly for name, entry in named_constants().items()}


def lookup(name: str) -> Poly:
    try:
        return named_constants()[name].poly
    except KeyError:
        raise KeyError(f"no catalog entry named {name!r}") from None
