"""Irreducibility testing and complete factorization over F2.

Factorization runs squarefree decomposition, distinct-degree splitting and
Cantor-Zassenhaus equal-degree splitting (trace map, since the field has
characteristic 2). The equal-degree step draws from a ``random.Random``
seeded with :data:`EDF_SEED`, so results are reproducible; the output order
is canonical regardless.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .gf2poly import Poly, _clmul, _divmod, _gcd, _mod, _square, format_poly

__all__ = [
    "EDF_SEED",
    "Factorization",
    "is_irreducible",
    "factorize",
    "omega",
    "is_odd_poly",
]

EDF_SEED = 0x6F2


@dataclass(frozen=True)
class Factorization:
    """Canonical prime-power decomposition of ``source``.

    ``factors`` is sorted by prime mask, i.e. by (degree, mask).
    """

    source: Poly
    factors: tuple[tuple[Poly, int], ...]

    @property
    def omega(self) -> int:
        return len(self.factors)

    def expand(self) -> Poly:
        r = 1
        for prime, exp in self.factors:
            for _ in range(exp):
                r = _clmul(r, prime.mask)
        return Poly(r)

    def exponent_of(self, prime: Poly) -> int:
        for p, e in self.factors:
            if p == prime:
                return e
        return 0

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def __str__(self):
        return format_poly(self.source, "factored", self)


# ---------- helpers on raw masks


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _frobenius_power(f: int, k: int) -> int:
    """x^(2^k) mod f."""
    h = _mod(0b10, f)
    for _ in range(k):
        h = _mod(_square(h), f)
    return h


def _is_irreducible(f: int) -> bool:
    n = f.bit_length() - 1
    if n < 1:
        raise ValueError("constants are neither irreducible nor reducible")
    if n == 1:
        return True
    if not f & 1:
        return False
    if not f.bit_count() & 1:
        # f(1) = 0
        return False
    if _frobenius_power(f, n) != 0b10:
        return False
    for q in _prime_divisors(n):
        h = _frobenius_power(f, n // q)
        if _gcd(f, h ^ 0b10) != 1:
            return False
    return True


def _derivative(f: int) -> int:
    # d/dx keeps odd-position coefficients, shifted down one place
    r = 0
    f >>= 1
    i = 0
    while f:
        if f & 1 and not i & 1:
            r |= 1 << i
        f >>= 1
        i += 1
    return r


def _sqrt(f: int) -> int:
    """Square root of a polynomial whose derivative vanishes."""
    r = 0
    i = 0
    while f:
        if f & 1:
            r |= 1 << i
        f >>= 2
        i += 1
    return r


def _squarefree(f: int) -> list[tuple[int, int]]:
    """Return [(g, m)] with f = prod g^m and each g squarefree."""
    out: list[tuple[int, int]] = []

    def rec(f: int, mult: int):
        if f == 1:
            return
        d = _derivative(f)
        if d == 0:
            rec(_sqrt(f), 2 * mult)
            return
        c = _gcd(f, d)
        w = _divmod(f, c)[0]
        i = 1
        while w != 1:
            y = _gcd(w, c)
            z = _divmod(w, y)[0]
            if z != 1:
                out.append((z, i * mult))
            i += 1
            w = y
            c = _divmod(c, y)[0]
        if c != 1:
            rec(_sqrt(c), 2 * mult)

    rec(f, 1)
    return out


def _distinct_degree(f: int) -> list[tuple[int, int]]:
    """Split squarefree f into (product of all degree-d factors, d)."""
    out = []
    h = 0b10
    d = 0
    while f.bit_length() - 1 >= 2 * (d + 1):
        d += 1
        h = _mod(_square(h), f)
        g = _gcd(f, h ^ 0b10)
        if g != 1:
            out.append((g, d))
            f = _divmod(f, g)[0]
            h = _mod(h, f)
    if f != 1:
        out.append((f, f.bit_length() - 1))
    return out


def _equal_degree(f: int, d: int, rng: random.Random) -> list[int]:
    n = f.bit_length() - 1
    if n == d:
        return [f]
    if d == 1:
        return [p for p in (0b10, 0b11) if _mod(f, p) == 0]
    while True:
        r = rng.getrandbits(n) | 1
        # trace map r + r^2 + ... + r^(2^(d-1)) mod f
        t = _mod(r, f)
        acc = t
        for _ in range(d - 1):
            t = _mod(_square(t), f)
            acc ^= t
        g = _gcd(f, acc)
        if g != 1 and g != f:
            return _equal_degree(g, d, rng) + _equal_degree(_divmod(f, g)[0], d, rng)


@lru_cache(maxsize=65536)
def _factor_mask(f: int) -> tuple[tuple[int, int], ...]:
    if f == 0:
        raise ValueError("cannot factor the zero polynomial")
    rng = random.Random(EDF_SEED)
    counts: dict[int, int] = {}
    for g, mult in _squarefree(f):
        for block, d in _distinct_degree(g):
            for p in _equal_degree(block, d, rng):
                counts[p] = counts.get(p, 0) + mult
    return tuple(sorted(counts.items()))


# ---------- public API


def is_irreducible(p: Poly) -> bool:
    """Rabin's test: x^(2^n) = x mod p and gcd(x^(2^(n/q)) - x, p) = 1 for primes q | n."""
    return _is_irreducible(p.mask)


def factorize(p: Poly) -> Factorization:
    factors = tuple((Poly(m), e) for m, e in _factor_mask(p.mask))
    return Factorization(p, factors)


def omega(p: Poly) -> int:
    return len(_factor_mask(p.mask))


def is_odd_poly(p: Poly) -> bool:
    """True iff gcd(p, x(x+1)) = 1, i.e. p(0) = p(1) = 1."""
    if not p:
        raise ValueError("oddness of the zero polynomial is undefined")
    return p(0) == 1 and p(1) == 1

