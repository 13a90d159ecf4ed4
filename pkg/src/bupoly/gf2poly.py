"""Arithmetic in F2[x] on bit-packed coefficient masks.

A polynomial is stored as a nonnegative Python integer: bit ``i`` is the
coefficient of ``x^i``. Python integers are unbounded, so there is no
degree ceiling. The ``_``-prefixed helpers work on raw masks and are what
the hot loops elsewhere in the package call; :class:`Poly` wraps them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, Optional

__all__ = [
    "NEG_INF",
    "Poly",
    "PolySyntaxError",
    "ZERO",
    "ONE",
    "X",
    "X1",
    "add",
    "mul",
    "divrem",
    "gcd",
    "power",
    "translate",
    "reciprocal",
    "parse_poly",
    "format_poly",
]

MAX_EXPONENT = 1 << 16


class _NegInfinity:
    """Degree of the zero polynomial.

    Compares below every integer but refuses arithmetic, so an accidental
    ``deg(0) + 1`` raises instead of silently producing a number.
    """

    _instance: Optional["_NegInfinity"] = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NEG_INF"

    def __str__(self):
        return "-inf"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("NEG_INF")

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __reduce__(self):
        return (_NegInfinity, ())


NEG_INF = _NegInfinity()


# ---------- raw mask helpers


def _clmul(a: int, b: int) -> int:
    if a.bit_length() < b.bit_length():
        a, b = b, a
    r = 0
    while b:
        low = b & -b
        r ^= a << (low.bit_length() - 1)
        b ^= low
    return r


def _divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.bit_length()
    q = 0
    while True:
        shift = a.bit_length() - db
        if shift < 0:
            return q, a
        q |= 1 << shift
        a ^= b << shift


def _mod(a: int, b: int) -> int:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.bit_length()
    while True:
        shift = a.bit_length() - db
        if shift < 0:
            return a
        a ^= b << shift


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _mod(a, b)
    return a


def _square(a: int) -> int:
    # Frobenius: coefficients spread to even positions
    r = 0
    i = 0
    while a:
        if a & 1:
            r |= 1 << (2 * i)
        a >>= 1
        i += 1
    return r


def _pow(a: int, n: int) -> int:
    r = 1
    while n:
        if n & 1:
            r = _clmul(r, a)
        n >>= 1
        if n:
            a = _square(a)
    return r


def _mulmod(a: int, b: int, m: int) -> int:
    return _mod(_clmul(a, b), m)


def _translate(a: int) -> int:
    # Horner evaluation of a(x+1), coefficients from the top
    r = 0
    for i in range(a.bit_length() - 1, -1, -1):
        # r <- r*(x+1) + a_i
        r = (r << 1) ^ r ^ ((a >> i) & 1)
    return r


def _reverse(a: int) -> int:
    n = a.bit_length()
    return int(format(a, f"0{n}b")[::-1], 2) if n else 0


def _div_x1(a: int) -> int:
    """Exact quotient a / (x+1); caller guarantees a(1) = 0."""
    # quotient coefficient j is the XOR of a_i over i > j
    s = a >> 1
    shift = 1
    n = s.bit_length()
    while shift < n:
        s ^= s >> shift
        shift <<= 1
    return s


def _val_x(a: int) -> int:
    return (a & -a).bit_length() - 1


def _val_x1(a: int) -> int:
    v = 0
    while a and not (a.bit_count() & 1):
        a = _div_x1(a)
        v += 1
    return v


# ---------- value type


@dataclass(frozen=True, order=True, slots=True)
class Poly:
    """Immutable polynomial over F2.

    Ordering compares masks, which coincides with ordering by
    ``(degree, mask)``.
    """

    mask: int = 0

    def __post_init__(self):
        if not isinstance(self.mask, int) or self.mask < 0:
            raise ValueError(f"mask must be a nonnegative int, got {self.mask!r}")

    @classmethod
    def from_exponents(cls, *exponents: int) -> "Poly":
        m = 0
        for e in exponents:
            m ^= 1 << e
        return cls(m)

    @property
    def degree(self):
        return self.mask.bit_length() - 1 if self.mask else NEG_INF

    def is_zero(self) -> bool:
        return self.mask == 0

    def is_constant(self) -> bool:
        return self.mask <= 1

    def __call__(self, point: int) -> int:
        """Evaluate at 0 or 1."""
        if point == 0:
            return self.mask & 1
        if point == 1:
            return self.mask.bit_count() & 1
        raise ValueError("F2 polynomials can only be evaluated at 0 or 1")

    def __bool__(self):
        return self.mask != 0

    def __add__(self, other: "Poly") -> "Poly":
        return Poly(self.mask ^ other.mask)

    __sub__ = __add__

    def __mul__(self, other: "Poly") -> "Poly":
        return Poly(_clmul(self.mask, other.mask))

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        return divrem(self, other)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divrem(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divrem(self, other)[1]

    def __pow__(self, n: int) -> "Poly":
        return power(self, n)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"


ZERO = Poly(0)
ONE = Poly(1)
X = Poly(0b10)
X1 = Poly(0b11)


def add(p: Poly, q: Poly) -> Poly:
    return Poly(p.mask ^ q.mask)


def mul(p: Poly, q: Poly) -> Poly:
    return Poly(_clmul(p.mask, q.mask))


def divrem(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    """Euclidean division; raises ZeroDivisionError for a zero divisor."""
    q, r = _divmod(num.mask, den.mask)
    return Poly(q), Poly(r)


def gcd(p: Poly, q: Poly) -> Poly:
    if not p and not q:
        raise ValueError("gcd(0, 0) is undefined")
    return Poly(_gcd(p.mask, q.mask))


def power(p: Poly, n: int) -> Poly:
    if n < 0:
        raise ValueError("negative exponent")
    return Poly(_pow(p.mask, n))


def translate(p: Poly) -> Poly:
    """Return p(x+1)."""
    return Poly(_translate(p.mask))


def reciprocal(p: Poly) -> Poly:
    """Return x^deg(p) * p(1/x); needs a nonzero constant term."""
    if not p.mask & 1:
        raise ValueError(f"reciprocal needs p(0) = 1, got {format_poly(p)}")
    return Poly(_reverse(p.mask))


# ---------- text forms


class PolySyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


_HEX = re.compile(r"0[xX][0-9a-fA-F]+\Z")


class _Parser:
    # expr   := term ('+' term)*
    # term   := factor ('*' factor)*
    # factor := atom ('^' uint)?
    # atom   := '0' | '1' | 'x' | '(' expr ')' | '@' NAME
    def __init__(self, text: str, names: Optional[Mapping[str, Poly]]):
        self.text = text
        self.src = [(i, c) for i, c in enumerate(text) if not c.isspace()]
        self.i = 0
        self.names = names

    def error(self, message: str):
        pos = self.src[self.i][0] if self.i < len(self.src) else len(self.text)
        raise PolySyntaxError(message, self.text, pos)

    def peek(self) -> Optional[str]:
        return self.src[self.i][1] if self.i < len(self.src) else None

    def take(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.i += 1

    def parse(self) -> int:
        if not self.src:
            self.error("empty polynomial")
        v = self.expr()
        if self.i != len(self.src):
            self.error(f"unexpected {self.peek()!r}")
        return v

    def expr(self) -> int:
        v = self.term()
        while self.peek() == "+":
            self.i += 1
            v ^= self.term()
        return v

    def term(self) -> int:
        v = self.factor()
        while self.peek() == "*":
            self.i += 1
            v = _clmul(v, self.factor())
        return v

    def factor(self) -> int:
        v = self.atom()
        if self.peek() == "^":
            self.i += 1
            start = self.i
            while self.peek() is not None and self.peek().isdigit():
                self.i += 1
            if start == self.i:
                self.error("expected exponent")
            n = int("".join(c for _, c in self.src[start : self.i]))
            if n > MAX_EXPONENT:
                self.i = start
                self.error(f"exponent exceeds {MAX_EXPONENT}")
            v = _pow(v, n)
        return v

    def atom(self) -> int:
        c = self.peek()
        if c == "x":
            self.i += 1
            return 0b10
        if c in ("0", "1"):
            self.i += 1
            if self.peek() is not None and self.peek().isdigit():
                self.error("numeric constants other than 0 and 1 are not allowed")
            return int(c)
        if c == "(":
            self.i += 1
            v = self.expr()
            self.take(")")
            return v
        if c == "@":
            self.i += 1
            start = self.i
            while self.peek() is not None and (self.peek().isalnum() or self.peek() == "_"):
                self.i += 1
            name = "".join(ch for _, ch in self.src[start : self.i])
            if not name:
                self.error("expected a name after '@'")
            if self.names is None or name not in self.names:
                self.i = start
                self.error(f"unknown name {name!r}")
            return self.names[name].mask
        self.error("expected 'x', '0', '1', '(' or '@NAME'" if c else "unexpected end of input")


def parse_poly(text: str, names: Optional[Mapping[str, Poly]] = None) -> Poly:
    """Parse sum form, product form, or ``0x`` hex mask.

    ``names`` enables ``@NAME`` references, e.g. ``x^3*(x+1)^4*@M1``.
    """
    stripped = "".join(text.split())
    if _HEX.match(stripped):
        return Poly(int(stripped, 16))
    return Poly(_Parser(text, names).parse())


def _sum_form(mask: int) -> str:
    if mask == 0:
        return "0"
    terms = []
    for i in range(mask.bit_length() - 1, -1, -1):
        if (mask >> i) & 1:
            terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
    return "+".join(terms)


def _factored_form(factors) -> str:
    if not factors:
        return "1"
    parts = []
    for prime, exp in factors:
        base = _sum_form(prime.mask)
        if prime.mask != 0b10:
            base = f"({base})"
        parts.append(base if exp == 1 else f"{base}^{exp}")
    return "*".join(parts)


def format_poly(p: Poly, style: str = "sum", factorization=None) -> str:
    """Canonical text for ``p``.

    ``style`` is ``"sum"`` (descending degree), ``"hex"`` or
    ``"factored"``; the factored style factors ``p`` unless a
    factorization is supplied.
    """
    if style == "sum":
        return _sum_form(p.mask)
    if style == "hex":
        return hex(p.mask)
    if style == "factored":
        if p.mask == 0:
            return "0"
        if factorization is None:
            from .factor import factorize

            factorization = factorize(p)
        return _factored_form(factorization.factors)
    raise ValueError(f"unknown style {style!r}")
