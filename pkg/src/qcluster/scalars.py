"""Laurent polynomials in the quantum parameter v with integer coefficients.

The engine works over Z[v, v^-1] where v plays the role of q^(1/2); squaring v
gives the field-counting parameter q.  Everything here is exact: coefficients
are Python ints, and specializations return exact Fractions.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Mapping

from .errors import NotDivisibleError

_CONST_RE = re.compile(r"^(-?)(\d+)$")
_VTERM_RE = re.compile(r"^(-?)(?:(\d+)\*)?v(?:\^(-?\d+))?$")


class LaurentScalar:
    """An element of Z[v, v^-1].

    >>> v = LaurentScalar.v_power(1)
    >>> str(v + v ** -1)
    'v + v^-1'
    >>> (v - 1) * (v + 1) == v ** 2 - 1
    True
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | int = 0):
        if isinstance(coeffs, int):
            coeffs = {0: coeffs} if coeffs else {}
        self._c: dict[int, int] = {e: c for e, c in coeffs.items() if c}

    @classmethod
    def v_power(cls, exponent: int, coefficient: int = 1) -> LaurentScalar:
        return cls({exponent: coefficient})

    @classmethod
    def zero(cls) -> LaurentScalar:
        return cls(0)

    @classmethod
    def one(cls) -> LaurentScalar:
        return cls(1)

    def items(self) -> Iterator[tuple[int, int]]:
        """(exponent, coefficient) pairs, exponents descending."""
        return iter(sorted(self._c.items(), reverse=True))

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentScalar(other)
        if not isinstance(other, LaurentScalar):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __add__(self, other: LaurentScalar | int) -> LaurentScalar:
        if isinstance(other, int):
            other = LaurentScalar(other)
        if not isinstance(other, LaurentScalar):
            return NotImplemented
        out = dict(self._c)
        for e, c in other._c.items():
            out[e] = out.get(e, 0) + c
        return LaurentScalar(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentScalar:
        return LaurentScalar({e: -c for e, c in self._c.items()})

    def __sub__(self, other: LaurentScalar | int) -> LaurentScalar:
        if isinstance(other, int):
            other = LaurentScalar(other)
        if not isinstance(other, LaurentScalar):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> LaurentScalar:
        return LaurentScalar(other) - self

    def __mul__(self, other: LaurentScalar | int) -> LaurentScalar:
        if isinstance(other, int):
            other = LaurentScalar(other)
        if not isinstance(other, LaurentScalar):
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentScalar(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentScalar:
        if n < 0:
            if len(self._c) != 1:
                raise NotDivisibleError("negative power of a non-monomial scalar")
            ((e, c),) = self._c.items()
            if abs(c) != 1:
                raise NotDivisibleError("negative power of a non-unit coefficient")
            return LaurentScalar({e * n: c if n % 2 else 1})
        result = LaurentScalar.one()
        for _ in range(n):
            result = result * self
        return result

    def bar(self) -> LaurentScalar:
        """The bar involution v -> v^-1."""
        return LaurentScalar({-e: c for e, c in self._c.items()})

    def shift(self, k: int) -> LaurentScalar:
        """Multiply by v^k."""
        return LaurentScalar({e + k: c for e, c in self._c.items()})

    def at_one(self) -> int:
        """Specialize v = 1."""
        return sum(self._c.values())

    def specialize_sqrt(self, p: int) -> tuple[Fraction, Fraction]:
        """Evaluate at v = sqrt(p), exactly, as (a, b) with value a + b*sqrt(p).

        Splitting by exponent parity keeps the evaluation in Q + Q*sqrt(p),
        which is a ring (and a field for p prime, hence not a square).
        """
        even = Fraction(0)
        odd = Fraction(0)
        for e, c in self._c.items():
            if e % 2 == 0:
                even += c * Fraction(p) ** (e // 2)
            else:
                odd += c * Fraction(p) ** ((e - 1) // 2)
        return even, odd

    def divexact(self, other: LaurentScalar | int) -> LaurentScalar:
        """Exact quotient self / other in Z[v, v^-1].

        Raises NotDivisibleError when the quotient does not exist; raises
        ZeroDivisionError on a zero divisor.
        """
        if isinstance(other, int):
            other = LaurentScalar(other)
        if not other:
            raise ZeroDivisionError("division by zero scalar")
        if not self:
            return LaurentScalar.zero()
        lead_d = max(other._c)
        lc_d = other._c[lead_d]
        quo_low = min(self._c) - min(other._c)
        rem = dict(self._c)
        quo: dict[int, int] = {}
        while rem:
            e = max(rem)
            g = e - lead_d
            c = rem[e]
            if g < quo_low or c % lc_d:
                raise NotDivisibleError(f"{self} is not divisible by {other}")
            qc = c // lc_d
            quo[g] = qc
            for f, cf in other._c.items():
                ne = g + f
                nv = rem.get(ne, 0) - qc * cf
                if nv:
                    rem[ne] = nv
                else:
                    rem.pop(ne, None)
        return LaurentScalar(quo)

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts: list[str] = []
        for e, c in sorted(self._c.items(), reverse=True):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                vpart = "v" if e == 1 else f"v^{e}"
                body = vpart if mag == 1 else f"{mag}*{vpart}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    __repr__ = __str__

    @classmethod
    def parse(cls, text: str) -> LaurentScalar:
        """Parse the textual form produced by str(); inverse of formatting.

        >>> LaurentScalar.parse("v^4 + v^2 + 2 + v^-2 + v^-4") == qbinomial(4, 2)
        True
        """
        s = text.strip()
        if s == "0":
            return cls.zero()
        s = s.replace(" - ", " + -").replace(" + ", "\x00")
        out: dict[int, int] = {}
        for piece in s.split("\x00"):
            piece = piece.strip()
            m = _CONST_RE.match(piece)
            if m:
                sign, digits = m.groups()
                e, c = 0, int(digits)
            else:
                m = _VTERM_RE.match(piece)
                if not m:
                    raise ValueError(f"cannot parse scalar term {piece!r}")
                sign, digits, exp = m.groups()
                e = int(exp) if exp is not None else 1
                c = int(digits) if digits is not None else 1
            if sign == "-":
                c = -c
            out[e] = out.get(e, 0) + c
        return cls(out)


def qbinomial(n: int, k: int) -> LaurentScalar:
    """Balanced quantum binomial [n choose k] in base v.

    Computed by the q-Pascal recurrence
    [n k] = v^k [n-1 k] + v^(k-n) [n-1 k-1];
    symmetric under v -> v^-1 and specializing to C(n, k) at v = 1.

    >>> str(qbinomial(2, 1))
    'v + v^-1'
    """
    if n < 0:
        raise ValueError("qbinomial needs n >= 0")
    return _qbinomial(n, k)


@lru_cache(maxsize=None)
def _qbinomial(n: int, k: int) -> LaurentScalar:
    if k < 0 or k > n:
        return LaurentScalar.zero()
    if k == 0 or k == n:
        return LaurentScalar.one()
    return _qbinomial(n - 1, k).shift(k) + _qbinomial(n - 1, k - 1).shift(k - n)
