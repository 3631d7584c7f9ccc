"""Based quantum torus: Laurent monomials on Z^m twisted by a skew form.

Basis elements X^e (e in Z^m) multiply by X^e * X^f = v^{Lambda(e,f)} X^{e+f},
so v carries the half-integer power q^{Lambda(e,f)/2} as a whole power.
Elements are finite sums of basis monomials with LaurentScalar coefficients.
"""

from __future__ import annotations

import json
from typing import Iterator, Mapping, Sequence

from .errors import BudgetExceededError, NotDivisibleError
from .scalars import LaurentScalar

Vector = tuple[int, ...]


class SkewForm:
    """Skew-symmetric integer matrix, evaluated as a bilinear form on Z^m."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[int]]):
        m = len(rows)
        tup = tuple(tuple(int(x) for x in r) for r in rows)
        for r in tup:
            if len(r) != m:
                raise ValueError("skew form must be square")
        for i in range(m):
            for j in range(m):
                if tup[i][j] != -tup[j][i]:
                    raise ValueError(f"form is not skew-symmetric at ({i},{j})")
        self.rows = tup

    @property
    def rank(self) -> int:
        return len(self.rows)

    def __getitem__(self, i: int) -> tuple[int, ...]:
        return self.rows[i]

    def eval(self, e: Sequence[int], f: Sequence[int]) -> int:
        """Lambda(e, f) = e^T Lambda f."""
        if len(e) != self.rank or len(f) != self.rank:
            raise ValueError("vector length does not match form rank")
        total = 0
        for i, ei in enumerate(e):
            if not ei:
                continue
            row = self.rows[i]
            total += ei * sum(row[j] * fj for j, fj in enumerate(f) if fj)
        return total

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SkewForm) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"SkewForm({[list(r) for r in self.rows]})"

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


class TorusElement:
    """Finite Z[v,v^-1]-combination of basis monomials X^e, e in Z^rank."""

    __slots__ = ("rank", "_terms")

    def __init__(self, rank: int, terms: Mapping[Vector, LaurentScalar] | None = None):
        self.rank = rank
        clean: dict[Vector, LaurentScalar] = {}
        if terms:
            for exp, coeff in terms.items():
                if len(exp) != rank:
                    raise ValueError("exponent length does not match rank")
                if coeff:
                    clean[tuple(exp)] = coeff
        self._terms = clean

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff: LaurentScalar | int = 1) -> TorusElement:
        if isinstance(coeff, int):
            coeff = LaurentScalar(coeff)
        return cls(len(exp), {tuple(int(x) for x in exp): coeff})

    @classmethod
    def one(cls, rank: int) -> TorusElement:
        return cls.monomial((0,) * rank)

    @classmethod
    def zero(cls, rank: int) -> TorusElement:
        return cls(rank)

    def terms(self) -> Iterator[tuple[Vector, LaurentScalar]]:
        """(exponent, coefficient) pairs in ascending lex order."""
        return iter(sorted(self._terms.items()))

    def coefficient(self, exp: Sequence[int]) -> LaurentScalar:
        return self._terms.get(tuple(exp), LaurentScalar.zero())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TorusElement):
            return NotImplemented
        return self.rank == other.rank and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.rank, frozenset(self._terms.items())))

    def key(self) -> tuple:
        """Canonical hashable key (used for seed deduplication)."""
        return (self.rank, tuple((e, str(c)) for e, c in self.terms()))

    def __add__(self, other: TorusElement) -> TorusElement:
        if not isinstance(other, TorusElement):
            return NotImplemented
        if self.rank != other.rank:
            raise ValueError("rank mismatch in addition")
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, LaurentScalar.zero()) + c
        return TorusElement(self.rank, out)

    def __neg__(self) -> TorusElement:
        return TorusElement(self.rank, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: TorusElement) -> TorusElement:
        return self + (-other)

    def scale(self, s: LaurentScalar | int) -> TorusElement:
        if isinstance(s, int):
            s = LaurentScalar(s)
        return TorusElement(self.rank, {e: c * s for e, c in self._terms.items()})

    def __mul__(self, s: LaurentScalar | int) -> TorusElement:
        if isinstance(s, (LaurentScalar, int)):
            return self.scale(s)
        return NotImplemented

    __rmul__ = __mul__

    def lead(self) -> tuple[Vector, LaurentScalar]:
        """Lex-largest term."""
        e = max(self._terms)
        return e, self._terms[e]

    def low(self) -> tuple[Vector, LaurentScalar]:
        """Lex-smallest term."""
        e = min(self._terms)
        return e, self._terms[e]

    def specialize_commutative(self) -> dict[Vector, int]:
        """Set v = 1 and forget the ordering: plain commutative Laurent data."""
        out: dict[Vector, int] = {}
        for e, c in self._terms.items():
            n = c.at_one()
            if n:
                out[e] = n
        return out

    def specialize_sqrt(self, p: int) -> dict[Vector, tuple]:
        """Coefficients evaluated exactly at v = sqrt(p)."""
        out = {}
        for e, c in self._terms.items():
            val = c.specialize_sqrt(p)
            if val != (0, 0):
                out[e] = val
        return out

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "terms": [{"exp": list(e), "coeff": str(c)} for e, c in self.terms()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> TorusElement:
        terms = {
            tuple(t["exp"]): LaurentScalar.parse(t["coeff"]) for t in data["terms"]
        }
        return cls(int(data["rank"]), terms)

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({c})*X^{list(e)}" for e, c in self.terms())


def torus_mul(form: SkewForm, a: TorusElement, b: TorusElement) -> TorusElement:
    """Twisted product: X^e X^f = v^{Lambda(e,f)} X^{e+f}, extended bilinearly."""
    if a.rank != b.rank or a.rank != form.rank:
        raise ValueError("rank mismatch in torus multiplication")
    out: dict[Vector, LaurentScalar] = {}
    for e, ce in a._terms.items():
        for f, cf in b._terms.items():
            g = tuple(x + y for x, y in zip(e, f))
            c = (ce * cf).shift(form.eval(e, f))
            acc = out.get(g)
            out[g] = c if acc is None else acc + c
    return TorusElement(a.rank, out)


def torus_pow(form: SkewForm, a: TorusElement, n: int) -> TorusElement:
    """Non-negative power under the twisted product."""
    if n < 0:
        raise ValueError("torus_pow requires n >= 0")
    result = TorusElement.one(form.rank)
    for _ in range(n):
        result = torus_mul(form, result, a)
    return result


def frame_monomial(form: SkewForm, c: Sequence[int]) -> TorusElement:
    """Normalized frame monomial M(c) = v^{sum_{i<j} c_i c_j l_{ji}} X_1^{c_1}...X_m^{c_m}.

    Expanding the ordered product in the lattice basis cancels the prefactor,
    so the result is the plain basis monomial X^c.
    """
    m = form.rank
    c = tuple(int(x) for x in c)
    if len(c) != m:
        raise ValueError("vector length does not match form rank")
    twist = 0
    for i in range(m):
        if not c[i]:
            continue
        for j in range(i + 1, m):
            twist += c[i] * c[j] * form.rows[j][i]
    acc = TorusElement.one(m)
    for i, ci in enumerate(c):
        if ci:
            step = [0] * m
            step[i] = ci
            acc = torus_mul(form, acc, TorusElement.monomial(step))
    return acc.scale(LaurentScalar.v_power(twist))


def frame_product_scalar(form: SkewForm, c: Sequence[int], d: Sequence[int]) -> LaurentScalar:
    """The scalar v^{Lambda(c,d)} with M(c)M(d) = v^{Lambda(c,d)} M(c+d), verified.

    Also checks the reordering relation M(c)M(d) = v^{2 Lambda(c,d)} M(d)M(c).
    """
    mc = frame_monomial(form, c)
    md = frame_monomial(form, d)
    w = form.eval(c, d)
    scalar = LaurentScalar.v_power(w)
    prod = torus_mul(form, mc, md)
    csum = tuple(x + y for x, y in zip(c, d))
    if prod != frame_monomial(form, csum).scale(scalar):
        raise ArithmeticError("frame monomial product relation violated")
    if prod != torus_mul(form, md, mc).scale(LaurentScalar.v_power(2 * w)):
        raise ArithmeticError("frame monomial reordering relation violated")
    return scalar


def torus_exact_div(
    form: SkewForm,
    numerator: TorusElement,
    divisor: TorusElement,
    max_quotient_terms: int = 100_000,
) -> TorusElement:
    """The unique Q with torus_mul(Q, divisor) == numerator, if it exists.

    Top reduction in lex order on exponents.  Because lead and low exponents
    are multiplicative, any true quotient term g obeys
    low(N) - low(D) <= g <= lead(N) - lead(D) (lex); a step outside that
    window, or an inexact coefficient division, raises NotDivisibleError.
    """
    if not divisor:
        raise ZeroDivisionError("division by zero torus element")
    if not numerator:
        return TorusElement.zero(form.rank)
    if numerator.rank != divisor.rank or numerator.rank != form.rank:
        raise ValueError("rank mismatch in torus division")
    lead_d, lc_d = divisor.lead()
    low_d, _ = divisor.low()
    low_n, _ = numerator.low()
    quo_low = tuple(a - b for a, b in zip(low_n, low_d))
    remainder = numerator
    quotient: dict[Vector, LaurentScalar] = {}
    while remainder:
        e, ce = remainder.lead()
        g = tuple(a - b for a, b in zip(e, lead_d))
        if g < quo_low:
            raise NotDivisibleError("quotient exponent below reachable support")
        try:
            coeff = ce.shift(-form.eval(g, lead_d)).divexact(lc_d)
        except NotDivisibleError as exc:
            raise NotDivisibleError(f"leading coefficient not divisible: {exc}") from exc
        quotient[g] = coeff
        if len(quotient) > max_quotient_terms:
            raise BudgetExceededError("torus division exceeded quotient term budget")
        remainder = remainder - torus_mul(form, TorusElement.monomial(g, coeff), divisor)
    return TorusElement(form.rank, quotient)


def torus_equal_specialized(a: TorusElement, b: TorusElement, p: int) -> bool:
    """Exact equality after evaluating coefficients at v = sqrt(p)."""
    if a.rank != b.rank:
        return False
    return a.specialize_sqrt(p) == b.specialize_sqrt(p)


def torus_to_json_str(el: TorusElement) -> str:
    """Deterministic JSON serialization (sorted terms, sorted keys)."""
    return json.dumps(el.to_json(), sort_keys=True)


def commutative_mul(a: Mapping[Vector, int], b: Mapping[Vector, int]) -> dict[Vector, int]:
    """Product of commutative Laurent data as produced by specialize_commutative."""
    out: dict[Vector, int] = {}
    for e, ce in a.items():
        for f, cf in b.items():
            g = tuple(x + y for x, y in zip(e, f))
            out[g] = out.get(g, 0) + ce * cf
    return {e: c for e, c in out.items() if c}
