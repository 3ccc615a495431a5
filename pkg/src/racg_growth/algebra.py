"""Exact univariate algebra over the rationals.

Polynomials in ``z`` with :class:`fractions.Fraction` coefficients, rational
functions kept in a canonical reduced form, Taylor expansion at ``z = 0`` and
a fraction-free linear solver over ``Q(z)``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


class NotAPowerSeries(ValueError):
    """Raised when a rational function has a pole at ``z = 0``."""


class SingularSystemError(ValueError):
    """Raised when a linear system has no unique solution over ``Q(z)``."""


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"expected int or Fraction coefficient, got {type(c).__name__}")


class Polynomial:
    """Immutable polynomial ``c[0] + c[1] z + ...`` with rational coefficients.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def constant(cls, c: Scalar) -> Polynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: Scalar = 1) -> Polynomial:
        return cls([0] * degree + [c])

    @classmethod
    def z(cls) -> Polynomial:
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def valuation(self) -> int:
        """Index of the lowest-degree nonzero coefficient (-1 for zero)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return -1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    @property
    def trailing(self) -> Fraction:
        """The lowest-degree nonzero coefficient."""
        v = self.valuation
        return self.coeffs[v] if v >= 0 else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __add__(self, other) -> Polynomial:
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __sub__(self, other) -> Polynomial:
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return Polynomial(c * other for c in self.coeffs)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self or not other:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other) -> tuple[Polynomial, Polynomial]:
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = other.degree
        lead = other.leading
        if len(rem) - 1 < dd:
            return Polynomial(), self
        quot = [Fraction(0)] * (len(rem) - dd)
        for k in range(len(rem) - 1 - dd, -1, -1):
            c = rem[k + dd] / lead
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Polynomial(quot), Polynomial(rem[:dd])

    def __floordiv__(self, other) -> Polynomial:
        return divmod(self, other)[0]

    def __mod__(self, other) -> Polynomial:
        return divmod(self, other)[1]

    def shift(self, k: int) -> Polynomial:
        """Multiply by ``z**k``."""
        if not self:
            return self
        return Polynomial([0] * k + list(self.coeffs))

    def exact_div(self, other: Polynomial) -> Polynomial:
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def integer_coefficients(self) -> list[int]:
        if not self.is_integral():
            raise ValueError(f"{self} has non-integer coefficients")
        return [c.numerator for c in self.coeffs]

    def primitive(self) -> Polynomial:
        """Integer-coefficient, content-1 multiple with positive trailing coefficient."""
        if not self:
            return self
        scale = _clearing_scale(self.coeffs)
        if self.trailing < 0:
            scale = -scale
        return self * scale

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = "z" if i == 1 else f"z^{i}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _as_poly(x) -> Polynomial | None:
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return Polynomial.constant(x)
    return None


def _clearing_scale(coeffs: Iterable[Fraction]) -> Fraction:
    """Positive rational ``s`` making ``s * c`` integers with joint gcd 1."""
    coeffs = [c for c in coeffs if c]
    den = reduce(lcm, (c.denominator for c in coeffs), 1)
    num = reduce(gcd, ((c * den).numerator for c in coeffs), 0)
    return Fraction(den, num)


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Greatest common divisor, primitive with positive lowest-degree coefficient."""
    while b:
        a, b = b, a % b
    return a.primitive()


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + b


def poly_sub(a: Polynomial, b: Polynomial) -> Polynomial:
    return a - b


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


def poly_divmod(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial]:
    return divmod(a, b)


Z = Polynomial.z()
ONE = Polynomial.constant(1)


class RationalFunction:
    """A quotient ``num / den`` of polynomials in canonical form.

    Canonical means: ``gcd(num, den) = 1``; ``num`` and ``den`` have integer
    coefficients whose joint gcd is 1; the lowest-degree nonzero coefficient of
    ``den`` is positive. Zero is ``0 / 1``.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        num = _as_poly(num) if not isinstance(num, Polynomial) else num
        den = _as_poly(den) if not isinstance(den, Polynomial) else den
        if num is None or den is None:
            raise TypeError("numerator and denominator must be polynomials or scalars")
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            num, den = Polynomial(), ONE
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num.exact_div(g), den.exact_div(g)
            scale = _clearing_scale(num.coeffs + den.coeffs)
            if den.trailing < 0:
                scale = -scale
            num, den = num * scale, den * scale
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def coerce(cls, x) -> RationalFunction:
        if isinstance(x, RationalFunction):
            return x
        return cls(x)

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Polynomial)):
            other = RationalFunction(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return not (self.num * other.den - other.num * self.den)

    def __bool__(self) -> bool:
        return bool(self.num)

    def __neg__(self) -> RationalFunction:
        return RationalFunction(-self.num, self.den)

    def __add__(self, other) -> RationalFunction:
        o = _as_ratfunc(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other) -> RationalFunction:
        o = _as_ratfunc(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> RationalFunction:
        o = _as_ratfunc(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other) -> RationalFunction:
        o = _as_ratfunc(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> RationalFunction:
        o = _as_ratfunc(other)
        if o is None:
            return NotImplemented
        if not o:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other) -> RationalFunction:
        o = _as_ratfunc(other)
        if o is None:
            return NotImplemented
        return o / self

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def series(self, max_len: int) -> list[Fraction]:
        return series_coefficients(self, max_len)

    def __repr__(self) -> str:
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        if self.den == ONE:
            return str(self.num)
        return f"({self.num}) / ({self.den})"


def _as_ratfunc(x) -> RationalFunction | None:
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, (int, Fraction, Polynomial)):
        return RationalFunction(x)
    return None


def ratfunc_normalize(num: Polynomial, den: Polynomial) -> RationalFunction:
    return RationalFunction(num, den)


def series_coefficients(f: RationalFunction, max_len: int) -> list[Fraction]:
    """Taylor coefficients ``a_0 .. a_max_len`` of ``f`` at ``z = 0``.

    Uses the recurrence ``d_0 a_k = n_k - sum_{j>=1} d_j a_{k-j}`` read off
    the denominator.
    """
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    den = f.den
    d0 = den[0]
    if d0 == 0:
        raise NotAPowerSeries(f"denominator {den} vanishes at z = 0")
    tail = den.coeffs[1:]
    out: list[Fraction] = []
    for k in range(max_len + 1):
        acc = f.num[k]
        for j, d in enumerate(tail, start=1):
            if j > k:
                break
            if d:
                acc -= d * out[k - j]
        out.append(acc / d0)
    return out


def solve_linear_system(
    A: Sequence[Sequence[Polynomial | Scalar]],
    b: Sequence[Polynomial | Scalar],
) -> list[RationalFunction]:
    """Solve ``A x = b`` over ``Q(z)`` for polynomial ``A`` and ``b``.

    Fraction-free (Bareiss) forward elimination keeps every entry a
    polynomial; the pivot in each column is the first nonzero entry at or
    below the diagonal. Back-substitution then runs in ``Q(z)``.
    """
    n = len(A)
    if len(b) != n or any(len(row) != n for row in A):
        raise ValueError("A must be square and match the length of b")
    M = [[_as_poly(x) for x in row] + [_as_poly(b[i])] for i, row in enumerate(A)]
    if any(x is None for row in M for x in row):
        raise TypeError("entries must be polynomials or scalars")

    prev = ONE
    for k in range(n):
        p = next((r for r in range(k, n) if M[r][k]), None)
        if p is None:
            raise SingularSystemError(f"no pivot in column {k}")
        if p != k:
            M[k], M[p] = M[p], M[k]
        pivot = M[k][k]
        for i in range(k + 1, n):
            mik = M[i][k]
            for j in range(k + 1, n + 1):
                M[i][j] = (M[i][j] * pivot - mik * M[k][j]).exact_div(prev)
            M[i][k] = Polynomial()
        prev = pivot

    x: list[RationalFunction] = [RationalFunction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = RationalFunction(M[i][n])
        for j in range(i + 1, n):
            if M[i][j]:
                acc = acc - M[i][j] * x[j]
        x[i] = acc / M[i][i]
    return x
