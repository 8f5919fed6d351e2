"""Exact univariate arithmetic over Z[t], Q(t) and Q[[t]].

Everything here is immutable and exact: coefficients are Python ``int`` or
``fractions.Fraction``.  The three value types are

``IntPolynomial``
    an element of Z[t], stored as a tuple of coefficients in ascending powers.
``RationalFunction``
    an element of Q(t) kept in a canonical reduced form so that equality is
    structural.
``TruncatedSeries``
    a power series known modulo t**order.

Determinants and adjugates of polynomial matrices are computed with
fraction-free (Bareiss) elimination so that every intermediate stays in Z[t].
"""

from __future__ import annotations

from fractions import Fraction
from itertools import zip_longest
from math import gcd
from typing import Iterable, Sequence, Union

__all__ = [
    "IntPolynomial",
    "RationalFunction",
    "TruncatedSeries",
    "InexactDivision",
    "UndefinedGCD",
    "PoleAtOrigin",
    "DEFAULT_ORDER",
    "ONE_MINUS_T",
    "poly_add",
    "poly_mul",
    "poly_gcd",
    "poly_divexact",
    "ratfun_normalize",
    "ratfun_arith",
    "series_of_ratfun",
    "series_exp",
    "series_log",
    "det_bareiss",
    "adjugate",
    "poly_matmul",
]

DEFAULT_ORDER = 16


class InexactDivision(ArithmeticError):
    """Raised when a polynomial division that must be exact leaves a remainder."""


class UndefinedGCD(ArithmeticError):
    pass


class PoleAtOrigin(ArithmeticError):
    """Raised when expanding a rational function whose denominator vanishes at 0."""


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _term(coeff, power: int, first: bool) -> str:
    sign = "-" if coeff < 0 else "+"
    mag = -coeff if coeff < 0 else coeff
    if power == 0:
        body = str(mag)
    else:
        mono = "t" if power == 1 else f"t^{power}"
        body = mono if mag == 1 else f"{mag}{mono}"
    if first:
        return body if sign == "+" else "-" + body
    return f" {sign} {body}"


class IntPolynomial:
    """Polynomial in t with integer coefficients.

    ``IntPolynomial([1, -1, 1])`` is ``1 - t + t^2``.  Trailing zeros are
    stripped, so the zero polynomial has ``coeffs == ()`` and degree ``None``
    (standing in for minus infinity).
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = []
        for c in coeffs:
            if isinstance(c, bool) or not isinstance(c, int):
                if isinstance(c, Fraction) and c.denominator == 1:
                    c = c.numerator
                else:
                    raise TypeError(f"integer coefficient expected, got {c!r}")
            cs.append(int(c))
        object.__setattr__(self, "_coeffs", _strip(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls([c])

    @classmethod
    def monomial(cls, c: int, power: int) -> "IntPolynomial":
        return cls([0] * power + [c])

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int | None:
        """Degree, or ``None`` for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else None

    @property
    def valuation(self) -> int | None:
        """Index of the lowest nonzero coefficient (``None`` for zero)."""
        for i, c in enumerate(self._coeffs):
            if c:
                return i
        return None

    def is_zero(self) -> bool:
        return not self._coeffs

    def leading(self) -> int:
        return self._coeffs[-1] if self._coeffs else 0

    def lowest(self) -> int:
        v = self.valuation
        return 0 if v is None else self._coeffs[v]

    def content(self) -> int:
        g = 0
        for c in self._coeffs:
            g = gcd(g, c)
        return g

    def primitive_part(self) -> "IntPolynomial":
        """Divide out the content; the sign is left alone."""
        g = self.content()
        if g in (0, 1):
            return self
        return IntPolynomial(c // g for c in self._coeffs)

    def __getitem__(self, i: int) -> int:
        return self._coeffs[i] if 0 <= i < len(self._coeffs) else 0

    def __len__(self) -> int:
        return len(self._coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(("IntPolynomial", self._coeffs))

    def __bool__(self):
        return bool(self._coeffs)

    def __neg__(self):
        return IntPolynomial(-c for c in self._coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return poly_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return poly_add(self, -other)

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return poly_add(other, -self)

    def __mul__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result, base = IntPolynomial([1]), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by t**k, or divide by t**-k when k < 0 (must be exact)."""
        if k >= 0:
            return IntPolynomial((0,) * k + self._coeffs) if self._coeffs else self
        if any(self._coeffs[:-k]):
            raise InexactDivision(f"{self} is not divisible by t^{-k}")
        return IntPolynomial(self._coeffs[-k:])

    def __repr__(self):
        return f"IntPolynomial({list(self._coeffs)})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self._coeffs):
            if c:
                parts.append(_term(c, i, not parts))
        return "".join(parts)


def _as_poly(x) -> IntPolynomial | None:
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return IntPolynomial([x])
    return None


ONE = IntPolynomial([1])
ZERO = IntPolynomial()
T = IntPolynomial([0, 1])
ONE_MINUS_T = IntPolynomial([1, -1])


def poly_add(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    return IntPolynomial(x + y for x, y in zip_longest(a.coeffs, b.coeffs, fillvalue=0))


def poly_mul(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    if a.is_zero() or b.is_zero():
        return ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                out[i + j] += x * y
    return IntPolynomial(out)


def _normalize_sign(p: IntPolynomial) -> IntPolynomial:
    return -p if p.lowest() < 0 else p


def _prem(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive pseudo-remainder of a by b (b nonzero)."""
    db, lb = b.degree, b.leading()
    r = a
    while not r.is_zero() and r.degree >= db:
        r = (r * lb - b.shift(r.degree - db) * r.leading()).primitive_part()
    return r


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Greatest common divisor in Z[t].

    The result is primitive with positive lowest-order coefficient.
    """
    if a.is_zero() and b.is_zero():
        raise UndefinedGCD("undefined gcd: both arguments are zero")
    a, b = a.primitive_part(), b.primitive_part()
    if not b.is_zero() and (a.is_zero() or a.degree < b.degree):
        a, b = b, a
    while not b.is_zero():
        a, b = b, _prem(a, b)
    return _normalize_sign(a.primitive_part())


def poly_divexact(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Quotient ``q`` with ``q * b == a``; raises ``InexactDivision`` otherwise."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if a.is_zero():
        return ZERO
    db, lb = b.degree, b.leading()
    rem = list(a.coeffs)
    if len(rem) - 1 < db:
        raise InexactDivision(f"inexact division: {a} by {b}")
    q = [0] * (len(rem) - db)
    for k in range(len(q) - 1, -1, -1):
        c = rem[k + db]
        if c % lb:
            raise InexactDivision(f"inexact division: {a} by {b}")
        c //= lb
        q[k] = c
        if c:
            for j, bj in enumerate(b.coeffs):
                rem[k + j] -= c * bj
    if any(rem):
        raise InexactDivision(f"inexact division: {a} by {b}")
    return IntPolynomial(q)


def poly_matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> list[list[IntPolynomial]]:
    """Product of two matrices with IntPolynomial (or int) entries."""
    n, inner, p = len(A), len(B), len(B[0]) if B else 0
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            acc = ZERO
            for k in range(inner):
                acc = acc + _as_poly(A[i][k]) * _as_poly(B[k][j])
            row.append(acc)
        out.append(row)
    return out


# ---------------------------------------------------------------- Q(t)


def ratfun_normalize(num: IntPolynomial, den: IntPolynomial) -> "RationalFunction":
    return RationalFunction(num, den)


class RationalFunction:
    """Element of Q(t) in canonical form.

    The stored numerator and denominator are integer polynomials with no
    common factor of positive degree and coprime contents, and the lowest
    nonzero coefficient of the denominator is positive.  Zero is ``0/1``.
    Two equal rational functions therefore have identical parts.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, num: IntPolynomial | int, den: IntPolynomial | int = 1):
        num, den = _as_poly(num), _as_poly(den)
        if num is None or den is None:
            raise TypeError("numerator and denominator must be IntPolynomial or int")
        if den.is_zero():
            raise ZeroDivisionError("division by zero: denominator is the zero polynomial")
        if num.is_zero():
            num, den = ZERO, ONE
        else:
            g = poly_gcd(num, den)
            if g.degree:
                num, den = poly_divexact(num, g), poly_divexact(den, g)
            c = gcd(num.content(), den.content())
            if c != 1:
                num = IntPolynomial(x // c for x in num.coeffs)
                den = IntPolynomial(x // c for x in den.coeffs)
            if den.lowest() < 0:
                num, den = -num, -den
        object.__setattr__(self, "_num", num)
        object.__setattr__(self, "_den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @property
    def numerator(self) -> IntPolynomial:
        return self._num

    @property
    def denominator(self) -> IntPolynomial:
        return self._den

    def is_zero(self) -> bool:
        return self._num.is_zero()

    def is_polynomial(self) -> bool:
        """True when the value lies in Z[t] (denominator is exactly 1)."""
        return self._den == ONE

    def series(self, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return series_of_ratfun(self, order)

    def __eq__(self, other):
        if isinstance(other, (int, IntPolynomial)) and not isinstance(other, bool):
            other = RationalFunction(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self):
        return hash(("RationalFunction", self._num.coeffs, self._den.coeffs))

    def __neg__(self):
        return RationalFunction(-self._num, self._den)

    def __add__(self, other):
        other = _as_ratfun(other)
        if other is None:
            return NotImplemented
        return ratfun_arith(self, other, "add")

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_ratfun(other)
        if other is None:
            return NotImplemented
        return ratfun_arith(self, -other, "add")

    def __rsub__(self, other):
        other = _as_ratfun(other)
        if other is None:
            return NotImplemented
        return ratfun_arith(other, -self, "add")

    def __mul__(self, other):
        other = _as_ratfun(other)
        if other is None:
            return NotImplemented
        return ratfun_arith(self, other, "mul")

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_ratfun(other)
        if other is None:
            return NotImplemented
        return ratfun_arith(self, other, "div")

    def __rtruediv__(self, other):
        other = _as_ratfun(other)
        if other is None:
            return NotImplemented
        return ratfun_arith(other, self, "div")

    def __pow__(self, n: int):
        if n < 0:
            return RationalFunction(1) / self ** (-n)
        return RationalFunction(self._num ** n, self._den ** n)

    def __repr__(self):
        return f"RationalFunction({self._num!r}, {self._den!r})"

    def __str__(self):
        num = _format_factor(self._num)
        if self._den == ONE:
            return num
        return f"{num}/{_format_factor(self._den)}"


def _as_ratfun(x) -> RationalFunction | None:
    if isinstance(x, RationalFunction):
        return x
    p = _as_poly(x)
    return None if p is None else RationalFunction(p)


def _one_minus_t_power(p: IntPolynomial) -> tuple[int, int] | None:
    """Return (sign, k) when p == sign * (1 - t)**k for some k >= 1."""
    k = p.degree
    if not k:
        return None
    for sign in (1, -1):
        if p == ONE_MINUS_T ** k * sign:
            return sign, k
    return None


def _format_factor(p: IntPolynomial) -> str:
    hit = _one_minus_t_power(p)
    if hit is not None:
        sign, k = hit
        body = "(1 - t)" if k == 1 else f"(1 - t)^{k}"
        return body if sign > 0 else "-" + body
    s = str(p)
    return s if len([c for c in p.coeffs if c]) <= 1 else f"({s})"


def ratfun_arith(a: RationalFunction, b: RationalFunction, op: str) -> RationalFunction:
    """Field operation ``op`` in {"add", "mul", "div"} on canonical inputs."""
    if op == "add":
        if a._den == b._den:
            return RationalFunction(a._num + b._num, a._den)
        return RationalFunction(a._num * b._den + b._num * a._den, a._den * b._den)
    if op == "mul":
        return RationalFunction(a._num * b._num, a._den * b._den)
    if op == "div":
        if b.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(a._num * b._den, a._den * b._num)
    raise ValueError(f"unknown operation {op!r}")


# ---------------------------------------------------------------- Q[[t]]


class TruncatedSeries:
    """Power series over Q known modulo ``t**order``.

    Binary operations truncate to the smaller of the two orders.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(cs)
        if order < 1:
            raise ValueError("series order must be positive")
        cs = (cs + [Fraction(0)] * order)[:order]
        object.__setattr__(self, "_coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def from_polynomial(cls, p: IntPolynomial, order: int) -> "TruncatedSeries":
        return cls(p.coeffs, order)

    @property
    def order(self) -> int:
        return len(self._coeffs)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def __getitem__(self, i):
        return self._coeffs[i]

    def __len__(self):
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self._coeffs[:order])

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._coeffs)

    def integer_coeffs(self) -> list[int]:
        if not self.is_integral():
            raise ValueError("series has non-integer coefficients")
        return [int(c) for c in self._coeffs]

    def first_difference(self, other: "TruncatedSeries") -> int | None:
        """Index of the first differing coefficient over the common order."""
        for i, (x, y) in enumerate(zip(self._coeffs, other._coeffs)):
            if x != y:
                return i
        return None

    def derivative(self) -> "TruncatedSeries":
        if self.order == 1:
            raise ValueError("derivative of an order-1 series is unknown")
        return TruncatedSeries([i * c for i, c in enumerate(self._coeffs)][1:])

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(("TruncatedSeries", self._coeffs))

    def _coerce(self, other) -> "TruncatedSeries | None":
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return TruncatedSeries([other], self.order)
        if isinstance(other, IntPolynomial):
            return TruncatedSeries.from_polynomial(other, self.order)
        return None

    def __neg__(self):
        return TruncatedSeries([-c for c in self._coeffs])

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = min(self.order, other.order)
        return TruncatedSeries([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self._coeffs, other._coeffs
        out = [Fraction(0)] * n
        for i in range(n):
            if a[i]:
                for j in range(n - i):
                    out[i + j] += a[i] * b[j]
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def reciprocal(self) -> "TruncatedSeries":
        a = self._coeffs
        if a[0] == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        out = [Fraction(1) / a[0]]
        for n in range(1, self.order):
            acc = sum((a[k] * out[n - k] for k in range(1, n + 1)), Fraction(0))
            out.append(-acc / a[0])
        return TruncatedSeries(out)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.reciprocal()

    def __repr__(self):
        return f"TruncatedSeries({[str(c) for c in self._coeffs]})"

    def __str__(self):
        parts = []
        for i, c in enumerate(self._coeffs):
            if c:
                parts.append(_term(c, i, not parts))
        head = "".join(parts) if parts else "0"
        return f"{head} + O(t^{self.order})"


def series_of_ratfun(r: RationalFunction, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Taylor coefficients of ``r`` at t = 0, modulo ``t**order``."""
    if order < 1:
        raise ValueError("series order must be positive")
    num, den = r.numerator, r.denominator
    d0 = den[0]
    if d0 == 0:
        raise PoleAtOrigin(f"pole at origin: denominator {den} vanishes at t=0")
    out: list[Fraction] = []
    for n in range(order):
        acc = Fraction(num[n])
        for k in range(1, min(n, den.degree) + 1):
            acc -= den[k] * out[n - k]
        out.append(acc / d0)
    return TruncatedSeries(out)


def series_exp(s: TruncatedSeries) -> TruncatedSeries:
    """exp(s) for a series with zero constant term."""
    if s[0] != 0:
        raise ValueError("exp requires zero constant term")
    # f' = s' f  gives  n f_n = sum_{k=1..n} k s_k f_{n-k}
    f = [Fraction(1)]
    for n in range(1, s.order):
        acc = sum((k * s[k] * f[n - k] for k in range(1, n + 1)), Fraction(0))
        f.append(acc / n)
    return TruncatedSeries(f)


def series_log(f: TruncatedSeries) -> TruncatedSeries:
    """log(f) for a series with constant term 1."""
    if f[0] != 1:
        raise ValueError("log requires constant term 1")
    s = [Fraction(0)]
    for n in range(1, f.order):
        acc = n * f[n] - sum((k * s[k] * f[n - k] for k in range(1, n)), Fraction(0))
        s.append(acc / n)
    return TruncatedSeries(s)


# ---------------------------------------------------------------- matrices


def _poly_matrix(M: Sequence[Sequence]) -> list[list[IntPolynomial]]:
    n = len(M)
    rows = []
    for row in M:
        if len(row) != n:
            raise ValueError("matrix must be square")
        entries = [_as_poly(x) for x in row]
        if None in entries:
            raise TypeError("matrix entries must be IntPolynomial or int")
        rows.append(entries)
    return rows


def det_bareiss(M: Sequence[Sequence[Union[IntPolynomial, int]]]) -> IntPolynomial:
    """Determinant over Z[t] by fraction-free Bareiss elimination.

    Each elimination step divides exactly by the previous pivot, so entries
    never leave Z[t].  The empty matrix has determinant 1.
    """
    A = _poly_matrix(M)
    n = len(A)
    if n == 0:
        return ONE
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if A[k][k].is_zero():
            for i in range(k + 1, n):
                if not A[i][k].is_zero():
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return ZERO
        pivot = A[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = poly_divexact(pivot * A[i][j] - A[i][k] * A[k][j], prev)
            A[i][k] = ZERO
        prev = pivot
    return A[n - 1][n - 1] * sign


def adjugate(M: Sequence[Sequence[Union[IntPolynomial, int]]]) -> list[list[IntPolynomial]]:
    """Classical adjugate, so that ``M @ adjugate(M) == det(M) * I``.

    Entry (i, j) is the signed (j, i) minor, each minor evaluated with
    :func:`det_bareiss`.
    """
    A = _poly_matrix(M)
    n = len(A)
    if n == 0:
        return []
    if n == 1:
        return [[ONE]]
    adj = [[ZERO] * n for _ in range(n)]
    for r in range(n):
        for c in range(n):
            minor = [[A[i][j] for j in range(n) if j != c] for i in range(n) if i != r]
            d = det_bareiss(minor)
            adj[c][r] = -d if (r + c) % 2 else d
    return adj
