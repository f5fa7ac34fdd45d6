"""Exact scalar and dense polynomial arithmetic over the rationals.

Everything in this module is exact and immutable.  Integers are Python's
arbitrary-precision ``int``, rationals are ``fractions.Fraction`` (always
in lowest terms, positive denominator), and polynomials are dense tuples
of ``Fraction`` coefficients indexed by power (constant term first).

The polynomial type deliberately has no floating-point escape hatch: every
operation that could lose exactness raises instead.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator, Union

# Public aliases for the exact scalar types used throughout the package.
BigInt = int
BigRat = Fraction

Scalar = Union[int, Fraction]

# Products where both operands have at least this many coefficients use the
# divide-and-conquer (Karatsuba) path; below it schoolbook convolution wins.
KARATSUBA_CUTOFF = 32


def _convolve_schoolbook(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def _add_into(target: list, source: list, offset: int) -> None:
    for i, c in enumerate(source):
        target[offset + i] += c


def _convolve(a: list, b: list) -> list:
    """Convolution of two nonempty coefficient lists of exact scalars."""
    la, lb = len(a), len(b)
    if min(la, lb) < KARATSUBA_CUTOFF:
        return _convolve_schoolbook(a, b)
    m = (max(la, lb) + 1) // 2
    if la <= m or lb <= m:
        # Unbalanced operands: split only the longer one.
        if la < lb:
            a, b, la, lb = b, a, lb, la
        out = [0] * (la + lb - 1)
        _add_into(out, _convolve(a[:m], b), 0)
        _add_into(out, _convolve(a[m:], b), m)
        return out
    a0, a1 = a[:m], a[m:]
    b0, b1 = b[:m], b[m:]
    z0 = _convolve(a0, b0)
    z2 = _convolve(a1, b1)
    sa = [0] * max(len(a0), len(a1))
    _add_into(sa, a0, 0)
    _add_into(sa, a1, 0)
    sb = [0] * max(len(b0), len(b1))
    _add_into(sb, b0, 0)
    _add_into(sb, b1, 0)
    z1 = _convolve(sa, sb)
    out = [0] * (la + lb - 1)
    _add_into(out, z0, 0)
    _add_into(out, z2, 2 * m)
    for i, c in enumerate(z1):
        out[m + i] += c
    for i, c in enumerate(z0):
        out[m + i] -= c
    for i, c in enumerate(z2):
        out[m + i] -= c
    return out


class ExactPoly:
    """A dense univariate polynomial with exact rational coefficients.

    Coefficients are stored from the constant term upward, with trailing
    zeros stripped, so equal polynomials always have equal tuples.  The
    zero polynomial is the empty tuple and reports ``degree() is None``
    rather than any numeric sentinel.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self._coeffs = tuple(cs)

    # -- basic structure ---------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """Coefficient tuple, constant term first, no trailing zeros."""
        return self._coeffs

    def degree(self) -> int | None:
        """Degree of the polynomial, or None for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, k: int) -> Fraction:
        """Coefficient of x**k (zero beyond the stored degree)."""
        if k < 0:
            raise ValueError("coefficient index must be nonnegative")
        return self._coeffs[k] if k < len(self._coeffs) else Fraction(0)

    def leading_coefficient(self) -> Fraction:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ExactPoly):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"ExactPoly({self.to_text()!r})"

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self._coeffs)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: ExactPoly) -> ExactPoly:
        if not isinstance(other, ExactPoly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return ExactPoly(out)

    def __sub__(self, other: ExactPoly) -> ExactPoly:
        if not isinstance(other, ExactPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> ExactPoly:
        return ExactPoly(-c for c in self._coeffs)

    def __mul__(self, other: Union[ExactPoly, Scalar]) -> ExactPoly:
        if isinstance(other, ExactPoly):
            if self.is_zero or other.is_zero:
                return ExactPoly()
            return ExactPoly(_convolve(list(self._coeffs), list(other._coeffs)))
        if isinstance(other, (int, Fraction)):
            return ExactPoly(c * other for c in self._coeffs)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> ExactPoly:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial exponent must be a nonnegative integer")
        result = ExactPoly([1])
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __call__(self, x: Scalar) -> Fraction:
        """Evaluate by Horner's rule; exact for int or Fraction arguments."""
        x = x if isinstance(x, Fraction) else Fraction(x)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> ExactPoly:
        return ExactPoly(k * c for k, c in enumerate(self._coeffs) if k)

    def shift(self, c: Scalar) -> ExactPoly:
        """Return p(x + c), computed by repeated Horner passes (O(deg^2))."""
        c = c if isinstance(c, Fraction) else Fraction(c)
        out = list(self._coeffs)
        n = len(out)
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                out[j] += c * out[j + 1]
        return ExactPoly(out)

    def monic(self) -> ExactPoly:
        if not self._coeffs:
            raise ValueError("the zero polynomial cannot be made monic")
        lead = self._coeffs[-1]
        if lead == 1:
            return self
        return ExactPoly(c / lead for c in self._coeffs)

    # -- serialization -----------------------------------------------------

    def to_text(self) -> str:
        """Canonical text form: space-separated num/den, constant term first.

        The zero polynomial serializes as "0/1".  Round-trips exactly
        through from_text.
        """
        if not self._coeffs:
            return "0/1"
        return " ".join(f"{c.numerator}/{c.denominator}" for c in self._coeffs)

    @classmethod
    def from_text(cls, text: str) -> ExactPoly:
        tokens = text.split()
        if not tokens:
            raise ValueError("empty polynomial text")
        coeffs = []
        for pos, tok in enumerate(tokens, start=1):
            try:
                coeffs.append(Fraction(tok))
            except (ValueError, ZeroDivisionError) as exc:
                raise ValueError(f"invalid coefficient token {pos}: {tok!r}") from exc
        return cls(coeffs)


# -- module-level operations ----------------------------------------------


def poly_add(a: ExactPoly, b: ExactPoly) -> ExactPoly:
    return a + b


def poly_mul(a: ExactPoly, b: ExactPoly) -> ExactPoly:
    return a * b


def poly_eval(p: ExactPoly, x: Scalar) -> Fraction:
    return p(x)


def poly_derivative(p: ExactPoly) -> ExactPoly:
    return p.derivative()


def poly_divmod(a: ExactPoly, b: ExactPoly) -> tuple[ExactPoly, ExactPoly]:
    """Exact quotient and remainder with deg(remainder) < deg(b)."""
    if b.is_zero:
        raise ZeroDivisionError("polynomial division by the zero polynomial")
    if a.is_zero or len(a.coeffs) < len(b.coeffs):
        return ExactPoly(), a
    rem = list(a.coeffs)
    div = b.coeffs
    lead = div[-1]
    dq = len(rem) - len(div)
    quot = [Fraction(0)] * (dq + 1)
    for k in range(dq, -1, -1):
        c = rem[k + len(div) - 1]
        if c:
            c = c / lead
            quot[k] = c
            for i, d in enumerate(div):
                rem[k + i] -= c * d
    return ExactPoly(quot), ExactPoly(rem[: len(div) - 1])


def _primitive_int_coeffs(coeffs: Iterable[Fraction]) -> list[int]:
    """Scale rational coefficients by a positive rational to primitive ints.

    The scale factor is always positive, so signs are preserved.
    """
    cs = list(coeffs)
    if not cs:
        return []
    denom_lcm = 1
    for c in cs:
        denom_lcm = math.lcm(denom_lcm, c.denominator)
    ints = [int(c * denom_lcm) for c in cs]
    content = 0
    for v in ints:
        content = math.gcd(content, v)
    if content > 1:
        ints = [v // content for v in ints]
    return ints


def _int_prem_signed(f: list[int], g: list[int]) -> list[int]:
    """Integer multiple of rem(f, g) with a positive scale factor.

    Runs the pseudo-division loop entirely over the integers, then fixes
    the sign so the result is a positive rational multiple of the true
    remainder.  Trailing zeros stripped.
    """
    dg = len(g) - 1
    lg = g[-1]
    r = list(f)
    steps = 0
    while r and len(r) - 1 >= dg:
        if r[-1] == 0:
            r.pop()
            continue
        c = r[-1]
        r = [lg * x for x in r]
        steps += 1
        off = len(r) - 1 - dg
        for i in range(dg):
            r[off + i] -= c * g[i]
        r.pop()
    while r and r[-1] == 0:
        r.pop()
    if lg < 0 and steps % 2 == 1:
        r = [-x for x in r]
    return r


def _primitive_part(ints: list[int]) -> list[int]:
    content = 0
    for v in ints:
        content = math.gcd(content, v)
    if content > 1:
        return [v // content for v in ints]
    return list(ints)


def poly_gcd(a: ExactPoly, b: ExactPoly) -> ExactPoly:
    """Monic gcd via a primitive pseudo-remainder sequence (exact).

    gcd(p, 0) = monic(p); gcd(0, 0) is undefined and raises.
    """
    if a.is_zero and b.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    f = _primitive_int_coeffs(a.coeffs)
    g = _primitive_int_coeffs(b.coeffs)
    if len(f) < len(g):
        f, g = g, f
    while g:
        r = _primitive_part(_int_prem_signed(f, g))
        f, g = g, r
    return ExactPoly(f).monic()


def binomial(top: Scalar, k: int) -> Fraction:
    """Generalized binomial coefficient C(top, k) = top(top-1)...(top-k+1)/k!.

    top may be any integer or rational; k must be a nonnegative integer.
    """
    if not isinstance(k, int) or k < 0:
        raise ValueError("binomial lower index must be a nonnegative integer")
    top = top if isinstance(top, Fraction) else Fraction(top)
    num = Fraction(1)
    for i in range(k):
        num *= top - i
    return num / math.factorial(k)
