"""Exact real-root counting, isolation, and Hurwitz stability certificates.

All certificates here are algebraic: Sturm chains computed over the
integers (primitive pseudo-remainders, signs preserved), bisection with
rational endpoints, and a fraction-free Routh table.  No floating point
anywhere, so a verdict is a proof, not an approximation.

Sturm's theorem is used in the distinct-root form: the chain ends at
(a multiple of) gcd(p, p'), and the variation difference V(a) - V(b)
counts the distinct real roots in the half-open interval (a, b], square
free or not.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactnum import (
    ExactPoly,
    Scalar,
    _int_prem_signed,
    _primitive_int_coeffs,
    _primitive_part,
    poly_divmod,
    poly_gcd,
)


class RootAtEndpointError(ValueError):
    """An interval endpoint is itself a root.

    Sturm counts over half-open intervals need non-root endpoints; nudge
    the endpoint by any exact rational step and retry.
    """


class FactorizationError(ValueError):
    """A claimed polynomial factor does not divide exactly."""


@dataclass(frozen=True)
class RootInterval:
    """Half-open interval (lower, upper] containing `count` distinct real
    roots; endpoints are never roots themselves."""

    lower: Fraction
    upper: Fraction
    count: int

    def width(self) -> Fraction:
        return self.upper - self.lower


@dataclass(frozen=True)
class RouthVerdict:
    """Outcome of the Routh-Hurwitz test.

    stable    every root has strictly negative real part
    marginal  a zero pivot or zero row appeared (roots on the imaginary
              axis or a symmetric root pattern); stable is False
    stage     index of the offending table row when not strictly stable
    """

    stable: bool
    marginal: bool
    stage: int | None = None


@dataclass(frozen=True)
class SturmChain:
    """Sturm chain p0 = p, p1 = p', p_{k+1} = -rem(p_{k-1}, p_k).

    Members are stored primitive (integer coefficients, positive content
    removed), which rescales each by a positive constant and therefore
    changes no signs.  The chain ends at the last nonzero remainder, a
    constant for square-free p and a gcd multiple otherwise.
    """

    members: tuple[ExactPoly, ...]

    @classmethod
    def build(cls, p: ExactPoly) -> SturmChain:
        if p.is_zero:
            raise ValueError("cannot build a Sturm chain for the zero polynomial")
        f = _primitive_int_coeffs(p.coeffs)
        if len(f) == 1:
            return cls((ExactPoly(f),))
        fp = [k * c for k, c in enumerate(f)][1:]
        chain = [f, _primitive_part(fp)]
        while True:
            r = _primitive_part(_int_prem_signed(chain[-2], chain[-1]))
            if not r:
                break
            chain.append([-c for c in r])
        return cls(tuple(ExactPoly(c) for c in chain))

    def variations_at(self, x: Scalar) -> int:
        """Number of sign changes in the chain evaluated at x."""
        signs = []
        for member in self.members:
            v = member(x)
            if v:
                signs.append(1 if v > 0 else -1)
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def variations_at_infinity(self, positive: bool) -> int:
        """Sign changes in the limit x -> +inf or x -> -inf.

        At +inf the sign of each member is the sign of its leading
        coefficient; at -inf that sign flips for odd degrees.
        """
        signs = []
        for member in self.members:
            lead = member.leading_coefficient()
            s = 1 if lead > 0 else -1
            if not positive and member.degree() % 2 == 1:
                s = -s
            signs.append(s)
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(
    p: ExactPoly,
    lower: Scalar | None = None,
    upper: Scalar | None = None,
    chain: SturmChain | None = None,
) -> int:
    """Distinct real roots of p in (lower, upper]; None means unbounded.

    Finite endpoints must not be roots (RootAtEndpointError otherwise).
    Multiple roots are counted once: the chain construction works for
    non-square-free input because its tail divides every member, and
    dividing the whole chain by it leaves sign variations unchanged.
    """
    if p.is_zero:
        raise ValueError("root counting requires a nonzero polynomial")
    if lower is not None and upper is not None and Fraction(lower) >= Fraction(upper):
        raise ValueError("interval must satisfy lower < upper")
    if chain is None:
        chain = SturmChain.build(p)
    for endpoint in (lower, upper):
        if endpoint is not None and p(endpoint) == 0:
            raise RootAtEndpointError(
                f"{endpoint} is a root of the polynomial; Sturm endpoints must "
                "not be roots - shift the endpoint by a small exact rational"
            )
    va = (
        chain.variations_at_infinity(positive=False)
        if lower is None
        else chain.variations_at(lower)
    )
    vb = (
        chain.variations_at_infinity(positive=True)
        if upper is None
        else chain.variations_at(upper)
    )
    return va - vb


def _cauchy_bound(p: ExactPoly) -> Fraction:
    """A rational B with every real root of p strictly inside (-B, B)."""
    lead = abs(p.leading_coefficient())
    big = max((abs(c) for c in p.coeffs[:-1]), default=Fraction(0))
    return big / lead + 1


def isolate_real_roots(
    p: ExactPoly, max_width: Scalar = 1
) -> list[RootInterval]:
    """Disjoint rational intervals, each holding exactly one distinct real
    root of p, every interval no wider than max_width, sorted by position.

    Interval endpoints are never roots.  Works on non-square-free input
    (each distinct root is isolated once).
    """
    if p.is_zero:
        raise ValueError("root isolation requires a nonzero polynomial")
    max_width = Fraction(max_width)
    if max_width <= 0:
        raise ValueError("max_width must be positive")
    if p.degree() == 0:
        return []
    chain = SturmChain.build(p)
    bound = _cauchy_bound(p)
    total = chain.variations_at(-bound) - chain.variations_at(bound)
    if total == 0:
        return []
    done: list[RootInterval] = []
    stack: list[tuple[Fraction, Fraction, int]] = [(-bound, bound, total)]
    while stack:
        lo, hi, count = stack.pop()
        if count == 1 and hi - lo <= max_width:
            done.append(RootInterval(lo, hi, 1))
            continue
        mid = _nonroot_midpoint(p, lo, hi)
        vmid = chain.variations_at(mid)
        left = chain.variations_at(lo) - vmid
        right = count - left
        if left:
            stack.append((lo, mid, left))
        if right:
            stack.append((mid, hi, right))
    done.sort(key=lambda iv: iv.lower)
    return done


def _nonroot_midpoint(p: ExactPoly, lo: Fraction, hi: Fraction) -> Fraction:
    """A point near the middle of (lo, hi) where p does not vanish."""
    mid = (lo + hi) / 2
    step = 2
    while p(mid) == 0:
        mid = (lo + hi) / 2 + (hi - lo) / (1 << step)
        step += 1
    return mid


# Fixed 62-bit primes for the one-sided square-freeness certificate.
_SQFREE_PRIMES = (2**61 - 1, 2305843009213693967, 2305843009213693973)


def _gf_gcd_degree(f: Sequence[int], prime: int) -> int:
    """Degree of gcd(f, f') over GF(prime); caller checks leading terms."""
    a = [c % prime for c in f]
    b = [(k * c) % prime for k, c in enumerate(f)][1:]
    while b and b[-1] == 0:
        b.pop()
    while b:
        # reduce a mod b in place
        inv = pow(b[-1], prime - 2, prime)
        while len(a) >= len(b):
            if a[-1] == 0:
                a.pop()
                continue
            c = a[-1] * inv % prime
            off = len(a) - len(b)
            for i in range(len(b) - 1):
                a[off + i] = (a[off + i] - c * b[i]) % prime
            a.pop()
        while a and a[-1] == 0:
            a.pop()
        a, b = b, a
    return len(a) - 1


def is_square_free(p: ExactPoly) -> bool:
    """Whether gcd(p, p') is constant, i.e. p has no repeated roots.

    Tries a modular certificate first: if gcd(p mod q, p' mod q) is
    constant for a prime q that divides neither leading coefficient, then
    the rational gcd is constant too (the implication only runs this
    direction, so the shortcut is sound).  Falls back to the exact
    pseudo-remainder gcd when the modular answer is inconclusive.
    """
    if p.is_zero:
        raise ValueError("square-freeness is undefined for the zero polynomial")
    deg = p.degree()
    if deg <= 1:
        return True
    f = _primitive_int_coeffs(p.coeffs)
    for prime in _SQFREE_PRIMES:
        if f[-1] % prime == 0 or (deg * f[-1]) % prime == 0:
            continue
        if _gf_gcd_degree(f, prime) == 0:
            return True
        break
    return poly_gcd(p, p.derivative()).degree() == 0


def square_free_part(p: ExactPoly) -> ExactPoly:
    """p divided by gcd(p, p'): same roots, all simple."""
    if p.is_zero:
        raise ValueError("square-free part is undefined for the zero polynomial")
    if p.degree() == 0:
        return p.monic()
    g = poly_gcd(p, p.derivative())
    if g.degree() == 0:
        return p.monic()
    quotient, remainder = poly_divmod(p, g)
    assert remainder.is_zero
    return quotient.monic()


def is_real_rooted(p: ExactPoly) -> bool:
    """Whether every complex root of p is real (counted without
    multiplicity, which loses nothing)."""
    if p.is_zero:
        raise ValueError("real-rootedness is undefined for the zero polynomial")
    reduced = square_free_part(p)
    if reduced.degree() == 0:
        return True
    return count_real_roots(reduced) == reduced.degree()


def all_real_roots_negative(p: ExactPoly) -> bool:
    """True iff p has no real root in [0, +infinity).

    Complex roots are not constrained; combine with is_real_rooted when
    full negativity of the spectrum is the question.
    """
    if p.is_zero:
        raise ValueError("the zero polynomial has no root data")
    if p(0) == 0:
        return False
    return count_real_roots(p, lower=0, upper=None) == 0


def hurwitz_stable(p: ExactPoly) -> RouthVerdict:
    """Routh-Hurwitz test: do all roots lie in the open left half-plane?

    Runs the classic first-column test on a fraction-free Routh table:
    each new row is built from integer cross-products and divided by its
    positive content, which rescales rows by positive constants and so
    preserves every pivot sign.  No epsilon perturbations: a zero pivot
    or zero row stops the test with marginal=True and the stage recorded.

    The polynomial must have a nonzero constant term; divide out the
    trivial root at zero first (a root at the origin is never in the open
    left half-plane anyway).
    """
    if p.is_zero:
        raise ValueError("stability is undefined for the zero polynomial")
    if p.coefficient(0) == 0:
        raise ValueError(
            "zero constant term: factor out the root at the origin before "
            "running the stability test"
        )
    deg = p.degree()
    if deg == 0:
        return RouthVerdict(stable=True, marginal=False, stage=None)
    ints = _primitive_int_coeffs(p.coeffs)
    desc = list(reversed(ints))
    if desc[0] < 0:
        desc = [-c for c in desc]
    rows: list[list[int]] = [desc[0::2], desc[1::2]]
    while True:
        prev, cur = rows[-2], rows[-1]
        stage = len(rows) - 1
        if not cur or all(c == 0 for c in cur):
            return RouthVerdict(stable=False, marginal=True, stage=stage)
        if cur[0] == 0:
            return RouthVerdict(stable=False, marginal=True, stage=stage)
        if cur[0] < 0:
            return RouthVerdict(stable=False, marginal=False, stage=stage)
        if len(prev) == 1:
            break
        nxt = []
        for i in range(len(prev) - 1):
            a = prev[i + 1]
            b = cur[i + 1] if i + 1 < len(cur) else 0
            nxt.append(cur[0] * a - prev[0] * b)
        rows.append(_primitive_part(nxt))
    return RouthVerdict(stable=True, marginal=False, stage=None)


def verify_factorization(
    p: ExactPoly, factors: Sequence[ExactPoly]
) -> ExactPoly:
    """Divide p by each factor in turn, insisting on zero remainders.

    Returns the final quotient (the cofactor left after all divisions).
    Raises FactorizationError naming the first factor that fails.
    """
    current = p
    for index, factor in enumerate(factors):
        quotient, remainder = poly_divmod(current, factor)
        if not remainder.is_zero:
            raise FactorizationError(
                f"factor {index} ({factor.to_text()}) leaves remainder "
                f"{remainder.to_text()}"
            )
        current = quotient
    return current
