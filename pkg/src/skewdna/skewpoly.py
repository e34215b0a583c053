"""Skew polynomials over R_{k,s} with the twisted product x*a = theta(a)*x."""

from __future__ import annotations

from typing import Sequence

from .ring import Ring, RingElement


class UnsupportedDivisorError(ValueError):
    """Right division was asked for by a divisor that is not monic."""


class SkewPoly:
    """Coefficient sequence, lowest degree first; trailing zeros are trimmed."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: Ring, coeffs: Sequence[RingElement]):
        cs = list(coeffs)
        for c in cs:
            if c.ring is not ring and c.ring != ring:
                raise ValueError("coefficient belongs to a different ring")
        while cs and not cs[-1]:
            cs.pop()
        self.ring = ring
        self.coeffs: tuple[RingElement, ...] = tuple(cs)

    @classmethod
    def monomial(cls, ring: Ring, degree: int, coeff: RingElement | None = None) -> "SkewPoly":
        c = ring.one if coeff is None else coeff
        return cls(ring, [ring.zero] * degree + [c])

    @classmethod
    def xn_minus_1(cls, ring: Ring, n: int) -> "SkewPoly":
        return cls(ring, [ring.one] + [ring.zero] * (n - 1) + [ring.one])

    @classmethod
    def constant(cls, ring: Ring, c: RingElement) -> "SkewPoly":
        return cls(ring, [c])

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> RingElement:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int) -> RingElement:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.ring.zero

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.ring.one

    def padded(self, n: int) -> list[RingElement]:
        if len(self.coeffs) > n:
            raise ValueError(f"degree {self.degree} does not fit in length {n}")
        return list(self.coeffs) + [self.ring.zero] * (n - len(self.coeffs))

    def _check(self, other: "SkewPoly") -> None:
        if not isinstance(other, SkewPoly):
            raise TypeError(f"expected SkewPoly, got {type(other).__name__}")
        if other.ring is not self.ring and other.ring != self.ring:
            raise ValueError("polynomials belong to different rings")

    def __add__(self, other: "SkewPoly") -> "SkewPoly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return SkewPoly(self.ring, [self.coeff(i) + other.coeff(i) for i in range(n)])

    __sub__ = __add__

    def __mul__(self, other: "SkewPoly") -> "SkewPoly":
        return skew_mul(self, other)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SkewPoly) and self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __str__(self) -> str:
        from .text import format_poly

        return format_poly(self)

    def __repr__(self) -> str:
        return f"SkewPoly({self})"

    def theta(self) -> "SkewPoly":
        return apply_theta(self)


def skew_mul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """(a x^i)(b x^j) = a theta^i(b) x^(i+j), extended bilinearly."""
    f._check(g)
    ring = f.ring
    if not f.coeffs or not g.coeffs:
        return SkewPoly(ring, [])
    twisted = (g.coeffs, tuple(ring.theta(b) for b in g.coeffs))
    out = [ring.zero] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        if not a:
            continue
        for j, b in enumerate(twisted[i & 1]):
            if b:
                out[i + j] = out[i + j] + a * b
    return SkewPoly(ring, out)


def right_divmod(f: SkewPoly, g: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """Return (q, r) with f = q*g + r and deg r < deg g; g must be monic."""
    f._check(g)
    ring = f.ring
    if not g.coeffs:
        raise ZeroDivisionError("division by the zero polynomial")
    if not g.is_monic():
        hint = " (unit leading coefficient: normalize first)" if g.lead.is_unit() else ""
        raise UnsupportedDivisorError(f"divisor must be monic{hint}")
    dg = g.degree
    twisted = (g.coeffs, tuple(ring.theta(b) for b in g.coeffs))
    r = list(f.coeffs)
    q = [ring.zero] * max(len(r) - dg, 0)
    for top in range(len(r) - 1, dg - 1, -1):
        c = r[top]
        if not c:
            continue
        d = top - dg
        q[d] = c
        for j, b in enumerate(twisted[d & 1]):
            if b:
                r[d + j] = r[d + j] + c * b
    return SkewPoly(ring, q), SkewPoly(ring, r[:dg])


def right_divides_xn_minus_1(g: SkewPoly, n: int) -> bool:
    if n % 2:
        raise ValueError(f"code length must be even, got n={n}")
    if not g.is_monic():
        raise UnsupportedDivisorError("divisor must be monic")
    if not 1 <= g.degree < n:
        raise ValueError(f"need 1 <= deg g < n, got deg g = {g.degree}, n = {n}")
    _, r = right_divmod(SkewPoly.xn_minus_1(g.ring, n), g)
    return not r


def is_palindromic(f: SkewPoly) -> bool:
    if not f:
        raise ValueError("palindromicity is undefined for the zero polynomial")
    cs = f.coeffs
    t = len(cs) - 1
    return all(cs[i] == cs[t - i] for i in range(t + 1))


def is_theta_palindromic(f: SkewPoly) -> bool:
    if not f:
        raise ValueError("palindromicity is undefined for the zero polynomial")
    cs = f.coeffs
    t = len(cs) - 1
    th = f.ring.theta
    return all(cs[i] == th(cs[t - i]) for i in range(t + 1))


def apply_theta(f: SkewPoly) -> SkewPoly:
    return SkewPoly(f.ring, [f.ring.theta(c) for c in f.coeffs])
