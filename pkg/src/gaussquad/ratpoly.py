"""Dense univariate polynomials over exact rationals.

Coefficients are stored ascending by degree as a tuple of Fractions; the
zero polynomial is the empty tuple and every constructor strips trailing
zero coefficients, so equal polynomials compare equal structurally.
Degrees in this package never exceed a few dozen, which keeps the dense
representation and the quadratic-time algorithms below entirely adequate.
"""

from __future__ import annotations

from decimal import Decimal
from fractions import Fraction
from typing import Iterable, Sequence


class RatPoly:
    """Immutable dense polynomial with Fraction coefficients."""

    __slots__ = ("coeffs",)

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Fraction | int] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("RatPoly is immutable")

    # -- construction -------------------------------------------------

    @classmethod
    def zero(cls) -> "RatPoly":
        return cls(())

    @classmethod
    def one(cls) -> "RatPoly":
        return cls((1,))

    @classmethod
    def identity(cls) -> "RatPoly":
        """The polynomial x."""
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots: Sequence[Fraction | int]) -> "RatPoly":
        """Monic polynomial with exactly the given roots (with multiplicity)."""
        out = cls.one()
        for r in roots:
            out = out * cls((-Fraction(r), 1))
        return out

    # -- basic structure ----------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial mapped to -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        return isinstance(other, RatPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"RatPoly({[str(c) for c in self.coeffs]})"

    def format(self, var: str = "t") -> str:
        """Human-readable rendering, highest degree first."""
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                term = str(mag)
            else:
                xpow = var if i == 1 else f"{var}^{i}"
                term = xpow if mag == 1 else f"{mag}*{xpow}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    # -- arithmetic ----------------------------------------------------

    def __neg__(self) -> "RatPoly":
        return RatPoly(-c for c in self.coeffs)

    def __add__(self, other: "RatPoly") -> "RatPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(out)

    def __sub__(self, other: "RatPoly") -> "RatPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, RatPoly):
            if not self.coeffs or not other.coeffs:
                return RatPoly.zero()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return RatPoly(out)
        return self.scale(Fraction(other))

    def __rmul__(self, other):
        return self.scale(Fraction(other))

    def scale(self, c: Fraction | int) -> "RatPoly":
        c = Fraction(c)
        return RatPoly(a * c for a in self.coeffs)

    def monic(self) -> "RatPoly":
        if self.is_zero:
            raise ValueError("cannot normalize the zero polynomial")
        return self.scale(1 / self.leading)

    def divrem(self, g: "RatPoly") -> tuple["RatPoly", "RatPoly"]:
        """Euclidean division: self = q*g + r with deg r < deg g, exactly."""
        if g.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dg = g.degree
        lead = g.leading
        if len(rem) <= dg:
            return RatPoly.zero(), self
        quot = [Fraction(0)] * (len(rem) - dg)
        for i in range(len(rem) - 1, dg - 1, -1):
            factor = rem[i] / lead
            quot[i - dg] = factor
            if factor:
                for j, c in enumerate(g.coeffs):
                    rem[i - dg + j] -= factor * c
        return RatPoly(quot), RatPoly(rem[:dg])

    def __mod__(self, g: "RatPoly") -> "RatPoly":
        return self.divrem(g)[1]

    def derivative(self) -> "RatPoly":
        return RatPoly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    # -- evaluation and integration -------------------------------------

    def eval(self, x: Fraction | int) -> Fraction:
        """Exact Horner evaluation at a rational point."""
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_hp(self, x: Decimal) -> Decimal:
        """Horner evaluation at a Decimal point under the ambient context."""
        acc = Decimal(0)
        for c in reversed(self.coeffs):
            acc = acc * x + Decimal(c.numerator) / Decimal(c.denominator)
        return acc

    def integral_01(self) -> Fraction:
        """Exact definite integral over [0, 1]."""
        return sum((c / (i + 1) for i, c in enumerate(self.coeffs)), Fraction(0))

    def integral_pm1(self) -> Fraction:
        """Exact definite integral over [-1, 1]; odd monomials drop out."""
        return sum(
            (2 * c / (i + 1) for i, c in enumerate(self.coeffs) if i % 2 == 0),
            Fraction(0),
        )

    def compose_affine(self, a: Fraction | int, b: Fraction | int) -> "RatPoly":
        """Return the polynomial self(a*x + b), exactly."""
        arg = RatPoly((Fraction(b), Fraction(a)))
        out = RatPoly.zero()
        for c in reversed(self.coeffs):
            out = out * arg + RatPoly((c,))
        return out


def poly_ext_gcd(a: RatPoly, b: RatPoly) -> tuple[RatPoly, RatPoly, RatPoly]:
    """Extended Euclid over Q[x]: returns (g, s, t) with s*a + t*b = g.

    Remainders are normalized to monic at every step, which keeps
    coefficient growth tame and makes g canonical (monic, or zero).
    """
    r0, s0, t0 = a, RatPoly.one(), RatPoly.zero()
    r1, s1, t1 = b, RatPoly.zero(), RatPoly.one()
    while not r1.is_zero:
        q, r = r0.divrem(r1)
        s, t = s0 - q * s1, t0 - q * t1
        if not r.is_zero:
            inv = 1 / r.leading
            r, s, t = r.scale(inv), s.scale(inv), t.scale(inv)
        r0, s0, t0, r1, s1, t1 = r1, s1, t1, r, s, t
    if not r0.is_zero and r0.leading != 1:
        inv = 1 / r0.leading
        r0, s0, t0 = r0.scale(inv), s0.scale(inv), t0.scale(inv)
    return r0, s0, t0


def mod_inverse_eval(Z: RatPoly, zeta: RatPoly, zetap: RatPoly) -> RatPoly:
    """Polynomial of degree < deg(zetap) agreeing with Z/zeta at every root of zetap.

    Computed as Z * zeta^(-1) in the quotient ring Q[x]/(zetap) via extended
    Euclid.  Requires gcd(zeta, zetap) = 1: a shared root would make the
    target quotient undefined there.
    """
    if zetap.is_zero:
        raise ZeroDivisionError("modulus polynomial is zero")
    if zeta.is_zero:
        raise ValueError("zeta and zetap share a root (zeta is identically zero)")
    if zetap.degree == 0:
        return RatPoly.zero()
    g, s, _ = poly_ext_gcd(zeta, zetap)
    if g.degree > 0:
        raise ValueError(
            f"zeta and zetap share a root (gcd has degree {g.degree})"
        )
    # g is the monic unit 1, so s is the inverse of zeta modulo zetap.
    return (Z * s) % zetap
