"""Scalar arithmetic for the quadrature engine.

Two scalar kinds are used throughout the package:

* ``Rational`` (= :class:`fractions.Fraction`): exact signed fractions in
  canonical form (positive denominator, reduced).  All symbolic polynomial
  and series work stays in this type end to end.
* ``HPScalar`` (= :class:`decimal.Decimal`): floating values carrying a
  configurable number of significant decimal digits.  Every public function
  here computes with :data:`GUARD_DIGITS` extra digits and rounds the result
  back to the requested precision, so results are correctly rounded at the
  precision the caller asked for.

The default precision is 50 significant digits; anything below 40 is
rejected because downstream root polishing assumes that much headroom.
"""

from __future__ import annotations

import operator
from decimal import ROUND_HALF_EVEN, Context, Decimal, localcontext
from fractions import Fraction

Rational = Fraction
HPScalar = Decimal

DEFAULT_PRECISION = 50
MIN_PRECISION = 40
GUARD_DIGITS = 10

_RAT_OPS = {
    "+": operator.add,
    "-": operator.sub,
    "−": operator.sub,   # minus sign
    "*": operator.mul,
    "×": operator.mul,   # multiplication sign
    "/": operator.truediv,
    "÷": operator.truediv,  # division sign
}

# ln(2) cache keyed by working-context precision.
_LN2_CACHE: dict[int, Decimal] = {}


def resolve_precision(prec: int | None) -> int:
    """Return the effective precision, defaulting and validating the floor."""
    if prec is None:
        return DEFAULT_PRECISION
    prec = int(prec)
    if prec < MIN_PRECISION:
        raise ValueError(f"precision must be at least {MIN_PRECISION}, got {prec}")
    return prec


def working_context(prec: int) -> Context:
    """Context used for intermediate work: requested digits plus guard digits."""
    return Context(prec=prec + GUARD_DIGITS, rounding=ROUND_HALF_EVEN)


def round_to(x: Decimal, prec: int) -> Decimal:
    """Round ``x`` to ``prec`` significant digits (half even)."""
    with localcontext(Context(prec=prec, rounding=ROUND_HALF_EVEN)):
        return +x


def rat_arith(a: Fraction | int, b: Fraction | int, op: str) -> Fraction:
    """Combine two rationals with one of ``+ - * /`` (unicode aliases accepted).

    Division by zero raises :class:`ZeroDivisionError`; results are always in
    canonical reduced form.
    """
    try:
        fn = _RAT_OPS[op]
    except KeyError:
        raise ValueError(f"unknown rational operation {op!r}") from None
    return fn(Fraction(a), Fraction(b))


def _as_decimal(value) -> Decimal:
    """Convert to Decimal under the ambient context (Fraction via division)."""
    if isinstance(value, Decimal):
        return +value
    if isinstance(value, int):
        return +Decimal(value)
    if isinstance(value, Fraction):
        return Decimal(value.numerator) / Decimal(value.denominator)
    if isinstance(value, str):
        return +Decimal(value)
    raise TypeError(f"cannot convert {type(value).__name__} to Decimal")


def to_hp(value, prec: int | None = None) -> Decimal:
    """Convert an int/Fraction/str/Decimal to an HPScalar at the given precision.

    Fraction conversion is a single correctly rounded division, hence exact to
    within half an ulp at the requested precision.
    """
    prec = resolve_precision(prec)
    with localcontext(working_context(prec)):
        out = _as_decimal(value)
    return round_to(out, prec)


def _atanh_series(z: Decimal) -> Decimal:
    # Ambient context; caller guarantees |z| <= 1/3 so convergence is geometric.
    zz = z * z
    power = z
    total = z
    n = 1
    last = None
    while total != last:
        last = total
        n += 2
        power *= zz
        total += power / n
    return total


def _ln2() -> Decimal:
    from decimal import getcontext

    prec = getcontext().prec
    cached = _LN2_CACHE.get(prec)
    if cached is None:
        cached = 2 * _atanh_series(Decimal(1) / 3)
        _LN2_CACHE[prec] = cached
    return cached


def _ln(x: Decimal) -> Decimal:
    # Ambient context.  Reduce x = m * 2**k with m in [1, 2), then
    # ln(m) = 2 atanh((m-1)/(m+1)) with |argument| < 1/3.
    m = x
    k = 0
    while m >= 2:
        m /= 2
        k += 1
    while m < 1:
        m *= 2
        k -= 1
    total = 2 * _atanh_series((m - 1) / (m + 1))
    if k:
        total += k * _ln2()
    return total


def hp_ln(x, prec: int | None = None) -> Decimal:
    """Natural logarithm of ``x > 0`` at the given significant-digit precision."""
    prec = resolve_precision(prec)
    with localcontext(working_context(prec)):
        xd = _as_decimal(x)
        if xd <= 0:
            raise ValueError(f"hp_ln requires x > 0, got {x}")
        out = _ln(xd)
    return round_to(out, prec)


def hp_log10_scaled(w, prec: int | None = None) -> Decimal:
    """Return log10(1e9 * w) for ``w > 0``, i.e. ``9 + ln(w)/ln(10)``.

    The 1e9 scaling keeps the logarithms of small weights positive, which is
    how the classical tables render them.
    """
    prec = resolve_precision(prec)
    with localcontext(working_context(prec)):
        wd = _as_decimal(w)
        if wd <= 0:
            raise ValueError(f"hp_log10_scaled requires w > 0, got {w}")
        out = 9 + _ln(wd) / _ln(Decimal(10))
    return round_to(out, prec)


def format_sig(x: Decimal, sig: int) -> str:
    """Render ``x`` rounded half-even to ``sig`` significant digits.

    Fixed-point notation is used whenever the leading digit sits within a
    sane window of the decimal point; very small or very large magnitudes
    fall back to ``d.dddE+xx`` scientific notation.  Zero renders with a
    full run of zeros so column widths stay stable.
    """
    if sig < 1:
        raise ValueError("sig must be >= 1")
    if x == 0:
        return "0." + "0" * sig
    with localcontext(Context(prec=sig + 4, rounding=ROUND_HALF_EVEN)):
        val = +x
        for _ in range(2):
            exp10 = val.adjusted()
            q = val.quantize(Decimal(1).scaleb(exp10 - sig + 1))
            if len(q.as_tuple().digits) <= sig:
                break
            val = q  # rounding carried into a new leading digit; requantize
    sign, digits, exponent = q.as_tuple()
    digits = "".join(map(str, digits)).ljust(sig, "0")[:sig]
    adj = q.adjusted()
    prefix = "-" if sign else ""
    if -5 <= adj <= 20:
        if adj >= sig - 1:
            intpart = digits + "0" * (adj - sig + 1)
            return prefix + intpart
        if adj >= 0:
            return prefix + digits[: adj + 1] + "." + digits[adj + 1 :]
        return prefix + "0." + "0" * (-adj - 1) + digits
    mantissa = digits[0] + "." + digits[1:] if sig > 1 else digits
    return f"{prefix}{mantissa}E{adj:+d}"


def format_fixed(x: Decimal, places: int) -> str:
    """Render ``x`` rounded half-even to a fixed number of decimal places."""
    with localcontext(Context(prec=60, rounding=ROUND_HALF_EVEN)):
        q = x.quantize(Decimal(1).scaleb(-places))
    return str(q)
