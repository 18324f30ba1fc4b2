"""Formal descending series and the polynomial/tail product split.

A :class:`SeriesTail` holds the first K coefficients of a series in
descending powers: ``coeffs[m]`` multiplies ``x**-(m+1)``.  The moment
series of the two integration conventions live here, as does the central
operation of the whole construction: multiplying a node polynomial by a
moment series and splitting the result into its polynomial part and its
descending tail.  Truncation lengths are explicit everywhere; an operation
that would need more coefficients than its input carries raises instead of
silently returning garbage.

All series arithmetic is exact (Fraction coefficients).  Decimal values
enter only through :func:`cauchy_expansion_of_rule` when a rule has no
exact node data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .ratpoly import RatPoly


@dataclass(frozen=True)
class SeriesTail:
    """Truncated series in descending powers; coeffs[m] multiplies x**-(m+1)."""

    coeffs: tuple

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, m: int):
        return self.coeffs[m]

    def first_nonzero(self) -> int | None:
        """Index of the first nonzero coefficient, or None if all are zero."""
        for m, c in enumerate(self.coeffs):
            if c != 0:
                return m
        return None


def moment_series_t(count: int) -> SeriesTail:
    """Moments of dt on [0, 1]: coefficient of t**-(m+1) is 1/(m+1)."""
    if count < 1:
        raise ValueError("count must be >= 1")
    return SeriesTail(tuple(Fraction(1, m + 1) for m in range(count)))


def moment_series_u(count: int) -> SeriesTail:
    """Moments of the half measure (1/2)du on [-1, 1]; odd moments vanish."""
    if count < 1:
        raise ValueError("count must be >= 1")
    return SeriesTail(
        tuple(Fraction(1, m + 1) if m % 2 == 0 else Fraction(0) for m in range(count))
    )


def product_split(
    node_poly: RatPoly, moments: SeriesTail, tail_len: int | None = None
) -> tuple[RatPoly, SeriesTail]:
    """Split node_poly * moments into (polynomial part, descending tail).

    With node_poly of degree d and moment coefficients mu[j], the polynomial
    part has coefficient sum(c[i] * mu[i-p-1], i > p) at degree p (so degree
    d-1, and leading coefficient mu[0] for monic input), and the tail has
    coefficient sum(c[i] * mu[q+i], 0 <= i <= d) at x**-(q+1).  Computing L
    tail coefficients therefore consumes moments up to index d+L-1; the
    moment series must carry at least d + L coefficients or a ValueError is
    raised.  When ``tail_len`` is omitted, every tail coefficient the input
    supports is produced.
    """
    c = node_poly.coeffs
    d = len(c) - 1  # degree; -1 for the zero polynomial
    avail = len(moments)
    if d < 0:
        L = avail if tail_len is None else tail_len
        if L > avail:
            raise ValueError(
                f"moment series too short: need {L} coefficients, have {avail}"
            )
        return RatPoly.zero(), SeriesTail((Fraction(0),) * L)
    if tail_len is None:
        L = avail - d
        if L < 0:
            raise ValueError(
                f"moment series too short: need at least {d} coefficients, have {avail}"
            )
    else:
        L = tail_len
        if d + L > avail:
            raise ValueError(
                f"moment series too short: need {d + L} coefficients, have {avail}"
            )
    mu = moments.coeffs
    poly_part = [
        sum((c[i] * mu[i - p - 1] for i in range(p + 1, d + 1)), Fraction(0))
        for p in range(d)
    ]
    tail = tuple(
        sum((c[i] * mu[q + i] for i in range(d + 1)), Fraction(0)) for q in range(L)
    )
    return RatPoly(poly_part), SeriesTail(tail)


def _power_series_div(num: Sequence[Fraction], den: Sequence[Fraction], count: int):
    # Ascending power-series division; den[0] must be nonzero.
    out = []
    for j in range(count):
        acc = num[j] if j < len(num) else Fraction(0)
        for i in range(1, min(j, len(den) - 1) + 1):
            acc -= den[i] * out[j - i]
        out.append(acc / den[0])
    return out


def divide_tail_by_poly(tail: SeriesTail, den: RatPoly, out_len: int) -> SeriesTail:
    """First ``out_len`` coefficients of the descending series tail / den.

    The quotient has its first deg(den) coefficients identically zero; the
    remaining ones come from ordinary ascending power-series division of the
    reversed coefficient sequences.  The tail must carry at least
    out_len - deg(den) coefficients.
    """
    if den.is_zero:
        raise ZeroDivisionError("division of a series by the zero polynomial")
    D = den.degree
    if out_len <= D:
        return SeriesTail((Fraction(0),) * out_len)
    need = out_len - D
    if len(tail) < need:
        raise ValueError(
            f"tail too short: need {need} coefficients, have {len(tail)}"
        )
    rev_den = tuple(reversed(den.coeffs))
    quot = _power_series_div(tail.coeffs, rev_den, need)
    return SeriesTail((Fraction(0),) * D + tuple(quot))


def rational_function_tail(num: RatPoly, den: RatPoly, count: int) -> SeriesTail:
    """Descending expansion of num/den at infinity, requiring deg num < deg den."""
    if den.is_zero:
        raise ZeroDivisionError("expansion of a quotient with zero denominator")
    if num.is_zero:
        return SeriesTail((Fraction(0),) * count)
    D, d = den.degree, num.degree
    if d >= D:
        raise ValueError("numerator degree must be below denominator degree")
    shift = D - d - 1  # coefficient of x**-(q+1) vanishes for q < shift
    if count <= shift:
        return SeriesTail((Fraction(0),) * count)
    rev_num = tuple(reversed(num.coeffs))
    rev_den = tuple(reversed(den.coeffs))
    quot = _power_series_div(rev_num, rev_den, count - shift)
    return SeriesTail((Fraction(0),) * shift + tuple(quot))


def cauchy_expansion_of_rule(rule, count: int) -> SeriesTail:
    """Rule moments as a descending series: coeffs[m] = sum_j R_j * a_j**m.

    Exact (Fraction) when the rule carries exact nodes and weights, Decimal
    otherwise; the ambient decimal context governs the inexact path.
    """
    if count < 0:
        raise ValueError("count must be >= 0")
    nodes_exact = getattr(rule, "nodes_exact", None)
    weights_exact = getattr(rule, "weights_exact", None)
    if nodes_exact is not None and weights_exact is not None:
        powers = [Fraction(1)] * len(nodes_exact)
        out = []
        for _ in range(count):
            out.append(sum(map(lambda w, p: w * p, weights_exact, powers), Fraction(0)))
            powers = [p * a for p, a in zip(powers, nodes_exact)]
        return SeriesTail(tuple(out))
    from decimal import Decimal

    nodes = rule.nodes
    weights = rule.weights
    powers = [Decimal(1)] * len(nodes)
    out = []
    for _ in range(count):
        out.append(sum(map(lambda w, p: w * p, weights, powers), Decimal(0)))
        powers = [p * a for p, a in zip(powers, nodes)]
    return SeriesTail(tuple(out))
