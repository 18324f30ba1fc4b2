"""Gaussian rules of maximal degree via continued-fraction convergents.

The moment series of the half measure on [-1, 1] has a continued-fraction
expansion whose convergents V/W are built by a three-term recurrence with
partial numerators v(m) = -m^2 / ((2m-1)(2m+1)).  The denominators W are
the monic Legendre polynomials; taking the roots of W of degree n+1 as
nodes yields the unique (n+1)-point rule of degree 2n+1, and the numerator
V doubles as the polynomial part of W times the moment series, so the
weight at node b is V(b) / W'(b).

The small linear-system construction (choose the node polynomial so that
the first coefficients of the split tail vanish) is also provided; it is
the brute-force cross-check for the continued-fraction route.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import localcontext
from fractions import Fraction
from functools import lru_cache

from .interprule import T01, U11, QuadRule, to_convention
from .momseries import moment_series_t, moment_series_u
from .numerics import resolve_precision, round_to, working_context
from .ratpoly import RatPoly, mod_inverse_eval
from .rootfind import real_roots_symmetric


@dataclass(frozen=True)
class LegendrePair:
    """Convergent of order m: numerator of degree m-1, monic denominator of degree m."""

    order: int
    numerator: RatPoly
    denominator: RatPoly


def cf_coefficient(m: int) -> Fraction:
    """Partial numerator v(m) = -m^2/((2m-1)(2m+1)) of the continued fraction."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return Fraction(-m * m, (2 * m - 1) * (2 * m + 1))


@lru_cache(maxsize=None)
def legendre_pair(m: int) -> LegendrePair:
    """Numerator/denominator pair (V, W) of the order-m convergent.

    V(0) = 0, W(0) = 1, V(1) = 1, W(1) = u, then
    X(k+1) = u * X(k) + v(k) * X(k-1) for both sequences.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    u = RatPoly.identity()
    v0, w0 = RatPoly.zero(), RatPoly.one()
    if m == 0:
        return LegendrePair(0, v0, w0)
    v1, w1 = RatPoly.one(), u
    for k in range(1, m):
        vk = cf_coefficient(k)
        v0, v1 = v1, u * v1 + v0.scale(vk)
        w0, w1 = w1, u * w1 + w0.scale(vk)
    return LegendrePair(m, v1, w1)


def gauss_rule(n: int, prec: int | None = None, convention: str = U11) -> QuadRule:
    """The (n+1)-point rule of degree 2n+1.

    Nodes are the roots of the degree n+1 convergent denominator, found to
    the requested precision; the weight at node b is V(b)/W'(b).  The rule
    is built on [-1, 1] and mapped affinely when the t-form is requested.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    prec = resolve_precision(prec)
    pair = legendre_pair(n + 1)
    w_poly = pair.denominator
    v_poly = pair.numerator
    roots = real_roots_symmetric(w_poly, prec).roots
    deriv = w_poly.derivative()
    with localcontext(working_context(prec)):
        weights = tuple(
            round_to(v_poly.eval_hp(b) / deriv.eval_hp(b), prec) for b in roots
        )
    if n == 0:
        nodes_exact: tuple[Fraction, ...] | None = (Fraction(0),)
        weights_exact: tuple[Fraction, ...] | None = (Fraction(1),)
    else:
        nodes_exact = weights_exact = None
    rule = QuadRule(
        convention=U11,
        nodes=roots,
        weights=weights,
        nodes_exact=nodes_exact,
        weights_exact=weights_exact,
        nodepoly=w_poly,
        degree=2 * n + 1,
    )
    if convention == U11:
        return rule
    return to_convention(rule, convention, prec)


def weight_polynomial(n: int) -> RatPoly:
    """Exact polynomial of degree <= n whose value at each node is its weight.

    Solves the modular-inverse problem with Z the convergent numerator,
    zeta the derivative of the node polynomial, and the node polynomial
    itself as modulus, so the result agrees with Z/zeta at every node.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    pair = legendre_pair(n + 1)
    return mod_inverse_eval(pair.numerator, pair.denominator.derivative(), pair.denominator)


def leading_error_constant(n: int) -> tuple[Fraction, Fraction]:
    """Leading error coefficients of the (n+1)-point rule, in both conventions.

    Returns (c, k_first): c is the first nonzero coefficient of the split
    tail on [-1, 1] (the product of the continued-fraction partial
    numerators, in absolute value), sitting at u**-(n+2) in the tail and at
    u**-(2n+3) in the error series; k_first = c / 4**(n+1) is the same
    leading coefficient after the affine change to [0, 1], i.e. the error
    of the rule on t**(2n+2).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    c = Fraction(1)
    for k in range(1, n + 2):
        c *= Fraction(k * k, (2 * k - 1) * (2 * k + 1))
    return c, c / Fraction(4) ** (n + 1)


def _solve_exact(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    # Gaussian elimination over Q with first-nonzero pivoting.
    n = len(matrix)
    a = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular linear system")
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]


def annihilating_node_poly(n: int, convention: str = T01) -> RatPoly:
    """Monic node polynomial of degree n+1 by the direct linear-system route.

    Chooses the n+1 free coefficients so that the first n+1 coefficients of
    the split tail vanish, which is an (n+1)x(n+1) Hankel system in the
    moments, solved exactly.  Serves as an independent cross-check of the
    continued-fraction construction.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    count = 2 * (n + 1) + 1
    if convention == T01:
        mu = moment_series_t(count).coeffs
    elif convention == U11:
        mu = moment_series_u(count).coeffs
    else:
        raise ValueError(f"unknown convention {convention!r}")
    size = n + 1
    matrix = [[mu[q + i] for i in range(size)] for q in range(size)]
    rhs = [-mu[q + size] for q in range(size)]
    coeffs = _solve_exact(matrix, rhs)
    return RatPoly(coeffs + [Fraction(1)])
