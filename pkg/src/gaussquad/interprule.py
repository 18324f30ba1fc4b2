"""Interpolatory quadrature rules, Newton-Cotes rules, and error series.

A rule lives in one of two conventions:

* ``T01``: variable t on [0, 1] with unit measure dt;
* ``U11``: variable u on [-1, 1] with the half measure (1/2)du.

Both measures have total mass 1, so weights sum to 1 either way and are
unchanged by the affine bridge t = (u+1)/2 between the conventions.

Weights come from the product-split construction: with T the monic node
polynomial and T' the polynomial part of T times the moment series, the
weight at node a is T'(a) / (dT/dt)(a).  For rational nodes everything is
exact; for Decimal nodes the same computation runs in decimal arithmetic.

Error coefficients k[m] (true m-th moment minus the rule's m-th moment) are
always computed two ways, once directly from the definition and once by
long division of the split tail by the node polynomial, and the two results
must agree; a disagreement signals an internal bug and raises.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from decimal import Context, Decimal, localcontext
from fractions import Fraction
from typing import Callable, Sequence

from . import numerics
from .momseries import (
    SeriesTail,
    divide_tail_by_poly,
    moment_series_t,
    moment_series_u,
    product_split,
)
from .numerics import _as_decimal, resolve_precision, round_to, working_context
from .ratpoly import RatPoly

T01 = "t01"
U11 = "u11"

_INTERVALS = {T01: (Fraction(0), Fraction(1)), U11: (Fraction(-1), Fraction(1))}


def _moments(convention: str, count: int) -> SeriesTail:
    if convention == T01:
        return moment_series_t(count)
    if convention == U11:
        return moment_series_u(count)
    raise ValueError(f"unknown convention {convention!r}")


def _exact_moment(convention: str, m: int) -> Fraction:
    if convention == T01:
        return Fraction(1, m + 1)
    return Fraction(1, m + 1) if m % 2 == 0 else Fraction(0)


@dataclass(frozen=True)
class QuadRule:
    """An immutable quadrature rule.

    Decimal nodes and weights are always present; exact Fraction mirrors and
    the exact monic node polynomial are carried whenever they are available.
    ``degree`` is the claimed degree of precision.
    """

    convention: str
    nodes: tuple[Decimal, ...]
    weights: tuple[Decimal, ...]
    nodes_exact: tuple[Fraction, ...] | None = None
    weights_exact: tuple[Fraction, ...] | None = None
    nodepoly: RatPoly | None = None
    degree: int = 0

    def __post_init__(self):
        if self.convention not in _INTERVALS:
            raise ValueError(f"unknown convention {self.convention!r}")
        if not self.nodes or len(self.nodes) != len(self.weights):
            raise ValueError("rule needs equally many nodes and weights, at least one")
        for lo, hi in zip(self.nodes, self.nodes[1:]):
            if not lo < hi:
                raise ValueError("nodes must be strictly increasing")
        with localcontext(Context(prec=80)):
            mass = sum(self.weights, Decimal(0))
            off = abs(mass - 1)
        if off > Decimal("1e-25"):
            raise ValueError(f"weights sum to {mass}, expected 1")

    @property
    def npoints(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True)
class ErrorSeries:
    """Error coefficients k[m] for the monomials x**m of the rule's variable."""

    k: tuple[Fraction, ...]
    convention: str

    def __len__(self) -> int:
        return len(self.k)

    def __getitem__(self, m: int) -> Fraction:
        return self.k[m]

    def first_nonzero(self) -> int | None:
        for m, c in enumerate(self.k):
            if c != 0:
                return m
        return None


# -- decimal-coefficient polynomial helpers (ambient context) ------------


def _hp_from_roots(roots: Sequence[Decimal]) -> list[Decimal]:
    coeffs = [Decimal(1)]
    for r in roots:
        coeffs = [Decimal(0)] + coeffs
        for i in range(len(coeffs) - 1):
            coeffs[i] -= r * coeffs[i + 1]
    return coeffs


def _hp_eval(coeffs: Sequence[Decimal], x: Decimal) -> Decimal:
    acc = Decimal(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _hp_derivative(coeffs: Sequence[Decimal]) -> list[Decimal]:
    return [i * c for i, c in enumerate(coeffs) if i > 0]


def _check_interval(nodes, convention: str) -> None:
    lo, hi = _INTERVALS[convention]
    lo_d, hi_d = Decimal(int(lo)), Decimal(int(hi))
    for a in nodes:
        outside = (a < lo or a > hi) if isinstance(a, Fraction) else (a < lo_d or a > hi_d)
        if outside:
            warnings.warn(
                f"node {a} lies outside the {convention} interval; rule is still defined",
                RuntimeWarning,
                stacklevel=3,
            )


def interpolatory_rule(
    nodes: Sequence, convention: str = T01, prec: int | None = None
) -> QuadRule:
    """Build the unique interpolatory rule on the given distinct nodes.

    Rational nodes (int or Fraction) produce exact weights and an exact node
    polynomial; any Decimal node switches the whole computation to decimal
    arithmetic at the given precision.
    """
    if convention not in _INTERVALS:
        raise ValueError(f"unknown convention {convention!r}")
    if not nodes:
        raise ValueError("at least one node is required")
    prec = resolve_precision(prec)
    exact = all(isinstance(a, (int, Fraction)) for a in nodes)
    if exact:
        pts = sorted(Fraction(a) for a in nodes)
        if any(a == b for a, b in zip(pts, pts[1:])):
            raise ValueError("duplicate nodes")
        _check_interval(pts, convention)
        node_poly = RatPoly.from_roots(pts)
        tprime, _ = product_split(node_poly, _moments(convention, len(pts)), tail_len=0)
        deriv = node_poly.derivative()
        wts = [tprime.eval(a) / deriv.eval(a) for a in pts]
        with localcontext(working_context(prec)):
            nodes_hp = tuple(round_to(_as_decimal(a), prec) for a in pts)
            wts_hp = tuple(round_to(_as_decimal(w), prec) for w in wts)
        return QuadRule(
            convention=convention,
            nodes=nodes_hp,
            weights=wts_hp,
            nodes_exact=tuple(pts),
            weights_exact=tuple(wts),
            nodepoly=node_poly,
            degree=len(pts) - 1,
        )
    with localcontext(working_context(prec)):
        pts = sorted(_as_decimal(a) for a in nodes)
        if any(a == b for a, b in zip(pts, pts[1:])):
            raise ValueError("duplicate nodes")
        _check_interval(pts, convention)
        coeffs = _hp_from_roots(pts)
        d = len(coeffs) - 1
        mu = [_as_decimal(m) for m in _moments(convention, d).coeffs]
        tprime = [
            sum((coeffs[i] * mu[i - p - 1] for i in range(p + 1, d + 1)), Decimal(0))
            for p in range(d)
        ]
        deriv = _hp_derivative(coeffs)
        wts = [_hp_eval(tprime, a) / _hp_eval(deriv, a) for a in pts]
        nodes_hp = tuple(round_to(a, prec) for a in pts)
        wts_hp = tuple(round_to(w, prec) for w in wts)
    return QuadRule(
        convention=convention,
        nodes=nodes_hp,
        weights=wts_hp,
        degree=len(nodes_hp) - 1,
    )


def newton_cotes(n: int, prec: int | None = None) -> QuadRule:
    """Closed Newton-Cotes rule on the n+1 equispaced nodes i/n of [0, 1].

    Weights are exact rationals.  For even n the rule picks up one bonus
    degree of precision by symmetry, so that is what the rule claims.
    """
    if n < 1:
        raise ValueError("closed Newton-Cotes rules need n >= 1")
    rule = interpolatory_rule([Fraction(i, n) for i in range(n + 1)], T01, prec)
    degree = n + 1 if n % 2 == 0 else n
    return QuadRule(
        convention=rule.convention,
        nodes=rule.nodes,
        weights=rule.weights,
        nodes_exact=rule.nodes_exact,
        weights_exact=rule.weights_exact,
        nodepoly=rule.nodepoly,
        degree=degree,
    )


def error_coefficients(rule: QuadRule, count: int, prec: int | None = None) -> ErrorSeries:
    """Error coefficients k[0..count-1] of the rule, exact.

    The values come from long division of the product-split tail by the node
    polynomial; the defining moment differences are recomputed independently
    (exactly when the rule is exact, in decimal otherwise) and any
    disagreement raises ArithmeticError.
    """
    prec = resolve_precision(prec)
    node_poly = rule.nodepoly
    if node_poly is None and rule.nodes_exact is not None:
        node_poly = RatPoly.from_roots(rule.nodes_exact)
    if node_poly is None:
        raise ValueError("rule carries no exact node polynomial")
    D = node_poly.degree
    moments = _moments(rule.convention, max(count, D))
    _, tail = product_split(node_poly, moments, tail_len=max(count - D, 0))
    theta = divide_tail_by_poly(tail, node_poly, count)
    if rule.nodes_exact is not None and rule.weights_exact is not None:
        powers = [Fraction(1)] * rule.npoints
        for m in range(count):
            direct = _exact_moment(rule.convention, m) - sum(
                (w * p for w, p in zip(rule.weights_exact, powers)), Fraction(0)
            )
            if direct != theta[m]:
                raise ArithmeticError(
                    f"error coefficient mismatch at m={m}: direct {direct}, series {theta[m]}"
                )
            powers = [p * a for p, a in zip(powers, rule.nodes_exact)]
    else:
        tol = Decimal(1).scaleb(-(prec - 8))
        with localcontext(working_context(prec)):
            powers = [Decimal(1)] * rule.npoints
            for m in range(count):
                direct = _as_decimal(_exact_moment(rule.convention, m)) - sum(
                    (w * p for w, p in zip(rule.weights, powers)), Decimal(0)
                )
                if abs(direct - _as_decimal(theta[m])) > tol:
                    raise ArithmeticError(
                        f"error coefficient mismatch at m={m}: direct {direct}, series {theta[m]}"
                    )
                powers = [p * a for p, a in zip(powers, rule.nodes)]
    return ErrorSeries(k=tuple(theta.coeffs), convention=rule.convention)


def apply_rule(
    rule: QuadRule,
    f: Callable[[Decimal], Decimal],
    g=0,
    delta=1,
    prec: int | None = None,
) -> Decimal:
    """Apply the rule to the integral of f over [g, g+delta].

    Nodes are mapped into the target interval (x = g + delta*a for T01,
    x = g + delta*(u+1)/2 for U11) and the weighted sum is scaled by delta.
    A failure inside the integrand is re-raised with the node index attached.
    """
    prec = resolve_precision(prec)
    with localcontext(working_context(prec)):
        gd = _as_decimal(g)
        dd = _as_decimal(delta)
        if dd == 0:
            raise ValueError("delta must be nonzero")
        acc = Decimal(0)
        for j, (a, w) in enumerate(zip(rule.nodes, rule.weights)):
            x = gd + dd * a if rule.convention == T01 else gd + dd * (a + 1) / 2
            try:
                y = f(x)
            except Exception as exc:
                raise RuntimeError(
                    f"integrand evaluation failed at node {j} (x={x})"
                ) from exc
            acc += w * y
        out = dd * acc
    return round_to(out, prec)


def node_terms(
    rule: QuadRule,
    f: Callable[[Decimal], Decimal],
    g=0,
    delta=1,
    prec: int | None = None,
) -> list[Decimal]:
    """Per-node contributions delta * R_j * f(x_j), in node order."""
    prec = resolve_precision(prec)
    with localcontext(working_context(prec)):
        gd = _as_decimal(g)
        dd = _as_decimal(delta)
        if dd == 0:
            raise ValueError("delta must be nonzero")
        out = []
        for j, (a, w) in enumerate(zip(rule.nodes, rule.weights)):
            x = gd + dd * a if rule.convention == T01 else gd + dd * (a + 1) / 2
            try:
                y = f(x)
            except Exception as exc:
                raise RuntimeError(
                    f"integrand evaluation failed at node {j} (x={x})"
                ) from exc
            out.append(round_to(dd * w * y, prec))
    return out


def to_convention(rule: QuadRule, convention: str, prec: int | None = None) -> QuadRule:
    """Map a rule to the other convention via t = (u+1)/2; weights are unchanged."""
    if convention not in _INTERVALS:
        raise ValueError(f"unknown convention {convention!r}")
    if rule.convention == convention:
        return rule
    prec = resolve_precision(prec)
    deg = rule.npoints
    if rule.convention == U11:
        map_exact = lambda b: (b + 1) / 2
        node_poly = (
            rule.nodepoly.compose_affine(2, -1).scale(Fraction(1, 2**deg))
            if rule.nodepoly is not None
            else None
        )
        with localcontext(working_context(prec)):
            nodes_hp = tuple(round_to((b + 1) / 2, prec) for b in rule.nodes)
    else:
        map_exact = lambda a: 2 * a - 1
        node_poly = (
            rule.nodepoly.compose_affine(Fraction(1, 2), Fraction(1, 2)).scale(2**deg)
            if rule.nodepoly is not None
            else None
        )
        with localcontext(working_context(prec)):
            nodes_hp = tuple(round_to(2 * a - 1, prec) for a in rule.nodes)
    nodes_exact = (
        tuple(map_exact(b) for b in rule.nodes_exact)
        if rule.nodes_exact is not None
        else None
    )
    return QuadRule(
        convention=convention,
        nodes=nodes_hp,
        weights=rule.weights,
        nodes_exact=nodes_exact,
        weights_exact=rule.weights_exact,
        nodepoly=node_poly,
        degree=rule.degree,
    )


# -- built-in integrands -------------------------------------------------


def parse_poly_spec(spec: str) -> RatPoly:
    """Parse ``poly:c0,c1,...`` coefficient lists (ascending, Fractions)."""
    body = spec.split(":", 1)[1] if spec.startswith("poly:") else spec
    try:
        coeffs = [Fraction(part.strip()) for part in body.split(",") if part.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad polynomial coefficient list {body!r}") from exc
    if not coeffs:
        raise ValueError("polynomial integrand needs at least one coefficient")
    return RatPoly(coeffs)


def named_integrand(name: str, prec: int | None = None) -> Callable[[Decimal], Decimal]:
    """Resolve a registry name to an evaluation callback over Decimal.

    Known names: ``reciprocal-log`` (1/ln x), ``runge`` (1/(1+25x^2)) and
    ``poly:<c0,c1,...>`` with rational coefficients.
    """
    prec = resolve_precision(prec)
    if name == "reciprocal-log":
        return lambda x: 1 / numerics.hp_ln(x, prec)
    if name == "runge":
        return lambda x: 1 / (1 + 25 * x * x)
    if name.startswith("poly:"):
        poly = parse_poly_spec(name)
        return poly.eval_hp
    raise ValueError(f"unknown integrand {name!r}")
