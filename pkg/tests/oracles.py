"""Independent oracles for the test suite.

Nothing here goes through the package's construction path: roots come from
Newton iteration on the classical three-term recurrence for Legendre
polynomials, weights from integrating Lagrange basis polynomials or from
solving the moment system with a local exact linear solver, and square
roots from a self-contained Newton iteration on x^2 - v.
"""

from __future__ import annotations

import math
from decimal import ROUND_HALF_EVEN, Context, Decimal, localcontext
from fractions import Fraction

from gaussquad.interprule import T01
from gaussquad.ratpoly import RatPoly


def _ctx(prec: int) -> Context:
    return Context(prec=prec + 10, rounding=ROUND_HALF_EVEN)


def newton_sqrt(value: Fraction | int, prec: int) -> Decimal:
    """Square root by Newton iteration on x^2 - value."""
    value = Fraction(value)
    if value < 0:
        raise ValueError("negative input")
    if value == 0:
        return Decimal(0)
    with localcontext(_ctx(prec)):
        v = Decimal(value.numerator) / Decimal(value.denominator)
        x = Decimal(repr(math.sqrt(value)))
        tol = Decimal(1).scaleb(-(prec + 3))
        for _ in range(300):
            nx = (x + v / x) / 2
            done = abs(nx - x) <= tol
            x = nx
            if done:
                break
        out = +x
    with localcontext(Context(prec=prec, rounding=ROUND_HALF_EVEN)):
        return +out


def legendre_eval(m: int, x: Decimal) -> tuple[Decimal, Decimal]:
    """(P_m(x), P_m'(x)) with the P(1)=1 normalization, via the recurrence
    (k+1) P_{k+1}(x) = (2k+1) x P_k(x) - k P_{k-1}(x)."""
    p_prev, p = Decimal(1), x
    if m == 0:
        return p_prev, Decimal(0)
    for k in range(1, m):
        p_prev, p = p, ((2 * k + 1) * x * p - k * p_prev) / (k + 1)
    dp = m * (x * p - p_prev) / (x * x - 1)
    return p, dp


def legendre_nodes(m: int, prec: int) -> list[Decimal]:
    """All m roots of P_m, ascending, by Newton from Chebyshev-angle guesses."""
    roots = []
    with localcontext(_ctx(prec)):
        tol = Decimal(1).scaleb(-(prec + 3))
        for k in range(1, m + 1):
            x = Decimal(repr(math.cos(math.pi * (4 * k - 1) / (4 * m + 2))))
            for _ in range(300):
                p, dp = legendre_eval(m, x)
                step = p / dp
                x -= step
                if abs(step) <= tol:
                    break
            roots.append(+x)
    roots.sort()
    with localcontext(Context(prec=prec, rounding=ROUND_HALF_EVEN)):
        return [+r for r in roots]


def lagrange_weights_exact(nodes: list[Fraction], convention: str = T01) -> list[Fraction]:
    """Interpolatory weights by integrating each Lagrange basis polynomial."""
    out = []
    for j, aj in enumerate(nodes):
        others = [a for i, a in enumerate(nodes) if i != j]
        basis = RatPoly.from_roots(others)
        denom = basis.eval(aj)
        if convention == T01:
            integral = basis.integral_01()
        else:
            integral = basis.integral_pm1() / 2
        out.append(integral / denom)
    return out


def lagrange_weights_hp(nodes: list[Decimal], convention: str, prec: int) -> list[Decimal]:
    """Lagrange-basis weights in decimal arithmetic, for irrational nodes."""
    out = []
    with localcontext(_ctx(prec)):
        for j, aj in enumerate(nodes):
            coeffs = [Decimal(1)]
            for i, r in enumerate(nodes):
                if i == j:
                    continue
                coeffs = [Decimal(0)] + coeffs
                for p in range(len(coeffs) - 1):
                    coeffs[p] -= r * coeffs[p + 1]
            denom = Decimal(0)
            for c in reversed(coeffs):
                denom = denom * aj + c
            if convention == T01:
                integral = sum(
                    (c / (k + 1) for k, c in enumerate(coeffs)), Decimal(0)
                )
            else:
                integral = sum(
                    (c / (k + 1) for k, c in enumerate(coeffs) if k % 2 == 0),
                    Decimal(0),
                )
            out.append(integral / denom)
        with localcontext(Context(prec=prec, rounding=ROUND_HALF_EVEN)):
            return [+w for w in out]


def solve_linear(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Exact Gaussian elimination, local to the test suite."""
    n = len(matrix)
    aug = [list(map(Fraction, row)) + [Fraction(rhs[i])] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        div = aug[col][col]
        aug[col] = [x / div for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]


def moment_system_weights(nodes: list[Fraction], convention: str = T01) -> list[Fraction]:
    """Interpolatory weights by solving the moment system directly."""
    n = len(nodes)
    matrix = [[Fraction(a) ** m for a in nodes] for m in range(n)]
    if convention == T01:
        rhs = [Fraction(1, m + 1) for m in range(n)]
    else:
        rhs = [Fraction(1, m + 1) if m % 2 == 0 else Fraction(0) for m in range(n)]
    return solve_linear(matrix, rhs)


# High-precision reference digits, frozen from an independent
# multiple-precision computation.
LN_100000 = Decimal("11.51292546497022842008995727342182103800550744314386488")
LN_2 = Decimal("0.6931471805599453094172321214581765680755001343602552541")
LOG10_SCALED_HALF = Decimal("8.698970004336018804786261105275506973231810118537891459")

# The seven totals of the classical convergence demonstration, as printed.
DEMO_PRINTED = [
    "8390.394608",
    "8405.954599",
    "8406.236775",
    "8406.242970",
    "8406.243117",
    "8406.243121",
    "8406.2431211",
]
