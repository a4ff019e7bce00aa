"""The Fueter map for odd dimensions, specialized to complex monomial inputs.

A power of z = x + iy, read on the half plane as a function of (x_0, r),
is planted into R^{m+1} as (u + (x̲/r) v) P_k and hit with the Laplacian
k + (m-1)/2 times.  For odd m the result is monogenic; on monomial
inputs it is an integer multiple of a Cauchy-Kovalevskaya extension, and
hence a known rational multiple of a sequence term.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .bivariate import BivariatePoly
from .ck import ck_extend
from .coefficients import double_factorial, fueter_factor, lowering_product
from .errors import EvenDimensionError
from .operators import laplacian, require_initial_term
from .polynomials import CliffordPolynomial, first_difference, vector_power, vector_variable
from .report import VerificationReport
from .sequences import SequenceSpec, sequence_term_explicit


@dataclass
class HolomorphicPair:
    """Real and imaginary profiles of (x_0 + i r)^n.

    u is the even part in r (stored through t = r^2); the odd part is
    r * v_reduced.
    """

    u: BivariatePoly
    v_reduced: BivariatePoly
    n: int


def complex_monomial_parts(n: int) -> HolomorphicPair:
    """Binomial expansion of (x_0 + i r)^n split into even/odd parts in r."""
    if n < 0:
        raise ValueError("n must be non-negative")
    u_terms: dict[tuple[int, int], int] = {}
    v_terms: dict[tuple[int, int], int] = {}
    for s in range(n + 1):
        half, odd = divmod(s, 2)
        value = comb(n, s) * (-1 if half % 2 else 1)
        target = v_terms if odd else u_terms
        target[(n - s, half)] = value
    return HolomorphicPair(BivariatePoly(u_terms), BivariatePoly(v_terms), n)


def axial_embedding(pair: HolomorphicPair, pk: CliffordPolynomial, k: int) -> CliffordPolynomial:
    """(u + x̲ v_reduced) P_k with t substituted by |x̲|^2."""
    require_initial_term(pk, k)
    ctx = pk.context
    even = pair.u.to_clifford(ctx)
    odd = vector_variable(ctx) * pair.v_reduced.to_clifford(ctx)
    return (even + odd) * pk


def fueter_order(m: int, k: int) -> int:
    """Number of Laplacian applications: k + (m-1)/2, requiring odd m."""
    if m % 2 == 0:
        raise EvenDimensionError("the Fueter map requires an odd dimension m")
    return k + (m - 1) // 2


def fueter_map(n: int, pk: CliffordPolynomial, k: int) -> CliffordPolynomial:
    """Iterated Laplacian of the axial embedding of z^n."""
    order = fueter_order(pk.context.m, k)
    image = axial_embedding(complex_monomial_parts(n), pk, k)
    for _ in range(order):
        image = laplacian(image)
    return image


def fueter_scale(m: int, k: int, n: int) -> int:
    """Integer relating the Fueter image of z^n to a CK extension:
    (-1)^(k+(m-1)/2) (2k+m-1)!! times the double-factorial ratio."""
    sign = -1 if fueter_order(m, k) % 2 else 1
    return sign * double_factorial(2 * k + m - 1) * fueter_factor(m, k, n)


def check_fueter_identity(n: int, pk: CliffordPolynomial, k: int) -> VerificationReport:
    """Fueter image of z^n equals the scaled CK extension of
    x̲^(n-(2k+m-1)) P_k, exactly."""
    m = pk.context.m
    drop = 2 * k + m - 1
    scale = fueter_scale(m, k, n)  # raises below the threshold n = 2k+m-1
    lhs = fueter_map(n, pk, k)
    rhs = scale * ck_extend(vector_power(pk.context, n - drop) * pk)
    report = VerificationReport()
    report.add(
        "fueter_ck_identity",
        {"m": m, "k": k, "n": n},
        lhs == rhs,
        first_difference(lhs, rhs),
    )
    return report


def check_fueter_appell_match(spec: SequenceSpec, n: int) -> VerificationReport:
    """Fueter image of z^(n + 2k+m-1) is a known rational multiple of the
    n-th sequence term; the multiple is recorded in the report."""
    m, k = spec.m, spec.k
    shifted = n + 2 * k + m - 1
    lam = Fraction(
        fueter_scale(m, k, shifted) * lowering_product(m, k, n), factorial(n)
    )
    lhs = fueter_map(shifted, spec.pk, k)
    rhs = lam * sequence_term_explicit(spec, n)
    report = VerificationReport()
    report.add(
        "fueter_appell_match",
        {"m": m, "k": k, "n": n, "lambda": f"{lam.numerator}/{lam.denominator}"},
        lhs == rhs,
        first_difference(lhs, rhs),
    )
    return report
