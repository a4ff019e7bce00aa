"""Differential operators on Clifford-valued polynomials.

Everything acts from the left: the Dirac operator multiplies each
coefficient by e_j on the left, matching the left-monogenicity
convention used throughout the package.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import blade_product
from .coefficients import lowering_factor
from .errors import (
    InvalidInitialTermError,
    NonScalarInputError,
    NonVectorInputError,
    NotMonogenicError,
)
from .polynomials import CliffordPolynomial, vector_power

_ZERO = Fraction(0)


def dirac(p: CliffordPolynomial) -> CliffordPolynomial:
    """Dirac operator sum_j e_j d/dx_j (left action)."""
    ctx = p.context
    acc: dict[tuple[int, ...], dict[int, Fraction]] = {}
    for exps, coeff in p.terms.items():
        for j in range(1, ctx.m + 1):
            a = exps[j]
            if not a:
                continue
            lowered = exps[:j] + (a - 1,) + exps[j + 1 :]
            bucket = acc.setdefault(lowered, {})
            ej = 1 << (j - 1)
            for mask, q in coeff.terms.items():
                sign, prod = blade_product(ej, mask)
                total = bucket.get(prod, _ZERO) + sign * a * q
                if total:
                    bucket[prod] = total
                elif prod in bucket:
                    del bucket[prod]
    return CliffordPolynomial._from_raw(ctx, acc)


def cauchy_riemann(p: CliffordPolynomial) -> CliffordPolynomial:
    """Generalized Cauchy-Riemann operator d/dx_0 + dirac."""
    return p.partial_derivative(0) + dirac(p)


def conj_cauchy_riemann(p: CliffordPolynomial) -> CliffordPolynomial:
    """Conjugate operator d/dx_0 - dirac."""
    return p.partial_derivative(0) - dirac(p)


def laplacian(p: CliffordPolynomial) -> CliffordPolynomial:
    """Laplacian in all m+1 variables; factors as the product of the
    Cauchy-Riemann operator with its conjugate."""
    ctx = p.context
    acc: dict[tuple[int, ...], dict[int, Fraction]] = {}
    for exps, coeff in p.terms.items():
        for i in range(ctx.m + 1):
            a = exps[i]
            if a < 2:
                continue
            lowered = exps[:i] + (a - 2,) + exps[i + 1 :]
            factor = a * (a - 1)
            bucket = acc.setdefault(lowered, {})
            for mask, q in coeff.terms.items():
                total = bucket.get(mask, _ZERO) + factor * q
                if total:
                    bucket[mask] = total
                elif mask in bucket:
                    del bucket[mask]
    return CliffordPolynomial._from_raw(ctx, acc)


def hypercomplex_derivative(p: CliffordPolynomial, *, check: bool = True) -> CliffordPolynomial:
    """Derivative of a monogenic polynomial: d/dx_0, which then equals
    half the conjugate operator and minus the Dirac operator.

    With check=True (default) a non-monogenic input raises; check=False
    skips the guard and differentiates anyway.
    """
    if check and not cauchy_riemann(p).is_zero():
        raise NotMonogenicError("input is not monogenic; pass check=False to force")
    return p.partial_derivative(0)


def check_leibniz_scalar(phi: CliffordPolynomial, g: CliffordPolynomial) -> bool:
    """Product rule dirac(phi g) = dirac(phi) g + phi dirac(g) for scalar phi."""
    if any(coeff.grades() - {0} for coeff in phi.terms.values()):
        raise NonScalarInputError("left factor must have grade-0 coefficients")
    phi._require_same_context(g)
    lhs = dirac(phi * g)
    rhs = dirac(phi) * g + phi * dirac(g)
    return lhs == rhs


def vector_components(f: CliffordPolynomial) -> list[CliffordPolynomial]:
    """Split a grade-1 polynomial sum_j f_j e_j into its scalar components f_j."""
    ctx = f.context
    comps: list[dict] = [{} for _ in range(ctx.m)]
    for exps, coeff in f.terms.items():
        for mask, q in coeff.terms.items():
            if mask.bit_count() != 1:
                raise NonVectorInputError("coefficients must be grade 1")
            comps[mask.bit_length() - 1][exps] = q
    return [
        CliffordPolynomial(ctx, {exps: ctx.scalar(q) for exps, q in comp.items()})
        for comp in comps
    ]


def check_leibniz_vector(f: CliffordPolynomial, g: CliffordPolynomial) -> bool:
    """Product rule for a vector-valued left factor f = sum f_j e_j:

    dirac(f g) = dirac(f) g - f dirac(g) - 2 sum_j f_j d/dx_j g
    """
    comps = vector_components(f)
    f._require_same_context(g)
    lhs = dirac(f * g)
    rhs = dirac(f) * g - f * dirac(g)
    for j, fj in enumerate(comps, start=1):
        rhs = rhs - 2 * (fj * g.partial_derivative(j))
    return lhs == rhs


def require_initial_term(pk: CliffordPolynomial, k: int) -> None:
    """Gate for P_k: x_0-free, homogeneous of degree k, Dirac-annihilated, nonzero."""
    if pk.is_zero():
        raise InvalidInitialTermError("initial term is identically zero")
    if pk.depends_on_x0():
        raise InvalidInitialTermError("initial term depends on x_0")
    if not pk.is_homogeneous(k):
        raise InvalidInitialTermError(f"initial term is not homogeneous of degree {k}")
    if not dirac(pk).is_zero():
        raise InvalidInitialTermError("initial term is not in the kernel of the Dirac operator")


def check_dirac_power_rule(n: int, pk: CliffordPolynomial, k: int) -> bool:
    """dirac(x̲^n P_k) == -lowering_factor(m,k,n) x̲^(n-1) P_k for n >= 1."""
    if n < 1:
        raise ValueError("n must be at least 1")
    require_initial_term(pk, k)
    ctx = pk.context
    lhs = dirac(vector_power(ctx, n) * pk)
    rhs = -lowering_factor(ctx.m, k, n) * (vector_power(ctx, n - 1) * pk)
    return lhs == rhs
