"""Seeded random inputs for the property suites (library, CLI, and tests)."""

from __future__ import annotations

import random
from fractions import Fraction

from .algebra import AlgebraContext, Multivector
from .errors import DimensionTooSmallError
from .polynomials import CliffordPolynomial, unit_exps


def random_rational(rng: random.Random, max_abs: int = 6, max_den: int = 4) -> Fraction:
    return Fraction(rng.randint(-max_abs, max_abs), rng.randint(1, max_den))


def random_multivector(
    rng: random.Random,
    context: AlgebraContext,
    max_terms: int = 3,
    grades: tuple[int, ...] | None = None,
) -> Multivector:
    if grades is None:
        masks = range(context.blade_count)
    else:
        masks = [mk for mk in range(context.blade_count) if mk.bit_count() in grades]
    terms: dict[int, Fraction] = {}
    for _ in range(rng.randint(1, max_terms)):
        mask = rng.choice(list(masks))
        terms[mask] = terms.get(mask, Fraction(0)) + random_rational(rng)
    return Multivector(context, terms)


def random_polynomial(
    rng: random.Random,
    context: AlgebraContext,
    max_terms: int = 4,
    max_degree: int = 3,
    include_x0: bool = True,
    grades: tuple[int, ...] | None = None,
) -> CliffordPolynomial:
    total = CliffordPolynomial.zero(context)
    for _ in range(rng.randint(1, max_terms)):
        exps = [0] * (context.m + 1)
        for _ in range(rng.randint(0, max_degree)):
            exps[rng.randint(0 if include_x0 else 1, context.m)] += 1
        coeff = random_multivector(rng, context, grades=grades)
        total = total + CliffordPolynomial(context, {tuple(exps): coeff})
    return total


def random_scalar_polynomial(rng: random.Random, context: AlgebraContext, **kw) -> CliffordPolynomial:
    return random_polynomial(rng, context, grades=(0,), **kw)


def random_vector_polynomial(rng: random.Random, context: AlgebraContext, **kw) -> CliffordPolynomial:
    return random_polynomial(rng, context, grades=(1,), **kw)


def random_x0_free_polynomial(rng: random.Random, context: AlgebraContext, **kw) -> CliffordPolynomial:
    return random_polynomial(rng, context, include_x0=False, **kw)


def random_initial_term(rng: random.Random, context: AlgebraContext, k: int) -> CliffordPolynomial:
    """A random valid degree-k initial term.

    Degree 0: any nonzero constant multivector.  Degree k >= 1: a small
    rational combination of powers (x_i - e_ij x_j)^k over random
    generator pairs, each of which is Dirac-annihilated and homogeneous.
    """
    if k == 0:
        constant = random_multivector(rng, context)
        if constant.is_zero():
            constant = context.one()
        return CliffordPolynomial.constant(context, constant)
    if context.m < 2:
        raise DimensionTooSmallError("random initial terms of positive degree need m >= 2")
    pairs = [
        (i, j)
        for i in range(1, context.m + 1)
        for j in range(i + 1, context.m + 1)
    ]
    chosen = rng.sample(pairs, min(len(pairs), rng.randint(1, 2)))
    total = CliffordPolynomial.zero(context)
    for position, (i, j) in enumerate(chosen):
        weight = random_rational(rng)
        if position == 0 and weight == 0:
            weight = Fraction(1)
        base = CliffordPolynomial.variable(context, i) - CliffordPolynomial.monomial(
            context, unit_exps(context.m, j), context.blade((i, j))
        )
        total = total + weight * base**k
    return total
