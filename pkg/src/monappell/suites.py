"""Randomized identity suites shared by the CLI and the acceptance tests.

Each suite draws seeded random inputs, checks one identity exactly on
every draw, and reports a single aggregated entry whose witness names
the first failing case.
"""

from __future__ import annotations

import random

from .algebra import AlgebraContext
from .ck import check_ck_intertwining, ck_extend, is_monogenic
from .operators import check_dirac_power_rule, check_leibniz_scalar, check_leibniz_vector
from .report import VerificationReport
from .sampling import (
    random_initial_term,
    random_polynomial,
    random_scalar_polynomial,
    random_vector_polynomial,
    random_x0_free_polynomial,
)


def _aggregate(report, name, m, seed, cases, failures):
    witness = None if not failures else f"first failing case index {failures[0]}"
    report.add(
        name,
        {"m": m, "cases": cases, "seed": seed, "failures": len(failures)},
        not failures,
        witness,
    )


def leibniz_scalar_suite(m: int, seed: int, cases: int) -> VerificationReport:
    rng = random.Random(seed)
    context = AlgebraContext(m)
    failures = []
    for index in range(cases):
        phi = random_scalar_polynomial(rng, context)
        g = random_polynomial(rng, context)
        if not check_leibniz_scalar(phi, g):
            failures.append(index)
    report = VerificationReport()
    _aggregate(report, "leibniz_scalar", m, seed, cases, failures)
    return report


def leibniz_vector_suite(m: int, seed: int, cases: int) -> VerificationReport:
    rng = random.Random(seed)
    context = AlgebraContext(m)
    failures = []
    for index in range(cases):
        f = random_vector_polynomial(rng, context)
        g = random_polynomial(rng, context)
        if not check_leibniz_vector(f, g):
            failures.append(index)
    report = VerificationReport()
    _aggregate(report, "leibniz_vector", m, seed, cases, failures)
    return report


def power_rule_suite(
    m: int, seed: int, cases: int, k_max: int = 2, n_max: int = 4
) -> VerificationReport:
    rng = random.Random(seed)
    context = AlgebraContext(m)
    failures = []
    for index in range(cases):
        k = rng.randint(0, k_max) if m >= 2 else 0
        n = rng.randint(1, n_max)
        pk = random_initial_term(rng, context, k)
        if not check_dirac_power_rule(n, pk, k):
            failures.append(index)
    report = VerificationReport()
    _aggregate(report, "dirac_power_rule", m, seed, cases, failures)
    return report


def ck_suite(m: int, seed: int, cases: int) -> VerificationReport:
    """Extension restriction, monogenicity of the extension, and the
    derivative intertwining, on random x_0-free data."""
    rng = random.Random(seed)
    context = AlgebraContext(m)
    restrict_failures = []
    monogenic_failures = []
    intertwine_failures = []
    for index in range(cases):
        g = random_x0_free_polynomial(rng, context)
        extension = ck_extend(g)
        if extension.restrict_x0() != g:
            restrict_failures.append(index)
        if not is_monogenic(extension):
            monogenic_failures.append(index)
        if not check_ck_intertwining(g):
            intertwine_failures.append(index)
    report = VerificationReport()
    _aggregate(report, "ck_restriction", m, seed, cases, restrict_failures)
    _aggregate(report, "ck_monogenic", m, seed, cases, monogenic_failures)
    _aggregate(report, "ck_intertwining", m, seed, cases, intertwine_failures)
    return report


def run_identity_suites(m: int, seed: int, cases: int) -> VerificationReport:
    report = VerificationReport()
    report.extend(leibniz_scalar_suite(m, seed, cases))
    report.extend(leibniz_vector_suite(m, seed + 1, cases))
    report.extend(power_rule_suite(m, seed + 2, cases))
    report.extend(ck_suite(m, seed + 3, cases))
    return report
