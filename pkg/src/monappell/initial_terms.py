"""Built-in initial terms P_k and the validation gate for user-supplied ones.

The built-in family is the k-th power of x_1 - e_12 x_2, a degree-1
element annihilated by the Dirac operator that generates a commutative,
complex-like subalgebra; its powers are therefore homogeneous monogenic
of every degree k and exist for all m >= 2.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .algebra import AlgebraContext
from .errors import DimensionTooSmallError, InvalidInitialTermError
from .operators import dirac, require_initial_term
from .polynomials import CliffordPolynomial, first_difference, grlex_key, unit_exps
from .report import VerificationReport

BUILTIN_SOURCE = "builtin"


def builtin_initial_term(context: AlgebraContext, k: int) -> CliffordPolynomial:
    """(x_1 - e_12 x_2)^k, or the constant 1 for k = 0."""
    if k < 0:
        raise ValueError("degree k must be non-negative")
    if k == 0:
        return CliffordPolynomial.one(context)
    if context.m < 2:
        raise DimensionTooSmallError(
            "no built-in initial term of positive degree exists for m = 1"
        )
    base = CliffordPolynomial.variable(context, 1) - CliffordPolynomial.monomial(
        context, unit_exps(context.m, 2), context.blade((1, 2))
    )
    return base**k


def validate_initial_term(p: CliffordPolynomial, k: int) -> VerificationReport:
    """Report the three defining checks: no x_0, homogeneous of degree k,
    Dirac-annihilated.  Failures are recorded, not raised."""
    report = VerificationReport()
    params = {"m": p.context.m, "k": k}

    x0_witness = None
    if p.depends_on_x0():
        bad = min((e for e in p.terms if e[0]), key=grlex_key)
        x0_witness = f"monomial {list(bad)} involves x_0"
    report.add("initial_term_x0_free", params, not p.depends_on_x0(), x0_witness)

    degree_witness = None
    if not p.is_homogeneous(k):
        bad = min((e for e in p.terms if sum(e) != k), key=grlex_key)
        degree_witness = f"monomial {list(bad)} has degree {sum(bad)}, expected {k}"
    report.add("initial_term_homogeneous", params, p.is_homogeneous(k), degree_witness)

    residual = dirac(p)
    report.add(
        "initial_term_dirac_kernel",
        params,
        residual.is_zero(),
        first_difference(residual, CliffordPolynomial.zero(p.context)),
    )
    return report


def load_initial_term(path: str | Path) -> CliffordPolynomial:
    """Read a polynomial from the JSON interchange schema."""
    with open(path, "r", encoding="utf-8") as handle:
        data = json.load(handle)
    return CliffordPolynomial.from_json_dict(data)


@dataclass
class InitialTermSpec:
    """Where an initial term comes from: the built-in family or a JSON file."""

    m: int
    k: int
    source: str = BUILTIN_SOURCE

    def resolve(self) -> CliffordPolynomial:
        """Build or load the term, then run it through the validation gate."""
        context = AlgebraContext(self.m)
        if self.source == BUILTIN_SOURCE:
            term = builtin_initial_term(context, self.k)
        else:
            term = load_initial_term(self.source)
            if term.context.m != self.m:
                raise InvalidInitialTermError(
                    f"file declares m={term.context.m}, expected m={self.m}"
                )
        require_initial_term(term, self.k)
        return term
