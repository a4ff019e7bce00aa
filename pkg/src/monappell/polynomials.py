"""Polynomials in x_0, ..., x_m with multivector coefficients.

The variables are real and therefore central; coefficients sit on the
left of the monomials, which is the convention every left-acting
operator in this package relies on.  Terms are a sparse map from
exponent tuples (a_0, ..., a_m) to `Multivector` coefficients, canonical
in the same sense as `Multivector` itself: zero coefficients are never
stored.  Serialization orders monomials graded-lexicographically.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .algebra import (
    AlgebraContext,
    Multivector,
    Scalar,
    blade_product,
    indices_to_mask,
    mask_to_indices,
)
from .errors import ContextMismatchError

_ZERO = Fraction(0)


def grlex_key(exps: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Graded lexicographic sort key: total degree first, then lexicographic
    with x_0 > x_1 > ... > x_m (so x_0-heavy monomials print first)."""
    return (sum(exps), tuple(-a for a in exps))


def unit_exps(m: int, i: int) -> tuple[int, ...]:
    """Exponent tuple of the bare variable x_i in m+1 variables."""
    return tuple(1 if t == i else 0 for t in range(m + 1))


class CliffordPolynomial:
    """Sparse polynomial over R_{0,m} in the m+1 variables x_0..x_m."""

    __slots__ = ("context", "terms")

    def __init__(self, context: AlgebraContext, terms: dict[tuple[int, ...], Multivector]):
        width = context.m + 1
        cleaned: dict[tuple[int, ...], Multivector] = {}
        for exps, coeff in terms.items():
            if len(exps) != width or any(a < 0 for a in exps):
                raise ValueError(f"bad exponent tuple {exps!r} for m={context.m}")
            if coeff.context != context:
                raise ContextMismatchError("coefficient from a different algebra")
            if not coeff.is_zero():
                cleaned[tuple(exps)] = coeff
        self.context = context
        self.terms = cleaned

    @classmethod
    def _from_raw(cls, context: AlgebraContext, raw: dict) -> CliffordPolynomial:
        """Internal fast path: raw maps exps -> {mask: Fraction}, already reduced."""
        terms = {}
        for exps, bucket in raw.items():
            if bucket:
                mv = Multivector(context, bucket)
                if not mv.is_zero():
                    terms[exps] = mv
        poly = cls.__new__(cls)
        poly.context = context
        poly.terms = terms
        return poly

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, context: AlgebraContext) -> CliffordPolynomial:
        return cls(context, {})

    @classmethod
    def constant(cls, context: AlgebraContext, value: Multivector | Scalar) -> CliffordPolynomial:
        coeff = value if isinstance(value, Multivector) else context.scalar(value)
        return cls(context, {(0,) * (context.m + 1): coeff})

    @classmethod
    def one(cls, context: AlgebraContext) -> CliffordPolynomial:
        return cls.constant(context, 1)

    @classmethod
    def monomial(
        cls, context: AlgebraContext, exps: Iterable[int], coeff: Multivector
    ) -> CliffordPolynomial:
        return cls(context, {tuple(exps): coeff})

    @classmethod
    def variable(cls, context: AlgebraContext, i: int) -> CliffordPolynomial:
        """The scalar variable x_i."""
        if not 0 <= i <= context.m:
            raise IndexError(f"variable index {i} out of range 0..{context.m}")
        return cls.monomial(context, unit_exps(context.m, i), context.one())

    # -- ring structure ------------------------------------------------

    def _require_same_context(self, other: CliffordPolynomial) -> None:
        if self.context != other.context:
            raise ContextMismatchError(
                f"mixed algebra dimensions m={self.context.m} and m={other.context.m}"
            )

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: CliffordPolynomial) -> CliffordPolynomial:
        if not isinstance(other, CliffordPolynomial):
            return NotImplemented
        self._require_same_context(other)
        acc = dict(self.terms)
        for exps, coeff in other.terms.items():
            prev = acc.get(exps)
            total = coeff if prev is None else prev + coeff
            if total.is_zero():
                acc.pop(exps, None)
            else:
                acc[exps] = total
        poly = CliffordPolynomial.__new__(CliffordPolynomial)
        poly.context = self.context
        poly.terms = acc
        return poly

    def __neg__(self) -> CliffordPolynomial:
        poly = CliffordPolynomial.__new__(CliffordPolynomial)
        poly.context = self.context
        poly.terms = {exps: -coeff for exps, coeff in self.terms.items()}
        return poly

    def __sub__(self, other: CliffordPolynomial) -> CliffordPolynomial:
        if not isinstance(other, CliffordPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, CliffordPolynomial):
            self._require_same_context(other)
            acc: dict[tuple[int, ...], dict[int, Fraction]] = {}
            for ea, ca in self.terms.items():
                for eb, cb in other.terms.items():
                    exps = tuple(x + y for x, y in zip(ea, eb))
                    bucket = acc.setdefault(exps, {})
                    for ma, qa in ca.terms.items():
                        for mb, qb in cb.terms.items():
                            sign, mask = blade_product(ma, mb)
                            total = bucket.get(mask, _ZERO) + sign * qa * qb
                            if total:
                                bucket[mask] = total
                            elif mask in bucket:
                                del bucket[mask]
            return CliffordPolynomial._from_raw(self.context, acc)
        if isinstance(other, Multivector):
            # right multiplication: coefficients pick up `other` on the right
            return self._coeff_mapped(lambda c: c * other)
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if not q:
                return CliffordPolynomial.zero(self.context)
            return self._coeff_mapped(lambda c: q * c)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Multivector):
            # left multiplication: `other` acts on each coefficient from the left
            return self._coeff_mapped(lambda c: other * c)
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if not q:
                return CliffordPolynomial.zero(self.context)
            return self._coeff_mapped(lambda c: q * c)
        return NotImplemented

    def _coeff_mapped(self, fn) -> CliffordPolynomial:
        terms = {}
        for exps, coeff in self.terms.items():
            mapped = fn(coeff)
            if not mapped.is_zero():
                terms[exps] = mapped
        poly = CliffordPolynomial.__new__(CliffordPolynomial)
        poly.context = self.context
        poly.terms = terms
        return poly

    def __pow__(self, n: int) -> CliffordPolynomial:
        if n < 0:
            raise ValueError("negative powers are not defined")
        result = CliffordPolynomial.one(self.context)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, CliffordPolynomial):
            return NotImplemented
        return self.context == other.context and self.terms == other.terms

    __hash__ = None

    # -- calculus and structure -----------------------------------------

    def partial_derivative(self, i: int) -> CliffordPolynomial:
        """Formal partial derivative with respect to x_i."""
        if not 0 <= i <= self.context.m:
            raise IndexError(f"variable index {i} out of range 0..{self.context.m}")
        terms = {}
        for exps, coeff in self.terms.items():
            a = exps[i]
            if a:
                lowered = exps[:i] + (a - 1,) + exps[i + 1 :]
                terms[lowered] = a * coeff
        poly = CliffordPolynomial.__new__(CliffordPolynomial)
        poly.context = self.context
        poly.terms = terms
        return poly

    def restrict_x0(self) -> CliffordPolynomial:
        """Substitute x_0 = 0."""
        kept = {exps: coeff for exps, coeff in self.terms.items() if exps[0] == 0}
        poly = CliffordPolynomial.__new__(CliffordPolynomial)
        poly.context = self.context
        poly.terms = kept
        return poly

    def depends_on_x0(self) -> bool:
        return any(exps[0] for exps in self.terms)

    def is_homogeneous(self, degree: int) -> bool:
        """True iff every monomial has the given total degree (vacuously for 0)."""
        return all(sum(exps) == degree for exps in self.terms)

    def total_degree(self) -> int:
        """Maximal total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(exps) for exps in self.terms)

    def homogeneous_component(self, degree: int) -> CliffordPolynomial:
        kept = {exps: coeff for exps, coeff in self.terms.items() if sum(exps) == degree}
        poly = CliffordPolynomial.__new__(CliffordPolynomial)
        poly.context = self.context
        poly.terms = kept
        return poly

    def coefficient(self, exps: Iterable[int]) -> Multivector:
        return self.terms.get(tuple(exps), self.context.zero())

    def evaluate(self, point: Iterable[Scalar]) -> Multivector:
        """Exact substitution of a rational point (x_0, ..., x_m)."""
        values = [Fraction(v) for v in point]
        if len(values) != self.context.m + 1:
            raise ValueError(f"point must have {self.context.m + 1} coordinates")
        total = self.context.zero()
        for exps, coeff in self.terms.items():
            factor = Fraction(1)
            for v, a in zip(values, exps):
                if a:
                    factor *= v**a
            total = total + factor * coeff
        return total

    # -- serialization ---------------------------------------------------

    def sorted_exps(self) -> list[tuple[int, ...]]:
        return sorted(self.terms, key=grlex_key)

    def to_json_dict(self) -> dict:
        """Interchange schema: {"m": m, "terms": [{"exps": [...], "coeff": [...]}]}."""
        terms = []
        for exps in self.sorted_exps():
            coeff = self.terms[exps]
            blades = [
                {
                    "blade": list(mask_to_indices(mask)),
                    "q": f"{coeff.terms[mask].numerator}/{coeff.terms[mask].denominator}",
                }
                for mask in coeff.sorted_masks()
            ]
            terms.append({"exps": list(exps), "coeff": blades})
        return {"m": self.context.m, "terms": terms}

    @classmethod
    def from_json_dict(cls, data: dict) -> CliffordPolynomial:
        context = AlgebraContext(int(data["m"]))
        terms: dict[tuple[int, ...], Multivector] = {}
        for item in data["terms"]:
            exps = tuple(int(a) for a in item["exps"])
            bucket: dict[int, Fraction] = {}
            for entry in item["coeff"]:
                mask = indices_to_mask(entry["blade"], context.m)
                bucket[mask] = bucket.get(mask, _ZERO) + Fraction(entry["q"])
            coeff = Multivector(context, bucket)
            if not coeff.is_zero():
                prev = terms.get(exps)
                terms[exps] = coeff if prev is None else prev + coeff
        return cls(context, terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps in self.sorted_exps():
            mono = " ".join(
                f"x{i}" if a == 1 else f"x{i}^{a}" for i, a in enumerate(exps) if a
            )
            coeff = str(self.terms[exps])
            if mono:
                parts.append(f"({coeff}) {mono}")
            else:
                parts.append(f"({coeff})")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"CliffordPolynomial(m={self.context.m}: {self})"


def vector_variable(context: AlgebraContext) -> CliffordPolynomial:
    """The vector variable: sum_j x_j e_j."""
    terms = {
        unit_exps(context.m, j): context.e(j) for j in range(1, context.m + 1)
    }
    return CliffordPolynomial(context, terms)


def radius_squared(context: AlgebraContext) -> CliffordPolynomial:
    """|x̲|^2 = x_1^2 + ... + x_m^2, a scalar polynomial."""
    terms = {}
    for j in range(1, context.m + 1):
        exps = tuple(2 if t == j else 0 for t in range(context.m + 1))
        terms[exps] = context.one()
    return CliffordPolynomial(context, terms)


def vector_power(context: AlgebraContext, n: int) -> CliffordPolynomial:
    """n-th power of the vector variable in closed form.

    Even powers are scalar: (sum x_j e_j)^(2l) = (-1)^l |x̲|^(2l); odd
    powers carry one remaining vector factor.
    """
    if n < 0:
        raise ValueError("negative powers are not defined")
    half, odd = divmod(n, 2)
    base = radius_squared(context) ** half
    if half % 2:
        base = -base
    return base * vector_variable(context) if odd else base


def first_difference(p: CliffordPolynomial, q: CliffordPolynomial) -> str | None:
    """Describe the graded-lex-first term where p and q differ, or None."""
    diff = p - q
    if diff.is_zero():
        return None
    exps = min(diff.terms, key=grlex_key)
    coeff = diff.terms[exps]
    mask = min(coeff.terms, key=lambda mk: (mk.bit_count(), mk))
    delta = coeff.terms[mask]
    return (
        f"monomial {list(exps)}, blade {list(mask_to_indices(mask))}: "
        f"difference {delta.numerator}/{delta.denominator}"
    )
