"""Exact arithmetic in the real Clifford algebra R_{0,m}.

The algebra is generated by e_1, ..., e_m subject to

    e_j * e_j = -1                  (j = 1, ..., m)
    e_j * e_k + e_k * e_j = 0       (j != k)

A basis blade e_A with A = {j_1 < ... < j_g} is stored as an integer bit
mask (bit j-1 set iff generator j occurs); the empty mask is the identity
element.  A multivector is a sparse map from blade masks to
`fractions.Fraction` coefficients.  The map is kept canonical -- zero
coefficients are never stored -- so two multivectors are equal exactly
when their term maps are equal.  No floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import ContextMismatchError

MAX_DIMENSION = 16

Scalar = int | Fraction

_ZERO = Fraction(0)


def blade_product(a: int, b: int) -> tuple[int, int]:
    """Multiply two basis blades given as bit masks; return (sign, mask).

    The sign counts the transpositions needed to sort the concatenated
    generator lists, with one extra flip per shared generator (e_j^2 = -1).
    """
    swaps = 0
    t = a >> 1
    while t:
        swaps += (t & b).bit_count()
        t >>= 1
    sign = -1 if swaps & 1 else 1
    if (a & b).bit_count() & 1:
        sign = -sign
    return sign, a ^ b


def mask_to_indices(mask: int) -> tuple[int, ...]:
    """Generator indices (1-based, increasing) of a blade mask."""
    return tuple(j + 1 for j in range(mask.bit_length()) if mask >> j & 1)


def indices_to_mask(indices: Iterable[int], m: int) -> int:
    """Bit mask of a blade given by distinct generator indices in 1..m."""
    mask = 0
    for j in indices:
        if not 1 <= j <= m:
            raise ValueError(f"generator index {j} out of range 1..{m}")
        bit = 1 << (j - 1)
        if mask & bit:
            raise ValueError(f"repeated generator index {j}")
        mask |= bit
    return mask


def blade_label(mask: int) -> str:
    indices = mask_to_indices(mask)
    if not indices:
        return "1"
    sep = "," if indices[-1] > 9 else ""
    return "e" + sep.join(str(j) for j in indices)


@dataclass(frozen=True)
class AlgebraContext:
    """Fixes the generator count m of R_{0,m} (1 <= m <= 16)."""

    m: int

    def __post_init__(self) -> None:
        if not isinstance(self.m, int) or not 1 <= self.m <= MAX_DIMENSION:
            raise ValueError(f"dimension m must be an integer in 1..{MAX_DIMENSION}")

    @property
    def blade_count(self) -> int:
        return 1 << self.m

    def zero(self) -> Multivector:
        return Multivector(self, {})

    def scalar(self, value: Scalar) -> Multivector:
        return Multivector(self, {0: Fraction(value)})

    def one(self) -> Multivector:
        return self.scalar(1)

    def e(self, j: int) -> Multivector:
        """The generator e_j."""
        return self.blade((j,))

    def blade(self, indices: Iterable[int]) -> Multivector:
        """The basis blade with the given generator indices."""
        return Multivector(self, {indices_to_mask(indices, self.m): Fraction(1)})


class Multivector:
    """Sparse element of R_{0,m}; instances are treated as immutable."""

    __slots__ = ("context", "terms")

    def __init__(self, context: AlgebraContext, terms: dict[int, Scalar]):
        limit = 1 << context.m
        cleaned: dict[int, Fraction] = {}
        for mask, coeff in terms.items():
            if not 0 <= mask < limit:
                raise ValueError(f"blade mask {mask:#x} out of range for m={context.m}")
            q = Fraction(coeff)
            if q:
                cleaned[mask] = q
        self.context = context
        self.terms = cleaned

    def _require_same_context(self, other: Multivector) -> None:
        if self.context != other.context:
            raise ContextMismatchError(
                f"mixed algebra dimensions m={self.context.m} and m={other.context.m}"
            )

    def is_zero(self) -> bool:
        return not self.terms

    def is_scalar(self) -> bool:
        return all(mask == 0 for mask in self.terms)

    def scalar_part(self) -> Fraction:
        return self.terms.get(0, _ZERO)

    def grades(self) -> set[int]:
        return {mask.bit_count() for mask in self.terms}

    def __add__(self, other: Multivector) -> Multivector:
        if not isinstance(other, Multivector):
            return NotImplemented
        self._require_same_context(other)
        acc = dict(self.terms)
        for mask, q in other.terms.items():
            total = acc.get(mask, _ZERO) + q
            if total:
                acc[mask] = total
            elif mask in acc:
                del acc[mask]
        return Multivector(self.context, acc)

    def __neg__(self) -> Multivector:
        return Multivector(self.context, {mask: -q for mask, q in self.terms.items()})

    def __sub__(self, other: Multivector) -> Multivector:
        if not isinstance(other, Multivector):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Multivector):
            self._require_same_context(other)
            acc: dict[int, Fraction] = {}
            for ma, qa in self.terms.items():
                for mb, qb in other.terms.items():
                    sign, mask = blade_product(ma, mb)
                    total = acc.get(mask, _ZERO) + sign * qa * qb
                    if total:
                        acc[mask] = total
                    elif mask in acc:
                        del acc[mask]
            return Multivector(self.context, acc)
        if isinstance(other, (int, Fraction)):
            return self._scaled(Fraction(other))
        return NotImplemented

    def __rmul__(self, other):
        # Scalars are central, so left scaling equals right scaling.
        if isinstance(other, (int, Fraction)):
            return self._scaled(Fraction(other))
        return NotImplemented

    def _scaled(self, q: Fraction) -> Multivector:
        if not q:
            return Multivector(self.context, {})
        return Multivector(self.context, {mask: q * c for mask, c in self.terms.items()})

    def conjugate(self) -> Multivector:
        """Clifford conjugation: reverse factor order and negate each generator.

        On a grade-g blade this is the sign (-1)^(g(g+1)/2).
        """
        flipped = {}
        for mask, q in self.terms.items():
            g = mask.bit_count()
            flipped[mask] = -q if g % 4 in (1, 2) else q
        return Multivector(self.context, flipped)

    def grade_projection(self, g: int) -> Multivector:
        if not 0 <= g <= self.context.m:
            raise ValueError(f"grade {g} out of range 0..{self.context.m}")
        kept = {mask: q for mask, q in self.terms.items() if mask.bit_count() == g}
        return Multivector(self.context, kept)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.context == other.context and self.terms == other.terms

    __hash__ = None  # mutable-dict backed; not hashable

    def sorted_masks(self) -> list[int]:
        return sorted(self.terms, key=lambda mk: (mk.bit_count(), mk))

    def to_json(self) -> list[dict]:
        """Interchange form: [{"blade": [indices], "coeff": "num/den"}, ...]."""
        out = []
        for mask in self.sorted_masks():
            q = self.terms[mask]
            out.append(
                {"blade": list(mask_to_indices(mask)), "coeff": f"{q.numerator}/{q.denominator}"}
            )
        return out

    @classmethod
    def from_json(cls, context: AlgebraContext, data: Iterable[dict]) -> Multivector:
        terms: dict[int, Fraction] = {}
        for item in data:
            mask = indices_to_mask(item["blade"], context.m)
            terms[mask] = terms.get(mask, _ZERO) + Fraction(item["coeff"])
        return cls(context, terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mask in self.sorted_masks():
            q = self.terms[mask]
            if mask == 0:
                parts.append(str(q))
            elif q == 1:
                parts.append(blade_label(mask))
            elif q == -1:
                parts.append("-" + blade_label(mask))
            else:
                parts.append(f"{q}*{blade_label(mask)}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"Multivector(m={self.context.m}: {self})"
