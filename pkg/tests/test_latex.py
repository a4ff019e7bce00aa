from fractions import Fraction

from monappell.algebra import AlgebraContext
from monappell.initial_terms import builtin_initial_term
from monappell.latex import (
    collected_term_latex,
    fraction_latex,
    multivector_latex,
    polynomial_latex,
)

CTX3 = AlgebraContext(3)


def test_fraction_latex():
    assert fraction_latex(Fraction(2)) == "2"
    assert fraction_latex(Fraction(-3)) == "-3"
    assert fraction_latex(Fraction(1, 3)) == r"\frac{1}{3}"
    assert fraction_latex(Fraction(-2, 5)) == r"-\frac{2}{5}"


def test_multivector_latex():
    a = CTX3.scalar(2) - CTX3.blade((1, 2))
    assert multivector_latex(a) == r"2 - e_{12}"
    assert multivector_latex(CTX3.zero()) == "0"
    assert multivector_latex(Fraction(1, 2) * CTX3.e(3)) == r"\frac{1}{2} e_{3}"


def test_polynomial_latex_builtin_terms():
    assert polynomial_latex(builtin_initial_term(CTX3, 1)) == r"x_{1} - x_{2} e_{12}"
    assert (
        polynomial_latex(builtin_initial_term(CTX3, 2))
        == r"x_{1}^{2} - 2 x_{1} x_{2} e_{12} - x_{2}^{2}"
    )


def test_collected_form_classical_dimension_three():
    assert collected_term_latex(3, 0, 0) == "1"
    assert collected_term_latex(3, 0, 1) == r"x_0 + \frac{1}{3} \underline{x}"
    assert (
        collected_term_latex(3, 0, 2)
        == r"x_0^{2} + \frac{2}{3} x_0 \underline{x} + \frac{1}{3} \underline{x}^{2}"
    )


def test_collected_form_with_initial_term():
    pk = builtin_initial_term(CTX3, 1)
    rendered = collected_term_latex(3, 1, 1, pk)
    assert rendered == (
        r"\left(x_0 + \frac{1}{5} \underline{x}\right)"
        r"\left(x_{1} - x_{2} e_{12}\right)"
    )
    assert collected_term_latex(3, 1, 0, pk) == r"x_{1} - x_{2} e_{12}"
