"""Exact determinants by fraction-free Bareiss elimination.

Rational matrices go through `sympy.Matrix.det(method="bareiss")`.
Matrices over Z[t] go through a `DomainMatrix` over the polynomial ring,
whose determinant is the same elimination with exact polynomial
quotients.

"""
import functools
import logging
import math
import typing as t
import sympy
from sympy.polys import ring as polynomial_ring
from sympy.polys.matrices import DomainMatrix
from . import family as f
from .. import weierstrass as we
from ..exact import poly as po
from ..exact import rational as ra
from ..exact import trig as tr

_logger = logging.getLogger(__name__)

INTEGER_POLYS, _ = polynomial_ring("t", sympy.ZZ)


def _check_square(matrix: t.Sequence[t.Sequence]) -> int:
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError(f"Matrix with {n} rows is not square.")
    return n


def rational_det(
    matrix: t.Sequence[t.Sequence[ra.RationalLike]],
) -> ra.Rational:
    """Determinant of a matrix of rationals."""
    if _check_square(matrix) == 0:
        return ra.Rational(1)
    entries = sympy.Matrix(
        [[po.to_sympy_rational(x) for x in row] for row in matrix]
    )
    return po.from_sympy_rational(entries.det(method="bareiss"))


def integer_poly_det(
    matrix: t.Sequence[t.Sequence[list[int]]],
) -> list[int]:
    """Determinant of a matrix over Z[t].

    Entries and the result are ascending coefficient lists without
    trailing zeros.

    """
    n = _check_square(matrix)
    if n == 0:
        return [1]
    rows = [
        [
            INTEGER_POLYS.from_dict(
                {(i,): c for i, c in enumerate(entry) if c}
            )
            for entry in row
        ]
        for row in matrix
    ]
    _logger.debug(f"Bareiss elimination of a {n}×{n} matrix over Z[t]")
    domain_matrix = DomainMatrix(rows, (n, n), INTEGER_POLYS.to_domain())
    determinant = domain_matrix.to_dense().det()
    if not determinant:
        return []
    coefficients = [0] * (determinant.degree() + 1)
    for (i,), c in determinant.items():
        coefficients[i] = int(c)
    return coefficients


def determinant_form(
    rows: t.Sequence[t.Sequence[tr.TrigPoly]],
) -> we.WeierstrassForm:
    """Determinant of a trigonometric matrix as a minimal Weierstrass form.

    Every entry becomes P(t)/(1+t²)^N.  Each row is multiplied by
    (1+t²) to its largest N and by the common denominator of its
    coefficients, so elimination runs over Z[t].

    """
    forms: dict[tr.TrigPoly, we.WeierstrassForm] = {}
    cleared = []
    total_power = 0
    scale = ra.Rational(1)
    for row in rows:
        row_forms = []
        for entry in row:
            if entry not in forms:
                forms[entry] = we.to_weierstrass(entry)
            row_forms.append(forms[entry])
        power = max((form.denom_power for form in row_forms), default=0)
        numerators = [
            form.numerator
            * po.ONE_PLUS_T_SQUARED ** (power - form.denom_power)
            for form in row_forms
        ]
        denominator = functools.reduce(
            math.lcm,
            (c.denominator for p in numerators for c in p.coefficients),
            1,
        )
        cleared.append(
            [p.scale(denominator).integer_coefficients() for p in numerators]
        )
        total_power += power
        scale *= denominator
    _logger.debug(
        f"Cleared {len(cleared)} rows with (1+t²)^{total_power}, "
        f"scale {scale}"
    )
    determinant = integer_poly_det(cleared)
    numerator = po.RatPoly(tuple(determinant)).scale(1 / scale)
    return we.WeierstrassForm(numerator, total_power).minimal()


def family_form(fam: f.DerivativeFamily) -> we.WeierstrassForm:
    """Minimal Weierstrass form of the family's determinant."""
    return determinant_form(fam.rows())


def osculating_det(fam: f.DerivativeFamily) -> tr.TrigPoly:
    """Exact determinant D(z) of the stripped family."""
    return we.from_weierstrass(family_form(fam))
