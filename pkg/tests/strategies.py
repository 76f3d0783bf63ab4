"""Hypothesis strategies shared by the property suites."""
import hypothesis as h
import hypothesis.strategies as hs
import sympy
import freemaps.exact.poly as po
import freemaps.exact.rational as ra
import freemaps.exact.trig as tr

settings = h.settings(max_examples=200, deadline=None)

rationals = hs.builds(
    ra.Rational,
    hs.integers(min_value=-50, max_value=50),
    hs.integers(min_value=1, max_value=12),
)

small_ints = hs.integers(min_value=-9, max_value=9)


def polys(max_degree: int = 5, elements=rationals):
    return hs.lists(elements, max_size=max_degree + 1).map(
        lambda xs: po.RatPoly(tuple(xs))
    )


def nonzero_polys(max_degree: int = 5, elements=rationals):
    return polys(max_degree, elements).filter(lambda p: not p.is_zero())


def trig_polys(max_frequency: int = 3, elements=rationals):
    frequencies = hs.dictionaries(
        hs.integers(min_value=1, max_value=max_frequency),
        elements,
        max_size=max_frequency,
    )
    return hs.builds(tr.TrigPoly.of, elements, frequencies, frequencies)


def trig_expression(p: tr.TrigPoly, z):
    """The same polynomial as a sympy expression in `z`."""
    return sum(
        (
            po.to_sympy_rational(c)
            * (sympy.cos(k * z) if kind == "c" else sympy.sin(k * z))
            for kind, k, c in p.terms()
        ),
        sympy.Integer(0),
    )
