"""Sturm sequences, real-root counting and positivity certificates."""
import dataclasses
import enum
import logging
import math
import typing as t
from . import errors as e
from .exact import poly as po
from .exact import rational as ra

_logger = logging.getLogger(__name__)

MINUS_INFINITY = -math.inf
PLUS_INFINITY = math.inf

Point = t.Union[float, ra.Rational]


@dataclasses.dataclass(frozen=True)
class SturmChain:
    """S0 = p, S1 = p', S(i+1) = -rem(S(i-1), S(i)).

    Terms after the first two are scaled by positive rationals to
    primitive integer polynomials, which leaves every sign unchanged.

    """

    terms: t.Tuple[po.RatPoly, ...]

    @property
    def degrees(self) -> list[int]:
        return [term.degree for term in self.terms]

    def __len__(self) -> int:
        return len(self.terms)


def sturm_sequence(p: po.RatPoly) -> SturmChain:
    """Build the Sturm chain of a nonzero polynomial."""
    if p.is_zero():
        raise e.ZeroPolynomial("The Sturm chain of 0 is undefined.")
    terms = [p]
    derivative = p.derivative()
    if not derivative.is_zero():
        terms.append(derivative)
    while terms[-1].degree > 0:
        remainder = -(terms[-2] % terms[-1])
        if remainder.is_zero():
            break
        terms.append(remainder.primitive())
    _logger.debug(f"Sturm chain of degree {p.degree} has {len(terms)} terms")
    return SturmChain(tuple(terms))


def _sign_at(term: po.RatPoly, at: Point) -> int:
    if at == PLUS_INFINITY:
        return ra.sign(term.leading_coefficient)
    if at == MINUS_INFINITY:
        s = ra.sign(term.leading_coefficient)
        return s if term.degree % 2 == 0 else -s
    return ra.sign(term(ra.to_rational(at)))


def sign_variations(chain: SturmChain, at: Point) -> int:
    """Count sign changes of the chain at a point, omitting zeros.

    `at` is a rational, `MINUS_INFINITY` or `PLUS_INFINITY`.

    """
    signs = [s for s in (_sign_at(term, at) for term in chain.terms) if s]
    return sum(1 for x, y in zip(signs, signs[1:]) if x != y)


def count_real_roots(p: po.RatPoly) -> int:
    """Count distinct real roots."""
    chain = sturm_sequence(p)
    return sign_variations(chain, MINUS_INFINITY) - sign_variations(
        chain, PLUS_INFINITY
    )


def count_roots_in_interval(
    p: po.RatPoly, a: ra.RationalLike, b: ra.RationalLike
) -> int:
    """Count distinct roots in (a, b); neither endpoint may be a root."""
    a, b = ra.to_rational(a), ra.to_rational(b)
    if not a < b:
        raise ValueError(f"Empty interval [{a}, {b}].")
    chain = sturm_sequence(p)
    for endpoint in (a, b):
        if p(endpoint) == 0:
            raise e.EndpointIsRoot(endpoint)
    return sign_variations(chain, a) - sign_variations(chain, b)


class Verdict(str, enum.Enum):
    POSITIVE_ON_R = "positive_on_R"
    NEGATIVE_ON_R = "negative_on_R"
    POSITIVE_ON_INTERVAL = "positive_on_interval"
    NEGATIVE_ON_INTERVAL = "negative_on_interval"
    HAS_ROOTS = "has_roots"

    def is_definite(self) -> bool:
        return self is not Verdict.HAS_ROOTS

    def sign(self) -> int:
        if self in (Verdict.POSITIVE_ON_R, Verdict.POSITIVE_ON_INTERVAL):
            return 1
        if self in (Verdict.NEGATIVE_ON_R, Verdict.NEGATIVE_ON_INTERVAL):
            return -1
        return 0


@dataclasses.dataclass(frozen=True)
class Interval:
    """The closed interval [a, b]."""

    a: ra.Rational
    b: ra.Rational


ALL_REALS = None

Domain = t.Optional[Interval]


@dataclasses.dataclass(frozen=True)
class PositivityCertificate:
    """Evidence that a polynomial keeps one sign on a domain.

    For an interval, `v_minus_inf` and `v_plus_inf` hold V(a) and V(b).

    """

    polynomial: po.RatPoly
    v_minus_inf: int
    v_plus_inf: int
    real_root_count: int
    sample_point: ra.Rational
    sample_value: ra.Rational
    leading_coefficient: ra.Rational
    verdict: Verdict
    domain: Domain = ALL_REALS


def certify_sign(p: po.RatPoly, domain: Domain = ALL_REALS):
    """Certify that `p` has no root on the domain, or report its roots.

    A root-free polynomial has the sign of any sample value.  On the
    real line the sample is p(0); on [a, b] it is p(a), and both endpoint
    values are checked directly before Sturm counts the interior.

    """
    chain = sturm_sequence(p)
    if domain is ALL_REALS:
        low, high = MINUS_INFINITY, PLUS_INFINITY
        sample = ra.Rational(0)
    else:
        for endpoint in (domain.a, domain.b):
            if p(endpoint) == 0:
                raise e.EndpointIsRoot(endpoint)
        if not domain.a < domain.b:
            raise ValueError(f"Empty interval [{domain.a}, {domain.b}].")
        low, high = domain.a, domain.b
        sample = domain.a
    v_low = sign_variations(chain, low)
    v_high = sign_variations(chain, high)
    count = v_low - v_high
    value = p(sample)
    if count == 0 and value != 0:
        positive = value > 0
        if domain is ALL_REALS:
            verdict = (
                Verdict.POSITIVE_ON_R if positive else Verdict.NEGATIVE_ON_R
            )
        else:
            verdict = (
                Verdict.POSITIVE_ON_INTERVAL
                if positive
                else Verdict.NEGATIVE_ON_INTERVAL
            )
    else:
        verdict = Verdict.HAS_ROOTS
    _logger.debug(
        f"V(low)={v_low} V(high)={v_high} roots={count} -> {verdict.value}"
    )
    return PositivityCertificate(
        polynomial=p,
        v_minus_inf=v_low,
        v_plus_inf=v_high,
        real_root_count=count,
        sample_point=sample,
        sample_value=value,
        leading_coefficient=p.leading_coefficient,
        verdict=verdict,
        domain=domain,
    )


@dataclasses.dataclass(frozen=True)
class SignRow:
    degree: int
    minus_infinity: int
    plus_infinity: int


def sign_table(chain: SturmChain) -> list[SignRow]:
    """Return the degree and the signs at -∞ and +∞ of every term."""
    return [
        SignRow(
            term.degree,
            _sign_at(term, MINUS_INFINITY),
            _sign_at(term, PLUS_INFINITY),
        )
        for term in chain.terms
    ]


def format_sign_table(rows: list[SignRow]) -> str:
    """Render an aligned text table."""
    lines = ["  i  deg  -inf  +inf"]
    for i, row in enumerate(rows):
        lines.append(
            f"{i:>3}  {row.degree:>3}  "
            f"{ra.sign_symbol(row.minus_infinity):>4}  "
            f"{ra.sign_symbol(row.plus_infinity):>4}"
        )
    return "\n".join(lines)
