"""Polynomial content of the collar between the cylinder and polar models.

On the collar F(u, θ) = (a cos θ, a sin θ, b cos 2θ, b sin 2θ, c) with
b = u·a, and its osculating determinant is -2a³H where

    H = (a - 3u a')c'' + (3u a'' - 2a')c'.

Only the algebra is checked here: the identity, the endpoint 2-jets
and the positivity of a and K on [0, 1].  Smooth cutoffs are not
modelled.

"""
import dataclasses
import enum
import itertools
import logging
import typing as t
from . import errors as e
from . import sturm as st
from .ansatz import determinant as d
from .ansatz import family as f
from .ansatz import weights as w
from .exact import poly as po
from .exact import rational as ra

_logger = logging.getLogger(__name__)

U = po.X

# θ rotates the first block once and the second twice; c is fixed.
COLLAR_WEIGHTS = w.WeightSet(1, ((1,), (2,)), fixed=True)

PUBLISHED_K_SCALE = ra.Rational(500000)


@dataclasses.dataclass(frozen=True)
class CollarProfile:
    a: po.RatPoly
    c: po.RatPoly

    @property
    def b(self) -> po.RatPoly:
        return U * self.a


def hessian_combination(profile: CollarProfile) -> po.RatPoly:
    """Return H = (a - 3u a')c'' + (3u a'' - 2a')c'."""
    a, c = profile.a, profile.c
    a1, a2 = a.derivative(), a.derivative().derivative()
    c1, c2 = c.derivative(), c.derivative().derivative()
    return (a - U * a1.scale(3)) * c2 + (U * a2.scale(3) - a1.scale(2)) * c1


@dataclasses.dataclass(frozen=True)
class JetRow:
    point: int
    function: str
    order: int
    expected: ra.Rational
    actual: ra.Rational

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


@dataclasses.dataclass(frozen=True)
class JetReport:
    jet0_ok: bool
    jet1_ok: bool
    rows: t.Tuple[JetRow, ...]


# h0 = (1, u, -u²/2) at u = 0 and h1 = (2u, 2u², 2u²) at u = 1.
MODEL_AT_0 = (
    po.RatPoly.of(1),
    po.RatPoly.of(0, 1),
    po.RatPoly.of(0, 0, ra.Rational(-1, 2)),
)
MODEL_AT_1 = (
    po.RatPoly.of(0, 2),
    po.RatPoly.of(0, 0, 2),
    po.RatPoly.of(0, 0, 2),
)


def _jets(p: po.RatPoly, point: ra.Rational) -> list[ra.Rational]:
    first = p.derivative()
    return [p(point), first(point), first.derivative()(point)]


def jet_match(profile: CollarProfile) -> JetReport:
    """Compare the 2-jets of (a, b, c) with the models at u = 0 and 1."""
    rows = []
    for point, model in ((0, MODEL_AT_0), (1, MODEL_AT_1)):
        functions = zip("abc", (profile.a, profile.b, profile.c), model)
        for name, actual, expected in functions:
            for order, (x, y) in enumerate(
                zip(_jets(expected, point), _jets(actual, point))
            ):
                rows.append(JetRow(point, name, order, x, y))
    return JetReport(
        jet0_ok=all(row.ok for row in rows if row.point == 0),
        jet1_ok=all(row.ok for row in rows if row.point == 1),
        rows=tuple(rows),
    )


class CollarVerdict(str, enum.Enum):
    FREE_ON_COLLAR = "FREE_ON_COLLAR"
    JET_MISMATCH = "JET_MISMATCH"
    NOT_POSITIVE = "NOT_POSITIVE"


@dataclasses.dataclass(frozen=True)
class CollarCertificate:
    """H, its positive normalization K = -k_scale·H and the checks.

    The determinant is -2a³H = 2a³K/k_scale, so it is positive on
    [0, 1] when a and K are.

    """

    H: po.RatPoly
    K: po.RatPoly
    k_scale: ra.Rational
    jets: JetReport
    a_positive_on_01: st.PositivityCertificate
    K_positive_on_01: st.PositivityCertificate
    det_formula: str
    verdict: CollarVerdict

    @property
    def jet0_ok(self) -> bool:
        return self.jets.jet0_ok

    @property
    def jet1_ok(self) -> bool:
        return self.jets.jet1_ok


UNIT_INTERVAL = st.Interval(ra.Rational(0), ra.Rational(1))


def verify_collar(profile: CollarProfile) -> CollarCertificate:
    """Check jets, the H/K relation and positivity on [0, 1]."""
    h = hessian_combination(profile)
    if h.is_zero():
        raise e.StructureError(
            "The collar Hessian combination H vanishes identically, "
            "so det DF = -2a³H is 0 on the whole collar."
        )
    k = (-h).primitive()
    k_scale = 1 / (-h).content()
    if k_scale != PUBLISHED_K_SCALE:
        _logger.warning(f"K = -{k_scale}·H, not -{PUBLISHED_K_SCALE}·H")
    jets = jet_match(profile)
    a_positive = st.certify_sign(profile.a, UNIT_INTERVAL)
    k_positive = st.certify_sign(k, UNIT_INTERVAL)
    positive = (
        a_positive.verdict is st.Verdict.POSITIVE_ON_INTERVAL
        and k_positive.verdict is st.Verdict.POSITIVE_ON_INTERVAL
    )
    if not positive:
        verdict = CollarVerdict.NOT_POSITIVE
    elif not (jets.jet0_ok and jets.jet1_ok):
        verdict = CollarVerdict.JET_MISMATCH
    else:
        verdict = CollarVerdict.FREE_ON_COLLAR
    return CollarCertificate(
        H=h,
        K=k,
        k_scale=k_scale,
        jets=jets,
        a_positive_on_01=a_positive,
        K_positive_on_01=k_positive,
        det_formula=f"det DF = -2a³H = 2a³K/{k_scale}",
        verdict=verdict,
    )


def profile_determinant(
    a: po.RatPoly, b: po.RatPoly, c: po.RatPoly, u0: ra.RationalLike
) -> ra.Rational:
    """Exact 5×5 osculating determinant of the collar form at u0.

    The columns are ∂θ, ∂u, ∂θθ, ∂θu, ∂uu of the rotation ansatz with
    loop (a, 0, b, 0, c), built by the generic jet machinery.

    """
    u0 = ra.to_rational(u0)
    zero = po.RatPoly()
    loop = (a, zero, b, zero, c)
    jets = []
    for _ in range(3):
        jets.append([p(u0) for p in loop])
        loop = tuple(p.derivative() for p in loop)
    columns = f.osculating_columns(
        COLLAR_WEIGHTS, jets, f.derivative_words(1, 2)
    )
    return d.rational_det(list(zip(*columns)))


def collar_determinant(profile: CollarProfile) -> po.RatPoly:
    """Return -2a³H as a polynomial."""
    return (profile.a ** 3 * hessian_combination(profile)).scale(-2)


class PolynomialMap:
    """A polynomial map R^n -> R^q given by monomial dictionaries."""

    def __init__(self, n: int, components: t.Sequence[dict]):
        self.n = n
        self.components = [
            {tuple(e): ra.to_rational(c) for e, c in comp.items()}
            for comp in components
        ]

    def _partial(self, comp: dict, i: int) -> dict:
        result = {}
        for exponent, c in comp.items():
            if exponent[i]:
                lowered = list(exponent)
                lowered[i] -= 1
                result[tuple(lowered)] = c * exponent[i]
        return result

    def _value(self, comp: dict, point) -> ra.Rational:
        total = ra.Rational(0)
        for exponent, c in comp.items():
            term = c
            for x, e in zip(point, exponent):
                term *= x ** e
            total += term
        return total

    def osculating_matrix(self, point) -> list[list[ra.Rational]]:
        """Rows are components; columns ∂_i, then ∂_i∂_j for i ≤ j."""
        point = [ra.to_rational(x) for x in point]
        words = [(i,) for i in range(self.n)] + list(
            itertools.combinations_with_replacement(range(self.n), 2)
        )
        rows = []
        for comp in self.components:
            row = []
            for word in words:
                derived = comp
                for i in word:
                    derived = self._partial(derived, i)
                row.append(self._value(derived, point))
            rows.append(row)
        return rows

    def osculating_det(self, point) -> ra.Rational:
        return d.rational_det(self.osculating_matrix(point))


def _unit(n: int, *indices: int) -> tuple:
    exponent = [0] * n
    for i in indices:
        exponent[i] += 1
    return tuple(exponent)


def canonical_map(m: int) -> PolynomialMap:
    """(x_i, x_i²/2, x_i x_j) ordered like the derivative columns."""
    components = [{_unit(m, i): 1} for i in range(m)]
    for i, j in itertools.combinations_with_replacement(range(m), 2):
        components.append(
            {_unit(m, i, j): ra.Rational(1, 2) if i == j else 1}
        )
    return PolynomialMap(m, components)


def canonical_model_det(m: int, point) -> ra.Rational:
    """Osculating determinant of the canonical free map, always 1."""
    return canonical_map(m).osculating_det(point)


P_TILDE = PolynomialMap(
    2,
    [
        {(1, 0): 1},
        {(0, 1): 1},
        {(2, 0): ra.Rational(1, 2), (0, 2): ra.Rational(-1, 2)},
        {(1, 1): 1},
        {(2, 0): ra.Rational(1, 2), (0, 2): ra.Rational(1, 2)},
    ],
)

CYLINDER = CollarProfile(
    po.RatPoly.of(1), po.RatPoly.of(0, 0, ra.Rational(-1, 2))
)

# D_λ scales the first two coordinates by λ and the last three by λ².
DILATION_EXPONENTS = (1, 1, 2, 2, 2)

REFLECTION = (1, 1, -1, -1, 1)


@dataclasses.dataclass(frozen=True)
class StandardModels:
    p_tilde_det: ra.Rational
    cylinder_det: ra.Rational
    w_tilde_dets: t.Tuple[t.Tuple[ra.Rational, ra.Rational], ...]
    dilation_exponents: t.Tuple[int, ...]
    dilation_det_exponent: int
    scaled_cylinder_dets: t.Tuple[t.Tuple[ra.Rational, ra.Rational], ...]
    reflection_det: ra.Rational
    reflection_flips_cylinder: bool


def _scaled_profile_det(
    profile: CollarProfile, lam: ra.Rational, u0: ra.Rational
) -> ra.Rational:
    scales = [lam ** n for n in DILATION_EXPONENTS]
    zero = po.RatPoly()
    loop = (profile.a, zero, profile.b, zero, profile.c)
    loop = [p.scale(s) for p, s in zip(loop, scales)]
    return profile_determinant(loop[0], loop[2], loop[4], u0)


def standard_models(
    samples: t.Sequence[ra.RationalLike] = ("1/2", 1, 2),
    lambdas: t.Sequence[ra.RationalLike] = (1, 2, "1/3"),
) -> StandardModels:
    """Evaluate the models P̃, C, W̃, D_λ and the reflection S."""
    samples = [ra.to_rational(x) for x in samples]
    p_values = {P_TILDE.osculating_det((x, 1 - x)) for x in samples}
    if len(p_values) != 1:
        raise RuntimeError(f"P̃ determinant is not constant: {p_values}")
    cylinder = collar_determinant(CYLINDER)
    if cylinder.degree > 0:
        raise RuntimeError(f"Cylinder determinant {cylinder} is not constant.")
    for u0 in samples:
        direct = profile_determinant(CYLINDER.a, CYLINDER.b, CYLINDER.c, u0)
        if direct != cylinder(u0):
            raise RuntimeError(f"Cylinder determinant {direct} at {u0}.")
    half_square = po.RatPoly.of(0, 0, ra.Rational(1, 2))
    w_tilde = tuple(
        (r, profile_determinant(U, half_square, half_square, r))
        for r in samples
    )
    scaled = tuple(
        (lam, _scaled_profile_det(CYLINDER, lam, samples[0]))
        for lam in (ra.to_rational(x) for x in lambdas)
    )
    zero = po.RatPoly()
    cylinder_loop = (CYLINDER.a, zero, CYLINDER.b, zero, CYLINDER.c)
    reflected = [p.scale(s) for p, s in zip(cylinder_loop, REFLECTION)]
    flipped = [p.compose(po.RatPoly.of(0, -1)) for p in cylinder_loop]
    reflection_det = ra.Rational(1)
    for s in REFLECTION:
        reflection_det *= s
    return StandardModels(
        p_tilde_det=p_values.pop(),
        cylinder_det=cylinder(0),
        w_tilde_dets=w_tilde,
        dilation_exponents=DILATION_EXPONENTS,
        dilation_det_exponent=sum(DILATION_EXPONENTS),
        scaled_cylinder_dets=scaled,
        reflection_det=reflection_det,
        reflection_flips_cylinder=reflected == flipped,
    )
