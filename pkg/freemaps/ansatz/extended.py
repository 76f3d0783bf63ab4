"""The two-loop ansatz with exponential radial factors.

F(x, u, v) = (R(x) b(u, v), c(u, v)) where block r of b is
ρ_r(u) (cos μ_r v, sin μ_r v), ρ_r = exp Q_r and q_r = Q_r'.  The
companion block c is independent of x and each of its components
depends on u or on v alone.

Ordering the columns so that the ones touching c come last makes the
osculating matrix block triangular.  Its determinant is then the
companion determinant det(c_u, c_v, c_uu, c_vv) times Δ_b.  Each block
of Δ_b factors as ρ_r and a rotation by μ_r v, leaving a matrix in u
only.

"""
import dataclasses
import itertools
import typing as t
from sympy.combinatorics import Permutation
from . import family as f
from . import weights as w
from .. import errors as e
from ..exact import rational as ra
from ..exact import trig as tr

U = "u"
V = "v"


@dataclasses.dataclass(frozen=True)
class CompanionComponent:
    """One coordinate of c, a trigonometric polynomial in u or in v."""

    variable: str
    poly: tr.TrigPoly


@dataclasses.dataclass(frozen=True)
class ExtendedAnsatzSpec:
    """Weights, block frequencies μ_r, log-derivatives q_r and c.

    `v_profiles`, when given, states each block's v-dependence
    explicitly; it must be (cos μ_r v, sin μ_r v).

    """

    weight_set: w.WeightSet
    mu: t.Tuple[int, ...]
    logderivs: t.Tuple[tr.TrigPoly, ...]
    companion: t.Tuple[CompanionComponent, ...]
    label: str = ""
    v_profiles: t.Optional[t.Tuple[t.Tuple[tr.TrigPoly, tr.TrigPoly], ...]] = (
        None
    )

    def problems(self) -> list[str]:
        messages = self.weight_set.problems()
        r = self.weight_set.r
        if self.weight_set.fixed:
            messages.append("extended weights take no fixed coordinate")
        if len(self.mu) != r:
            messages.append(f"{len(self.mu)} frequencies for {r} blocks")
        if len(self.logderivs) != r:
            messages.append(f"{len(self.logderivs)} logderivs for {r} blocks")
        if len(self.companion) != 4:
            messages.append(
                f"companion has {len(self.companion)} components, not 4"
            )
        for i, component in enumerate(self.companion):
            if component.variable not in (U, V):
                messages.append(
                    f"companion {i} depends on {component.variable!r}"
                )
        return messages


def reduced_words(k: int) -> list[str]:
    """Column labels of Δ_b: x_i, x_i x_j, x_i u, x_i v, then uv."""
    words = [f"x{i + 1}" for i in range(k)]
    words += [
        f"x{i + 1}x{j + 1}" for i in range(k) for j in range(i, k)
    ]
    for i in range(k):
        words += [f"x{i + 1}u", f"x{i + 1}v"]
    return words + ["uv"]


def _check_profiles(spec: ExtendedAnsatzSpec):
    if spec.v_profiles is None:
        return
    if len(spec.v_profiles) != len(spec.mu):
        raise e.DimensionMismatch(
            f"{len(spec.v_profiles)} v-profiles for {len(spec.mu)} blocks"
        )
    for r, (profile, mu) in enumerate(zip(spec.v_profiles, spec.mu)):
        expected = (
            tr.TrigPoly.from_terms([("c", mu, ra.Rational(1))]),
            tr.TrigPoly.from_terms([("s", mu, ra.Rational(1))]),
        )
        if tuple(profile) != expected:
            raise e.StructureError(
                f"Block {r} is not a rotation by {mu}v; its v-dependence "
                "does not commute out."
            )


def extended_reduced_matrix(
    spec: ExtendedAnsatzSpec,
) -> f.DerivativeFamily:
    """Return the u-only matrix whose determinant is Δ_b / exp(2ΣQ_r).

    At v = 0 with ρ_r divided out, block r of the columns reads
    X_i b = w_i (0, 1), X_i X_j b = -w_i w_j (1, 0),
    X_i b_u = w_i q_r (0, 1), X_i b_v = -w_i μ_r (1, 0) and
    b_uv = μ_r q_r (0, 1).

    """
    messages = spec.problems()
    if messages:
        raise e.DimensionMismatch("; ".join(messages))
    _check_profiles(spec)
    k, r = spec.weight_set.k, spec.weight_set.r
    labels = reduced_words(k)
    if len(labels) != 2 * r:
        raise e.DimensionMismatch(
            f"{len(labels)} columns for {2 * r} rows of b"
        )
    zero = tr.TrigPoly()
    rows = []
    for weight, mu, q in zip(spec.weight_set.weights, spec.mu, spec.logderivs):
        first = [zero] * k
        first += [
            tr.TrigPoly.of(-weight[i] * weight[j])
            for i in range(k)
            for j in range(i, k)
        ]
        second = [tr.TrigPoly.of(weight[i]) for i in range(k)]
        second += [zero] * (k * (k + 1) // 2)
        for i in range(k):
            first += [zero, tr.TrigPoly.of(-weight[i] * mu)]
            second += [q.scale(weight[i]), zero]
        first.append(zero)
        second.append(q.scale(mu))
        rows += [first, second]
    return f.DerivativeFamily(
        tuple(tuple(column) for column in zip(*rows)), tuple(labels)
    )


def companion_determinant(
    components: t.Sequence[CompanionComponent],
) -> ra.Rational:
    """Return det(c_u, c_v, c_uu, c_vv), which must be constant.

    Every product in the Leibniz expansion splits into a factor in u
    and one in v.  Products of basis functions in u and in v are
    linearly independent, so the sum is constant exactly when only the
    constant-constant coefficient survives.

    """
    if len(components) != 4:
        raise e.DimensionMismatch(
            f"Companion with {len(components)} components, not 4."
        )
    columns = [(U, 1), (V, 1), (U, 2), (V, 2)]
    total: dict[tuple, ra.Rational] = {}
    for permutation in itertools.permutations(range(4)):
        factors = {U: tr.TrigPoly.of(1), V: tr.TrigPoly.of(1)}
        for component, column in zip(components, permutation):
            variable, order = columns[column]
            if component.variable != variable:
                break
            factors[variable] = factors[variable] * (
                component.poly.nth_derivative(order)
            )
        else:
            sign = _permutation_sign(permutation)
            for kind_u, a, x in factors[U].terms():
                for kind_v, b, y in factors[V].terms():
                    key = (kind_u, a, kind_v, b)
                    total[key] = total.get(key, 0) + sign * x * y
    total = {key: value for key, value in total.items() if value != 0}
    if set(total) - {("c", 0, "c", 0)}:
        raise e.StructureError("The companion determinant is not constant.")
    return ra.Rational(total.get(("c", 0, "c", 0), 0))


def _permutation_sign(permutation: t.Sequence[int]) -> int:
    return Permutation(list(permutation)).signature()
