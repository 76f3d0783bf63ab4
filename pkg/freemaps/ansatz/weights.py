"""Integer weights of the block-rotation ansatz and its generators."""
import dataclasses
import math
import numbers
import typing as t
import sympy
from .. import errors as e
from ..exact import poly as po
from ..exact import rational as ra


@dataclasses.dataclass(frozen=True)
class WeightSet:
    """Weights w_j in Z^k of the planar rotation blocks.

    The target has 2r coordinates, plus one rotation-invariant
    coordinate when `fixed` is true.  That coordinate sits at
    `fixed_index`, the last position by default.

    """

    k: int
    weights: t.Tuple[t.Tuple[int, ...], ...]
    fixed: bool = False
    fixed_index: t.Optional[int] = None

    def __post_init__(self):
        object.__setattr__(
            self,
            "weights",
            tuple(tuple(_integral(x) for x in w) for w in self.weights),
        )
        if self.fixed and self.fixed_index is None:
            object.__setattr__(self, "fixed_index", 2 * len(self.weights))

    @property
    def r(self) -> int:
        return len(self.weights)

    @property
    def m(self) -> int:
        """Dimension of the torus, one more than the rotation variables."""
        return self.k + 1

    @property
    def target_dim(self) -> int:
        return 2 * self.r + (1 if self.fixed else 0)

    def problems(self) -> list[str]:
        """Describe every violated invariant."""
        messages = []
        for j, w in enumerate(self.weights):
            if len(w) != self.k:
                messages.append(
                    f"weight {j} has length {len(w)} ≠ k {self.k}"
                )
        if len(set(self.weights)) != len(self.weights):
            messages.append("weights pairwise distinct violated")
        if self.fixed and not 0 <= self.fixed_index < self.target_dim:
            messages.append(
                f"fixed_index {self.fixed_index} outside "
                f"0..{self.target_dim - 1}"
            )
        if not self.fixed and self.fixed_index is not None:
            messages.append("fixed_index given without a fixed coordinate")
        return messages

    def check(self):
        messages = self.problems()
        if messages:
            raise e.DimensionMismatch("; ".join(messages))

    def blocks(self) -> list[t.Tuple[int, int]]:
        """Return the two coordinate indices of every rotation block."""
        indices = [
            i for i in range(self.target_dim) if i != self.fixed_index
        ]
        return [(indices[2 * j], indices[2 * j + 1]) for j in range(self.r)]


def _integral(x) -> int:
    if (
        isinstance(x, bool)
        or not isinstance(x, numbers.Real)
        or not math.isfinite(x)
        or x != int(x)
    ):
        raise e.StructureError(f"Weight entry {x!r} is not an integer.")
    return int(x)


class Generator:
    """The skew generator X_i = diag(w_1i J, ..., w_ri J, 0).

    J is the rotation generator (x, y) -> (-y, x), and the fixed
    coordinate is mapped to 0.  Entries may be any ring elements that
    support integer scaling and negation.

    """

    def __init__(self, weight_set: WeightSet, i: int):
        if not 0 <= i < weight_set.k:
            raise e.DimensionMismatch(
                f"Generator {i} requested for k = {weight_set.k}."
            )
        self._weight_set = weight_set
        self._scalars = [w[i] for w in weight_set.weights]
        self._blocks = weight_set.blocks()
        self.index = i

    def __call__(self, vector: t.Sequence) -> list:
        if len(vector) != self._weight_set.target_dim:
            raise e.DimensionMismatch(
                f"Vector of length {len(vector)} for target dimension "
                f"{self._weight_set.target_dim}."
            )
        result = [0 * x for x in vector]
        for w, (a, b) in zip(self._scalars, self._blocks):
            result[a] = -w * vector[b]
            result[b] = w * vector[a]
        return result

    def matrix(self) -> list[list[int]]:
        """Return the dense integer matrix."""
        n = self._weight_set.target_dim
        dense = [[0] * n for _ in range(n)]
        for w, (a, b) in zip(self._scalars, self._blocks):
            dense[a][b] = -w
            dense[b][a] = w
        return dense


def generator_matrices(weight_set: WeightSet) -> list[Generator]:
    """Return X_1, ..., X_k."""
    weight_set.check()
    return [Generator(weight_set, i) for i in range(weight_set.k)]


def critical_dimension(m: int, order: int = 2) -> int:
    """Return q_{m,order} = C(m+order, order) - 1."""
    return math.comb(m + order, order) - 1


@dataclasses.dataclass(frozen=True)
class ObstructionReport:
    """The necessary condition for the ansatz in dimension m.

    The quadratic vectors of the weights must span Sym²(R^k), which
    needs r ≥ k(k+1)/2 = m(m-1)/2 weights.

    """

    m: int
    r: int
    required: int
    rank: t.Optional[int]
    passes: bool
    details: str


def quadratic_vector(w: t.Sequence[int]) -> list[int]:
    """Return (w_1², w_1 w_2, ..., w_k²)."""
    k = len(w)
    return [w[i] * w[j] for i in range(k) for j in range(i, k)]


def rank(rows: t.Sequence[t.Sequence[ra.RationalLike]]) -> int:
    """Rank over the rationals."""
    if not rows or not rows[0]:
        return 0
    return sympy.Matrix(
        [[po.to_sympy_rational(x) for x in row] for row in rows]
    ).rank()


def obstruction_check(
    m: int, weight_set: t.Optional[WeightSet] = None
) -> ObstructionReport:
    """Test r ≥ m(m-1)/2 and, given weights, the rank condition.

    Without weights r is taken as floor(q_m/2), the most blocks the
    critical dimension allows.

    """
    if m < 1:
        raise ValueError(f"Dimension {m} must be positive.")
    k = m - 1
    required = k * (k + 1) // 2
    if weight_set is None:
        r = critical_dimension(m) // 2
        count_ok = r >= required
        relation = "≥" if count_ok else "<"
        details = f"floor(q_m/2)={r} {relation} {required}"
        return ObstructionReport(
            m, r, required, None, count_ok, _verdict(count_ok, details)
        )
    if weight_set.k != k:
        raise e.DimensionMismatch(
            f"Weights in Z^{weight_set.k} for m = {m} need Z^{k}."
        )
    weight_set.check()
    r = weight_set.r
    count_ok = r >= required
    achieved = rank([quadratic_vector(w) for w in weight_set.weights])
    rank_ok = achieved == required
    details = (
        f"r={r} {'≥' if count_ok else '<'} {required}, "
        f"rank {achieved} {'=' if rank_ok else '≠'} {required}"
    )
    passes = count_ok and rank_ok
    return ObstructionReport(
        m, r, required, achieved, passes, _verdict(passes, details)
    )


def _verdict(passes: bool, details: str) -> str:
    return f"{'passes' if passes else 'fails'}: {details}"
