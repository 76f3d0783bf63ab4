"""Ansatz specifications and their ordered derivative families.

For F(x, z) = R(x) v(z) every partial derivative is R(x) times a word
X^α v^(q), where ∂R/∂x_i = R X_i.  Dropping the common factor R(x),
which is special orthogonal, leaves columns that depend on z only.

"""
import dataclasses
import itertools
import typing as t
from . import weights as w
from .. import errors as e
from ..exact import trig as tr

GRADED = "graded"
GRLEX = "grlex"
ORDERINGS = (GRADED, GRLEX)


@dataclasses.dataclass(frozen=True)
class Derivative:
    """∂_{x_i1} ... ∂_{x_in} ∂_z^q, with x indices sorted."""

    variables: t.Tuple[int, ...]
    z: int

    @property
    def order(self) -> int:
        return len(self.variables) + self.z

    @property
    def label(self) -> str:
        """E.g. "x1x2", "x1z" or "zz"."""
        return "".join(f"x{i + 1}" for i in self.variables) + "z" * self.z


def derivative_words(
    k: int, order: int, ordering: str = GRADED
) -> list[Derivative]:
    """List the partial derivatives of orders 1..order.

    Both orderings group by total order.  "graded" then puts pure x
    derivatives first and raises the z order step by step; "grlex" is
    lexicographic in (x_1, ..., x_k, z).

    """
    if ordering not in ORDERINGS:
        raise ValueError(f"Unknown ordering {ordering!r}.")
    words = []
    for n in range(1, order + 1):
        if ordering == GRADED:
            for q in range(n + 1):
                for combo in itertools.combinations_with_replacement(
                    range(k), n - q
                ):
                    words.append(Derivative(combo, q))
        else:
            for combo in itertools.combinations_with_replacement(
                range(k + 1), n
            ):
                words.append(
                    Derivative(
                        tuple(i for i in combo if i < k), combo.count(k)
                    )
                )
    return words


@dataclasses.dataclass(frozen=True)
class AnsatzSpec:
    """A weight set and a loop v(z) of trigonometric polynomials."""

    weight_set: w.WeightSet
    loop: t.Tuple[tr.TrigPoly, ...]
    order: int = 2
    label: str = ""
    ordering: str = GRADED

    def __post_init__(self):
        object.__setattr__(self, "loop", tuple(self.loop))

    @property
    def m(self) -> int:
        return self.weight_set.m

    @property
    def target_dim(self) -> int:
        return self.weight_set.target_dim

    def problems(self) -> list[str]:
        messages = self.weight_set.problems()
        if len(self.loop) != self.target_dim:
            messages.append(
                f"loop length {len(self.loop)} ≠ "
                f"target_dim {self.target_dim}"
            )
        if self.order < 1:
            messages.append(f"order {self.order} must be at least 1")
        elif self.target_dim != w.critical_dimension(self.m, self.order):
            messages.append(
                f"target_dim {self.target_dim} ≠ q_(m,k) "
                f"{w.critical_dimension(self.m, self.order)} "
                f"for m={self.m}, k={self.order}"
            )
        if self.ordering not in ORDERINGS:
            messages.append(f"unknown ordering {self.ordering!r}")
        return messages

    def with_loop(self, loop: t.Sequence[tr.TrigPoly]) -> "AnsatzSpec":
        return dataclasses.replace(self, loop=tuple(loop))


@dataclasses.dataclass(frozen=True)
class DerivativeFamily:
    """Columns of the stripped osculating matrix.

    `columns[j][i]` is row i of column j; `ordering[j]` names the
    derivative column j stands for.

    """

    columns: t.Tuple[t.Tuple[t.Any, ...], ...]
    ordering: t.Tuple[str, ...]

    @property
    def dimension(self) -> int:
        return len(self.columns)

    def rows(self) -> list[list]:
        return [list(row) for row in zip(*self.columns)]

    def permuted(self, permutation: t.Sequence[int]) -> "DerivativeFamily":
        """Reorder the columns; entry j of the result is column p[j]."""
        return DerivativeFamily(
            tuple(self.columns[i] for i in permutation),
            tuple(self.ordering[i] for i in permutation),
        )


def osculating_columns(
    weight_set: w.WeightSet,
    jets: t.Sequence[t.Sequence],
    words: t.Sequence[Derivative],
) -> list[list]:
    """Apply the generators to loop jets, one column per word.

    `jets[q]` is the q-th derivative of the loop and may hold
    trigonometric polynomials or plain numbers.

    """
    generators = w.generator_matrices(weight_set)
    cache: dict[Derivative, list] = {}

    def column(word: Derivative) -> list:
        if word not in cache:
            if not word.variables:
                cache[word] = list(jets[word.z])
            else:
                rest = Derivative(word.variables[1:], word.z)
                cache[word] = generators[word.variables[0]](column(rest))
        return cache[word]

    return [column(word) for word in words]


def loop_jets(loop: t.Sequence[tr.TrigPoly], order: int) -> list[list]:
    """Return v, v', ..., v^(order)."""
    jets = [list(loop)]
    for _ in range(order):
        jets.append([x.derivative() for x in jets[-1]])
    return jets


def derivative_family(spec: AnsatzSpec) -> DerivativeFamily:
    """Build the ordered, R-stripped derivative family of a square spec."""
    spec.weight_set.check()
    if len(spec.loop) != spec.target_dim:
        raise e.DimensionMismatch(
            f"loop length {len(spec.loop)} ≠ target_dim {spec.target_dim}"
        )
    words = derivative_words(spec.weight_set.k, spec.order, spec.ordering)
    if len(words) != spec.target_dim:
        raise e.DimensionMismatch(
            f"{len(words)} derivatives for target_dim {spec.target_dim}; "
            "only critical-dimension specs are square"
        )
    columns = osculating_columns(
        spec.weight_set, loop_jets(spec.loop, spec.order), words
    )
    return DerivativeFamily(
        tuple(tuple(c) for c in columns),
        tuple(word.label for word in words),
    )
