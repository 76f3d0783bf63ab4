"""Machine-checkable evidence that a determinant never vanishes."""
import dataclasses
import enum
import typing as t
from .. import sturm as st
from .. import weierstrass as we
from ..exact import rational as ra
from ..exact import trig as tr


class FreenessVerdict(str, enum.Enum):
    FREE = "FREE"
    NOT_FREE = "NOT_FREE"


@dataclasses.dataclass(frozen=True)
class FreenessCertificate:
    """The reduced polynomial, its Sturm data and the verdict.

    The numerator's sign is constant on the real line, which covers
    every z except pi, and `value_at_pi` covers z = pi.  `positivity`
    is None when the determinant vanishes identically.
    `normalization_constant` relates the minimal numerator to a
    published display form: numerator = constant * display.

    """

    spec_label: str
    determinant: tr.TrigPoly
    weierstrass: we.WeierstrassForm
    positivity: t.Optional[st.PositivityCertificate]
    value_at_zero: ra.Rational
    value_at_pi: ra.Rational
    column_ordering: t.Tuple[str, ...]
    verdict: FreenessVerdict
    normalization_constant: ra.Rational = ra.Rational(1)
    companion_determinant: t.Optional[ra.Rational] = None

    @property
    def real_root_count(self) -> t.Optional[int]:
        if self.positivity is None:
            return None
        return self.positivity.real_root_count

    @property
    def is_free(self) -> bool:
        return self.verdict is FreenessVerdict.FREE


def decide(
    positivity: t.Optional[st.PositivityCertificate],
    value_at_pi: ra.Rational,
    companion: t.Optional[ra.Rational] = None,
) -> FreenessVerdict:
    """FREE iff the numerator keeps one sign and D(pi) shares it."""
    if positivity is None or not positivity.verdict.is_definite():
        return FreenessVerdict.NOT_FREE
    if ra.sign(value_at_pi) != positivity.verdict.sign():
        return FreenessVerdict.NOT_FREE
    if companion is not None and companion == 0:
        return FreenessVerdict.NOT_FREE
    return FreenessVerdict.FREE
