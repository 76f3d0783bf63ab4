"""Family, determinant, Weierstrass form, Sturm chain, certificate."""
import dataclasses
import logging
import time
import typing as t
from . import certificate as c
from .. import errors as e
from .. import sturm as st
from .. import weierstrass as we
from ..ansatz import determinant as d
from ..ansatz import extended as ex
from ..ansatz import family as f
from ..exact import rational as ra
from ..exact import trig as tr

_logger = logging.getLogger(__name__)


def certify_form(
    label: str,
    form: we.WeierstrassForm,
    ordering: t.Sequence[str],
    companion: t.Optional[ra.Rational] = None,
) -> c.FreenessCertificate:
    """Certify a determinant given by its minimal Weierstrass form."""
    determinant = we.from_weierstrass(form)
    if form.numerator.is_zero():
        positivity = None
    else:
        positivity = st.certify_sign(form.numerator)
    value_at_pi = tr.eval_at_pi(determinant)
    verdict = c.decide(positivity, value_at_pi, companion)
    return c.FreenessCertificate(
        spec_label=label,
        determinant=determinant,
        weierstrass=form,
        positivity=positivity,
        value_at_zero=tr.eval_weierstrass(determinant, 0),
        value_at_pi=value_at_pi,
        column_ordering=tuple(ordering),
        verdict=verdict,
        companion_determinant=companion,
    )


def verify(spec: f.AnsatzSpec) -> c.FreenessCertificate:
    """Decide whether R(x) v(z) is free (k-free for order k)."""
    messages = spec.problems()
    if messages:
        raise e.DimensionMismatch("; ".join(messages))
    start = time.perf_counter()
    family = f.derivative_family(spec)
    form = d.family_form(family)
    certificate = certify_form(spec.label, form, family.ordering)
    _logger.info(
        f"{spec.label or 'spec'}: {certificate.verdict.value}, "
        f"numerator degree {form.numerator.degree}, N={form.denom_power} "
        f"in {time.perf_counter() - start:.2f}s"
    )
    return certificate


def verify_kfree(
    spec: f.AnsatzSpec, order: t.Optional[int] = None
) -> c.FreenessCertificate:
    """Verify with the order-k family; `order` overrides `spec.order`."""
    if order is not None:
        spec = dataclasses.replace(spec, order=order)
    return verify(spec)


def verify_extended(spec: ex.ExtendedAnsatzSpec) -> c.FreenessCertificate:
    """Certify the reduced u-determinant and the companion block.

    The exponential factors exp(2ΣQ_r) are positive and never change
    the verdict.

    """
    start = time.perf_counter()
    companion = ex.companion_determinant(spec.companion)
    family = ex.extended_reduced_matrix(spec)
    form = d.family_form(family)
    certificate = certify_form(
        spec.label, form, family.ordering, companion=companion
    )
    _logger.info(
        f"{spec.label or 'extended spec'}: {certificate.verdict.value}, "
        f"companion {companion} "
        f"in {time.perf_counter() - start:.2f}s"
    )
    return certificate
