"""Reproduce the published examples from the JSON fixtures.

Every case is verified from scratch and each published number becomes
one `Comparison`.  Numerators are compared up to the recorded
normalization constant: computed = constant * published.

"""
import concurrent.futures
import dataclasses
import importlib.resources
import json
import logging
import os
import time
import typing as t
from . import certificate as c
from . import pipeline as pi
from .. import collar as co
from .. import serialize as se
from .. import sturm as st
from ..ansatz import determinant as d
from ..ansatz import extended as ex
from ..ansatz import family as f
from ..exact import rational as ra
from ..exact import trig as tr

_logger = logging.getLogger(__name__)

PUBLISHED_CASES = (
    "circle",
    "t2",
    "t3",
    "t4",
    "t5",
    "t4-extended",
    "kfree3",
    "kfree6",
    "collar",
)

CASES = PUBLISHED_CASES + ("kfree4", "kfree5")

GOLDEN_CASES = ("kfree6",)

SPOT_POINTS = ("0", "1/2", "1", "-2", "3")


@dataclasses.dataclass(frozen=True)
class Comparison:
    item: str
    expected: str
    actual: str
    ok: bool


@dataclasses.dataclass(frozen=True)
class CaseReport:
    case: str
    headline: str
    comparisons: t.Tuple[Comparison, ...]
    document: dict
    elapsed: float

    @property
    def ok(self) -> bool:
        return all(x.ok for x in self.comparisons)

    @property
    def summary(self) -> str:
        return f"{self.case}: {self.headline} [{'ok' if self.ok else 'FAIL'}]"


@dataclasses.dataclass(frozen=True)
class ReproOptions:
    """`golden_dir` overrides the golden data shipped in a fixture.

    `freeze_golden_dir` is written.

    """

    cases: t.Tuple[str, ...] = PUBLISHED_CASES
    jobs: int = 1
    golden_dir: t.Optional[str] = None
    freeze_golden_dir: t.Optional[str] = None


def load_fixture(name: str) -> dict:
    if name not in CASES:
        raise ValueError(f"Unknown case {name!r}; choose from {CASES}.")
    resource = importlib.resources.files("freemaps") / "fixtures"
    return json.loads((resource / f"{name}.json").read_text("utf-8"))


def load_spec(name: str):
    """The ansatz, extended ansatz or collar profile of a case."""
    fixture = load_fixture(name)
    if fixture["kind"] == "collar":
        return se.profile_from_json(fixture["profile"])
    return se.validate_spec(fixture["spec"])


class _Checker:
    def __init__(self):
        self.comparisons: list[Comparison] = []

    def equal(self, item: str, expected, actual):
        self.comparisons.append(
            Comparison(item, str(expected), str(actual), expected == actual)
        )


def _format(value: ra.Rational) -> str:
    return ra.format_rational(value)


def spot_check(
    family: f.DerivativeFamily,
    form,
    points: t.Sequence[ra.RationalLike] = SPOT_POINTS,
) -> list[t.Tuple[ra.Rational, ra.Rational, ra.Rational]]:
    """Evaluate the full matrix exactly at t = tan(z/2) = each point.

    Returns (t0, direct determinant, form value) triples.

    """
    results = []
    for point in points:
        t0 = ra.to_rational(point)
        matrix = [
            [tr.eval_weierstrass(entry, t0) for entry in row]
            for row in family.rows()
        ]
        results.append((t0, d.rational_det(matrix), form(t0)))
    return results


def _check_numerator(
    check: _Checker, published: dict, cert: c.FreenessCertificate
) -> c.FreenessCertificate:
    numerator = cert.weierstrass.numerator
    display = se.poly_from_json(published["numerator"])
    if "normalization_constant" in published:
        constant = se.rational_from_json(published["normalization_constant"])
    elif display.is_zero() or numerator.is_zero():
        constant = ra.Rational(1)
    else:
        constant = numerator.leading_coefficient / display.leading_coefficient
        if constant != 1:
            _logger.warning(
                f"{cert.spec_label}: normalization constant {constant}"
            )
    if published.get("proportional_only"):
        check.equal(
            "numerator proportional",
            True,
            numerator == display.scale(constant),
        )
        check.equal("constant sign", 1, abs(ra.sign(constant)))
    else:
        check.equal(
            "numerator", display.scale(constant).display(), numerator.display()
        )
    check.equal("coefficients", display.degree + 1, numerator.degree + 1)
    return dataclasses.replace(cert, normalization_constant=constant)


def _check_certificate(
    check: _Checker, published: dict, cert: c.FreenessCertificate
) -> c.FreenessCertificate:
    check.equal("verdict", c.FreenessVerdict.FREE.value, cert.verdict.value)
    if "determinant" in published:
        check.equal(
            "determinant",
            se.trig_from_json(published["determinant"]),
            cert.determinant,
        )
    if "numerator" in published:
        cert = _check_numerator(check, published, cert)
    if "denom_power" in published:
        check.equal(
            "denom_power",
            published["denom_power"],
            cert.weierstrass.denom_power,
        )
    if "degree" in published:
        check.equal(
            "degree", published["degree"], cert.weierstrass.numerator.degree
        )
    for key, actual in (
        ("value_at_zero", cert.value_at_zero),
        ("value_at_pi", cert.value_at_pi),
        ("companion_determinant", cert.companion_determinant),
    ):
        if key in published:
            expected = se.rational_from_json(published[key])
            check.equal(key, _format(expected), _optional(actual))
    if cert.positivity is not None:
        for key in ("v_minus_inf", "v_plus_inf", "real_root_count"):
            if key in published:
                check.equal(
                    key, published[key], getattr(cert.positivity, key)
                )
    if "sign_table" in published:
        rows = st.sign_table(st.sturm_sequence(cert.weierstrass.numerator))
        actual = [
            [
                row.degree,
                ra.sign_symbol(row.minus_infinity),
                ra.sign_symbol(row.plus_infinity),
            ]
            for row in rows
        ]
        check.equal("sign_table rows", len(published["sign_table"]), len(rows))
        check.equal(
            "sign_table", _table(published["sign_table"]), _table(actual)
        )
    return cert


def _optional(value) -> t.Optional[str]:
    return None if value is None else _format(value)


def _table(rows) -> str:
    return " ".join(f"{deg}:{minus}{plus}" for deg, minus, plus in rows)


def _golden(
    name: str,
    fixture: dict,
    check: _Checker,
    family: f.DerivativeFamily,
    cert: c.FreenessCertificate,
    options: ReproOptions,
):
    if options.freeze_golden_dir is not None:
        spots = spot_check(family, cert.weierstrass)
        for t0, direct, value in spots:
            check.equal(f"spot t={t0}", _format(direct), _format(value))
        if all(direct == value for _, direct, value in spots):
            os.makedirs(options.freeze_golden_dir, exist_ok=True)
            path = os.path.join(options.freeze_golden_dir, f"{name}.json")
            with open(path, "w", encoding="utf-8") as f_:
                f_.write(
                    se.dumps(
                        {
                            "schema_version": se.SCHEMA_VERSION,
                            "case": name,
                            "weierstrass": se.form_to_json(cert.weierstrass),
                            "spot_checks": [
                                [_format(t0), _format(direct)]
                                for t0, direct, _ in spots
                            ],
                        }
                    )
                    + "\n"
                )
            _logger.info(f"{name}: froze golden file {path}")
    if options.golden_dir is None:
        golden = fixture.get("golden")
        if golden is None:
            return
    else:
        path = os.path.join(options.golden_dir, f"{name}.json")
        if not os.path.exists(path):
            _logger.warning(f"{name}: no golden file at {path}")
            return
        with open(path, encoding="utf-8") as f_:
            golden = json.load(f_)
    check.equal(
        "golden",
        se.form_from_json(golden["weierstrass"]),
        cert.weierstrass,
    )


def _run_ansatz(name: str, fixture: dict, options: ReproOptions):
    spec = se.validate_spec(fixture["spec"])
    check = _Checker()
    if isinstance(spec, ex.ExtendedAnsatzSpec):
        cert = pi.verify_extended(spec)
        family = None
    else:
        cert = pi.verify(spec)
        family = f.derivative_family(spec)
    cert = _check_certificate(check, fixture["published"], cert)
    if name in GOLDEN_CASES:
        _golden(name, fixture, check, family, cert, options)
    return (
        f"D(pi) = {_format(cert.value_at_pi)}",
        check,
        se.certificate_to_json(cert),
    )


def _run_collar(fixture: dict):
    profile = se.profile_from_json(fixture["profile"])
    published = fixture["published"]
    cert = co.verify_collar(profile)
    check = _Checker()
    check.equal(
        "verdict", co.CollarVerdict.FREE_ON_COLLAR.value, cert.verdict.value
    )
    check.equal(
        "K",
        se.poly_from_json(published["K"]).display("u"),
        cert.K.display("u"),
    )
    check.equal(
        "k_scale",
        _format(se.rational_from_json(published["k_scale"])),
        _format(cert.k_scale),
    )
    for row in cert.jets.rows:
        expected = published["jets"][str(row.point)][row.function][row.order]
        check.equal(
            f"{row.function}^({row.order})({row.point})",
            _format(se.rational_from_json(expected)),
            _format(row.actual),
        )
    identity = co.collar_determinant(profile)
    for u0 in ("0", "1/7", "2/7", "3/7", "4/7", "5/7", "1"):
        u0 = ra.to_rational(u0)
        check.equal(
            f"det DF({u0})",
            _format(identity(u0)),
            _format(
                co.profile_determinant(profile.a, profile.b, profile.c, u0)
            ),
        )
    models = co.standard_models()
    check.equal(
        "det DC",
        _format(se.rational_from_json(published["cylinder_det"])),
        _format(models.cylinder_det),
    )
    return f"verdict {cert.verdict.value}", check, se.collar_to_json(cert)


def run_case(
    name: str, options: t.Optional[ReproOptions] = None
) -> CaseReport:
    """Verify one case and compare it with the published numbers."""
    options = options or ReproOptions()
    start = time.perf_counter()
    _logger.info(f"{name}: start")
    fixture = load_fixture(name)
    if fixture["kind"] == "collar":
        headline, check, document = _run_collar(fixture)
    else:
        headline, check, document = _run_ansatz(name, fixture, options)
    elapsed = time.perf_counter() - start
    document = dict(document)
    document["comparisons"] = [
        dataclasses.asdict(x) for x in check.comparisons
    ]
    report = CaseReport(
        name, headline, tuple(check.comparisons), document, elapsed
    )
    _logger.info(f"{report.summary} in {elapsed:.2f}s")
    return report


def reproduce(options: t.Optional[ReproOptions] = None) -> list[CaseReport]:
    """Run the cases in order, in worker processes when jobs > 1."""
    options = options or ReproOptions()
    for name in options.cases:
        if name not in CASES:
            raise ValueError(f"Unknown case {name!r}; choose from {CASES}.")
    if options.jobs <= 1 or len(options.cases) <= 1:
        return [run_case(name, options) for name in options.cases]
    with concurrent.futures.ProcessPoolExecutor(options.jobs) as executor:
        return list(
            executor.map(
                run_case, options.cases, [options] * len(options.cases)
            )
        )


def format_report(reports: t.Sequence[CaseReport]) -> str:
    """Aligned summary lines; failed comparisons are listed below."""
    width = max((len(r.case) for r in reports), default=0)
    lines = []
    for report in reports:
        passed = sum(x.ok for x in report.comparisons)
        lines.append(
            f"{report.case + ':':<{width + 1}} {report.headline} "
            f"[{'ok' if report.ok else 'FAIL'}] "
            f"{passed}/{len(report.comparisons)} comparisons"
        )
        for x in report.comparisons:
            if not x.ok:
                lines.append(
                    f"  {x.item}: expected {x.expected}, got {x.actual}"
                )
    return "\n".join(lines)
