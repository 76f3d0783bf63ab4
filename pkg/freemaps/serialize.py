"""JSON documents for specs, certificates and search output.

Rationals are "p/q" strings and objects are dumped with sorted keys, so
the same value always serializes to the same bytes.

"""
import json
import typing as t
from . import collar as co
from . import errors as e
from . import sturm as st
from . import weierstrass as we
from .ansatz import extended as ex
from .ansatz import family as f
from .ansatz import weights as w
from .exact import poly as po
from .exact import rational as ra
from .exact import trig as tr
from .search import climb as cl
from .verify import certificate as c

SCHEMA_VERSION = 1


def dumps(document) -> str:
    """Canonical text of a JSON document."""
    return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False)


def dump_line(document) -> str:
    """Canonical one-line text, for JSON lines output."""
    return json.dumps(
        document, sort_keys=True, separators=(",", ":"), ensure_ascii=False
    )


def load_document(source: str):
    """Parse inline JSON, or read the file `source` names."""
    text = source.strip()
    if not text.startswith(("{", "[")):
        with open(source, encoding="utf-8") as f_:
            text = f_.read()
    return json.loads(text)


def rational_to_json(value: ra.Rational) -> str:
    return ra.format_rational(value)


def rational_from_json(value) -> ra.Rational:
    if isinstance(value, (int, str)) and not isinstance(value, bool):
        return ra.to_rational(value)
    raise ValueError(f"{value!r} is not a rational.")


def _optional_rational(value) -> t.Optional[str]:
    return None if value is None else rational_to_json(value)


def trig_to_json(poly: tr.TrigPoly) -> dict:
    return {
        "const": rational_to_json(poly.constant),
        "cos": {str(k): rational_to_json(v) for k, v in poly.cos_coeffs},
        "sin": {str(k): rational_to_json(v) for k, v in poly.sin_coeffs},
    }


def trig_from_json(doc) -> tr.TrigPoly:
    if not isinstance(doc, dict):
        raise ValueError(f"A trigonometric polynomial is an object: {doc!r}")
    unknown = set(doc) - {"const", "cos", "sin"}
    if unknown:
        raise ValueError(f"unknown keys {sorted(unknown)}")
    frequencies = {}
    for kind in ("cos", "sin"):
        terms = doc.get(kind, {})
        if not isinstance(terms, dict):
            raise ValueError(f"{kind!r} must map frequencies to rationals")
        parsed = {}
        for k, v in terms.items():
            if not k.isdigit() or int(k) < 1:
                raise ValueError(f"frequency {k!r} must be a positive integer")
            parsed[int(k)] = rational_from_json(v)
        frequencies[kind] = parsed
    return tr.TrigPoly.of(
        rational_from_json(doc.get("const", 0)),
        frequencies["cos"],
        frequencies["sin"],
    )


def poly_to_json(poly: po.RatPoly) -> list[str]:
    """Ascending coefficients: entry i multiplies t^i."""
    return [rational_to_json(x) for x in poly.coefficients]


def poly_from_json(doc) -> po.RatPoly:
    if not isinstance(doc, list):
        raise ValueError(f"A polynomial is an array: {doc!r}")
    return po.RatPoly(tuple(rational_from_json(x) for x in doc))


def form_to_json(form: we.WeierstrassForm) -> dict:
    return {"num": poly_to_json(form.numerator), "N": form.denom_power}


def form_from_json(doc) -> we.WeierstrassForm:
    return we.WeierstrassForm(poly_from_json(doc["num"]), int(doc["N"]))


def positivity_to_json(cert: st.PositivityCertificate) -> dict:
    domain = None
    if cert.domain is not None:
        domain = [
            rational_to_json(cert.domain.a),
            rational_to_json(cert.domain.b),
        ]
    return {
        "polynomial": poly_to_json(cert.polynomial),
        "v_minus_inf": cert.v_minus_inf,
        "v_plus_inf": cert.v_plus_inf,
        "real_root_count": cert.real_root_count,
        "sample_point": rational_to_json(cert.sample_point),
        "sample_value": rational_to_json(cert.sample_value),
        "leading_coefficient": rational_to_json(cert.leading_coefficient),
        "verdict": cert.verdict.value,
        "domain": domain,
    }


def positivity_from_json(doc: dict) -> st.PositivityCertificate:
    domain = st.ALL_REALS
    if doc.get("domain") is not None:
        a, b = doc["domain"]
        domain = st.Interval(rational_from_json(a), rational_from_json(b))
    return st.PositivityCertificate(
        polynomial=poly_from_json(doc["polynomial"]),
        v_minus_inf=int(doc["v_minus_inf"]),
        v_plus_inf=int(doc["v_plus_inf"]),
        real_root_count=int(doc["real_root_count"]),
        sample_point=rational_from_json(doc["sample_point"]),
        sample_value=rational_from_json(doc["sample_value"]),
        leading_coefficient=rational_from_json(doc["leading_coefficient"]),
        verdict=st.Verdict(doc["verdict"]),
        domain=domain,
    )


def certificate_to_json(cert: c.FreenessCertificate) -> dict:
    positivity = None
    if cert.positivity is not None:
        positivity = positivity_to_json(cert.positivity)
    count = cert.real_root_count
    return {
        "schema_version": SCHEMA_VERSION,
        "spec_label": cert.spec_label,
        "determinant": trig_to_json(cert.determinant),
        "weierstrass": form_to_json(cert.weierstrass),
        "positivity": positivity,
        "real_root_count": "identically zero" if count is None else count,
        "value_at_zero": rational_to_json(cert.value_at_zero),
        "value_at_pi": rational_to_json(cert.value_at_pi),
        "column_ordering": list(cert.column_ordering),
        "verdict": cert.verdict.value,
        "normalization_constant": rational_to_json(
            cert.normalization_constant
        ),
        "companion_determinant": _optional_rational(
            cert.companion_determinant
        ),
    }


def certificate_from_json(doc: dict) -> c.FreenessCertificate:
    positivity = None
    if doc.get("positivity") is not None:
        positivity = positivity_from_json(doc["positivity"])
    companion = doc.get("companion_determinant")
    return c.FreenessCertificate(
        spec_label=doc["spec_label"],
        determinant=trig_from_json(doc["determinant"]),
        weierstrass=form_from_json(doc["weierstrass"]),
        positivity=positivity,
        value_at_zero=rational_from_json(doc["value_at_zero"]),
        value_at_pi=rational_from_json(doc["value_at_pi"]),
        column_ordering=tuple(doc["column_ordering"]),
        verdict=c.FreenessVerdict(doc["verdict"]),
        normalization_constant=rational_from_json(
            doc.get("normalization_constant", "1/1")
        ),
        companion_determinant=(
            None if companion is None else rational_from_json(companion)
        ),
    )


def spec_to_json(spec: f.AnsatzSpec) -> dict:
    ws = spec.weight_set
    doc = {
        "schema_version": SCHEMA_VERSION,
        "k": ws.k,
        "weights": [list(x) for x in ws.weights],
        "fixed": ws.fixed,
        "order": spec.order,
        "ordering": spec.ordering,
        "loop": [trig_to_json(x) for x in spec.loop],
        "label": spec.label,
    }
    if ws.fixed:
        doc["fixed_index"] = ws.fixed_index
    return doc


def extended_to_json(spec: ex.ExtendedAnsatzSpec) -> dict:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "k": spec.weight_set.k,
        "weights": [list(x) for x in spec.weight_set.weights],
        "mu": list(spec.mu),
        "logderivs": [trig_to_json(q) for q in spec.logderivs],
        "companion": [
            {"var": x.variable, "poly": trig_to_json(x.poly)}
            for x in spec.companion
        ],
        "label": spec.label,
    }
    if spec.v_profiles is not None:
        doc["v_profiles"] = [
            [trig_to_json(x), trig_to_json(y)] for x, y in spec.v_profiles
        ]
    return doc


class _Collector:
    """Gathers field-level messages while a document is parsed."""

    def __init__(self, doc):
        self.doc = doc
        self.messages: list[str] = []

    def require(self, key: str, kind: t.Tuple[type, ...]):
        if key not in self.doc:
            self.messages.append(f"missing field {key!r}")
            return None
        value = self.doc[key]
        if isinstance(value, bool) and bool not in kind:
            value = None
        if value is None or not isinstance(value, kind):
            self.messages.append(f"field {key!r} has the wrong type")
            return None
        return value

    def parse(self, key: str, value, parser):
        try:
            return parser(value)
        except (ValueError, TypeError, KeyError, ZeroDivisionError) as ex_:
            self.messages.append(f"{key}: {ex_}")
            return None


def _check_version(collector: _Collector):
    version = collector.doc.get("schema_version")
    if version != SCHEMA_VERSION:
        collector.messages.append(
            f"schema_version {version!r} is not {SCHEMA_VERSION}"
        )


def _weights(collector: _Collector) -> t.Optional[tuple]:
    weights = collector.require("weights", (list,))
    if weights is None:
        return None
    rows = []
    for j, row in enumerate(weights):
        if not isinstance(row, list) or not all(
            isinstance(x, int) and not isinstance(x, bool) for x in row
        ):
            collector.messages.append(f"weight {j} is not a list of integers")
            return None
        rows.append(tuple(row))
    return tuple(rows)


def _trig_list(collector: _Collector, key: str) -> t.Optional[list]:
    values = collector.require(key, (list,))
    if values is None:
        return None
    parsed = [
        collector.parse(f"{key}[{i}]", x, trig_from_json)
        for i, x in enumerate(values)
    ]
    return None if any(x is None for x in parsed) else parsed


def validate_spec(doc) -> t.Union[f.AnsatzSpec, ex.ExtendedAnsatzSpec]:
    """Parse an ansatz document, or raise with every problem found.

    A document with a "mu" field describes the extended ansatz.

    """
    if not isinstance(doc, dict):
        raise e.SpecValidationError(["the document must be an object"])
    if "mu" in doc:
        return _validate_extended(doc)
    collector = _Collector(doc)
    _check_version(collector)
    k = collector.require("k", (int,))
    weights = _weights(collector)
    fixed = doc.get("fixed", False)
    if not isinstance(fixed, bool):
        collector.messages.append("field 'fixed' must be a boolean")
        fixed = False
    fixed_index = doc.get("fixed_index")
    if fixed_index is not None and (
        not isinstance(fixed_index, int) or isinstance(fixed_index, bool)
    ):
        collector.messages.append("field 'fixed_index' must be an integer")
        fixed_index = None
    order = doc.get("order", 2)
    if not isinstance(order, int) or isinstance(order, bool):
        collector.messages.append("field 'order' must be an integer")
        order = 2
    ordering = doc.get("ordering", f.GRADED)
    label = str(doc.get("label", ""))
    loop = _trig_list(collector, "loop")
    if k is None or weights is None or loop is None:
        raise e.SpecValidationError(collector.messages)
    weight_set = w.WeightSet(k, weights, fixed=fixed, fixed_index=fixed_index)
    spec = f.AnsatzSpec(weight_set, tuple(loop), order, label, ordering)
    messages = collector.messages + spec.problems()
    if messages:
        raise e.SpecValidationError(messages)
    return spec


def _validate_extended(doc: dict) -> ex.ExtendedAnsatzSpec:
    collector = _Collector(doc)
    _check_version(collector)
    k = collector.require("k", (int,))
    weights = _weights(collector)
    mu = collector.require("mu", (list,))
    if mu is not None and not all(
        isinstance(x, int) and not isinstance(x, bool) for x in mu
    ):
        collector.messages.append("field 'mu' must list integers")
        mu = None
    logderivs = _trig_list(collector, "logderivs")
    companion_docs = collector.require("companion", (list,))
    companion = None
    if companion_docs is not None:
        companion = []
        for i, item in enumerate(companion_docs):
            if not isinstance(item, dict) or "var" not in item:
                collector.messages.append(f"companion[{i}] needs 'var'")
                continue
            poly = collector.parse(
                f"companion[{i}]", item.get("poly"), trig_from_json
            )
            if poly is not None:
                companion.append(ex.CompanionComponent(item["var"], poly))
    profiles = None
    if doc.get("v_profiles") is not None:
        profiles = []
        for i, pair in enumerate(doc["v_profiles"]):
            parsed = [
                collector.parse(f"v_profiles[{i}]", x, trig_from_json)
                for x in pair
            ]
            profiles.append(tuple(parsed))
    if None in (k, weights, mu, logderivs, companion) or collector.messages:
        raise e.SpecValidationError(collector.messages)
    spec = ex.ExtendedAnsatzSpec(
        w.WeightSet(k, weights),
        tuple(mu),
        tuple(logderivs),
        tuple(companion),
        doc.get("label", ""),
        None if profiles is None else tuple(profiles),
    )
    messages = spec.problems()
    if messages:
        raise e.SpecValidationError(messages)
    return spec


def profile_from_json(doc) -> co.CollarProfile:
    if not isinstance(doc, dict) or not {"a", "c"} <= set(doc):
        raise e.SpecValidationError(["a collar profile needs 'a' and 'c'"])
    collector = _Collector(doc)
    a = collector.parse("a", doc["a"], poly_from_json)
    c_ = collector.parse("c", doc["c"], poly_from_json)
    if collector.messages:
        raise e.SpecValidationError(collector.messages)
    return co.CollarProfile(a, c_)


def profile_to_json(profile: co.CollarProfile) -> dict:
    return {"a": poly_to_json(profile.a), "c": poly_to_json(profile.c)}


def collar_to_json(cert: co.CollarCertificate) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "H": poly_to_json(cert.H),
        "K": poly_to_json(cert.K),
        "k_scale": rational_to_json(cert.k_scale),
        "jet0_ok": cert.jet0_ok,
        "jet1_ok": cert.jet1_ok,
        "jets": [
            {
                "point": row.point,
                "function": row.function,
                "order": row.order,
                "expected": rational_to_json(row.expected),
                "actual": rational_to_json(row.actual),
                "ok": row.ok,
            }
            for row in cert.jets.rows
        ],
        "a_positive_on_01": positivity_to_json(cert.a_positive_on_01),
        "K_positive_on_01": positivity_to_json(cert.K_positive_on_01),
        "det_formula": cert.det_formula,
        "verdict": cert.verdict.value,
    }


# (key, accepted JSON types, smallest allowed value)
_SEARCH_OPTIONS = (
    ("grid_size", (int,), None),
    ("max_iters", (int,), 0),
    ("seed", (int,), 0),
    ("objective", (str,), None),
    ("restarts", (int,), None),
    ("denominator", (int,), 1),
    ("threshold", (int, float), 0),
    ("keep_uncertified", (int,), 0),
)

MAX_SEED = 2**63 - 1


def _search_options(collector: _Collector) -> dict:
    options = {}
    for key, kind, minimum in _SEARCH_OPTIONS:
        if collector.doc.get(key) is None:
            continue
        value = collector.require(key, kind)
        if value is None:
            continue
        if minimum is not None and not value >= minimum:
            collector.messages.append(f"field {key!r} must be ≥ {minimum}")
            continue
        options[key] = value
    if options.get("seed", 0) > MAX_SEED:
        collector.messages.append(f"field 'seed' must be ≤ {MAX_SEED}")
        del options["seed"]
    return options


def _free_coefficients(collector: _Collector) -> list[cl.FreeCoefficient]:
    items = collector.doc.get("free", [])
    if not isinstance(items, list):
        collector.messages.append("field 'free' must be a list")
        return []
    free = []
    for i, item in enumerate(items):
        if not isinstance(item, dict):
            collector.messages.append(f"free[{i}]: not an object")
            continue
        component = item.get("component")
        term = item.get("term")
        bounds = item.get("bounds")
        if isinstance(component, bool) or not isinstance(component, int):
            collector.messages.append(
                f"free[{i}]: component must be an integer"
            )
        elif not isinstance(term, str):
            collector.messages.append(f"free[{i}]: term must be a string")
        elif not isinstance(bounds, list) or len(bounds) != 2:
            collector.messages.append(
                f"free[{i}]: bounds must be [low, high]"
            )
        else:
            try:
                low, high = (rational_from_json(x) for x in bounds)
            except ValueError as ex_:
                collector.messages.append(f"free[{i}]: {ex_}")
                continue
            free.append(cl.FreeCoefficient(component, term, low, high))
    return free


def search_config_from_json(doc) -> cl.SearchConfig:
    """Parse {"template": <spec>, "free": [...], ...options}.

    Every option is type- and range-checked before the factory sees it.

    """
    if not isinstance(doc, dict) or "template" not in doc:
        raise e.SpecValidationError(["a search config needs 'template'"])
    template = validate_spec(doc["template"])
    if not isinstance(template, f.AnsatzSpec):
        raise e.SpecValidationError(["the template must be a plain ansatz"])
    collector = _Collector(doc)
    free = _free_coefficients(collector)
    options = _search_options(collector)
    if collector.messages:
        raise e.SpecValidationError(collector.messages)
    config = cl.SearchConfigFactory().create(template, free, **options)
    messages = config.problems()
    if messages:
        raise e.SpecValidationError(messages)
    return config


def candidate_to_json(candidate: cl.Candidate) -> dict:
    certified = None
    if candidate.certified is not None:
        certified = certificate_to_json(candidate.certified)
    return {
        "coefficients": [rational_to_json(x) for x in candidate.coefficients],
        "float_score": candidate.float_score,
        "restart": candidate.restart,
        "certified": certified,
    }
