"""Random-restart hill climbing over rational loop coefficients."""
import dataclasses
import logging
import math
import re
import typing as t
import torch
from . import scan as sc
from .. import defaults as df
from .. import errors as e
from ..ansatz import family as f
from ..exact import rational as ra
from ..exact import trig as tr
from ..verify import certificate as c
from ..verify import pipeline as pi

_logger = logging.getLogger(__name__)

MIN_ABS = "min_abs"
SIGN_MARGIN = "sign_margin"
OBJECTIVES = (MIN_ABS, SIGN_MARGIN)

_TERM = re.compile(r"^(const|cos(\d+)|sin(\d+))$")


@dataclasses.dataclass(frozen=True)
class FreeCoefficient:
    """One searchable coefficient of a loop component.

    `term` is "const", "cosK" or "sinK", and the value stays inside
    [low, high].

    """

    component: int
    term: str
    low: ra.Rational
    high: ra.Rational

    def read(self, poly: tr.TrigPoly) -> ra.Rational:
        kind, k = _parse_term(self.term)
        if kind == "const":
            return poly.constant
        return (poly.cos if kind == "cos" else poly.sin).get(k, ra.Rational(0))

    def write(self, poly: tr.TrigPoly, value: ra.Rational) -> tr.TrigPoly:
        kind, k = _parse_term(self.term)
        cos, sin = poly.cos, poly.sin
        constant = poly.constant
        if kind == "const":
            constant = value
        elif kind == "cos":
            cos[k] = value
        else:
            sin[k] = value
        return tr.TrigPoly.of(constant, cos, sin)


def _parse_term(term: str) -> t.Tuple[str, int]:
    match = _TERM.match(term)
    if match is None:
        raise ValueError(f"Unknown term {term!r}.")
    if match.group(2):
        return "cos", int(match.group(2))
    if match.group(3):
        return "sin", int(match.group(3))
    return "const", 0


@dataclasses.dataclass(frozen=True)
class SearchConfig:
    """Use `SearchConfigFactory` to fill in defaults."""

    template: f.AnsatzSpec
    free: t.Tuple[FreeCoefficient, ...]
    grid_size: int
    max_iters: int
    seed: int
    objective: str
    restarts: int
    denominator: int
    threshold: float
    keep_uncertified: int

    def problems(self) -> list[str]:
        messages = self.template.problems()
        minimum = 4 * max(p.max_frequency for p in self.template.loop) + 1
        if self.grid_size < minimum:
            messages.append(f"grid_size {self.grid_size} < {minimum}")
        if self.objective not in OBJECTIVES:
            messages.append(f"unknown objective {self.objective!r}")
        for free in self.free:
            if not 0 <= free.component < len(self.template.loop):
                messages.append(f"free component {free.component} missing")
            try:
                _parse_term(free.term)
            except ValueError:
                messages.append(f"unknown term {free.term!r}")
            if free.low > free.high:
                messages.append(
                    f"empty bounds [{free.low}, {free.high}] "
                    f"on component {free.component}"
                )
            if math.ceil(free.low * self.denominator) > math.floor(
                free.high * self.denominator
            ):
                messages.append(
                    f"no multiple of 1/{self.denominator} in "
                    f"[{free.low}, {free.high}]"
                )
        if self.restarts < 1:
            messages.append(f"restarts {self.restarts} must be positive")
        return messages


class SearchConfigFactory:
    """Create `SearchConfig`."""

    def __init__(self):
        """No parameters."""

    def create(
        self,
        template: f.AnsatzSpec,
        free: t.Sequence[FreeCoefficient] = (),
        grid_size: t.Optional[int] = None,
        max_iters: t.Optional[int] = None,
        seed: t.Optional[int] = None,
        objective: t.Optional[str] = None,
        restarts: t.Optional[int] = None,
        denominator: t.Optional[int] = None,
        threshold: t.Optional[float] = None,
        keep_uncertified: t.Optional[int] = None,
    ) -> SearchConfig:
        """Take the template and the free coefficients."""
        nyquist = 4 * max(p.max_frequency for p in template.loop) + 1
        return SearchConfig(
            template=template,
            free=tuple(free),
            grid_size=df.get_default(grid_size, max(256, nyquist)),
            max_iters=df.get_default(max_iters, 200),
            seed=df.get_default(seed, 0),
            objective=df.get_default(objective, SIGN_MARGIN),
            restarts=df.get_default(restarts, 4),
            denominator=df.get_default(denominator, 1000),
            threshold=df.get_default(threshold, 1e-6),
            keep_uncertified=df.get_default(keep_uncertified, 3),
        )


@dataclasses.dataclass(frozen=True)
class Candidate:
    """A point of the search box with its float score.

    `certified` is set only after the exact pipeline returned FREE.

    """

    coefficients: t.Tuple[ra.Rational, ...]
    float_score: float
    restart: int
    certified: t.Optional[c.FreenessCertificate] = None


class _Objective:
    def __init__(self, config: SearchConfig):
        self._config = config
        self._z = sc.grid(config.grid_size)
        self._scores: dict[tuple, float] = {}
        self.evaluations = 0

    def spec(self, point: t.Sequence[ra.Rational]) -> f.AnsatzSpec:
        loop = list(self._config.template.loop)
        for free, value in zip(self._config.free, point):
            loop[free.component] = free.write(loop[free.component], value)
        return self._config.template.with_loop(loop)

    def __call__(self, point: t.Sequence[ra.Rational]) -> float:
        key = tuple(point)
        if key not in self._scores:
            self.evaluations += 1
            family = f.derivative_family(self.spec(point))
            values = torch.linalg.det(sc.family_tensor(family, self._z))
            if self._config.objective == MIN_ABS:
                score = values.abs().min().item()
            else:
                score = sc.sign_margin(values)
            self._scores[key] = score
        return self._scores[key]


class HillClimber:
    """Coordinate-wise hill climbing on the grid of 1/denominator."""

    def __init__(self, config: SearchConfig, objective: _Objective):
        self._config = config
        self._objective = objective
        den = config.denominator
        self._lows = [math.ceil(p.low * den) for p in config.free]
        self._highs = [math.floor(p.high * den) for p in config.free]

    def start(self, restart: int, generator: torch.Generator) -> list[int]:
        """Restart 0 starts at the template, clipped into the box."""
        if restart == 0:
            den = self._config.denominator
            return [
                min(max(round(p.read(self._loop(p)) * den), lo), hi)
                for p, lo, hi in zip(
                    self._config.free, self._lows, self._highs
                )
            ]
        return [
            int(torch.randint(lo, hi + 1, (1,), generator=generator).item())
            for lo, hi in zip(self._lows, self._highs)
        ]

    def _loop(self, free: FreeCoefficient) -> tr.TrigPoly:
        return self._config.template.loop[free.component]

    def climb(
        self, point: list[int], budget: int
    ) -> t.Tuple[list[int], float]:
        """Improve the point until no step helps or the budget runs out."""
        score = self._score(point)
        spans = [hi - lo for lo, hi in zip(self._lows, self._highs)]
        step = max(max(spans, default=0) // 4, 1)
        used = 0
        while step >= 1 and used < budget:
            improved = True
            while improved and used < budget:
                improved = False
                for i in range(len(point)):
                    for direction in (1, -1):
                        if used >= budget:
                            break
                        moved = list(point)
                        moved[i] = min(
                            max(moved[i] + direction * step, self._lows[i]),
                            self._highs[i],
                        )
                        if moved == point:
                            continue
                        used += 1
                        moved_score = self._score(moved)
                        if moved_score > score:
                            point, score, improved = moved, moved_score, True
            _logger.debug(
                f"Hill climb step={step} score={score} point={point}"
            )
            step //= 2
        return point, score

    def _score(self, point: list[int]) -> float:
        return self._objective(self.rationals(point))

    def rationals(self, point: list[int]) -> list[ra.Rational]:
        return [ra.Rational(n, self._config.denominator) for n in point]


def search(config: SearchConfig, certify_all: bool = False) -> list[Candidate]:
    """Return certified candidates, then the best uncertified ones.

    The result is a function of the configuration alone: restarts run
    in order from one seeded generator.

    """
    messages = config.problems()
    if messages:
        raise e.DimensionMismatch("; ".join(messages))
    generator = torch.Generator().manual_seed(config.seed)
    objective = _Objective(config)
    climber = HillClimber(config, objective)
    seen = set()
    certified, uncertified = [], []
    for restart in range(config.restarts):
        point = climber.start(restart, generator)
        point, score = climber.climb(point, config.max_iters)
        coefficients = tuple(climber.rationals(point))
        if coefficients in seen:
            continue
        seen.add(coefficients)
        candidate = Candidate(coefficients, score, restart)
        if certify_all or score > config.threshold:
            certificate = pi.verify(objective.spec(coefficients))
            if certificate.is_free:
                _logger.info(
                    f"Restart {restart} certified FREE with score {score}"
                )
                certified.append(
                    dataclasses.replace(candidate, certified=certificate)
                )
                continue
        uncertified.append(candidate)
    uncertified.sort(key=lambda x: (-x.float_score, x.restart))
    return certified + uncertified[: config.keep_uncertified]


def complete_loop(
    prefix: t.Sequence[tr.TrigPoly],
    config: SearchConfig,
    max_frequency: int = 1,
    bounds: t.Tuple[ra.RationalLike, ra.RationalLike] = (-10, 10),
    certify_all: bool = False,
) -> list[Candidate]:
    """Search the components after a frozen prefix.

    Every coefficient of the suffix components up to `max_frequency` is
    free within `bounds`; the template's own suffix is the first start.

    """
    template = config.template
    if len(prefix) > template.target_dim:
        raise e.DimensionMismatch(
            f"Prefix of length {len(prefix)} exceeds target_dim "
            f"{template.target_dim}."
        )
    loop = list(prefix) + list(template.loop[len(prefix):])
    low, high = (ra.to_rational(x) for x in bounds)
    terms = ["const"] + [
        f"{kind}{k}"
        for k in range(1, max_frequency + 1)
        for kind in ("cos", "sin")
    ]
    free = [
        FreeCoefficient(i, term, low, high)
        for i in range(len(prefix), template.target_dim)
        for term in terms
    ]
    return search(
        dataclasses.replace(
            config, template=template.with_loop(loop), free=tuple(free)
        ),
        certify_all=certify_all,
    )
