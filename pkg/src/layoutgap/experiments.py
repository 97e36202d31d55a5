"""Monte Carlo experiments on the MAX/MIN gap of random graphs.

A gap experiment samples graphs over a grid of sizes, solves each layout
problem exactly (or estimates it by random layouts), and compares the
outcome with the predicted band and with the target ``gap < 1 + delta``.
Every trial seed is derived from ``(master_seed, n, trial)``, so a report
is a pure function of its configuration and independent of execution
order.

Reading a report: ``delta_target`` is the gap tolerance; the empirical
failure rate for that tolerance is ``1 - fraction_gap_below_target``.
"""

from __future__ import annotations

import csv
import io
import json
import math
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import partial
from importlib import resources
from pathlib import Path
from typing import IO, Sequence

import jsonschema
import numpy as np

from .bounds import BoundParameters, choose_parameters, hoeffding_tail, predicted_band
from .measures import ProblemKind
from .sampler import (
    SparsitySchedule,
    derive_seed,
    pair_index,
    pair_indicators,
    sample_dnp,
    sample_gnp,
)
from .solvers import BISECTION_LIMIT, PREFIX_DP_LIMIT, estimate_extremes, gap

CSV_COLUMNS = (
    "problem", "model", "n", "p", "seed", "trial", "exact", "min_cost", "max_cost",
    "gap", "lower_min", "upper_max", "within_band", "gap_below_target",
)

LEGEND = {
    "delta_target": "gap tolerance: a trial succeeds when max/min < 1 + delta_target",
    "empirical_epsilon": "1 - fraction_gap_below_target",
    "band": "lower_min bounds MIN from below, upper_max bounds MAX from above",
    "exact": "false rows come from random layouts; their within_band is one-sided evidence only",
}


class ConfigError(ValueError):
    """Invalid experiment configuration; ``errors`` lists every problem found."""

    def __init__(self, errors: Sequence[str]):
        super().__init__("invalid experiment config:\n  " + "\n  ".join(errors))
        self.errors = list(errors)


def _load_schema() -> dict:
    text = resources.files(__package__).joinpath("experiment_config.schema.json").read_text()
    return json.loads(text)


CONFIG_SCHEMA = _load_schema()


def default_params(kind: ProblemKind, c: float, delta_target: float) -> BoundParameters:
    """Midpoint exponents with band half-width ``d = t / (2 + t)``.

    That width is the largest for which a band hit forces the gap below
    ``1 + t``, since ``(1 + d) / (1 - d) = 1 + t``.
    """
    return choose_parameters(kind.family, c, delta=delta_target / (2 + delta_target))


@dataclass(frozen=True)
class ExperimentConfig:
    kind: ProblemKind
    n_values: tuple[int, ...]
    trials: int
    master_seed: int
    delta_target: float
    model: str | None = None
    p: float | None = None
    schedule: SparsitySchedule | None = None
    mode: str = "exact"
    samples: int = 1000
    params: BoundParameters | None = None

    def __post_init__(self):
        errors = []
        kind = self.kind
        if not isinstance(kind, ProblemKind):
            kind = ProblemKind(kind)
            object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "n_values", tuple(int(n) for n in self.n_values))
        model = self.model or ("D" if kind.directed else "G")
        object.__setattr__(self, "model", model)
        if model not in ("G", "D"):
            errors.append(f"model: must be 'G' or 'D', got {model!r}")
        elif (model == "D") != kind.directed:
            errors.append(f"model: {kind.value} requires model {'D' if kind.directed else 'G'}")
        if (self.p is None) == (self.schedule is None):
            errors.append("p/schedule: give exactly one of a fixed p or a schedule")
        elif self.p is not None and not 0.0 <= self.p <= 1.0:
            errors.append(f"p: must lie in [0, 1], got {self.p}")
        if not self.n_values:
            errors.append("n_values: must not be empty")
        if any(n < 1 for n in self.n_values):
            errors.append("n_values: every n must be at least 1")
        if self.trials < 1:
            errors.append(f"trials: must be at least 1, got {self.trials}")
        if self.mode not in ("exact", "estimate"):
            errors.append(f"mode: must be 'exact' or 'estimate', got {self.mode!r}")
        elif self.mode == "exact":
            cap = BISECTION_LIMIT if kind.bisection else PREFIX_DP_LIMIT
            too_big = [n for n in self.n_values if n > cap]
            if too_big:
                errors.append(f"n_values: exact mode supports n <= {cap}, got {too_big}")
        if self.samples < 1:
            errors.append(f"samples: must be at least 1, got {self.samples}")
        if not self.delta_target > 0:
            errors.append(f"delta_target: must be positive, got {self.delta_target}")
        if not 0 <= self.master_seed < 1 << 64:
            errors.append("master_seed: must lie in [0, 2**64)")
        if self.params is None and not errors:
            c = self.schedule.c if self.schedule is not None else 0.0
            try:
                params = default_params(kind, c, self.delta_target)
            except ValueError as exc:
                errors.append(f"params: {exc}")
            else:
                object.__setattr__(self, "params", params)
        elif self.params is not None:
            try:
                self.params.check(kind.family)
            except ValueError as exc:
                errors.append(f"params: {exc}")
        if errors:
            raise ConfigError(errors)

    def p_for(self, n: int) -> float:
        return self.p if self.p is not None else self.schedule.p(n)

    @classmethod
    def from_dict(cls, data: dict) -> "ExperimentConfig":
        """Validate ``data`` against the JSON schema and build a config."""
        validator = jsonschema.Draft202012Validator(CONFIG_SCHEMA)
        problems = sorted(validator.iter_errors(data), key=lambda e: list(e.absolute_path))
        if problems:
            raise ConfigError([
                f"{'.'.join(str(x) for x in e.absolute_path) or '<root>'}: {e.message}"
                for e in problems
            ])
        kind = ProblemKind(data["kind"])
        schedule = None
        if "schedule" in data:
            schedule = SparsitySchedule(K=data["schedule"].get("K", 1.0), c=data["schedule"]["c"])
        params = None
        if "params" in data:
            c = data["params"].get("c", schedule.c if schedule else 0.0)
            try:
                base = default_params(kind, c, data["delta_target"])
            except ValueError as exc:
                raise ConfigError([f"params: {exc}"]) from None
            params = BoundParameters(**{**asdict(base), **data["params"]})
        return cls(
            kind=kind,
            n_values=tuple(data["n_values"]),
            trials=data["trials"],
            master_seed=data["master_seed"],
            delta_target=data["delta_target"],
            model=data.get("model"),
            p=data.get("p"),
            schedule=schedule,
            mode=data.get("mode", "exact"),
            samples=data.get("samples", 1000),
            params=params,
        )

    def to_dict(self) -> dict:
        out = {
            "kind": self.kind.value,
            "model": self.model,
            "n_values": list(self.n_values),
        }
        if self.p is not None:
            out["p"] = self.p
        else:
            out["schedule"] = {"K": self.schedule.K, "c": self.schedule.c}
        out.update(
            trials=self.trials,
            mode=self.mode,
            samples=self.samples,
            params=asdict(self.params),
            master_seed=self.master_seed,
            delta_target=self.delta_target,
        )
        return out


@dataclass(frozen=True)
class TrialRow:
    problem: str
    model: str
    n: int
    p: float
    seed: int
    trial: int
    exact: bool
    min_cost: int
    max_cost: int
    gap: float
    lower_min: float
    upper_max: float
    within_band: bool
    gap_below_target: bool


@dataclass(frozen=True)
class SizeSummary:
    n: int
    p: float
    trials: int
    fraction_within_band: float
    fraction_gap_below_target: float
    median_gap: float


@dataclass(frozen=True)
class ExperimentReport:
    config: ExperimentConfig
    rows: tuple[TrialRow, ...]
    summary: tuple[SizeSummary, ...]

    def by_n(self) -> dict[int, SizeSummary]:
        return {s.n: s for s in self.summary}

    def to_dict(self) -> dict:
        def enc(d):
            return {k: ("inf" if isinstance(v, float) and math.isinf(v) else v) for k, v in d.items()}

        return {
            "config": self.config.to_dict(),
            "legend": dict(LEGEND),
            "rows": [enc(asdict(r)) for r in self.rows],
            "summary": [enc(asdict(s)) for s in self.summary],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ExperimentReport":
        def dec(d):
            return {k: (math.inf if v == "inf" else v) for k, v in d.items()}

        return cls(
            config=ExperimentConfig.from_dict(data["config"]),
            rows=tuple(TrialRow(**dec(r)) for r in data["rows"]),
            summary=tuple(SizeSummary(**dec(s)) for s in data["summary"]),
        )


def _run_trial(cfg: ExperimentConfig, task: tuple[int, int]) -> TrialRow:
    n, trial = task
    seed = derive_seed(cfg.master_seed, n, trial)
    p = cfg.p_for(n)
    g = sample_dnp(n, p, seed) if cfg.model == "D" else sample_gnp(n, p, seed)
    if cfg.mode == "exact":
        rep = gap(g, cfg.kind)
    else:
        rep = estimate_extremes(g, cfg.kind, cfg.samples, derive_seed(cfg.master_seed, n, trial, 1))
    band = predicted_band(cfg.kind, n, p, cfg.params)
    return TrialRow(
        problem=cfg.kind.value,
        model=cfg.model,
        n=n,
        p=p,
        seed=seed,
        trial=trial,
        exact=rep.exact,
        min_cost=rep.min_cost,
        max_cost=rep.max_cost,
        gap=rep.gap,
        lower_min=band.lower_min,
        upper_max=band.upper_max,
        within_band=band.contains(rep.min_cost, rep.max_cost),
        gap_below_target=rep.gap < 1 + cfg.delta_target,
    )


def run_gap_experiment(cfg: ExperimentConfig, workers: int = 1) -> ExperimentReport:
    """Run every (n, trial) of ``cfg``; rows come back ordered by (n, trial).

    With ``workers > 1`` trials run in a process pool; the report is the
    same either way.
    """
    tasks = [(n, t) for n in cfg.n_values for t in range(cfg.trials)]
    run = partial(_run_trial, cfg)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(run, tasks, chunksize=max(1, len(tasks) // (4 * workers))))
    else:
        rows = [run(t) for t in tasks]
    rows.sort(key=lambda r: (r.n, r.trial))

    summary = []
    for n in dict.fromkeys(cfg.n_values):
        mine = [r for r in rows if r.n == n]
        summary.append(SizeSummary(
            n=n,
            p=cfg.p_for(n),
            trials=len(mine),
            fraction_within_band=sum(r.within_band for r in mine) / len(mine),
            fraction_gap_below_target=sum(r.gap_below_target for r in mine) / len(mine),
            median_gap=float(statistics.median(r.gap for r in mine)),
        ))
    return ExperimentReport(cfg, tuple(rows), tuple(summary))


# -- serialisation -----------------------------------------------------------

def _flag(b: bool) -> str:
    return "true" if b else "false"


def _csv_record(r: TrialRow) -> list[str]:
    return [
        r.problem, r.model, str(r.n), repr(float(r.p)), str(r.seed), str(r.trial),
        _flag(r.exact), str(r.min_cost), str(r.max_cost),
        "inf" if math.isinf(r.gap) else f"{r.gap:.6f}",
        f"{r.lower_min:.6f}", f"{r.upper_max:.6f}",
        _flag(r.within_band), _flag(r.gap_below_target),
    ]


def report_to_csv(report: ExperimentReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in report.rows:
        writer.writerow(_csv_record(r))
    return buf.getvalue()


def report_to_json(report: ExperimentReport) -> str:
    return json.dumps(report.to_dict(), indent=2) + "\n"


def write_report(report: ExperimentReport, destination: str | Path | IO[str], format: str = "csv") -> None:
    """Write ``report`` as CSV or JSON to a path or an open text stream."""
    if format == "csv":
        text = report_to_csv(report)
    elif format == "json":
        text = report_to_json(report)
    else:
        raise ValueError(f"format must be 'csv' or 'json', got {format!r}")
    if hasattr(destination, "write"):
        destination.write(text)
    else:
        Path(destination).write_text(text, encoding="utf-8", newline="\n")


def read_report_json(source: str | Path) -> ExperimentReport:
    return ExperimentReport.from_dict(json.loads(Path(source).read_text(encoding="utf-8")))


# -- concentration of a single cut -------------------------------------------

@dataclass(frozen=True)
class TailRow:
    """Empirical tail frequencies at one relative deviation beside their bound."""

    eps: float
    lower_freq: float
    upper_freq: float
    bound: float
    samples: int

    @property
    def mc_error(self) -> float:
        b = min(self.bound, 1.0)
        return math.sqrt(b * (1 - b) / self.samples)

    def dominated(self, k: float = 3.0) -> bool:
        """Both tails at most ``bound + k`` Monte Carlo standard errors."""
        limit = self.bound + k * self.mc_error
        return self.lower_freq <= limit and self.upper_freq <= limit


@dataclass(frozen=True)
class ConcentrationConfig:
    n: int
    p: float
    samples: int
    eps_grid: tuple[float, ...] = (0.02, 0.05, 0.1)
    master_seed: int = 0
    set_size: int | None = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p must lie in [0, 1], got {self.p}")
        if self.samples < 1:
            raise ValueError("samples must be at least 1")
        if self.set_size is None:
            object.__setattr__(self, "set_size", self.n // 2)
        if not 0 <= self.set_size <= self.n:
            raise ValueError(f"set_size must lie in 0..{self.n}")
        if any(e <= 0 for e in self.eps_grid):
            raise ValueError("every eps must be positive")
        object.__setattr__(self, "eps_grid", tuple(self.eps_grid))


@dataclass(frozen=True)
class ConcentrationReport:
    config: ConcentrationConfig
    pairs: int
    mu: float
    mean: float
    std_error: float
    tails: tuple[TailRow, ...] = field(default=())


def run_concentration_experiment(cfg: ConcentrationConfig) -> ConcentrationReport:
    """Distribution of the cut of ``S = {0, ..., set_size - 1}`` over G(n, p).

    The cut is a sum over the ``set_size * (n - set_size)`` crossing pairs,
    so a relative deviation ``eps`` of the mean is a per-pair deviation of
    ``p * eps`` in Hoeffding's inequality.  Sample ``i`` uses the same pair
    stream as ``sample_gnp(n, p, derive_seed(master_seed, i))``.
    """
    n, p, k = cfg.n, cfg.p, cfg.set_size
    rows, cols = pair_index(n)
    crossing = (rows < k) != (cols < k)
    pairs = k * (n - k)
    values = np.empty(cfg.samples, dtype=np.int64)
    for i in range(cfg.samples):
        edges = pair_indicators(n, p, derive_seed(cfg.master_seed, i))
        values[i] = np.count_nonzero(edges & crossing)
    mu = pairs * p
    mean = float(values.mean())
    std_error = float(values.std(ddof=1) / math.sqrt(cfg.samples)) if cfg.samples > 1 else 0.0
    tails = []
    for eps in cfg.eps_grid:
        bound = hoeffding_tail(pairs, p * eps) if pairs and p > 0 else 1.0
        tails.append(TailRow(
            eps=eps,
            lower_freq=float(np.mean(values <= mu * (1 - eps) + 1e-9)),
            upper_freq=float(np.mean(values >= mu * (1 + eps) - 1e-9)),
            bound=bound,
            samples=cfg.samples,
        ))
    return ConcentrationReport(cfg, pairs, mu, mean, std_error, tuple(tails))


def run_hoeffding_check(
    n: int = 200,
    p: float = 0.5,
    eps_grid: Sequence[float] = (0.02, 0.05, 0.1),
    samples: int = 100_000,
    seed: int = 0,
    chunk: int = 10_000,
) -> tuple[TailRow, ...]:
    """Tail frequencies of a sum of ``n`` Bernoulli(p) draws beside ``exp(-2 eps**2 n)``."""
    rng = np.random.default_rng(seed)
    sums = np.empty(samples, dtype=np.int64)
    for start in range(0, samples, chunk):
        stop = min(samples, start + chunk)
        sums[start:stop] = (rng.random((stop - start, n)) < p).sum(axis=1)
    out = []
    for eps in eps_grid:
        out.append(TailRow(
            eps=eps,
            lower_freq=float(np.mean(sums <= (p - eps) * n + 1e-9)),
            upper_freq=float(np.mean(sums >= (p + eps) * n - 1e-9)),
            bound=hoeffding_tail(n, eps),
            samples=samples,
        ))
    return tuple(out)
