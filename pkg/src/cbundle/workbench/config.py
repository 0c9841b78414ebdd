"""Run configuration: strict JSON parsing, validation and normalized emission.

Validation errors name the offending JSON path (``$.lambda.semisimple[2]``);
syntax errors carry line and column from the decoder.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from ..errors import ConfigurationError, DomainError
from ..flow import FlowTolerances
from ..gaussian import GaussianRational
from ..rootdata import build_root_system

COMMANDS = (
    "check-standard",
    "check-hyperbolic",
    "spectrum",
    "vanishing",
    "picard",
    "kahler",
    "solve-eq9",
    "trdeg",
    "simulate-orbits",
    "hilbert",
)

MODES = ("specific", "generic")


@dataclass(frozen=True)
class FactorSpec:
    series: str | None = None
    rank: int | None = None
    omega: tuple[int, ...] | None = None
    exponent_matrix: tuple[tuple[int, ...], ...] | None = None

    @property
    def is_flag(self) -> bool:
        return self.exponent_matrix is None

    def to_dict(self) -> dict:
        if self.is_flag:
            return {"series": self.series, "rank": self.rank, "omega": list(self.omega)}
        return {"exponent_matrix": [list(r) for r in self.exponent_matrix]}


@dataclass(frozen=True)
class UnipotentSpec:
    block: int  # 1-based, as written in the config
    root: tuple[int, ...]
    coeff: GaussianRational

    def to_dict(self) -> dict:
        return {"block": self.block, "root": list(self.root), "coeff": str(self.coeff)}


@dataclass(frozen=True)
class LambdaSpec:
    semisimple: tuple[GaussianRational, ...] | None
    unipotent: tuple[UnipotentSpec, ...] = ()
    mode: str = "specific"

    def to_dict(self) -> dict:
        return {
            "semisimple": None if self.semisimple is None else [str(x) for x in self.semisimple],
            "unipotent": [u.to_dict() for u in self.unipotent],
            "mode": self.mode,
        }


@dataclass(frozen=True)
class ExperimentSpec:
    seed: int = 0
    samples: int = 50
    scale: float = 1.0
    tolerances: FlowTolerances = field(default_factory=FlowTolerances)
    epsilons: tuple[float, ...] = (1.0, 0.5, 0.25, 0.125, 0.0625, 0.0)
    freeness_pairs: int = 100
    hilbert_kmax: int = 5
    eq9_terms: int = 20

    def to_dict(self) -> dict:
        t = self.tolerances
        return {
            "seed": self.seed,
            "samples": self.samples,
            "scale": self.scale,
            "tolerances": {"tol": t.tol, "agree": t.agree, "jac_min": t.jac_min},
            "epsilon": {"values": list(self.epsilons)},
            "freeness_pairs": self.freeness_pairs,
            "hilbert_kmax": self.hilbert_kmax,
            "eq9_terms": self.eq9_terms,
        }


@dataclass(frozen=True)
class RunConfig:
    factor1: FactorSpec
    factor2: FactorSpec
    lam: LambdaSpec
    experiment: ExperimentSpec = field(default_factory=ExperimentSpec)
    commands: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "factor1": self.factor1.to_dict(),
            "factor2": self.factor2.to_dict(),
            "lambda": self.lam.to_dict(),
            "experiment": self.experiment.to_dict(),
            "commands": list(self.commands),
        }

    def with_seed(self, seed: int) -> "RunConfig":
        exp = ExperimentSpec(**{**self.experiment.__dict__, "seed": int(seed)})
        return RunConfig(self.factor1, self.factor2, self.lam, exp, self.commands)


def emit_config(cfg: RunConfig) -> str:
    return json.dumps(cfg.to_dict(), indent=2, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------------------
# parsing


def _no_duplicates(pairs):
    out = {}
    for k, v in pairs:
        if k in out:
            raise ConfigurationError(f"duplicate key {k!r}")
        out[k] = v
    return out


def _keys(obj, path: str, allowed: set, required: set = frozenset()) -> dict:
    if not isinstance(obj, dict):
        raise ConfigurationError(f"{path}: expected an object")
    unknown = sorted(set(obj) - allowed)
    if unknown:
        raise ConfigurationError(f"{path}: unknown key(s) {', '.join(map(repr, unknown))}")
    missing = sorted(required - set(obj))
    if missing:
        raise ConfigurationError(f"{path}: missing key(s) {', '.join(map(repr, missing))}")
    return obj


def _int(v, path: str, lo: int | None = None) -> int:
    if not isinstance(v, int) or isinstance(v, bool):
        raise ConfigurationError(f"{path}: expected an integer, got {v!r}")
    if lo is not None and v < lo:
        raise ConfigurationError(f"{path}: must be >= {lo}")
    return v


def _float(v, path: str, positive: bool = True) -> float:
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ConfigurationError(f"{path}: expected a number, got {v!r}")
    if positive and not v > 0:
        raise ConfigurationError(f"{path}: must be positive")
    return float(v)


def _gaussian(v, path: str) -> GaussianRational:
    if isinstance(v, float):
        raise ConfigurationError(
            f"{path}: {v!r} is a float; values must be exact, write e.g. '3/2' instead of '1.5'")
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise ConfigurationError(f"{path}: expected a string like '1/2+i', got {v!r}")
    try:
        return GaussianRational.coerce(v)
    except DomainError as exc:
        raise ConfigurationError(f"{path}: {exc}") from None


def _int_list(v, path: str) -> tuple[int, ...]:
    if not isinstance(v, list) or not v:
        raise ConfigurationError(f"{path}: expected a nonempty list of integers")
    return tuple(_int(x, f"{path}[{k}]") for k, x in enumerate(v))


def _factor(obj, path: str) -> FactorSpec:
    if isinstance(obj, dict) and "exponent_matrix" in obj:
        _keys(obj, path, {"exponent_matrix"})
        rows = obj["exponent_matrix"]
        if not isinstance(rows, list) or not rows:
            raise ConfigurationError(f"{path}.exponent_matrix: expected a nonempty list of rows")
        mat = tuple(_int_list(r, f"{path}.exponent_matrix[{k}]") for k, r in enumerate(rows))
        if len({len(r) for r in mat}) != 1:
            raise ConfigurationError(f"{path}.exponent_matrix: rows have unequal lengths")
        return FactorSpec(exponent_matrix=mat)
    _keys(obj, path, {"series", "rank", "omega"}, {"series", "rank", "omega"})
    series = obj["series"]
    if series not in ("A", "B", "C", "D"):
        raise ConfigurationError(f"{path}.series: expected one of A, B, C, D")
    rank = _int(obj["rank"], f"{path}.rank", 1)
    omega = _int_list(obj["omega"], f"{path}.omega")
    if len(omega) != rank:
        raise ConfigurationError(f"{path}.omega: needs {rank} coefficients")
    if any(x < 0 for x in omega) or not any(omega):
        raise ConfigurationError(f"{path}.omega: must be dominant and nonzero")
    try:
        build_root_system(series, rank)
    except ConfigurationError as exc:
        raise ConfigurationError(f"{path}: {exc}") from None
    return FactorSpec(series, rank, omega)


def _lambda(obj, path: str, factors: tuple[FactorSpec, FactorSpec]) -> LambdaSpec:
    _keys(obj, path, {"semisimple", "unipotent", "mode"})
    mode = obj.get("mode", "specific")
    if mode not in MODES:
        raise ConfigurationError(f"{path}.mode: expected 'specific' or 'generic'")
    semi = obj.get("semisimple")
    if semi is None:
        if mode == "specific":
            raise ConfigurationError(f"{path}.semisimple: required in specific mode")
        values = None
    else:
        if not isinstance(semi, list):
            raise ConfigurationError(f"{path}.semisimple: expected a list")
        values = tuple(_gaussian(x, f"{path}.semisimple[{k}]") for k, x in enumerate(semi))
        expected = sum(_torus_size(f) for f in factors)
        if len(values) != expected:
            raise ConfigurationError(f"{path}.semisimple: needs {expected} entries, got {len(values)}")
    terms = []
    for k, t in enumerate(obj.get("unipotent", [])):
        tp = f"{path}.unipotent[{k}]"
        _keys(t, tp, {"block", "root", "coeff"}, {"block", "root", "coeff"})
        block = _int(t["block"], f"{tp}.block")
        if block not in (1, 2):
            raise ConfigurationError(f"{tp}.block: must be 1 or 2")
        fac = factors[block - 1]
        if not fac.is_flag:
            raise ConfigurationError(f"{tp}: block {block} has no root system")
        root = _int_list(t["root"], f"{tp}.root")
        if not build_root_system(fac.series, fac.rank).is_root(root):
            raise ConfigurationError(f"{tp}.root: {list(root)} is not a positive root of "
                                     f"{fac.series}{fac.rank}")
        terms.append(UnipotentSpec(block, root, _gaussian(t["coeff"], f"{tp}.coeff")))
    return LambdaSpec(values, tuple(terms), mode)


def _torus_size(f: FactorSpec) -> int:
    return f.rank + 1 if f.is_flag else len(f.exponent_matrix[0])


def _experiment(obj, path: str) -> ExperimentSpec:
    _keys(obj, path, {"seed", "samples", "scale", "tolerances", "epsilon", "freeness_pairs",
                      "hilbert_kmax", "eq9_terms"})
    base = ExperimentSpec()
    kw = {}
    if "seed" in obj:
        kw["seed"] = _int(obj["seed"], f"{path}.seed", 0)
    for key in ("samples", "freeness_pairs", "eq9_terms"):
        if key in obj:
            kw[key] = _int(obj[key], f"{path}.{key}", 1)
    if "hilbert_kmax" in obj:
        kw["hilbert_kmax"] = _int(obj["hilbert_kmax"], f"{path}.hilbert_kmax", 0)
    if "scale" in obj:
        kw["scale"] = _float(obj["scale"], f"{path}.scale")
    if "tolerances" in obj:
        tp = f"{path}.tolerances"
        tol = _keys(obj["tolerances"], tp, {"tol", "agree", "jac_min"})
        kw["tolerances"] = FlowTolerances(**{k: _float(v, f"{tp}.{k}") for k, v in tol.items()})
    if "epsilon" in obj:
        ep = _keys(obj["epsilon"], f"{path}.epsilon", {"values"}, {"values"})
        vals = ep["values"]
        if not isinstance(vals, list) or not vals:
            raise ConfigurationError(f"{path}.epsilon.values: expected a nonempty list")
        eps = tuple(_float(v, f"{path}.epsilon.values[{k}]", positive=False) for k, v in enumerate(vals))
        if any(not 0 <= e <= 1 for e in eps):
            raise ConfigurationError(f"{path}.epsilon.values: entries must lie in [0, 1]")
        kw["epsilons"] = eps
    return ExperimentSpec(**{**base.__dict__, **kw})


def config_from_dict(data) -> RunConfig:
    _keys(data, "$", {"factor1", "factor2", "lambda", "experiment", "commands"},
          {"factor1", "factor2", "lambda"})
    f1 = _factor(data["factor1"], "$.factor1")
    f2 = _factor(data["factor2"], "$.factor2")
    lam = _lambda(data["lambda"], "$.lambda", (f1, f2))
    exp = _experiment(data.get("experiment", {}), "$.experiment")
    cmds = data.get("commands", [])
    if not isinstance(cmds, list):
        raise ConfigurationError("$.commands: expected a list")
    for k, c in enumerate(cmds):
        if c not in COMMANDS:
            raise ConfigurationError(f"$.commands[{k}]: unknown command {c!r}; "
                                     f"choose from {', '.join(COMMANDS)}")
    return RunConfig(f1, f2, lam, exp, tuple(cmds))


def parse_config(text: str) -> RunConfig:
    try:
        data = json.loads(text, object_pairs_hook=_no_duplicates)
    except json.JSONDecodeError as exc:
        raise ConfigurationError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return config_from_dict(data)
