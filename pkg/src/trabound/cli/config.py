"""Run configuration: a JSON document plus ``--set key.path=value`` overrides."""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field, fields
from importlib import resources
from pathlib import Path

from trabound.errors import ConfigError

SCHEMA = "trabound.config/1"

# field name -> (type, required)
PROBLEM_FIELDS: dict[str, dict[str, tuple[type, bool]]] = {
    "Multipole": {
        "Z": (float, True),
        "d": (float, True),
        "q": (float, True),
        "m": (int, True),
        "eta": (float, True),
        "gamma": (float, False),
    },
    "Potential27": {
        "rho": (float, True),
        "A": (float, True),
        "C": (float, True),
        "D": (float, True),
    },
    "PoschlTeller": {
        "rho": (float, True),
        "V0": (float, True),
        "V1": (float, True),
        "nu": (float, False),
    },
}


def _coerce(value, kind: type, where: str):
    if value is None:
        return None
    if kind is bool:
        if isinstance(value, bool):
            return value
        raise ConfigError(f"{where}: expected true/false, got {value!r}")
    if kind is int:
        if isinstance(value, bool) or not isinstance(value, (int, float)) or int(value) != value:
            raise ConfigError(f"{where}: expected an integer, got {value!r}")
        return int(value)
    if kind is float:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigError(f"{where}: expected a number, got {value!r}")
        if not math.isfinite(value):
            raise ConfigError(f"{where}: must be finite")
        return float(value)
    if kind is str:
        if not isinstance(value, str):
            raise ConfigError(f"{where}: expected a string, got {value!r}")
        return value
    raise AssertionError(kind)


@dataclass(frozen=True)
class ProblemConfig:
    kind: str
    params: dict

    @classmethod
    def from_dict(cls, raw: dict) -> "ProblemConfig":
        if not isinstance(raw, dict):
            raise ConfigError("problem: expected an object")
        kind = raw.get("kind")
        if kind not in PROBLEM_FIELDS:
            raise ConfigError(f"problem.kind: expected one of {sorted(PROBLEM_FIELDS)}, got {kind!r}")
        spec = PROBLEM_FIELDS[kind]
        params = {}
        for key, value in raw.items():
            if key == "kind":
                continue
            if key not in spec:
                raise ConfigError(f"problem.{key}: unknown field for {kind}")
            params[key] = _coerce(value, spec[key][0], f"problem.{key}")
        for key, (_, required) in spec.items():
            if required and key not in params:
                raise ConfigError(f"problem.{key}: required for {kind}")
        return cls(kind, dict(sorted(params.items())))

    def to_dict(self) -> dict:
        return {"kind": self.kind, **self.params}


@dataclass(frozen=True)
class SolverConfig:
    E_min: float | None = None
    E_max: float | None = None
    grid_points: int = 400
    tol: float = 1e-14
    max_levels: int | None = None
    max_basis: int = 60
    gamma_tol: float = 1e-12
    gamma_size: int = 16
    gamma_max_size: int = 1024
    numerov_points: int = 20000
    numerov_tol: float = 1e-8
    nu_sweep: tuple[float, ...] | None = None

    def validate(self) -> None:
        for name in ("tol", "gamma_tol", "numerov_tol"):
            if not getattr(self, name) > 0.0:
                raise ConfigError(f"solver.{name}: must be > 0")
        for name in ("grid_points", "numerov_points", "gamma_size"):
            if getattr(self, name) < 16:
                raise ConfigError(f"solver.{name}: must be >= 16")
        if self.grid_points < 100:
            raise ConfigError("solver.grid_points: must be >= 100")
        if self.gamma_max_size < self.gamma_size:
            raise ConfigError("solver.gamma_max_size: must be >= solver.gamma_size")
        if self.max_levels is not None and self.max_levels < 1:
            raise ConfigError("solver.max_levels: must be >= 1")
        if self.max_basis < 1:
            raise ConfigError("solver.max_basis: must be >= 1")
        if (self.E_min is None) != (self.E_max is None):
            raise ConfigError("solver.E_min/E_max: give both or neither")
        if self.E_min is not None and not self.E_min < self.E_max:
            raise ConfigError("solver.E_min: must be below solver.E_max")
        if self.nu_sweep is not None and len(self.nu_sweep) == 0:
            raise ConfigError("solver.nu_sweep: must not be empty")


@dataclass(frozen=True)
class OutputConfig:
    format: str = "csv"
    path: str | None = None
    levels: tuple[int, ...] = (0,)
    grid_points: int = 2000
    x_min: float | None = None
    x_max: float | None = None
    oracle: bool = True

    def validate(self) -> None:
        if self.format not in ("csv", "json"):
            raise ConfigError(f"output.format: expected csv or json, got {self.format!r}")
        if self.grid_points < 16:
            raise ConfigError("output.grid_points: must be >= 16")
        if not self.levels or any(k < 0 for k in self.levels):
            raise ConfigError("output.levels: need one or more non-negative integers")
        if self.x_min is not None and self.x_max is not None and not self.x_min < self.x_max:
            raise ConfigError("output.x_min: must be below output.x_max")


_FIELD_TYPES = {
    "E_min": float, "E_max": float, "grid_points": int, "tol": float, "max_levels": int,
    "max_basis": int, "gamma_tol": float, "gamma_size": int, "gamma_max_size": int,
    "numerov_points": int, "numerov_tol": float, "nu_sweep": float,
    "format": str, "path": str, "levels": int, "x_min": float, "x_max": float, "oracle": bool,
}
_SEQUENCES = {"nu_sweep", "levels"}


def _section(cls, raw, name: str):
    if raw is None:
        return cls()
    if not isinstance(raw, dict):
        raise ConfigError(f"{name}: expected an object")
    known = {f.name for f in fields(cls)}
    kwargs = {}
    for key, value in raw.items():
        if key not in known:
            raise ConfigError(f"{name}.{key}: unknown field")
        where = f"{name}.{key}"
        kind = _FIELD_TYPES[key]
        if key in _SEQUENCES and value is not None:
            if not isinstance(value, list):
                raise ConfigError(f"{where}: expected a list")
            kwargs[key] = tuple(_coerce(v, kind, f"{where}[{i}]") for i, v in enumerate(value))
        else:
            kwargs[key] = _coerce(value, kind, where)
    obj = cls(**kwargs)
    obj.validate()
    return obj


def _plain(value):
    if isinstance(value, tuple):
        return list(value)
    return value


@dataclass(frozen=True)
class RunConfig:
    problem: ProblemConfig
    solver: SolverConfig = field(default_factory=SolverConfig)
    output: OutputConfig = field(default_factory=OutputConfig)
    name: str = ""

    @classmethod
    def from_dict(cls, raw: dict) -> "RunConfig":
        if not isinstance(raw, dict):
            raise ConfigError("config: expected a JSON object")
        schema = raw.get("schema", SCHEMA)
        if schema != SCHEMA:
            raise ConfigError(f"schema: expected {SCHEMA!r}, got {schema!r}")
        unknown = set(raw) - {"schema", "name", "problem", "solver", "output"}
        if unknown:
            raise ConfigError(f"{sorted(unknown)[0]}: unknown top-level field")
        if "problem" not in raw:
            raise ConfigError("problem: required")
        cfg = cls(
            problem=ProblemConfig.from_dict(raw["problem"]),
            solver=_section(SolverConfig, raw.get("solver"), "solver"),
            output=_section(OutputConfig, raw.get("output"), "output"),
            name=_coerce(raw.get("name", ""), str, "name"),
        )
        if cfg.solver.nu_sweep is not None and cfg.problem.kind != "PoschlTeller":
            raise ConfigError("solver.nu_sweep: only meaningful for PoschlTeller")
        return cfg

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "name": self.name,
            "problem": self.problem.to_dict(),
            "solver": {k: _plain(v) for k, v in asdict(self.solver).items()},
            "output": {k: _plain(v) for k, v in asdict(self.output).items()},
        }

    def with_overrides(self, assignments: list[str]) -> "RunConfig":
        """Apply ``section.key=value`` edits; values are parsed as JSON when possible."""
        raw = self.to_dict()
        for item in assignments:
            if "=" not in item:
                raise ConfigError(f"--set {item!r}: expected key.path=value")
            path, text = item.split("=", 1)
            try:
                value = json.loads(text)
            except json.JSONDecodeError:
                value = text
            keys = path.strip().split(".")
            node = raw
            for key in keys[:-1]:
                if not isinstance(node.get(key), dict):
                    raise ConfigError(f"--set {path}: no section {key!r}")
                node = node[key]
            node[keys[-1]] = value
        return RunConfig.from_dict(raw)


def shipped_configs() -> list[str]:
    root = resources.files("trabound") / "configs"
    return sorted(p.name[: -len(".config.json")] for p in root.iterdir() if p.name.endswith(".config.json"))


def load_config(ref: str) -> RunConfig:
    """Load a config file, or a shipped example by bare name (e.g. ``table3``)."""
    path = Path(ref)
    if path.is_file():
        text = path.read_text()
    else:
        shipped = resources.files("trabound") / "configs" / f"{ref}.config.json"
        if not shipped.is_file():
            raise ConfigError(f"config {ref!r}: no such file or shipped example ({', '.join(shipped_configs())})")
        text = shipped.read_text()
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {ref!r}: invalid JSON ({exc})") from exc
    return RunConfig.from_dict(raw)


__all__ = ["SCHEMA", "OutputConfig", "ProblemConfig", "RunConfig", "SolverConfig", "load_config", "shipped_configs"]
