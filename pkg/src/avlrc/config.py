"""Flat key=value code configurations.

Example::

    p=3
    s=2
    ell=4
    N=17
    J=1
    L=1
    delta_reps=0,1

Lists are comma-separated; exponent vectors are colon-joined
(``delta_reps=0:0,0:1,1:0``).  Axis indices in J and L count from 1 in the
file and from 0 in the Python API.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .ambient import GridSpec
from .galois import FieldTower, make_tower
from .metrics import DEFAULT_BUDGET


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class CodeConfig:
    p: int
    s: int
    ell: int
    N: tuple[int, ...]
    J: frozenset[int]
    L: frozenset[int]
    delta_reps: tuple[tuple[int, ...], ...]
    distance_budget: int = DEFAULT_BUDGET
    trials: int = 1000
    seed: int = 0
    extra: dict[str, str] = field(default_factory=dict)

    @property
    def m(self) -> int:
        return len(self.N)

    def tower(self) -> FieldTower:
        try:
            return make_tower(self.p, self.s, self.ell)
        except ValueError as e:
            raise ConfigError(f"tower: {e}") from None

    def grid(self, tower: FieldTower | None = None) -> GridSpec:
        tower = tower or self.tower()
        try:
            return GridSpec(tower.q, tower.Q, self.N, self.J, self.L)
        except ValueError as e:
            raise ConfigError(f"grid: {e}") from None


_REQUIRED = ("p", "s", "ell", "N", "J", "delta_reps")


def _ints(value: str, key: str) -> list[int]:
    try:
        return [int(x) for x in value.split(",") if x.strip()]
    except ValueError:
        raise ConfigError(f"{key}: expected comma-separated integers, got {value!r}") from None


def _int(value: str, key: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise ConfigError(f"{key}: expected an integer, got {value!r}") from None


def parse_config(text: str) -> CodeConfig:
    raw: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key=value")
        key, value = (x.strip() for x in line.split("=", 1))
        if key in raw:
            raise ConfigError(f"line {lineno}: duplicate key {key}")
        raw[key] = value
    missing = [k for k in _REQUIRED if k not in raw]
    if missing:
        raise ConfigError(f"missing keys: {', '.join(missing)}")
    N = tuple(_ints(raw["N"], "N"))
    m = _int(raw["m"], "m") if "m" in raw else len(N)
    if m != len(N):
        raise ConfigError(f"m={m} but N lists {len(N)} values")
    J = frozenset(j - 1 for j in _ints(raw["J"], "J"))
    L = frozenset(j - 1 for j in _ints(raw.get("L", ""), "L"))
    for name, axes in (("J", J), ("L", L)):
        if any(not 0 <= j < m for j in axes):
            raise ConfigError(f"{name}: axes must lie in 1..{m}")
    reps = []
    for item in raw["delta_reps"].split(","):
        item = item.strip()
        if not item:
            continue
        try:
            vec = tuple(int(x) for x in item.split(":"))
        except ValueError:
            raise ConfigError(f"delta_reps: bad exponent vector {item!r}") from None
        if len(vec) != m:
            raise ConfigError(f"delta_reps: {item!r} has {len(vec)} coordinates, expected m={m}")
        reps.append(vec)
    if not reps:
        raise ConfigError("delta_reps must be non-empty")
    known = set(_REQUIRED) | {"m", "L", "distance_budget", "trials", "seed"}
    return CodeConfig(
        p=_int(raw["p"], "p"), s=_int(raw["s"], "s"), ell=_int(raw["ell"], "ell"),
        N=N, J=J, L=L, delta_reps=tuple(reps),
        distance_budget=_int(raw.get("distance_budget", str(DEFAULT_BUDGET)), "distance_budget"),
        trials=_int(raw.get("trials", "1000"), "trials"),
        seed=_int(raw.get("seed", "0"), "seed"),
        extra={k: v for k, v in raw.items() if k not in known},
    )


def load_config(path: str | Path) -> CodeConfig:
    return parse_config(Path(path).read_text())


def format_config(cfg: CodeConfig) -> str:
    lines = [
        f"p={cfg.p}", f"s={cfg.s}", f"ell={cfg.ell}", f"m={cfg.m}",
        "N=" + ",".join(map(str, cfg.N)),
        "J=" + ",".join(str(j + 1) for j in sorted(cfg.J)),
        "L=" + ",".join(str(j + 1) for j in sorted(cfg.L)),
        "delta_reps=" + ",".join(":".join(map(str, a)) for a in cfg.delta_reps),
        f"distance_budget={cfg.distance_budget}", f"trials={cfg.trials}", f"seed={cfg.seed}",
    ]
    return "\n".join(lines) + "\n"
