"""Rectangular parameter grids, per-point evaluation and CSV output."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import IO, Iterator, Mapping, Sequence

import numpy as np

from .analysis import log_negativity, pt_spectrum_numeric, threshold_closed_form
from .channel import HawkingParams, hawking_channel
from .states import MAXIMAL_ALPHA, WernerParams, werner_state

PARAMETERS = ("F", "alpha", "omega", "T", "M")
OUTPUTS = ("tau", "negativity", "pt-eigenvalues", "entangled")
NUMBER_FORMAT = "%.12e"
MAX_AXES = 2


@dataclass(frozen=True)
class Axis:
    name: str
    start: float
    stop: float
    count: int
    spacing: str = "linear"

    def __post_init__(self):
        if self.name not in PARAMETERS:
            raise ValueError(f"unknown sweep parameter {self.name!r}; expected one of {PARAMETERS}")
        if self.count < 2:
            raise ValueError(f"axis {self.name}: count must be >= 2, got {self.count}")
        if not self.start < self.stop:
            raise ValueError(f"axis {self.name}: start must be < stop, got {self.start} >= {self.stop}")
        if self.spacing not in ("linear", "log"):
            raise ValueError(f"axis {self.name}: spacing must be 'linear' or 'log', got {self.spacing!r}")
        if self.spacing == "log" and self.start <= 0:
            raise ValueError(f"axis {self.name}: log spacing needs start > 0, got {self.start}")

    def values(self) -> np.ndarray:
        if self.spacing == "log":
            return np.geomspace(self.start, self.stop, self.count)
        return np.linspace(self.start, self.stop, self.count)


def parse_axis(text: str, default_name: str | None = None) -> Axis:
    """Parse ``[NAME=]start:stop:count[:log|:linear]``."""
    name = default_name
    body = text
    if "=" in text:
        name, body = text.split("=", 1)
        name = name.strip()
    if name is None:
        raise ValueError(f"grid {text!r} needs a parameter name, e.g. F=0:1:11")
    parts = body.split(":")
    if len(parts) not in (3, 4):
        raise ValueError(f"grid {text!r} must look like start:stop:count[:log]")
    try:
        start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise ValueError(f"grid {text!r}: start/stop must be numbers and count an integer") from None
    spacing = parts[3] if len(parts) == 4 else "linear"
    return Axis(name, start, stop, count, spacing)


@dataclass(frozen=True)
class SweepGrid:
    axes: tuple[Axis, ...]
    fixed: Mapping[str, float] = field(default_factory=dict)
    outputs: tuple[str, ...] = ("tau",)

    def __post_init__(self):
        axes = tuple(self.axes)
        object.__setattr__(self, "axes", axes)
        object.__setattr__(self, "fixed", dict(self.fixed))
        object.__setattr__(self, "outputs", tuple(self.outputs))
        if not 1 <= len(axes) <= MAX_AXES:
            raise ValueError(f"a sweep takes 1 or {MAX_AXES} axes, got {len(axes)}")
        names = [a.name for a in axes]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate sweep axes: {names}")
        for name in self.fixed:
            if name not in PARAMETERS:
                raise ValueError(f"unknown parameter {name!r}; expected one of {PARAMETERS}")
            if name in names:
                raise ValueError(f"parameter {name} is both swept and fixed")
        for out in self.outputs:
            if out not in OUTPUTS:
                raise ValueError(f"unknown output {out!r}; expected one of {OUTPUTS}")
        if not self.outputs:
            raise ValueError("at least one output column is required")
        given = set(names) | set(self.fixed)
        if {"T", "M"} <= given:
            raise ValueError("give either T or M, not both (T = 1/(8 pi M))")
        if not {"T", "M"} & given:
            raise ValueError("one of T or M is required")
        if "omega" not in given:
            raise ValueError("omega is required")
        if set(self.outputs) - {"tau"} and "F" not in given:
            raise ValueError("F is required for negativity, pt-eigenvalues and entangled outputs")

    def points(self) -> Iterator[dict[str, float]]:
        """Grid points in row-major order, first axis slowest."""
        base = {"alpha": MAXIMAL_ALPHA, **self.fixed}
        for combo in itertools.product(*(a.values() for a in self.axes)):
            point = dict(base)
            point.update({a.name: float(v) for a, v in zip(self.axes, combo)})
            yield point

    def header(self) -> list[str]:
        cols = [a.name for a in self.axes]
        for out in self.outputs:
            if out == "pt-eigenvalues":
                cols += [f"pt_eig_{i}" for i in range(1, 5)]
            else:
                cols.append(out)
        return cols


def hawking_params(point: Mapping[str, float]) -> HawkingParams:
    return HawkingParams(point["omega"], temperature=point.get("T"), mass=point.get("M"))


def evaluate(point: Mapping[str, float], outputs: Sequence[str]) -> dict[str, float]:
    """Output columns at one parameter point, straight from the library calls."""
    hp = hawking_params(point)
    row: dict[str, float] = {}
    rho = None
    if set(outputs) - {"tau"}:
        rho = hawking_channel(werner_state(WernerParams(point["F"], point["alpha"])), hp)
    for out in outputs:
        if out == "tau":
            row["tau"] = threshold_closed_form(hp.omega, hp.temperature).tau
        elif out == "negativity":
            row["negativity"] = log_negativity(rho)
        elif out == "pt-eigenvalues":
            for i, v in enumerate(pt_spectrum_numeric(rho).eigenvalues, 1):
                row[f"pt_eig_{i}"] = v
        elif out == "entangled":
            row["entangled"] = int(pt_spectrum_numeric(rho).entangled)
    return row


def rows(grid: SweepGrid) -> Iterator[list[float]]:
    for point in grid.points():
        values = evaluate(point, grid.outputs)
        yield [point[a.name] for a in grid.axes] + list(values.values())


def _fmt(v) -> str:
    if isinstance(v, (bool, int, np.integer)):
        return str(int(v))
    return NUMBER_FORMAT % v


def write_csv(grid: SweepGrid, stream: IO[str]) -> None:
    stream.write(",".join(grid.header()) + "\n")
    for row in rows(grid):
        stream.write(",".join(_fmt(v) for v in row) + "\n")


FIG1_AXIS = Axis("T", 1e-6, 1e6, 121, "log")
FIG2_AXIS = Axis("omega", 1e-6, 1e6, 121, "log")
FIG3_AXES = (Axis("F", 0.0, 1.0, 41), Axis("alpha", 0.02, 0.98, 49))
FIG3_RATIO = 1.5


def fig1_grid(axis: Axis = FIG1_AXIS, omega: float = 1.0) -> SweepGrid:
    """Threshold against Hawking temperature at fixed frequency."""
    return SweepGrid((axis,), {"omega": omega}, ("tau",))


def _temperature(temperature: float, mass: float | None) -> dict[str, float]:
    return {"T": temperature} if mass is None else {"M": mass}


def fig2_grid(axis: Axis = FIG2_AXIS, temperature: float = 1.0, mass: float | None = None) -> SweepGrid:
    """Threshold against mode frequency at fixed temperature."""
    return SweepGrid((axis,), _temperature(temperature, mass), ("tau",))


def fig3_grid(
    axes: Sequence[Axis] = FIG3_AXES,
    omega: float = FIG3_RATIO,
    temperature: float = 1.0,
    mass: float | None = None,
) -> SweepGrid:
    """Log negativity over (F, alpha); the defaults give omega/T = 3/2."""
    if sorted(a.name for a in axes) != ["F", "alpha"]:
        raise ValueError("fig3 sweeps exactly the F and alpha axes")
    return SweepGrid(tuple(axes), {"omega": omega, **_temperature(temperature, mass)}, ("negativity",))

