"""
Distance sweeps over an ensemble: grid construction, parallel evaluation in
grid order, and the CSV writer.
"""
import csv
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, Iterable, List, Literal, Optional, TextIO

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

import config
from figures import FigureSpec
from quadrature import DEFAULT_TOLERANCE, Tolerance
from species import Ensemble, make_species, ratios_from_forces, species_forces
from units import fm_to_natural

logger = logging.getLogger(__name__)

FLOAT_FORMAT = ".17g"


class SweepSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    a_min: float = Field(..., gt=0, allow_inf_nan=False, description="Smallest distance in fm.")
    a_max: float = Field(..., gt=0, allow_inf_nan=False, description="Largest distance in fm.")
    points: int = Field(41, ge=2)
    spacing: Literal["log", "linear"] = "log"
    ensemble: Ensemble
    tolerance: Tolerance = DEFAULT_TOLERANCE
    method: str = "integral"

    @model_validator(mode="after")
    def _ordered(self):
        if not self.a_min < self.a_max:
            raise ValueError(f"a_min = {self.a_min} fm must lie below a_max = {self.a_max} fm")
        return self

    @classmethod
    def for_figure(cls, figure: FigureSpec, tolerance: Tolerance = DEFAULT_TOLERANCE) -> "SweepSpec":
        ensemble = Ensemble.of(*(make_species(name, mass) for name, mass in figure.species))
        return cls(a_min=figure.a_min_fm, a_max=figure.a_max_fm, points=figure.points,
                   spacing="log", ensemble=ensemble, tolerance=tolerance)


class CurvePoint(BaseModel):
    """One evaluated sweep row; forces are magnitudes in MeV^4."""
    model_config = ConfigDict(frozen=True)

    a_fm: float = Field(..., gt=0)
    forces: Dict[str, float]
    total: float = Field(..., ge=0)
    ratios: Dict[str, float]


def distance_grid(spec: SweepSpec) -> np.ndarray:
    """Distances in fm, strictly increasing."""
    if spec.spacing == "log":
        grid = np.geomspace(spec.a_min, spec.a_max, spec.points)
    else:
        grid = np.linspace(spec.a_min, spec.a_max, spec.points)
    # pin the end points against rounding in geomspace
    grid[0], grid[-1] = spec.a_min, spec.a_max
    return grid


def evaluate_point(a_fm: float, ensemble: Ensemble, tol: Tolerance = DEFAULT_TOLERANCE,
                   method: str = "integral") -> CurvePoint:
    forces = species_forces(fm_to_natural(a_fm), ensemble, tol, method)
    magnitudes = {name: abs(f) for name, f in forces.items()}
    return CurvePoint(
        a_fm=float(a_fm),
        forces=magnitudes,
        total=sum(magnitudes.values()),
        ratios=ratios_from_forces(forces),
    )


def run_sweep(spec: SweepSpec, threads: Optional[int] = None) -> List[CurvePoint]:
    """
    Evaluate every grid point; rows come back in grid order.

    Args:
        spec (SweepSpec): What to evaluate
        threads (int): Worker count, CASIMIR_THREADS (or the core count) by default
    """
    grid = distance_grid(spec)
    threads = threads or config.sweep_threads()
    logger.info("sweeping %d points over [%g, %g] fm with %d threads",
                len(grid), spec.a_min, spec.a_max, threads)

    def evaluate(a_fm):
        return evaluate_point(float(a_fm), spec.ensemble, spec.tolerance, spec.method)

    with ThreadPoolExecutor(max_workers=threads) as executor:
        return list(executor.map(evaluate, grid))


def csv_header(names: Iterable[str]) -> List[str]:
    names = list(names)
    return (["a_fm"] + [f"force_{n}_mev4" for n in names] + ["force_total_mev4"]
            + [f"ratio_{n}" for n in names])


def write_csv(points: List[CurvePoint], ensemble: Ensemble, stream: TextIO,
              comments: Iterable[str] = ()) -> None:
    """
    Write sweep rows with 17 significant digits and "\\n" line endings.

    Args:
        comments (iterable): Metadata lines written first, each prefixed "# "
    """
    for line in comments:
        stream.write(f"# {line}\n")
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(csv_header(ensemble.names))
    for p in points:
        row = [p.a_fm] + [p.forces[n] for n in ensemble.names] + [p.total] + [p.ratios[n] for n in ensemble.names]
        writer.writerow([format(float(x), FLOAT_FORMAT) for x in row])
