"""
Reproduction targets for the three published figures: which species, which
distance range, what the chart shows. Shared by the sweep runner, the SVG
renderer and the command line.
"""
from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field


class FigureSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    key: str
    title: str
    caption: str
    species: Tuple[Tuple[str, float], ...] = Field(..., description="(name, mass in MeV) in column order.")
    a_min_fm: float = Field(..., gt=0)
    a_max_fm: float = Field(..., gt=0)
    points: int = Field(41, ge=2)
    ratio_species: Tuple[str, ...] = Field((), description="Ratio columns drawn on the chart.")
    force_species: Tuple[str, ...] = Field(..., description="Force columns drawn on the chart.")
    show_total: bool = False
    notes: Tuple[str, ...] = ()


fig1 = FigureSpec(
    key="fig1",
    title="Casimir force vs distance for massive scalar mediators",
    caption="The dependence of the Casimir force on distance for particles with masses of 0, 1, 2, and 3 GeV, respectively.",
    species=(("m0GeV", 0.0), ("m1GeV", 1000.0), ("m2GeV", 2000.0), ("m3GeV", 3000.0)),
    a_min_fm=0.01,
    a_max_fm=1.0,
    force_species=("m0GeV", "m1GeV", "m2GeV", "m3GeV"),
    notes=(
        "masses follow the figure caption (0, 1, 2, 3 GeV); the running text lists 1, 2, 3 and 4 GeV",
    ),
)

fig2 = FigureSpec(
    key="fig2",
    title="Positronium and positronium + photon contributions",
    caption="The contributions of positronium and positronium-photon to the Casimir force, as well as the ratio between the two.",
    species=(("photon", 0.0), ("positronium", 1.0)),
    a_min_fm=10.0,
    a_max_fm=1e5,
    force_species=("positronium",),
    show_total=True,
    ratio_species=("positronium",),
    notes=(
        "positronium mass 1 MeV as in the text; the computed ratio falls to half its small-distance value near 350 fm (a few times 1/(2m)), not at 5000-10000 fm",
    ),
)

fig3 = FigureSpec(
    key="fig3",
    title="pi0, positronium and photon contributions",
    caption="The contributions of pi0 and pi0-positronium-photon to the Casimir force, as well as the ratio between the two.",
    species=(("photon", 0.0), ("positronium", 1.0), ("pi0", 135.0)),
    a_min_fm=1.0,
    a_max_fm=1e3,
    force_species=("pi0",),
    show_total=True,
    ratio_species=("pi0",),
    notes=(
        "pi0 mass 135 MeV as in the text; at 1 fm the pi0 share is about 0.29 and approaches 1/3 only below ~0.3 fm",
    ),
)

FIGURES = {f.key: f for f in (fig1, fig2, fig3)}
