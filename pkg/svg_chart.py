"""
Static SVG line charts drawn from sweep CSV files.

Charts are built from the CSV alone, so removing them never changes a CSV
byte. Force columns go on a log-log panel; ratio columns on a linear right
axis.
"""
import csv
import logging
from pathlib import Path
from typing import Dict, Iterable, List, Optional

import numpy as np
import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

logger = logging.getLogger(__name__)

# stable element ids across runs
matplotlib.rcParams["svg.hashsalt"] = "casimir-sweep"


def read_curve_csv(path) -> Dict[str, np.ndarray]:
    """Columns of a sweep CSV keyed by header name; '#' metadata lines are skipped."""
    with open(path, newline="") as fh:
        rows = [line for line in fh if not line.startswith("#")]
    reader = csv.reader(rows)
    header = next(reader)
    data = np.array([[float(x) for x in row] for row in reader if row], dtype=float)
    if data.size == 0:
        data = np.empty((0, len(header)))
    return {name: data[:, i] for i, name in enumerate(header)}


def _plot_positive(ax, x, y, label):
    y = np.where(y > 0, y, np.nan)
    ax.plot(x, y, label=label)


def render_svg(csv_path, svg_path, title: str = "",
               force_species: Optional[Iterable[str]] = None,
               ratio_species: Iterable[str] = (),
               show_total: bool = False) -> Path:
    """
    Draw a sweep CSV as an SVG 1.1 line chart.

    Args:
        csv_path: Sweep CSV written by sweep.write_csv
        svg_path: Destination file
        title (str): Chart title
        force_species (iterable): Species whose force columns are drawn, all by default
        ratio_species (iterable): Species whose ratio columns go on the right axis
        show_total (bool): Also draw the ensemble total

    Returns:
        Path: The written SVG file
    """
    columns = read_curve_csv(csv_path)
    a = columns["a_fm"]
    if force_species is None:
        force_species = [c[len("force_"):-len("_mev4")] for c in columns
                         if c.startswith("force_") and c != "force_total_mev4"]
    ratio_species: List[str] = list(ratio_species)

    fig, ax = plt.subplots(figsize=(7.0, 4.8))
    for name in force_species:
        _plot_positive(ax, a, columns[f"force_{name}_mev4"], f"|F| {name}")
    if show_total:
        _plot_positive(ax, a, columns["force_total_mev4"], "|F| total")
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("plate distance a [fm]")
    ax.set_ylabel("force per area [MeV$^4$]")
    handles, labels = ax.get_legend_handles_labels()

    if ratio_species:
        twin = ax.twinx()
        for name in ratio_species:
            twin.plot(a, columns[f"ratio_{name}"], linestyle="--", label=f"ratio {name}")
        twin.set_ylim(0.0, 1.0)
        twin.set_ylabel("contribution ratio")
        more_handles, more_labels = twin.get_legend_handles_labels()
        handles, labels = handles + more_handles, labels + more_labels

    ax.legend(handles, labels, loc="best", fontsize="small")
    if title:
        ax.set_title(title)
    fig.tight_layout()

    svg_path = Path(svg_path)
    fig.savefig(svg_path, format="svg", metadata={"Date": None})
    plt.close(fig)
    logger.info("wrote %s", svg_path)
    return svg_path
