import numpy as np
import pytest

from species import Ensemble, make_species
from svg_chart import read_curve_csv, render_svg
from sweep import SweepSpec, run_sweep, write_csv


@pytest.fixture
def curve_csv(tmp_path):
    ensemble = Ensemble.of(make_species("photon", 0.0), make_species("positronium", 1.0))
    spec = SweepSpec(a_min=10.0, a_max=1e5, points=9, ensemble=ensemble)
    path = tmp_path / "curve.csv"
    with open(path, "w", newline="") as fh:
        write_csv(run_sweep(spec, threads=2), ensemble, fh, comments=["test curve"])
    return path


def test_read_curve_csv(curve_csv):
    columns = read_curve_csv(curve_csv)
    assert list(columns) == [
        "a_fm", "force_photon_mev4", "force_positronium_mev4", "force_total_mev4",
        "ratio_photon", "ratio_positronium",
    ]
    assert len(columns["a_fm"]) == 9
    assert columns["a_fm"][0] == 10.0
    # positronium has underflowed at the far end
    assert columns["force_positronium_mev4"][-1] == 0.0
    np.testing.assert_allclose(columns["ratio_photon"] + columns["ratio_positronium"], 1.0, rtol=1e-12)


def test_render_svg(curve_csv, tmp_path):
    svg = render_svg(curve_csv, tmp_path / "curve.svg", title="test", ratio_species=["positronium"], show_total=True)
    text = svg.read_text()
    assert text.startswith("<?xml")
    assert "<svg" in text
    assert "positronium" in text


def test_render_svg_is_deterministic(curve_csv, tmp_path):
    first = render_svg(curve_csv, tmp_path / "a.svg", ratio_species=["positronium"]).read_bytes()
    second = render_svg(curve_csv, tmp_path / "b.svg", ratio_species=["positronium"]).read_bytes()
    assert first == second


def test_render_svg_leaves_csv_untouched(curve_csv, tmp_path):
    before = curve_csv.read_bytes()
    render_svg(curve_csv, tmp_path / "curve.svg")
    assert curve_csv.read_bytes() == before
