"""Smoke tests for the python module built from the C++ core."""

import math

import pytest

bc = pytest.importorskip("backlund_curves")

PI = math.pi


def test_scalar_product_branches():
    assert bc.g_dot(bc.SpaceCase.G3, [1, 2, 3], [2, 5, 7]) == 2.0
    assert bc.g_dot(bc.SpaceCase.G3, [0, 3, 4], [0, 1, 2]) == 11.0
    assert bc.g_dot(bc.SpaceCase.PG3_TB, [0, 3, 4], [0, 3, 4]) == -7.0
    assert bc.g_dot(bc.SpaceCase.G4, [1, 1, 1, 0], [2, 0, 1, 0]) == 3.0
    assert bc.classify(bc.SpaceCase.PG3_TN, [0, 1, 2]) == "isotropic, timelike"


def test_domain_errors_surface_as_exceptions():
    grid = bc.Grid(0.0, 2.0, 64)
    with pytest.raises(Exception, match="constant angle phi != 0"):
        bc.make_backlund_params(bc.SpaceCase.G3, 1.0, 0.0, 1.0, grid)
    with pytest.raises(Exception, match="tau"):
        bc.make_backlund_params(bc.SpaceCase.G3, 0.0, 1.0, 1.0, grid)


def test_gamma_solver_matches_closed_form():
    grid = bc.Grid(0.0, 2.0, 2001)
    p = bc.make_backlund_params(bc.SpaceCase.G3, 1.0, PI / 2, PI / 2, grid)
    sol = bc.solve_gamma(p)
    worst = max(abs(g - bc.gamma_closed_form(p, s)) for g, s in zip(sol, grid.points()))
    assert worst <= 1e-8
    assert bc.gamma_closed_form(p, math.log(3.0)) == pytest.approx(2.4980915447965089, abs=1e-12)


def test_python_callables_drive_synthesis():
    grid = bc.Grid(0.0, 1.0, 1024)
    out = bc.synthesize_curve(
        bc.SpaceCase.G3,
        kappa=lambda s: 1.0,
        tau=lambda s: 0.0,
        sigma=None,
        init=bc.FrameInit.standard(bc.SpaceCase.G3),
        grid=grid,
    )
    s = grid.points()[-1]
    tip = out.curve.positions[-1]
    assert tip[0] == pytest.approx(s, abs=1e-12)
    assert tip[1] == pytest.approx(s * s / 2, abs=1e-10)


def test_full_pipeline_passes_audit(tmp_path):
    grid = bc.Grid(0.0, 2.0, 4096)
    fp = bc.FamilyParams()
    fp.grid = grid
    fp.tau = 1.0
    fp.phi = PI / 2
    fp.gamma0 = PI / 2
    fam = bc.curve_family(bc.SpaceCase.G3, "backlund-consistent", fp)
    params = bc.make_backlund_params(bc.SpaceCase.G3, 1.0, PI / 2, PI / 2, grid)
    pair = bc.transform_curve(fam.curve, fam.frames, fam.gamma, params)
    report = bc.full_report(pair)
    assert report.all_pass()
    verdicts = {e.name: e.verdict for e in report.checks}
    assert verdicts["distance_coefficient_deviation"] == "pass"
    assert verdicts["tangent_defect_vs_expected"] == "pass"

    # CSV + JSON round trip through the file formats
    pair_path = str(tmp_path / "pair.csv")
    bc.write_pair_csv(pair_path, pair)
    back = bc.read_pair_csv(pair_path)
    assert back.gamma == pair.gamma
    report_path = str(tmp_path / "report.json")
    bc.write_report_json(report_path, report)
    import json

    parsed = json.loads(open(report_path).read())
    assert parsed["case"] == "g3"
    assert all("tolerance" in chk for chk in parsed["checks"].values())


def test_expected_defects_match_oracle_pins():
    e = bc.expected_defects(bc.SpaceCase.G3, 1.3, 0.7, 0.9, 1.1)
    assert e.tangent[1] == pytest.approx(0.70805264272160739, abs=1e-15)
    assert e.speed_deficit == pytest.approx(0.15703807956718444, abs=1e-15)
    assert e.binormal[1] == pytest.approx(-0.65602296509264468, abs=1e-15)
    g4 = bc.expected_defects(bc.SpaceCase.G4, 0.25, 0.5, 2.0 / 3.0, 1.5)
    assert all(v == 0.0 for v in g4.tangent)
    assert all(v == 0.0 for v in g4.binormal)
