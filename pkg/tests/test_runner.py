"""Case runner and file emission tests."""

import csv
import dataclasses
import xml.dom.minidom

import pytest

from wirebearing.config import CaseSuite, default_config_path, load_config
from wirebearing.errors import BearingError
from wirebearing.runner import (
    CURVE_HEADER,
    CaseFailure,
    CaseResult,
    emit_outputs,
    run_cases,
    run_single,
)


@pytest.fixture(scope="module")
def suite():
    return load_config(default_config_path())


@pytest.fixture(scope="module")
def small_results(suite):
    sel = suite.select(case_ids=[2, 3], boundary="unclamped")
    results, failures = run_cases(sel, n_steps=41)
    assert failures == []
    return results


def test_run_single_shape(small_results):
    r = small_results[0]
    assert r.case_id == 2
    assert r.c0a == pytest.approx(680756.12, rel=1e-6)
    # sweep extends past the rated load so interpolation at C0a works
    assert r.curve.samples[-1].axial_force >= r.c0a
    assert r.curve.samples[0].axial_force == 0.0


def test_twist_diagnostics(small_results):
    conventional, wirecase = small_results
    assert conventional.twist_onset_load is None
    assert conventional.phi_at_c0a == 0.0
    assert wirecase.twist_onset_load is not None
    assert 0.0 < wirecase.twist_onset_load < wirecase.c0a
    assert wirecase.phi_at_c0a > 0.0


def test_fraction_bounds_enforced(small_results):
    with pytest.raises(BearingError):
        dataclasses.replace(small_results[0], onset_fraction=1.4)


def test_curve_csv_header_golden(small_results, tmp_path):
    manifest = emit_outputs(small_results, str(tmp_path))
    with open(manifest["case2_unclamped_curve"]) as fh:
        assert fh.readline().rstrip("\n") == CURVE_HEADER
        assert CURVE_HEADER == ("axial_disp_mm,axial_force_N,Q_N,alpha_deg,"
                                "phi_deg,psi_deg,a_mm,b_mm,p0_MPa,trunc_state")


def test_zero_displacement_row(small_results, tmp_path):
    manifest = emit_outputs(small_results, str(tmp_path))
    with open(manifest["case2_unclamped_curve"]) as fh:
        rows = list(csv.DictReader(fh))
    first = rows[0]
    assert float(first["axial_disp_mm"]) == 0.0
    assert float(first["axial_force_N"]) == 0.0
    assert float(first["Q_N"]) == 0.0
    assert float(first["p0_MPa"]) == 0.0
    assert float(first["alpha_deg"]) == 45.0
    assert first["trunc_state"] == "none"


def test_summary_round_trip(small_results, tmp_path):
    manifest = emit_outputs(small_results, str(tmp_path))
    with open(manifest["summary_csv"]) as fh:
        rows = list(csv.DictReader(fh))
    for row, r in zip(rows, small_results):
        assert int(row["case_id"]) == r.case_id
        assert float(row["C0a_N"]) == r.c0a
        assert float(row["alpha_at_C0a_deg"]) == r.alpha_at_c0a
        if r.onset_fraction is None:
            assert row["onset_fraction"] == ""
        else:
            assert float(row["onset_fraction"]) == r.onset_fraction
        if r.twist_onset_load is None:
            assert row["twist_onset_N"] == ""
        else:
            assert float(row["twist_onset_N"]) == r.twist_onset_load


def test_parallel_matches_serial_bytes(suite, tmp_path):
    sel = suite.select(case_ids=[2, 5], boundary="unclamped")
    serial, f1 = run_cases(sel, parallelism=1, n_steps=31)
    parallel, f2 = run_cases(sel, parallelism=4, n_steps=31)
    assert f1 == f2 == []
    dir_a, dir_b = tmp_path / "serial", tmp_path / "parallel"
    man_a = emit_outputs(serial, str(dir_a), svg=True)
    man_b = emit_outputs(parallel, str(dir_b), svg=True)
    assert man_a.keys() == man_b.keys()
    for key in man_a:
        with open(man_a[key], "rb") as fa, open(man_b[key], "rb") as fb:
            assert fa.read() == fb.read(), key


def test_svg_valid_and_byte_stable(small_results, tmp_path):
    man1 = emit_outputs(small_results, str(tmp_path / "a"), svg=True)
    man2 = emit_outputs(small_results, str(tmp_path / "b"), svg=True)
    for key in ("stiffness_svg", "contact_angle_svg"):
        xml.dom.minidom.parse(man1[key])
        with open(man1[key], "rb") as f1, open(man2[key], "rb") as f2:
            assert f1.read() == f2.read()


def test_failing_case_collected_not_fatal(suite):
    sel = suite.select(case_ids=[2], boundary=None)
    broken = dataclasses.replace(sel.definitions[0], pressure_limit=1e12)
    mixed = CaseSuite(source="test", definitions=(broken, sel.definitions[1]))
    results, failures = run_cases(mixed, n_steps=31)
    assert len(results) == 1
    assert len(failures) == 1
    assert isinstance(failures[0], CaseFailure)
    assert failures[0].error_type == "ConvergenceError"
    assert results[0].boundary_condition == "unclamped"


def test_empty_suite(suite):
    empty = CaseSuite(source="test", definitions=())
    assert run_cases(empty) == ([], [])
    with pytest.raises(BearingError):
        emit_outputs([], "/tmp/nowhere")
