"""Command-line interface: eval, verify, profile, zeros, landau."""

import json

import numpy as np
import pytest
from click.testing import CliRunner
from scipy import special as sp

from besselid.cli import main
from besselid.distributions import DIST_KINDS, laplace_closed, pdf


@pytest.fixture()
def runner():
    return CliRunner()


# ----------------------------------------------------------------------
# eval
# ----------------------------------------------------------------------

def test_eval_bessel_k(runner):
    r = runner.invoke(main, ["eval", "bessel_k", "nu=0.5", "x=1"])
    assert r.exit_code == 0
    want = np.sqrt(np.pi / 2.0) * np.exp(-1.0)
    assert float(r.output) == pytest.approx(want, rel=1e-14)


def test_eval_bessel_zero(runner):
    r = runner.invoke(main, ["eval", "bessel_zero", "nu=0", "n=1"])
    assert r.exit_code == 0
    assert float(r.output) == pytest.approx(2.404825557695773, abs=1e-10)


def test_eval_pdf_matches_library(runner):
    r = runner.invoke(main, ["eval", "pdf", "kind=gig", "mu=0.7", "a=1",
                             "b=1.5", "x=2"])
    assert r.exit_code == 0
    d = DIST_KINDS["gig"](0.7, 1.0, 1.5)
    assert float(r.output) == pytest.approx(float(pdf(d, 2.0)), rel=1e-14)


def test_eval_lt_closed_value(runner):
    r = runner.invoke(main, ["eval", "lt", "kind=mckay1", "mu=1", "a=1",
                             "b=2", "x=1"])
    assert r.exit_code == 0
    assert float(r.output) == pytest.approx((3.0 / 8.0) ** 1.5, rel=1e-14)


def test_eval_identity_lhs(runner):
    r = runner.invoke(main, ["eval", "lhs", "id=ik_equal", "mu=1", "z=1"])
    assert r.exit_code == 0
    want = 2.0 * sp.iv(1, 1.0) * sp.kv(1, 1.0)
    assert float(r.output) == pytest.approx(want, rel=1e-12)


def test_eval_ltspec(runner):
    r = runner.invoke(main, ["eval", "ltspec", "kind=ikmu", "mu=1", "x=1"])
    assert r.exit_code == 0
    want = 2.0 * sp.iv(1, 1.0) * sp.kv(1, 1.0)
    assert float(r.output) == pytest.approx(want, rel=1e-12)


def test_eval_usage_errors(runner):
    assert runner.invoke(main, ["eval", "no_such_fn", "x=1"]).exit_code == 2
    assert runner.invoke(main, ["eval", "bessel_k", "nu=1", "x=1",
                                "bogus=3"]).exit_code == 2
    assert runner.invoke(main, ["eval", "pdf", "kind=nope",
                                "x=1"]).exit_code == 2
    # domain errors surface as usage errors, not tracebacks
    assert runner.invoke(main, ["eval", "pdf", "kind=gig", "mu=0.7",
                                "a=1", "b=1.5", "x=-1"]).exit_code == 2


# ----------------------------------------------------------------------
# zeros and landau
# ----------------------------------------------------------------------

def test_zeros_output(runner):
    r = runner.invoke(main, ["zeros", "--nu", "0", "--count", "3"])
    assert r.exit_code == 0
    lines = r.output.strip().splitlines()
    assert len(lines) == 3
    assert float(lines[0].split()[1]) == pytest.approx(2.404825557695773,
                                                       abs=1e-10)


def test_zeros_bad_order(runner):
    assert runner.invoke(main, ["zeros", "--nu", "-2", "--count",
                                "3"]).exit_code == 2


def test_landau_output(runner):
    r = runner.invoke(main, ["landau"])
    assert r.exit_code == 0
    assert float(r.output) == pytest.approx(0.7857468704, abs=1e-8)


# ----------------------------------------------------------------------
# verify
# ----------------------------------------------------------------------

def _report(runner, args):
    r = runner.invoke(main, args)
    assert r.exit_code in (0, 1, 3), r.output
    return r.exit_code, json.loads(r.output)


def test_verify_landau_subset(runner):
    code, rep = _report(runner, ["verify", "idtests", "--only", "landau",
                                 "--stable"])
    assert code == 0
    assert rep["version"] == 1
    assert rep["scope"] == "idtests"
    ids = [row["id"] for row in rep["rows"]]
    assert "landau:constant" in ids
    assert all(row["verdict"] == "pass" for row in rep["rows"])
    assert rep["summary"]["fail"] == 0
    assert ids == sorted(ids)


def test_verify_identity_subset(runner):
    code, rep = _report(runner, ["verify", "identities", "--only",
                                 "identity:IK_EQUAL", "--stable"])
    assert code == 0
    [row] = rep["rows"]
    assert row["verdict"] == "pass"
    assert row["anchor"] == "eq. (eqprod1)"
    assert row["margin"] > 0.0


def test_verify_expected_fail_row(runner):
    code, rep = _report(runner, ["verify", "idtests", "--only",
                                 "pick-witness:zeta", "--stable"])
    assert code == 0
    [row] = rep["rows"]
    assert row["verdict"] == "expected-fail"
    assert row["witness"] is not None


def test_verify_stable_is_deterministic(runner):
    args = ["verify", "idtests", "--only", "landau", "--stable"]
    out1 = runner.invoke(main, args).output
    out2 = runner.invoke(main, args).output
    assert out1 == out2


def test_verify_rows_omit_seconds_only_when_stable(runner):
    _, rep = _report(runner, ["verify", "idtests", "--only", "landau"])
    assert all("seconds" in row for row in rep["rows"])
    _, rep = _report(runner, ["verify", "idtests", "--only", "landau",
                              "--stable"])
    assert all("seconds" not in row for row in rep["rows"])


def test_verify_csv_format(runner):
    r = runner.invoke(main, ["verify", "idtests", "--only", "landau",
                             "--stable", "--format", "csv"])
    assert r.exit_code == 0
    header = r.output.splitlines()[0]
    assert header == "id,params,anchor,verdict,margin,witness"


def test_verify_only_without_match(runner):
    r = runner.invoke(main, ["verify", "all", "--only", "zzz-nothing"])
    assert r.exit_code == 2


def test_verify_config_file_with_flag_override(runner, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("stable = true\nonly = landau:constant\n")
    r = runner.invoke(main, ["verify", "idtests", "--config", str(cfg)])
    assert r.exit_code == 0
    rep = json.loads(r.output)
    assert [row["id"] for row in rep["rows"]] == ["landau:constant"]
    # flags override the file
    r = runner.invoke(main, ["verify", "idtests", "--config", str(cfg),
                             "--only", "landau:bound:1"])
    rep = json.loads(r.output)
    assert [row["id"] for row in rep["rows"]] == ["landau:bound:1"]


def test_verify_threads_agree_with_serial(runner):
    args = ["verify", "idtests", "--only", "absmon", "--stable"]
    serial = runner.invoke(main, args).output
    threaded = runner.invoke(main, args + ["--threads", "4"]).output
    s, t = json.loads(serial), json.loads(threaded)
    assert s["rows"] == t["rows"]


# ----------------------------------------------------------------------
# profile
# ----------------------------------------------------------------------

def test_profile_identity(runner):
    r = runner.invoke(main, ["profile", "TRICOMI_Cp1", "a=1.5", "c=0.5",
                             "--grid", "0.5:5:3"])
    assert r.exit_code == 0
    lines = r.output.strip().splitlines()
    assert lines[0].split(",")[0] == "z"
    assert len(lines) == 4
    for line in lines[1:]:
        assert float(line.split(",")[3]) <= 1e-6


def test_profile_distribution_lt(runner):
    r = runner.invoke(main, ["profile", "lt", "kind=mckay1", "mu=1",
                             "a=0.5", "b=1.5", "--grid", "0.5:2:3"])
    assert r.exit_code == 0
    lines = r.output.strip().splitlines()
    d = DIST_KINDS["mckay1"](1.0, 0.5, 1.5)
    z0, lhs0 = (float(v) for v in lines[1].split(",")[:2])
    assert lhs0 == pytest.approx(float(laplace_closed(d, z0)), rel=1e-12)
    for line in lines[1:]:
        assert float(line.split(",")[3]) <= 1e-7


def test_profile_unknown_target(runner):
    assert runner.invoke(main, ["profile", "nonsense"]).exit_code == 2
