import os
from pathlib import Path

import pytest

import streamcheck as sc

FIXTURES = Path(os.environ.get("STREAMCHECK_FIXTURE_DIR", Path(__file__).resolve().parents[2] / "fixtures"))


def model(name):
    return sc.load_model(str(FIXTURES / name))


def test_brake_override_simulation():
    m = model("brake_override.scm.txt")
    out = sc.simulate(
        m,
        "BrakeOverride",
        {"DriverBrake": [21, 51, 78, 100, 91], "AccBrake": [79, 100, 100, 91, 51]},
    )
    assert out == {"AccState": ["Active"] * 4 + ["Standby"]}


def test_interface_and_listing():
    m = model("encoder.scm.txt")
    assert "EncoderAbstract" in m.components
    assert m.refinements == ["Encoder"]
    ins, outs = m.interface("EncoderConcrete")
    assert ins == {"i_c": "real"}
    assert list(outs) == ["o_c"]


def test_run_tests_passes():
    m = model("brake_override.scm.txt")
    r = sc.run_tests(m, "BrakeOverride", str(FIXTURES / "brake_override.tv.csv"))
    assert (r["passed"], r["failed"], r["errors"]) == (1, 0, 0)
    assert r["cases"][0]["status"] == "pass"


def test_correspondence_encoder():
    m = model("encoder.scm.txt")
    r = sc.check_correspondence(m, "Encoder", {"i_a": [True, False, True]}, {"i_c": [2.5, -3.6, 0.3]})
    assert r["ri_holds"] and r["ro_holds"] and r["corresponding"]
    assert r["concrete_output"] == {"o_c": [2, -4, 0]}


def test_galois_and_causality():
    m = model("encoder.scm.txt")
    g = sc.verify_galois(m, "EncoderGalois")
    assert g["ok"] and g["concrete_elements"] == 3
    c = sc.check_causality(m, "EncoderConcrete", mode="strict")
    assert not c["ok"] and "counterexample" in c


def test_errors_map_to_exceptions():
    with pytest.raises(sc.ParseError):
        sc.parse_model("component A {")
    m = model("brake_override.scm.txt")
    with pytest.raises(sc.DomainError):
        sc.simulate(m, "BrakeOverride", {"DriverBrake": [300], "AccBrake": [0]})
    with pytest.raises(sc.SpecError):
        sc.simulate(m, "Nope", {})
    assert issubclass(sc.SimulationError, sc.Error)


def test_round_trip():
    m = model("acc.scm.txt")
    assert sc.parse_model(m.serialize()) == m


def test_cli_exit_codes():
    code, out, _ = sc.run_cli(["--help"])
    assert code == 0 and out
    code, _, err = sc.run_cli(["frobnicate"])
    assert code == 2
