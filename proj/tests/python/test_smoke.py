import json
import os
import subprocess

import pytest

import ffr


def test_pi_g_sl2():
    assert ffr.pi_g(2, "e:a1") == "x_{a1}^2 d_{a1} + x_{a1} h1"
    assert ffr.pi_g(2, "f:a1") == "-d_{a1}"
    assert ffr.verify_pi_hom(3) == []


def test_fields():
    assert ffr.ff_field(2, "1/2", "f:a1") == "-a_{a1}(z)"
    assert ffr.c_gamma(3, "-3/2") == ["-5/2", "-5/2"]
    r = ffr.verify_affine_comm(2, "1/2", D=2, top="gt", lam="1/3", topdeg=2)
    assert r["checked"] > 0 and r["failures"] == 0


def test_admissible():
    assert ffr.admissible_level(2, 3, 2)["k"] == "-1/2"
    assert sorted(ffr.prk(2, 3, 2)) == sorted(["-3/2*w1", "-1/2*w1", "0", "w1"])
    for sigma in ([], [1]):
        assert ffr.omega(2, 3, 2, sigma) == ffr.omega_direct(2, 3, 2, sigma)
    assert ffr.omega(2, 2, 1, []) == []


def test_orbits():
    rows = {tuple(r["partition"]): r for r in ffr.orbit_table(4)}
    assert rows[(3, 1)]["dim"] == 10 and rows[(3, 1)]["labels"] == ["subreg"]
    assert ffr.richardson([1, 3], 4) == [2, 2]
    assert ffr.orbit_dim([2, 2]) == 8


def test_errors():
    with pytest.raises(ffr.FfrError) as e:
        ffr.admissible_level(3, 2, 1)
    assert e.value.kind == "NotAdmissible"
    with pytest.raises(ValueError):
        ffr.pi_g(2, "x:a1")


@pytest.mark.skipif("FFR_CLI" not in os.environ, reason="CLI path not given")
def test_cli_agrees():
    out = subprocess.run([os.environ["FFR_CLI"], "prk", "-n", "2", "-p", "3", "-q", "2"],
                         capture_output=True, text=True, check=True).stdout
    bar = [row["lambda"] for row in json.loads(out)["bar"]]
    assert sorted(bar) == sorted(ffr.prk(2, 3, 2))
