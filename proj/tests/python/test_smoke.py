import json
import os
import subprocess

import pytest

import gnum

GNUM_BIN = os.environ.get("GNUM_BIN", "gnum")
DATA = os.environ.get("GNUM_DATA", os.path.join(os.path.dirname(__file__), "..", "..", "data"))


def run_cli(*args, env=None):
    proc = subprocess.run([GNUM_BIN, *args], capture_output=True, text=True, env=env)
    return proc.returncode, json.loads(proc.stdout) if proc.stdout.strip() else None


def test_valuation_and_distance():
    s = gnum.Session()
    assert s.val("alpha(3/2)") == {"schema": "gnum/1", "valuation": "3/2", "mode": "exact"}
    assert s.dist("chi(G2)", "chi(G3)")["dist"] == 1.0
    assert s.norm("alpha(2)")["schema"] == "gnum/1"


def test_units_and_idempotents():
    s = gnum.Session()
    assert s.is_unit("alpha(1)*chi(G2) + alpha(2)*chi(~G2)")["unit"] is True
    assert s.unitize("alpha(3)*chi(G2)")["a"] == 3
    assert s.idempotent("chi(G2) + alpha(1)*chi(~T4)")["tail_class"] == "Proper"


def test_families_and_quotient_sign():
    s = gnum.Session()
    assert s.enum_families({"atoms": ["D4_0", "D4_1", "D4_2", "D4_3"]})["count"] == 4
    family = {"atoms": ["G2", "~G2"], "excluded": 1}
    assert s.ideal_member("chi(G2)", family)["member"] is True
    assert s.qsign("chi(G2) - chi(~G2)", family)["sign"] == "non-positive"


def test_oscillator_is_refuted_both_ways():
    s = gnum.Session()
    assert s.sign("alpha(1)*sin(alpha(-1))")["qpositive"] == "no"
    assert s.sign("-alpha(1)*sin(alpha(-1))")["qpositive"] == "no"


def test_errors_carry_exit_codes():
    s = gnum.Session()
    with pytest.raises(gnum.Error) as bad:
        s.val("alpha(")
    assert bad.value.exit_code == 2
    with pytest.raises(gnum.Error) as contract:
        s.is_unit("0")
    assert contract.value.exit_code == 1


def test_custom_registry():
    s = gnum.Session(registry={"H": {"kind": "geomseq", "rho": "1/7"}})
    assert s.val("alpha(2)*chi(H)")["valuation"] == "2"


def test_cli_exit_codes():
    code, out = run_cli("val", "alpha(3/2)")
    assert code == 0 and out["valuation"] == "3/2" and out["schema"] == "gnum/1"
    code, out = run_cli("is-unit", "0")
    assert code == 1 and out["error"]["code"]
    code, out = run_cli("val", "chi(NOPE)")
    assert code == 2 and out["error"]["code"] == "unknown-name"
    code, out = run_cli("suite", "no-such-suite")
    assert code == 2 and out["error"]["code"] == "unknown-suite"
    code, out = run_cli("oracle", "--inject-valuation", "7", "alpha(2)")
    assert code == 1 and out["result"] == "FAIL"


def test_cli_data_files():
    code, out = run_cli("--registry", os.path.join(DATA, "registry.json"), "val", "alpha(2)*chi(Mix)")
    assert code == 0 and out["valuation"] == "2"
    code, out = run_cli("qsign", "chi(D4_2) - chi(D4_0)", "--family", os.path.join(DATA, "family4.json"))
    assert code == 0 and out["sign"] == "non-negative"
    code, out = run_cli("oracle", "--grid", os.path.join(DATA, "grid.json"), "alpha(1)*chi(G2) + alpha(3)")
    assert code == 0 and out["result"] == "PASS"


def test_precision_from_environment():
    env = dict(os.environ, GNUM_PRECISION="abc")
    code, out = run_cli("val", "1", env=env)
    assert code == 2 and out["error"]["code"] == "usage"


def test_global_options_after_subcommand():
    proc = subprocess.run([GNUM_BIN, "val", "alpha(1)", "--format", "text"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "valuation: 1" in proc.stdout.splitlines()
