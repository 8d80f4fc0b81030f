import io
import subprocess
import sys

import pytest

from leibniz import catalog, lba
from leibniz.cli import run


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_check_L1():
    code, out, _ = cli("check", "L1")
    assert code == 0 and "leibniz defects: 0" in out


def test_check_file(tmp_path):
    f = tmp_path / "bad.lba"
    f.write_text("algebra a\ndim 2\nbasis e1 e2\n[e1,e2] = e2\nend\n")
    code, out, _ = cli("check", str(f))
    assert code == 1 and "(e1,e1,e2)" in out


def test_deform_L2_fails_with_witness():
    code, out, _ = cli("deform", "L2", "--coeffs", "0,1,0")
    assert code == 1
    assert "witness (X1,Pp,Pm)" in out


def test_deform_L1_integrable():
    assert cli("deform", "L1", "--coeffs", "0,1,2")[0] == 0
    assert cli("deform", "L1", "--coeffs", "1,1,0")[0] == 1


def test_cohomology_report():
    code, out, _ = cli("cohomology", "L1", "--space", "hl2")
    assert code == 0 and out.strip() == "dim HL2 = 3"
    code, out, _ = cli("--format", "machine", "cohomology", "L2")
    assert out.splitlines() == ["dim_BL2=43", "dim_ZL2=46", "dim_HL2=3"]


def test_obstruction():
    code, out, _ = cli("obstruction", "L1")
    assert code == 1 and "obstruction support: a1*a2" in out
    assert "T_sym(phi1,phi2) nonzero entries" in out
    code, out, _ = cli("obstruction", "L(1,1)", "--basis", "hl2")
    assert code == 1
    assert cli("obstruction", "L(1,0)")[0] == 0


def test_external_cocycle_file(tmp_path):
    phi = catalog.listed_cocycles("L1")
    f = tmp_path / "phi.lba"
    f.write_text(lba.format(phi[:1] + phi[2:]))
    code, out, _ = cli("obstruction", "L1", "--cocycles", str(f))
    assert code == 0 and "vanishes: true" in out


def test_quotient():
    code, out, _ = cli("quotient", "L1")
    assert code == 0 and "quotient_is_lie: true" in out


def test_invariants():
    code, out, _ = cli("--format", "machine", "invariants", "L(0,0)")
    assert code == 0 and "dim_product_space=6" in out.splitlines()


def test_isocheck(tmp_path):
    a = catalog.build("L-family", alpha1=1, alpha2=1)
    P = catalog.theorem5_transformation(a, 1, 2, 3)
    f = tmp_path / "P.lba"
    f.write_text(lba.format([("P", P)]))
    # P maps the new basis into a, so it is a morphism L(1/15, 5/3) -> L(1,1)
    code, _, _ = cli("isocheck", "L-family", "L-family", "--param", "alpha1=1/15", "--param", "alpha2=5/3",
                     "--param-other", "alpha1=1", "--param-other", "alpha2=1", "--matrix", str(f))
    assert code == 0
    code, _, _ = cli("isocheck", "L(0,0)", "L(1,1)", "--matrix", str(f))
    assert code == 1


def test_semidirect():
    assert cli("semidirect", "sl3module1", "--compare", "L1")[0] == 0
    assert cli("semidirect", "sp4R", "--compare", "L(0,0)")[0] == 0
    assert cli("semidirect", "sl3module1", "--compare", "L2")[0] == 1


def test_embed_check():
    assert cli("embed-check", "sl3-psi")[0] == 0
    assert cli("embed-check", "sl3-psi-misprint")[0] == 1
    code, out, _ = cli("embed-check", "sp4r-theta", "--module")
    assert code == 0 and "(X1,P1) = X2" in out
    assert cli("embed-check", "sp4r-theta", "--module", "--convention", "column")[0] == 1


def test_fock():
    assert cli("fock", "--degree", "5")[0] == 0
    assert cli("fock", "--degree", "5", "--algebra")[0] == 0
    code, out, _ = cli("fock", "--degree", "3", "--algebra", "--emit")
    assert "[x2,xbar] = x3" in out


def test_catalog_commands():
    code, out, _ = cli("catalog", "list")
    assert code == 0 and "L(0,1)" in out
    code, out, _ = cli("catalog", "emit", "L1")
    assert lba.parse(out).get("L1") == catalog.build("L1")
    code, out, _ = cli("catalog", "emit", "M", "--param", "alpha=i")
    assert "[J,J] = i*X2" in out


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["check", "no-such-entry"],
        ["deform", "L1", "--coeffs", "1,2"],
        ["deform", "L1", "--coeffs", "1,x,3"],
        ["check", "L1", "--param", "alpha=1"],
        ["fock", "--degree", "1"],
    ],
)
def test_usage_errors(argv):
    assert cli(*argv)[0] == 2


def test_parse_error_exit_code(tmp_path):
    f = tmp_path / "broken.lba"
    f.write_text("algebra a\ndim 2\nbasis e1 e2\n[e1,e1] = e2\n[e1,e1] = e2\nend\n")
    code, _, err = cli("check", str(f))
    assert code == 2 and "line 5" in err


@pytest.mark.parametrize(
    "argv",
    [["invariants", "M(0)", "--cohomology"], ["obstruction", "L(0,0)"], ["catalog", "list"], ["cohomology", "L2", "--show-basis"]],
)
def test_output_is_deterministic(argv):
    first = cli(*argv)
    assert all(cli(*argv) == first for _ in range(2))
    machine = cli("--format", "machine", *argv)
    assert machine == cli("--format", "machine", *argv)


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "leibniz", "check", "L1"], capture_output=True, text=True)
    assert p.returncode == 0
