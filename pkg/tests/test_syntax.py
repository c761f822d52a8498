import json
import shutil
import subprocess
import sys

import pytest

from quadfactor.cli import main
from quadfactor.errors import DomainError, ParseError
from quadfactor.parse import (parse_element, parse_ideal_gens, parse_kelem,
                              parse_kpoly, parse_rpoly)
from quadfactor.qint import ring


CFG = ring(-5)


@pytest.mark.parametrize("text", [
    "x^2+1",
    "2*x+1-w",
    "(1+w)*x",
    "1/81*x^2+1",
    "w/3*x^2+2*x+1",
    "-(1-w)",
    "x^2-x",
    "-x^2+1",
    "(-1+2*w)/5",
])
def test_round_trip(text):
    assert str(parse_kpoly(text, CFG)) == text


def test_precedence():
    assert str(parse_kpoly("2*x^2+1", CFG)) == "2*x^2+1"
    assert parse_kpoly("2^3^2", CFG).coeff(0).u == 512
    assert str(parse_kpoly("-x^2", CFG)) == "-x^2"
    assert str(parse_kpoly("-2*x", CFG)) == "-2*x"
    assert str(parse_kpoly("x*x*x", CFG)) == "x^3"
    assert str(parse_kpoly("(1+w)^2", CFG)) == "-(4-2*w)"
    assert parse_kpoly("-(4-2*w)", CFG) == parse_kpoly("(1+w)^2", CFG)
    assert str(parse_kpoly("x/2", CFG)) == "1/2*x"
    assert str(parse_kpoly("1 + 2 * x", CFG)) == "2*x+1"


@pytest.mark.parametrize("bad", [
    "1+",
    "x^-2",
    "x^x",
    "1/0",
    "1/x",
    "(1+w",
    "2 2",
    "x$1",
    "x^65",
    "",
    ")",
])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_kpoly(bad, CFG)


def test_parse_error_position():
    with pytest.raises(ParseError) as exc:
        parse_kpoly("x?1", CFG)
    assert "position 1" in str(exc.value)


def test_typed_entry_points():
    assert parse_kelem("(1-w)/2", CFG).u.denominator == 2
    with pytest.raises(ParseError):
        parse_kelem("x+1", CFG)
    z = parse_element("3-w", CFG)
    assert (z.a, z.b) == (3, -1)
    with pytest.raises(DomainError):
        parse_element("(1-w)/2", CFG)
    f = parse_rpoly("2*x^2+2+w", CFG)
    assert f.degree() == 2
    with pytest.raises(DomainError):
        parse_rpoly("x/2", CFG)


def test_parse_ideal_gens():
    gens = parse_ideal_gens("<2; 1+w>", CFG)
    assert [str(g) for g in gens] == ["2", "1+w"]
    gens = parse_ideal_gens("2; 1+w", CFG)
    assert len(gens) == 2
    gens = parse_ideal_gens("<2;; (1-w)/2>", CFG)
    assert [str(g) for g in gens] == ["2", "(1-w)/2"]
    with pytest.raises(ParseError):
        parse_ideal_gens("<2; 1+w", CFG)
    with pytest.raises(ParseError):
        parse_ideal_gens("<>", CFG)
    with pytest.raises(ParseError):
        parse_ideal_gens(";", CFG)


def invoke(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_cli_factor(capsys):
    code, out, err = invoke(capsys, "--d", "-5", "factor", "6")
    assert code == 0 and err == ""
    payload = json.loads(out)
    assert payload["element"] == "6"
    assert payload["factorizations"] == [["1-w", "1+w"], ["2", "3"]]
    assert payload["length_set"] == [2]
    assert payload["elasticity"] == {"num": 1, "den": 1}


def test_cli_output_is_byte_identical(capsys):
    first = invoke(capsys, "--d", "-14", "factor", "81")
    second = invoke(capsys, "--d", "-14", "factor", "81")
    assert first == second
    assert first[0] == 0


def test_cli_ring_info(capsys):
    code, out, _ = invoke(capsys, "--d", "-5", "ring-info")
    assert code == 0
    payload = json.loads(out)
    assert payload == {"d": -5, "is_maximal": True, "class_number": 2,
                       "is_ufd": False, "units": ["1", "-1"]}
    code, out, _ = invoke(capsys, "--d", "-7", "ring-info")
    assert json.loads(out)["class_number"] is None


def test_cli_tsv(capsys):
    code, out, _ = invoke(capsys, "--d", "-5", "--format", "tsv",
                          "elasticity", "6")
    assert code == 0
    rows = dict(line.split("\t", 1) for line in out.strip().split("\n"))
    assert rows["element"] == "6"
    assert json.loads(rows["elasticity"]) == {"num": 1, "den": 1}


def test_cli_poly_factor(capsys):
    code, out, _ = invoke(capsys, "--d", "-14", "poly-factor", "81*x")
    assert code == 0
    payload = json.loads(out)
    assert payload["length_set"] == [3, 5]
    assert payload["elasticity"] == {"num": 5, "den": 3}
    assert ["3", "3", "3", "3", "x"] in payload["factorizations"]


def test_cli_irr(capsys):
    code, out, _ = invoke(capsys, "--d", "-14", "irr", "81*x")
    payload = json.loads(out)
    assert code == 0 and payload["irreducible"] is False
    assert payload["certificate"]["g"] == "3"
    assert payload["certificate"]["h"] == "27*x"
    code, out, _ = invoke(capsys, "--d", "-5", "irr", "x^2+x+1")
    payload = json.loads(out)
    assert payload["irreducible"] is True
    assert payload["certificate"] is None


def test_cli_kfactor(capsys):
    code, out, _ = invoke(capsys, "--d", "-5", "kfactor", "x^2+5")
    payload = json.loads(out)
    assert code == 0
    assert payload["unit"] == "1"
    assert payload["factors"] == ["x-w", "x+w"]


def test_cli_psp_check(capsys):
    code, out, _ = invoke(capsys, "--d", "-5", "psp-check", "(1+w)*x+2")
    payload = json.loads(out)
    assert code == 0
    assert payload["primitive"] is True
    assert payload["superprimitive"] is False
    assert payload["witness"] == "(1-w)/2"


def test_cli_gcd_v(capsys):
    code, out, _ = invoke(capsys, "--d", "-5", "gcd-v", "4", "2")
    payload = json.loads(out)
    assert code == 0 and payload["exists"] and payload["gcd"] == "2"
    code, out, _ = invoke(capsys, "--d", "-5", "gcd-v", "2", "1+w")
    payload = json.loads(out)
    assert payload["exists"] is False and payload["gcd"] is None


def test_cli_gamma_check(capsys):
    code, out, _ = invoke(capsys, "--d", "-5", "gamma-check",
                          "<2; 1+w>", "<1; (1-w)/2>")
    payload = json.loads(out)
    assert code == 0
    assert payload["product_v_trivial"] is True
    assert payload["b_v_principal"] is None
    assert payload["holds"] is False
    code, out, _ = invoke(capsys, "--d", "-1", "gamma-check",
                          "1+w", "(1-w)/2")
    assert json.loads(out)["holds"] is True


def test_cli_witness_p(capsys):
    code, out, _ = invoke(capsys, "--d", "-3", "witness-p")
    payload = json.loads(out)
    assert code == 0 and payload["witness"] == "x^2+x+1"
    code, out, _ = invoke(capsys, "--d", "-1", "witness-p")
    assert json.loads(out)["witness"] is None


def test_cli_d1(capsys):
    code, out, _ = invoke(capsys, "--d", "-5", "d1", "2*x")
    payload = json.loads(out)
    assert code == 0
    assert payload["classification"] == "reducible"
    assert payload["factorizations"] == [["2", "x"]]
    code, out, _ = invoke(capsys, "--d", "-5", "d1", "w/2*x")
    payload = json.loads(out)
    assert payload["classification"] == "reducible"
    assert payload["factorizations"] is None
    assert "not in Z[w]" in payload["note"]


def test_cli_d2_demo(capsys):
    code, out, _ = invoke(capsys, "--d", "-5", "d2-demo", "2", "1")
    payload = json.loads(out)
    assert code == 0
    assert payload["identity_holds"] and payload["factors_irreducible"]
    assert payload["lengths"] == [2, 3]
    assert payload["elasticity_lower_bound"] == {"num": 3, "den": 2}
    assert payload["observed_lengths"] == [2, 3]


def test_cli_exit_codes(capsys):
    code, out, err = invoke(capsys, "--d", "-5", "factor", "6+")
    assert code == 2 and out == ""
    assert json.loads(err)["error"]["type"] == "parse"
    code, out, err = invoke(capsys, "factor", "6")
    assert code == 2 and "required" in json.loads(err)["error"]["message"]
    code, out, err = invoke(capsys, "--d", "-5", "factor", "0")
    assert code == 3 and out == ""
    assert json.loads(err)["error"]["type"] == "domain"
    code, out, err = invoke(capsys, "--d", "-5", "factor", "(1-w)/2")
    assert code == 3
    code, out, err = invoke(capsys, "--d", "-5", "factor", "10^5")
    assert code == 4
    assert json.loads(err)["error"]["type"] == "resource"
    code, out, err = invoke(capsys, "--d", "-5", "no-such-command")
    assert code == 2
    assert json.loads(err)["error"]["type"] == "usage"
    code, out, err = invoke(capsys, "--d", "-4", "ring-info")
    assert code == 3


def test_cli_leading_minus_needs_separator(capsys):
    code, _, err = invoke(capsys, "--d", "-5", "poly-factor", "-x^2-5")
    assert code == 2
    code, out, _ = invoke(capsys, "--d", "-5", "poly-factor", "--", "-x^2-5")
    assert code == 0
    payload = json.loads(out)
    assert payload["factorizations"] == [["x-w", "x+w"]]


def test_package_surface():
    import quadfactor
    assert all(hasattr(quadfactor, n) for n in quadfactor.__all__)
    assert quadfactor.__version__


def test_cli_installed_script():
    script = shutil.which("quadfactor")
    cmd = [script] if script else [sys.executable, "-m", "quadfactor"]
    proc = subprocess.run(cmd + ["--d", "-5", "factor", "6"],
                          capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    assert payload["factorizations"] == [["1-w", "1+w"], ["2", "3"]]
