import io
import json
from math import comb

import pytest

from tokensign import family, format_graph
from tokensign.cli import frac_text, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_unbalance_prints_fraction_and_decimal():
    code, out, _ = call("unbalance", "--family", "Kn_minus", "--n", "5")
    assert code == 0 and out.splitlines()[0] == "132/323 ≈ 0.4087"


def test_unbalance_json_fraction_schema():
    code, out, _ = call("unbalance", "--family", "Kn_minus", "--n", "5", "--format", "json")
    data = json.loads(out)
    assert data["ell"] == {"num": "132", "den": "323", "decimal": pytest.approx(132 / 323)}


def test_table_cycles_last_row():
    code, out, _ = call("table", "cycles", "--n-max", "15")
    last = out.strip().splitlines()[-1].split()
    assert code == 0 and last[0] == "15" and last[1] == "2/4709" and "0.0004247" in last


def test_table_output_is_byte_stable():
    a = call("table", "completes", "--n-max", "9", "--format", "csv")[1]
    b = call("table", "completes", "--n-max", "9", "--format", "csv")[1]
    assert a == b and a.startswith("n,ell(Kn^-),ell(-Kn^+),ell(-Kn)\n")


def test_table_petersen():
    code, out, _ = call("table", "petersen", "--format", "json")
    classes = json.loads(out)["classes"]
    assert code == 0 and len(classes) == 6 and sum(c["size"] for c in classes) == 64


def test_verify_all_sweep():
    code, out, _ = call("verify", "all", "--seed", "7", "--trials", "10")
    assert code == 0 and out.strip().endswith("failures: 0")


def test_verify_failure_sets_exit_code():
    code, out, _ = call("verify", "complement", "--trials", "2", "--tol", "-1", "--format", "json")
    assert code == 1 and json.loads(out)["summary"]["complement"]["failed"] == 2


def test_token_round_trip_through_info(tmp_path):
    code, out, _ = call("token", "--family", "k5_three_negative", "--k", "2")
    path = tmp_path / "f2.txt"
    path.write_text(out)
    code, info, _ = call("info", "--file", str(path), "--format", "json")
    data = json.loads(info)
    g = family("k5_three_negative")
    assert (data["n"], data["m_pos"], data["m_neg"]) == (comb(5, 2), 3 * g.m_pos, 3 * g.m_neg)


def test_file_input_and_switch(tmp_path):
    path = tmp_path / "g.txt"
    path.write_text(format_graph(family("paw_balanced")))
    code, out, _ = call("switch", "--file", str(path), "--set", "1,2")
    assert code == 0 and "-1" not in out
    code, out, _ = call("switch", "--file", str(path), "--set", "++--")
    assert code == 0 and "-1" not in out


def test_mask_over_petersen_edges():
    code, out, _ = call("info", "--family", "petersen", "--mask", "0b111", "--format", "json")
    assert json.loads(out)["m_neg"] == 3


@pytest.mark.parametrize("argv", [
    ("info", "--family", "nope"),
    ("info", "--family", "Cn_minus", "--n", "2"),
    ("info",),
    ("info", "--family", "Cn_minus", "--n", "4", "--file", "x"),
    ("table", "squares"),
    ("switch", "--family", "paw_balanced"),
    ("switch", "--family", "paw_balanced", "--set", "9"),
    ("info", "--family", "Cn_minus", "--n", "4", "--mask", "0x100"),
    ("token", "--family", "paw_balanced"),
    ("info", "--file", "/nonexistent/graph.txt"),
])
def test_usage_errors_exit_two(argv):
    code, _, err = call(*argv)
    assert code == 2 and err.startswith("usage error")


def test_parse_error_names_the_error(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("3 1\n1 1 +1\n")
    code, _, err = call("info", "--file", str(path))
    assert code == 2 and "LoopEdge" in err


def test_computational_error_exits_one():
    code, _, err = call("complement", "--family", "Cn_minus", "--n", "5")
    assert code == 1 and "NotBalanced" in err


def test_guard_override():
    code, _, err = call("frustration", "--family", "Cn_minus", "--n", "12", "--max-vertices", "8")
    assert code == 1 and "TooLarge" in err


@pytest.mark.parametrize("cmd", ["info", "balance", "negate", "frustration", "unbalance",
                                 "bounds", "classes", "signsym", "spectrum"])
@pytest.mark.parametrize("fmt", ["text", "json", "csv"])
def test_every_graph_command_in_every_format(cmd, fmt):
    code, out, _ = call(cmd, "--family", "Cn_minus", "--n", "4", "--format", fmt)
    assert code == 0 and out
    if fmt == "json":
        json.loads(out)


def test_spectrum_laplacian_of_token_graph():
    code, out, _ = call("spectrum", "--family", "paw_balanced", "--k", "2", "--matrix", "laplacian", "--format", "json")
    data = json.loads(out)
    assert data["eigenvalues"] == pytest.approx([0, 1, 3, 3, 4, 5], abs=1e-9)


def test_signsym_and_bounds():
    assert call("signsym", "--family", "bird")[1].startswith("sign-symmetric")
    code, out, _ = call("bounds", "--family", "all_neg_Kn", "--n", "5", "--k", "2")
    assert code == 0 and out.strip() == "4 <= 10 <= 12: holds"


def test_explorer_command():
    code, out, _ = call("explore-p45", "--trials", "10", "--n-max", "5", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["trials"] == 10 and set(data["counterexamples"]) == {"1", "2", "3"}


def test_frac_text():
    from fractions import Fraction
    assert frac_text(Fraction(2, 5)) == "2/5 ≈ 0.4"
    assert frac_text(Fraction(0)) == "0"
