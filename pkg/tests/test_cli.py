import json

from nullcert.cli import main
from nullcert.field import PrimeField
from nullcert.poly import BivariatePolynomial, line_product
from nullcert.sets import ElementSet, GroupMode

from conftest import combine_oracle


def run(argv):
    return main(argv)


# ------------------------------------------------------------------ verify


def test_verify_exhaustive_ok(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = run(["verify", "--theorem", "mult", "--prime", "7", "--exhaustive",
                "--out", str(out)])
    assert code == 0
    data = json.loads(out.read_text())
    assert data["totals"]["counterexample_count"] == 0
    assert data["config"]["theorem"] == "mult"
    assert "OK" in capsys.readouterr().out


def test_verify_nonprime_is_config_error(capsys):
    assert run(["verify", "--theorem", "main", "--prime", "9", "--exhaustive"]) == 2
    assert "not prime" in capsys.readouterr().err


def test_verify_requires_sweep_choice():
    assert run(["verify", "--theorem", "mult", "--prime", "7"]) == 2


def test_verify_samples_need_seed():
    assert run(["verify", "--theorem", "cover", "--prime", "7", "--samples", "50"]) == 2


def test_verify_ks_needs_mode():
    assert run(["verify", "--theorem", "ks", "--prime", "5", "--exhaustive"]) == 2
    assert run(["verify", "--theorem", "ks", "--prime", "5", "--mode", "add",
                "--exhaustive"]) == 0


def test_verify_sampled_reports_are_byte_identical(tmp_path):
    out1, out2 = tmp_path / "r1.json", tmp_path / "r2.json"
    args = ["verify", "--theorem", "cover", "--prime", "7", "--samples", "1000",
            "--seed", "42"]
    assert run(args + ["--out", str(out1)]) == 0
    assert run(args + ["--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_verify_csv_format(tmp_path):
    out = tmp_path / "report.csv"
    assert run(["verify", "--theorem", "additive", "--prime", "5", "--prime", "7",
                "--exhaustive", "--format", "csv", "--out", str(out)]) == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0].startswith("theorem,p,")
    assert len(lines) == 3


def test_verify_budget_env_override(tmp_path, monkeypatch):
    monkeypatch.setenv("NULLCERT_BUDGET", "10")
    assert run(["verify", "--theorem", "mult", "--prime", "7", "--exhaustive"]) == 2
    monkeypatch.delenv("NULLCERT_BUDGET")
    assert run(["verify", "--theorem", "mult", "--prime", "7", "--exhaustive"]) == 0


# -------------------------------------------------------------- certificate


def test_certificate_default_theorem_from_mode(tmp_path):
    out = tmp_path / "cert.json"
    code = run(["certificate", "--mode", "mult", "--prime", "7",
                "--a", "1,2", "--b", "2,3", "--c", "3", "--out", str(out)])
    assert code == 0
    data = json.loads(out.read_text())
    assert data["theorem"] == "mult"
    assert data["verdict"] == "BoundCertified"
    assert data["exceptional"] == [1, 5]


def test_certificate_hypothesis_unmet_exit_code(tmp_path):
    out = tmp_path / "cert.json"
    code = run(["certificate", "--theorem", "cover", "--mode", "mult", "--prime", "7",
                "--a", "1,2,4", "--b", "1,2,4", "--out", str(out)])
    assert code == 3
    assert json.loads(out.read_text())["verdict"] == "HypothesisUnmet"


def test_certificate_reverify_round_trip(tmp_path):
    out = tmp_path / "cert.json"
    assert run(["certificate", "--mode", "add", "--prime", "7",
                "--a", "0,1", "--b", "1,2", "--c", "1", "--out", str(out)]) == 0
    original = out.read_bytes()
    assert run(["reverify", "--in", str(out)]) == 0
    assert out.read_bytes() == original


def test_certificate_main_single_set(tmp_path):
    out = tmp_path / "cert.json"
    code = run(["certificate", "--theorem", "main", "--mode", "mult", "--prime", "7",
                "--a", "2,3", "--c", "6", "--out", str(out)])
    assert code == 0
    data = json.loads(out.read_text())
    assert data["verdict"] == "DirectlySatisfied"
    assert data["summands"] == [1, 6]


def test_certificate_config_errors(tmp_path, capsys):
    assert run(["certificate", "--mode", "mult", "--prime", "7",
                "--a", "1,2", "--c", "3"]) == 2  # pair theorem needs --b
    assert run(["certificate", "--mode", "mult", "--prime", "7",
                "--a", "0,2", "--b", "1,2", "--c", "2"]) == 2  # 0 not a unit
    assert run(["certificate", "--theorem", "additive", "--mode", "mult",
                "--prime", "7", "--a", "1", "--b", "2", "--c", "3"]) == 2
    assert run(["certificate", "--mode", "mult", "--prime", "7",
                "--a", "1,9", "--b", "1,2", "--c", "2"]) == 2  # out of range


def test_reverify_detects_tampering(tmp_path):
    out = tmp_path / "cert.json"
    run(["certificate", "--mode", "mult", "--prime", "7",
         "--a", "1,2", "--b", "2,3", "--c", "3", "--out", str(out)])
    data = json.loads(out.read_text())
    data["tight"] = True
    out.write_text(json.dumps(data))
    assert run(["reverify", "--in", str(out)]) == 1


def test_reverify_missing_file():
    assert run(["reverify", "--in", "/nonexistent/cert.json"]) == 2


# -------------------------------------------------------------------- tight


def test_tight_json_output(tmp_path):
    out = tmp_path / "tight.json"
    assert run(["tight", "--n", "4", "--format", "json", "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["p"] == 5 and data["w"] == 2
    assert data["A"] == [1, 2, 3, 4] and data["B"] == [1, 2, 4]
    assert data["product_size"] == 4
    assert data["unique_representation"] == [3, 2]


def test_tight_text_output(capsys):
    assert run(["tight", "--n", "5"]) == 0
    out = capsys.readouterr().out
    assert "p = 7" in out and "w = 3" in out


def test_tight_degenerate_and_usage_error(capsys):
    assert run(["tight", "--n", "3"]) == 0
    assert "degenerate = True" in capsys.readouterr().out
    assert run(["tight", "--n", "2"]) == 2


def test_tight_output_is_deterministic(tmp_path):
    out1, out2 = tmp_path / "t1.json", tmp_path / "t2.json"
    run(["tight", "--n", "6", "--format", "json", "--out", str(out1)])
    run(["tight", "--n", "6", "--format", "json", "--out", str(out2)])
    assert out1.read_bytes() == out2.read_bytes()


# -------------------------------------------------------------- coefficient


def test_coefficient_command(tmp_path, capsys):
    poly_file = tmp_path / "poly.json"
    poly_file.write_text(json.dumps([[1, 1, 1]]))  # f = xy
    code = run(["coefficient", "--prime", "7", "--poly", str(poly_file),
                "--a", "1,2", "--b", "3,4"])
    assert code == 0
    out = capsys.readouterr().out
    assert "coefficient: 1" in out and "direct: 1" in out


def test_coefficient_degree_violation(tmp_path, capsys):
    poly_file = tmp_path / "poly.json"
    poly_file.write_text(json.dumps([[2, 2, 1]]))  # degree 4 > 2x2 grid bound
    code = run(["coefficient", "--prime", "7", "--poly", str(poly_file),
                "--a", "1,2", "--b", "3,4"])
    assert code == 2
    assert "degree" in capsys.readouterr().err


def test_coefficient_matches_summand_sum_on_tight_family(tmp_path, capsys):
    # the two-representation polynomial for A = GF(5)*, target 1: the
    # interpolated coefficient must equal the sum of the two closed-form
    # summands (both are 0 here, since the pair is power-tied)
    p = 5
    field = PrimeField(p)
    A_vals = [1, 2, 3, 4]
    prods = sorted(combine_oracle("mult", p, A_vals, A_vals, restricted=True))
    lines = [(1, (-g) % p, 0) for g in prods if g != 1]
    f = line_product(field, lines).multiply(
        BivariatePolynomial(field, {(1, 1): 1, (0, 0): p - 1})
    )
    poly_file = tmp_path / "poly.json"
    poly_file.write_text(json.dumps(f.to_triples()))
    a_inv = ",".join(str(pow(v, -1, p)) for v in A_vals)
    code = run(["coefficient", "--prime", "5", "--poly", str(poly_file),
                "--a", "1,2,3,4", "--b", a_inv])
    assert code == 0
    out = capsys.readouterr().out
    assert "coefficient: 0" in out
    from nullcert.certify import symmetric_pair_summand
    A = ElementSet(field, GroupMode.MULTIPLICATIVE, A_vals)
    s1 = symmetric_pair_summand(2, 3, A, 1)
    s2 = symmetric_pair_summand(3, 2, A, 1)
    assert (s1 + s2).value == 0


def test_unknown_subcommand_usage():
    assert run(["frobnicate"]) == 2
