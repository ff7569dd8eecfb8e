from __future__ import annotations

import json

import pytest

from braidlink.cli import main
from braidlink.documents import BraidDocument, SchemaError, dumps, encode_braid
from braidlink.words import parse_loop, realize_loop


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestInvariantsCommand:
    def test_commutator_report(self, capsys):
        code, out, err = run_cli(capsys, "invariants", "--format", "loop",
                                 "-e", "[x,y]", "--samples", "64")
        assert code == 0
        report = json.loads(out)
        assert report["lk"] == 0
        assert report["lk_tilde"] == 0
        assert report["brunn"] is True
        assert report["hopf"] == 1
        assert abs(report["hopf_raw"] - 1.0) < 1e-3

    def test_empty_word(self, capsys):
        code, out, _ = run_cli(capsys, "invariants", "-e", "", "--samples", "32")
        assert code == 0
        assert json.loads(out)["hopf"] == 0

    def test_gate_omits_hopf_field(self, capsys):
        code, out, _ = run_cli(capsys, "invariants", "-e", "x", "--samples", "32")
        assert code == 0
        report = json.loads(out)
        assert report["brunn"] is False
        assert "hopf" not in report and "hopf_raw" not in report

    def test_artin_format(self, capsys):
        code, out, _ = run_cli(capsys, "invariants", "--format", "artin",
                               "-e", "s1^2", "--samples", "32")
        assert code == 0
        assert json.loads(out)["brunn"] is False

    def test_deterministic_bytes(self, capsys):
        args = ("invariants", "-e", "[x,y] [y,x] x X", "--samples", "64")
        _, out1, _ = run_cli(capsys, *args)
        _, out2, _ = run_cli(capsys, *args)
        assert out1 == out2

    def test_syntax_error_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "invariants", "-e", "[x,")
        assert code == 2
        assert json.loads(err)["error"] == "WordSyntaxError"

    def test_non_pure_artin_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "invariants", "--format", "artin", "-e", "s1")
        assert code == 2

    def test_tiny_tolerance_exits_3(self, capsys):
        code, _, err = run_cli(capsys, "invariants", "-e", "[x,y]",
                               "--samples", "64", "--tol", "1e-30")
        assert code == 3
        assert json.loads(err)["error"] == "ConvergenceError"

    def test_start_lambda_flag(self, capsys):
        base = run_cli(capsys, "invariants", "-e", "[x,y]", "--samples", "64")
        moved = run_cli(capsys, "invariants", "-e", "[x,y]", "--samples", "64",
                        "--start-lambda", "0.7")
        assert json.loads(base[1])["hopf"] == json.loads(moved[1])["hopf"]
        assert abs(json.loads(base[1])["hopf_raw"]
                   - json.loads(moved[1])["hopf_raw"]) < 1e-6


class TestJsonInput:
    def test_word_and_samples_agree(self, tmp_path, capsys):
        braid = realize_loop(parse_loop("[x,y]"), 64)
        doc = tmp_path / "braid.json"
        doc.write_text(dumps(encode_braid(braid)))
        code_w, out_w, _ = run_cli(capsys, "invariants", "-e", "[x,y]",
                                   "--samples", "64")
        code_j, out_j, _ = run_cli(capsys, "invariants", "--format", "json",
                                   "--input", str(doc))
        assert code_w == code_j == 0
        assert json.loads(out_w) == json.loads(out_j)

    def test_degenerate_document_exits_2(self, tmp_path, capsys):
        doc = tmp_path / "bad.json"
        strand = [[0.0, 0.0]] * 8
        doc.write_text(json.dumps({
            "version": 1,
            "strands": [strand, strand, [[1.0, 0.0]] * 8, [[2.0, 0.0]] * 8],
        }))
        code, _, err = run_cli(capsys, "invariants", "--format", "json",
                               "--input", str(doc))
        assert code == 2

    def test_two_payloads_rejected(self):
        with pytest.raises(SchemaError):
            BraidDocument.from_json_dict({"version": 1, "loop": "x", "artin": "s1^2"})

    def test_unknown_field_rejected(self):
        with pytest.raises(SchemaError):
            BraidDocument.from_json_dict({"version": 1, "loop": "x", "extra": 1})


class TestNormalizeCommand:
    def test_constant_curve(self, capsys):
        code, out, _ = run_cli(capsys, "normalize", "-e", "", "--samples", "32")
        assert code == 0
        doc = json.loads(out)
        assert doc["strands"][2][0] == "inf"
        assert all(s == [2.0, 0.0] for s in doc["strands"][3])

    def test_round_trip_through_invariants(self, tmp_path, capsys):
        code, out, _ = run_cli(capsys, "normalize", "-e", "[x,y]", "--samples", "64")
        assert code == 0
        doc = tmp_path / "norm.json"
        doc.write_text(out)
        direct = run_cli(capsys, "invariants", "-e", "[x,y]", "--samples", "64")
        relayed = run_cli(capsys, "invariants", "--format", "json",
                          "--input", str(doc))
        a, b = json.loads(direct[1]), json.loads(relayed[1])
        assert (a["lk"], a["lk_tilde"], a["brunn"], a["hopf"]) == \
               (b["lk"], b["lk_tilde"], b["brunn"], b["hopf"])
        assert abs(a["hopf_raw"] - b["hopf_raw"]) < 1e-9

    def test_borromean_gamma_has_null_windings(self, capsys):
        code, out, _ = run_cli(capsys, "normalize", "-e", "[x,y]", "--samples", "64")
        doc = json.loads(out)
        import numpy as np
        from braidlink.mobius import NormalizedPath
        from braidlink import winding_discrete
        gamma = np.array([complex(re, im) for re, im in doc["strands"][3]])
        path = NormalizedPath.from_samples(gamma)
        assert winding_discrete(path, 0) == 0
        assert winding_discrete(path, 1) == 0


class TestVerifyCommand:
    def test_small_sweep_passes(self, capsys):
        code, out, err = run_cli(capsys, "verify", "--count", "6", "--seed", "7",
                                 "--samples", "64")
        assert code == 0
        summary = json.loads(out)
        assert summary["ok"] is True
        assert {s["name"] for s in summary["suites"]} >= {
            "lk_oracle", "hopf_homomorphism", "hopf_integrality",
            "byparts_identity", "convergence", "transform_table",
        }
        assert "PASS" in err

    def test_zero_count_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--count", "0"])
        assert exc.value.code == 2

    def test_tolerance_below_quadrature_floor_fails(self, capsys):
        # The refinement residual floor sits near machine epsilon; asking for
        # less reports the offending braid as a counterexample.
        code, out, err = run_cli(capsys, "verify", "--count", "4", "--seed", "7",
                                 "--samples", "64", "--tol", "1e-16")
        assert code == 1
        assert json.loads(out)["ok"] is False
        assert "counterexample" in err
