"""Command-line behaviors: exit codes, outputs, file discipline."""

import json

import pytest

from clustercrypt import cli
from clustercrypt.cli import main


@pytest.fixture
def ex1_files(tmp_path):
    params = tmp_path / "ex1.json"
    key = tmp_path / "ex1key.json"
    assert (
        main(
            [
                "params",
                "--p", "2", "--r", "5", "--f", "1,0,1,0,0,1",
                "--family", "A", "--rank", "5",
                "--out", str(params),
            ]
        )
        == 0
    )
    key.write_text('{"k0":0,"seq":[1,4,0,3,1]}')
    return params, key


class TestParams:
    def test_writes_valid_file(self, tmp_path, capsys):
        out = tmp_path / "p.json"
        code = main(
            [
                "params",
                "--p", "101", "--r", "7", "--f", "46,0,1,1,0,74,0,1",
                "--family", "D", "--rank", "7",
                "--out", str(out),
            ]
        )
        assert code == 0
        payload = json.loads(out.read_text())
        assert payload["p"] == 101
        assert payload["diagram"] == {"family": "D", "rank": 7}

    def test_reducible_modulus_is_usage_error(self, tmp_path):
        code = main(
            [
                "params",
                "--p", "2", "--r", "2", "--f", "1,0,1",
                "--family", "A", "--rank", "2",
                "--out", str(tmp_path / "p.json"),
            ]
        )
        assert code == 64


class TestKeygen:
    def test_deterministic_with_seed(self, ex1_files, tmp_path):
        params, _ = ex1_files
        out1, out2 = tmp_path / "k1.json", tmp_path / "k2.json"
        for out in (out1, out2):
            assert (
                main(
                    [
                        "keygen",
                        "--params", str(params),
                        "--length", "6",
                        "--rng-seed", "42",
                        "--out", str(out),
                    ]
                )
                == 0
            )
        assert out1.read_bytes() == out2.read_bytes()

    def test_echoes_generated_seed(self, ex1_files, tmp_path, capsys):
        params, _ = ex1_files
        code = main(
            [
                "keygen",
                "--params", str(params),
                "--length", "4",
                "--out", str(tmp_path / "k.json"),
            ]
        )
        assert code == 0
        assert "rng-seed:" in capsys.readouterr().out


class TestEncryptDecrypt:
    def test_worked_example_values(self, ex1_files, tmp_path, capsys):
        params, key = ex1_files
        out = tmp_path / "ct.json"
        code = main(
            [
                "encrypt",
                "--params", str(params),
                "--key", str(key),
                "--message", "F",
                "--out", str(out),
            ]
        )
        assert code == 0
        assert "[11, 18, 4, 7, 25]" in capsys.readouterr().out
        code = main(
            [
                "decrypt",
                "--params", str(params),
                "--key", str(key),
                "--ciphertext", str(out),
            ]
        )
        assert code == 0
        assert "6 (F)" in capsys.readouterr().out

    def test_reference_path_writes_identical_file(self, ex1_files, tmp_path):
        params, key = ex1_files
        fast, ref = tmp_path / "fast.json", tmp_path / "ref.json"
        for path, extra in ((fast, []), (ref, ["--reference-path"])):
            assert (
                main(
                    [
                        "encrypt",
                        "--params", str(params),
                        "--key", str(key),
                        "--message", "F",
                        "--out", str(path),
                    ]
                    + extra
                )
                == 0
            )
        assert fast.read_bytes() == ref.read_bytes()

    def test_zero_message_exits_2_without_output(self, ex1_files, tmp_path):
        params, key = ex1_files
        out = tmp_path / "ct.json"
        code = main(
            [
                "encrypt",
                "--params", str(params),
                "--key", str(key),
                "--message", "0",
                "--out", str(out),
            ]
        )
        assert code == 2
        assert not out.exists()

    def test_wrong_key_exits_3(self, ex1_files, tmp_path):
        params, key = ex1_files
        out = tmp_path / "ct.json"
        main(
            [
                "encrypt",
                "--params", str(params),
                "--key", str(key),
                "--message", "F",
                "--out", str(out),
            ]
        )
        wrong = tmp_path / "wrong.json"
        wrong.write_text('{"k0":0,"seq":[1,4,0,3,2]}')
        code = main(
            [
                "decrypt",
                "--params", str(params),
                "--key", str(wrong),
                "--ciphertext", str(out),
            ]
        )
        assert code == 3

    def test_multi_letter_text(self, ex1_files, tmp_path, capsys):
        params, key = ex1_files
        out = tmp_path / "ct.json"
        assert (
            main(
                [
                    "encrypt",
                    "--params", str(params),
                    "--key", str(key),
                    "--message", "HELP",
                    "--out", str(out),
                ]
            )
            == 0
        )
        assert len(out.read_bytes().splitlines()) == 4
        capsys.readouterr()
        assert (
            main(
                [
                    "decrypt",
                    "--params", str(params),
                    "--key", str(key),
                    "--ciphertext", str(out),
                ]
            )
            == 0
        )
        assert "text: HELP" in capsys.readouterr().out

    def test_integer_message_example2(self, tmp_path, capsys):
        params = tmp_path / "ex2.json"
        key = tmp_path / "ex2key.json"
        main(
            [
                "params",
                "--p", "101", "--r", "7", "--f", "46,0,1,1,0,74,0,1",
                "--family", "D", "--rank", "7",
                "--out", str(params),
            ]
        )
        key.write_text('{"k0":3,"seq":[2,3,4,3]}')
        out = tmp_path / "ct.json"
        capsys.readouterr()
        assert (
            main(
                [
                    "encrypt",
                    "--params", str(params),
                    "--key", str(key),
                    "--message", "38927",
                    "--out", str(out),
                ]
            )
            == 0
        )
        assert "12799379480831" in capsys.readouterr().out
        assert (
            main(
                [
                    "decrypt",
                    "--params", str(params),
                    "--key", str(key),
                    "--ciphertext", str(out),
                ]
            )
            == 0
        )
        assert "38927" in capsys.readouterr().out


class TestGraphProbe:
    def test_graph_counts(self, capsys):
        assert main(["graph", "--family", "A", "--rank", "3"]) == 0
        out = capsys.readouterr().out
        assert "mutation classes: 14" in out
        assert "labeled seeds:    84" in out

    def test_graph_needs_arguments(self):
        assert main(["graph"]) == 64

    def test_graph_json(self, capsys):
        assert main(["graph", "--family", "B", "--rank", "2", "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["vertices"] == 6

    def test_probe_csv(self, capsys):
        assert (
            main(
                [
                    "probe",
                    "--families", "A,B",
                    "--min-rank", "2",
                    "--max-rank", "3",
                    "--format", "csv",
                ]
            )
            == 0
        )
        out = capsys.readouterr().out
        assert out.splitlines()[0].startswith("family,rank,")
        assert "False" in out  # the A-family closed-form flag


class TestSelftest:
    def test_passes_on_healthy_build(self, capsys):
        assert main(["selftest"]) == 0
        out = capsys.readouterr().out
        assert out.count("PASS") == len(cli.SELFTEST_CHECKS)
        assert "FAIL" not in out

    def test_csv_format(self, capsys):
        assert main(["selftest", "--format", "csv"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "check,passed"
        assert all(line.endswith("True") for line in lines[1:])

    def test_detects_injected_mutation_bug(self, capsys, monkeypatch):
        from clustercrypt.cluster import ExchangeMatrix

        def broken_mutate(matrix, k):
            # dropped sign factor on the adjustment term: the result is no
            # longer odd under negating row/column k, so mutating twice no
            # longer returns (or even stays sign-skew-symmetric)
            b = matrix.rows
            n = matrix.n
            rows = []
            for i in range(n):
                row = []
                for j in range(n):
                    if i == k or j == k:
                        row.append(-b[i][j])
                    else:
                        row.append(b[i][j] + max(0, b[i][k] * b[k][j]))
                rows.append(row)
            return ExchangeMatrix.from_lists(rows)

        monkeypatch.setattr(cli, "matrix_mutate", broken_mutate)
        assert main(["selftest"]) == 1
        out = capsys.readouterr().out
        assert "FAIL matrix-involution" in out
