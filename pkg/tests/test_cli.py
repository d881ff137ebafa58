import json

import pytest

from ncinv.cache import ResultCache
from ncinv.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestDim:
    def test_examples(self, capsys, tmp_path):
        cache = ["--cache-dir", str(tmp_path)]
        assert run_cli(capsys, "dim", "--d", "2", "--m", "2", *cache) == (0, "1\n", "")
        assert run_cli(capsys, "dim", "--d", "2", "--m", "4", *cache) == (0, "3\n", "")
        assert run_cli(capsys, "dim", "--d", "3", "--m", "3", *cache) == (0, "0\n", "")

    def test_usage_error_exit_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["dim", "--d", "2"])
        assert exc.value.code == 2
        with pytest.raises(SystemExit) as exc:
            main(["dim", "--d", "-1", "--m", "2"])
        assert exc.value.code == 2


class TestBasis:
    def test_quadratic_text(self, capsys):
        code, out, _ = run_cli(capsys, "basis", "--d", "2", "--m", "2")
        assert code == 0
        assert out == "a2·a0 - 2·a1·a1 + a0·a2\n"

    def test_linear_text(self, capsys):
        code, out, _ = run_cli(capsys, "basis", "--d", "1", "--m", "2")
        assert code == 0
        assert out == "a1·a0 - a0·a1\n"

    def test_empty_exit_zero(self, capsys):
        code, out, _ = run_cli(capsys, "basis", "--d", "1", "--m", "3")
        assert code == 0
        assert out == ""

    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "basis", "--d", "2", "--m", "4", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert len(data) == 3
        assert all(entry["d"] == 2 and entry["m"] == 4 for entry in data)


class TestHilbert:
    def test_enumeration_row(self, capsys, tmp_path):
        code, out, _ = run_cli(
            capsys, "hilbert", "--d", "2", "--max-m", "7",
            "--method", "enumeration", "--cache-dir", str(tmp_path),
        )
        assert code == 0
        assert out == "1,0,1,1,3,6,15,36\n"

    def test_chebyshev_row(self, capsys, tmp_path):
        code, out, _ = run_cli(
            capsys, "hilbert", "--d", "1", "--max-m", "6",
            "--method", "chebyshev", "--cache-dir", str(tmp_path),
        )
        assert code == 0
        assert out == "1,0,1,0,2,0,5\n"

    def test_all_csv(self, capsys, tmp_path):
        code, out, err = run_cli(
            capsys, "hilbert", "--d", "2", "--max-m", "4",
            "--method", "all", "--cache-dir", str(tmp_path),
        )
        assert code == 0
        assert err == ""
        lines = out.splitlines()
        assert lines[0] == "m,enum,cheb,quad,abs_err"
        assert len(lines) == 6
        assert lines[3].startswith("2,1,1,")

    def test_json_format(self, capsys, tmp_path):
        code, out, _ = run_cli(
            capsys, "hilbert", "--d", "1", "--max-m", "4",
            "--method", "all", "--format", "json", "--cache-dir", str(tmp_path),
        )
        assert code == 0
        data = json.loads(out)
        assert data["exact_mismatch"] is False
        assert data["quad_above_tol"] is False


class TestRewrite:
    def write(self, tmp_path, payload):
        path = tmp_path / "expr.json"
        path.write_text(json.dumps(payload), encoding="utf-8")
        return str(path)

    def test_crossing_two_terms(self, capsys, tmp_path):
        path = self.write(tmp_path, {
            "m": 4, "d": 1,
            "terms": [{"coeff": "1", "chords": [[1, 3], [2, 4]], "sign": 1}],
        })
        code, out, _ = run_cli(capsys, "rewrite", path)
        assert code == 0
        data = json.loads(out)
        assert [t["chords"] for t in data["terms"]] == [[[1, 2], [3, 4]], [[1, 4], [2, 3]]]

    def test_noncrossing_echo(self, capsys, tmp_path):
        payload = {
            "m": 4, "d": 1,
            "terms": [{"coeff": "2/3", "chords": [[1, 4], [2, 3]], "sign": 1}],
        }
        path = self.write(tmp_path, payload)
        code, out, _ = run_cli(capsys, "rewrite", path)
        assert code == 0
        assert json.loads(out) == payload

    def test_vanishing_bracket_exit_2(self, capsys, tmp_path):
        path = self.write(tmp_path, {
            "m": 1, "d": 2,
            "terms": [{"coeff": "1", "chords": [[1, 2]], "sign": 1}],
        })
        code, _, err = run_cli(capsys, "rewrite", path)
        assert code == 2
        assert "vanishing bracket" in err

    def test_malformed_json_exit_2(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json", encoding="utf-8")
        code, _, err = run_cli(capsys, "rewrite", str(path))
        assert code == 2
        assert err

    def test_missing_file_exit_2(self, capsys, tmp_path):
        code, _, err = run_cli(capsys, "rewrite", str(tmp_path / "nope.json"))
        assert code == 2


class TestVerify:
    def test_quadratic_pass(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--d", "2", "--m", "2")
        assert code == 0
        assert out.count("PASS") == 1

    def test_three_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--d", "2", "--m", "4")
        assert code == 0
        assert out.count("PASS") == 3
        assert "FAIL" not in out

    def test_seed_reproducible(self, capsys):
        first = run_cli(capsys, "verify", "--d", "1", "--m", "2", "--seed", "7")
        second = run_cli(capsys, "verify", "--d", "1", "--m", "2", "--seed", "7")
        assert first == second
        assert first[0] == 0

    def test_extra_witness_matrix(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--d", "1", "--m", "2",
            "--witness-matrix", "2", "1", "1", "1",
        )
        assert code == 0

    def test_bad_witness_matrix_exit_2(self, capsys):
        code, _, err = run_cli(
            capsys, "verify", "--d", "1", "--m", "2",
            "--witness-matrix", "2", "0", "0", "2",
        )
        assert code == 2
        assert "determinant" in err


class TestMoments:
    def test_semicircle(self, capsys):
        code, out, _ = run_cli(capsys, "moments", "--rule", "semicircle", "--n", "8")
        assert code == 0
        assert out == "1,0,1,0,2,0,5,0,14\n"

    def test_free_poisson(self, capsys):
        code, out, _ = run_cli(capsys, "moments", "--rule", "free-poisson", "--n", "5")
        assert code == 0
        assert out == "1,1,2,5,14,42\n"

    def test_table_rationals(self, capsys):
        code, out, _ = run_cli(capsys, "moments", "--rule", "table:[1/2]", "--n", "3")
        assert code == 0
        assert out == "1,1/2,1/4,1/8\n"

    def test_unknown_rule_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "moments", "--rule", "cauchy", "--n", "3")
        assert code == 2


class TestCache:
    def test_cached_and_fresh_byte_identical(self, capsys, tmp_path):
        args = ["hilbert", "--d", "2", "--max-m", "5", "--method", "enumeration",
                "--cache-dir", str(tmp_path)]
        cold = run_cli(capsys, *args)
        assert list(tmp_path.glob("*.json"))  # entry written
        warm = run_cli(capsys, *args)
        fresh = run_cli(capsys, *args, "--no-cache")
        assert cold == warm == fresh

    def test_no_cache_writes_nothing(self, capsys, tmp_path):
        run_cli(capsys, "dim", "--d", "2", "--m", "3",
                "--cache-dir", str(tmp_path), "--no-cache")
        assert not list(tmp_path.glob("*.json"))

    def test_corrupt_entry_recomputed(self, capsys, tmp_path):
        args = ["dim", "--d", "2", "--m", "4", "--cache-dir", str(tmp_path)]
        good = run_cli(capsys, *args)
        entry = next(tmp_path.glob("*.json"))
        entry.write_text("{broken", encoding="utf-8")
        again = run_cli(capsys, *args)
        assert again == good

    def test_mismatched_entry_ignored(self, tmp_path):
        cache = ResultCache(tmp_path)
        cache.store("dim", {"d": 2, "m": 2}, 1)
        entry = next(tmp_path.glob("*.json"))
        data = json.loads(entry.read_text(encoding="utf-8"))
        data["params"] = {"d": 2, "m": 3}
        entry.write_text(json.dumps(data), encoding="utf-8")
        assert cache.lookup("dim", {"d": 2, "m": 2}) is None

    def test_env_var_default(self, monkeypatch, tmp_path):
        monkeypatch.setenv("NCINV_CACHE_DIR", str(tmp_path / "envcache"))
        cache = ResultCache()
        assert cache.directory == tmp_path / "envcache"
