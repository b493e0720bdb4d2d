import json

import pytest

from isrlab.cli import main
from isrlab.expectation import spec_to_dict
from isrlab.f2 import F2Vector
from isrlab.groups import Affine
from isrlab.algebra import unit
from isrlab.expectation import SubalgebraSpec

SWAP_JSON = '{"family": "affine", "g": "0110", "n": 2, "v": "00"}'


class TestRun:
    def test_mexo_exit_zero(self, tmp_path):
        out = tmp_path / "report.json"
        code = main(["run", "--suite", "mexo", "--n", "2", "--out", str(out)])
        assert code == 0
        doc = json.loads(out.read_text())
        assert doc["suite"] == "mexo"
        assert all(c["pass"] for r in doc["reports"] for c in r["checks"])

    def test_unknown_suite(self, capsys):
        assert main(["run", "--suite", "mystery"]) == 2
        assert "unknown suite" in capsys.readouterr().err

    def test_deterministic_bytes(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        for out in (a, b):
            assert main(
                ["run", "--suite", "characters", "--seed", "7", "--out", str(out)]
            ) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_stdout_when_no_out(self, capsys):
        assert main(["run", "--suite", "cantor"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["reports"][0]["name"] == "cantor-case3"

    def test_cap_flag_propagates(self):
        # a tiny cap makes the closure BFS overflow, surfaced as exit 2
        assert main(["run", "--suite", "closures", "--cap", "10"]) == 2

    def test_cap_env(self, monkeypatch):
        monkeypatch.setenv("ISRLAB_CAP", "10")
        assert main(["run", "--suite", "closures"]) == 2


class TestExpect:
    def test_builtin_mexo_swap(self, capsys):
        assert main(["expect", "mexo:2", SWAP_JSON]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["character"] == {"re": "1/2", "im": "0/1"}
        assert doc["residual_norm_sq"] == "1/2"
        assert len(doc["expectation"]) == 2

    def test_builtin_mq_swap(self, capsys):
        elem = '{"family": "wreath", "n": 2, "perm": [2, 1], "v": "00"}'
        assert main(["expect", "mq:2", elem]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["character"] == {"re": "1/4", "im": "0/1"}

    def test_spec_file(self, tmp_path, capsys):
        basis = [unit(Affine.vector(F2Vector(b))) for b in range(4)]
        spec = SubalgebraSpec("vectors", basis, [b.support().pop() for b in basis])
        path = tmp_path / "spec.json"
        path.write_text(json.dumps(spec_to_dict(spec)))
        elem = '{"family": "affine", "g": "1", "n": 1, "v": "1"}'
        assert main(["expect", str(path), elem]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["character"] == {"re": "1/1", "im": "0/1"}
        assert doc["residual_norm_sq"] == "0/1"

    def test_bad_spec_name(self, capsys):
        assert main(["expect", "nope:2", SWAP_JSON]) == 2
        assert "error" in capsys.readouterr().err

    def test_bad_element(self, capsys):
        assert main(["expect", "mexo:2", "not-json"]) == 2


class TestTables:
    def test_characters_row_count(self, capsys):
        assert main(["tables", "--table", "characters", "--n", "2"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        # comment + header + 24 group elements
        assert len(lines) == 26

    def test_closures(self, capsys):
        assert main(["tables", "--table", "closures"]) == 0
        out = capsys.readouterr().out
        assert "1344" in out

    def test_fpc_monotone_columns(self, capsys):
        assert main(["tables", "--table", "fpc"]) == 0
        rows = [
            line.split("\t")
            for line in capsys.readouterr().out.strip().splitlines()[2:]
        ]
        assert rows
        for desc, sizes, ok in rows:
            assert ok == "True"
            vals = [int(s) for s in sizes.split(",")]
            if "non-member" in desc:
                assert all(a < b for a, b in zip(vals, vals[1:]))
