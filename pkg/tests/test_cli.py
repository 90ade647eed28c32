import io
import json
import os
import subprocess
import sys

import pytest

from wreathsf.cli import run
from wreathsf.groups import builtin


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def ok(*argv):
    code, out, err = call(*argv)
    assert code == 0, err
    return out


class TestExamples:
    def test_conjugate(self):
        assert ok("conjugate", "4,3,2,2,1") == "5,4,2,1\n"

    def test_lr(self):
        assert ok("lr", "--outer", "2,1", "--inner", "1", "--content", "1,1") == "1\n"
        assert ok("lr", "--outer", "2,1", "--inner", "1", "--content", "1,1", "--oracle") == "1\n"

    def test_chartable_trivial(self):
        doc = json.loads(ok("chartable", "--group", "trivial", "--n", "3", "--format", "json"))
        assert doc["rows"] == ["3", "2,1", "1,1,1"]
        assert doc["entries"] == [[1, 1, 1], [-1, 0, 2], [1, -1, 1]]
        text = ok("chartable", "--group", "trivial", "--n", "3")
        assert len(text.strip().splitlines()) == 4


class TestSubcommands:
    def test_partitions(self):
        assert ok("partitions", "--n", "3") == "3\n2,1\n1,1,1\n"
        assert json.loads(ok("partitions", "--n", "2", "--colors", "2", "--format", "json")) == [
            "2;-", "1,1;-", "1;1", "-;2", "-;1,1"
        ]

    def test_kostka_word_lattice(self):
        assert ok("kostka", "--shape", "2,1", "--content", "1,1,1") == "2\n"
        rows = "5,5;1,1,6,7;2,3,3,3,7,8;4,4,6,7,8,9"
        assert ok("word", "--shape", "6,6,6,6", "--inner", "4,2", "--rows", rows) == "557611873332987644\n"
        assert ok("lattice", "--word", "1,1,2,1") == "true\n"
        assert ok("lattice", "--word", "1,2,2", "--format", "json") == "false\n"

    def test_schur_poly(self):
        assert ok("schur-poly", "--shape", "1,1", "--vars", "2") == "x1*x2\n"
        assert ok("schur-poly", "--shape", "2,1", "--vars", "2", "--basis", "m", "--lenient") == "x1^2*x2 + x1*x2^2\n"
        code, out, _ = call("schur-poly", "--shape", "2,1", "--vars", "2", "--format", "json")
        assert code == 1 and json.loads(out)["error"]["type"] == "InsufficientVariables"

    def test_convert(self):
        assert ok("convert", "--from", "h", "--to", "p", "--shape", "2") == "1/2*p[2] + 1/2*p[1,1]\n"
        doc = json.loads(ok("convert", "--from", "s", "--to", "m", "--matrix", "3", "--format", "json"))
        assert doc["rows"] == [[1, 1, 1], [0, 1, 2], [0, 0, 1]]

    def test_inner(self):
        assert ok("inner", "--left-basis", "h", "--left", "2,1", "--right-basis", "m", "--right", "2,1") == "1\n"
        out = ok("inner", "--group", "z2", "--left-basis", "P_class", "--left", "2;1,1",
                 "--right-basis", "P_class", "--right", "2;1,1")
        assert out == "32\n"
        # empty first color needs the "-" marker right after the flag
        out = ok("inner", "--group", "z3", "--left-basis", "S", "--left", "-;1;-",
                 "--right-basis", "S", "--right", "-;1;-")
        assert out == "1\n"

    def test_pieri(self):
        assert ok("pieri", "--shape", "1", "--m", "1", "--mode", "row") == "2\n1,1\n"
        assert ok("pieri", "--shape", "1;-", "--m", "1,1", "--format", "json") == '["2;1", "1,1;1"]\n'

    def test_dim_and_schur_p(self):
        assert ok("dim", "--group", "s3", "--shape", "-;-;1") == "2\n"
        doc = json.loads(ok("schur-p", "--group", "z2", "--shape", "2;-", "--format", "json"))
        assert doc["basis"] == "p_char" and len(doc["terms"]) == 2

    def test_group_validate(self, tmp_path):
        assert json.loads(ok("group-validate", "--group", "z3", "--format", "json"))["valid"] is True
        doc = builtin("z2").to_json()
        doc["table"][1][1] = 1
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(doc))
        code, out, _ = call("group-validate", "--file", str(path), "--format", "json")
        assert code == 1
        err = json.loads(out)["error"]
        assert err["type"] == "ValidationFailed" and err["violations"]
        code, _, err_text = call("group-validate", "--file", str(path))
        assert code == 1 and "ValidationFailed" in err_text


class TestErrors:
    def test_usage_errors(self):
        assert call("chartable", "--group", "z2", "--n", "2", "--bogus")[0] == 2
        assert call("chartable", "--group", "z2", "--n", "2", "--form", "json")[0] == 2
        assert call("chartable", "--n", "2")[0] == 2
        assert call()[0] == 2
        assert call("frobnicate")[0] == 2

    def test_domain_errors(self):
        code, out, _ = call("conjugate", "1,2", "--format", "json")
        assert code == 1 and json.loads(out)["error"]["type"] == "ParseError"
        code, out, _ = call("chartable", "--group", "q8", "--n", "1", "--format", "json")
        assert code == 1 and json.loads(out)["error"]["type"] == "UnknownGroup"

    def test_degree_cap_flag(self):
        args = ("lr", "--outer", "3,2", "--inner", "2,1", "--content", "2", "--oracle")
        assert call(*args, "--degree-cap", "4")[0] == 1
        assert call(*args)[0] == 0

    def test_help_lists_every_subcommand(self, capsys):
        with pytest.raises(SystemExit):
            from wreathsf.cli import main
            main(["--help"])
        text = capsys.readouterr().out
        for name in ("conjugate", "partitions", "kostka", "word", "lattice", "schur-poly", "convert", "inner",
                     "lr", "pieri", "group-validate", "chartable", "dim", "schur-p"):
            assert name in text


class TestJsonContract:
    @pytest.mark.parametrize("argv", [
        ("chartable", "--group", "z3", "--n", "2"),
        ("schur-p", "--group", "z3", "--shape", "1;1;-", "--basis", "P_class"),
        ("convert", "--from", "e", "--to", "s", "--matrix", "4"),
        ("group-validate", "--group", "s3"),
    ])
    def test_roundtrip_byte_identical(self, argv):
        out = ok(*argv, "--format", "json")
        assert json.dumps(json.loads(out)) + "\n" == out
        assert ok(*argv, "--format", "json") == out

    def test_subprocess_entry_point(self):
        env = dict(os.environ, PYTHONHASHSEED="random")
        cmd = [sys.executable, "-m", "wreathsf", "conjugate", "4,3,2,2,1"]
        res = subprocess.run(cmd, capture_output=True, text=True, env=env, check=True)
        assert res.stdout == "5,4,2,1\n"
