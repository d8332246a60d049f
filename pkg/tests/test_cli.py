import json
from pathlib import Path

import pytest

from fspace.census import CSV_COLUMNS
from fspace.cli import main

FIXTURES_DIR = Path(__file__).parent.parent / "data" / "fixtures"


def fixture(name):
    return str(FIXTURES_DIR / name)


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestUsage:
    def test_help(self, capsys):
        code, out, _ = run(capsys, "--help")
        assert code == 0
        assert "usage: fspace" in out

    def test_missing_command(self, capsys):
        code, _, err = run(capsys)
        assert code == 2
        assert "required" in err

    def test_unknown_family(self, capsys):
        code, _, _ = run(capsys, "family", "hypercube", "3")
        assert code == 2


class TestErrors:
    def test_missing_file(self, capsys, tmp_path):
        code, out, err = run(capsys, "invariants", tmp_path / "nope.poset")
        assert code == 2
        assert out == ""
        assert err.startswith("error: File not found")

    def test_unsupported_extension(self, capsys, tmp_path):
        path = tmp_path / "poset.txt"
        path.write_text("1\n", encoding="utf-8")
        code, _, err = run(capsys, "invariants", path)
        assert code == 2
        assert "UnsupportedFormat" in err

    def test_malformed_file(self, capsys, tmp_path):
        path = tmp_path / "broken.poset"
        path.write_text("three\n", encoding="utf-8")
        code, _, err = run(capsys, "invariants", path)
        assert code == 2
        assert "error: FormatError: line 1:" in err

    def test_binary_file(self, capsys, tmp_path):
        path = tmp_path / "binary.poset"
        path.write_bytes(b"\xff\xfe")
        code, out, err = run(capsys, "invariants", path)
        assert code == 2
        assert out == ""
        assert "error: FormatError:" in err
        assert "not UTF-8 text" in err

    def test_directory(self, capsys, tmp_path):
        path = tmp_path / "dir.poset"
        path.mkdir()
        code, out, err = run(capsys, "invariants", path)
        assert code == 2
        assert out == ""
        assert err.startswith("error: ")

    def test_duplicate_labels(self, capsys, tmp_path):
        path = tmp_path / "twins.poset"
        path.write_text("2\nlabels: a a\n", encoding="utf-8")
        code, _, err = run(capsys, "invariants", path)
        assert code == 2
        assert "error: FormatError: line 2: point labels must be distinct" in err

    def test_domain_error(self, capsys):
        code, _, err = run(capsys, "family", "chain")
        assert code == 1
        assert "needs a size" in err

    def test_invalid_matrix_outside_validate(self, capsys):
        code, _, err = run(capsys, "invariants", fixture("bad.pm"))
        assert code == 1
        assert "InvalidMatrix" in err


class TestValidate:
    def test_poset_file(self, capsys):
        assert run(capsys, "validate", fixture("s1.poset")) == (0, "valid poset (n=4)\n", "")

    def test_valid_matrix(self, capsys):
        code, out, _ = run(capsys, "validate", fixture("antichain2.pm"))
        assert (code, out) == (0, "valid poset matrix (n=2)\n")

    def test_invalid_matrix(self, capsys):
        code, out, _ = run(capsys, "validate", fixture("bad.pm"))
        assert code == 1
        assert out == "invalid: condition 3 violated: a[1][2]=0 and a[2][3]=0 but a[1][3]=1\n"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "validate", fixture("bad.pm"), "--json")
        assert code == 1
        assert json.loads(out) == {
            "schema": "fspace/1",
            "n": 3,
            "ok": False,
            "condition": 3,
            "witness": [[1, 2], [2, 3], [1, 3]],
        }


class TestPosetCommands:
    def test_matrix(self, capsys):
        code, out, _ = run(capsys, "matrix", fixture("s1.poset"))
        assert (code, out) == (0, "0100\n1000\n1101\n1110\n")

    def test_poset_from_matrix(self, capsys):
        assert run(capsys, "poset", fixture("antichain2.pm"))[1] == "2\n"

    def test_invariants_text(self, capsys):
        code, out, _ = run(capsys, "invariants", fixture("s1.poset"))
        assert code == 0
        lines = out.splitlines()
        assert lines[:5] == ["n: 4", "det: 1", "absDet: 1", "rankBar: 0", "reducedEuler: -1"]
        assert "charPoly: 1*λ^4 - 2*λ^2 + 1" in lines
        assert lines[-1] == "consistent: yes"

    def test_invariants_json(self, capsys):
        code, out, _ = run(capsys, "invariants", fixture("chain3.poset"), "--format", "json")
        data = json.loads(out)
        assert code == 0
        assert data["schema"] == "fspace/1"
        assert (data["absDet"], data["rankBar"], data["reducedEuler"]) == (0, 1, 0)
        assert data["charPoly"] == [0, 0, 0, -1]
        assert data["sumProfile"]["total"] == 3

    def test_json_is_byte_stable(self, capsys):
        first = run(capsys, "invariants", fixture("circle8.poset"), "--json")[1]
        second = run(capsys, "invariants", fixture("circle8.poset"), "--json")[1]
        assert first == second
        assert first.endswith("}\n")

    def test_core(self, capsys):
        code, out, _ = run(capsys, "core", fixture("chain3.poset"))
        assert code == 0
        assert out == (
            "remove x1 (beat, up via x2)\n"
            "remove x2 (beat, up via x3)\n"
            "remaining: 1 point\n"
            "1\n"
            "labels: x3\n"
        )

    def test_core_json(self, capsys):
        data = json.loads(run(capsys, "core", fixture("s1.poset"), "--json")[1])
        assert data["steps"] == []
        assert data["contractible"] is False

    def test_reduce(self, capsys):
        code, out, _ = run(capsys, "reduce", fixture("weakbeat4.poset"), "--check")
        assert code == 0
        assert out.splitlines()[:4] == [
            "remove a (weak-beat, up)",
            "remove b (beat, up via x)",
            "remove c (beat, up via x)",
            "remaining: 1 point",
        ]

    def test_reduce_preferring_beat_points(self, capsys):
        out = run(capsys, "reduce", fixture("weakbeat4.poset"), "--prefer-beat-points")[1]
        assert out.splitlines()[0] == "remove b (beat, both via x)"

    def test_beats(self, capsys):
        assert run(capsys, "beats", fixture("s1.poset"))[1] == "no beat points\n"
        assert run(capsys, "beats", fixture("vposet.poset"))[1] == (
            "x1 up (witness x3)\nx2 up (witness x3)\n"
        )

    def test_weak_beats(self, capsys):
        out = run(capsys, "beats", fixture("weakbeat4.poset"), "--weak")[1]
        assert out.splitlines() == [
            "b both (witness x)",
            "c both (witness x)",
            "a weak up",
            "b weak both",
            "c weak both",
            "x weak down",
        ]

    def test_homeo(self, capsys):
        out = run(capsys, "homeo", fixture("circle8.poset"), fixture("twocircles8.poset"))[1]
        assert out == "non-homeomorphic\n"

    def test_homeo_json(self, capsys):
        data = json.loads(
            run(capsys, "homeo", fixture("s1.poset"), fixture("s1.poset"), "--json")[1]
        )
        assert data["homeomorphic"] is True
        assert sorted(data["map"]) == [1, 2, 3, 4]

    def test_homeo_bruteforce(self, capsys):
        args = ("homeo", fixture("s1.poset"), fixture("s1.poset"), "--bruteforce", "--json")
        data = json.loads(run(capsys, *args)[1])
        assert data["homeomorphic"] is True
        assert sorted(data["map"]) == [1, 2, 3, 4]

    def test_homeo_bruteforce_limit_from_config(self, capsys, tmp_path):
        config = tmp_path / "limits.yaml"
        config.write_text("bruteforce_limit: 3\n", encoding="utf-8")
        args = ("homeo", fixture("s1.poset"), fixture("s1.poset"), "--bruteforce")
        code, out, err = run(capsys, "--config", config, *args)
        assert (code, out) == (1, "")
        assert "SizeLimitExceeded" in err
        assert run(capsys, "--config", config, *args[:3])[0] == 0

    def test_det_plus_i(self, capsys):
        assert run(capsys, "det-plus-i", fixture("chain3.poset"))[1] == "det(M+I): 1\nchain: yes\n"
        assert run(capsys, "det-plus-i", fixture("s1.poset"))[1] == "det(M+I): 0\nchain: no\n"

    def test_scc(self, capsys):
        assert run(capsys, "scc", fixture("s1.poset"))[1] == "count: 2\n1 2\n3 4\n"

    def test_width(self, capsys):
        out = run(capsys, "width", fixture("circle8.poset"))[1]
        lines = out.splitlines()
        assert lines[0] == "width: 4"
        assert len([line for line in lines if line.startswith("chain: ")]) == 4

    def test_antichains(self, capsys):
        assert run(capsys, "antichains", fixture("s1.poset"))[1] == "a b\nc d\n"
        assert run(capsys, "antichains", fixture("chain3.poset"), "-k", "2")[1] == (
            "no antichains of size 2\n"
        )

    def test_dot(self, capsys):
        out = run(capsys, "dot", fixture("chain3.poset"), "--view", "hasse")[1]
        assert out.startswith("digraph Hasse {\n  rankdir=BT;\n")
        out = run(capsys, "dot", fixture("chain3.poset"))[1]
        assert out.startswith("digraph GX {\n")
        assert "  n3 -> n1;\n" in out


class TestComplexCommands:
    def test_order_complex(self, capsys):
        assert run(capsys, "order-complex", fixture("s1.poset"))[1] == "a c\na d\nb c\nb d\n"

    def test_face_poset(self, capsys):
        data = json.loads(run(capsys, "face-poset", fixture("hollow_triangle.cplx"), "--json")[1])
        assert data["n"] == 6
        assert data["labels"][:3] == ["{a}", "{b}", "{c}"]

    def test_euler(self, capsys):
        assert run(capsys, "euler", fixture("hollow_triangle.cplx"))[1] == (
            "fVector: 3 3\neuler: 0\nreducedEuler: -1\n"
        )

    def test_euler_of_a_poset(self, capsys):
        out = run(capsys, "euler", fixture("chain3.poset"))[1]
        assert out == "fVector: 3 3 1\neuler: 1\nreducedEuler: 0\n"

    def test_det_complex(self, capsys):
        out = run(capsys, "det-complex", fixture("full_triangle.cplx"))[1]
        assert out.startswith("det: 0\nrankBar: 1\nreducedEuler: 0\n")


class TestGammaCommand:
    def test_default_is_json(self, capsys):
        code, out, _ = run(capsys, "gamma", fixture("chain3.poset"))
        assert code == 0
        assert json.loads(out) == {"schema": "fspace/1", "n": 3, "gamma": [0, 0, 0, 1], "total": 1}

    def test_text(self, capsys):
        out = run(capsys, "gamma", fixture("chain3.poset"), "--format", "text")[1]
        assert out == "gamma^0: 0\ngamma^1: 0\ngamma^2: 0\ngamma^3: 1\ntotal: 1\n"

    def test_verify(self, capsys):
        code, out, _ = run(capsys, "gamma", fixture("s1.poset"), "--verify", "--format", "text")
        lines = out.splitlines()
        assert code == 0
        assert lines[0].startswith("gamma: ")
        assert len(lines) > 1
        assert all(line.startswith("ok") for line in lines[1:])

    def test_limit(self, capsys):
        code, _, err = run(capsys, "gamma", fixture("chain3.poset"), "--limit", "2")
        assert code == 1
        assert "SizeLimitExceeded" in err


class TestActionCommands:
    def test_validate(self, capsys):
        code, out, _ = run(
            capsys, "action", "validate", fixture("s1.poset"), fixture("s1_antipodal.act")
        )
        assert code == 0
        assert out == "valid free action of a group of order 2 on 4 points\n"

    def test_block(self, capsys):
        out = run(capsys, "action", "block", fixture("s1.poset"), fixture("s1_antipodal.act"))[1]
        assert out.splitlines()[:3] == ["domain: a c", "A1,1: 00 10", "A1,2: 10 11"]

    def test_z2(self, capsys):
        out = run(capsys, "action", "z2", fixture("s1.poset"), fixture("s1_antipodal.act"))[1]
        assert out == "det(A11+A12): 1\ndet(A11-A12): 1\nproduct: 1\ndet: 1\n"

    def test_orbit(self, capsys):
        out = run(capsys, "action", "orbit", fixture("s1.poset"), fixture("s1_antipodal.act"))[1]
        assert out == "sum |U|: 8\nsum |F|: 8\ndivisible by 2: yes\n"

    def test_wrong_poset(self, capsys):
        code, _, err = run(
            capsys, "action", "validate", fixture("chain3.poset"), fixture("s1_antipodal.act")
        )
        assert code == 1
        assert "NotAGroup" in err


class TestEnumerateCommand:
    def test_csv(self, capsys):
        code, out, _ = run(capsys, "enumerate", "3", "--format", "csv")
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == ",".join(CSV_COLUMNS)
        assert len(lines) == 6

    def test_json(self, capsys):
        data = json.loads(run(capsys, "enumerate", "3", "--json")[1])
        assert (data["count"], data["contractible"]) == (5, 3)

    def test_text(self, capsys):
        out = run(capsys, "enumerate", "2")[1]
        assert out.startswith("Census (2 posets, 1 contractible)\n")

    def test_emit(self, capsys, tmp_path):
        code, _, _ = run(capsys, "enumerate", "3", "--emit", tmp_path / "census")
        assert code == 0
        assert len(list((tmp_path / "census").glob("class_*.poset"))) == 5
        assert (tmp_path / "census" / "invariants.csv").exists()

    def test_limit(self, capsys):
        code, _, err = run(capsys, "enumerate", "4", "--limit", "3")
        assert code == 1
        assert "SizeLimitExceeded" in err

    def test_config_file(self, capsys, tmp_path):
        config = tmp_path / "limits.yaml"
        config.write_text("enumeration_limit: 2\n", encoding="utf-8")
        code, _, _ = run(capsys, "--config", config, "enumerate", "3")
        assert code == 1

    def test_environment(self, capsys, monkeypatch):
        monkeypatch.setenv("FSPACE_SIZE_LIMIT", "2")
        assert run(capsys, "enumerate", "3")[0] == 1


class TestFamilyCommands:
    def test_family(self, capsys):
        assert run(capsys, "family", "fence", "3") == (0, "3\n1 2\n3 2\n", "")

    def test_fixed_family(self, capsys):
        out = run(capsys, "family", "weakbeat4")[1]
        assert out.splitlines()[1] == "labels: a b c x"

    def test_fence_check(self, capsys):
        code, out, _ = run(capsys, "fence-check", "2", "--to", "6")
        assert code == 0
        assert out.splitlines() == [f"fence({n}): ok" for n in range(2, 7)]

    @pytest.mark.parametrize("n", ["1", "0"])
    def test_fence_check_too_small(self, capsys, n):
        assert run(capsys, "fence-check", n)[0] == 1
