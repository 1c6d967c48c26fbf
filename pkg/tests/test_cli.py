import json
import subprocess
import sys

import pytest

from diambounds.cli import _decimal, main, parse_count, resolve_precision, UsageError
from diambounds.geometry import cube, format_complex, format_hrep, octahedron_boundary


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestTable:
    def test_csv_delta_u(self, capsys):
        code, out, _ = run(capsys, "table", "--kind", "delta-u", "--d-max", "7", "--n-max", "45", "--format", "csv")
        lines = out.splitlines()
        assert code == 0 and lines[0] == "d,n,value"
        assert "4,45,127" in lines
        assert len(lines) == 1 + sum(45 - d + 1 for d in range(3, 8))

    def test_sigma_base_row(self, capsys):
        code, out, _ = run(capsys, "table", "--kind", "sigma", "--d-max", "2", "--n-max", "10")
        assert code == 0
        assert out.splitlines()[1].split() == ["2"] + [str(n // 2) for n in range(2, 11)]

    def test_json_delta_b(self, capsys):
        _, out, _ = run(capsys, "table", "--kind", "delta-b", "--d-max", "4", "--n-max", "8", "--format", "json")
        assert {"d": 4, "n": 8, "value": 5} in json.loads(out)

    def test_markdown(self, capsys):
        _, out, _ = run(capsys, "table", "--kind", "b", "--d-max", "3", "--n-max", "5", "--format", "markdown")
        assert out.startswith("| d \\ n |")

    def test_domain_error(self, capsys):
        code, out, err = run(capsys, "table", "--kind", "delta-u", "--d-max", "2", "--n-max", "5")
        assert code != 0 and out == "" and "base dimension" in err


class TestBound:
    def test_exact(self, capsys):
        code, out, _ = run(capsys, "bound", "--family", "sk", "--d", "5", "--n", "9")
        assert code == 0 and "value: 16" in out and "citation:" in out

    def test_not_applicable(self, capsys):
        code, out, err = run(capsys, "bound", "--family", "cubic", "--d", "5", "--n", "15")
        assert code != 0 and out == ""
        assert "n >= 2^(d-1)" in err

    def test_power_literal(self, capsys):
        code, out, _ = run(capsys, "bound", "--family", "almost-linear", "--d", "3", "--eps", "2", "--n", "2^24", "--format", "json")
        doc = json.loads(out)
        assert code == 0 and doc["exact"] and int(doc["value"]) == 2 ** 72

    def test_enclosure(self, capsys):
        code, out, _ = run(capsys, "bound", "--family", "polytope-sk", "--d", "4", "--n", "8", "--format", "json")
        doc = json.loads(out)
        assert not doc["exact"] and doc["precision_bits"] == 128
        assert float(doc["lower"]) <= 7.8405956533709402 <= float(doc["upper"])

    def test_precision_env(self, capsys, monkeypatch):
        monkeypatch.setenv("DIAMBOUNDS_PRECISION", "64")
        _, out, _ = run(capsys, "bound", "--family", "todd", "--d", "5", "--n", "40", "--format", "json")
        assert json.loads(out)["precision_bits"] == 64
        _, out, _ = run(capsys, "bound", "--family", "todd", "--d", "5", "--n", "40", "--format", "json", "--precision", "256")
        assert json.loads(out)["precision_bits"] == 256

    def test_precision_cap(self, capsys):
        code, _, err = run(capsys, "bound", "--family", "todd", "--d", "5", "--n", "40", "--precision", "5000")
        assert code != 0 and "4096" in err

    @pytest.mark.parametrize("fmt", ["csv", "markdown", "text"])
    def test_formats(self, capsys, fmt):
        code, out, _ = run(capsys, "bound", "--family", "kalai-kleitman", "--d", "4", "--n", "30", "--format", fmt)
        assert code == 0 and "kalai-kleitman" in out


class TestBest:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "best", "--target", "delta-u", "--d", "4", "--n", "46")
        assert code == 0 and "best: lms = 92" in out and "hahnle: 180 (conjecture)" in out

    def test_json(self, capsys):
        _, out, _ = run(capsys, "best", "--target", "delta-b", "--d", "3", "--n", "9", "--format", "json")
        doc = json.loads(out)
        assert doc["best"] == "klee3d-b" and doc["best_value"]["value"] == "5"


class TestVerify:
    def test_appendix_text(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "appendix-a1")
        lines = out.splitlines()
        assert code == 0 and lines[0] == "Passed 4, 4" and len(lines) == 49

    def test_index_swap(self, capsys):
        code, _, _ = run(capsys, "verify", "--suite", "index-swap")
        assert code == 0

    def test_all_json(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "all", "--format", "json")
        doc = json.loads(out)
        assert code == 0 and doc["summary"]["Fail"] == 0 and doc["summary"]["Undecided"] == 0
        suites = [r["suite"] for r in doc["reports"]]
        assert suites[:3] == ["appendix-a1", "appendix-a2", "appendix-a3"]

    def test_exit_codes(self, capsys, monkeypatch):
        from diambounds import verify
        from diambounds.verify import Verdict, VerificationReport

        def fake(verdict):
            rep = VerificationReport("fake")
            rep.add({"d": 1, "n": 1}, 1, 1, verdict)
            return lambda name: [rep]

        for verdict, want in ((Verdict.FAIL, 1), (Verdict.UNDECIDED, 2), (Verdict.PASS, 0)):
            monkeypatch.setattr(verify, "run_suite", fake(verdict))
            assert run(capsys, "verify", "--suite", "known-values")[0] == want

    def test_csv(self, capsys):
        _, out, _ = run(capsys, "verify", "--suite", "known-values", "--format", "csv")
        assert out.splitlines()[0] == "suite,params,lhs,rhs,verdict,note"


class TestDiameter:
    def test_cube(self, capsys, tmp_path):
        f = tmp_path / "cube.hrep"
        f.write_text(format_hrep(cube(3)))
        code, out, _ = run(capsys, "diameter", str(f))
        assert code == 0 and out.startswith("diameter: 3\n")
        assert "Failed" not in out

    def test_octahedron(self, capsys, tmp_path):
        f = tmp_path / "oct.complex"
        f.write_text(format_complex(octahedron_boundary()))
        code, out, _ = run(capsys, "diameter", str(f), "--mode", "complex", "--format", "json")
        doc = json.loads(out)
        assert code == 0 and doc["diameter"] == 3
        assert all(doc["predicates"].values())

    def test_parse_error_line(self, capsys, tmp_path):
        f = tmp_path / "bad.complex"
        f.write_text("3 6\n0 1 2\n0 1\n")
        code, out, err = run(capsys, "diameter", str(f), "--mode", "complex")
        assert code != 0 and out == "" and "line 3" in err

    def test_unbounded(self, capsys, tmp_path):
        f = tmp_path / "orthant.hrep"
        f.write_text("2 2\n-1 0 0\n0 -1 0\n")
        code, _, err = run(capsys, "diameter", str(f))
        assert code != 0 and "recession" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "diameter", str(tmp_path / "nope.hrep"))
        assert code != 0 and err


def test_catalog(capsys):
    code, out, _ = run(capsys, "catalog", "--format", "json")
    assert code == 0 and len(json.loads(out)) == 20


def test_parse_count():
    assert parse_count("2^24") == 2 ** 24
    assert parse_count("100") == 100
    with pytest.raises(Exception):
        parse_count("2**3")


def test_resolve_precision(monkeypatch):
    monkeypatch.delenv("DIAMBOUNDS_PRECISION", raising=False)
    assert resolve_precision(None) == 128
    monkeypatch.setenv("DIAMBOUNDS_PRECISION", "junk")
    with pytest.raises(UsageError):
        resolve_precision(None)


def test_decimal_rounding_is_outward():
    from fractions import Fraction
    q = Fraction(2, 3)
    assert _decimal(q, 3, up=False) == "6.66e-1"
    assert _decimal(q, 3, up=True) == "6.67e-1"
    assert _decimal(-q, 3, up=True) == "-6.66e-1"
    assert _decimal(Fraction(9999, 10), 3, up=True) == "1e3"


def test_byte_identical_output(capsys):
    a = run(capsys, "verify", "--suite", "known-values", "--format", "json")[1]
    b = run(capsys, "verify", "--suite", "known-values", "--format", "json")[1]
    assert a == b


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "diambounds", "bound", "--family", "sk", "--d", "5", "--n", "9"],
                       capture_output=True, text=True)
    assert p.returncode == 0 and "value: 16" in p.stdout and p.stderr == ""
