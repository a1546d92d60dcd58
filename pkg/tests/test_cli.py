import json

import pytest

from hermcodes import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_enumerator_3_3(capsys):
    code, out, _ = run(capsys, "weights", "--p", "3", "--m", "3", "--format", "enumerator")
    assert code == 0
    assert out == "1 + 5460*x^432 + 14040*x^504 + 182*x^648\n"


def test_enumerator_2_5(capsys):
    code, out, _ = run(capsys, "weights", "--p", "2", "--m", "5", "--format", "enumerator")
    assert code == 0
    assert out.strip() == "1 + 57970*x^384 + 12985280*x^480 + 18887680*x^528 + 1623160*x^576 + 341*x^768"


def test_json_schema(capsys):
    code, out, _ = run(capsys, "weights", "--p", "3", "--m", "3")
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"p", "m", "length", "dimension", "min_distance", "weights"}
    assert (doc["p"], doc["m"], doc["length"], doc["dimension"], doc["min_distance"]) == (3, 3, 728, 9, 432)
    assert all(isinstance(w["A"], str) and isinstance(w["w"], int) for w in doc["weights"])
    assert [w["w"] for w in doc["weights"]] == [0, 432, 504, 648]


def test_json_counts_exceed_int64(capsys):
    code, out, _ = run(capsys, "weights", "--p", "5", "--m", "9")
    assert code == 0
    counts = [int(w["A"]) for w in json.loads(out)["weights"]]
    assert sum(counts) == 5**81 and max(counts) > 2**63


def test_csv(capsys):
    code, out, _ = run(capsys, "weights", "--p", "2", "--m", "3", "--format", "csv")
    assert code == 0
    assert out == "w,A\n0,1\n24,210\n36,280\n48,21\n"


@pytest.mark.parametrize("method", ["brute", "spectrum"])
def test_enumeration_methods_2_3(capsys, method):
    code, out, _ = run(capsys, "weights", "--p", "2", "--m", "3", "--method", method, "--check")
    assert code == 0
    assert {w["w"]: int(w["A"]) for w in json.loads(out)["weights"]} == {0: 1, 24: 210, 36: 280, 48: 21}


def test_check_skips_methods_over_cap(capsys, caplog):
    code, out, _ = run(capsys, "weights", "--p", "2", "--m", "5", "--check", "--cap", "1000")
    assert code == 0
    assert "skipping brute" in caplog.text and "skipping spectrum" in caplog.text
    assert json.loads(out)["min_distance"] == 384


def test_even_m_exit_2(capsys):
    code, out, err = run(capsys, "weights", "--p", "2", "--m", "2")
    assert code == 2 and out == ""
    assert "m must be odd" in err


@pytest.mark.parametrize("argv", [["verify-iso", "--p", "2", "--m", "2"], ["weights", "--p", "6", "--m", "3"]])
def test_invalid_parameters_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_over_cap_exit_2(capsys):
    code, _, err = run(capsys, "weights", "--p", "3", "--m", "5", "--method", "brute", "--cap", "1000")
    assert code == 2 and "cap" in err


def test_cross_check_mismatch_exit_1(capsys, monkeypatch):
    from hermcodes.code_construct import WeightDistribution

    real = cli.brute_force_weight_distribution

    def corrupted(*a, **kw):
        wd = real(*a, **kw)
        lines = dict(wd.lines)
        lines[24] -= 1
        lines[36] += 1
        return WeightDistribution(lines, wd.length, wd.dimension, wd.p)

    monkeypatch.setattr(cli, "brute_force_weight_distribution", corrupted)
    code, out, err = run(capsys, "weights", "--p", "2", "--m", "3", "--method", "brute")
    assert code == 1 and out == ""
    assert "disagree" in err


def test_byte_deterministic(capsys):
    outs = {run(capsys, "weights", "--p", "2", "--m", "3", "--method", "brute")[1] for _ in range(3)}
    assert len(outs) == 1


def test_output_file(tmp_path, capsys):
    target = tmp_path / "w.json"
    code, out, _ = run(capsys, "weights", "--p", "3", "--m", "3", "-o", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["min_distance"] == 432


def test_spectrum_closed(capsys):
    code, out, _ = run(capsys, "spectrum", "--d", "3", "--r", "3")
    assert code == 0
    lines = json.loads(out)["lines"]
    assert [ln["theta"] for ln in lines] == [182, -61, 20, -7]
    assert [ln["f"] for ln in lines] == ["1", "182", "5460", "14040"]


def test_spectrum_trivial_csv(capsys):
    code, out, _ = run(capsys, "spectrum", "--d", "1", "--r", "2", "--format", "csv")
    assert code == 0
    assert out == "j,theta,f\n0,1,1\n1,-1,1\n"


def test_spectrum_direct_equals_closed(capsys):
    direct = run(capsys, "spectrum", "--d", "3", "--r", "2", "--method", "direct")
    closed = run(capsys, "spectrum", "--d", "3", "--r", "2")
    assert direct[0] == closed[0] == 0
    assert direct[1] == closed[1]


@pytest.mark.parametrize("d,r", [(2, 3), (3, 4)])
def test_spectrum_direct_rejects(capsys, d, r):
    assert run(capsys, "spectrum", "--d", str(d), "--r", str(r), "--method", "direct")[0] == 2


@pytest.mark.parametrize("p,m", [(2, 3), (3, 3)])
def test_verify_iso(capsys, p, m):
    code, out, _ = run(capsys, "verify-iso", "--p", str(p), "--m", str(m))
    assert code == 0
    assert out.rstrip().endswith("PASS (4/4 clauses)")


def test_verify_iso_json(capsys):
    code, out, _ = run(capsys, "verify-iso", "--p", "2", "--m", "3", "--format", "json")
    assert code == 0
    assert json.loads(out)["passed"] is True


def test_verify_iso_failure_exit_1(capsys, caplog, monkeypatch):
    from hermcodes import cayley_spectrum as cs

    real = cs.build_connection_set

    def truncated(c):
        S = real(c)
        return cs.ConnectionSet(S.elements[1:], S.u0, S.u)

    monkeypatch.setattr(cs, "build_connection_set", truncated)
    code, out, err = run(capsys, "verify-iso", "--p", "2", "--m", "3")
    assert code == 1
    assert "FAIL (3/4 clauses)" in out and "phi(D)=S" in caplog.text


def test_t_dist(capsys):
    code, out, _ = run(capsys, "t-dist", "--p", "3", "--m", "3")
    assert code == 0
    values = {v["T"]: int(v["count"]) for v in json.loads(out)["values"]}
    assert values == {729: 1, -243: 182, 81: 5460, -27: 14040}


def test_gauss_binom(capsys):
    assert run(capsys, "gauss-binom", "--j", "4", "--i", "2", "--b", "2")[1] == "35\n"
    assert run(capsys, "gauss-binom", "--j", "3", "--i", "1", "--b", "-2")[1] == "3\n"


def test_verbose_goes_to_stderr(capsys):
    code, out, err = run(capsys, "weights", "--p", "2", "--m", "3", "--method", "brute", "-v")
    assert code == 0
    json.loads(out)
