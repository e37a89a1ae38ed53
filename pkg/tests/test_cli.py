import json

import pytest

from divrec.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.splitlines(), out.err


def test_sigma_oracle(capsys):
    code, lines, _ = run(capsys, "sigma", "--x", "1", "--n", "6", "--all-divisors", "--method", "oracle")
    assert code == 0 and lines[-1] == "6\t12" and len(lines) == 6


def test_sigma_recursion(capsys):
    _, lines, _ = run(capsys, "sigma", "--x", "0", "--n", "7", "--all-divisors", "--method", "recursion")
    assert "7\t2" in lines


def test_sigma_pow2(capsys):
    _, lines, _ = run(capsys, "sigma", "--x", "1", "--n", "12", "--pow2")
    assert lines[-1] == "12\t7"


@pytest.mark.parametrize("method", ["oracle", "recursion"])
def test_sigma_seq_rational_json(capsys, method):
    _, lines, _ = run(capsys, "sigma", "--x", "-1", "--n", "4", "--seq", "2,4", "--method", method, "--json")
    records = [json.loads(line) for line in lines]
    assert [r["value"] for r in records] == ["0", "1/2", "0", "3/4"]
    assert set(records[0]) == {"n", "value", "method"}
    assert records[0]["method"] == ("theorem1" if method == "recursion" else "oracle")


def test_sigma_real_exponent_format(capsys):
    _, lines, _ = run(capsys, "sigma", "--x", "0.5", "--n", "2")
    assert lines == ["1\t1", "2\t2.41421356237"]


def test_recursion_and_oracle_outputs_agree(capsys):
    for flags in (["--seq", "3,1,4,1,5"], ["--all-divisors"], ["--pow2"]):
        _, a, _ = run(capsys, "sigma", "--x", "2", "--n", "60", *flags, "--method", "oracle")
        _, b, _ = run(capsys, "sigma", "--x", "2", "--n", "60", *flags, "--method", "recursion")
        assert a == b


def test_h_tables(capsys):
    _, lines, _ = run(capsys, "h", "--x", "0", "--n", "14")
    assert [int(line.split("\t")[1]) for line in lines] == [1, 1, -1, -1, -3, 0, -2, 1, 2, 1, 2, 4, 1, -1]
    _, lines, _ = run(capsys, "h", "--x", "1", "--n", "15")
    nonzero = {int(n): int(v) for n, v in (line.split("\t") for line in lines) if v != "0"}
    assert nonzero == {1: 1, 2: 2, 5: -5, 7: -7, 12: 12, 15: 15}
    _, lines, _ = run(capsys, "h", "--x", "1", "--n", "3", "--seq", "1,2,3")
    assert lines[-1] == "3\t0"
    # x=0: {3} gives +1, {1,2} gives -2
    _, lines, _ = run(capsys, "h", "--x", "0", "--n", "3", "--seq", "1,2,3")
    assert lines[-1] == "3\t-1"
    _, lines, _ = run(capsys, "h", "--x", "0", "--n", "14", "--method", "w_index")
    assert [int(line.split("\t")[1]) for line in lines][-1] == -1


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--suite", "id67", "--n", "4096"],
        ["verify", "--suite", "euler7", "--n", "500"],
        ["verify", "--suite", "theorem1", "--trials", "50", "--max-k", "10", "--max-a", "30", "--x", "2", "--rng-seed", "7"],
        ["verify", "--suite", "theorem2", "--n", "60", "--x", "0.5"],
        ["verify", "--suite", "lahiri-g", "--n", "30"],
        ["verify", "--suite", "oeis"],
    ],
)
def test_verify_suites_pass(capsys, argv):
    code, lines, _ = run(capsys, *argv)
    assert code == 0
    assert lines[-1].startswith(f"SUITE {argv[2]} PASS checked=")


def test_verify_reports_counterexample(capsys, monkeypatch):
    import divrec.suites as suites

    monkeypatch.setattr(suites, "pe_po", lambda n: (0, 0))
    code, lines, _ = run(capsys, "verify", "--suite", "euler7", "--n", "5", "--show", "2")
    assert code == 1
    assert lines[0].startswith("counterexample: n=1")
    assert lines[-1] == "SUITE euler7 FAIL checked=5"


def test_export(capsys):
    _, lines, _ = run(capsys, "export", "--what", "W", "--n", "18")
    assert len(lines) == 18 and lines[-1] == "18 64"
    _, lines, _ = run(capsys, "export", "--what", "R", "--n", "7")
    assert "7 5" in lines
    _, lines, _ = run(capsys, "export", "--what", "h0", "--n", "14")
    assert [int(line.split()[1]) for line in lines] == [1, 1, -1, -1, -3, 0, -2, 1, 2, 1, 2, 4, 1, -1]
    _, lines, _ = run(capsys, "export", "--what", "eta", "--n", "11", "--id", "A029931")
    assert lines[-1] == "11 7"


def test_bench(capsys):
    code, lines, _ = run(capsys, "bench", "--x", "1", "--n", "80", "--methods", "oracle,recursion")
    assert code == 0 and len(lines) == 3
    assert lines[1].split("\t")[-1] == lines[2].split("\t")[-1]
    _, lines, _ = run(capsys, "bench", "--x", "0", "--n", "1", "--methods", "oracle")
    assert len(lines) == 2
    _, lines, _ = run(capsys, "bench", "--x", "2", "--n", "100", "--methods", "recursion")
    from divrec.partitions import T

    assert lines[1].split("\t")[3] == str(T(100))


@pytest.mark.parametrize(
    "argv",
    [
        ["sigma", "--x", "1", "--n", "0"],
        ["sigma", "--x", "one", "--n", "3"],
        ["sigma", "--x", "1", "--n", "3", "--seq", "0,2"],
        ["sigma", "--x", "1", "--n", "3", "--seq", "2", "--pow2"],
        ["verify", "--suite", "nope"],
        ["export", "--what", "W", "--n", "3", "--id", "X1"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as info:
        code = main(argv)
        raise SystemExit(code)
    assert info.value.code == 2


def test_resource_cap_exit_3(capsys):
    code, _, err = run(capsys, "h", "--x", "0", "--n", "200", "--method", "enumerate")
    assert code == 3 and "cap" in err
    code, _, _ = run(capsys, "sigma", "--x", "1", "--n", "6000")
    assert code == 3


def test_verify_fixed_sequence(capsys):
    code, lines, _ = run(capsys, "verify", "--suite", "theorem1", "--seq", "3,3,5,12", "--x", "2")
    assert code == 0 and lines[-1] == "SUITE theorem1 PASS checked=43"
    code, lines, _ = run(capsys, "verify", "--suite", "theorem1", "--seq", "2,7", "--n", "30")
    assert code == 0 and lines[-1] == "SUITE theorem1 PASS checked=150"
