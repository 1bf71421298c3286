import json

import pytest

from shufflemac.arith import parse_rational, q, t
from shufflemac.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_macdonald(capsys):
    code, out, _ = run(capsys, "macdonald", "--lambda", "2", "--vars", "2")
    assert code == 0
    data = json.loads(out)
    assert data["P"]["vars"] == ["w1", "w2"]
    coefs = {tuple(term["exps"]): parse_rational(term["coef"]) for term in data["P"]["terms"]}
    assert coefs[(1, 1)] == (1 - t) * (1 + q) / (1 - q * t)
    assert coefs[(2, 0)] == coefs[(0, 2)] == parse_rational("1")


def test_macdonald_no_vars(capsys):
    code, out, _ = run(capsys, "macdonald", "--lambda", "1,1", "--vars", "0")
    assert code == 0 and json.loads(out)["P"]["terms"] == []


def test_skew_both_modes(capsys):
    code, out, _ = run(capsys, "skew", "--mu", "2,1", "--nu", "1", "--mode", "both", "--vars", "2")
    data = json.loads(out)
    assert code == 0 and data["agree"] is True
    assert data["algebraic"] == data["lattice"]


def test_skew_not_contained(capsys):
    code, _, err = run(capsys, "skew", "--mu", "1", "--nu", "2")
    assert code == 2 and "error" in err


def test_skew_too_large(capsys):
    code, _, _ = run(capsys, "skew", "--mu", "7", "--mode", "lattice", "--vars", "1")
    assert code == 2


def test_trace_and_l(capsys):
    code, out, _ = run(capsys, "trace", "--n", "1", "--m", "0", "--N", "1")
    assert code == 0 and json.loads(out)["T"]["z0"] == "1"
    code, out, _ = run(capsys, "trace", "--L", "--N", "1")
    assert code == 0 and parse_rational(json.loads(out)["text"]) == (1 - t) / (t - q)


def test_dwpf(capsys):
    code, out, _ = run(capsys, "dwpf", "--n", "1", "--m", "0", "--k", "1", "--M", "2")
    assert code == 0 and json.loads(out)["formula_agrees"] is True


def test_shuffle(capsys):
    code, out, _ = run(capsys, "shuffle", "--expr", "E1(1)*S1", "--wheel", "--limits")
    data = json.loads(out)
    assert code == 0 and data["element"]["arity"] == 2


def test_mixed_cauchy(capsys):
    code, out, _ = run(capsys, "mixed-cauchy", "--degree-cut", "1")
    assert code == 0
    json.loads(out)


def test_mixed_cauchy_degree_limit(capsys):
    code, _, _ = run(capsys, "mixed-cauchy", "--degree-cut", "5")
    assert code == 2


def test_verify_shuffle_core_is_deterministic(capsys):
    code, out1, _ = run(capsys, "verify", "--suite", "shuffle-core", "--seed", "7")
    _, out2, _ = run(capsys, "verify", "--suite", "shuffle-core", "--seed", "7")
    assert code == 0 and out1 == out2
    report = json.loads(out1)
    assert report["failed"] == 0
    assert {"commutativity", "wheel-closure", "exp-formulas"} <= {c["id"] for c in report["cases"]}


def test_unknown_suite(capsys):
    code, _, _ = run(capsys, "verify", "--suite", "nope")
    assert code == 2


def test_bad_arguments(capsys):
    assert main(["bogus"]) == 2
    assert main(["macdonald", "--lambda", "1,2"]) == 2


@pytest.mark.parametrize("flag", ["--exact", "--randomized"])
def test_mode_flags(capsys, flag):
    code, out, _ = run(capsys, "verify", "--suite", "shuffle-core", flag, "--trials", "2")
    assert code == 0 and json.loads(out)["trials"] == 2
