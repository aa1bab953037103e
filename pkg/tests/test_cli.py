import contextlib
import io
import json
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from orbiqh import documents
from orbiqh.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def write(tmp_path):
    def _write(data, name="doc.json"):
        path = tmp_path / name
        path.write_text(data if isinstance(data, str) else json.dumps(data), "utf-8")
        return str(path)
    return _write


def test_validate(capsys, write):
    assert run(capsys, "validate", "cp112") == (0, '{"valid":true}\n', "")
    bad = {"fan": {"rays": [[2, 0], [0, 1], [-1, -1]], "labels": [1, 1, 1],
                   "max_cones": [[1, 2], [2, 3], [3, 1]]}}
    code, out, _ = run(capsys, "validate", write(bad))
    assert code == 1 and "non-primitive ray 1" in json.loads(out)["violations"][0]
    unbounded = {"polytope": {"normals": [[1, 0], [0, 1]], "labels": [1, 1], "lambdas": ["1", "1"]}}
    code, out, _ = run(capsys, "validate", write(unbounded))
    assert code == 1 and not json.loads(out)["valid"]


def test_info_and_fan(capsys):
    code, out, _ = run(capsys, "info", "cp112")
    info = json.loads(out)
    assert code == 0
    assert info["gen"] == [[0, 1]]
    assert info["primitive_collections"] == [[1, 2, 3], [2, 4]]
    assert info["fano"] is True
    code, out, _ = run(capsys, "fan", "cp112")
    assert json.loads(out)["fan"]["max_cones"] == [[1, 2], [1, 3], [2, 3]]


def test_presentation(capsys, write):
    code, out, _ = run(capsys, "presentation", "--quantum", "cp112")
    data = json.loads(out)
    assert code == 0 and data["mode"] == "QuantumFano"
    assert data["ideal"]["qsr"][1] == [{"coeff": "1", "x": [0, 1, 0, 1], "q": "0", "t": "0"},
                                       {"coeff": "-1", "x": [0, 0, 0, 0], "q": "2", "t": "3"}]
    code, out, _ = run(capsys, "presentation", "--classical", "cp112")
    assert json.loads(out)["mode"] == "Classical"
    code, out, _ = run(capsys, "presentation", "hirzebruch2")
    assert code == 0 and json.loads(out)["mode"] == "QuantumLeadingOrder"
    code, out, _ = run(capsys, "presentation", "--pretty", write(documents.cp_a_b(1, 2, (1, 2))))
    assert "X1*X2 - q^(3/2)*T^2" in out


def test_lambda_scale(capsys):
    code, out, _ = run(capsys, "nf", "cp112", "X2*X4", "--lambda-scale", "2")
    assert (code, out) == (0, "q^2*T^6\n")
    assert run(capsys, "nf", "cp112", "X2*X4", "--lambda-scale", "-1")[0] == 2
    assert run(capsys, "nf", "cp112", "X2*X4", "--lambda-scale", "x")[0] == 2


def test_nf(capsys, write):
    cp12 = write(documents.cp_a_b(1, 2, (1, 2)))
    assert run(capsys, "nf", cp12, "X1*X2")[:2] == (0, "q^(3/2)*T^2\n")
    assert run(capsys, "nf", cp12, "0")[:2] == (0, "0\n")
    assert run(capsys, "nf", "cp112", "X1*X2*X3")[:2] == (0, "q^2*T^3*X4\n")


def test_nf_non_fano_precision(capsys):
    code, _, err = run(capsys, "nf", "hirzebruch2", "X3^2")
    assert code == 1 and "NonNovikovCoefficient" in err
    code, out, _ = run(capsys, "nf", "hirzebruch2", "X3^2", "--precision", "5")
    assert code == 0 and out == "-T^2*X4^2 - 4*T^4*X4^2 + 2*q^2*T^4\n"
    assert run(capsys, "nf", "hirzebruch2", "X3^2", "--precision", "a")[0] == 2


def test_parse_errors(capsys):
    code, out, err = run(capsys, "nf", "cp112", "X1 ** 2")
    assert code == 2 and out == ""
    lines = err.splitlines()
    assert lines[0] == "X1 ** 2" and lines[1].index("^") == 4
    assert run(capsys, "nf", "cp112", "X9")[0] == 2


def test_verify(capsys, write):
    assert run(capsys, "verify", "cp112", "[[0,-1],[0,1]]")[:2] == (0, "true\n")
    assert run(capsys, "verify", "cp112", "[]")[:2] == (0, "true\n")
    assert run(capsys, "verify", "cp112", "[[0,1]]")[0] == 1
    assert run(capsys, "verify", "hirzebruch2", "[[0,1],[0,-1]]")[0] == 1
    assert run(capsys, "verify", "cp112", "[[0,2],[0,-2]]")[0] == 1
    assert run(capsys, "verify", "cp112", "[[0,1]")[0] == 2
    assert run(capsys, "verify", "cp112", "[[0,1,0],[0,-1,0]]")[0] == 2
    cp12 = write(documents.cp_a_b(1, 2, (1, 2)))
    assert run(capsys, "verify", cp12, "[[-1],[1]]")[:2] == (0, "true\n")


def test_usage_errors(capsys, write):
    assert run(capsys, "info", "no-such-file.json")[0] == 2
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys)[0] == 2
    assert run(capsys, "info", write("{not json"))[0] == 2
    assert run(capsys, "info", write({"fan": {"rays": [[1, 0]]}}))[0] == 2
    no_lambda = {"fan": {"rays": [[1], [-1]], "labels": [1, 1], "max_cones": [[1], [2]]}}
    assert run(capsys, "presentation", "--quantum", write(no_lambda))[0] == 2
    assert run(capsys, "presentation", "--classical", write(no_lambda))[0] == 0


def test_not_kaehler(capsys, write):
    flat = {"fan": {"rays": [[1], [-1]], "labels": [1, 1], "max_cones": [[1], [2]],
                    "lambdas": ["0", "0"]}}
    code, _, err = run(capsys, "presentation", write(flat))
    assert code == 1 and "NotKaehler" in err


def _cli(*argv, stdin=None):
    return subprocess.run([sys.executable, "-m", "orbiqh", *argv], input=stdin,
                          capture_output=True, check=False)


def test_stdin_and_bytes():
    text = json.dumps(documents.bundled("cp112"))
    a = _cli("presentation", "-", stdin=text.encode())
    b = _cli("presentation", "cp112")
    assert a.returncode == 0 and a.stdout == b.stdout
    assert _cli("info", "--pretty", "cp112").stdout.decode("utf-8").startswith("{\n")


def _captured(argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture(scope="module")
def corpus_files(tmp_path_factory):
    root = tmp_path_factory.mktemp("corpus")
    paths = {}
    for name, data in documents.corpus().items():
        path = root / f"{name}.json"
        path.write_text(json.dumps(data), "utf-8")
        paths[name] = str(path)
    return paths


monomials = st.lists(st.tuples(st.integers(1, 4), st.integers(1, 3)), min_size=1, max_size=3).map(
    lambda fs: "*".join(f"X{k}^{e}" for k, e in fs))


@settings(max_examples=500, deadline=None)
@given(st.sampled_from(["validate", "info", "fan", "presentation", "nf", "verify"]),
       st.sampled_from(sorted(documents.corpus())), st.booleans(),
       st.sampled_from(["1", "2", "1/2", "3/4"]), monomials)
def test_determinism(corpus_files, cmd, name, pretty, scale, expr):
    extra = {"nf": [expr, "--precision", "4"], "verify": ["[]"]}.get(cmd, [])
    argv = [cmd, corpus_files[name], *extra, "--lambda-scale", scale] + (["--pretty"] if pretty else [])
    first = _captured(argv)
    assert _captured(argv) == first
