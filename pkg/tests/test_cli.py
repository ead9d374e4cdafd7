import io
import json

import pytest

from jmsym.cli import main


def run(argv, tmp_path=None):
    out = io.StringIO()
    if tmp_path is not None:
        argv = argv + ["--cache-dir", str(tmp_path)]
    code = main(argv, out)
    return code, out.getvalue()


def test_dims_table():
    code, text = run(["dims", "--n", "3", "--p", "2"])
    assert code == 0
    assert "multiset [1, 2] vs oracle [1, 2]: match" in text


def test_dims_json():
    code, text = run(["dims", "--n", "2", "--p", "2", "--format", "json"])
    assert code == 0
    lines = text.strip().splitlines()
    assert len(lines) == 1 and json.loads(lines[0])["matrix_rank"] == 1


def test_dims_csv():
    code, text = run(["dims", "--n", "3", "--p", "3", "--format", "csv"])
    assert code == 0
    assert text.splitlines()[0].startswith("n,p,lambda")


def test_dims_caps_and_usage():
    assert run(["dims", "--n", "9", "--p", "2"])[0] == 2
    assert run(["dims", "--n", "4", "--p", "4"])[0] == 2
    assert run(["dims", "--n", "4", "--p", "2", "--lambda", "4"])[0] == 2
    assert run(["dims", "--n", "4", "--p", "2", "--lambda", "3,1"])[0] == 2  # (3,1) is not 2-restricted
    assert run(["dims", "--n", "3"])[0] == 2


def test_dims_single_lambda():
    code, text = run(["dims", "--n", "4", "--p", "2", "--lambda", "2,1,1", "--format", "json"])
    assert code == 0 and json.loads(text)["matrix_rank"] == 2


def test_verify_fast(tmp_path):
    code, text = run(["verify", "--n", "3", "--p", "2", "--check-level", "fast"], tmp_path)
    assert code == 0 and "FAIL" not in text


def test_verify_json(tmp_path):
    code, text = run(["verify", "psi", "--n", "4", "--p", "3", "--format", "json"], tmp_path)
    assert code == 0
    checks = json.loads(text)
    assert checks and set(checks[0]) == {"check", "lambda", "expected", "got", "pass"}


def test_verify_level_caps(tmp_path):
    assert run(["verify", "--n", "5", "--p", "2", "--check-level", "fast"], tmp_path)[0] == 2


def test_verify_corrupt_cache(tmp_path):
    assert run(["idempotent", "--n", "3", "--p", "2", "--class", "0"], tmp_path)[0] == 0
    path = next(tmp_path.glob("*class0_p2*"))
    record = json.loads(path.read_text())
    record["element"] = record["element"].replace("1/", "7/", 1)
    path.write_text(json.dumps(record))
    assert run(["verify", "idempotents", "--n", "3", "--p", "2"], tmp_path)[0] == 3


def test_idempotent_lambda(tmp_path):
    code, text = run(["idempotent", "--n", "2", "--lambda", "2"], tmp_path)
    assert code == 0
    rec = json.loads(text)
    assert rec["element"]["terms"] == [[[1, 2], "1/2"], [[2, 1], "1/2"]]


def test_idempotent_class_cached_bytes(tmp_path):
    a = run(["idempotent", "--n", "3", "--p", "2", "--class", "0"], tmp_path)
    b = run(["idempotent", "--n", "3", "--p", "2", "--class", "0"], tmp_path)
    assert a == b and a[0] == 0
    assert json.loads(a[1])["p_integral"] is True


def test_idempotent_usage(tmp_path):
    assert run(["idempotent", "--n", "3"], tmp_path)[0] == 2
    assert run(["idempotent", "--n", "3", "--p", "2", "--class", "99"], tmp_path)[0] == 2
    assert run(["idempotent", "--n", "3", "--lambda", "2,1,1"], tmp_path)[0] == 2


def test_basis_dump():
    code, text = run(["basis", "--n", "3", "--p", "3"])
    assert code == 0 and len(text.strip().splitlines()) == 6
    code, text = run(["basis", "--n", "3", "--kind", "x", "--lambda", "2,1"])
    assert code == 0 and len(text.strip().splitlines()) == 4


def test_basis_gram_csv():
    code, text = run(["basis", "--n", "3", "--p", "3", "--gram", "murphy", "--lambda", "2,1"])
    assert code == 0
    assert "T12/3,2,2" in text  # -1 = 2 mod 3


@pytest.mark.parametrize("threads", ["1", "2"])
def test_dims_output_independent_of_threads(threads):
    code, text = run(["dims", "--n", "5", "--p", "2", "--format", "json", "--threads", threads])
    assert code == 0
    assert text == run(["dims", "--n", "5", "--p", "2", "--format", "json"])[1]
