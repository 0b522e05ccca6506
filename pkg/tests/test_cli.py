import io
import json
import subprocess
import sys

import pytest

from cyclicqsym import cli, config


def run(*argv):
    buf = io.StringIO()
    code = cli.main(list(argv), stdout=buf)
    return code, buf.getvalue()


def run_json(*argv):
    code, out = run(*argv)
    return code, json.loads(out)


def test_basis_matrix_n4():
    code, data = run_json("basis-matrix", "--n", "4")
    assert code == 0
    assert data["normalized"]["order"] == [[1, 2, 3, 4], [1, 2, 3], [1, 3], [1, 2], [1]]
    assert data["normalized"]["rows"] == [
        ["1", "4", "2", "4", "4"],
        ["0", "1", "1", "2", "3"],
        ["0", "0", "1", "0", "2"],
        ["0", "0", "0", "1", "2"],
        ["0", "0", "0", "0", "1"],
    ]
    assert data["unnormalized"]["rows"][1] == ["0", "1", "2", "2", "3"]


def test_product_both_methods():
    code, data = run_json("product", "--a", "3", "--aset", "{1}", "--b", "2", "--bset", "{1}", "--method", "both")
    assert code == 0 and data["agree"]
    terms = {tuple(t["class"]): t["coeff"] for t in data["expansions"]["shuffle"]}
    assert terms == {(1, 2, 3): "1", (1, 2, 4): "3", (1, 2): "2", (1, 3): "5", (1,): "1"}


def test_verify_linear_dependence():
    code, data = run_json("verify", "--suite", "linear-dependence", "--max", "8")
    assert code == 0 and data["results"]["linear-dependence"]["ok"]


def test_verify_list_names_every_suite():
    code, data = run_json("verify", "--list")
    assert code == 0
    assert {"linear-dependence", "product-theorem", "fiber-sum", "psi-homomorphism", "cauchy"} <= set(data["suites"])


@pytest.mark.parametrize(
    "argv",
    [
        ("fcyc", "--n", "5", "--set", "{1,3,5}", "--basis", "F"),
        ("fcyc", "--n", "5", "--set", "{1,3,5}", "--basis", "M"),
        ("fcyc", "--n", "6", "--set", "{2,4,6}", "--basis", "hF"),
        ("fcyc", "--n", "4", "--set", "{1}", "--basis", "hM"),
        ("schur-expand", "--lambda", "(2,2)"),
        ("schur-expand", "--lambda", "(3,1)"),
        ("fibers", "--lambda", "(3,3)", "--mu", "(1)"),
        ("toric-lext", "--dag", "5;3->1,3->2,1->2,5->4"),
        ("toric-enum", "--dag", "4;3->2,3->4,2->1,4->1"),
        ("shuffle-dist", "--m", "3", "--n", "2", "--i", "1", "--j", "1", "--cyclic"),
        ("shuffle-dist", "--m", "2", "--n", "2", "--i", "1", "--j", "0"),
        ("psi", "--n", "3", "--set", "{1}", "--trunc", "6"),
        ("psi", "--n", "3", "--set", "{1,3}", "--trunc", "6", "--cyclic"),
        ("coproduct", "--n", "3", "--class", "{1}"),
        ("coproduct", "--n", "3", "--class", "{}"),
    ],
)
def test_verbs_succeed_and_are_stable(argv):
    code, first = run(*argv)
    assert code == 0, first
    assert run(*argv)[1] == first
    json.loads(first)


def test_specific_outputs():
    _, data = run_json("fcyc", "--n", "6", "--set", "{2,4,6}", "--basis", "hF")
    assert data["expansion"]["terms"] == [{"class": [1, 3, 5], "coeff": "3"}]
    _, data = run_json("schur-expand", "--lambda", "(2,2)")
    assert data["hFcyc"]["terms"] == [{"class": [1, 3], "coeff": "1"}] and data["nonnegative"]
    _, data = run_json("toric-lext", "--dag", "5;3->1,3->2,1->2,5->4")
    assert data["count"] == 12
    _, data = run_json("shuffle-dist", "--m", "3", "--n", "2", "--i", "1", "--j", "1", "--cyclic")
    assert data["dist"] == [0, 1, 7, 4, 0, 0] and data["total"] == 12


@pytest.mark.parametrize(
    "argv",
    [
        ("nonsense",),
        (),
        ("fcyc", "--n", "3", "--set", "{5}"),
        ("fcyc", "--n", "3", "--set", "1,2"),
        ("schur-expand", "--lambda", "(2,3)"),
        ("toric-lext", "--dag", "2;1->2,2->1"),
        ("verify", "--suite", "no-such-suite"),
        ("product", "--a", "3", "--aset", "{}", "--b", "2", "--bset", "{1}"),
        ("shuffle-dist", "--m", "3", "--n", "2", "--i", "0", "--j", "1", "--cyclic"),
        ("--max-group-ring", "3", "coproduct", "--n", "4", "--class", "{1}"),
    ],
)
def test_usage_errors_exit_2(argv):
    code, out = run(*argv)
    assert code == 2
    assert json.loads(out)["error"] == "usage"


def test_identity_failure_exit_1(monkeypatch):
    from cyclicqsym import verify
    from cyclicqsym.errors import IdentityFailure

    def broken(N):
        raise IdentityFailure("forced", {"n": N})

    monkeypatch.setitem(verify.SUITES, "forced-failure", (broken, 3))
    code, data = run_json("verify", "--suite", "forced-failure")
    assert code == 1
    assert data["counterexample"]["failed"]["counterexample"] == {"n": 3}


def test_caps_restored_after_run():
    before = config.MAX_GROUP_RING
    run("--max-group-ring", "2", "coproduct", "--n", "3", "--class", "{1}")
    assert config.MAX_GROUP_RING == before


def test_pretty_flag_only_adds_whitespace():
    _, plain = run("basis-matrix", "--n", "3")
    _, pretty = run("basis-matrix", "--n", "3", "--pretty")
    assert json.loads(plain) == json.loads(pretty) and pretty != plain


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "cyclicqsym", "basis-matrix", "--n", "2"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["normalized"]["rows"] == [["1", "2"], ["0", "1"]]


def test_cap_applies_after_cached_use():
    from cyclicqsym import descent

    descent.symmetric_group(4)  # warm the cache
    code, _ = run("--max-group-ring", "3", "coproduct", "--n", "4", "--class", "{1}")
    assert code == 2
