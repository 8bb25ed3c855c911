import io
import json
import subprocess
import sys

import pytest

from unitalg import GF, cli
from unitalg.algebra import algebra_from_json, dual_numbers, upper_triangular
from unitalg.multipoly import poly_from_json

P2 = {"kind": "prime", "p": 2}
P3 = {"kind": "prime", "p": 3}
F4 = {"kind": "ext", "p": 2, "modulus": [1, 1, 1]}
DUAL2 = {"field": P2, "dim": 2, "one": [1, 0],
         "c": [{"i": 0, "j": 0, "k": 0, "coef": 1}, {"i": 0, "j": 1, "k": 1, "coef": 1},
               {"i": 1, "j": 0, "k": 1, "coef": 1}]}
SPLIT2 = {"field": P2, "split": {"n": 2}}
STD2 = {"generators": [[1, 0], [0, 1]]}
LINE1 = {"algebra": {"field": P3, "split": {"n": 2}}, "action": [[[1]], [[0]]]}
LINE2 = {"algebra": {"field": P3, "split": {"n": 2}}, "action": [[[0]], [[1]]]}


def run(*argv, stdin=None):
    out = io.StringIO()
    if stdin is not None:
        old, sys.stdin = sys.stdin, io.StringIO(stdin)
    try:
        code = cli.run(list(argv), stdout=out)
    finally:
        if stdin is not None:
            sys.stdin = old
    return code, out.getvalue()


def doc(obj):
    return json.dumps(obj)


GOLDEN = [
    (["field", "make", doc(F4)], 0),
    (["field", "make", doc({"kind": "ext", "p": 2, "modulus": [1, 0, 1]})], 2),
    (["poly", "reduce", doc({"field": {"kind": "prime", "p": 5}, "poly": {"nvars": 1, "terms": [{"exp": [3], "coef": 1}]},
                             "grid": [[0, 1, 2]]}), "--verify"], 0),
    (["poly", "certify", doc({"field": P2, "poly": {"nvars": 2, "terms": [{"exp": [1, 1], "coef": 1}, {"exp": [1, 0], "coef": 1}]},
                              "exp": [1, 1], "grid": [[0, 1], [0, 1]]}), "--verify"], 0),
    (["poly", "certify", doc({"field": P2, "poly": {"nvars": 1, "terms": [{"exp": [2], "coef": 1}, {"exp": [1], "coef": 1}]},
                              "exp": [2], "grid": [[0, 1]]})], 1),
    (["poly", "witness", doc({"field": P3, "poly": {"nvars": 2, "terms": [{"exp": [1, 0], "coef": 1}, {"exp": [0, 1], "coef": 1}]},
                              "grid": [[0, 1, 2], [0, 1, 2]]})], 0),
    (["poly", "witness", doc({"field": P3, "poly": {"nvars": 1, "terms": []}, "grid": [[0, 1]]})], 1),
    (["poly", "subst", doc({"field": P3, "poly": {"nvars": 2, "terms": [{"exp": [1, 1], "coef": 1}]}, "matrix": [[1, 1], [0, 1]]})], 0),
    (["algebra", "build", doc(DUAL2)], 0),
    (["algebra", "build", doc({"field": P2, "dim": 2, "one": [1, 0], "c": [{"i": 0, "j": 0, "k": 1, "coef": 1}]})], 2),
    (["algebra", "matrix", doc({"field": P2, "m": 2})], 0),
    (["algebra", "group", doc({"field": P2, "table": [[0, 1], [1, 0]]})], 0),
    (["algebra", "group", doc({"field": P2, "table": [[0, 1, 2], [1, 0, 2], [2, 2, 0]]})], 2),
    (["algebra", "split", doc({"field": P3, "n": 3})], 0),
    (["algebra", "regrep", doc({"algebra": {"field": P2, "group": {"cyclic": 2}}, "element": [1, 1]})], 0),
    (["algebra", "unitpoly", doc({"field": P2, "group": {"cyclic": 2}})], 0),
    (["algebra", "radical", doc({"field": P2, "upper_triangular": {"m": 2}})], 0),
    (["algebra", "quotient", doc({"algebra": DUAL2})], 0),
    (["unit", "find", doc({"algebra": DUAL2, "subgroup": STD2}), "--verify"], 0),
    (["unit", "find", doc({"algebra": SPLIT2, "subgroup": {"generators": [[1, 1]]}})], 2),
    (["unit", "count", doc({"algebra": SPLIT2, "subgroup": STD2})], 0),
    (["unit", "coset", doc({"algebra": {"field": P3, "split": {"n": 2}}, "subgroup": STD2, "offset": [0, 2]})], 0),
    (["unit", "charzero", doc({"algebra": {"field": {"kind": "rational"}, "split": {"n": 2}},
                               "subgroup": {"generators": [[1, 1], [1, -1]]}})], 0),
    (["unit", "splitbasis", doc({"E": P2, "F": F4, "n": 2, "C": [[[1, 0], [1, 0]], [[1, 0], [0, 1]]]}), "--verify"], 0),
    (["unit", "verifybasis", doc({"E": P2, "F": F4, "n": 2, "B": [[[1, 0], [1, 0]], [[1, 0], [0, 1]]]})], 1),
    (["unit", "verifybasis", doc({"E": P2, "F": F4, "n": 2, "B": [[[1, 0], [0, 1]], [[0, 0], [1, 1]]]})], 0),
    (["module", "hom", doc({"M": {"algebra": {"field": P2, "group": {"cyclic": 2}}, "regular": True, "action": []},
                            "N": {"algebra": {"field": P2, "group": {"cyclic": 2}}, "regular": True, "action": []}})], 0),
    (["module", "generator", doc({"module": {"algebra": {"field": P2, "split": {"n": 2}}, "regular": True, "action": []},
                                  "subgroup": STD2})], 0),
    (["module", "generator", doc({"module": {"algebra": {"field": P2, "split": {"n": 1}}, "action": [[[1, 0], [0, 1]]]},
                                  "subgroup": STD2})], 1),
    (["module", "iso", doc({"M": LINE1, "N": LINE1}), "--verify"], 0),
    (["module", "iso", doc({"M": LINE1, "N": LINE2})], 1),
    (["module", "summand", doc({"M": LINE1, "N": LINE1})], 0),
    (["module", "summand", doc({"M": LINE1, "N": LINE2})], 1),
    (["identity", "cd", doc({"p": 7, "A": [1, 2, 3], "B": [2, 4]})], 0),
    (["identity", "cd", doc({"p": 7, "A": [], "B": [2, 4]})], 2),
    (["identity", "glynn", doc({"field": P3, "matrix": [[1, 0], [0, 2]], "e": 2})], 0),
    (["identity", "glynn", doc({"field": P3, "matrix": [[1, 0], [0, 2]], "e": 3})], 2),
    (["identity", "glynn", doc({"field": {"kind": "prime", "p": 5}, "matrix": [[1] * 3] * 3, "e": 24}), "--cap", "10"], 3),
    (["identity", "charsum", doc({"field": P3, "d": [2]}), "--verify"], 0),
    (["identity", "powersum", doc({"field": P3, "B": [[1]]})], 0),
    (["normal", "find", "--p", "2", "--m", "2", "--subgroup", doc({"generators": [[1, 0], [0, 1]]}), "--verify"], 0),
    (["normal", "check", "--p", "2", "--m", "2", "--alpha", "[0, 1]"], 0),
    (["normal", "check", "--p", "2", "--m", "2", "--alpha", "[1, 0]"], 1),
    (["normal", "check", "--p", "4", "--m", "2", "--alpha", "[1, 0]"], 2),
    (["unit", "count", doc({"algebra": {"field": {"kind": "prime", "p": 5}, "split": {"n": 4}},
                            "subgroup": {"generators": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]}}),
      "--cap", "100"], 3),
    (["unit", "find", "{not json"], 2),
    (["unit", "find", "/nonexistent/file.json"], 2),
    (["unit", "find", doc([1, 2])], 2),
]


@pytest.mark.parametrize("argv,code", GOLDEN, ids=[" ".join(a[:2]) + f"#{i}" for i, (a, _) in enumerate(GOLDEN)])
def test_golden_exit_codes(argv, code):
    got, out = run(*argv)
    assert got == code, out
    report = json.loads(out)
    if code >= 2:
        assert "error" in report
    got2, out2 = run(*argv)
    assert (got2, out2) == (got, out)


def test_every_subcommand_is_covered():
    covered = {(a[0], a[1]) for a, _ in GOLDEN}
    assert covered == {(g, c) for g, cmds in cli.COMMANDS.items() for c in cmds}


def test_documented_examples():
    code, out = run("unit", "find", doc({"algebra": DUAL2, "subgroup": STD2}))
    assert code == 0 and json.loads(out)["element"] == [1, 0]
    unequal = {"M": LINE1, "N": {"algebra": LINE1["algebra"], "action": [[[1, 0], [0, 1]], [[0, 0], [0, 0]]]}}
    code, out = run("module", "iso", doc(unequal))
    assert code == 1 and json.loads(out)["verdict"] == "none"


def test_round_trip_algebra_and_poly():
    code, out = run("algebra", "build", doc(DUAL2))
    assert algebra_from_json(json.loads(out)["algebra"]) == dual_numbers(GF(2))
    code, out = run("algebra", "build", doc({"field": P2, "upper_triangular": {"m": 2}}))
    assert algebra_from_json(json.loads(out)["algebra"]) == upper_triangular(GF(2), 2)
    code, out = run("poly", "subst", doc({"field": P3, "poly": {"nvars": 2, "terms": [{"exp": [1, 1], "coef": 1}]},
                                          "matrix": [[1, 1], [0, 1]]}))
    g = poly_from_json(GF(3), json.loads(out)["poly"])
    assert sorted(g.terms) == [(1, 1), (2, 0)]


def test_stdin_file_and_text(tmp_path):
    payload = doc({"algebra": DUAL2, "subgroup": STD2})
    code_a, out_a = run("unit", "find", "-", stdin=payload)
    path = tmp_path / "in.json"
    path.write_text(payload)
    code_b, out_b = run("unit", "find", str(path))
    assert code_a == code_b == 0 and out_a == out_b
    code, out = run("unit", "find", str(path), "--format", "text")
    assert "element: [1, 0]" in out


def test_unknown_flag_rejected():
    with pytest.raises(SystemExit) as exc:
        cli.run(["unit", "find", "{}", "--frobnicate"])
    assert exc.value.code == 2


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "unitalg", "identity", "cd", doc({"p": 5, "A": [0], "B": [0]})],
        capture_output=True, text=True, check=False,
    )
    assert res.returncode == 0
    assert json.loads(res.stdout)["holds"] is True
