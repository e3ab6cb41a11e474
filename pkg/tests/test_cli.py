import inspect
import io
import json
import subprocess
import sys

import pytest

from skewchar import characters, cli, fock, interp, partitions, verify


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_char_json():
    code, out, _ = run("char", "--family", "so", "--method", "jt", "--lambda", "1", "--n", "1", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["vars"] == 1
    assert [(t["exp"], t["coeff"]) for t in obj["terms"]] == [([-2], "1"), ([0], "1"), ([2], "1")]


def test_straighten_output_is_exact():
    code, out, _ = run("straighten", "--side", "ket", "--modes", "0,2")
    assert code == 0 and out == '{"sign":-1,"label":[1,1]}\n'


def test_verify_exit_codes():
    assert run("verify", "--suite", "cauchy_so", "--n", "1", "--deg", "4")[0] == 0
    assert run("verify", "--suite", "cauchy_so", "--n", "1", "--deg", "4", "--mutate")[0] == 1


def test_verify_json_stream():
    code, out, _ = run("verify", "--suite", "vandermonde", "--json")
    lines = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and [r["params"]["n"] for r in lines] == [1, 2, 3]


@pytest.mark.parametrize("argv", [
    ["char", "--family", "so", "--lambda", "1", "--n", "5"],
    ["verify", "--suite", "cauchy_so", "--deg", "13"],
    ["char", "--family", "so", "--lambda", "7,6", "--n", "2"],
    ["char", "--family", "so", "--lambda", "1", "--n", "1", "--frobnicate"],
    ["char", "--family", "sp", "--method", "bialternant", "--lambda", "1", "--n", "1"],
    ["char", "--family", "so", "--lambda", "1,2", "--n", "2"],
    [],
])
def test_usage_errors(argv):
    code, _, err = run(*argv)
    assert code == 2 and err


def test_doubled_partitions():
    code, out, _ = run("partitions", "--op", "interlacings", "--lambda", "2", "--doubled", "--half-last")
    assert code == 0
    assert [p["doubled"] for p in json.loads(out)] == [[0], [1], [2]]


def test_byte_identical_output():
    argv = ["verify", "--suite", "transitions", "--n", "2", "--json"]
    assert run(*argv) == run(*argv)


def test_other_commands():
    assert run("interp", "--family", "BD", "--lambda", "1", "--n", "1", "--alpha", "1")[1] == "x1 + x1^-1\n"
    assert run("gt", "--lambda", "1", "--n", "1", "--count")[1] == "3\n"
    assert run("pair", "--mode", "dual", "--bra", "1,1", "--ket", "2")[1] == "1\n"
    assert run("pair", "--mode", "labels", "--bra", "1", "--ket", "1")[1] == "1\n"
    assert run("dual-skew", "--kind", "SP*", "--mu", "0", "--nu", "1", "--deg", "5")[1] == "y1 + O(y^6)\n"
    assert run("series", "--kind", "e_pm", "--n", "1", "--index", "2")[1] == "1\n"
    p = json.dumps({"vars": 1, "terms": [{"exp": [2], "coeff": "1"}, {"exp": [-2], "coeff": "1"}]})
    assert run("ring", "--op", "mul", "--a", p, "--b", p)[1] == "x1^2 + 2 + x1^-2\n"
    m = json.dumps([[json.loads(p), {"vars": 1, "terms": [{"exp": [0], "coeff": "1"}]}],
                    [{"vars": 1, "terms": [{"exp": [0], "coeff": "1"}]}, json.loads(p)]])
    assert run("ring", "--op", "det", "--matrix", m)[1] == "x1^2 + 1 + x1^-2\n"


def _public_functions(module):
    return {
        f"{module.__name__.split('.')[-1]}.{name}"
        for name, obj in inspect.getmembers(module, inspect.isfunction)
        if obj.__module__ == module.__name__ and not name.startswith("_")
    }


def test_registry_covers_library():
    covered = {op for ops in cli.REGISTRY.values() for op in ops}
    wanted = set()
    for mod in (characters, fock, interp, partitions):
        wanted |= _public_functions(mod)
    wanted |= {"genseries.coeff", "ring.ring_arith", "ring.exact_div", "ring.determinant"}
    wanted |= {f"verify.{name}" for name in verify.SUITES}
    missing = wanted - covered
    assert not missing, sorted(missing)


def test_registry_commands_exist():
    parser = cli.build_parser()
    sub = next(a for a in parser._actions if a.dest == "command")
    assert set(cli.REGISTRY) == set(sub.choices)


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "skewchar", "straighten", "--side", "bra", "--modes", "-1"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout) == {"sign": -1, "label": [0]}
