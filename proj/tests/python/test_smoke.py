import itertools
import json
import os
import pathlib
import subprocess

import jsonschema
import pytest
from referencing import Registry, Resource

import krullkit

ROOT = pathlib.Path(__file__).resolve().parents[2]
SCHEMAS = pathlib.Path(os.environ.get("KRULLKIT_SCHEMAS", ROOT / "schemas"))
CLI = os.environ.get("KRULLKIT_CLI")
INPUTS = ROOT / "tests" / "golden" / "inputs"


def _registry():
    reg = Registry()
    for p in SCHEMAS.glob("*.json"):
        s = json.loads(p.read_text())
        reg = reg.with_resource(s["$id"], Resource.from_contents(s))
    return reg


REGISTRY = _registry()


def check(name, doc):
    schema = json.loads((SCHEMAS / f"{name}.json").read_text())
    jsonschema.Draft202012Validator(schema, registry=REGISTRY).validate(doc)


def valid(name, doc):
    try:
        check(name, doc)
        return True
    except jsonschema.ValidationError:
        return False


def test_schemas_are_well_formed():
    names = sorted(p.stem for p in SCHEMAS.glob("*.json"))
    assert "verdict" in names and "chain" in names
    for n in names:
        jsonschema.Draft202012Validator.check_schema(json.loads((SCHEMAS / f"{n}.json").read_text()))


# -- groups


def test_rank_and_spectrum():
    assert krullkit.group_rank("zlex(3)") == ["{2}", "{1,2}", "{0,1,2}"]
    spec = krullkit.valuation_spectrum("zlex(2)")
    check("valuation_spectrum", spec)
    assert [p["subgroup"] for p in spec] == ["{0,1}", "{1}", "{}"]


def test_concatenation_report():
    r = krullkit.check_concatenation(["zlex(2)", "zlex(1)"], seed=3, trials=200)
    check("concat_report", r)
    assert r["holds"] and r["lhs"] == r["rhs"] == "fin(3)"


def test_tree_group():
    t = krullkit.tree_group(3)
    assert t["monotone"] and t["distinct_segments"] == 4 and len(t["leaves"]) == 8


# -- chains, against brute force


def _c_less(ground, links, x, y):
    return any(x in l and y not in l for l in links)


def test_c_order_matches_brute_force():
    ground = ["a", "b", "c"]
    subsets = [frozenset(s) for r in range(4) for s in itertools.combinations(ground, r)]
    seen = 0
    for r in range(1, 5):
        for combo in itertools.combinations(subsets, r):
            links = sorted(combo, key=len)
            if any(not links[i] < links[i + 1] for i in range(len(links) - 1)):
                continue
            seen += 1
            chain = {"ground": ground, "links": [sorted(l) for l in links]}
            check("chain", chain)
            out = krullkit.c_order(chain)
            check("corder", out)
            want = {(x, y) for x in ground for y in ground if _c_less(ground, links, x, y)}
            assert {tuple(p) for p in out["relation"]} == want
    assert seen == 51  # nonempty strictly increasing chains in the subsets of a 3-set


def test_separated_and_dense():
    chain = {"ground": ["a", "b", "c"], "links": [["a"], ["a", "b", "c"]]}
    s = krullkit.max_separated(chain, hint=["c", "b", "a"])
    check("separated", s)
    assert s["members"] == ["a", "c"]
    d = krullkit.chain_to_dense({"ground": ["a", "b"], "links": [["a"], ["a", "b"]]}, probes=["0"])
    check("dense_construction", d)
    assert d["cuts"] == ["seg(a, 0)", "cols({a})", "seg(b, 0)", "cols({a,b})"]
    back = krullkit.dense_to_chain(["1", "2", "3"], ["3"])
    check("dense_to_chain", back)
    assert back["collapsed"] == ["2"]


def test_ded_finite_brute_force():
    for n in range(5):
        d = krullkit.ded_finite(n)
        check("ded_finite", d)
        assert d["links"] == n + 1
    with pytest.raises(krullkit.KrullkitError) as e:
        krullkit.ded_finite(9)
    assert e.value.args[0] == "TooLarge"


# -- graphs and completions


def _count_paths(n):
    # chain:n with multiplicity 1, arcs from larger to smaller
    arcs = {v: [w for w in range(v)] for v in range(n)}
    memo = {}

    def from_v(v):
        if v not in memo:
            memo[v] = 1 + sum(from_v(w) for w in arcs[v])
        return memo[v]

    return sum(from_v(v) for v in range(n))


def test_build_ep():
    g = krullkit.build_ep("chain:3", "1")
    assert g["vertices"] == ["v_0", "v_1", "v_2"]
    assert int(g["paths"]) == _count_paths(3)
    assert g["dot"].startswith("digraph E_P {")
    assert krullkit.build_ep("chain:3")["paths"] == "aleph(0)"


def test_completion():
    a = krullkit.completion("chain:3")
    check("atposet", a)
    assert a["cuts"] == []
    q = krullkit.completion("rats", probes=["0", "1"])
    check("atposet", q)
    assert len(q["cuts"]) == 3
    check("spectrum_order", krullkit.spectrum_order("chain:2"))
    check("berry_finite", krullkit.berry_family([2, 1]))


# -- cardinals


def test_verdicts():
    v = krullkit.exists_ring("4", "0")
    check("verdict", v)
    assert (v["verdict"], v["rule"], v["witness"]) == ("Yes", "R1", "Z/4Z")
    assert krullkit.exists_ring("aleph(1)", "aleph(2)")["verdict"] == "Unknown"
    assert krullkit.exists_ring("aleph(1)", "aleph(2)", axioms="gch")["verdict"] == "Yes"
    assert krullkit.exists_ring("6", "1")["verdict"] == "No"
    with pytest.raises(krullkit.KrullkitError):
        krullkit.exists_ring("4", "0", axioms="gch", preset="cohen")


def test_cardinal_helpers():
    assert krullkit.cofinality("aleph(w)") == "aleph(0)"
    assert krullkit.exp2("aleph(0)", preset="cohen") == "aleph(2)"
    table = json.loads((INPUTS / "cohen_table.json").read_text())
    check("continuum_table", table)
    assert krullkit.exp2("aleph(0)", table=table) == "aleph(2)"
    check("ded_bounds", krullkit.ded_bounds("aleph(0)"))
    check("predicates", krullkit.predicates("aleph(w)", axioms="gch"))
    d = krullkit.catalog("berry(aleph(w))")
    check("ring_descriptor", d)
    assert (d["cdim"]["value"], d["scdim"]["value"]) == ("aleph(w)", "none")


def test_input_files_against_schemas():
    assert valid("chain", json.loads((INPUTS / "two_links.json").read_text()))
    assert valid("dense_order", json.loads((INPUTS / "dense_23.json").read_text()))
    assert not valid("chain", {"ground": "a", "links": []})


# -- the executable


def test_run_cli_in_process():
    code, out, _ = krullkit.run_cli(["group", "rank", "zlex(1)"])
    assert (code, out) == (0, "fin(1)\n")
    code, _, _ = krullkit.run_cli(["chain", "corder"], stdin="{not json")
    assert code == 65


@pytest.mark.skipif(not CLI, reason="KRULLKIT_CLI not set")
def test_executable_outputs_validate():
    def run(*args, code=0):
        p = subprocess.run([CLI, *args], capture_output=True, text=True)
        assert p.returncode == code, p.stderr
        return p.stdout

    check("verdict", json.loads(run("card", "exists", "aleph(0)", "2^aleph(0)")))
    check("ring_descriptor", json.loads(run("card", "catalog", "poly(2,aleph(0))")))
    check("corder", json.loads(run("chain", "corder", str(INPUTS / "abc_prefixes.json"))))
    check("poly_witness", json.loads(run("card", "witness-poly", "0", "0+", "1/2")))
    check("dense_injection", json.loads(run("spec", "inject")))
    run("chain", "ded", "9", code=66)
    assert run("--version").strip() == "krullkit 0.3.0"
