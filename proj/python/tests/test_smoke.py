import json
import os
from math import comb
from pathlib import Path

import jsonschema
import pytest

import trident

SCHEMA_PATH = Path(
    os.environ.get(
        "TRIDENT_SCHEMA",
        Path(__file__).resolve().parents[2] / "schemas" / "trident-output.schema.json",
    )
)


@pytest.fixture(scope="module")
def schema():
    return json.loads(SCHEMA_PATH.read_text())


def validate(doc, schema, name):
    jsonschema.validate(doc, {"$defs": schema["$defs"], "$ref": f"#/$defs/{name}"})
    jsonschema.validate(doc, schema)


def cli_json(*args):
    code, out, err = trident.run_cli([*args, "--format", "json"])
    assert code == 0, err
    return json.loads(out)


def test_small_counts():
    expected = [1, 3, 4, 6, 10, 12, 13, 15, 16, 18, 22, 24, 28, 36, 40, 42]
    assert [trident.count_partitions(n) for n in range(16)] == expected
    assert len(trident.enumerate_partitions(12)) == 28


def test_s_poly_terms_sum_to_count():
    for n in range(40):
        assert sum(t[4] for t in trident.s_poly(n)) == trident.count_partitions(n)
    assert trident.s_poly_str(2) == "wx+wy+xy+z"


def test_large_counts_are_python_ints():
    q, r = trident.scalar_qr(80)
    assert q == 2**79 * (2**80 - 1)
    assert r == 2**79 * (2**80 + 1)


def test_z1_binomial_coefficients():
    for n in range(12):
        got = trident.spec_poly("z1", "q", n)
        want = [comb(n, j) * (3 ** (n - j) - 1) // 2 for j in range(n + 1)]
        while want and want[-1] == 0:
            want.pop()
        assert got == want


def test_profile_matches_oracle():
    for spec in ("z1", "z2", "z3", "p2"):
        assert trident.profile(spec, "q", 3) == trident.profile(spec, "q", 3, from_oracle=True)


def test_zeros_on_locus():
    pts = trident.zeros("z3", "q", 9)
    assert len(pts) == 8
    for z in pts:
        assert abs(abs(z - 0.375) - 0.875) < 1e-9
        assert z.real < 0.5
    report = trident.verify_locus("z2", 12)
    assert report["passed"]
    assert report["strict_margin"] > 0


def test_cap_exceeded():
    with pytest.raises(trident.CapExceeded):
        trident.enumerate_partitions(1092, cap=10)
    code, _, err = trident.run_cli(["enumerate", "--n", "1092", "--list", "--cap", "10"])
    assert code == 3
    assert "cap" in err


def test_bad_arguments():
    with pytest.raises(ValueError):
        trident.spec_poly("z9", "q", 3)
    code, _, err = trident.run_cli(["s-poly", "--format", "yaml", "--n", "1"])
    assert code == 2
    assert err


@pytest.mark.parametrize(
    "args,name",
    [
        (["s-poly", "--n", "9"], "multipoly"),
        (["q-poly", "--upto", "3"], "multipoly_rows"),
        (["spec", "--spec", "z2", "--n", "4"], "unipoly"),
        (["spec", "--spec", "p5", "--family", "r", "--upto", "3"], "unipoly_rows"),
        (["scalar", "--n", "5"], "scalar"),
        (["scalar", "--upto", "5"], "scalar_rows"),
        (["enumerate", "--n", "12", "--list"], "enumeration"),
        (["profile", "--spec", "z3", "--n", "3", "--check"], "profile"),
        (["zeros", "--spec", "z1", "--family", "r", "--n", "7", "--locus"], "zeros"),
        (["zeros", "--spec", "p6", "--n", "5"], "zeros"),
        (["verify", "--quick", "--only", "sequence"], "verify"),
        (["tables"], "tables"),
    ],
)
def test_json_output_matches_schema(schema, args, name):
    validate(cli_json(*args), schema, name)


def test_quick_verify_passes():
    doc = cli_json("verify", "--quick")
    assert doc["passed"], [s["id"] for s in doc["suites"] if not s["passed"]]
