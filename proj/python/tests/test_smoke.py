import json
import pathlib

import pytest

import coalg

FIXTURES = pathlib.Path(__file__).resolve().parents[2] / "fixtures"


def test_path_coalgebra_passes_checks():
    sc = coalg.path_coalgebra(["u", "v", "w"], [("a", "u", "v"), ("b", "v", "w")], 2)
    assert sc.dim == 6
    assert sc.colors == ["u", "v", "w"]
    assert all(passed for _, passed, _ in sc.check())
    assert sc.reduced_coassociative()
    assert dict(sc.conilpotency()) == {"a": 1, "b": 1, "b.a": 2}


def test_matrix_coalgebra_pointed_only_for_one():
    assert coalg.matrix_coalgebra(1).pointed() == "pointed"
    assert coalg.matrix_coalgebra(2).pointed() == "not pointed"
    assert len(coalg.matrix_coalgebra(2).coradical()) == 4


def test_prime_field():
    sc = coalg.path_coalgebra(["o"], [("x", "o", "o")], 3, characteristic=5)
    assert sc.coalgebra.field == "GF(5)"
    assert all(passed for _, passed, _ in sc.coalgebra.check())


def test_fixture_round_trip():
    d = coalg.load(str(FIXTURES / "four_dim_hopf.json"))
    again = coalg.parse(d.to_json())
    assert again.to_json() == d.to_json()
    assert d.coalgebra.dim == 4


def test_parse_error_is_located():
    with pytest.raises(coalg.ParseError, match=r"1:"):
        coalg.parse('{"field": "Q", "coalgebra": {"basis": ["g"], "delta": [["g", "g", "g", "1/0"]], "counit": {"g": "1"}}}')


def test_run_matches_cli_contract():
    code, out, _ = coalg.run(["--format", "json", "antipode", str(FIXTURES / "cyclic3.json")])
    assert code == 0
    assert json.loads(out)["command"] == "antipode"
    code, _, _ = coalg.run(["validate", str(FIXTURES / "missing.json")])
    assert code == 2
