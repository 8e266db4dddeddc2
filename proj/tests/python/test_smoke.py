import json
import pathlib

import pytest

import bayesext as bx

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"


def test_scalars():
    assert str(bx.Rational("1/4") + bx.Rational("1/4")) == "1/2"
    e = bx.EpsScalar.eps()
    assert bx.EpsScalar(0) < e < bx.EpsScalar("1/1000000")
    assert str((bx.EpsScalar(1) + e).standard_part()) == "1"
    with pytest.raises(bx.Error):
        bx.Rational(1) / bx.Rational(0)


def test_tower_and_conditional():
    t = bx.Tower(["a", "c", "d"])
    assert t.stage_count == 1
    assert t.conditional("{a,c}", "{a,d}") == "@1{(a,d),(d,a)}"
    assert t.stage_count == 2
    assert t.stage_size(1) == 4
    again = bx.Tower.from_json(t.to_json())
    assert again.to_json() == t.to_json()


def test_probability():
    t = bx.Tower(["a", "c", "d"])
    masses = {"a": "1/4", "c": "1/4", "d": "1/2"}
    cond = t.conditional("{a,c}", "{a}")
    assert t.probability(masses, cond) == "1/2"
    zero = {"a": "1/2", "c": "0", "d": "1/2"}
    p = t.probability(zero, "{a,c}", field="eps")
    assert p == "1/2"


def test_lewis():
    d1 = {"a": "1/4", "c": "1/4", "d": "1/2"}
    d2 = {"a": "1/6", "c": "1/3", "d": "1/2"}
    assert bx.lewis_search(["a", "c", "d"], [d1, d2], "{a,c}", "{a,d}") is None
    assert bx.lewis_search(["a", "c", "d"], [d1], "{a,c}", "{a,d}") is not None


def test_growth_guard():
    t = bx.Tower(["a", "b", "c", "d"], max_atoms=4)
    with pytest.raises(bx.GrowthLimitExceeded):
        t.extend("{a,b}")


def test_cantor():
    assert bx.cantor_pair(1, 1) == 4
    assert bx.cantor_unpair(4) == (1, 1)


def test_dbl():
    assert bx.find_counterexample("[X]Y <-> Y") is not None
    assert bx.find_counterexample("[X]Y -> X -> Y") is None
    with pytest.raises(bx.ParseError):
        bx.normalize_sequent("x -> )")
    corpus = pathlib.Path(__file__).resolve().parents[2] / "corpus" / "contradiction.json"
    ok, _ = bx.check_derivation(corpus.read_text())
    assert ok


def test_cli_in_process():
    code, out, err = bx.run_cli(["pairing", "4"])
    assert (code, out, err) == (0, "1 1\n", "")
    code, _, err = bx.run_cli(["nonsense"])
    assert code == 2 and err
    code, out, _ = bx.run_cli(["--format", "json", "build", str(DATA / "algebra.json")])
    assert code == 0 and json.loads(out)["stages"][0]["size"] == 3
