import json
import os
from fractions import Fraction

import pytest

from antiflex.algebra import Algebra, PreconditionError
from antiflex.cli import main
from antiflex.coboundary import RPair
from antiflex.harness import (
    CORPUS_DIR, FormatError, LinearMap, RElement, SearchSpec, corpus_names,
    grid_search, load_corpus, load_file, parse_file, random_element_oracle,
    run_check, save_file, serialize,
)
from antiflex.linalg import zeros_t3

from helpers import CORPUS, DIM2_PRE, bump_t3


def test_corpus_round_trip_byte_identical():
    for name in corpus_names():
        path = os.path.join(CORPUS_DIR, name + ".json")
        raw = open(path, "rb").read()
        assert serialize(parse_file(raw)) == raw


def test_scalar_canonicalization():
    doc = {"format_version": 1, "kind": "linear-map", "rows": 1, "cols": 1,
           "matrix": [["2/4"]]}
    obj = parse_file(json.dumps(doc))
    assert obj.matrix[0][0] == Fraction(1, 2)
    assert b'"1/2"' in serialize(obj)


def test_malformed_scalar_diagnostic():
    doc = {"format_version": 1, "kind": "linear-map", "rows": 1, "cols": 1,
           "matrix": [["1/0"]]}
    with pytest.raises(FormatError, match="matrix"):
        parse_file(json.dumps(doc))


def test_truncated_payload_names_tensor():
    raw = json.loads(open(os.path.join(CORPUS_DIR, "qt2.json")).read())
    raw["product"] = raw["product"][:1]
    with pytest.raises(FormatError, match="product"):
        parse_file(json.dumps(raw))


def test_unknown_kind_and_fields_rejected():
    with pytest.raises(FormatError, match="kind"):
        parse_file(json.dumps({"format_version": 1, "kind": "mystery"}))
    raw = json.loads(open(os.path.join(CORPUS_DIR, "q1.json")).read())
    raw["extra"] = 1
    with pytest.raises(FormatError, match="extra"):
        parse_file(json.dumps(raw))


def test_round_trip_all_kinds(tmp_path):
    objs = [
        CORPUS["qt2"],
        DIM2_PRE[0],
        RElement(2, [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]),
        RPair([[Fraction(1), Fraction(2)], [Fraction(0), Fraction(0)]],
              [[Fraction(0), Fraction(0)], [Fraction(-1), Fraction(3)]]),
        LinearMap(2, 3, [[Fraction(1)] * 3, [Fraction(0)] * 3]),
    ]
    for i, obj in enumerate(objs):
        p = tmp_path / ("obj%d.json" % i)
        save_file(p, obj)
        back = load_file(p)
        assert serialize(back) == serialize(obj)


def test_run_check_report_shape_and_determinism():
    rep1 = run_check("algebra", [CORPUS["t3"]], kind="anti-flexible")
    assert rep1["verdict"] == "pass" and rep1["witness"] is None
    bad = Algebra(2, bump_t3(CORPUS["t3"].product, 0, 1, 0))
    rep2 = run_check("algebra", [bad], kind="associative")
    assert rep2["verdict"] == "fail"
    assert rep2["witness"]["indices"] and rep2["witness"]["residual"]
    rep3 = run_check("algebra", [bad], kind="associative")
    for key in ("verdict", "identity", "witness", "failure_count"):
        assert rep2[key] == rep3[key]


def test_random_element_oracle_agreement():
    rep = random_element_oracle("associative", CORPUS["m2"], trials=50,
                                seed=7)
    assert rep["verdict"] == "pass" and rep["agreement"]
    bad = Algebra(2, bump_t3(CORPUS["t3"].product, 0, 1, 0))
    rep = random_element_oracle("associative", bad, trials=50, seed=7)
    assert rep["verdict"] == "fail" and rep["agreement"]
    zero = Algebra(2, zeros_t3(2))
    assert random_element_oracle("anti-flexible", zero)["verdict"] == "pass"


def test_grid_search_rota_baxter_finds_shift():
    found, report = grid_search(SearchSpec("rota-baxter", bound=2),
                                CORPUS["t3"])
    assert report["candidates"] == 81
    shift = [[Fraction(0), Fraction(0)], [Fraction(1), Fraction(0)]]
    assert shift in found


def test_grid_search_superset_coefficients():
    small, _ = grid_search(SearchSpec("rota-baxter", bound=2), CORPUS["t3"])
    coeffs = tuple(Fraction(c) for c in (-1, 0, 1, 2))
    large, _ = grid_search(SearchSpec("rota-baxter", coeffs, 2),
                           CORPUS["t3"])
    for m in small:
        assert m in large


def test_grid_search_dim1_zero_algebra_all_pass():
    zero1 = Algebra(1, zeros_t3(1))
    from antiflex.algebra import PreAlgebra
    palg = PreAlgebra(1, zeros_t3(1), zeros_t3(1))
    found, report = grid_search(SearchSpec("pafybe-symmetric", bound=1), palg)
    assert report["candidates"] == 3 and len(found) == 3
    assert zero1.dimension == 1


def test_grid_search_refuses_large_space():
    big = tuple(Fraction(i) for i in range(60))
    with pytest.raises(PreconditionError, match="candidates"):
        grid_search(SearchSpec("rota-baxter", big, 3), CORPUS["ut2"])


def _corpus_path(name):
    return os.path.join(CORPUS_DIR, name + ".json")


def test_cli_check_exit_codes(tmp_path, capsys):
    assert main(["check", "algebra", "--kind", "anti-flexible",
                 _corpus_path("t3")]) == 0
    bad = Algebra(2, bump_t3(CORPUS["t3"].product, 0, 1, 0))
    p = tmp_path / "bad.json"
    save_file(p, bad)
    assert main(["check", "algebra", "--kind", "associative", str(p)]) == 1
    assert main(["check", "algebra", str(tmp_path / "missing.json")]) == 2
    capsys.readouterr()


def test_cli_construct_and_check_chain(tmp_path, capsys):
    pre = tmp_path / "pre.json"
    assert main(["construct", "from-associative", _corpus_path("t3"),
                 "--variant", "succ-left", "-o", str(pre)]) == 0
    assert main(["check", "pre-algebra", str(pre)]) == 0
    r = tmp_path / "r.json"
    dbl = tmp_path / "double.json"
    assert main(["construct", "canonical-r", str(pre), "-o", str(r),
                 "--secondary", str(dbl)]) == 0
    assert main(["check", "pafybe", str(dbl), str(r)]) == 0
    # the canonical pairing is its own inverse, so r doubles as the form
    assert main(["check", "cocycle-form", str(dbl), str(r)]) == 0
    capsys.readouterr()


def test_cli_oracle_and_search(tmp_path, capsys):
    assert main(["oracle", "associative", _corpus_path("qt2"),
                 "--trials", "20"]) == 0
    out = tmp_path / "found.json"
    assert main(["search", "rota-baxter", _corpus_path("t3"),
                 "--bound", "2", "-o", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["report"]["found"] == len(doc["results"]) > 0
    capsys.readouterr()
