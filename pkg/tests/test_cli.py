import json
from importlib import resources

import pytest

from diracalg import cli

FIXTURES = resources.files("diracalg") / "fixtures"


def fx(name: str) -> str:
    return str(FIXTURES / name)


def load_fixture(name: str) -> dict:
    with open(fx(name), encoding="utf-8") as fh:
        return json.load(fh)


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


class TestAlgebraCheck:
    def test_sl2_passes(self, capsys):
        code, doc = run_json(capsys, "algebra", "check", fx("sl2.json"))
        assert code == 0
        assert doc["jacobi"]["pass"] is True
        assert doc["derived_dim"] == 3 and doc["center_dim"] == 0

    def test_bad_jacobi_fails_with_witness(self, capsys):
        code, doc = run_json(capsys, "algebra", "check", fx("bad_jacobi.json"))
        assert code == 1
        assert doc["jacobi"]["pass"] is False
        assert doc["jacobi"]["witness"]["triple"] == [0, 1, 2]

    def test_malformed_json_exits_2(self, capsys, tmp_path):
        bad = tmp_path / "broken.json"
        bad.write_text("{ not json", encoding="utf-8")
        code, doc = run_json(capsys, "algebra", "check", str(bad))
        assert code == 2 and "error" in doc

    def test_missing_file_exits_2(self, capsys):
        code, doc = run_json(capsys, "algebra", "check", "/nonexistent.json")
        assert code == 2 and "error" in doc


class TestDiracCheck:
    def test_borel_subspace_with_algebra(self, capsys):
        code, doc = run_json(capsys, "dirac", "check", fx("sl2_borel_dirac.json"))
        assert code == 0
        assert doc["lagrangian"]["pass"] is True
        assert doc["characteristic"]["dims"] == {"g0": 2, "g1": 2, "p0": 1, "p1": 1}
        assert doc["integrability"]["cyclic"]["pass"] is True
        assert doc["integrability"]["courant_closure"]["pass"] is True

    def test_non_lagrangian_fails(self, capsys, tmp_path):
        f = tmp_path / "bad.json"
        f.write_text(json.dumps({"n": 1, "basis": [["1", "1"]]}), encoding="utf-8")
        code, doc = run_json(capsys, "dirac", "check", str(f))
        assert code == 1
        assert doc["lagrangian"]["pass"] is False
        assert "characteristic" not in doc


class TestMultCheck:
    def test_counterexample_profile(self, capsys):
        code, doc = run_json(capsys, "mult", "check", fx("r3_counterexample.json"))
        assert code == 0  # the cocycle itself is valid
        assert doc["cocycle"]["pass"] is True
        assert doc["n_invariance"]["pass"] is False
        assert doc["integrability"]["pass"] is False
        assert doc["ppart"]["pass"] is True and doc["gpart"]["pass"] is True

    def test_standard_bialgebra_all_green(self, capsys):
        code, doc = run_json(capsys, "mult", "check", fx("sl2_standard_bialgebra.json"))
        assert code == 0
        assert all(
            doc[key]["pass"] for key in ("cocycle", "n_invariance", "integrability", "ppart", "gpart")
        )

    def test_trivial_poisson_all_green(self, capsys):
        code, doc = run_json(capsys, "mult", "check", fx("trivial_poisson_sl2.json"))
        assert code == 0
        assert doc["integrability"]["pass"] is True

    def test_schema_violation_exits_2(self, capsys, tmp_path):
        doc = load_fixture("r3_counterexample.json")
        # enlarging g0 makes the stored 2x2 delta matrices the wrong size
        doc["g0"] = [["1", "0", "0"], ["0", "1", "0"]]
        f = tmp_path / "broken.json"
        f.write_text(json.dumps(doc), encoding="utf-8")
        code, out = run_json(capsys, "mult", "check", str(f))
        assert code == 2 and "error" in out


class TestHomogClassify:
    def test_borel_candidate(self, capsys):
        code, doc = run_json(capsys, "homog", "classify", fx("sl2_borel_candidate.json"))
        assert code == 0
        assert doc["homogeneous"] is True and doc["integrable"] is True

    def test_surrogate_example(self, capsys):
        code, doc = run_json(capsys, "homog", "classify", fx("t4r_surrogate.json"))
        assert code == 0
        assert doc["flags"]["sandwich"]["pass"] is True
        assert doc["homogeneous"] is True and doc["integrable"] is True

    def test_markdown_flag_appends_table(self, capsys):
        code, out = run(capsys, "homog", "classify", fx("sl2_borel_candidate.json"), "--md")
        assert code == 0
        assert "| flag | rule | verdict |" in out

    def test_candidate_without_d_block_exits_2(self, capsys, tmp_path):
        doc = load_fixture("sl2_borel_candidate.json")
        del doc["D"]
        f = tmp_path / "no_d.json"
        f.write_text(json.dumps(doc), encoding="utf-8")
        code, out = run_json(capsys, "homog", "classify", str(f))
        assert code == 2

    def test_candidate_via_dbar_block(self, capsys, tmp_path):
        # fiber over the quotient by h: for trivial data on sl2 and
        # h = span{h}, the zero-bivector fiber pulls back to h x h-annihilator
        doc = load_fixture("trivial_poisson_sl2.json")
        candidate = {
            "data": doc,
            "h": [["1", "0", "0"]],
            "D_bar": {"n": 2, "basis": [["0", "0", "1", "0"], ["0", "0", "0", "1"]]},
        }
        f = tmp_path / "dbar.json"
        f.write_text(json.dumps(candidate), encoding="utf-8")
        code, out = run_json(capsys, "homog", "classify", str(f))
        assert code == 0
        assert out["homogeneous"] is True and out["integrable"] is True


class TestHomogSearch:
    def test_abelian2_grid(self, capsys):
        code, doc = run_json(capsys, "homog", "search", fx("abelian2_search.json"), "--bound", "1")
        assert code == 0
        assert doc["count"] == 8
        assert doc["integrable_count"] == 8
        assert doc["presentations"] == 8

    def test_limit(self, capsys):
        code, doc = run_json(
            capsys, "homog", "search", fx("abelian2_search.json"), "--bound", "1", "--limit", "3"
        )
        assert code == 0 and doc["count"] == 3

    def test_search_too_large_exits_3(self, capsys, tmp_path):
        from diracalg import CocycleData, abelian
        from diracalg.ratlin import Matrix, Subspace

        data = CocycleData(abelian(5), Subspace.zero(5), [Matrix.zero(5, 5)] * 5)
        f = tmp_path / "big.json"
        f.write_text(
            json.dumps({"data": data.to_json(), "h": Subspace.zero(5).to_json()}),
            encoding="utf-8",
        )
        code, doc = run_json(capsys, "homog", "search", str(f), "--bound", "1")
        assert code == 3 and "size" in doc


class TestDeterminism:
    @pytest.mark.parametrize(
        "argv",
        [
            ("algebra", "check", fx("sl2.json")),
            ("mult", "check", fx("r3_counterexample.json")),
            ("homog", "classify", fx("sl2_borel_candidate.json")),
            ("homog", "search", fx("abelian2_search.json"), "--bound", "1"),
        ],
        ids=["algebra", "mult", "classify", "search"],
    )
    def test_byte_identical_output(self, capsys, argv):
        code1, out1 = run(capsys, *argv)
        code2, out2 = run(capsys, *argv)
        assert code1 == code2 and out1 == out2

    def test_seed_flag_accepted(self, capsys):
        code, _ = run(capsys, "--seed", "42", "algebra", "check", fx("sl2.json"))
        assert code == 0
