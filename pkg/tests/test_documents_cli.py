import csv
import io
import json

import pytest

from inclics.cli import main, run
from inclics.documents import (DocumentError, InclicValidationError, emit_scheme, format_rational,
                               parse_rational, parse_scheme)
from inclics.scheme_core import FatSchemeSpec, InclicScheme

THREE_POINTS = {"ambient_dim": 2, "components": [
    {"role": "plain", "multiplicity": 1, "cutting_forms": [["0", "1", "0"], ["0", "0", "1"]]},
    {"role": "plain", "multiplicity": 1, "cutting_forms": [["1", "0", "0"], ["0", "0", "1"]]},
    {"role": "plain", "multiplicity": 1, "cutting_forms": [["1", "0", "0"], ["0", "1", "0"]]}]}

TWO_DOUBLE = {"ambient_dim": 2, "components": [
    {"role": "L0", "multiplicity": 2, "cutting_forms": [["0", "1", "0"], ["0", "0", "1"]]},
    {"role": "H0", "multiplicity": 0, "cutting_forms": [["1", "0", "0"]]},
    {"role": "inner", "multiplicity": 2, "cutting_forms": [["1", "0", "0"], ["0", "0", "1"]]}],
    "metadata": {"name": "two double points"}}

GALAXY_G1 = {"ambient_dim": 3, "components": [
    {"role": "L0", "multiplicity": 1,
     "cutting_forms": [["1", "-1", "0", "0"], ["0", "1", "-1", "0"], ["0", "0", "1", "-1"]]},
    {"role": "H0", "multiplicity": 0, "cutting_forms": [["0", "0", "0", "1"]]},
    {"role": "inner", "multiplicity": 1, "cutting_forms": [["0", "1", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "1"]]},
    {"role": "inner", "multiplicity": 1, "cutting_forms": [["1", "0", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "1"]]},
    {"role": "inner", "multiplicity": 1, "cutting_forms": [["1", "0", "0", "0"], ["0", "1", "0", "0"], ["0", "0", "0", "1"]]}]}


@pytest.fixture
def write_doc(tmp_path):
    def write(doc, name="scheme.json"):
        path = tmp_path / name
        path.write_text(doc if isinstance(doc, str) else json.dumps(doc))
        return str(path)
    return write


class TestDocuments:
    def test_plain_points(self):
        X = parse_scheme(json.dumps(THREE_POINTS))
        assert isinstance(X, FatSchemeSpec) and len(X.components) == 3

    def test_galaxy_inclic(self):
        X = parse_scheme(json.dumps(GALAXY_G1))
        assert isinstance(X, InclicScheme) and len(X.inner) == 3

    def test_division_by_zero(self):
        doc = json.loads(json.dumps(THREE_POINTS))
        doc["components"][0]["cutting_forms"][0][1] = "1/0"
        with pytest.raises(DocumentError, match="bad rational"):
            parse_scheme(json.dumps(doc))

    def test_syntax_error_location(self):
        with pytest.raises(DocumentError) as err:
            parse_scheme('{"ambient_dim": 2,\n  "components": [}')
        assert err.value.line == 2

    @pytest.mark.parametrize("value", [0.5, True, None, "abc"])
    def test_bad_entries(self, value):
        with pytest.raises(DocumentError):
            parse_rational(value)

    def test_rationals(self):
        assert parse_rational(" -2/4 ") == parse_rational("-1/2")
        assert format_rational(parse_rational("6/3")) == "2"
        assert format_rational(parse_rational("-3/6")) == "-1/2"

    def test_invalid_inclic(self):
        doc = json.loads(json.dumps(TWO_DOUBLE))
        doc["components"][2]["cutting_forms"] = [["0", "1", "0"], ["0", "0", "1"]]  # inner = L0 point
        with pytest.raises(InclicValidationError) as err:
            parse_scheme(json.dumps(doc))
        assert "C2" in err.value.report.conditions

    def test_mixed_roles(self):
        doc = json.loads(json.dumps(TWO_DOUBLE))
        doc["components"].append(THREE_POINTS["components"][0])
        with pytest.raises(DocumentError):
            parse_scheme(json.dumps(doc))

    @pytest.mark.parametrize("doc", [THREE_POINTS, TWO_DOUBLE, GALAXY_G1])
    def test_round_trip(self, doc):
        X = parse_scheme(json.dumps(doc))
        text = emit_scheme(X, doc.get("metadata"))
        assert parse_scheme(text) == X
        assert emit_scheme(parse_scheme(text), doc.get("metadata")) == text


class TestCli:
    def test_hilbert_both_matches(self, write_doc):
        out = io.StringIO()
        code = main(["hilbert", "--scheme", write_doc(TWO_DOUBLE), "--t-min", "2", "--t-max", "2",
                     "--method", "both"], out)
        rows = list(csv.DictReader(io.StringIO(out.getvalue())))
        assert code == 0
        assert rows == [{"t": "2", "h_ideal": "1", "h_scheme": "5", "h_oracle": "1", "match": "true"}]

    def test_csv_and_json_agree(self, write_doc):
        path = write_doc(GALAXY_G1)
        base = ["hilbert", "--scheme", path, "--t-max", "4"]
        as_csv = list(csv.DictReader(io.StringIO(run(base))))
        as_json = json.loads(run(base + ["--format", "json"]))
        assert [{k: str(v) for k, v in r.items()} for r in as_json] == as_csv
        assert [int(r["h_ideal"]) for r in as_json] == [0, 0, 6, 16, 31]

    def test_alpha(self, write_doc):
        rows = json.loads(run(["alpha", "--scheme", write_doc(TWO_DOUBLE), "--format", "json"]))
        assert rows[0]["alpha"] == 2 and rows[0]["d"] == 0 and rows[0]["exact"] is True

    def test_alpha_plain_and_cap(self, write_doc):
        path = write_doc(THREE_POINTS)
        assert json.loads(run(["alpha", "--scheme", path, "--format", "json"]))[0]["alpha"] == 2
        assert main(["alpha", "--scheme", path, "--cap", "1"], io.StringIO()) == 4

    def test_star(self):
        out = io.StringIO()
        assert main(["star", "--n", "2", "--e", "2", "--u", "4", "--r", "1", "--format", "json"],
                    out) == 0
        vals = {r["quantity"]: r["value"] for r in json.loads(out.getvalue())}
        assert (vals["alpha(A)"], vals["alpha(2A)"], vals["reg(I_A)"]) == (3, 4, 3)

    def test_star_cap(self):
        assert main(["star", "--n", "2", "--e", "2", "--u", "4", "--r", "3", "--cap", "8"],
                    io.StringIO()) == 4

    def test_galaxy(self):
        rows = json.loads(run(["galaxy", "--n", "2", "--N", "1", "--e", "2", "--u", "3",
                               "--r", "1", "--r", "2", "--format", "json"]))
        assert [r["a_sequence"] for r in rows] == ["2 3 4", "4 6 8"]
        assert all(r["gamma"] == "4/3" and r["rho_lower"] == r["rho_upper"] == "3/2" for r in rows)

    def test_galaxy_verify_and_float(self):
        out = io.StringIO()
        assert main(["galaxy", "--n", "2", "--N", "1", "--e", "2", "--u", "3", "--verify",
                     "--float", "--format", "json"], out) == 0
        row = json.loads(out.getvalue())[0]
        assert row["chain_verified"] is True and row["gamma_float"] == pytest.approx(4 / 3)

    def test_verify_small(self, capsys):
        out = io.StringIO()
        assert main(["verify", "--suite", "small", "--seed", "3"], out) == 0
        rows = list(csv.DictReader(io.StringIO(out.getvalue())))
        assert len(rows) == 10 and all(r["match"] == "true" for r in rows)
        assert "seed=3" in capsys.readouterr().err

    def test_exit_codes(self, write_doc, tmp_path):
        sink = io.StringIO()
        assert main(["frobnicate"], sink) == 1
        assert main(["hilbert", "--scheme", str(tmp_path / "missing.json"), "--t-max", "2"], sink) == 1
        assert main(["hilbert", "--scheme", write_doc("{not json", "bad.json"), "--t-max", "2"],
                    sink) == 2
        doc = json.loads(json.dumps(TWO_DOUBLE))
        doc["components"][2]["cutting_forms"] = [["0", "1", "0"], ["0", "0", "1"]]
        assert main(["alpha", "--scheme", write_doc(doc, "c2.json")], sink) == 2
        assert main(["star", "--n", "2", "--e", "3", "--u", "4"], sink) == 2

    def test_mismatch_exit(self, write_doc, monkeypatch):
        import inclics.cli as cli
        monkeypatch.setattr(cli, "oracle_hilbert", lambda X, t: -1)
        out = io.StringIO()
        assert main(["hilbert", "--scheme", write_doc(TWO_DOUBLE), "--t-max", "1",
                     "--method", "both"], out) == 3
        assert "false" in out.getvalue()
