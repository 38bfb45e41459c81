"""Command line behavior: verbs, formats, piping, exit codes."""

import io
import json

import pytest

from scx import boundary_simplex, evaluate_coarse, parse_facet_text
from scx.cli import run

EX3_TEXT = "facet 1 2 3\nfacet 2 4\nfacet 3 4\n"


def cli(args, stdin_text=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(args, stdin=io.StringIO(stdin_text), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture()
def ex3_file(tmp_path):
    path = tmp_path / "ex3.scx"
    path.write_text(EX3_TEXT)
    return str(path)


# -- vectors ------------------------------------------------------------------

def test_vectors_json(ex3_file):
    code, out, err = cli(["vectors", ex3_file])
    assert code == 0 and err == ""
    assert json.loads(out) == {
        "d": 3,
        "f": ["1", "4", "5", "1"],
        "h": ["1", "1", "0", "-1"],
        "e": ["1", "-3", "2", "1"],
    }


def test_vectors_pretty(ex3_file):
    code, out, _ = cli(["vectors", ex3_file, "--pretty"])
    assert code == 0
    assert "f = (1, 4, 5, 1)" in out
    assert "e = (1, -3, 2, 1)" in out


def test_vectors_stdin_matches_file(ex3_file):
    from_file = cli(["vectors", ex3_file])
    from_stdin = cli(["vectors", "-"], stdin_text=EX3_TEXT)
    assert from_file == from_stdin


# -- make and piping ---------------------------------------------------------------

def test_make_boundary_simplex_pipes_into_check():
    code, text, _ = cli(["make", "boundary-simplex", "3"])
    assert code == 0
    assert text == boundary_simplex(3).to_facet_text()
    code, out, _ = cli(["check", "-"], stdin_text=text)
    assert code == 0
    payload = json.loads(out)
    assert payload["property_e"] is True
    assert payload["eulerian"] is True
    assert payload["eulerian_sphere"] is True
    assert payload["witness"] is None


def test_make_pipe_equals_file_roundtrip(tmp_path):
    code, text, _ = cli(["make", "cycle", "5"])
    assert code == 0
    path = tmp_path / "c5.scx"
    path.write_text(text)
    assert cli(["vectors", str(path)]) == cli(["vectors", "-"], stdin_text=text)
    # serialization is canonical: parse and re-emit is the identity
    assert parse_facet_text(text).to_facet_text() == text


def test_make_random_deterministic():
    first = cli(["make", "random", "6", "4", "3", "--seed", "7"])
    second = cli(["make", "random", "6", "4", "3", "--seed", "7"])
    assert first == second and first[0] == 0
    different = cli(["make", "random", "6", "4", "3", "--seed", "8"])
    assert different[1] != first[1]


# -- series ---------------------------------------------------------------------------

def test_series_fine_and_eval(ex3_file):
    code, out, _ = cli(["series", ex3_file, "--fine", "--eval", "0.5"])
    assert code == 0
    payload = json.loads(out)
    assert payload["e"] == ["1", "-3", "2", "1"]
    terms = {tuple(term["subset"]): term["coeff"] for term in payload["fine"]}
    assert terms[()] == "1"
    assert terms[("1", "2", "3")] == "1"
    assert ("1",) not in terms           # zero coefficients stay sparse
    expected = evaluate_coarse((1, -3, 2, 1), 0.5)
    assert payload["eval"]["t"] == 0.5
    assert payload["eval"]["value"] == pytest.approx(expected, rel=1e-15)


def test_series_defaults_omit_optional_keys(ex3_file):
    payload = json.loads(cli(["series", ex3_file])[1])
    assert set(payload) == {"e"}


# -- check ---------------------------------------------------------------------------------

def test_check_reports_witness(tmp_path):
    text = cli(["make", "whiskered-cycle", "3", "1"])[1]
    payload = json.loads(cli(["check", "-"], stdin_text=text)[1])
    assert payload["property_e"] is True
    assert payload["classical_ds"] is True
    assert payload["eulerian"] is False
    assert isinstance(payload["witness"], str) and "face" in payload["witness"]
    assert payload["f"] == ["1", "4", "4"]


def test_check_pretty(ex3_file):
    code, out, _ = cli(["check", ex3_file, "--pretty"])
    assert code == 0
    assert "property_e" in out and "no" in out


# -- link, join, suspend -----------------------------------------------------------------------

def test_link_verb(ex3_file):
    assert cli(["link", ex3_file, "--face", "4"])[1] == "facet 2\nfacet 3\n"
    # empty face: the link is the complex itself, canonically re-emitted
    assert cli(["link", ex3_file])[1] == EX3_TEXT
    code, _, err = cli(["link", ex3_file, "--face", "1,4"])
    assert code == 1 and "FaceNotInComplex" in err


def test_join_verb(tmp_path):
    a = tmp_path / "a.scx"
    a.write_text(cli(["make", "cycle", "3"])[1])
    code, text, _ = cli(["join", str(a), "-"], stdin_text=cli(["make", "cycle", "3"])[1])
    assert code == 0
    payload = json.loads(cli(["vectors", "-"], stdin_text=text)[1])
    assert payload["f"] == ["1", "6", "15", "18", "9"]


def test_suspend_verb():
    code, text, _ = cli(["suspend", "-"], stdin_text="facet\n")
    assert code == 0
    assert text == "facet L.1\nfacet L.2\n"


# -- oracle -----------------------------------------------------------------------------------------

def test_oracle_verb(ex3_file):
    code, out, _ = cli(["oracle", ex3_file, "--max-entry", "2"])
    assert code == 0
    assert json.loads(out) == {"ok": True, "checked": 81}
    code, out, _ = cli(["oracle", ex3_file, "--max-entry", "2", "--pretty"])
    assert code == 0 and out == "ok: 81 degrees checked\n"


def test_oracle_refuses_huge_sweeps(tmp_path):
    path = tmp_path / "big.scx"
    path.write_text("facet " + " ".join(str(i) for i in range(1, 21)) + "\n")
    code, _, err = cli(["oracle", str(path), "--max-entry", "3"])
    assert code == 1 and "TooLarge" in err


# -- info --------------------------------------------------------------------------------------------

def test_info_verbs(ex3_file):
    payload = json.loads(cli(["info", ex3_file])[1])
    assert payload == {
        "kind": "nonvoid",
        "vertices": 4,
        "labels": ["1", "2", "3", "4"],
        "facets": [["1", "2", "3"], ["2", "4"], ["3", "4"]],
        "dimension": 2,
        "pure": False,
        "faces": 11,
    }
    pretty = cli(["info", ex3_file, "--pretty"])[1]
    assert "vertices: 4" in pretty
    void_payload = json.loads(cli(["info", "-"], stdin_text="# empty\n")[1])
    assert void_payload["kind"] == "void"


# -- exit codes ----------------------------------------------------------------------------------------

def test_domain_errors_exit_one(tmp_path):
    void_path = tmp_path / "void.scx"
    void_path.write_text("# nothing\n")
    code, _, err = cli(["vectors", str(void_path)])
    assert code == 1 and "VoidComplex" in err
    code, _, err = cli(["make", "cycle", "2"])
    assert code == 1 and "InvalidParameter" in err
    code, _, err = cli(["vectors", str(tmp_path / "missing.scx")])
    assert code == 1


def test_usage_errors_exit_two(ex3_file):
    assert cli(["frobnicate", ex3_file])[0] == 2
    assert cli(["vectors", ex3_file, "--bogus"])[0] == 2
    assert cli(["make", "cycle", "three"])[0] == 2
    assert cli(["make", "dodecahedron", "1"])[0] == 2
    assert cli(["make", "cycle"])[0] == 2
    assert cli(["join", "-", "-"])[0] == 2
    assert cli(["link", ex3_file, "--face", "1,,2"])[0] == 2
    assert cli([])[0] == 2


def test_malformed_input_exits_one():
    code, _, err = cli(["vectors", "-"], stdin_text="simplex 1 2\n")
    assert code == 1 and "FacetFormatError" in err


def test_output_is_deterministic(ex3_file):
    assert cli(["check", ex3_file]) == cli(["check", ex3_file])
    assert cli(["series", ex3_file, "--fine"]) == cli(["series", ex3_file, "--fine"])
