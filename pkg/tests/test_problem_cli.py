import json

import pytest

from residuum.cli import main
from residuum.problem import ParseError, fixture_tag, parse, parse_text
from residuum.report import Report


def test_parse_bundled_fixtures():
    p = parse("ex41")
    assert p.dim == 2
    assert len(p.generators) == 4
    assert p.get_weight("q") == (2, 2, 1, 3)
    assert p.weight_names() == ["p", "q", "r", "s"]
    assert p.p_max() == 6
    assert parse("ex42").dim == 1
    assert parse("ex54").generators == ((2, 0), (1, 1), (0, 2))


def test_parse_error_reports_line_numbers():
    bad = "dim 2\ngen 1 0\ngen 0 one\n"
    with pytest.raises(ParseError) as info:
        parse_text(bad)
    assert info.value.line == 3


def test_parse_weight_length_checked():
    bad = "dim 2\ngen 1 0\ngen 0 1\nweight w 1 1 1\n"
    with pytest.raises(ParseError) as info:
        parse_text(bad)
    assert "'w'" in str(info.value)


def test_parse_rejects_non_cofinite():
    with pytest.raises(ParseError) as info:
        parse_text("dim 2\ngen 1 1\ngen 2 2\n")
    assert "V(z^A)" in str(info.value)


def test_parse_requires_dim_first():
    with pytest.raises(ParseError):
        parse_text("gen 1 0\ndim 2\n")


def test_fixture_tag_matches():
    assert fixture_tag(parse("ex41")) == "ex41"
    other = parse_text("dim 2\ngen 3 0\ngen 0 3\n")
    assert fixture_tag(other) is None


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cli_annihilator(capsys):
    code, out, err = run_cli(capsys, "annihilator", "ex41", "q")
    assert code == 0
    assert "[(0, 5), (2, 2), (7, 0)]" in out


def test_cli_multiplicity(capsys):
    code, out, _ = run_cli(capsys, "multiplicity", "ex41", "s")
    assert code == 0
    assert "multiplicity = 17" in out


def test_cli_sweep(capsys):
    code, out, _ = run_cli(capsys, "sweep", "ex41", "--pmax", "6")
    assert code == 0
    assert "9 distinct annihilator ideals" in out


def test_cli_unknown_weight_exit_2(capsys):
    code, out, err = run_cli(capsys, "annihilator", "ex41", "bogus")
    assert code == 2
    assert "unknown weight" in err
    assert out == ""


def test_cli_missing_file_exit_2(capsys):
    code, _, err = run_cli(capsys, "annihilator", "/nonexistent.prob")
    assert code == 2
    assert "no such problem file" in err


def test_cli_refused_sweep_exit_3(capsys):
    code, _, err = run_cli(capsys, "sweep", "ex41", "--pmax", "60")
    assert code == 3
    assert "refused" in err


def test_cli_json_round_trip(capsys):
    code, out, _ = run_cli(capsys, "multiplicity", "ex41", "r", "--json")
    assert code == 0
    report = Report.from_json(out)
    assert report == Report.from_json(report.to_json())
    assert report.schema == 1
    assert report.fixture == "ex41"
    assert report.results["exact"] is None
    assert report.results["constraints"][0]["reduced"] == {"coeffs": [1, 5, 4], "rhs": 5}


def test_cli_json_is_valid_json(capsys):
    code, out, _ = run_cli(capsys, "essential", "ex41", "q", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["results"]["essential"] == [
        {"index": [1, 3], "witnesses": [[1, 4]]},
        {"index": [3, 4], "witnesses": [[7, 2]]},
    ]


def test_cli_render_deterministic(tmp_path, capsys):
    out1 = tmp_path / "a.svg"
    out2 = tmp_path / "b.svg"
    code, _, _ = run_cli(capsys, "render", "ex41", "q", "--svg", str(out1))
    assert code == 0
    code, _, _ = run_cli(capsys, "render", "ex41", "q", "--svg", str(out2))
    assert code == 0
    data = out1.read_bytes()
    assert data == out2.read_bytes()
    text = data.decode()
    assert "(1,4)" in text and "(7,2)" in text


def test_cli_render_labels_follow_valuations(tmp_path, capsys):
    for name, labels in (("p", ["(3,5)"]), ("r", ["(1,1)"])):
        path = tmp_path / f"{name}.svg"
        code, _, _ = run_cli(capsys, "render", "ex41", name, "--svg", str(path))
        assert code == 0
        text = path.read_text()
        for label in labels:
            assert label in text


def test_cli_sweep_uses_problem_file_pmax(capsys):
    # ex41 carries `option p_max 6`
    code, out, _ = run_cli(capsys, "sweep", "ex41")
    assert code == 0
    assert "9 distinct annihilator ideals (p_max = 6)" in out


def test_cli_render_rejects_one_variable(tmp_path, capsys):
    code, _, err = run_cli(capsys, "render", "ex42", "p1", "--svg", str(tmp_path / "x.svg"))
    assert code == 2


def test_cli_render_needs_path(capsys):
    code, _, err = run_cli(capsys, "render", "ex41", "q")
    assert code == 2
    assert "--svg" in err


def test_cli_current_and_coffe_text(capsys):
    code, out, _ = run_cli(capsys, "current", "ex41", "r")
    assert code == 0
    assert "C (constrained on facet (1, 1))" in out
    code, out, _ = run_cli(capsys, "coffe", "ex41", "r")
    assert code == 0
    assert "45 C{1,2} + 225 C{1,4} + 180 C{2,4} = 225" in out
    assert "unscaled-determinant reading differs" in out


def test_cli_default_weight_is_all_ones(capsys):
    code, out, _ = run_cli(capsys, "annihilator", "ex41")
    assert code == 0
    assert "[(0, 3), (5, 0)]" in out


def test_cli_theorem_a(capsys):
    code, out, _ = run_cli(capsys, "theorem-a", "ex41", "q")
    assert code == 0
    assert "left <= ann: True (strict: True); ann <= right: True" in out


def test_cli_staircase_svg(tmp_path):
    from residuum.ideals import MonomialIdeal
    from residuum.svgplot import staircase_svg

    ideal = MonomialIdeal.from_gens(2, [(5, 0), (2, 2), (0, 5)])
    text = staircase_svg(ideal, title="staircase")
    assert text == staircase_svg(ideal, title="staircase")
    assert "<svg" in text and "polyline" in text


def test_cli_report_roundtrip_all_commands(tmp_path, capsys):
    svg = tmp_path / "r.svg"
    cases = [
        ("polytope", "ex41", "q"),
        ("valuations", "ex41", "q"),
        ("essential", "ex41", "r"),
        ("current", "ex41", "q"),
        ("annihilator", "ex54", "p"),
        ("multiplicity", "ex54", "p"),
        ("theorem-a", "ex54", "q"),
        ("independence", "ex41"),
        ("coffe", "ex54", "p"),
        ("render", "ex41", "p", "--svg", str(svg)),
    ]
    for case in cases:
        code, out, _ = run_cli(capsys, *case, "--json")
        assert code == 0, case
        report = Report.from_json(out)
        assert report == Report.from_json(report.to_json(indent=2)), case
