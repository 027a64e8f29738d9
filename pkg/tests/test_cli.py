import csv
import io
import json
from importlib import resources

import pytest

from wps3.cli import cell, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def table_rows(text):
    lines = text.splitlines()
    return [l.split() for l in lines[1:]]


def test_classify_table(capsys):
    code, out, _ = run(capsys, "classify")
    assert code == 0
    rows = table_rows(out)
    assert len(rows) == 14
    assert ["4", "1,2,2,5", "10", "10", "1", "26"] in rows


def test_classify_json_round_trip(capsys):
    _, out, _ = run(capsys, "classify", "--json")
    data = json.loads(out)
    assert len(data) == 14
    assert json.loads(json.dumps(data)) == data
    assert {"row": 4, "weights": "1,2,2,5", "l": 10, "sigma": 10, "index": 1, "g": 26} in data


@pytest.mark.parametrize(
    "argv",
    [
        ["classify"],
        ["invariants", "1,2,3,6"],
        ["hilbert", "1,2,6,9", "18"],
        ["fan", "1,4,5,10"],
        ["degrees"],
    ],
)
def test_formats_carry_the_same_data(capsys, argv):
    _, js, _ = run(capsys, *argv, "--json")
    _, cs, _ = run(capsys, *argv, "--csv")
    _, tb, _ = run(capsys, *argv)
    csv_rows = list(csv.DictReader(io.StringIO(cs)))
    payload = json.loads(js)
    if isinstance(payload, dict) and "checks" in payload:
        json_rows = payload["checks"]
    elif isinstance(payload, dict) and "rays" in payload:
        json_rows = None
    else:
        json_rows = payload if isinstance(payload, list) else [payload]
    if json_rows is not None:
        assert [{k: cell(v) for k, v in r.items()} for r in json_rows] == csv_rows
    # the table shows the same cells, column-aligned
    header = tb.splitlines()[0].split()
    assert header == list(csv_rows[0])
    assert len(tb.splitlines()) == len(csv_rows) + 1


def test_hilbert(capsys):
    code, out, _ = run(capsys, "hilbert", "1,2,6,9", "18", "--json")
    assert code == 0 and json.loads(out)["count"] == 30


def test_invariants_not_gorenstein(capsys):
    code, out, _ = run(capsys, "invariants", "1,2,4,5", "--json")
    data = json.loads(out)
    assert code == 0 and data["gorenstein"] is False and data["g"] is None


def test_veronese_row_12(capsys):
    code, out, _ = run(capsys, "veronese", "1,3,8,12", "--n", "3", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["target_weights"] == [1, 1, 3, 4, 8]
    assert data["relations"][0]["text"] == "u0*t = v^3" and data["relations"][0]["degree"] == 9
    assert data["hypersurface"] is True


def test_veronese_example(capsys):
    _, out, _ = run(capsys, "veronese", "1,4,5,10", "--n", "5", "--csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["name"] for r in rows if r["kind"] == "generator"] == ["u0", "u1", "u2", "v", "s"]
    assert [r["text"] for r in rows if r["kind"] == "relation"] == ["u0*s = u1^5"]


def test_veronese_not_hypersurface_is_structured(capsys):
    code, out, _ = run(capsys, "veronese", "1,1,1,1", "--n", "2", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["hypersurface"] is False
    assert data["error"]["type"] == "NotHypersurface"
    assert len(data["generators"]) == 10


@pytest.mark.parametrize(
    "argv",
    [
        ["invariants", "1,2"],
        ["invariants", "1, 2,3,4"],
        ["hilbert", "1,2,3", "x"],
        ["veronese", "1,2,3,6"],
        ["veronese", "1,2,3,6", "--n", "0"],
        ["verify"],
        ["classify", "--json", "--csv"],
        ["frobnicate"],
        [],
    ],
)
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        code = main(argv)
        raise SystemExit(code)
    assert exc.value.code == 2


def test_missing_reference_file(capsys, tmp_path):
    code, _, err = run(capsys, "classify", "--reference", str(tmp_path / "nope.txt"))
    assert code == 2 and "error" in err


def test_blowup_verify(capsys):
    code, out, _ = run(capsys, "blowup-verify", "--json")
    assert code == 0
    ids = [c["check_id"] for c in json.loads(out)["checks"]]
    assert "toric.commutes" in ids and "toric.same-fan" in ids


def test_profiles_command(capsys):
    code, out, _ = run(capsys, "profiles", "--csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 24 and all(r["pass"] == "true" for r in rows)


def test_verify_all_passes_and_is_deterministic(capsys):
    code1, out1, _ = run(capsys, "verify", "--all", "--json")
    code2, out2, _ = run(capsys, "verify", "--all", "--json")
    assert code1 == code2 == 0
    assert out1 == out2
    report = json.loads(out1)
    assert report["passed"] and report["failed"] == 0
    (note,) = [c for c in report["checks"] if c["check_id"] == "extension.12a"]
    assert note["pass"] and "46" in note["note"]


def test_tampered_reference_fails_9b(capsys, tmp_path):
    text = (resources.files("wps3") / "data" / "reference_cases.txt").read_text(encoding="utf-8")
    lines = text.splitlines()
    i = next(k for k, l in enumerate(lines) if l.startswith("9 ") and "A1, 2A4" in l)
    lines[i] = lines[i].replace("| 4 | A1, 2A4", "| 5 | A1, 2A4")
    bad = tmp_path / "tampered.txt"
    bad.write_text("\n".join(lines) + "\n")
    code, out, _ = run(capsys, "verify", "--all", "--json", "--reference", str(bad))
    assert code == 1
    failed = [c["check_id"] for c in json.loads(out)["checks"] if not c["pass"]]
    assert "extension.9b" in failed
