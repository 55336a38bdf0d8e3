import json
from pathlib import Path

import pytest

from crossedhh import builders, cli
from crossedhh.bundle import COCYCLE_ASSOCIATIVE, ValidationError
from crossedhh.field import Field
from crossedhh.instance import ParseError, bundles_equal, load_instance, parse_instance, serialize_instance

from conftest import SHIPPED_KEYS, bundle

INSTANCES = Path(__file__).resolve().parent.parent / "instances"


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("spec", ["q", "gf:101"])
@pytest.mark.parametrize("key", SHIPPED_KEYS)
def test_round_trip(key, spec):
    B = bundle(key, spec)
    text = serialize_instance(B)
    again = parse_instance(text)
    assert bundles_equal(B, again)
    assert serialize_instance(again) == text


@pytest.mark.parametrize("key", SHIPPED_KEYS)
def test_golden_files_match_builders(key):
    assert (INSTANCES / f"{key}.json").read_text() == serialize_instance(bundle(key))


def test_scalars_are_strings():
    doc = json.loads(serialize_instance(bundle("proj-m2-klein")))
    assert all(isinstance(v, str) for v in doc["algebra"]["unit"])
    assert doc["action"]["c"][1][2] == ["-1", "0", "0", "-1"]


def _doc(key="ga-z2"):
    return json.loads(serialize_instance(bundle(key)))


def test_zero_denominator_is_parse_error():
    doc = _doc()
    doc["algebra"]["unit"][0] = "1/0"
    with pytest.raises(ParseError) as exc:
        parse_instance(json.dumps(doc))
    assert exc.value.path == "$.algebra.unit[0]"


def test_floats_rejected():
    doc = _doc()
    doc["algebra"]["trace"][0] = 1.0
    with pytest.raises(ParseError):
        parse_instance(json.dumps(doc))
    doc = _doc()
    doc["algebra"]["trace"][0] = "0.5"
    with pytest.raises(ParseError):
        parse_instance(json.dumps(doc))


def test_malformed_json_reports_line():
    with pytest.raises(ParseError) as exc:
        parse_instance('{\n "format_version": 1,\n oops\n}')
    assert exc.value.line == 3


def test_structural_errors():
    doc = _doc()
    del doc["action"]
    with pytest.raises(ParseError, match="missing key 'action'"):
        parse_instance(json.dumps(doc))
    doc = _doc()
    doc["algebra"]["structure_constants"][0][2] = 9
    with pytest.raises(ParseError, match="index out of range"):
        parse_instance(json.dumps(doc))
    doc = _doc()
    doc["format_version"] = 2
    with pytest.raises(ParseError):
        parse_instance(json.dumps(doc))
    doc = _doc()
    doc["group"]["cayley"] = [[0, 1], [1, 1]]
    with pytest.raises(ParseError, match="invalid group"):
        parse_instance(json.dumps(doc))


def test_broken_cocycle_golden_file():
    path = INSTANCES / "broken-cocycle.json"
    with pytest.raises(ValidationError) as exc:
        load_instance(path)
    assert COCYCLE_ASSOCIATIVE in str(exc.value)
    cocycle = next(r for r in exc.value.reports if r.title == "cocycle")
    w = cocycle[COCYCLE_ASSOCIATIVE].witness
    assert set(w) >= {"g", "h", "k"}
    B = load_instance(path, validate=False)
    assert B.group.order == 6


def test_field_override():
    B = parse_instance(serialize_instance(bundle("ga-z2")), field=Field(101))
    assert B.field == Field(101)


# command line


def test_validate_exit_codes(capsys):
    assert run(capsys, "validate", INSTANCES / "ga-z3.json")[0] == 0
    code, out, _ = run(capsys, "validate", INSTANCES / "broken-cocycle.json")
    assert code == 3
    assert "FAIL" in out


def test_verify_golden_s3(capsys):
    code, out, _ = run(capsys, "verify", INSTANCES / "ga-s3.json")
    assert code == 0
    assert "FAIL" not in out


def test_verify_broken_cocycle(capsys):
    code, _, err = run(capsys, "verify", INSTANCES / "broken-cocycle.json")
    assert code == 3 and "cocycle" in err
    code, out, _ = run(capsys, "verify", "--skip-validate", INSTANCES / "broken-cocycle.json")
    assert code == 2 and "FAIL" in out


def test_verify_weak_instance_reports_absent_unit(capsys):
    code, out, _ = run(capsys, "verify", "--json", INSTANCES / "trunc-sign.json")
    assert code == 0
    payload = json.loads(out)
    assert payload["unit"] is None and payload["honest"] is False


def test_characters_trivial_group(capsys):
    code, out, _ = run(capsys, "characters", "--json", INSTANCES / "trivial-k.json")
    assert code == 0
    assert json.loads(out)["table"] == [{"g": "0", "h": "0", "chi": "1"}]


def test_characters_check(capsys):
    code, out, _ = run(capsys, "characters", "--check", "--json", "--seed", "3", INSTANCES / "fa-klein-point-twisted.json")
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert "seed 3" in json.dumps(payload)


@pytest.mark.parametrize("key", SHIPPED_KEYS)
def test_hh0_field_flag_consistency(capsys, key):
    dims = []
    for spec in ("q", "gf:101"):
        code, out, _ = run(capsys, "hh0", "--json", "--field", spec, INSTANCES / f"{key}.json")
        assert code == 0
        payload = json.loads(out)
        assert payload["field"] == spec
        dims.append([g["dim"] for g in payload["grades"]])
    assert dims[0] == dims[1]


def test_hh0_bases(capsys):
    code, out, _ = run(capsys, "hh0", "--bases", "--json", INSTANCES / "trunc-sign.json")
    payload = json.loads(out)
    assert payload["grades"][1]["basis"] == [["1", "0", "0"]]


def test_json_reports_are_deterministic(capsys):
    args = ["verify", "--json", "--seed", "11", INSTANCES / "proj-m2-klein.json"]
    first = run(capsys, *args)[1]
    second = run(capsys, *args)[1]
    assert first == second
    assert "seconds" not in first


def test_timing_flag(capsys):
    out = run(capsys, "validate", "--json", "--timing", INSTANCES / "ga-z2.json")[1]
    assert "seconds" in out


def test_structure_dump(capsys):
    code, out, _ = run(capsys, "structure", "--json", INSTANCES / "fa-klein-point-twisted.json")
    assert code == 0
    payload = json.loads(out)
    assert payload["dims"] == [1, 1, 1, 1]
    assert len(payload["product"]) == 16 and len(payload["coproduct"]) == 16
    assert payload["counit"] == ["1"]
    code, out, _ = run(capsys, "structure", INSTANCES / "ga-z2.json")
    assert "m[0,1]" in out and "delta[1,1]" in out


def test_build_group_algebra_round_trip(capsys, tmp_path):
    out = tmp_path / "z2.json"
    assert run(capsys, "build", "group-algebra", "--group", "cyclic:2", "--out", out)[0] == 0
    B = load_instance(out)
    assert bundles_equal(B, builders.group_algebra_bundle(builders.cyclic(2)))


def test_build_families(capsys, tmp_path):
    for argv in (
        ["projective-matrix"],
        ["truncated-polynomial", "--trivial-action"],
        ["function-algebra", "--variant", "fa-z2-swap"],
        ["shipped", "--variant", "ga-z3", "--field", "gf:7"],
    ):
        out = tmp_path / "x.json"
        assert run(capsys, "build", *argv, "--out", out)[0] == 0
        load_instance(out)


def test_usage_errors(capsys, tmp_path):
    assert run(capsys)[0] == 1
    assert run(capsys, "hh0", "--field", "gf:4", INSTANCES / "ga-z2.json")[0] == 1
    assert run(capsys, "hh0", tmp_path / "missing.json")[0] == 1
    assert run(capsys, "build", "function-algebra", "--variant", "ga-z2", "--out", tmp_path / "x.json")[0] == 1
    assert run(capsys, "build", "group-algebra", "--group", "dihedral:4", "--out", tmp_path / "x.json")[0] == 1
    assert run(capsys, "build", "truncated-polynomial", "--field", "gf:2", "--out", tmp_path / "x.json")[0] == 1
    bad = tmp_path / "bad.json"
    bad.write_text('{"format_version": 1, "field": "q", "group": {"order": 1, "cayley": [[0]]}}')
    assert run(capsys, "validate", bad)[0] == 1
