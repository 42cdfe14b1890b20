import json

from hypothesis import HealthCheck, given, settings, strategies as st

from conftest import EXAMPLE_FIXTURES
from starkindex.cli import EXIT_FAIL, EXIT_INCONSISTENT, EXIT_OK, EXIT_SCHEMA, IngestError, ingest, main, run_verify
from starkindex.cli.ingest import record_to_json
from starkindex.starkgate import random_record


def _write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(doc if isinstance(doc, str) else json.dumps(doc))
    return p


def _doc(m=2, seed=1):
    return record_to_json(random_record(m, seed))


def test_valid_record_passes(tmp_path):
    p = _write(tmp_path, "ok.json", _doc())
    assert main(["verify", str(p)]) == EXIT_OK


def test_schema_error_names_the_field(tmp_path, capsys):
    doc = _doc()
    del doc["field_summary"]["h_K"]
    p = _write(tmp_path, "bad.json", doc)
    assert main(["verify", str(p)]) == EXIT_SCHEMA
    assert "field_summary" in capsys.readouterr().err


def test_unparseable_file(tmp_path):
    assert main(["verify", str(_write(tmp_path, "junk.json", "{not json"))]) == EXIT_SCHEMA
    assert main(["verify", str(tmp_path / "missing.json")]) == EXIT_SCHEMA


def test_gamma_action_of_wrong_order(tmp_path):
    doc = _doc(2)
    doc["minus_units"]["gamma_action"] = [[1, 0], [0, 1]]
    assert main(["verify", str(_write(tmp_path, "g.json", doc))]) == EXIT_INCONSISTENT


def test_sextic_without_subfield_block(tmp_path):
    doc = _doc(3)
    del doc["sub_extension_F"]
    assert main(["verify", str(_write(tmp_path, "s.json", doc))]) == EXIT_INCONSISTENT


def test_wrong_class_number_fails(tmp_path):
    doc = _doc(1, 4)
    doc["field_summary"]["h_K"] *= 3
    code = main(["verify", str(_write(tmp_path, "h.json", doc))])
    assert code in (EXIT_FAIL, EXIT_INCONSISTENT)


def test_exit_precedence(tmp_path):
    ok = _write(tmp_path, "ok.json", _doc())
    bad = _doc(2)
    bad["minus_units"]["gamma_action"] = [[1, 0], [0, 1]]
    inc = _write(tmp_path, "inc.json", bad)
    junk = _write(tmp_path, "junk.json", "[]")
    assert main(["verify", str(ok), str(inc)]) == EXIT_INCONSISTENT
    assert main(["verify", str(ok), str(inc), str(junk)]) == EXIT_SCHEMA


def test_empty_file_list():
    assert main(["verify"]) == EXIT_OK


def test_json_output(tmp_path, capsys):
    p = _write(tmp_path, "ok.json", _doc())
    main(["verify", "--json", str(p)])
    out = json.loads(capsys.readouterr().out)
    assert out["exit_code"] == EXIT_OK
    assert out["records"][0]["p1"]["status"] == "PASS"


def test_reports_are_deterministic(tmp_path):
    p = _write(tmp_path, "ok.json", _doc(3, 2))
    a = json.dumps(run_verify([p]), sort_keys=True, default=str)
    b = json.dumps(run_verify([p]), sort_keys=True, default=str)
    assert a == b


def test_schema_subcommand(capsys):
    assert main(["schema"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["type"] == "object"


def test_synth_roundtrip(tmp_path, capsys):
    assert main(["synth", "--m", "3", "--count", "2", "--out", str(tmp_path)]) == EXIT_OK
    files = sorted(tmp_path.glob("*.json"))
    assert len(files) == 2
    assert main(["verify", *map(str, files)]) == EXIT_OK


def test_fixture_roundtrip():
    for p in sorted(EXAMPLE_FIXTURES.glob("*.json")):
        rec = ingest(p)
        assert record_to_json(rec)["field_summary"]["h_K"] == rec.summary.h_K


@settings(max_examples=100, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(st.binary(max_size=200))
def test_ingest_is_total(tmp_path, data):
    p = tmp_path / "fuzz.json"
    p.write_bytes(data)
    try:
        ingest(p)
    except IngestError as exc:
        assert exc.code in (EXIT_SCHEMA, EXIT_INCONSISTENT)


@settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(st.recursive(st.none() | st.booleans() | st.integers() | st.text(max_size=5),
                    lambda c: st.lists(c, max_size=3) | st.dictionaries(st.text(max_size=8), c, max_size=3),
                    max_leaves=10))
def test_ingest_is_total_on_json(tmp_path, doc):
    p = tmp_path / "fuzz.json"
    p.write_text(json.dumps(doc))
    try:
        ingest(p)
    except IngestError as exc:
        assert exc.code in (EXIT_SCHEMA, EXIT_INCONSISTENT)
