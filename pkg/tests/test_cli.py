import json
from pathlib import Path

from app.cli import run


def _write(path: Path, content: str) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(content, encoding="utf-8")
    return path


def test_tau_json():
    outcome = run(["tau", "--a", "7", "--b", "21", "--json"])
    payload = json.loads(outcome.payload)
    assert outcome.exit_code == 0
    assert payload["value"] == 63
    assert payload["attained_case"] == "tau_5"
    assert payload["bounds"]["lemma_upb3"] == 63


def test_tau_text():
    outcome = run(["tau", "--a", "2", "--b", "13"])
    assert outcome.exit_code == 0
    assert outcome.payload.splitlines()[0] == "tau(S_{2,13}) = 33  case tau_1"


def test_construct_out_of_range():
    outcome = run(["construct", "--a", "1", "--b", "1", "--c", "3"])
    assert outcome.exit_code == 4
    assert "tau(S_{1,1}) = 2" in outcome.payload


def test_construct_out_of_range_json():
    outcome = run(["construct", "--a", "1", "--b", "1", "--c", "3", "--json"])
    payload = json.loads(outcome.payload)
    assert outcome.exit_code == 4
    assert payload["error"] == "out-of-range"


def test_construct_text_lists_the_groups():
    outcome = run(["construct", "--a", "1", "--b", "2", "--c", "5", "--trace"])
    lines = outcome.payload.splitlines()
    assert outcome.exit_code == 0
    assert lines[0] == "S(1,2)+5*P3  k=14"
    assert "E_I: 3" in lines
    assert "E_A: 13" in lines
    assert "E_B: 8 9" in lines
    assert lines[-1].startswith("case c3_5")


def test_construct_dot():
    outcome = run(["construct", "--a", "1", "--b", "1", "--c", "0", "--format", "dot"])
    assert outcome.exit_code == 0
    assert outcome.payload.startswith("graph forest {")
    assert '0 -- 1 [label="3"];' in outcome.payload


def test_construct_then_verify(tmp_path):
    outcome = run(["construct", "--a", "3", "--b", "12", "--c", "34", "--json", "--trace"])
    payload = json.loads(outcome.payload)
    assert payload["trace"]["case_tag"] == "high_W"
    labeling = _write(tmp_path / "labeling.json", outcome.payload)

    verified = run(["verify", str(labeling), "--expect-ad", "1,1"])
    assert verified.exit_code == 0
    assert verified.payload.startswith("PASS")

    mismatch = run(["verify", str(labeling), "--expect-ad", "2,1", "--json"])
    assert mismatch.exit_code == 3
    assert json.loads(mismatch.payload)["ad_progression"] == [1, 1]


def test_verify_failure(tmp_path):
    labeling = _write(
        tmp_path / "bad.json",
        json.dumps({"edges": [[0, 1], [1, 2], [3, 4], [4, 5]], "labels": [1, 2, 3, 4]}),
    )
    outcome = run(["verify", str(labeling)])
    assert outcome.exit_code == 2
    assert outcome.payload.startswith("FAIL 2*P3")


def test_verify_rejects_invalid_json(tmp_path):
    labeling = _write(tmp_path / "broken.json", "{not json")
    assert run(["verify", str(labeling)]).exit_code == 1


def test_verify_rejects_a_non_bijection(tmp_path):
    labeling = _write(tmp_path / "dup.json", json.dumps({"edges": [[0, 1], [1, 2]], "labels": [2, 2]}))
    outcome = run(["verify", str(labeling)])
    assert outcome.exit_code == 4
    assert outcome.payload.startswith("invalid-labeling")


def test_search_json():
    outcome = run(["search", "--graph", "2*P3", "--json"])
    payload = json.loads(outcome.payload)
    assert outcome.exit_code == 0
    assert payload["verdict"] == "refuted"
    assert payload["complete"] is True


def test_search_one_one_finds_a_labeling():
    outcome = run(["search", "--graph", "P3", "--mode", "one-one", "--json"])
    payload = json.loads(outcome.payload)
    assert payload["verdict"] == "found"
    assert sorted(payload["labeling"]["labels"]) == [1, 2]


def test_search_one_one_screened_out():
    outcome = run(["search", "--graph", "S3+P3", "--mode", "one-one", "--json"])
    assert json.loads(outcome.payload)["screened_out"] is True


def test_search_refuses_without_budget():
    outcome = run(["search", "--graph", "S(1,2)+6*P3"])
    assert outcome.exit_code == 4
    assert outcome.payload.startswith("refuse-to-run")


def test_search_parse_error():
    outcome = run(["search", "--graph", "C5", "--json"])
    assert outcome.exit_code == 4
    assert json.loads(outcome.payload)["error"] == "parse-error"


def test_tau_exhaustive():
    outcome = run(["tau-exhaustive", "--graph", "S(1,1)", "--c-limit", "3"])
    assert outcome.payload == "tau(S(1,1)) = 2"
    negative = json.loads(run(["tau-exhaustive", "--graph", "2*P3", "--c-limit", "1", "--json"]).payload)
    assert negative["tau"] is None
    assert negative["base_antimagic"] is False


def test_pell_screen():
    outcome = run(["pell", "--max-n", "1000", "--screen", "--json"])
    rows = json.loads(outcome.payload)
    assert [(row["n"], row["m"]) for row in rows] == [(3, 2), (20, 14), (119, 84), (696, 492)]
    assert rows[3]["screen"]["feasible"] is False
    assert rows[2]["screen"]["c"] == 34


def test_census():
    outcome = run(["census", "--n", "8", "--m", "6"])
    assert len(outcome.payload.splitlines()) == 6


def test_table1_text():
    outcome = run(["table1", "--m-lo", "14", "--m-hi", "16"])
    lines = outcome.payload.splitlines()
    assert lines[0].endswith("| 1* 1* 1* 1* 1* 1*")
    assert lines[2].endswith("| 1 1 2* 2* 2* 2* 2*")


def test_table1_json():
    rows = json.loads(run(["table1", "--json"]).payload)
    assert [row["m"] for row in rows] == list(range(3, 30))
    assert rows[0]["tau0"] == 2


def test_figure2():
    outcome = run(["figure2"])
    lines = outcome.payload.splitlines()
    assert outcome.exit_code == 0
    assert len(lines) == 6
    assert all(line.startswith("PASS") and line.endswith("(a,d)=(1, 1)") for line in lines)


def test_unknown_command():
    assert run(["frobnicate"]).exit_code == 1


def test_missing_option():
    assert run(["tau", "--a", "1"]).exit_code == 1


def test_invalid_parameters_are_usage_errors():
    outcome = run(["tau", "--a", "5", "--b", "4"])
    assert outcome.exit_code == 1
    assert outcome.payload.startswith("invalid-parameters")
    payload = json.loads(run(["pell", "--max-n", "2", "--json"]).payload)
    assert payload["error"] == "invalid-parameters"


def test_search_with_workers_matches_a_single_process():
    single = json.loads(run(["search", "--graph", "S(1,1)+2*P3", "--json", "--workers", "1"]).payload)
    pooled = json.loads(run(["search", "--graph", "S(1,1)+2*P3", "--json", "--workers", "2"]).payload)
    assert pooled["labeling"] == single["labeling"]
    assert pooled["nodes_explored"] == single["nodes_explored"]
