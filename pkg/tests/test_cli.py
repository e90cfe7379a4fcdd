import json

import pytest

from ulrc.cli import main

PARAMS_A = '{"p":5,"a":1,"t":6,"delta":2,"m":[1,1,1],"k":4}'


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def built(tmp_path, capsys):
    desc = tmp_path / "code.json"
    msg = tmp_path / "msg.txt"
    word = tmp_path / "word.txt"
    assert run(capsys, "construct", "--params", PARAMS_A, "--out", str(desc))[0] == 0
    msg.write_text("11\n2\n3000\n4\n")
    assert run(capsys, "encode", "--code", str(desc), "--message", str(msg), "--out", str(word))[0] == 0
    return desc, msg, word


def test_bounds_json(capsys):
    code, out, _ = run(capsys, "bounds", "--req", '{"delta":2,"n":[2,3,4]}', "--k", "4")
    rep = json.loads(out)
    assert code == 0 and rep["d_UB_req"] == 4 and rep["d_classic"] == 5


def test_bounds_table_and_profile(capsys):
    code, out, _ = run(capsys, "bounds", "--req", '{"delta":2,"n":[2,3]}', "--k", "3", "--profile", "--format", "table")
    assert code == 0 and "kind" in out and "profile" in out
    assert any(line.split() == ["d_UB_prf", "2"] for line in out.splitlines())


def test_bounds_infeasible_flagged(capsys):
    code, out, _ = run(capsys, "bounds", "--req", '{"delta":2,"n":[0,1,1]}', "--k", "2")
    assert code == 0 and json.loads(out)["infeasible"]


def test_missing_file_exit_2(capsys, tmp_path):
    code, _, err = run(capsys, "bounds", "--req", str(tmp_path / "nope.json"))
    assert code == 2 and "cannot read" in err


def test_bad_json_exit_2(capsys):
    assert run(capsys, "bounds", "--req", "{not json")[0] == 2


def test_constraint_exit_3(capsys):
    assert run(capsys, "construct", "--params", '{"p":5,"t":6,"delta":2,"m":[1,1,1],"k":7}')[0] == 3


def test_profile_search(capsys):
    code, out, _ = run(capsys, "profile-search", "--req", '{"delta":2,"n":[0,1,1]}', "--k", "1")
    rows = [json.loads(l) for l in out.splitlines()]
    assert code == 0 and [r["profile"] for r in rows][0] == [2, 0, 0] and len(rows) == 5
    assert rows[0]["d_UB_prf"] == 2


def test_construct_descriptor(built):
    desc = json.loads(built[0].read_text())
    assert desc["n"] == 9 and len(desc["groups"]) == 3


def test_encode_erase_decode(built, capsys, tmp_path):
    desc, msg, word = built
    out = tmp_path / "dec.txt"
    code, _, _ = run(capsys, "decode", "--code", str(desc), "--word", str(word), "--erase", "1,4,9", "--out", str(out))
    assert code == 0 and out.read_text() == msg.read_text()


def test_star_erasures_in_file(built, capsys):
    desc, msg, word = built
    lines = word.read_text().splitlines()
    for i in (0, 3, 8):
        lines[i] = "*"
    word.write_text("\n".join(lines) + "\n")
    code, out, _ = run(capsys, "decode", "--code", str(desc), "--word", str(word))
    assert code == 0 and out == msg.read_text()


def test_data_loss_exit_4(built, capsys):
    desc, _, word = built
    # the greedy worst 5-erasure pattern for this code keeps groups 1, 2 only
    assert run(capsys, "decode", "--code", str(desc), "--word", str(word), "--erase", "5,6,7,8,9")[0] == 4


def test_repair_in_place(built, capsys):
    desc, _, word = built
    original = word.read_text()
    lines = original.splitlines()
    lines[6] = "*"
    word.write_text("\n".join(lines) + "\n")
    code, out, _ = run(capsys, "repair", "--code", str(desc), "--word", str(word), "--index", "7")
    assert code == 0 and "symbols_read=3" in out
    assert word.read_text() == original


def test_repair_infeasible_exit_5(built, capsys):
    desc, _, word = built
    code, _, err = run(capsys, "repair", "--code", str(desc), "--word", str(word), "--index", "1", "--erase", "1,2")
    assert code == 5 and "global decode" in err


def test_verify_quick_and_full(built, capsys):
    desc = built[0]
    code, out, _ = run(capsys, "verify", "--code", str(desc), "--level", "quick")
    names = [c["name"] for c in json.loads(out)["checks"]]
    assert code == 0 and "oracle_distance_optimal" not in names
    code, out, _ = run(capsys, "verify", "--code", str(desc))
    assert code == 0 and json.loads(out)["passed"]


def test_verify_detects_corrupted_generator(built, capsys):
    desc = built[0]
    obj = json.loads(desc.read_text())
    gen = obj["groups"][2]["generator"]  # group of pre-size 3, local [4,3,2] code
    gen[0][3] = 0  # parity column now misses the first information symbol
    desc.write_text(json.dumps(obj))
    code, out, _ = run(capsys, "verify", "--code", str(desc))
    failed = {c["name"] for c in json.loads(out)["checks"] if not c["passed"]}
    assert code == 1
    assert failed & {"oracle_distance_optimal", "profile_equals_requirement", "local_codes_mds"}


def test_verify_cap_exit_6(capsys):
    params = '{"p":7,"t":7,"delta":3,"m":[1,3],"k":3}'  # n = 3 + 12 = 15 > 12
    assert run(capsys, "verify", "--params", params)[0] == 6


def test_simulate(capsys):
    cfg = json.dumps({"params": json.loads(PARAMS_A), "rounds": 30, "failures_per_round": 1, "seed": 9})
    code, out, _ = run(capsys, "simulate", "--config", cfg)
    rep = json.loads(out)
    assert code == 0 and rep["local_repairs"] == 30 and rep["data_loss_events"] == 0


def test_simulate_bad_config_exit_2(capsys):
    cfg = json.dumps({"params": json.loads(PARAMS_A), "rounds": 0, "fail_prob": 0.1})
    assert run(capsys, "simulate", "--config", cfg)[0] == 2
    cfg = json.dumps({"params": json.loads(PARAMS_A), "fail_prob": 1.5})
    assert run(capsys, "simulate", "--config", cfg)[0] == 2
