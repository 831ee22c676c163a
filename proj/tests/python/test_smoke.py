import json

import pytest

import lowrank

F3 = {"kind": "Fp", "p": 3}


def test_cubic_verify_exceptional():
    doc = {"ring": F3, "b": 1, "c": 0, "m": 1, "n": 1, "y": 0, "z": 1}
    assert lowrank.call("cubic", "verify", doc=doc) == {"valid": True, "case": "exceptional"}


def test_relation_error_carries_exit_code():
    doc = {"ring": "Z", "b": 0, "c": 1, "m": 1, "n": 0, "y": 0, "z": 0}
    with pytest.raises(lowrank.CommandError) as info:
        lowrank.call("cubic", "build", doc=doc)
    assert info.value.code == 1
    assert info.value.error["violated"] == ["cm = 0", "m^2 = mz"]


def test_malformed_input_exit_code():
    code, out, err = lowrank.run(["cubic", "verify", "{oops"])
    assert code == 2
    assert out == ""
    assert json.loads(err)["error"] == "input"


def test_native_relations_and_case():
    assert lowrank.validate_relations({"ring": "Z", "b": 2, "c": 0, "m": 3, "n": 2, "y": 0, "z": 3}) == (True, [])
    valid, violated = lowrank.validate_relations({"ring": "Z", "b": 0, "c": 1, "m": 1, "n": 0, "y": 0, "z": 0})
    assert not valid and "cm = 0" in violated
    assert lowrank.classify_case({"ring": "Z", "b": 0, "c": 0, "m": 0, "n": 0, "y": 0, "z": 0}) == "nilproduct"
    with pytest.raises(ValueError):
        lowrank.classify_case(json.dumps({"ring": "Z"}))


def test_census_f2():
    report = lowrank.census(2)
    assert report["valid"] == 19
    assert report["verdict"] == "pass"
    with pytest.raises(ValueError):
        lowrank.census(4)


def test_round_trip_through_involution():
    doc = {"ring": F3, "b": 1, "c": 0, "m": 1, "n": 1, "y": 0, "z": 1}
    algebra = lowrank.call("cubic", "build", doc=doc)
    found = lowrank.call("inv", "find", doc=algebra)
    assert found.pop("found") is True
    checked = lowrank.call("inv", "verify", doc=found)
    assert checked == {"involution": True, "standard": True}


def test_flags_are_forwarded():
    assert lowrank.call("census", "quad", p="5")["class_count"] == 3
    assert lowrank.call("quad", "disc", doc={"t": 1, "n": 1}, ring="Q")["discriminant"] == "-3"
