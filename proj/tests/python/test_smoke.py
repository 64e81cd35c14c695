import json
import os
from pathlib import Path

import pytest

import mtrs

DATA = Path(os.environ.get("MTRS_TEST_DATA", Path(__file__).resolve().parents[1] / "data"))


def test_field_arithmetic():
    f = mtrs.Field(16)
    assert f.order == 16
    assert f.modulus == [1, 1, 0, 0, 1]
    assert f.mul("a^3", "a") == "a + 1"
    assert f.add("a^2 + 1", "1") == "a^2"
    assert f.mul(f.inv("a^3 + a^2"), "a^3 + a^2") == "1"
    assert len(f.elements()) == 16


def test_check_mds_on_profile():
    profile = json.loads((DATA / "example32.json").read_text())
    for method in ("bruteforce", "theorem31", "remark44"):
        assert mtrs.check_mds(profile, method)["is_mds"]


def test_hull_of_even_example():
    report = mtrs.hull(json.loads((DATA / "ex54.json").read_text()))
    assert report["gram_rank"] == 2
    assert report["hull_dim"] == 1
    assert mtrs.min_distance(json.loads((DATA / "ex54.json").read_text())) == 4


def test_constructions_round_trip():
    even = mtrs.construct_even(16, 3, [2, 3], [1, 2], ["a^3", "a^3 + a^2"])
    assert even["hull"]["hull_dim"] == 1
    assert mtrs.hull(even["profile"])["gram_rank"] == 2
    odd = mtrs.construct_odd(81, 5, [1, 2], [2, 3], ["a^3 + a^2", "a"])
    assert odd["dim"] == 4
    assert odd["gram_decomposition"]["cross"][0][2] == "a"


def test_enumeration_agrees_across_criteria():
    closed = mtrs.count_mds_double_twisted(7, 5, 3)
    assert closed == mtrs.count_mds_double_twisted(7, 5, 3, criterion="bruteforce", workers=2)
    assert closed == 186


def test_domain_errors_raise():
    with pytest.raises(mtrs.DomainError):
        mtrs.count_mds_double_twisted(5, 3, 2)
    with pytest.raises(ValueError):
        mtrs.Field(6)


def test_cli_in_process():
    code, doc, _ = mtrs.run_cli("enumerate", "--q", 5, "--n", 4, "--k", 2)
    assert code == 0 and doc["count"] == 28
    code, doc, _ = mtrs.run_cli("enumerate", "--q", 5, "--n", 3, "--k", 2)
    assert code == 1 and doc["error"]["kind"] == "invalid_argument"
    code, doc, err = mtrs.run_cli("no-such-command")
    assert code == 2 and doc is None and err
