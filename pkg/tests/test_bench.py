import csv
import io

import pytest

from kspace.bench import CSV_COLUMNS, parse_suite, run_instance, run_suite, to_csv
from kspace.errors import KspaceError


SUITE = """\
[suite]
timeout = 60

[[instances]]
name = "tiny-theta"
kind = "theta"
seed = 3
w = 8
h = 5
a = 2
b = 2

[[instances]]
kind = "base"
seed = 4
w = 7
n = 4
c = 3

[[instances]]
kind = "ls"
seed = 5
mu = 3
lam = 2
kappa = 2
nc = ["x", "y"]
"""


def test_suite_parsing_fills_defaults():
    instances = parse_suite(SUITE)
    assert [i["name"] for i in instances] == ["tiny-theta", "base-4", "ls-5"]
    assert instances[0]["routes"] == ["e"]
    assert instances[1]["routes"] == ["e", "dowling"]
    assert instances[2]["routes"] == ["e", "n", "dowling"]
    assert all(i["timeout"] == 60 for i in instances)


def test_suite_parsing_rejects_bad_kinds_and_routes():
    with pytest.raises(KspaceError):
        parse_suite('[[instances]]\nkind = "nope"\n')
    with pytest.raises(KspaceError):
        parse_suite('[[instances]]\nkind = "theta"\nroutes = ["n"]\n')


def test_all_routes_of_one_instance_agree_on_the_count():
    inst = parse_suite(SUITE)[2]
    records = run_instance(inst)
    assert [r["route"] for r in records] == ["e", "n", "dowling"]
    counts = {r["states"] for r in records}
    assert len(counts) == 1
    assert all(r["status"] == "ok" for r in records)
    e_rec = records[0]
    assert int(e_rec["rows"]) <= int(e_rec["states"])
    assert float(e_rec["ratio"]) >= 1.0


def test_run_suite_produces_one_record_per_route():
    records = run_suite(parse_suite(SUITE), jobs=2)
    assert len(records) == 1 + 2 + 3
    assert all(r["status"] == "ok" for r in records)


def test_timeouts_are_recorded_not_fatal():
    suite = """\
[[instances]]
kind = "theta"
seed = 1
w = 26
h = 60
a = 2
b = 6
timeout = 0.001
"""
    records = run_suite(parse_suite(suite))
    assert [r["status"] for r in records] == ["timeout"]


def test_csv_schema():
    records = run_suite(parse_suite(SUITE))
    text = to_csv(records)
    rows = list(csv.DictReader(io.StringIO(text)))
    assert list(rows[0].keys()) == CSV_COLUMNS
    assert len(rows) == len(records)
    for row in rows:
        if row["status"] == "ok":
            assert row["states"].isdigit()
            assert row["t_total"]
