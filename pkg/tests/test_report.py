import json

import pytest

from fermat_descent import report as rep
from fermat_descent.descent import solve
from fermat_descent.equation import FermatEquation
from fermat_descent.point_search import SearchBounds
from conftest import EX1, EX2, EX3

BOUNDS = SearchBounds(3, 3000)


@pytest.mark.parametrize(
    "eq", [EX1, EX2, EX3, FermatEquation(1, 2, -3, 5), FermatEquation(7, 32, -1, 5)]
)
def test_json_round_trip(eq):
    r = solve(eq, BOUNDS)
    r.annotations["jacobian_rank"] = "1"
    text = rep.encode_report(r)
    back = rep.decode_report(text)
    assert back == r
    assert rep.encode_report(back) == text


def test_big_integers_are_strings():
    obj = json.loads(rep.encode_report(solve(EX1, BOUNDS)))
    assert obj["curve"]["integral_constant"] == "202689719415562500000000"

    def walk(o):
        if isinstance(o, dict):
            for v in o.values():
                walk(v)
        elif isinstance(o, list):
            for v in o:
                walk(v)
        else:
            assert not isinstance(o, (int, float)) or isinstance(o, bool)

    walk(obj)


def test_canonical_record_is_deterministic():
    a = rep.dumps(rep.make_record("ok", "2,9,11,5", solve(EX2, BOUNDS), bounds=BOUNDS, canonical=True))
    b = rep.dumps(rep.make_record("ok", "2,9,11,5", solve(EX2, BOUNDS), bounds=BOUNDS, canonical=True))
    assert a == b
    assert "timestamp" not in json.loads(a)
    assert "timestamp" in rep.make_record("ok", "x")


def test_report_always_has_caveat():
    obj = rep.report_to_dict(solve(EX3, BOUNDS))
    assert "caveat" in obj and obj["caveat"]
    assert obj["complete_within_bounds"] is True
