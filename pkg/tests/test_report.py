import math

import numpy as np
import pytest

from rectmod.report import CheckReport, GridSpec, from_jsonl, to_jsonl


@pytest.mark.parametrize("law", ["uniform", "endpoint_refined", "logarithmic"])
def test_points_basic(law):
    g = GridSpec(1e-3, 0.9, 1000, law)
    pts = g.points()
    assert len(pts) == 1000
    assert pts[0] == 1e-3 and pts[-1] == 0.9
    assert np.all(np.diff(pts) > 0)


def test_endpoint_refined_half_near_ends():
    g = GridSpec(0.0, 1.0, 1000, "endpoint_refined")
    pts = g.points()
    w = 0.01
    near = np.count_nonzero((pts <= w) | (pts >= 1 - w))
    assert near >= 500


@pytest.mark.parametrize("args", [(1.0, 1.0, 10), (2.0, 1.0, 10), (0.0, 1.0, 1), (0.0, 1.0, 10, "logarithmic"),
                                  (0.0, 1.0, 10, "cubic")])
def test_invalid(args):
    with pytest.raises(ValueError):
        GridSpec(*args)


def test_report_json_round_trip():
    reps = [
        CheckReport("a", "pass", 1e-15, 0.5, 10),
        CheckReport("b", "fail", -3.0, (0.1, 0.2), 4, "detail"),
        CheckReport("c", "pass", math.inf, None, 1),
    ]
    text = to_jsonl(reps)
    assert text.count("\n") == 3
    assert from_jsonl(text) == reps
    assert reps[0].passed and not reps[1].passed
