"""Python smoke tests for the semdis extension module."""

import math

import pytest

import semdis


def test_random_walk_deterministic():
    a = semdis.random_walk(500, seed=12)
    b = semdis.random_walk(500, seed=12)
    assert len(a) == 500
    assert a == b
    assert a != semdis.random_walk(500, seed=13)


def test_znorm_dist_hand_values():
    assert semdis.znorm_dist([1.0, 2.0, 3.0], [4.0, 5.0, 6.0]) == pytest.approx(0.0, abs=1e-7)
    assert semdis.znorm_dist([1.0, 2.0, 3.0], [3.0, 2.0, 1.0]) == pytest.approx(
        2.0 * math.sqrt(3.0), rel=1e-9
    )
    with pytest.raises(semdis.FlatWindowError):
        semdis.znorm_dist([1.0, 1.0, 1.0], [1.0, 2.0, 3.0])


def test_overlapping_rate_cases():
    assert semdis.overlapping_rate(100, 199, 100, 199) == 1.0
    assert semdis.overlapping_rate(100, 199, 300, 399) == 0.0
    assert semdis.overlapping_rate(100, 199, 150, 249) == 0.5


def test_detect_pruned_equals_brute():
    values = semdis.random_walk(260, seed=5)
    pruned = semdis.detect(values, context_len=32, target_len=13, seed=5)
    brute = semdis.detect(values, context_len=32, target_len=13, seed=5,
                          algorithm="smart-brute")
    assert pruned["target"] == brute["target"]
    assert pruned["match_target"] == brute["match_target"]
    assert pruned["context"] == brute["context"]
    assert pruned["match_context"] == brute["match_context"]
    assert pruned["distance"] == pytest.approx(brute["distance"], rel=1e-9, abs=1e-9)
    assert pruned["metrics"]["distance_calls"] <= brute["metrics"]["distance_calls"]


def test_detect_defaults_and_determinism():
    values = semdis.random_walk(300, seed=9)
    a = semdis.detect(values, context_len=40, seed=9)
    b = semdis.detect(values, context_len=40, seed=9, threads=2)
    assert a == b
    assert a["target_len"] == 16  # round(0.4 * 40)
    assert a["metrics"]["pruning_rate"] >= 0.0


def test_bump_scenario_end_to_end():
    bump = semdis.generate_bump_series(cycles=12, seed=21)
    rep = semdis.detect(bump["values"], context_len=bump["suggested_context_len"], seed=21)
    l = rep["target_len"]
    overlap = semdis.overlapping_rate(
        rep["target"] + 1, rep["target"] + l, bump["truth_start"], bump["truth_end"]
    )
    assert overlap >= 0.5
    pos, _ = semdis.classic_discord(bump["values"], l)
    classic_overlap = semdis.overlapping_rate(
        pos + 1, pos + l, bump["truth_start"], bump["truth_end"]
    )
    assert classic_overlap <= 0.2


def test_concat_generator():
    normal = [[0.0, 1.0, 0.0, 1.0]] * 3
    anomaly = [[5.0, 6.0, 7.0]]
    out = semdis.generate_concat_series(normal, anomaly, normal_count=10, seed=4)
    assert len(out["values"]) == 10 * 4 + 3
    s, e = out["truth_start"], out["truth_end"]
    assert out["values"][s - 1 : e] == [5.0, 6.0, 7.0]


def test_empty_result_error():
    with pytest.raises(semdis.EmptyResultError):
        semdis.detect([1.0] * 100, context_len=20, epsilon=1.0)


def test_calibrate_epsilon_deterministic():
    values = semdis.random_walk(400, seed=2)
    a = semdis.calibrate_epsilon(values, context_len=40, seed=3)
    b = semdis.calibrate_epsilon(values, context_len=40, seed=3)
    assert a == b and a > 0.0
