import json
import math

import pytest

import placement_opt as po


def test_symmetric_logit_probabilities():
    inst = po.Instance.from_json(json.dumps({
        "products": [{"id": 0, "price": 1.0}, {"id": 1, "price": 1.0}],
        "m": 1,
        "choice_model": {"type": "mnl", "weights": [1.0, 1.0]},
        "browsing": {"type": "line", "theta": [1.0]},
    }))
    assert inst.choice_probs([0, 1]) == pytest.approx([1 / 3, 1 / 3])
    assert inst.revenue([0, 1]) == pytest.approx(2 / 3)


def test_json_round_trip():
    inst = po.gen_random(n=4, m=3, model="markov", browsing="explicit", seed=5)
    text = inst.to_json()
    assert po.Instance.from_json(text).to_json() == text


def test_compare_matches_brute_force():
    inst = po.gen_random(n=4, m=3, seed=11)
    reports = po.compare(inst, ["randomized", "brute", "best-of-many"])
    assert list(reports) == ["best-of-many", "brute", "randomized"]
    opt = reports["brute"]["w_exact"]
    for report in reports.values():
        assert report["w_exact"] <= opt + 1e-12
        assert inst.expected_revenue(report["placement"]) == pytest.approx(report["w_exact"])


def test_seeded_randomized_is_reproducible():
    inst = po.gen_random(n=5, m=3, model="mmnl", seed=2)
    a = po.solve(inst, "randomized", seed=7)
    b = po.solve(inst, "randomized", seed=7)
    a.pop("ms"), b.pop("ms")
    assert a == b


def test_estimate_and_sample_size():
    assert po.sample_size(10, 0.1, 0.05) == 14979
    inst = po.gen_random(n=3, m=2, seed=4)
    out = po.estimate(inst, [0, 1], samples_override=20000, seed=3)
    exact = inst.expected_revenue([0, 1])
    assert out["samples"] == 20000
    assert abs(out["value"] - exact) <= 4 * out["std_error"] + 1e-12


def test_heavy_tail_groups():
    inst, groups, u_products = po.gen_instance_i(4, 1.0)
    assert inst.revenue(groups[3]) == pytest.approx(1.0)
    assert len(u_products) == 3
    members, dummies = po.best_assortment(po.gen_lemma_single_1(3), 3)
    assert len(members) + dummies == 3


def test_errors_map_to_python_exceptions():
    with pytest.raises(po.ParseError):
        po.Instance.from_json("{}")
    with pytest.raises(po.SizeGuardError):
        po.solve(po.gen_random(n=30, m=6), "brute")
    with pytest.raises(po.ContractError):
        po.solve(po.gen_random(n=4, m=2), "uniform-greedy")
    assert math.isfinite(po.DEFAULT_SEED)
