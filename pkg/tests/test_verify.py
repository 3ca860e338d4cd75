import pytest

from rectmod import psimu, verify
from rectmod.report import GridSpec, from_jsonl, to_jsonl

# limit claims whose convergence is too slow to reach 1e-3 at distance 1e-6
# from the endpoint, plus the comparison gap at 1e6 (still ~0.19)
SLOW_LIMITS = {
    "thm1.2-limit-0",
    "lemma2.3-2-c0.5-limit-1",
    "lemma2.3-2-c1-limit-1",
    "lemma2.4-f5-limit-1",
    "lemma2.4-f8-limit-0",
    "thm4.1-limit",
}


@pytest.fixture(scope="module")
def full_run():
    return verify.run_all()


def test_report_count_matches_registry(full_run):
    assert len(full_run) == len(verify.REGISTRY)
    assert [r.claim_id for r in full_run] == list(verify.REGISTRY)


def test_only_slow_limits_fail(full_run):
    failed = {r.claim_id for r in full_run if not r.passed}
    assert failed == SLOW_LIMITS


def test_deterministic(full_run):
    again = [verify.run_check(cid) for cid in ("thm1.3-inequality", "lemma2.4-f5-decreasing", "thm4.2-bracket")]
    by_id = {r.claim_id: r for r in full_run}
    for rep in again:
        assert rep == by_id[rep.claim_id]


def test_jsonl_round_trip(full_run):
    assert from_jsonl(to_jsonl(full_run)) == full_run


def test_unknown_claim():
    with pytest.raises(LookupError):
        verify.run_check("nonexistent")
    with pytest.raises(LookupError):
        verify.run_all(prefix="nonexistent")


def test_prefix_filter():
    assert verify.claim_ids("thm1.1") == ["thm1.1-identity-1", "thm1.1-identity-2"]
    assert len(verify.run_all(prefix="thm1.1")) == 2


def test_spec_examples():
    rep = verify.run_check("thm1.1-identity-1", GridSpec(1e-3, 1 - 1e-3, 1000))
    assert rep.passed and rep.worst_margin <= 1e-10
    assert verify.run_check("lemma2.4-f6-negative").passed
    assert verify.run_check("thm3.6-geometric-mean", GridSpec(0.02, 0.98, 100)).passed


def test_registry_covers_statement_families():
    ids = set(verify.REGISTRY)
    for prefix in ("legendre", "landen-", "lemma2.1-", "thm1.1-", "thm1.2-", "thm1.3-", "thm1.5-", "thm3.1-",
                   "advinequal", "cor3.4-", "cor3.5-", "thm3.6-", "lemma2.3-1", "lemma2.3-2", "lemma2.5",
                   "rem3.3-", "thm4.1-", "thm4.2-", "thm4.3-part1", "thm4.3-part2"):
        assert any(i.startswith(prefix) for i in ids), prefix
    for part in range(1, 9):
        assert any(i.startswith(f"lemma2.4-f{part}") for i in ids), part
    for p in ("-2", "-1", "0", "1", "2"):
        assert f"thm1.5-p{p}" in ids


def test_mutated_psi_is_caught(monkeypatch):
    real = psimu.psi
    monkeypatch.setattr(psimu, "psi", lambda r, rc=None: real(r, rc) * (1 + 1e-6))
    reps = verify.run_all(prefix="thm1.1")
    assert not any(r.passed for r in reps)


def test_ordering_report_tie_handling():
    import numpy as np

    xs = np.arange(5.0)
    flat = np.array([1.0, 1.0, 1.0, 1.0, 1.0 - 1e-9])
    rep = verify.ordering_report("t", xs, flat, -1)
    assert rep.passed and "3 pairs unresolved" in rep.detail
    bumpy = np.array([1.0, 0.9, 0.95, 0.8, 0.7])
    assert not verify.ordering_report("t", xs, bumpy, -1).passed


def test_shape_report():
    import numpy as np

    xs = np.linspace(0, 1, 50)
    assert verify.shape_report("t", xs, xs**2, +1).passed
    assert not verify.shape_report("t", xs, xs**2, -1).passed
    assert verify.shape_report("t", xs, np.sqrt(xs), -1).passed


def test_grid_override_changes_point_count():
    rep = verify.run_check("thm3.1-psi-increasing", GridSpec(0.1, 0.9, 50))
    assert rep.points_tested == 50
