import pytest

from qfock.suites import SUITES, classical_sign, run_suite, verify_classical_limit


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suite_passes_for_rank_three(name):
    (rep,) = run_suite(name, 3, 0)
    assert rep.ok, rep.failures()


def test_all_runs_every_suite():
    reps = run_suite("all", 2, 7)
    assert len(reps) == len(SUITES) and all(r.ok for r in reps)


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope", 2, 0)


def test_seed_changes_samples_not_verdict():
    a, b = verify_classical_limit(2, 30, seed=1), verify_classical_limit(2, 30, seed=2)
    assert a.ok and b.ok


def test_sign_of_sorting_permutation():
    assert classical_sign((5, 3, 1)) == 1
    assert classical_sign((1, 3, 5)) == -1
    assert classical_sign((2, 5, 2)) == 0
