import numpy as np
import pytest

from bcx.algebra import Tolerance
from bcx.errors import InvalidConfigError, UnknownSuiteError
from bcx.sampling import trial_rng
from bcx.suites import SUITES, SuiteConfig, rel_excess, rel_gap, run_suite


@pytest.mark.parametrize("name", sorted(SUITES))
def test_every_suite_passes_on_a_small_config(name):
    res = run_suite(name, SuiteConfig(seed=3, trials=10, dim=4, degree=16))
    assert res.passed and res.trials == 10 and res.wall_time >= 0


def test_trial_streams_are_replayable_and_independent():
    a = trial_rng(1, "x", 5).standard_normal(4)
    assert np.array_equal(a, trial_rng(1, "x", 5).standard_normal(4))
    assert not np.array_equal(a, trial_rng(1, "x", 6).standard_normal(4))
    assert not np.array_equal(a, trial_rng(1, "y", 5).standard_normal(4))
    assert not np.array_equal(a, trial_rng(2, "x", 5).standard_normal(4))


def test_config_validation_and_selection():
    assert SuiteConfig().selected == sorted(SUITES)
    assert SuiteConfig(suites=("littlewood", "algebra", "algebra")).selected == ["algebra", "littlewood"]
    with pytest.raises(UnknownSuiteError):
        SuiteConfig(suites=("nope",))
    for bad in ({"dim": 17}, {"degree": 0}, {"trials": 0}, {"seed": -1}, {"seed": 2**64}):
        with pytest.raises(InvalidConfigError):
            SuiteConfig(**bad)
    cfg = SuiteConfig(tol=Tolerance(rel=1e-6))
    assert cfg.to_json()["tol"] == {"rel": 1e-6, "abs": 0.0}


def test_violation_measures():
    assert rel_gap(1.0, 1.0) == 0 and rel_gap(0.0, 0.0) == 0
    assert rel_gap(1.0, 2.0) == pytest.approx(0.5)
    assert rel_excess(1.0, 2.0) == 0 and rel_excess(3.0, 2.0) == pytest.approx(1 / 3)


def test_tighter_threshold_turns_noise_into_failure():
    res = run_suite("parallelogram", SuiteConfig(trials=50, tol=Tolerance(rel=1e-300)))
    assert not res.passed
