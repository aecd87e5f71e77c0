"""End-to-end smoke tests for the compiled coopnoma package."""

import math

import pytest

import coopnoma as cn


def test_version_and_surface():
    assert cn.__version__ == "0.1.0"
    for name in ("SystemConfig", "SweepSpec", "run_outage_sweep", "z_cdf"):
        assert hasattr(cn, name)


def test_default_config_shape():
    config = cn.SystemConfig.defaults(2)
    assert config.num_users == 2
    assert config.power_alloc == pytest.approx([0.8, 0.2])
    assert config.target_rates == pytest.approx([0.5, 1.0])
    assert config.relay_coeff(2, 1) == pytest.approx(1.0)
    config.validate()

    three = cn.SystemConfig.defaults(3)
    assert three.power_alloc == pytest.approx([16 / 21, 4 / 21, 1 / 21])
    assert three.relay_coeff(3, 2) == pytest.approx(0.5)


def test_analytic_reference_values():
    spec = cn.ZSpec()
    spec.a, spec.b, spec.rho, spec.order = 0.8, 0.2, 10.0, 1
    assert cn.z_cdf(spec, 1.0) == pytest.approx(0.153518275109386, rel=1e-12)
    assert cn.ordered_gain_cdf_exact(2, 3, 1.0) == pytest.approx(
        0.693568287025890, rel=1e-12
    )
    assert cn.gamma_order_cdf(2, 0.7) == pytest.approx(0.155804983554604, rel=1e-12)
    assert cn.overall_outage([0.1, 0.2]) == pytest.approx(0.28, rel=1e-12)
    assert cn.gap_high_snr(0.2, 2.0) == pytest.approx(1.660964047443681, rel=1e-12)


def test_realization_and_decode():
    config = cn.SystemConfig.defaults(2)
    config.transmit_snr = cn.db_to_linear(20.0)
    real = cn.sample_realization(config, seed=7, trial=3)
    again = cn.sample_realization(config, seed=7, trial=3)
    assert real.direct_gains == again.direct_gains
    assert real.direct_gains[0] <= real.direct_gains[1]
    outcome = cn.evaluate_decode(real, config, cn.Scheme.CooperativeNoma)
    assert isinstance(outcome.ok(1, 1), bool)
    assert outcome.snr_at(2, 2) > 0.0


def test_small_sweep_is_deterministic():
    spec = cn.SweepSpec()
    spec.config = cn.SystemConfig.defaults(2)
    spec.snr_db = [10.0, 20.0]
    spec.trials = 20000
    spec.seed = 99
    spec.schemes = [cn.Scheme.CooperativeNoma, cn.Scheme.OrthogonalMA]
    spec.threads = 2
    first = cn.run_outage_sweep(spec)
    spec.threads = 1
    second = cn.run_outage_sweep(spec)
    assert first.num_users == 2
    for s in range(2):
        for p in range(2):
            a, b = first.at(s, p), second.at(s, p)
            assert [c.failures for c in a.per_user] == [
                c.failures for c in b.per_user
            ]
            assert a.overall.failures == b.overall.failures
            assert a.overall.outage <= sum(c.outage for c in a.per_user)
    # Outage falls with SNR for the cooperative scheme.
    assert first.at(0, 1).overall.outage < first.at(0, 0).overall.outage


def test_bound_dominates_simulation():
    spec = cn.SweepSpec()
    spec.config = cn.SystemConfig.defaults(2)
    spec.snr_db = [10.0, 25.0, 40.0]
    spec.trials = 30000
    spec.seed = 5
    report = cn.run_bound_validation(spec)
    for p in range(3):
        for u in range(2):
            assert not report.violation[p][u]
            assert report.bound_exact[p][u] <= 1.0
    assert report.trials == 30000


def test_capacity_search_and_bracket_error():
    config = cn.SystemConfig.defaults(2)
    cap = cn.run_capacity_search(
        config,
        cn.Scheme.CooperativeNoma,
        snr_db=15.0,
        target_outage=0.1,
        rate_min=0.05,
        rate_max=8.0,
        tolerance=0.02,
        trials=20000,
        seed=11,
    )
    assert 0.05 <= cap.rate_bpcu <= 8.0
    assert cap.outage_at_rate <= 0.1
    with pytest.raises(cn.BracketError):
        cn.run_capacity_search(
            config,
            cn.Scheme.OrthogonalMA,
            snr_db=0.0,
            target_outage=1e-6,
            rate_min=0.05,
            rate_max=8.0,
            tolerance=0.02,
            trials=5000,
            seed=11,
        )
    assert issubclass(cn.BracketError, RuntimeError)


def test_outage_floor_error_maps_to_arithmetic_error():
    spec = cn.ZSpec()
    spec.a, spec.b, spec.rho, spec.order = 0.8, 0.2, 100.0, 1
    with pytest.raises(cn.OutageFloorError):
        cn.z_cdf_high_snr(spec, 5.0)
    assert issubclass(cn.OutageFloorError, ArithmeticError)


def test_experiment_file_round_trip():
    file = cn.ExperimentFile.defaults(3)
    text = cn.render_experiment_file(file)
    parsed = cn.parse_experiment_text(text)
    assert cn.render_experiment_file(parsed) == text
    assert parsed.config.num_users == 3
    with pytest.raises(cn.ParseError):
        cn.parse_experiment_text("nonsense_key = 1\n")
    assert issubclass(cn.ParseError, ValueError)


def test_csv_rendering():
    spec = cn.SweepSpec()
    spec.config = cn.SystemConfig.defaults(2)
    spec.snr_db = [0.0]
    spec.trials = 1000
    spec.seed = 1
    spec.schemes = [cn.Scheme.CooperativeNoma]
    est = cn.run_outage_sweep(spec)
    text = cn.outage_csv(est)
    lines = text.strip().split("\n")
    assert lines[0] == "scheme,snr_db,user_index,outage,ci_halfwidth,trials,seed"
    assert len(lines) == 3  # header + two users at one point
    assert lines[1].startswith("cooperative_noma,0.00,1,")

    report = cn.pairing_study(3, 100.0, 0.8, 2000, 4)
    pairing_text = cn.pairing_csv(report, 20.0)
    assert pairing_text.startswith(
        "partner_index,mean_gap_exact,mean_gap_predicted,trials,rho_db"
    )
    assert pairing_text.count("\n") == 3  # header + two candidate partners


def test_pairing_study_matches_prediction_at_high_snr():
    report = cn.pairing_study(4, 1e6, 0.8, 20000, 123)
    gaps = [c.mean_gap_exact for c in report.candidates]
    assert gaps == sorted(gaps, reverse=True)
    for c in report.candidates:
        assert math.isclose(c.mean_gap_exact, c.mean_gap_predicted, abs_tol=0.05)
