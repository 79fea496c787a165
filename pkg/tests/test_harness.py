import math
import random

import numpy as np
import pytest

from compact_ga import (
    BenchmarkSpec,
    ExperimentConfig,
    SummaryRow,
    TrialRecord,
    auto_budget_factor,
    default_eval_cap,
    drift_experiment,
    figure_preset,
    mix_seed,
    read_summary_csv,
    read_trials_csv,
    run_grid,
    summarize,
    write_csv,
)
from compact_ga.harness import config_from_dict, config_to_dict


def small_config(**overrides):
    base = dict(
        benchmark=BenchmarkSpec("onemax", 20),
        sigma2_list=(0.0, 1.0),
        algorithm="cga",
        trials=3,
        master_seed=5,
        mu_list=(8.0,),
    )
    base.update(overrides)
    return ExperimentConfig(**base)


def _record(evaluations, trial=0, success=True, sigma2=0.0, mu=8.0):
    return TrialRecord(
        benchmark="onemax",
        n=20,
        k=None,
        sigma2=sigma2,
        algorithm="cga",
        mu=mu,
        b=None,
        update_factor=None,
        trial=trial,
        seed=trial,
        evaluations=evaluations,
        success=success,
    )


# --- summarize ---


def test_summarize_odd_count():
    rows = summarize([_record(v, trial=i) for i, v in enumerate([1, 2, 3, 4, 5])])
    assert len(rows) == 1
    assert (rows[0].q1, rows[0].median, rows[0].q3) == (2.0, 3.0, 4.0)


def test_summarize_constant():
    rows = summarize([_record(10, trial=i) for i in range(4)])
    assert (rows[0].q1, rows[0].median, rows[0].q3) == (10.0, 10.0, 10.0)


def test_summarize_interpolated_quartiles():
    # linear interpolation between closest order statistics on {1,2,3,4}
    rows = summarize([_record(v, trial=i) for i, v in enumerate([1, 2, 3, 4])])
    assert (rows[0].q1, rows[0].median, rows[0].q3) == (1.75, 2.5, 3.25)


def test_summarize_orders_quartiles():
    rows = summarize([_record(v, trial=i) for i, v in enumerate([7, 1, 99, 2, 3])])
    assert rows[0].q1 <= rows[0].median <= rows[0].q3


def test_summarize_shuffle_invariant():
    records = [
        _record(v, trial=i, sigma2=s, mu=m)
        for i, v in enumerate([10, 20, 30])
        for s in (0.0, 2.0)
        for m in (4.0, 8.0)
    ]
    shuffled = records[:]
    random.Random(0).shuffle(shuffled)
    assert summarize(shuffled) == summarize(records)


def test_summarize_counts_successes():
    records = [_record(5, trial=0), _record(100, trial=1, success=False)]
    rows = summarize(records)
    assert rows[0].trials == 2
    assert rows[0].success_count == 1


def test_summarize_empty_warns():
    with pytest.warns(UserWarning):
        assert summarize([]) == []


# --- run_grid ---


def test_run_grid_shape_and_determinism(tmp_path):
    config = small_config()
    records = run_grid(config)
    assert len(records) == 2 * 3  # grid points x trials
    assert [r.trial for r in records] == [0, 1, 2, 0, 1, 2]
    again = run_grid(config)
    assert records == again
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    write_csv(records, a)
    write_csv(again, b)
    assert a.read_bytes() == b.read_bytes()


def test_run_grid_respects_worker_pool():
    config = small_config()
    assert run_grid(config, n_jobs=2) == run_grid(config, n_jobs=1)


def test_run_grid_seed_changes_results():
    r1 = run_grid(small_config())
    r2 = run_grid(small_config(master_seed=6))
    assert [r.seed for r in r1] != [r.seed for r in r2]


def test_run_grid_records_cap_on_failure():
    # 10-evaluation budget cannot solve jump(50,10); the cap itself is recorded
    config = ExperimentConfig(
        benchmark=BenchmarkSpec("jump", 50, 10),
        sigma2_list=(0.0,),
        algorithm="cga",
        trials=2,
        master_seed=0,
        mu_list=(4.0,),
        eval_cap=10,
    )
    for r in run_grid(config):
        assert not r.success
        assert r.evaluations == 10


def test_run_grid_smart_and_para_record_parameters():
    smart = run_grid(
        ExperimentConfig(
            benchmark=BenchmarkSpec("onemax", 10),
            sigma2_list=(0.0,),
            algorithm="smart",
            trials=2,
            master_seed=1,
            b_list=(8.0,),
        )
    )
    assert all(r.b == 8.0 and r.mu is None and r.update_factor == 2.0 for r in smart)
    assert all(r.success for r in smart)
    para = run_grid(
        ExperimentConfig(
            benchmark=BenchmarkSpec("onemax", 10),
            sigma2_list=(0.0,),
            algorithm="para",
            trials=2,
            master_seed=1,
        )
    )
    assert all(r.b is None and r.mu is None and r.update_factor is None for r in para)
    assert all(r.success for r in para)


def test_config_validation():
    with pytest.raises(ValueError):
        small_config(algorithm="annealing")
    with pytest.raises(ValueError):
        small_config(trials=0)
    with pytest.raises(ValueError):
        small_config(mu_list=())
    with pytest.raises(ValueError):
        small_config(sigma2_list=(-1.0,))
    with pytest.raises(ValueError):
        small_config(algorithm="smart", b_list=())
    with pytest.raises(ValueError):
        small_config(algorithm="smart", b_list=(8.0,), update_factor=1.0)
    with pytest.raises(ValueError):
        small_config(eval_cap=1)


def test_mix_seed_is_deterministic_and_spread():
    assert mix_seed(5, 0, 0) == mix_seed(5, 0, 0)
    seeds = {mix_seed(5, g, t) for g in range(4) for t in range(4)}
    assert len(seeds) == 16


# --- eval caps and presets ---


def test_default_eval_caps():
    assert default_eval_cap(BenchmarkSpec("onemax", 100), "cga") == 2 * 100**5
    assert default_eval_cap(BenchmarkSpec("leadingones", 50), "cga") == 2 * 50**5
    assert default_eval_cap(BenchmarkSpec("jump", 50, 10), "cga") == 2 * 50**5
    assert default_eval_cap(BenchmarkSpec("dlb", 30), "cga") == 20 * 30**5
    assert default_eval_cap(BenchmarkSpec("onemax", 100), "smart") == 10**8
    assert default_eval_cap(BenchmarkSpec("dlb", 30), "para") == 10**8


def test_figure_presets():
    cga, smart, para = figure_preset(1)
    assert cga.benchmark == BenchmarkSpec("onemax", 100)
    assert cga.mu_list == tuple(float(2**e) for e in range(5, 11))
    assert cga.sigma2_list == (0.0, 50.0, 100.0, 200.0, 400.0)
    assert cga.trials == 10 and smart.trials == 20 and para.trials == 20
    assert smart.b_list == (8.0, auto_budget_factor(100))
    assert smart.update_factor == 2.0
    jump_cfg = figure_preset(3)[0]
    assert jump_cfg.benchmark == BenchmarkSpec("jump", 50, 10)
    assert jump_cfg.mu_list[0] == 2.0**9 and jump_cfg.mu_list[-1] == 2.0**18
    dlb_cfg = figure_preset(4)[0]
    assert dlb_cfg.benchmark == BenchmarkSpec("dlb", 30)
    with pytest.raises(ValueError):
        figure_preset(5)


def test_config_dict_roundtrip():
    for config in figure_preset(3) + [small_config()]:
        assert config_from_dict(config_to_dict(config)) == config


# --- CSV persistence ---


def test_trials_csv_roundtrip(tmp_path):
    records = run_grid(small_config())
    path = tmp_path / "trials.csv"
    write_csv(records, path)
    assert read_trials_csv(path) == records


def test_summary_csv_roundtrip(tmp_path):
    rows = summarize(run_grid(small_config()))
    path = tmp_path / "summary.csv"
    write_csv(rows, path)
    assert read_summary_csv(path) == rows


def test_empty_csv_has_header_only(tmp_path):
    path = tmp_path / "empty.csv"
    write_csv([], path)
    assert path.read_text() == "benchmark,n,k,sigma2,algorithm,mu,b,U,trial,seed,evaluations,success\n"
    assert read_trials_csv(path) == []


def test_single_record_csv_shape(tmp_path):
    path = tmp_path / "one.csv"
    write_csv([_record(42)], path)
    lines = path.read_text().splitlines()
    assert len(lines) == 2
    assert len(lines[1].split(",")) == 12


def test_read_rejects_wrong_header(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("nope\n")
    with pytest.raises(ValueError):
        read_trials_csv(path)
    with pytest.raises(ValueError):
        read_summary_csv(path)


def test_write_csv_unwritable_path():
    with pytest.raises(OSError):
        write_csv([_record(1)], "/nonexistent-dir/x.csv")


# --- drift experiment ---


def test_drift_times_respect_step_lower_bound():
    # a frequency needs at least mu * (1/2 - 1/n) steps to reach a margin
    n = 50
    results = drift_experiment(n, [8.0, 16.0], trials=50, master_seed=11)
    for res in results:
        floor_gens = res.mu * (0.5 - 1.0 / n)
        assert all(t >= floor_gens for t in res.times)
        assert len(res.times) == 50


def test_drift_mean_below_four_mu_squared_small_scale():
    results = drift_experiment(50, [16.0], trials=100, master_seed=3)
    assert results[0].mean <= 4 * 16.0**2


def test_drift_deterministic():
    a = drift_experiment(20, [8.0], trials=10, master_seed=9)
    b = drift_experiment(20, [8.0], trials=10, master_seed=9)
    assert a == b


def test_drift_rejects_tiny_dimension():
    with pytest.raises(ValueError):
        drift_experiment(2, [8.0], trials=5, master_seed=0)
