import pytest

from lensreeb.errors import InputError
from lensreeb.lens import validate
from lensreeb.sweep import (
    ALL_SUITES,
    MODEL_SUITES,
    POINT_SUITES,
    load_sweep_config,
    run_sweep,
    sweep_config,
    sweep_points,
)


class TestConfig:
    def test_defaults(self):
        config = sweep_config()
        assert (config.p_min, config.p_max) == (1, 10)
        assert config.checks == ALL_SUITES

    def test_all_expands(self):
        assert sweep_config(checks=["all"]).checks == ALL_SUITES

    def test_explicit_checks_kept(self):
        config = sweep_config(checks=["determinant", "cr_bounds"])
        assert config.checks == ("determinant", "cr_bounds")

    def test_unknown_key_rejected(self):
        with pytest.raises(InputError):
            sweep_config(p_mni=3)

    def test_unknown_check_rejected(self):
        with pytest.raises(InputError):
            sweep_config(checks=["determinant", "lattice_width"])

    def test_bad_p_range(self):
        with pytest.raises(InputError):
            sweep_config(p_min=5, p_max=3)
        with pytest.raises(InputError):
            sweep_config(p_min=0)

    def test_bad_n_values(self):
        with pytest.raises(InputError):
            sweep_config(n_values=())
        with pytest.raises(InputError):
            sweep_config(n_values=(2, 0))

    def test_bad_mode(self):
        with pytest.raises(InputError):
            sweep_config(weight_mode="fuzz")

    def test_random_requires_seed_and_count(self):
        with pytest.raises(InputError):
            sweep_config(weight_mode="random", count=10)
        with pytest.raises(InputError):
            sweep_config(weight_mode="random", seed=1)
        config = sweep_config(weight_mode="random", seed=1, count=10)
        assert (config.seed, config.count) == (1, 10)

    def test_bad_n_max(self):
        with pytest.raises(InputError):
            sweep_config(n_max=1)


class TestConfigFile:
    def test_round_trip(self, tmp_path):
        path = tmp_path / "sweep.toml"
        path.write_text(
            'p_min = 2\np_max = 6\nn_values = [2, 3]\nchecks = ["determinant"]\n'
        )
        config = load_sweep_config(str(path))
        assert (config.p_min, config.p_max) == (2, 6)
        assert config.n_values == (2, 3)
        assert config.checks == ("determinant",)

    def test_missing_file(self, tmp_path):
        with pytest.raises(InputError):
            load_sweep_config(str(tmp_path / "absent.toml"))

    def test_invalid_toml(self, tmp_path):
        path = tmp_path / "broken.toml"
        path.write_text("p_min = [unclosed\n")
        with pytest.raises(InputError):
            load_sweep_config(str(path))

    def test_unknown_key_in_file(self, tmp_path):
        path = tmp_path / "extra.toml"
        path.write_text("pmax = 4\n")
        with pytest.raises(InputError):
            load_sweep_config(str(path))


class TestPoints:
    def test_exhaustive_counts(self):
        config = sweep_config(p_min=1, p_max=5, n_values=(2,))
        points = sweep_points(config)
        # unit counts 1, 1, 2, 2, 4 cubed, except the single sphere point
        assert len(points) == 1 + 1 + 8 + 8 + 64
        assert all(validate(p, w) for p, w in points)

    def test_exhaustive_covers_every_residue_tuple(self):
        config = sweep_config(p_min=3, p_max=3, n_values=(1,))
        assert sorted(sweep_points(config)) == [
            (3, (1, 1)),
            (3, (1, 2)),
            (3, (2, 1)),
            (3, (2, 2)),
        ]

    def test_random_is_seed_deterministic(self):
        kwargs = dict(weight_mode="random", seed=99, count=50, p_max=20)
        first = sweep_points(sweep_config(**kwargs))
        second = sweep_points(sweep_config(**kwargs))
        assert first == second
        shifted = sweep_points(sweep_config(**{**kwargs, "seed": 100}))
        assert first != shifted

    def test_random_points_are_valid(self):
        config = sweep_config(weight_mode="random", seed=7, count=80, p_max=30)
        for p, weights in sweep_points(config):
            validate(p, weights)


class TestRun:
    def test_clean_grid(self):
        config = sweep_config(p_min=1, p_max=5, n_values=(2,))
        report = run_sweep(config)
        assert report["failures"] == 0
        assert report["points"] == 82
        assert report["models"] == 26
        assert report["suites"]["cr_bounds"]["checked"] == 82
        for suite in MODEL_SUITES:
            if suite == "sphere_reduction":
                continue
            assert report["suites"][suite]["checked"] == 26
            assert report["suites"][suite]["failures"] == 0
            assert report["suites"][suite]["first_counterexample"] is None

    def test_sphere_suite_counts_only_spheres(self):
        config = sweep_config(p_min=1, p_max=5, n_values=(2,))
        report = run_sweep(config)
        assert report["suites"]["sphere_reduction"]["checked"] == 1
        no_sphere = run_sweep(sweep_config(p_min=2, p_max=5, n_values=(2,)))
        assert no_sphere["suites"]["sphere_reduction"]["checked"] == 0

    def test_report_is_deterministic(self):
        config = sweep_config(
            weight_mode="random", seed=5, count=30, p_max=12, n_max=40
        )
        assert run_sweep(config) == run_sweep(config)

    def test_worker_count_does_not_change_report(self):
        config = sweep_config(p_min=1, p_max=6, n_values=(2,), n_max=40)
        assert run_sweep(config, workers=1) == run_sweep(config, workers=3)

    def test_fail_fast_clean_run_unchanged(self):
        config = sweep_config(p_min=2, p_max=4, n_values=(2,), n_max=30)
        assert run_sweep(config, fail_fast=True) == run_sweep(config)

    def test_point_only_checks(self):
        config = sweep_config(p_min=2, p_max=4, checks=["cr_bounds"])
        report = run_sweep(config)
        assert list(report["suites"]) == ["cr_bounds"]
        assert report["failures"] == 0

    def test_model_only_checks(self):
        config = sweep_config(p_min=2, p_max=4, checks=["determinant"], n_max=20)
        report = run_sweep(config)
        assert list(report["suites"]) == ["determinant"]
        assert report["suites"]["determinant"]["checked"] == report["models"]

    def test_config_echoed(self):
        config = sweep_config(p_min=2, p_max=3, checks=["determinant"], n_max=20)
        report = run_sweep(config)
        assert report["config"]["p_min"] == 2
        assert report["config"]["checks"] == ["determinant"]


def test_suite_name_partition():
    assert set(POINT_SUITES) | set(MODEL_SUITES) == set(ALL_SUITES)
    assert not set(POINT_SUITES) & set(MODEL_SUITES)
