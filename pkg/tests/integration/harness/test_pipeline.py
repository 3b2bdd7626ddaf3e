"""
End-to-end tests: generate, run, score and pareto through the CLI.
"""

import json

import pandas as pd
import pytest

from vrpstw.cli import main
from vrpstw.engine.molsd import molsd_run
from vrpstw.engine.run_record import RunRecord
from vrpstw.instances.io import load_instance

SPECS = ["C;8;1.00;60", "R;8;0.50;30"]
SMALL_RUN = ["--pop-size", "8", "--stagnation", "20"]


def _generate(out, seed=3):
    argv = ["generate", "--seed", str(seed), "--out", str(out)]
    for label in SPECS:
        argv += ["--spec", label]
    assert main(argv) == 0


def _run(instances, out, seed=5):
    argv = ["run", str(instances), "--runs", "2", "--seed", str(seed)]
    argv += ["--out", str(out), *SMALL_RUN]
    for algorithm in ("MOLSD", "PMX", "OBX", "UOBX", "UOBX+2EX"):
        argv += ["--algo", algorithm]
    assert main(argv) == 0


def _records_without_wall_time(root):
    records = {}
    for path in sorted((root / "runs").rglob("*.json")):
        data = json.loads(path.read_text(encoding="utf-8"))
        data.pop("wall_time")
        records[path.relative_to(root).as_posix()] = data
    return records


class TestPipeline:
    def test_generate_run_score_pareto(self, tmp_path, capsys):
        instances = tmp_path / "instances"
        results = tmp_path / "results"
        _generate(instances)
        _run(instances, results)

        records = sorted((results / "runs").rglob("*.json"))
        assert len(records) == 2 * 5 * 2
        for path in records:
            record = RunRecord.read(path)
            assert record.ok
            assert record.evaluations >= len(record.archive) >= 1

        assert main(["score", str(results)]) == 0
        scores = pd.read_csv(results / "scores.csv", float_precision="round_trip")
        assert len(scores) == 2 * 5
        assert set(scores["algorithm"]) == {"MOLSD", "PMX", "OBX", "UOBX", "UOBX+2EX"}
        assert (scores["mean_d1"] >= 0).all()
        assert (scores["mean_d1"] <= scores["mean_d2"]).all()
        # every instance has at least one best algorithm per metric
        for _, group in scores.groupby("instance"):
            assert group["best_d1_flag"].sum() >= 1
            assert group["best_d2_flag"].sum() >= 1

        capsys.readouterr()
        front_files = [str(path) for path in records if "C_8_1.00_60" in str(path)]
        assert main(["pareto", *front_files]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines
        for line in lines:
            assert len(line.split()) == 6

    def test_every_run_is_scored(self, tmp_path):
        instances = tmp_path / "instances"
        results = tmp_path / "results"
        _generate(instances)
        _run(instances, results)
        assert main(["score", str(results)]) == 0

        runs = pd.read_csv(results / "runs.csv", float_precision="round_trip")
        assert len(runs) == 2 * 5 * 2
        assert runs["d1"].notna().all()
        assert (runs["d2"] >= runs["d1"]).all()


class TestDeterminism:
    def test_generation_is_byte_identical(self, tmp_path):
        _generate(tmp_path / "a")
        _generate(tmp_path / "b")
        for path in sorted((tmp_path / "a").iterdir()):
            assert path.read_bytes() == (tmp_path / "b" / path.name).read_bytes()

    def test_runs_are_identical_apart_from_wall_time(self, tmp_path):
        _generate(tmp_path / "instances")
        _run(tmp_path / "instances", tmp_path / "first")
        _run(tmp_path / "instances", tmp_path / "second")

        first = _records_without_wall_time(tmp_path / "first")
        second = _records_without_wall_time(tmp_path / "second")
        assert first and first == second

    def test_worker_pool_matches_serial_run(self, tmp_path):
        _generate(tmp_path / "instances")
        _run(tmp_path / "instances", tmp_path / "serial")
        argv = ["run", str(tmp_path / "instances"), "--runs", "2", "--seed", "5"]
        argv += ["--out", str(tmp_path / "pool"), "--workers", "2", *SMALL_RUN]
        for algorithm in ("MOLSD", "PMX", "OBX", "UOBX", "UOBX+2EX"):
            argv += ["--algo", algorithm]
        assert main(argv) == 0

        assert _records_without_wall_time(
            tmp_path / "serial"
        ) == _records_without_wall_time(tmp_path / "pool")

    def test_different_base_seed_changes_seeds(self, tmp_path):
        _generate(tmp_path / "instances")
        _run(tmp_path / "instances", tmp_path / "five", seed=5)
        _run(tmp_path / "instances", tmp_path / "six", seed=6)
        five = _records_without_wall_time(tmp_path / "five")
        six = _records_without_wall_time(tmp_path / "six")
        assert five.keys() == six.keys()
        assert all(five[key]["seed"] != six[key]["seed"] for key in five)


@pytest.mark.slow
def test_molsd_throughput_floor(tmp_path):
    assert main(["generate", "--spec", "R;20;1.00;60", "--out", str(tmp_path)]) == 0
    instance = load_instance(tmp_path / "R_20_1.00_60.vrp")
    record = molsd_run(instance, seed=1)
    assert record.evaluations > 0
    assert record.evaluations_per_second >= 1385
