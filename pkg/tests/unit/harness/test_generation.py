"""
Unit tests for vrpstw/harness/generation.py
"""

import pytest

from vrpstw.errors import GenerationError, ParseError
from vrpstw.harness.generation import MANIFEST_NAME, generate_batch, write_batch
from vrpstw.instances.generator import GeneratorParams
from vrpstw.instances.io import load_instance
from vrpstw.instances.spec import standard_suite


class TestGenerateBatch:
    def test_standard_suite(self, tmp_path):
        instances = generate_batch(standard_suite(), GeneratorParams(), seed=1)
        paths = write_batch(instances, tmp_path)
        assert len(paths) == 40
        assert len({path.name for path in paths}) == 40
        manifest = (tmp_path / MANIFEST_NAME).read_text(encoding="utf-8").split()
        assert manifest == [path.name for path in paths]
        assert load_instance(paths[0]).name == instances[0].name

    def test_duplicate_labels_share_one_instance(self):
        instances = generate_batch(
            ["R;10;1.00;10", "R;10;1.00;10"], GeneratorParams(), seed=4
        )
        assert len(instances) == 1

    def test_same_seed_same_bytes(self, tmp_path):
        first = write_batch(
            generate_batch(["C;20;0.45;60"], GeneratorParams(), 9), tmp_path / "a"
        )
        second = write_batch(
            generate_batch(["C;20;0.45;60"], GeneratorParams(), 9), tmp_path / "b"
        )
        assert first[0].read_bytes() == second[0].read_bytes()

    def test_seed_does_not_depend_on_position(self):
        alone = generate_batch(["R;12;0.30;30"], GeneratorParams(), 3)
        later = generate_batch(["C;12;1.00;60", "R;12;0.30;30"], GeneratorParams(), 3)
        assert alone[0] == later[1]

    def test_invalid_label(self):
        with pytest.raises(ParseError):
            generate_batch(["C;20;0.45"], GeneratorParams(), 0)

    def test_window_wider_than_horizon(self):
        with pytest.raises(GenerationError):
            generate_batch(["R;10;1.00;10", "R;10;1.00;900"], GeneratorParams(), 0)
