"""
Batch generation of instance files from classification labels.
"""

from __future__ import annotations

import logging
import random
from collections.abc import Sequence
from pathlib import Path

from vrpstw.harness.seeds import derive_seed
from vrpstw.instances.generator import GeneratorParams, generate
from vrpstw.instances.io import save_instance
from vrpstw.instances.spec import format_spec, parse_spec
from vrpstw.model.instance import Instance

logger = logging.getLogger(__name__)

INSTANCE_SUFFIX = ".vrp"
MANIFEST_NAME = "manifest.txt"


def instance_seed(seed: int, label: str) -> int:
    """Per-label generator seed; equal labels share it."""
    return derive_seed(seed, label, "generate", 0)


def generate_batch(
    labels: Sequence[str], params: GeneratorParams, seed: int
) -> list[Instance]:
    """
    Generate one instance per distinct label, in order of first appearance.

    Raises:
        ParseError: for a malformed label.
        GenerationError: if any instance cannot be generated.
    """
    instances: list[Instance] = []
    seen: set[str] = set()
    for label in labels:
        spec = parse_spec(label)
        canonical = format_spec(spec)
        if canonical in seen:
            continue
        seen.add(canonical)
        rng = random.Random(instance_seed(seed, canonical))
        instances.append(generate(spec, params, rng))
        logger.debug("Generated %s", canonical)
    return instances


def write_batch(instances: Sequence[Instance], out: Path) -> list[Path]:
    """Write instance files plus a manifest listing them; returns the files."""
    out.mkdir(parents=True, exist_ok=True)
    paths: list[Path] = []
    for instance in instances:
        path = out / f"{instance.name}{INSTANCE_SUFFIX}"
        save_instance(instance, path)
        paths.append(path)
    manifest = "".join(f"{path.name}\n" for path in paths)
    (out / MANIFEST_NAME).write_text(manifest, encoding="utf-8")
    logger.info("Wrote %d instance files to %s", len(paths), out)
    return paths
