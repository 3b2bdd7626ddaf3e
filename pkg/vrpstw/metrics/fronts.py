"""
Fronts: lists of objective vectors with optional provenance tags.

Front files hold one vector per line, the four objectives first and any
provenance tokens (algorithm, run) after them. Blank lines and lines
starting with '#' are ignored.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from pathlib import Path
from typing import TextIO

from vrpstw.engine.pareto import Vector, format_vector, nondominated_filter
from vrpstw.engine.run_record import RunRecord
from vrpstw.errors import ParseError
from vrpstw.model.evaluation import ObjectiveVector


def as_objectives(vector: Vector) -> ObjectiveVector:
    g1, g2, g3, g4 = vector
    return ObjectiveVector(float(g1), int(g2), float(g3), int(g4))


@dataclass(frozen=True)
class FrontPoint:
    objectives: ObjectiveVector
    provenance: tuple[str, ...] = ()


@dataclass(frozen=True)
class Front:
    """An ordered collection of objective vectors."""

    points: tuple[FrontPoint, ...] = ()

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[FrontPoint]:
        return iter(self.points)

    def vectors(self) -> list[ObjectiveVector]:
        return [point.objectives for point in self.points]

    @classmethod
    def from_vectors(
        cls, vectors: Iterable[Vector], provenance: Sequence[str] = ()
    ) -> Front:
        tags = tuple(provenance)
        return cls(tuple(FrontPoint(as_objectives(v), tags) for v in vectors))

    @classmethod
    def from_record(cls, record: RunRecord) -> Front:
        """The archive front of a run, tagged with its algorithm and seed."""
        return cls.from_vectors(
            record.front, (record.algorithm, f"seed={record.seed}")
        )

    def nondominated(self) -> Front:
        """
        Mutually nondominated subset, duplicates collapsed, sorted by
        objective vector. A surviving vector keeps the tags of its first
        occurrence.
        """
        first_seen: dict[ObjectiveVector, FrontPoint] = {}
        for point in self.points:
            first_seen.setdefault(point.objectives, point)
        survivors = [
            first_seen[as_objectives(v)] for v in nondominated_filter(first_seen)
        ]
        return Front(tuple(sorted(survivors, key=lambda point: point.objectives)))

    @staticmethod
    def union(fronts: Iterable[Front]) -> Front:
        return Front(tuple(point for front in fronts for point in front))


def parse_front(text: str) -> Front:
    points: list[FrontPoint] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) < 4:
            raise ParseError(
                f"expected 4 objective values, got {len(tokens)}", line=line_no
            )
        try:
            vector = (
                float(tokens[0]),
                int(tokens[1]),
                float(tokens[2]),
                int(tokens[3]),
            )
        except ValueError:
            raise ParseError(f"bad objective vector {line!r}", line=line_no) from None
        points.append(FrontPoint(ObjectiveVector(*vector), tuple(tokens[4:])))
    return Front(tuple(points))


def format_front(front: Front) -> str:
    lines = []
    for point in front:
        tokens = [format_vector(point.objectives), *point.provenance]
        lines.append(" ".join(tokens))
    return "".join(line + "\n" for line in lines)


def read_front(source: TextIO) -> Front:
    return parse_front(source.read())


def write_front(front: Front, sink: TextIO) -> None:
    sink.write(format_front(front))


def load_front(path: Path) -> Front:
    """
    Load a front file, or the archive front of a RunRecord when the file
    is JSON.
    """
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path} is not UTF-8 text: {exc.reason}") from None
    if path.suffix == ".json" or text.lstrip().startswith("{"):
        return Front.from_record(RunRecord.from_json(text))
    return parse_front(text)
