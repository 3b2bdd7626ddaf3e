"""
Decode-evaluate-archive step shared by both solvers.

Every call decodes one chromosome, counts one evaluation, offers the result
to the run's nondominated archive and, when a bus is attached, publishes
the evaluation and any archive acceptance.
"""

from __future__ import annotations

from vrpstw.engine.encoding import Chromosome, decode
from vrpstw.engine.event_bus import ARCHIVE_ACCEPTED, EVALUATION, EventBus
from vrpstw.engine.pareto import Archive, ArchiveEntry, InsertResult
from vrpstw.model.instance import Instance


class ArchivingEvaluator:
    """Counts decoder invocations and keeps the run's archive."""

    def __init__(self, instance: Instance, event_bus: EventBus | None = None) -> None:
        self.instance = instance
        self.event_bus = event_bus
        self.archive = Archive()
        self.evaluations = 0

    def __call__(self, chromosome: Chromosome) -> tuple[ArchiveEntry, InsertResult]:
        entry = ArchiveEntry(chromosome, decode(self.instance, chromosome))
        self.evaluations += 1
        result = self.archive.insert(entry)
        if self.event_bus is not None:
            self.event_bus.publish(
                {
                    "event_type": EVALUATION,
                    "evaluation": self.evaluations,
                    "chromosome": chromosome,
                    "objectives": entry.objectives,
                }
            )
            if result.accepted:
                self.event_bus.publish(
                    {
                        "event_type": ARCHIVE_ACCEPTED,
                        "chromosome": chromosome,
                        "objectives": entry.objectives,
                        "removed": len(result.removed),
                        "archive_size": len(self.archive),
                    }
                )
        return entry, result
