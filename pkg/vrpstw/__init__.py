"""
Multi-objective solver suite for the vehicle routing problem with soft
time windows.

The package provides:
- the problem model and its four objectives (vrpstw.model)
- the giant-tour encoding, Pareto archive, steady-state GA and MOLSD
  (vrpstw.engine)
- seeded instance generation and instance files (vrpstw.instances)
- d1/d2 approximation-quality metrics (vrpstw.metrics)
- the experiment harness behind the command line (vrpstw.harness)
"""

from vrpstw.engine.genetic import GaConfig, SteadyStateGA, ga_run
from vrpstw.engine.molsd import MultiObjectiveLocalSearch, molsd_run
from vrpstw.engine.run_record import RunRecord
from vrpstw.model.instance import Instance

__all__ = [
    "GaConfig",
    "Instance",
    "MultiObjectiveLocalSearch",
    "RunRecord",
    "SteadyStateGA",
    "ga_run",
    "molsd_run",
]
