"""
VRPSTW problem model: instances, routes, solutions and the four objectives.
"""

from vrpstw.model.evaluation import (
    ObjectiveVector,
    Route,
    Solution,
    arrival_times,
    evaluate,
    is_feasible,
    make_solution,
    route_load,
    route_time,
    window_violation,
)
from vrpstw.model.instance import Customer, Depot, Instance

__all__ = [
    "Customer",
    "Depot",
    "Instance",
    "ObjectiveVector",
    "Route",
    "Solution",
    "arrival_times",
    "evaluate",
    "is_feasible",
    "make_solution",
    "route_load",
    "route_time",
    "window_violation",
]
