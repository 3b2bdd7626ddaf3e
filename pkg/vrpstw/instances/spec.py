"""
The α;β;γ;δ classification of a test instance.

A spec string such as "C;20;0.70;60" reads: clustered customers, 20 of
them, 70% carrying a time window, windows 60 time units wide.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from vrpstw.errors import InputError, ParseError

DISTRIBUTIONS = ("C", "R")


@dataclass(frozen=True)
class InstanceSpec:
    """Classification of an instance by customer layout and window structure."""

    alpha: str
    beta: int
    gamma: float
    delta: float

    def __post_init__(self) -> None:
        if self.alpha not in DISTRIBUTIONS:
            raise InputError(f"Unknown customer distribution {self.alpha!r}")
        if self.beta < 1:
            raise InputError(f"Customer count must be >= 1, got {self.beta}")
        if not 0.0 <= self.gamma <= 1.0:
            raise InputError(f"Window coverage must lie in [0, 1], got {self.gamma}")
        if self.delta < 0 or not math.isfinite(self.delta):
            raise InputError(f"Window size must be finite and >= 0, got {self.delta}")

    @property
    def windowed_count(self) -> int:
        """Number of customers that receive a binding window."""
        # round-half-even, as Python's round() does
        return round(self.gamma * self.beta)

    @property
    def slug(self) -> str:
        """File-system friendly name, e.g. C_20_0.70_60."""
        return format_spec(self).replace(";", "_")

    def __str__(self) -> str:
        return format_spec(self)


def _format_number(value: float, decimals: int | None = None) -> str:
    if decimals is not None:
        text = f"{value:.{decimals}f}"
        if float(text) == value:
            return text
    if float(value).is_integer():
        return str(int(value))
    return repr(float(value))


def format_spec(spec: InstanceSpec) -> str:
    """Render a spec in its canonical semicolon form."""
    return ";".join(
        (
            spec.alpha,
            str(spec.beta),
            _format_number(spec.gamma, decimals=2),
            _format_number(spec.delta),
        )
    )


def parse_spec(text: str) -> InstanceSpec:
    """
    Parse "alpha;beta;gamma;delta".

    Raises:
        ParseError: naming the index of the first malformed field.
    """
    fields = text.strip().split(";")
    if len(fields) != 4:
        raise ParseError(f"expected 4 ';'-separated fields in {text!r}", field=None)

    alpha = fields[0].strip().upper()
    if alpha not in DISTRIBUTIONS:
        raise ParseError(f"unknown distribution {fields[0]!r}", field=0)

    try:
        beta = int(fields[1])
    except ValueError:
        raise ParseError(
            f"customer count {fields[1]!r} is not an integer", field=1
        ) from None
    if beta < 1:
        raise ParseError(f"customer count must be >= 1, got {beta}", field=1)

    try:
        gamma = float(fields[2])
    except ValueError:
        raise ParseError(f"coverage {fields[2]!r} is not a number", field=2) from None
    if not 0.0 <= gamma <= 1.0:
        raise ParseError(f"coverage must lie in [0, 1], got {gamma}", field=2)

    try:
        delta = float(fields[3])
    except ValueError:
        raise ParseError(
            f"window size {fields[3]!r} is not a number", field=3
        ) from None
    if delta < 0 or not math.isfinite(delta):
        raise ParseError(f"window size must be finite and >= 0, got {delta}", field=3)

    return InstanceSpec(alpha=alpha, beta=beta, gamma=gamma, delta=delta)


def standard_suite() -> list[str]:
    """The 40 classification labels of the original experiment grid."""
    labels: list[str] = []
    for beta in (20, 30):
        for gamma in ("1.00", "0.70", "0.45", "0.30"):
            labels.append(f"C;{beta};{gamma};60")
        for delta in (120, 180, 240, 360):
            labels.append(f"C;{beta};1.00;{delta}")
        for delta in (10, 30):
            for gamma in ("1.00", "0.70", "0.45", "0.30"):
                labels.append(f"R;{beta};{gamma};{delta}")
        for delta in (60, 80, 95, 115):
            labels.append(f"R;{beta};1.00;{delta}")
    return labels


def desk_suite() -> list[str]:
    """Eight small families used for trend checks at desk scale."""
    labels: list[str] = []
    for alpha, deltas in (("C", (60, 240)), ("R", (10, 95))):
        for gamma in ("1.00", "0.30"):
            for delta in deltas:
                labels.append(f"{alpha};20;{gamma};{delta}")
    return labels
