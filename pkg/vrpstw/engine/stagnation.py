"""
Stagnation clock for the steady-state GA.

Counts consecutive iterations without a newly accepted nondominated
individual. The count only moves forward one iteration at a time, or back
to zero when an improvement is found.
"""


class StagnationClock:
    """Iterations since the last improvement, compared against a limit."""

    def __init__(self, limit: int) -> None:
        if limit < 1:
            raise ValueError(f"Stagnation limit must be >= 1, got {limit}")
        self.limit = limit
        self._idle: int = 0

    def now(self) -> int:
        """Current number of improvement-free iterations."""
        return self._idle

    def tick(self) -> None:
        """Record one more iteration without improvement."""
        self._idle += 1

    def reset(self) -> None:
        """An improvement was found."""
        self._idle = 0

    @property
    def expired(self) -> bool:
        return self._idle >= self.limit
