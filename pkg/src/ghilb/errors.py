"""Exception types shared across the pipeline."""


class ConsistencyError(RuntimeError):
    """An internal invariant failed; signals a bug or an unexpected input class.

    ``invariant`` names the check that failed so callers (the CLI in
    particular) can report it.
    """

    def __init__(self, invariant: str, message: str = ""):
        self.invariant = invariant
        super().__init__(f"[{invariant}] {message}" if message else invariant)


class TilingError(ConsistencyError):
    pass


class NoMinimizer(ValueError):
    """A character class has no monomial minimal at every vertex of a cone."""

    def __init__(self, character):
        self.character = character
        super().__init__(f"no simultaneous minimizer for {character}")
