class InapplicableInput(ValueError):
    """The input violates a hypothesis of the requested criterion.

    The message names the hypothesis (non-pyramidal, regular, repeat-free,
    ...) so callers can tell a wrong-shaped question from a negative answer.
    """


class GuardExceeded(ValueError):
    """A brute-force enumeration guard was hit; the oracle refuses to run."""
