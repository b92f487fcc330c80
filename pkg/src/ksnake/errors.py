"""Exception types shared across the package."""


class ConstructionError(RuntimeError):
    """A structural precondition of a construction failed.

    Raised instead of silently repairing: a violation here means either the
    input is not what the construction requires or an internal table is
    wrong, and a loud abort is the only safe response.
    """


class SnakeFileError(ValueError):
    """A snake file could not be parsed."""


class ConjectureUnresolved(RuntimeError):
    """The extended-construction search exhausted its budget without a snake.

    Carries an ``ExtendedSearchReport`` in ``self.report``.
    """

    def __init__(self, report):
        super().__init__("extended construction search unresolved")
        self.report = report
