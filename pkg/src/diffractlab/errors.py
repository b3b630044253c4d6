"""Exception and warning types shared across the package."""


class DiffractionLabError(Exception):
    """Base class for all errors raised by diffractlab."""


class InvalidWindowError(DiffractionLabError):
    """Acceptance window is degenerate (lo >= hi) or otherwise unusable."""


class OutOfRegionError(DiffractionLabError):
    """Requested interval is not contained in the data's exhaustive region."""


class NotInSystemError(DiffractionLabError):
    """A comb's support is not contained in the model's base point set."""


class NotRepresentableError(DiffractionLabError):
    """Patch cannot be represented inside a translated model set."""


class AtomBudgetError(DiffractionLabError):
    """A pairwise operation would exceed the configured atom-pair budget."""


class BoundaryContaminationError(DiffractionLabError):
    """Requested radius reaches into the boundary-contaminated zone."""


class ResolutionError(DiffractionLabError):
    """Frequency grid is too coarse for the requested computation."""


class InvalidConfigError(DiffractionLabError):
    """Experiment configuration failed validation."""


class BoundaryIncompleteWarning(UserWarning):
    """Result may be missing contributions from outside the known region."""


class BoundaryHitWarning(UserWarning):
    """An exact arithmetic test landed on a half-open boundary."""
