"""Exception hierarchy shared across the package.

Every error carries a short machine-parsable ``code`` that the CLI maps to a
process exit status, so scripted callers can branch on failures without
scraping messages.
"""


class EegairError(Exception):
    """Base class for all package errors."""

    code = "error"
    exit_status = 1


class ConfigError(EegairError):
    """Invalid configuration or CLI arguments."""

    code = "config_error"
    exit_status = 2


class FormatError(EegairError):
    """Malformed or inconsistent on-disk data (headers, blobs, CSV)."""

    code = "format_error"
    exit_status = 3


class ConvergenceError(EegairError):
    """An iterative solver failed to converge; carries diagnostics."""

    code = "convergence_error"
    exit_status = 4

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = dict(diagnostics or {})


class RankError(EegairError):
    """Input data does not have the rank an operation requires."""

    code = "rank_error"
    exit_status = 4


class TrainingDivergedError(EegairError):
    """Training produced a non-finite loss; carries epoch/batch diagnostics."""

    code = "training_diverged"
    exit_status = 4

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = dict(diagnostics or {})


class PipelineError(EegairError):
    """A pipeline stage failed; carries the stage name."""

    code = "pipeline_error"
    exit_status = 5

    def __init__(self, stage, message):
        super().__init__(f"stage '{stage}': {message}")
        self.stage = stage
