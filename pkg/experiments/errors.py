class ExperimentConfigError(Exception):
    """Raised when an experiment is configured outside what it supports"""

    pass


class ReplicateJobError(Exception):
    """Raised when a queued replicate batch fails or never finishes"""

    pass
