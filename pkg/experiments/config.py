import os
from pathlib import Path

from dotenv import load_dotenv

load_dotenv(".env")


class ExperimentsConfig:

    GOLDEN_DIR = Path(
        os.environ.get("PA_SECDEG_GOLDEN_DIR", Path(__file__).parent / "golden")
    )

    BOOTSTRAP_RESAMPLES = 200
    # stream index of the bootstrap generator, kept apart from replicate indices
    BOOTSTRAP_STREAM = 2**32

    # rows of the float recurrences used as the exact reference for Monte-Carlo means
    DP_ROW_WINDOW = int(os.environ.get("PA_SECDEG_DP_ROW_WINDOW", "128"))

    # agreement with exact expectations, in standard errors
    STANDARD_ERRORS = 5.0

    # queued replicate batches
    BATCH_SIZE = int(os.environ.get("PA_SECDEG_BATCH_SIZE", "10"))
    JOB_TIMEOUT = int(os.environ.get("PA_SECDEG_JOB_TIMEOUT", "3600"))
    POLL_INTERVAL = 0.5
