import os

from dotenv import load_dotenv

load_dotenv(".env")


class GlobalConfig:
    DEBUG_MODE = False
    USE_FAKE_REDIS = False

    LOG_LEVEL = os.environ.get("PA_SECDEG_LOG_LEVEL", "INFO")
    LOG_FILE = os.environ.get("PA_SECDEG_LOG_FILE")
    LOG_JSON_LINES = False
    # level of the JSON log lines the command line writes next to its diagnostics
    CLI_LOG_LEVEL = os.environ.get("PA_SECDEG_CLI_LOG_LEVEL", "WARNING")

    # fallback for --threads
    THREADS = int(os.environ.get("PA_SECDEG_THREADS", "1"))

    VERSION_TAG = "pa-secdeg v1"
