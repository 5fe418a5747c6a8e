import os

from dotenv import load_dotenv

load_dotenv(".env")


class OracleConfig:

    # (2n - 1)!! slot sequences are enumerated, 2,027,025 at n = 8
    ENUMERATION_CAP = int(os.environ.get("PA_SECDEG_ENUM_CAP", "8"))

    # "auto" mode runs the recurrences in rationals up to this n
    EXACT_DP_LIMIT = int(os.environ.get("PA_SECDEG_EXACT_DP_LIMIT", "64"))

    # default window of the command line recurrences in each direction
    DEFAULT_WINDOW_CAP = int(os.environ.get("PA_SECDEG_DP_WINDOW_CAP", "128"))

    # relative slack of the float mass-conservation check
    FLOAT_MASS_TOLERANCE = 1e-9
