import os

from dotenv import load_dotenv

load_dotenv(".env")


class AnalyticConfig:

    # tables up to this size are built with rationals in "auto" mode
    EXACT_MODE_LIMIT = int(os.environ.get("PA_SECDEG_EXACT_TABLE_LIMIT", "200"))

    # bound on |x_k - 2/((k+1)(k+2))| * k^3 / ln^2 k accepted as "bounded"
    X_ASYMPTOTIC_CONSTANT = 100.0

    # tails are summed until a term drops below this fraction of the running sum
    TAIL_RELATIVE_CUTOFF = 1e-18
    TAIL_MAX_TERMS = 100_000
