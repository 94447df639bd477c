"""
Construction settings
"""

import os


class ConstructionConfig:
    """Limits for the exhaustive profile optimizer"""

    # Largest cube dimension the optimizer enumerates compositions for
    OPTIMIZER_MAX_DIM: int = int(os.getenv("OPTIMIZER_MAX_DIM", "64"))
    OPTIMIZER_MAX_PARTS: int = int(os.getenv("OPTIMIZER_MAX_PARTS", "8"))
