"""
Ramsey search settings
"""

import os


class RamseyConfig:
    """Search limits, work splitting and checkpointing"""

    # Largest d the exact search accepts
    SEARCH_CAP: int = int(os.getenv("RAMSEY_SEARCH_CAP", "4"))

    # Support size at which the search tree is cut into branches
    SPLIT_DEPTH: int = int(os.getenv("RAMSEY_SPLIT_DEPTH", "6"))

    CHECKPOINT_DIR: str = os.getenv("RAMSEY_CHECKPOINT_DIR", ".ramsey-checkpoints")
    CHECKPOINT_EVERY: int = int(os.getenv("RAMSEY_CHECKPOINT_EVERY", "50"))
    CHECKPOINT_FORMAT: str = "cubegraph-ramsey-checkpoint/1"

    WORKERS: int = int(os.getenv("RAMSEY_WORKERS", "1"))
