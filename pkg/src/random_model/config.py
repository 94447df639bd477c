"""
Random model settings
"""

import os


class RandomModelConfig:
    # Members drawn per Philox key; changing it changes every sampled family
    BLOCK_SIZE: int = 1024
    SAMPLE_WORKERS: int = int(os.getenv("RANDOM_SAMPLE_WORKERS", "1"))
