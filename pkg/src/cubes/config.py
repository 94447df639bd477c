"""
Subcube core configuration settings
"""
import os


class CubeConfig:
    """Configuration class for subcube algebra"""

    # Largest dimension enumerate_points will expand (2^cap points)
    ENUMERATION_CAP = int(os.getenv("CUBES_ENUMERATION_CAP", "20"))

    # Family file format
    HEADER_PREFIX = "d="
    COMMENT_PREFIX = "#"
