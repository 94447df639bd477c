"""
Graph core configuration settings
"""
import os


class GraphConfig:
    """Configuration class for intersection graph analysis"""

    # Largest d for which the clique number is read off point multiplicities
    HELLY_MAX_DIM = int(os.getenv("CUBES_HELLY_MAX_DIM", "24"))

    # Clique sizes counted by default in analysis reports
    DEFAULT_CLIQUE_SIZES = [2, 3, 4]
