"""
Command-line settings
"""
import os


class CliConfig:
    """Defaults for the cubegraph command line"""

    PROG = "cubegraph"

    # Witness families are written here unless -o is given
    WITNESS_DIR = os.getenv("CUBEGRAPH_WITNESS_DIR", ".")

    REPORT_FORMATS = ("json", "family")
    EXPORT_FORMATS = ("graph6", "dimacs", "json")

    JSON_INDENT = 2
