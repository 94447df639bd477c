"""
cubegraph command-line entry point

Exit codes: 0 on success, 1 on usage or domain errors, 2 on infeasible
parameters, resource limits and interrupted searches.
"""

import logging
import sys
from typing import Optional, Sequence, TextIO

from ..cubes.exceptions import CubeError, SearchInterrupted
from .commands import dispatch
from .parser import parse_command

logger = logging.getLogger(__name__)


def run(argv: Sequence[str], out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    """Run one command; reports go to `out`, errors to `err`"""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        config = parse_command(argv)
        logging.getLogger().setLevel(logging.DEBUG if config.verbose else logging.INFO)
        return dispatch(config, out)
    except SearchInterrupted as e:
        err.write(f"interrupted: {e}\ncheckpoint: {e.checkpoint_path}\n")
        return e.exit_code
    except CubeError as e:
        err.write(f"error: {type(e).__name__}: {e}\n")
        return e.exit_code
    except OSError as e:
        logger.error(f"I/O failure: {e}")
        err.write(f"error: {e}\n")
        return 1
    except SystemExit as e:
        # --help
        return e.code if isinstance(e.code, int) else 0


def main() -> None:
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")
    sys.exit(run(sys.argv[1:]))
