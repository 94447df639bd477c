"""
Search checkpoint files

A checkpoint is a JSON document tagged with a format string and a hash of
everything that determines the search tree. Writes go to a temporary file
that replaces the target, so a crash never leaves a truncated checkpoint.
"""

import hashlib
import json
import logging
import os
from pathlib import Path
from typing import Optional, Union

from ..cubes.exceptions import CheckpointMismatchError
from .config import RamseyConfig
from .models import SearchCheckpoint
from .space import Relabel

logger = logging.getLogger(__name__)


def config_hash(d: int, k: int, l: int, split_depth: int, relabel: Relabel = None) -> str:
    """Hash of the search parameters (worker count excluded)"""
    payload = {
        "format": RamseyConfig.CHECKPOINT_FORMAT,
        "d": d,
        "k": k,
        "l": l,
        "split_depth": split_depth,
        "relabel": [list(relabel[0]), relabel[1]] if relabel is not None else None,
    }
    return hashlib.sha256(json.dumps(payload, sort_keys=True).encode()).hexdigest()


def default_checkpoint_path(d: int, k: int, l: int) -> Path:
    return Path(RamseyConfig.CHECKPOINT_DIR) / f"ramsey-d{d}-k{k}-l{l}.json"


def save_checkpoint(checkpoint: SearchCheckpoint, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(checkpoint.model_dump_json(indent=2))
    os.replace(tmp, path)
    logger.info(
        f"Checkpoint written to {path}: {len(checkpoint.completed)}/{len(checkpoint.frontier)} branches done"
    )
    return path


def load_checkpoint(path: Union[str, Path], expected_hash: Optional[str] = None) -> SearchCheckpoint:
    """Read a checkpoint, refusing one written for different parameters"""
    checkpoint = SearchCheckpoint.model_validate_json(Path(path).read_text())
    if checkpoint.format != RamseyConfig.CHECKPOINT_FORMAT:
        raise CheckpointMismatchError(
            f"Checkpoint {path} has format '{checkpoint.format}', expected '{RamseyConfig.CHECKPOINT_FORMAT}'"
        )
    if expected_hash is not None and checkpoint.config_hash != expected_hash:
        logger.error(f"Checkpoint {path} was written for different search parameters")
        raise CheckpointMismatchError(f"Checkpoint {path} does not match the requested search")
    return checkpoint
