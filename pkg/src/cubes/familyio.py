"""
Family file format

    # optional comments
    d=3
    **0
    *11

An optional header line "d=<int>", then one subcube per line. "#" starts a
comment anywhere on a line; blank lines are ignored.
"""

import logging
import os
from pathlib import Path
from typing import Iterable, List, Optional, Union

from .config import CubeConfig
from .exceptions import DimensionError, ParseError
from .subcube import CubeFamily, parse_subcube

logger = logging.getLogger(__name__)


def parse_family_text(text: str) -> CubeFamily:
    """Parse the contents of a family file"""
    width: Optional[int] = None
    cubes = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split(CubeConfig.COMMENT_PREFIX, 1)[0].strip()
        if not line:
            continue

        if line.startswith(CubeConfig.HEADER_PREFIX):
            if width is not None or cubes:
                raise ParseError(f"Unexpected header on line {lineno}")
            try:
                width = int(line[len(CubeConfig.HEADER_PREFIX):])
            except ValueError:
                raise ParseError(f"Bad header '{line}' on line {lineno}")
            if width < 0:
                raise ParseError(f"Width must be nonnegative on line {lineno}")
            continue

        try:
            cube = parse_subcube(line)
        except ParseError as e:
            raise ParseError(f"Line {lineno}: {e}")
        if width is None:
            width = cube.width
        elif cube.width != width:
            raise DimensionError(f"Line {lineno}: width {cube.width}, expected {width}")
        cubes.append(cube)

    return CubeFamily(width or 0, cubes)


def format_family(family: CubeFamily, comments: Iterable[str] = ()) -> str:
    """Render a family in the file format, header included"""
    lines: List[str] = [f"{CubeConfig.COMMENT_PREFIX} {c}" for c in comments]
    lines.append(f"{CubeConfig.HEADER_PREFIX}{family.width}")
    lines.extend(family.texts())
    return "\n".join(lines) + "\n"


def read_family(path: Union[str, Path]) -> CubeFamily:
    with open(path, "r", encoding="utf-8") as f:
        family = parse_family_text(f.read())
    logger.debug(f"Read family of {len(family)} subcubes (d={family.width}) from {path}")
    return family


def write_family(family: CubeFamily, path: Union[str, Path], comments: Iterable[str] = ()) -> None:
    """Write a family atomically (temporary file, then rename)"""
    path = Path(path)
    if path.parent and not path.parent.exists():
        path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(path.name + ".tmp")
    with open(tmp, "w", encoding="utf-8") as f:
        f.write(format_family(family, comments))
    os.replace(tmp, path)
    logger.info(f"Wrote family of {len(family)} subcubes to {path}")
