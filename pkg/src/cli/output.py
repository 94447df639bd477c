"""
Report rendering: JSON by default, aligned tables with --human
"""

import json
from typing import Any, Dict, TextIO, Union

from pydantic import BaseModel

from .config import CliConfig

Document = Union[BaseModel, Dict[str, Any]]


def as_dict(document: Document, **extra: Any) -> Dict[str, Any]:
    payload = document.model_dump(mode="json") if isinstance(document, BaseModel) else dict(document)
    payload.update({key: value for key, value in extra.items() if value is not None})
    return payload


def _cell(value: Any) -> str:
    if isinstance(value, dict):
        return "  ".join(f"{k}={_cell(v)}" for k, v in value.items()) or "-"
    if isinstance(value, list):
        if value and all(isinstance(v, list) for v in value):
            return " ".join("{" + ",".join(str(x) for x in v) + "}" for v in value)
        return " ".join(str(v) for v in value) or "-"
    if value is None:
        return "-"
    return str(value)


def render_table(payload: Dict[str, Any]) -> str:
    width = max((len(key) for key in payload), default=0)
    return "\n".join(f"{key.ljust(width)}  {_cell(value)}" for key, value in payload.items())


def render(payload: Dict[str, Any], human: bool) -> str:
    if human:
        return render_table(payload)
    return json.dumps(payload, indent=CliConfig.JSON_INDENT)


def emit(document: Document, human: bool, out: TextIO, **extra: Any) -> None:
    out.write(render(as_dict(document, **extra), human) + "\n")
