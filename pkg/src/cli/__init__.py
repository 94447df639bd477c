"""
Command-line front end
construct, analyze, optimize, ramsey, sample and export subcommands
"""

from .config import CliConfig
from .models import CommandConfig
from .parser import UsageError, build_parser, parse_command
from .commands import COMMANDS, dispatch
from .main import run, main

__all__ = [
    "CliConfig",
    "CommandConfig",
    "UsageError",
    "build_parser",
    "parse_command",
    "COMMANDS",
    "dispatch",
    "run",
    "main",
]
