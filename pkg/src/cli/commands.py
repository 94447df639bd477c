"""
Subcommand implementations

Each command is a thin adapter over library calls and returns an exit code.
Witness families are always written to disk next to the reported values.
"""

import json
import logging
from pathlib import Path
from typing import Callable, Dict, TextIO

from ..constructions import optimize_partite_profile, realize_profile
from ..cubes.exceptions import DomainError, PreconditionError
from ..cubes.familyio import format_family, read_family, write_family
from ..cubes.subcube import CubeFamily
from ..graphs.export import analysis_report, to_dimacs, to_graph6
from ..graphs.graph import build_graph, clique_number, independence_number
from ..ramsey import default_checkpoint_path, ramsey_bruteforce, ramsey_exact, verify_witness
from ..random_model import RandomModelParams, estimate_edge_probability
from ..services import (
    SET_KINDS,
    ConstructionParams,
    blowup_lower_bound,
    construct,
    construction_document,
    generate_seed,
    provenance,
    ramsey_bounds,
    sample_document,
    sample_random_family,
)
from .config import CliConfig
from .models import CommandConfig
from .output import as_dict, emit, render

logger = logging.getLogger(__name__)

Command = Callable[[CommandConfig, TextIO], int]


def _write_text(text: str, path: str) -> None:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text, encoding="utf-8")
    logger.info(f"Wrote {target}")


def _witness_path(config: CommandConfig, name: str) -> str:
    return config.output or str(Path(CliConfig.WITNESS_DIR) / name)


def construct_command(config: CommandConfig, out: TextIO) -> int:
    kind = config.action
    params = ConstructionParams(
        n=config.n, d=config.d, k=config.k, r=config.r, q=config.q, x=config.x,
        fixed_sets=[[c - 1 for c in coords] for coords in config.fixed_sets] if config.fixed_sets else None,
        enlarge=config.enlarge,
    )
    family = construct(kind, params)
    document = construction_document(kind, params, family)
    as_json = config.format == "json" or kind in SET_KINDS

    if config.output is None:
        if as_json:
            emit(document, config.human, out)
        else:
            out.write(format_family(family, [provenance(kind, params)]))
        return 0

    if as_json:
        _write_text(render(as_dict(document), human=False) + "\n", config.output)
    else:
        write_family(family, config.output, [provenance(kind, params)])
    summary = {"kind": kind, "parameters": document.parameters, "n": document.n,
               "d": document.d, "edges": document.edges, "output": config.output}
    emit(summary, config.human, out)
    return 0


def analyze_command(config: CommandConfig, out: TextIO) -> int:
    family = read_family(config.input)
    emit(analysis_report(family, config.clique_sizes), config.human, out, input=config.input)
    return 0


def optimize_command(config: CommandConfig, out: TextIO) -> int:
    n, d, r = config.require("n", "d", "r")
    result = optimize_partite_profile(n, d, r)
    if config.output is not None:
        write_family(realize_profile(result.profile, d), config.output, [f"optimize n={n} d={d} r={r}"])
    emit(result, config.human, out, output=config.output)
    return 0


def ramsey_exact_command(config: CommandConfig, out: TextIO) -> int:
    d, k, l = config.require("d", "k", "l")
    if config.method == "bruteforce":
        result = ramsey_bruteforce(d, k, l)
    else:
        checkpoint = config.checkpoint
        if checkpoint is None and config.resume:
            checkpoint = default_checkpoint_path(d, k, l)
        result = ramsey_exact(
            d, k, l,
            workers=config.workers,
            checkpoint_path=checkpoint,
            resume=config.resume,
            max_branches=config.max_branches,
        )

    path = _witness_path(config, f"ramsey-d{d}-k{k}-l{l}.txt")
    write_family(result.witness_family(), path, [
        f"R_{d}({k},{l}) = {result.value}: {len(result.witness)} subcubes, no K_{k}, "
        f"no {l} pairwise disjoint members",
        f"method={result.method} nodes={result.nodes_explored}",
    ])
    emit(result, config.human, out, witness_file=path)
    return 0


def ramsey_bounds_command(config: CommandConfig, out: TextIO) -> int:
    d, k, l = config.require("d", "k", "l")
    emit(ramsey_bounds(d, k, l, config.alpha), config.human, out)
    return 0


def ramsey_blowup_command(config: CommandConfig, out: TextIO) -> int:
    d, k, l, x = config.require("d", "k", "l", "x")
    document = blowup_lower_bound(d, k, l, x)
    path = _witness_path(config, f"blowup-d{d}-k{k}-l{l}-x{x}.txt")
    family = CubeFamily.parse(document.members, width=d)
    write_family(family, path, [f"R_{d}({k},{l}) > {document.value}: blow-up of a ({x},{l}) witness graph"])
    emit(document, config.human, out, witness_file=path)
    return 0


def ramsey_verify_command(config: CommandConfig, out: TextIO) -> int:
    k, l = config.require("k", "l")
    family = read_family(config.input)
    graph = build_graph(family)
    omega, _ = clique_number(graph)
    valid = verify_witness(family, k, l)
    emit({
        "input": config.input,
        "n": len(family),
        "d": family.width,
        "k": k,
        "l": l,
        "clique_number": omega,
        "independence_number": independence_number(graph),
        "valid": valid,
        "certifies": f"R_{family.width}({k},{l}) > {len(family)}" if valid else None,
    }, config.human, out)
    if not valid:
        logger.warning(f"{config.input} contains K_{k} or {l} pairwise disjoint members")
        return 1
    return 0


def sample_command(config: CommandConfig, out: TextIO) -> int:
    n, d = config.require("n", "d")
    if config.p is None and config.codim is None:
        raise DomainError("'sample' needs -p or --codim")
    if config.p is not None and config.codim is not None:
        raise DomainError("'sample' takes either -p or --codim, not both")

    seed = config.seed if config.seed is not None else generate_seed()
    params = RandomModelParams.build(
        n=n, d=d, p=config.p or 0.0, seed=seed, codim_distribution=config.codim,
    )

    if config.pairs is not None:
        estimate = estimate_edge_probability(params, config.pairs)
        emit(estimate, config.human, out, seed=seed)
        return 0

    family = sample_random_family(params, config.workers)
    document = sample_document(params, family)
    if config.output is not None:
        write_family(family, config.output, [params.provenance()])
        payload = as_dict(document, output=config.output)
        payload.pop("members")
        emit(payload, config.human, out)
    else:
        emit(document, config.human, out)
    return 0


def export_command(config: CommandConfig, out: TextIO) -> int:
    family = read_family(config.input)
    graph = build_graph(family)
    if config.format == "graph6":
        text = to_graph6(graph) + "\n"
    elif config.format == "dimacs":
        text = to_dimacs(graph, [f"intersection graph of {config.input}", f"d={family.width}"])
    elif config.format == "json":
        text = json.dumps({
            "n": graph.n,
            "d": family.width,
            "members": family.texts(),
            "edges": [list(e) for e in graph.edges()],
        }, indent=CliConfig.JSON_INDENT) + "\n"
    else:
        raise PreconditionError(f"Unknown export format '{config.format}'")

    if config.output is not None:
        _write_text(text, config.output)
    else:
        out.write(text)
    return 0


COMMANDS: Dict[str, Command] = {
    "construct": construct_command,
    "analyze": analyze_command,
    "optimize": optimize_command,
    "ramsey exact": ramsey_exact_command,
    "ramsey bounds": ramsey_bounds_command,
    "ramsey blowup": ramsey_blowup_command,
    "ramsey verify": ramsey_verify_command,
    "sample": sample_command,
    "export": export_command,
}


def dispatch(config: CommandConfig, out: TextIO) -> int:
    name = f"{config.command} {config.action}" if config.command == "ramsey" else config.command
    return COMMANDS[name](config, out)
