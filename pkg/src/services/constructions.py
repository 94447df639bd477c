"""
Dispatch of named constructions

Subcube kinds return a CubeFamily, ground-set kinds a SetFamily. Both the
command line and the HTTP routes go through `construct`, so a named
construction gives identical families on either surface.
"""

import logging
from typing import Callable, Dict, Union

from ..cache.decorators import cache_result
from ..constructions import (
    clique_density_family,
    full_codim_family,
    large_n_family,
    mixed_partite_family,
    partite_family,
)
from ..cubes.exceptions import DomainError, PreconditionError
from ..cubes.subcube import CubeFamily
from ..graphs.graph import build_graph
from ..groundset import SetFamily, mols_family, pair_cover_family, pair_packing_family
from .models import ConstructionDocument, ConstructionParams

logger = logging.getLogger(__name__)

Family = Union[CubeFamily, SetFamily]


def _require(params: ConstructionParams, kind: str, *names: str) -> list:
    missing = [name for name in names if getattr(params, name) is None]
    if missing:
        raise PreconditionError(f"Construction '{kind}' needs {', '.join(missing)}")
    return [getattr(params, name) for name in names]


def _mixed(p: ConstructionParams) -> CubeFamily:
    (d,) = _require(p, "mixed", "d")
    if not p.fixed_sets:
        raise PreconditionError("Construction 'mixed' needs fixed_sets")
    return mixed_partite_family(d, p.fixed_sets)


_BUILDERS: Dict[str, Callable[[ConstructionParams], Family]] = {
    "partite": lambda p: partite_family(*_require(p, "partite", "n", "d", "k")),
    "full-codim": lambda p: full_codim_family(*_require(p, "full-codim", "d", "r"), enlarge=p.enlarge),
    "large-n": lambda p: large_n_family(*_require(p, "large-n", "n", "d", "k")),
    "mixed": _mixed,
    "clique-density": lambda p: clique_density_family(*_require(p, "clique-density", "d", "r", "x")),
    "mols": lambda p: mols_family(*_require(p, "mols", "q", "r")),
    "cover": lambda p: pair_cover_family(*_require(p, "cover", "n", "r")),
    "packing": lambda p: pair_packing_family(*_require(p, "packing", "n", "r")),
}

CONSTRUCTION_KINDS = tuple(_BUILDERS)
SET_KINDS = ("mols", "cover", "packing")


def construct(kind: str, params: ConstructionParams) -> Family:
    """Build the family of a named construction"""
    builder = _BUILDERS.get(kind)
    if builder is None:
        raise DomainError(f"Unknown construction '{kind}' (choose from {', '.join(CONSTRUCTION_KINDS)})")
    family = builder(params)
    logger.info(f"Constructed {kind} with {len(family)} members from {params.given()}")
    return family


def construction_document(kind: str, params: ConstructionParams, family: Family) -> ConstructionDocument:
    if isinstance(family, SetFamily):
        return ConstructionDocument(
            kind=kind,
            parameters=params.given(),
            n=len(family),
            edges=family.intersection_graph().edge_count(),
            ground_size=family.ground_size,
            sets=family.members,
            blocks=family.blocks,
        )
    return ConstructionDocument(
        kind=kind,
        parameters=params.given(),
        n=len(family),
        edges=build_graph(family).edge_count(),
        d=family.width,
        members=family.texts(),
    )


def provenance(kind: str, params: ConstructionParams) -> str:
    """One-line description written as a comment into family files"""
    values = " ".join(f"{key}={value}" for key, value in params.given().items())
    return f"construct {kind} {values}".rstrip()


@cache_result("construction", model=ConstructionDocument)
def construction_result(kind: str, parameters: dict) -> ConstructionDocument:
    """Cached construction document keyed by kind and raw parameters"""
    params = ConstructionParams(**parameters)
    return construction_document(kind, params, construct(kind, params))
