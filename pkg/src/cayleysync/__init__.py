"""Synchrony measures of threshold activation on Cayley digraphs."""

from .digraph import (
    Digraph,
    cayley_digraph,
    girth_bfs,
    girth_formula_cyclic,
    in_degree_within,
    is_acyclic,
    members,
    peel_core,
    vertex_set,
)
from .extended import INF
from .groups import (
    Group,
    GeneratingSet,
    cycle_index_regular,
    load_cayley_table,
    make_cyclic,
    orbit_count,
    parse_generators,
)
from .measures import (
    best_generating_sets,
    higher_diameter,
    measure_table,
    prob_sync,
    diameter_from_girth,
    velocity,
)
from .orbits import canonical_path, enumerate_path_reps, is_path
from .spread import Finite, Stuck, run, step, synchronizes_by_peeling, verify_stuck_certificate

__all__ = [
    "best_generating_sets",
    "canonical_path",
    "cayley_digraph",
    "cycle_index_regular",
    "diameter_from_girth",
    "Digraph",
    "enumerate_path_reps",
    "is_path",
    "Finite",
    "GeneratingSet",
    "girth_bfs",
    "girth_formula_cyclic",
    "Group",
    "higher_diameter",
    "in_degree_within",
    "INF",
    "is_acyclic",
    "load_cayley_table",
    "make_cyclic",
    "measure_table",
    "members",
    "orbit_count",
    "parse_generators",
    "peel_core",
    "prob_sync",
    "run",
    "step",
    "Stuck",
    "synchronizes_by_peeling",
    "velocity",
    "verify_stuck_certificate",
    "vertex_set",
    "load_schema",
]

__version__ = "0.1.0"


def load_schema(name: str) -> dict:
    """JSON schema shipped for a CLI output, e.g. ``load_schema("trial_report")``."""
    import json
    from importlib.resources import files

    return json.loads((files(__name__) / "schemas" / f"{name}.schema.json").read_text())
