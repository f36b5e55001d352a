"""Evolutionary maximum-independent-set solver over acyclic orientations."""

from .evolution import BatchResult, GAConfig, RunResult, best_of_runs, run
from .fitness_flow import FitnessResult, fitness, verify_independent_set
from .graph import Graph, complement, parse_dimacs, write_dimacs
from .orientation import LinearRepresentation, Orientation, induce_orientation

__all__ = [
    "BatchResult",
    "FitnessResult",
    "GAConfig",
    "Graph",
    "LinearRepresentation",
    "Orientation",
    "RunResult",
    "best_of_runs",
    "complement",
    "fitness",
    "induce_orientation",
    "parse_dimacs",
    "run",
    "verify_independent_set",
    "write_dimacs",
]
