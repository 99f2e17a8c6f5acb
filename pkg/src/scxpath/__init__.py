"""Shortest d-paths in weighted simplicial complexes."""

from .complex import NeighborRecord, Simplex, Violation, WeightedComplex, degree, facets, neighbors, simplex, validate
from .errors import ConfigInvalid, InstanceTooLarge, InvalidSimplex, InvalidWeights, ParseError, ScxError
from .generate import GeneratorConfig, generate
from .paths import DistanceMap, DPath, PathCheck, is_d_path, shortest_path, sssp
from .scxio import dump, load, load_fixture, parse, serialize

__all__ = [
    "ConfigInvalid", "DPath", "DistanceMap", "GeneratorConfig", "InstanceTooLarge", "InvalidSimplex",
    "InvalidWeights", "NeighborRecord", "ParseError", "PathCheck", "ScxError", "Simplex", "Violation",
    "WeightedComplex", "degree", "dump", "facets", "generate", "is_d_path", "load", "load_fixture",
    "neighbors", "parse", "serialize", "shortest_path", "simplex", "sssp", "validate",
]
__version__ = "0.1.0"
