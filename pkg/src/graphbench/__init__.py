"""Scale-free graph kernel benchmark suite.

A deterministic preferential-attachment graph generator, two interchangeable
graph representations (CSR and linked adjacency lists), five algorithm
kernels with brute-force verification oracles, and a timing/reporting
harness with a CLI.
"""

from ._version import __version__
from .core import (AdjListGraph, ColorRangeError, CsrGraph, DuplicateEdgeError,
                   EndpointRangeError, GraphBenchError, GraphSnapshot,
                   InvalidParamsError, SelfLoopError, ValidationReport,
                   WeightRangeError, build_adjlist, build_csr, graphs_equal,
                   neighbors, restore, snapshot, to_adjlist, to_csr, validate)
from .fileformat import ParseError, checksum, parse, serialize
from .generator import GenerationResult, GeneratorParams, generate
from .harness import (KernelReport, OracleMismatchError, RunConfig,
                      ValidationFailedError, emit_report, run)
from .prng import Prng, UniformStream, ZeroRangeError

__all__ = [
    "__version__",
    "AdjListGraph",
    "CsrGraph",
    "GraphSnapshot",
    "ValidationReport",
    "GraphBenchError",
    "SelfLoopError",
    "DuplicateEdgeError",
    "EndpointRangeError",
    "ColorRangeError",
    "WeightRangeError",
    "InvalidParamsError",
    "ParseError",
    "ZeroRangeError",
    "OracleMismatchError",
    "ValidationFailedError",
    "build_csr",
    "build_adjlist",
    "neighbors",
    "validate",
    "graphs_equal",
    "snapshot",
    "restore",
    "to_csr",
    "to_adjlist",
    "serialize",
    "parse",
    "checksum",
    "Prng",
    "UniformStream",
    "GeneratorParams",
    "GenerationResult",
    "generate",
    "RunConfig",
    "KernelReport",
    "run",
    "emit_report",
]
