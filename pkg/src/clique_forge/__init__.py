"""Streaming clique enumeration over edge filtrations."""

from ._backend import BACKENDS, DEFAULT_BACKEND, HAVE_COMPILED
from .boundary import enumerate_boundary_fixed, enumerate_boundary_recursive, enumerate_triangles
from .classic import (StaticAdjacency, degree_order, triangles_edge_iterator, triangles_forward,
                      triangles_k3)
from .core import (BoundaryNeighborhood, Clique, FilteredEdge, LayeredNeighborhood,
                   boundary_faces, canonicalize)
from .errors import (AmbiguousConvention, CliqueForgeError, DegenerateClique, DuplicateEdge,
                     InconsistentInput, InvalidOrder, MalformedInput, NoConventionMatches,
                     OracleTooLarge, UnsupportedFormat)
from .filtration import (EdgeStream, OrderPolicy, PointCloud, build_vr_edges, complete_graph,
                         dump_edge_stream, load_edge_stream, parse_csv_edges, parse_pcd_ascii,
                         reorder)
from .multilayer import enumerate_multilayer_fixed, enumerate_multilayer_recursive
from .oracle import brute_force_cliques, per_dim_census
from .sinks import CliqueSink, CollectingSink, CountingSink, NDJSONSink, RunSummary

__version__ = "0.1.0"
