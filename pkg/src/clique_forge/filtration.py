"""Point clouds, edge lists and the edge streams fed to the enumerators."""

from __future__ import annotations

import enum
import io
import logging
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np
from scipy.spatial.distance import pdist

from .core import FilteredEdge
from .errors import DuplicateEdge, MalformedInput, UnsupportedFormat

log = logging.getLogger(__name__)

__all__ = [
    "OrderPolicy",
    "PointCloud",
    "EdgeStream",
    "parse_pcd_ascii",
    "write_pcd_ascii",
    "parse_csv_edges",
    "dump_edge_stream",
    "load_edge_stream",
    "build_vr_edges",
    "complete_graph",
    "reorder",
    "read_pcd",
    "read_csv_edges",
]


class OrderPolicy(str, enum.Enum):
    BY_WEIGHT_THEN_LEX = "weight"
    LEXICOGRAPHIC = "lex"
    AS_GIVEN = "asgiven"

    @classmethod
    def parse(cls, value) -> "OrderPolicy":
        if isinstance(value, cls):
            return value
        aliases = {"byweightthenlex": "weight", "lexicographic": "lex",
                   "as_given": "asgiven", "as-given": "asgiven"}
        key = str(value).lower()
        return cls(aliases.get(key, key))


@dataclass(frozen=True)
class PointCloud:
    points: np.ndarray  # shape (n, m)

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 2 or (len(pts) and pts.shape[1] < 1):
            raise MalformedInput(f"point cloud must be an (n, m) array, got shape {pts.shape}")
        if not np.isfinite(pts).all():
            raise MalformedInput("point cloud has non-finite coordinates")
        object.__setattr__(self, "points", pts)

    @classmethod
    def from_points(cls, points: Sequence[Sequence[float]]) -> "PointCloud":
        rows = [tuple(p) for p in points]
        dims = {len(r) for r in rows}
        if len(dims) > 1:
            raise MalformedInput(f"mixed point dimensions {sorted(dims)}")
        if not rows:
            return cls(np.empty((0, 1)))
        return cls(np.array(rows, dtype=float))

    def __len__(self) -> int:
        return len(self.points)

    @property
    def dimension(self) -> int:
        return self.points.shape[1]


class EdgeStream:
    """Ordered, duplicate-free sequence of canonical edges.

    Stored column-wise (``u``, ``v``, ``weight`` arrays) so that streams with
    millions of edges stay cheap; iterating yields :class:`FilteredEdge`.
    """

    def __init__(self, u, v, weight=None, order: OrderPolicy | str = OrderPolicy.AS_GIVEN,
                 *, self_loops_dropped: int = 0, duplicates_dropped: int = 0, validate=True):
        u = np.asarray(u, dtype=np.int64).reshape(-1)
        v = np.asarray(v, dtype=np.int64).reshape(-1)
        if weight is None:
            weight = np.zeros(len(u))
        weight = np.asarray(weight, dtype=float).reshape(-1)
        if not (len(u) == len(v) == len(weight)):
            raise MalformedInput("edge columns differ in length")
        if validate and len(u):
            if (u < 0).any() or (v < 0).any():
                raise MalformedInput("node ids must be non-negative")
            if (u == v).any():
                i = int(np.flatnonzero(u == v)[0])
                raise MalformedInput(f"self-loop on node {u[i]} at stream position {i}")
            if not (weight >= 0).all():
                raise MalformedInput("edge weights must be finite and >= 0")
            lo, hi = np.minimum(u, v), np.maximum(u, v)
            u, v = lo, hi
            _check_unique(u, v)
        self.u, self.v, self.weight = u, v, weight
        self.order = OrderPolicy.parse(order)
        self.self_loops_dropped = self_loops_dropped
        self.duplicates_dropped = duplicates_dropped

    @classmethod
    def from_edges(cls, edges: Iterable, order=OrderPolicy.AS_GIVEN) -> "EdgeStream":
        rows = [tuple(e) for e in edges]
        if not rows:
            return cls([], [], [], order)
        u = [r[0] for r in rows]
        v = [r[1] for r in rows]
        w = [r[2] if len(r) > 2 else 0.0 for r in rows]
        return cls(u, v, w, order)

    def __len__(self) -> int:
        return len(self.u)

    def __iter__(self) -> Iterator[FilteredEdge]:
        for a, b, w in zip(self.u.tolist(), self.v.tolist(), self.weight.tolist()):
            yield FilteredEdge(a, b, w)

    def pairs(self) -> list[tuple[int, int]]:
        return list(zip(self.u.tolist(), self.v.tolist()))

    def nodes(self) -> np.ndarray:
        return np.unique(np.concatenate([self.u, self.v]))

    def head(self, k: int) -> "EdgeStream":
        return EdgeStream(self.u[:k], self.v[:k], self.weight[:k], self.order, validate=False)

    def __eq__(self, other) -> bool:
        if not isinstance(other, EdgeStream):
            return NotImplemented
        return (np.array_equal(self.u, other.u) and np.array_equal(self.v, other.v)
                and np.array_equal(self.weight, other.weight))

    def __repr__(self) -> str:
        return f"EdgeStream({len(self)} edges, order={self.order.value})"


def _check_unique(u, v):
    key = u * (int(v.max()) + 1) + v if len(u) else u
    _, first, counts = np.unique(key, return_index=True, return_counts=True)
    if (counts > 1).any():
        j = int(np.flatnonzero(counts > 1)[0])
        i = int(first[j])
        raise DuplicateEdge(int(u[i]), int(v[i]))


def _as_text(data) -> str:
    if isinstance(data, (bytes, bytearray)):
        return data.decode("utf-8")
    if hasattr(data, "read"):
        data = data.read()
        return data.decode("utf-8") if isinstance(data, (bytes, bytearray)) else data
    return data


# -- ASCII PCD ---------------------------------------------------------------

def parse_pcd_ascii(data) -> PointCloud:
    """Read the x, y, z columns of an ASCII PCD file.

    Only ``FIELDS``, ``POINTS`` and ``DATA`` header lines are interpreted. The
    first three fields are taken as coordinates (fewer if the file has fewer).
    """
    if isinstance(data, (bytes, bytearray)):
        data = data.decode("latin-1")
    lines = iter(_as_text(data).splitlines())
    fields: list[str] | None = None
    n_points = None
    lineno = 0
    for line in lines:
        lineno += 1
        parts = line.split()
        if not parts or parts[0].startswith("#"):
            continue
        key = parts[0].upper()
        if key == "FIELDS":
            fields = parts[1:]
        elif key == "POINTS":
            try:
                n_points = int(parts[1])
            except (IndexError, ValueError):
                raise MalformedInput("bad POINTS line", lineno) from None
        elif key == "DATA":
            fmt = parts[1].lower() if len(parts) > 1 else ""
            if fmt != "ascii":
                raise UnsupportedFormat(f"DATA {fmt or '?'} is not supported (ascii only)", lineno)
            break
    else:
        raise MalformedInput("missing DATA line")
    if fields is None or n_points is None:
        raise MalformedInput("header needs FIELDS and POINTS lines")
    ncoord = min(3, len(fields))
    if ncoord == 0:
        raise MalformedInput("FIELDS line names no fields")
    rows = []
    for line in lines:
        lineno += 1
        parts = line.split()
        if not parts:
            continue
        if len(parts) < ncoord:
            raise MalformedInput(f"expected {ncoord} values, got {len(parts)}", lineno)
        try:
            rows.append([float(x) for x in parts[:ncoord]])
        except ValueError:
            raise MalformedInput(f"non-numeric value in {line!r}", lineno) from None
    if len(rows) != n_points:
        raise MalformedInput(f"POINTS {n_points} but {len(rows)} data rows")
    if not rows:
        return PointCloud(np.empty((0, ncoord)))
    return PointCloud(np.array(rows))


def write_pcd_ascii(pc: PointCloud) -> str:
    names = ["x", "y", "z"][: pc.dimension] if pc.dimension <= 3 else [
        f"f{i}" for i in range(pc.dimension)]
    n = len(pc)
    out = io.StringIO()
    out.write("# .PCD v0.7 - Point Cloud Data file format\nVERSION 0.7\n")
    out.write(f"FIELDS {' '.join(names)}\n")
    out.write(f"SIZE {' '.join(['8'] * len(names))}\nTYPE {' '.join(['F'] * len(names))}\n")
    out.write(f"COUNT {' '.join(['1'] * len(names))}\nWIDTH {n}\nHEIGHT 1\n")
    out.write(f"VIEWPOINT 0 0 0 1 0 0 0\nPOINTS {n}\nDATA ascii\n")
    for p in pc.points.tolist():
        out.write(" ".join(repr(x) for x in p) + "\n")
    return out.getvalue()


def read_pcd(path) -> PointCloud:
    with open(path, "rb") as fh:
        return parse_pcd_ascii(fh.read())


# -- CSV edge lists ----------------------------------------------------------

def _is_int(s: str) -> bool:
    try:
        int(s)
    except ValueError:
        return False
    return True


def parse_csv_edges(data, has_header: bool | None = None) -> EdgeStream:
    """Parse a two-column integer edge list into an ``AsGiven`` stream.

    With ``has_header=None`` a first row whose fields are not integers is
    taken as a header. Self-loops and repeated edges are dropped and counted.
    """
    text = _as_text(data)
    us: list[int] = []
    vs: list[int] = []
    seen: set[tuple[int, int]] = set()
    loops = dups = 0
    first = True
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        fields = [f.strip() for f in line.split(",")]
        if first:
            first = False
            if has_header or (has_header is None and not all(_is_int(f) for f in fields[:2])):
                continue
        if len(fields) < 2:
            raise MalformedInput(f"expected two fields, got {line!r}", lineno)
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise MalformedInput(f"non-integer node id in {line!r}", lineno) from None
        if a < 0 or b < 0:
            raise MalformedInput(f"negative node id in {line!r}", lineno)
        if a == b:
            loops += 1
            continue
        key = (a, b) if a < b else (b, a)
        if key in seen:
            dups += 1
            continue
        seen.add(key)
        us.append(key[0])
        vs.append(key[1])
    if loops or dups:
        log.warning("dropped %d self-loops and %d duplicate edges", loops, dups)
    return EdgeStream(us, vs, None, OrderPolicy.AS_GIVEN,
                      self_loops_dropped=loops, duplicates_dropped=dups, validate=False)


def read_csv_edges(path, has_header: bool | None = None) -> EdgeStream:
    with open(path, "rb") as fh:
        return parse_csv_edges(fh.read(), has_header)


def dump_edge_stream(stream: EdgeStream) -> str:
    """Serialise as ``u,v,weight`` CSV with 17 significant digits."""
    out = io.StringIO()
    out.write("u,v,weight\n")
    for a, b, w in zip(stream.u.tolist(), stream.v.tolist(), stream.weight.tolist()):
        out.write(f"{a},{b},{w:.17g}\n")
    return out.getvalue()


def load_edge_stream(data, order: OrderPolicy | str = OrderPolicy.AS_GIVEN) -> EdgeStream:
    text = _as_text(data)
    us, vs, ws = [], [], []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or (lineno == 1 and line.replace(" ", "") == "u,v,weight"):
            continue
        parts = line.split(",")
        if len(parts) != 3:
            raise MalformedInput(f"expected u,v,weight, got {line!r}", lineno)
        try:
            us.append(int(parts[0]))
            vs.append(int(parts[1]))
            ws.append(float(parts[2]))
        except ValueError:
            raise MalformedInput(f"bad value in {line!r}", lineno) from None
    return EdgeStream(us, vs, ws, order)


# -- generators --------------------------------------------------------------

def build_vr_edges(pc: PointCloud | Sequence[Sequence[float]], epsilon: float) -> EdgeStream:
    """Vietoris-Rips edges: pairs at Euclidean distance <= 2 * epsilon.

    Each edge is weighted by its distance; the stream is sorted by weight,
    ties broken lexicographically.
    """
    if not isinstance(pc, PointCloud):
        pc = PointCloud.from_points(pc)
    if not epsilon >= 0 or math.isinf(epsilon):
        raise ValueError(f"epsilon must be finite and >= 0, got {epsilon}")
    n = len(pc)
    if n < 2:
        return EdgeStream([], [], [], OrderPolicy.BY_WEIGHT_THEN_LEX)
    dist = pdist(pc.points)
    keep = np.flatnonzero(dist <= 2.0 * epsilon)
    iu, ju = np.triu_indices(n, k=1)
    stream = EdgeStream(iu[keep], ju[keep], dist[keep], OrderPolicy.AS_GIVEN, validate=False)
    return reorder(stream, OrderPolicy.BY_WEIGHT_THEN_LEX)


def complete_graph(n: int, seed: int = 0) -> EdgeStream:
    """All edges on nodes ``0..n-1`` with seeded uniform weights in (0, 1]."""
    if n < 1:
        raise ValueError("n must be >= 1")
    iu, ju = np.triu_indices(n, k=1)
    rng = np.random.default_rng(seed)
    weights = 1.0 - rng.random(len(iu))
    stream = EdgeStream(iu, ju, weights, OrderPolicy.AS_GIVEN, validate=False)
    return reorder(stream, OrderPolicy.BY_WEIGHT_THEN_LEX)


def reorder(stream: EdgeStream, policy: OrderPolicy | str) -> EdgeStream:
    policy = OrderPolicy.parse(policy)
    if policy is OrderPolicy.BY_WEIGHT_THEN_LEX:
        idx = np.lexsort((stream.v, stream.u, stream.weight))
    elif policy is OrderPolicy.LEXICOGRAPHIC:
        idx = np.lexsort((stream.v, stream.u))
    else:
        idx = np.arange(len(stream))
    return EdgeStream(stream.u[idx], stream.v[idx], stream.weight[idx], policy,
                      self_loops_dropped=stream.self_loops_dropped,
                      duplicates_dropped=stream.duplicates_dropped, validate=False)
