"""Walk topologies: labeled graphs and the shift operators they induce.

A graph assigns to every (vertex, coin label) pair at most one target
vertex.  The shift operator moves each coin component along its label's
edges.  Two built-in families exist: the ring (cyclic lattice, one
displacement per coin label) and the layered graph that funnels every
step into a fresh layer of D vertices so coin interference shows up
directly in position space.

Graph files use a small line-based format, 1-based vertex labels::

    # optional comment
    D=2
    1 -1 2
    1 +1 3

Coin labels are the integer label set for D (for even D the set skips
0, for odd D it includes it).
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

import numpy as np

from .coinspace import coin_labels
from .errors import (
    DimensionMismatch,
    DuplicateEdge,
    HorizonExceeded,
    InvalidDimension,
    InvalidSize,
    LabelOutOfRange,
    NonInjectiveLabelMap,
    ParseError,
)

Edge = tuple[int, int, int]  # (source, coin index, target), 0-based


@dataclass(frozen=True)
class Graph:
    """A directed graph with coin-labeled edges.

    ``kind`` records how the graph was built ("ring", "enhanced",
    "custom") and is ignored when comparing graphs: equality is about
    structure, not provenance.
    """

    n_vertices: int
    coin_dim: int
    edges: frozenset[Edge]
    kind: str = field(default="custom", compare=False)

    def __post_init__(self):
        if self.n_vertices < 1:
            raise InvalidSize(f"need at least one vertex, got {self.n_vertices}")
        if self.coin_dim < 2:
            raise InvalidDimension(f"coin dimension must be >= 2, got {self.coin_dim}")
        seen = set()
        for src, j, tgt in self.edges:
            if not (0 <= src < self.n_vertices and 0 <= tgt < self.n_vertices):
                raise InvalidSize(f"edge ({src}, {j}, {tgt}) leaves the vertex range")
            if not 0 <= j < self.coin_dim:
                raise LabelOutOfRange(f"coin index {j} outside 0..{self.coin_dim - 1}")
            if (src, j) in seen:
                raise DuplicateEdge(f"vertex {src + 1} has two edges with the same label")
            seen.add((src, j))


def line_graph(n_vertices: int, coin_dim: int = 2) -> Graph:
    """Ring of ``n_vertices`` sites; label m displaces by m (mod N).

    For coin_dim 2 this gives the usual pair of cyclic permutations,
    one step down for label -1 and one step up for label +1.
    """
    if n_vertices < 3:
        raise InvalidSize(f"a ring needs at least 3 sites, got {n_vertices}")
    labels = coin_labels(coin_dim)
    edges = frozenset(
        (x, j, (x + m) % n_vertices)
        for x in range(n_vertices)
        for j, m in enumerate(labels)
    )
    return Graph(n_vertices, coin_dim, edges, kind="ring")


def enhanced_graph(coin_dim: int, t_max: int) -> Graph:
    """Layered graph on 1 + t_max*D vertices that amplifies phase pickup.

    Vertex 0 is the root; layer l >= 1 holds vertices 1+(l-1)*D .. l*D.
    Every vertex of layer l (and the root) sends coin index j to vertex
    1 + l*D + j, so all of a layer's label-j amplitude converges on a
    single next-layer vertex.  The final layer has no outgoing edges.
    """
    if coin_dim < 2:
        raise InvalidDimension(f"coin dimension must be >= 2, got {coin_dim}")
    if t_max < 1:
        raise InvalidSize(f"need at least one layer, got t_max={t_max}")
    edges = []
    for layer in range(t_max):
        sources = [0] if layer == 0 else range(1 + (layer - 1) * coin_dim, 1 + layer * coin_dim)
        for src in sources:
            for j in range(coin_dim):
                edges.append((src, j, 1 + layer * coin_dim + j))
    return Graph(1 + t_max * coin_dim, coin_dim, frozenset(edges), kind="enhanced")


_HEADER = re.compile(r"^D\s*=\s*([0-9]+)$")


def _tokens(line: str):
    return [(m.group(0), m.start() + 1) for m in re.finditer(r"\S+", line)]


def parse_graph(text: str) -> Graph:
    """Parse the graph file format; see the module docstring.

    Raises ParseError (with line and column), DuplicateEdge, or
    LabelOutOfRange on malformed input.
    """
    coin_dim = None
    label_to_index: dict[int, int] = {}
    edges: list[Edge] = []
    seen: dict[tuple[int, int], int] = {}
    max_vertex = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if coin_dim is None:
            m = _HEADER.match(line.strip())
            if not m:
                raise ParseError("expected 'D=<int>' header before any edge", line=lineno)
            coin_dim = int(m.group(1))
            if coin_dim < 2:
                raise ParseError(f"coin dimension must be >= 2, got {coin_dim}", line=lineno)
            label_to_index = {m_c: j for j, m_c in enumerate(coin_labels(coin_dim))}
            continue
        if _HEADER.match(line.strip()):
            raise ParseError("duplicate 'D=' header", line=lineno)
        toks = _tokens(line)
        if len(toks) != 3:
            raise ParseError(
                f"expected 'source label target', got {len(toks)} fields", line=lineno
            )
        (src_s, src_col), (lab_s, lab_col), (tgt_s, tgt_col) = toks
        try:
            src = int(src_s)
        except ValueError:
            raise ParseError(f"bad vertex {src_s!r}", line=lineno, column=src_col) from None
        try:
            tgt = int(tgt_s)
        except ValueError:
            raise ParseError(f"bad vertex {tgt_s!r}", line=lineno, column=tgt_col) from None
        if src < 1 or tgt < 1:
            raise ParseError("vertex labels are 1-based", line=lineno,
                             column=src_col if src < 1 else tgt_col)
        try:
            label = int(lab_s)
        except ValueError:
            raise ParseError(f"bad coin label {lab_s!r}", line=lineno, column=lab_col) from None
        if label not in label_to_index:
            raise LabelOutOfRange(
                f"label {label} not in {sorted(label_to_index)} for D={coin_dim}",
                line=lineno, column=lab_col,
            )
        j = label_to_index[label]
        if (src - 1, j) in seen:
            raise DuplicateEdge(
                f"vertex {src} already has a {label} edge (first on line {seen[(src - 1, j)]})",
                line=lineno,
            )
        seen[(src - 1, j)] = lineno
        edges.append((src - 1, j, tgt - 1))
        max_vertex = max(max_vertex, src, tgt)
    if coin_dim is None:
        raise ParseError("empty graph description", line=1)
    return Graph(max_vertex, coin_dim, frozenset(edges), kind="custom")


def serialize_graph(g: Graph) -> str:
    """Render a graph in the file format parse_graph reads back."""
    labels = coin_labels(g.coin_dim)
    lines = [f"D={g.coin_dim}"]
    for src, j, tgt in sorted(g.edges):
        lab = labels[j]
        lines.append(f"{src + 1} {lab:+d} {tgt + 1}" if lab else f"{src + 1} 0 {tgt + 1}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ShiftOperator:
    """Per-label target maps compiled from a graph.

    ``targets[j, x]`` is the destination of coin index j at vertex x,
    or -1 where the graph has no such edge.  Applying the shift to
    amplitude sitting on a missing edge raises HorizonExceeded; on
    layered graphs that happens exactly when stepping past the final
    layer.
    """

    n_positions: int
    coin_dim: int
    targets: np.ndarray
    kind: str = "custom"

    def apply(self, amplitudes: np.ndarray) -> np.ndarray:
        if amplitudes.shape != (self.n_positions, self.coin_dim):
            raise DimensionMismatch(
                f"amplitudes shape {amplitudes.shape} does not match "
                f"({self.n_positions}, {self.coin_dim})"
            )
        out = np.zeros_like(amplitudes)
        for j in range(self.coin_dim):
            tj = self.targets[j]
            missing = tj < 0
            if np.any(missing):
                stuck = np.abs(amplitudes[missing, j]) > 0.0
                if np.any(stuck):
                    x = int(np.flatnonzero(missing)[np.argmax(stuck)])
                    raise HorizonExceeded(
                        f"vertex {x + 1} has no outgoing edge for coin index {j}"
                    )
            ok = ~missing
            np.add.at(out[:, j], tj[ok], amplitudes[ok, j])
        return out


def shift_from_graph(g: Graph) -> ShiftOperator:
    """Compile a graph into per-label target maps.

    Ring and custom graphs must have injective label maps, otherwise
    the induced step could not be unitary and NonInjectiveLabelMap is
    raised.  Layered graphs are exempt: their label maps converge by
    design, and norm is conserved on every state the walk can actually
    reach (coin component j only ever occupies one vertex per layer).
    """
    targets = np.full((g.coin_dim, g.n_vertices), -1, dtype=np.int64)
    for src, j, tgt in g.edges:
        targets[j, src] = tgt
    if g.kind != "enhanced":
        labels = coin_labels(g.coin_dim)
        for j in range(g.coin_dim):
            defined = np.flatnonzero(targets[j] >= 0)
            tgt = targets[j, defined]
            uniq, counts = np.unique(tgt, return_counts=True)
            if np.any(counts > 1):
                bad = uniq[np.argmax(counts > 1)]
                sources = [int(x) + 1 for x in defined[tgt == bad]]
                raise NonInjectiveLabelMap(
                    f"label {labels[j]} sends vertices {sources} to the same "
                    f"target {int(bad) + 1}"
                )
    return ShiftOperator(g.n_vertices, g.coin_dim, targets, kind=g.kind)
