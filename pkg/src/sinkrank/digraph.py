"""Finite digraphs with SCC decomposition, sink extraction, and DOT export."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import IndexOutOfRangeError, NonBinaryEntryError, NonSquareError


@dataclass(frozen=True)
class Digraph:
    """Immutable digraph over nodes ``0 .. node_count-1``.

    Edges are an unordered set of ordered pairs; self-loops are allowed,
    parallel edges are not.
    """

    node_count: int
    edges: frozenset[tuple[int, int]]
    node_names: tuple[str, ...]


@dataclass(frozen=True)
class SinkEquilibriumSet:
    """The sink SCCs of a digraph, each given as a set of node indices."""

    components: tuple[frozenset[int], ...]

    def nodes(self) -> frozenset[int]:
        """Union of all member nodes."""
        return frozenset().union(*self.components) if self.components else frozenset()


def new_digraph(
    node_count: int,
    edges: Iterable[tuple[int, int]],
    node_names: Sequence[str] | None = None,
) -> Digraph:
    """Builds a digraph, checking that every edge endpoint is a valid node."""
    if node_count < 1:
        raise IndexOutOfRangeError(f"node_count must be positive, got {node_count}")
    edge_set = frozenset((int(u), int(v)) for u, v in edges)
    for u, v in edge_set:
        if not (0 <= u < node_count and 0 <= v < node_count):
            raise IndexOutOfRangeError(f"edge ({u}, {v}) outside [0, {node_count})")
    if node_names is None:
        names = tuple(f"s{i + 1}" for i in range(node_count))
    else:
        names = tuple(node_names)
        if len(names) != node_count:
            raise IndexOutOfRangeError(
                f"expected {node_count} node names, got {len(names)}"
            )
    return Digraph(node_count=node_count, edges=edge_set, node_names=names)


def _adjacency_lists(g: Digraph) -> list[list[int]]:
    succ: list[list[int]] = [[] for _ in range(g.node_count)]
    for u, v in sorted(g.edges):
        succ[u].append(v)
    return succ


def scc_decompose(g: Digraph) -> list[frozenset[int]]:
    """Partitions the nodes into strongly connected components.

    The returned order is a topological order of the condensation: no edge
    runs from a later block to an earlier one, so sink components cluster
    at the end. Uses an iterative Tarjan pass (joint-strategy graphs can
    have tens of thousands of nodes, which would overflow recursion).
    """
    n = g.node_count
    succ = _adjacency_lists(g)
    index = [-1] * n
    lowlink = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    components: list[frozenset[int]] = []
    counter = 0

    for root in range(n):
        if index[root] != -1:
            continue
        # Each work item is (node, iterator position into its successors).
        work = [(root, 0)]
        while work:
            node, pos = work[-1]
            if pos == 0:
                index[node] = lowlink[node] = counter
                counter += 1
                stack.append(node)
                on_stack[node] = True
            advanced = False
            for i in range(pos, len(succ[node])):
                child = succ[node][i]
                if index[child] == -1:
                    work[-1] = (node, i + 1)
                    work.append((child, 0))
                    advanced = True
                    break
                if on_stack[child]:
                    lowlink[node] = min(lowlink[node], index[child])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[node])
            if lowlink[node] == index[node]:
                block = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    block.append(w)
                    if w == node:
                        break
                components.append(frozenset(block))

    # Tarjan emits sinks first; reverse so no edge points backwards.
    components.reverse()
    return components


def sink_equilibria(g: Digraph) -> SinkEquilibriumSet:
    """The SCCs with no outgoing edge in the condensation.

    Every finite digraph has at least one, so the result is never empty.
    """
    blocks = scc_decompose(g)
    block_of = {}
    for i, block in enumerate(blocks):
        for node in block:
            block_of[node] = i
    has_out = [False] * len(blocks)
    for u, v in g.edges:
        if block_of[u] != block_of[v]:
            has_out[block_of[u]] = True
    sinks = tuple(block for i, block in enumerate(blocks) if not has_out[i])
    return SinkEquilibriumSet(components=sinks)


def adjacency_matrix(g: Digraph) -> np.ndarray:
    """0/1 integer matrix with entry (i, j) = 1 iff edge (i, j) exists."""
    matrix = np.zeros((g.node_count, g.node_count), dtype=int)
    for u, v in g.edges:
        matrix[u, v] = 1
    return matrix


def digraph_from_adjacency(
    matrix: Sequence[Sequence[int]] | np.ndarray,
    node_names: Sequence[str] | None = None,
) -> Digraph:
    """Inverse of :func:`adjacency_matrix`."""
    arr = np.asarray(matrix)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise NonSquareError(f"adjacency matrix has shape {arr.shape}, expected square")
    if not np.isin(arr, (0, 1)).all():
        raise NonBinaryEntryError("adjacency matrix entries must be 0 or 1")
    edges = ((int(u), int(v)) for u, v in np.argwhere(arr == 1))
    return new_digraph(arr.shape[0], edges, node_names)


def to_dot(
    g: Digraph,
    highlight: SinkEquilibriumSet | None = None,
    omit_self_loops: bool = False,
) -> str:
    """Renders the digraph as deterministic Graphviz DOT text.

    Nodes belonging to a highlighted sink-equilibrium set are filled.
    ``omit_self_loops`` drops self-loop edges from the rendering only;
    the digraph itself is unchanged.
    """
    marked = highlight.nodes() if highlight is not None else frozenset()
    lines = ["digraph G {"]
    for i in range(g.node_count):
        name = g.node_names[i]
        if i in marked:
            lines.append(f'  "{name}" [style=filled, fillcolor=palegreen];')
        else:
            lines.append(f'  "{name}";')
    for u, v in sorted(g.edges):
        if omit_self_loops and u == v:
            continue
        lines.append(f'  "{g.node_names[u]}" -> "{g.node_names[v]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
