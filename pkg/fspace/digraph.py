"""
The loop-free digraph whose adjacency matrix is a poset's 0/1 matrix.

An edge (i, j) means x_i is not below or equal to x_j, so incomparable pairs
give edges both ways and comparable pairs a single edge from the larger point.
"""

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

import networkx as nx

from fspace.errors import FspaceError, InvalidPoint
from fspace.models.poset import Poset, ZeroOneMatrix
from fspace.order import MatrixInput, covers, matrix_from_poset, point_heights

Edge = tuple[int, int]


@dataclass(frozen=True)
class Digraph:
    n: int
    edges: frozenset[Edge]
    labels: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        for u, v in self.edges:
            if u == v:
                raise FspaceError(f"loop at vertex {u + 1}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidPoint(f"edge ({u + 1}, {v + 1}) is out of range 1..{self.n}")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"x{i + 1}" for i in range(self.n)))

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges

    def satisfies_poset_conditions(self) -> bool:
        """No loops, a missing edge forces the reverse one, missing edges compose."""
        for u in range(self.n):
            for v in range(self.n):
                if u == v:
                    continue
                if not self.has_edge(u, v) and not self.has_edge(v, u):
                    return False
                if self.has_edge(u, v):
                    continue
                for w in range(self.n):
                    if w in (u, v) or self.has_edge(v, w):
                        continue
                    if self.has_edge(u, w):
                        return False
        return True

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.sorted_edges())
        return graph

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "edges": [[u + 1, v + 1] for u, v in self.sorted_edges()],
        }


def to_digraph(m: MatrixInput | Poset) -> Digraph:
    """Edge (i, j) iff entry (i, j) is 1."""
    labels: tuple[str, ...] = ()
    if isinstance(m, Poset):
        labels = m.labels
        m = matrix_from_poset(m)
    matrix = m if isinstance(m, ZeroOneMatrix) else ZeroOneMatrix(m)
    edges = frozenset(
        (i, j)
        for i in range(matrix.n)
        for j in range(matrix.n)
        if i != j and matrix.entries[i, j] == 1
    )
    return Digraph(matrix.n, edges, labels)


@dataclass(frozen=True)
class StronglyConnectedComponents:
    components: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.components)

    def to_dict(self) -> dict[str, Any]:
        return {
            "count": self.count,
            "components": [[v + 1 for v in c] for c in self.components],
        }


def strongly_connected_components(g: Digraph) -> StronglyConnectedComponents:
    """Components ordered by their least vertex, each sorted."""
    parts = [tuple(sorted(c)) for c in nx.strongly_connected_components(g.to_networkx())]
    return StronglyConnectedComponents(tuple(sorted(parts)))


def scc_count(g: Digraph) -> int:
    return strongly_connected_components(g).count


def bidirectional_graph(g: Digraph) -> nx.Graph:
    """Undirected graph on the pairs joined by edges in both directions."""
    graph = nx.Graph()
    graph.add_nodes_from(range(g.n))
    graph.add_edges_from((u, v) for u, v in g.edges if u < v and g.has_edge(v, u))
    return graph


def antichain_cliques(g: Digraph, k: int) -> list[tuple[int, ...]]:
    """Every k-set of vertices joined pairwise in both directions, sorted.

    In the digraph of a poset these are exactly the k-point antichains.
    """
    if k < 1:
        raise FspaceError(f"clique size must be positive, got {k}")
    found = []
    for clique in nx.enumerate_all_cliques(bidirectional_graph(g)):
        if len(clique) > k:
            break
        if len(clique) == k:
            found.append(tuple(sorted(clique)))
    return sorted(found)


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _node_lines(labels: Sequence[str]) -> list[str]:
    return [f"  n{i + 1} [label={_quote(label)}];" for i, label in enumerate(labels)]


def export_dot(g: Digraph, name: str = "GX") -> str:
    """GraphViz text for the digraph: nodes in index order, edges sorted."""
    lines = [f"digraph {name} {{"]
    lines.extend(_node_lines(g.labels))
    lines.extend(f"  n{u + 1} -> n{v + 1};" for u, v in g.sorted_edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_hasse_dot(p: Poset, name: str = "Hasse") -> str:
    """GraphViz text for the Hasse diagram, drawn bottom-up with one rank per height."""
    heights = point_heights(p)
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    lines.extend(_node_lines(p.labels))
    for h in range(max(heights) + 1):
        members = "; ".join(f"n{i + 1}" for i in range(p.n) if heights[i] == h)
        lines.append(f"  {{ rank=same; {members}; }}")
    lines.extend(f"  n{i + 1} -> n{j + 1};" for i, j in covers(p))
    lines.append("}")
    return "\n".join(lines) + "\n"
