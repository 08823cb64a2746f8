"""Element/set incidence graphs with vertex colors.

Ground elements get color 0, one vertex of color 1 is added per member
set, and edges encode membership.  Color-preserving automorphisms of this
graph restrict to exactly the ground permutations preserving the set
family, because distinct sets have distinct neighborhoods.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ColoredGraph:
    num_vertices: int
    colors: tuple
    adjacency: tuple  # tuple of frozensets, one per vertex

    def has_edge(self, u, v):
        return v in self.adjacency[u]

    @property
    def num_edges(self):
        return sum(len(a) for a in self.adjacency) // 2


def graph_from_edges(num_vertices, colors, edges) -> ColoredGraph:
    adj = [set() for _ in range(num_vertices)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return ColoredGraph(num_vertices, tuple(colors), tuple(frozenset(a) for a in adj))


def build_incidence(ground_size, sets) -> ColoredGraph:
    """The bipartite incidence graph G(X, F) with element/set colors."""
    normalized = []
    seen = set()
    for s in sets:
        fs = frozenset(s)
        for i in fs:
            if not 0 <= i < ground_size:
                raise IndexError(f"set member {i} out of range")
        if fs in seen:
            raise ValueError(f"duplicate set {sorted(fs)} in family")
        seen.add(fs)
        normalized.append(fs)
    n = ground_size + len(normalized)
    colors = [0] * ground_size + [1] * len(normalized)
    edges = [
        (x, ground_size + k) for k, s in enumerate(normalized) for x in sorted(s)
    ]
    return graph_from_edges(n, colors, edges)


def restrict_to_ground(graph_perm, ground_size):
    """Restrict a color-preserving incidence-graph automorphism to X."""
    restricted = tuple(graph_perm[:ground_size])
    if any(x >= ground_size for x in restricted):
        raise ValueError("permutation does not preserve the element color class")
    return restricted


def to_dimacs(g: ColoredGraph) -> str:
    """DIMACS-like text export (1-indexed) for differential testing."""
    lines = [f"p edge {g.num_vertices} {g.num_edges}"]
    for u in range(g.num_vertices):
        for v in sorted(g.adjacency[u]):
            if u < v:
                lines.append(f"e {u + 1} {v + 1}")
    for v, c in enumerate(g.colors):
        lines.append(f"n {v + 1} {c}")
    return "\n".join(lines) + "\n"
