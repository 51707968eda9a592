"""Simple graphs on vertex set 1..n, their edge ideals, and the combinatorial
closure conditions that characterize vanishing of the Valabrega-Valla module
for a pair of edge ideals.

The two predicates below mirror the algebraic witnesses exactly: a violating
3-cycle (i, j, k) corresponds to the monomial x_i x_j x_k^2 and a violating
3-path (i', i, j, j') to x_i x_j x_i' x_j', each lying in the degree-2
component.  Tests cross-check every reported counterexample by membership.
"""

from __future__ import annotations

from itertools import combinations

from .errors import NotContained
from .ideals import MonomialIdeal, RingContext
from .vvmod import vv_vanishes


class Graph:
    """Undirected simple graph: no loops, no duplicate edges, vertices 1..n."""

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges=()):
        if n < 1:
            raise ValueError("need at least one vertex")
        norm = set()
        adj = {v: set() for v in range(1, n + 1)}
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError("loop at vertex %d" % u)
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError("vertex out of range 1..%d" % n)
            norm.add((min(u, v), max(u, v)))
        for u, v in norm:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "_adj", adj)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, combinations(range(1, n + 1), 2))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ValueError("cycle needs at least 3 vertices")
        return cls(n, [(i, i % n + 1) for i in range(1, n + 1)])

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> "Graph":
        left = range(1, a + 1)
        right = range(a + 1, a + b + 1)
        return cls(a + b, [(u, v) for u in left for v in right])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(self._adj[v])

    def num_edges(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def is_subgraph_of(self, other: "Graph") -> bool:
        return self.n == other.n and self.edges <= other.edges

    def __eq__(self, other):
        return (
            isinstance(other, Graph) and self.n == other.n and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return "Graph(n=%d, edges=%s)" % (self.n, self.sorted_edges())


def edge_ideal(G: Graph, ctx: RingContext | None = None) -> MonomialIdeal:
    """The squarefree quadratic ideal (x_i x_j : {i,j} an edge)."""
    if ctx is None:
        ctx = RingContext(G.n)
    elif ctx.n != G.n:
        raise ValueError("context size differs from vertex count")
    rows = []
    for u, v in G.sorted_edges():
        e = [0] * G.n
        e[u - 1] = 1
        e[v - 1] = 1
        rows.append(e)
    return MonomialIdeal(ctx, rows)


def _check_subgraph(Gp: Graph, G: Graph) -> None:
    if not Gp.is_subgraph_of(G):
        raise NotContained("first graph is not a subgraph of the second")


def is_almost_c3_embedded(Gp: Graph, G: Graph):
    """Triangle closure: for every 3-cycle i-j-k-i of G with {i,j} in the
    subgraph, the subgraph must also contain {i,k} or {j,k}.

    Returns (True, None) or (False, (i, j, k)) with a violating triangle.
    """
    _check_subgraph(Gp, G)
    for i, j in Gp.sorted_edges():
        for k in sorted(G.neighbors(i) & G.neighbors(j)):
            if not (Gp.has_edge(i, k) or Gp.has_edge(j, k)):
                return False, (i, j, k)
    return True, None


def is_almost_p3_embedded(Gp: Graph, G: Graph):
    """Path closure: for every 3-path i'-i-j-j' of G with {i,j} in the
    subgraph and {i',j'} not an edge of G, one of four patch conditions must
    hold:

        (a) {i',i} in E(Gp), or
        (b) {j',j} in E(Gp), or
        (c) {i',j} in E(Gp) and {i,j'} in E(G), or
        (d) {i,j'} in E(Gp) and {i',j} in E(G).

    Returns (True, None) or (False, (i', i, j, j')) for a violating path.
    """
    _check_subgraph(Gp, G)
    for a, b in Gp.sorted_edges():
        for i, j in ((a, b), (b, a)):
            for ip in sorted(G.neighbors(i) - {j}):
                for jp in sorted(G.neighbors(j) - {i}):
                    if ip == jp or G.has_edge(ip, jp):
                        continue
                    if Gp.has_edge(ip, i) or Gp.has_edge(jp, j):
                        continue
                    if Gp.has_edge(ip, j) and G.has_edge(i, jp):
                        continue
                    if Gp.has_edge(i, jp) and G.has_edge(ip, j):
                        continue
                    return False, (ip, i, j, jp)
    return True, None


def vv_vanishes_graph(Gp: Graph, G: Graph) -> bool:
    """Combinatorial vanishing test for the pair of edge ideals.

    Equals vv_vanishes(edge_ideal(Gp), edge_ideal(G)).vanishes whenever the
    subgraph has at least one edge; with no edges the conditions hold
    vacuously (the pair then has zero J and the algebraic module is trivial).
    """
    c3, _ = is_almost_c3_embedded(Gp, G)
    if not c3:
        return False
    p3, _ = is_almost_p3_embedded(Gp, G)
    return p3


def complete_graph_criterion(Gp: Graph, n: int) -> bool:
    """Inside the complete graph K_n, vanishing reduces to a covering test:
    every edge {i,j} of the subgraph must see all of [n] through the union of
    the two subgraph neighborhoods."""
    if Gp.n != n:
        raise ValueError("subgraph must live on the vertex set 1..%d" % n)
    full = frozenset(range(1, n + 1))
    for i, j in Gp.sorted_edges():
        if Gp.neighbors(i) | Gp.neighbors(j) != full:
            return False
    return True


def is_complete_multipartite_spanning(Gp: Graph, n: int) -> bool:
    """True iff non-adjacency is an equivalence relation partitioning 1..n.

    The classes are the components of the complement graph; the relation is
    transitive exactly when every component is internally edge-free in Gp,
    and cross-class pairs are then adjacent automatically.
    """
    if Gp.n != n:
        raise ValueError("graph must live on the vertex set 1..%d" % n)
    seen = set()
    for root in range(1, n + 1):
        if root in seen:
            continue
        comp = {root}
        stack = [root]
        while stack:
            v = stack.pop()
            for u in range(1, n + 1):
                if u not in comp and u != v and not Gp.has_edge(u, v):
                    comp.add(u)
                    stack.append(u)
        seen |= comp
        for u, v in combinations(sorted(comp), 2):
            if Gp.has_edge(u, v):
                return False
    return True


def is_bipartite(G: Graph):
    """Two-coloring by traversal.

    Returns a pair of frozensets covering 1..n, or None when an odd cycle
    exists.  The edgeless graph returns ({1..n}, {}) by convention; isolated
    vertices always land in the first class.
    """
    color = {}
    for root in range(1, G.n + 1):
        if root in color:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            v = queue.pop()
            for u in G.neighbors(v):
                if u not in color:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    part0 = frozenset(v for v, c in color.items() if c == 0)
    part1 = frozenset(v for v, c in color.items() if c == 1)
    return part0, part1


def vv_vanishes_graph_algebraic(Gp: Graph, G: Graph):
    """Algebraic side of the equivalence, for cross-checks and the CLI.

    Returns the VVReport of the edge-ideal pair, or None when the subgraph is
    edgeless (zero J: the statement is vacuous).
    """
    _check_subgraph(Gp, G)
    if not Gp.edges:
        return None
    ctx = RingContext(G.n)
    return vv_vanishes(edge_ideal(Gp, ctx), edge_ideal(G, ctx))
