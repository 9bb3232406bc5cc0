"""Incompatibility graphs of a linear system, the graph isomorphism game,
brute-force isomorphism search, and the translation isomorphism."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_ENUM_CAP, DEFAULT_SEARCH_BUDGET
from .errors import NotASolution, SearchBudgetExceeded
from .games import SynchronousGame
from .system import LinearSystem, row_solutions, row_support
from .zp import ZpVector

EQUAL = "equal"
ADJACENT = "adjacent"
DISTINCT = "distinct-nonadjacent"


@dataclass(frozen=True, eq=False)
class GameGraph:
    """Vertices are (row, solution) pairs; edges join incompatible pairs.

    Vertices with equal solution vectors under different rows stay
    distinct.  No self-loops; adjacency is symmetric.
    """

    vertices: tuple[tuple[int, ZpVector], ...]
    adj: np.ndarray
    provenance: tuple[str, str]  # (system digest, "b" or "0")

    def __post_init__(self):
        object.__setattr__(
            self, "_index", {v: k for k, v in enumerate(self.vertices)}
        )

    def index(self, v) -> int:
        return self._index[v]

    def __contains__(self, v) -> bool:
        return v in self._index

    def order(self) -> int:
        return len(self.vertices)

    def edge_count(self) -> int:
        return int(np.count_nonzero(self.adj)) // 2

    def adjacent(self, u, v) -> bool:
        return bool(self.adj[self._index[u], self._index[v]])

    def relationship(self, u, v) -> str:
        if u == v:
            return EQUAL
        return ADJACENT if self.adjacent(u, v) else DISTINCT

    def degrees(self) -> list[int]:
        return [int(d) for d in self.adj.sum(axis=1)]


def build_game_graph(
    sys: LinearSystem, homogeneous: bool = False, cap: int = DEFAULT_ENUM_CAP
) -> GameGraph:
    """Graph on (row, solution) pairs, edges on shared-coordinate conflicts."""
    target = sys.homogeneous() if homogeneous else sys
    supports = {i: row_support(target, i) for i in range(1, target.m + 1)}
    verts: list[tuple[int, ZpVector]] = []
    for i in range(1, target.m + 1):
        for x in row_solutions(target, i, cap):
            verts.append((i, x))
    d = len(verts)
    adj = np.zeros((d, d), dtype=bool)
    shared = {
        (i, j): sorted(supports[i] & supports[j])
        for i in supports
        for j in supports
        if i <= j
    }
    for a in range(d):
        i, x = verts[a]
        for bq in range(a + 1, d):
            j, y = verts[bq]
            key = (i, j) if i <= j else (j, i)
            if any(x.entry(k) != y.entry(k) for k in shared[key]):
                adj[a, bq] = adj[bq, a] = True
    return GameGraph(tuple(verts), adj, (sys.digest(), "0" if homogeneous else "b"))


def build_iso_game(G: GameGraph, H: GameGraph) -> SynchronousGame:
    """The synchronous graph isomorphism game on V(G) disjoint-union V(H).

    Inputs and outputs are graph-tagged vertices.  A pair of answers wins
    when each answer lies in the opposite graph from its question and the
    relationship (equal / adjacent / distinct non-adjacent) of the two
    G-side vertices matches that of the two H-side vertices.  The pairing
    into sides covers both the "questions share a graph" and "answers
    share a graph" orientations symmetrically.
    """
    tagged = tuple(("G", v) for v in G.vertices) + tuple(("H", v) for v in H.vertices)

    def rule(x, y, v, w) -> bool:
        if x[0] == v[0] or y[0] == w[0]:
            return False
        alice_g, alice_h = (v[1], x[1]) if v[0] == "G" else (x[1], v[1])
        bob_g, bob_h = (w[1], y[1]) if w[0] == "G" else (y[1], w[1])
        if alice_g not in G or bob_g not in G or alice_h not in H or bob_h not in H:
            return False
        return G.relationship(alice_g, bob_g) == H.relationship(alice_h, bob_h)

    return SynchronousGame(inputs=tagged, outputs=tagged, rule=rule, name="iso")


@dataclass
class VertexBijection:
    forward: dict
    inverse: dict

    def __post_init__(self):
        if len(self.forward) != len(self.inverse):
            raise ValueError("forward and inverse sizes differ")
        for v, w in self.forward.items():
            if self.inverse.get(w) != v:
                raise ValueError("maps are not mutually inverse")

    @staticmethod
    def from_forward(forward: dict) -> "VertexBijection":
        inverse = {w: v for v, w in forward.items()}
        if len(inverse) != len(forward):
            raise ValueError("forward map is not injective")
        return VertexBijection(forward, inverse)


def is_isomorphism(G: GameGraph, H: GameGraph, bij: VertexBijection) -> bool:
    """Full edge-preservation verification over all vertex pairs."""
    if G.order() != H.order() or set(bij.forward) != set(G.vertices):
        return False
    if set(bij.inverse) != set(H.vertices):
        return False
    perm = np.array([H.index(bij.forward[v]) for v in G.vertices])
    return bool(np.array_equal(G.adj, H.adj[np.ix_(perm, perm)]))


def _wl_refine(G: GameGraph, H: GameGraph):
    """Joint 1-dimensional Weisfeiler-Leman color refinement, with edge
    signatures enriched by common-neighbor counts.

    Common-neighbor counts are preserved by any isomorphism, so the
    enriched refinement is still sound; it splits the row-clique graphs
    built here far more finely than plain neighbor-color multisets.
    Returns (colors_G, colors_H, rounds) with comparable color ids, or
    None as soon as the color multisets diverge (a sound non-isomorphism
    certificate).
    """
    ng, nh = G.order(), H.order()
    cg = [0] * ng
    ch = [0] * nh
    neigh_g = [np.nonzero(G.adj[a])[0] for a in range(ng)]
    neigh_h = [np.nonzero(H.adj[a])[0] for a in range(nh)]
    common_g = G.adj.astype(np.int32) @ G.adj.astype(np.int32)
    common_h = H.adj.astype(np.int32) @ H.adj.astype(np.int32)
    rounds = 0
    while True:
        sig_g = [
            (cg[a], tuple(sorted(Counter(
                (cg[b], int(common_g[a, b])) for b in neigh_g[a]).items())))
            for a in range(ng)
        ]
        sig_h = [
            (ch[a], tuple(sorted(Counter(
                (ch[b], int(common_h[a, b])) for b in neigh_h[a]).items())))
            for a in range(nh)
        ]
        palette = {sig: k for k, sig in enumerate(sorted(set(sig_g) | set(sig_h)))}
        new_g = [palette[s] for s in sig_g]
        new_h = [palette[s] for s in sig_h]
        rounds += 1
        if Counter(new_g) != Counter(new_h):
            return None
        stable = len(set(new_g)) == len(set(cg)) and len(set(new_h)) == len(set(ch))
        cg, ch = new_g, new_h
        if stable and rounds > 1:
            return cg, ch, rounds


@dataclass
class IsoSearchResult:
    bijection: VertexBijection | None
    outcome: str  # "found" | "exhausted" | "order-mismatch" | "wl-distinguished"
    nodes: int
    wl_rounds: int


def isomorphism_search(
    G: GameGraph, H: GameGraph, budget: int = DEFAULT_SEARCH_BUDGET
) -> IsoSearchResult:
    """Backtracking isomorphism search with refinement and forward checking.

    Every unmapped vertex keeps a candidate mask (same refinement color,
    adjacency pattern consistent with everything mapped so far); each step
    assigns the vertex with the fewest candidates and narrows the other
    masks, backtracking as soon as any of them empties.  None is returned
    only with the tree exhausted; budget exhaustion raises instead.
    """
    if G.order() != H.order():
        return IsoSearchResult(None, "order-mismatch", 0, 0)
    if sorted(G.degrees()) != sorted(H.degrees()):
        return IsoSearchResult(None, "wl-distinguished", 0, 1)
    n = G.order()
    if n == 0:
        return IsoSearchResult(VertexBijection({}, {}), "found", 0, 0)
    refined = _wl_refine(G, H)
    if refined is None:
        return IsoSearchResult(None, "wl-distinguished", 0, 0)
    colors_g, colors_h, rounds = refined
    colors_h_arr = np.array(colors_h)
    gadj = G.adj
    hadj = H.adj

    candidates = np.zeros((n, n), dtype=bool)
    for a in range(n):
        candidates[a] = colors_h_arr == colors_g[a]
    mapping = np.full(n, -1, dtype=int)  # G index -> H index
    nodes = 0

    def backtrack(cand: np.ndarray) -> bool:
        nonlocal nodes
        unmapped = np.nonzero(mapping < 0)[0]
        if unmapped.size == 0:
            return True
        counts = cand[unmapped].sum(axis=1)
        if counts.min() == 0:
            return False
        a = int(unmapped[int(np.argmin(counts))])
        for q in np.nonzero(cand[a])[0]:
            nodes += 1
            if nodes > budget:
                raise SearchBudgetExceeded(f"isomorphism search exceeded {budget} nodes")
            mapping[a] = q
            narrowed = cand.copy()
            narrowed[:, q] = False
            narrowed[a] = False
            for x in unmapped:
                if x != a:
                    narrowed[x] &= hadj[q] == gadj[x, a]
            if backtrack(narrowed):
                return True
            mapping[a] = -1
        return False

    if backtrack(candidates):
        forward = {G.vertices[a]: H.vertices[mapping[a]] for a in range(n)}
        bij = VertexBijection.from_forward(forward)
        assert is_isomorphism(G, H, bij)
        return IsoSearchResult(bij, "found", nodes, rounds)
    return IsoSearchResult(None, "exhausted", nodes, rounds)


def find_isomorphism(
    G: GameGraph, H: GameGraph, budget: int = DEFAULT_SEARCH_BUDGET
) -> VertexBijection | None:
    return isomorphism_search(G, H, budget).bijection


def translate_isomorphism(
    sys: LinearSystem, xstar: ZpVector, cap: int = DEFAULT_ENUM_CAP
) -> VertexBijection:
    """The explicit isomorphism (i, x) -> (i, (x - xstar) on the row support)
    from the inhomogeneous graph to the homogeneous one, for any global
    solution xstar.  The output is verified edge-preserving before return.
    """
    if sys.A.apply(xstar) != sys.b:
        raise NotASolution("xstar does not solve the system")
    G = build_game_graph(sys, homogeneous=False, cap=cap)
    H = build_game_graph(sys, homogeneous=True, cap=cap)
    forward = {}
    for (i, x) in G.vertices:
        shifted = (x - xstar).restrict(row_support(sys, i))
        forward[(i, x)] = (i, shifted)
    bij = VertexBijection.from_forward(forward)
    if not is_isomorphism(G, H, bij):
        raise AssertionError("translation map failed edge preservation")
    return bij


def _vertex_label(v: tuple[int, ZpVector]) -> str:
    i, x = v
    sep = "" if x.p <= 7 else ","
    return f"{i}:{sep.join(str(e) for e in x.entries)}"


def export_dot(G: GameGraph) -> str:
    """Graphviz DOT text with deterministic vertex and edge order."""
    lines = ["graph game_graph {"]
    for v in G.vertices:
        lines.append(f'  "{_vertex_label(v)}";')
    d = G.order()
    for a in range(d):
        for bq in range(a + 1, d):
            if G.adj[a, bq]:
                lines.append(
                    f'  "{_vertex_label(G.vertices[a])}" -- '
                    f'"{_vertex_label(G.vertices[bq])}";'
                )
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_json(G: GameGraph) -> dict:
    """Adjacency export: vertex labels plus an index-pair edge list."""
    d = G.order()
    edges = [[a, bq] for a in range(d) for bq in range(a + 1, d) if G.adj[a, bq]]
    return {
        "vertices": [_vertex_label(v) for v in G.vertices],
        "edges": edges,
        "provenance": {"system_digest": G.provenance[0], "rhs": G.provenance[1]},
    }
