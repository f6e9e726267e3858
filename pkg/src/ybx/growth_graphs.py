"""Graphs of normal words and of obstructions; growth and global dimension."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

import networkx as nx

from .ncpoly import GroebnerBasis, hilbert_function, normal_words
from .quadratic_set import SolutionTable, check_braid, check_idempotent, check_nondegenerate


class GraphError(ValueError):
    pass


class DirectedGraph:
    """Vertices in a fixed order; edges are ordered pairs of vertex labels, loops allowed."""

    __slots__ = ("vertices", "edges", "_pos")

    def __init__(self, vertices: Sequence, edges: Iterable[tuple]):
        self.vertices = tuple(vertices)
        self._pos = {v: i for i, v in enumerate(self.vertices)}
        es = set()
        for a, b in edges:
            if a not in self._pos or b not in self._pos:
                raise GraphError(f"edge {(a, b)} has an endpoint outside the vertex set")
            es.add((a, b))
        self.edges = frozenset(es)

    def sorted_edges(self) -> list:
        return sorted(self.edges, key=lambda e: (self._pos[e[0]], self._pos[e[1]]))

    def __eq__(self, other) -> bool:
        return isinstance(other, DirectedGraph) and self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    def __repr__(self) -> str:
        return f"DirectedGraph({list(self.vertices)}, {self.sorted_edges()})"

    def complement(self) -> "DirectedGraph":
        full = itertools.product(self.vertices, repeat=2)
        return DirectedGraph(self.vertices, [e for e in full if e not in self.edges])

    def without_loops(self) -> "DirectedGraph":
        return DirectedGraph(self.vertices, [(a, b) for a, b in self.edges if a != b])

    def loops(self) -> list:
        return [a for a in self.vertices if (a, a) in self.edges]

    def to_networkx(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g

    def is_acyclic(self) -> bool:
        return not self.loops() and nx.is_directed_acyclic_graph(self.to_networkx())

    def is_tournament(self) -> bool:
        """Exactly one directed edge between each pair of distinct vertices, no loops."""
        if self.loops():
            return False
        for a, b in itertools.combinations(self.vertices, 2):
            if ((a, b) in self.edges) == ((b, a) in self.edges):
                return False
        return True

    def count_paths(self, length: int) -> int:
        """Number of directed paths (walks) with ``length`` edges."""
        counts = {v: 1 for v in self.vertices}
        for _ in range(length):
            nxt = {v: 0 for v in self.vertices}
            for a, b in self.edges:
                nxt[a] += counts[b]
            counts = nxt
        return sum(counts.values())

    def to_dot(self, name: str = "G") -> str:
        lines = [f"digraph {name} {{"]
        for v in self.vertices:
            lines.append(f'  "{v}";')
        for a, b in self.sorted_edges():
            lines.append(f'  "{a}" -> "{b}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def is_cycle(g: DirectedGraph, cycle: Sequence) -> bool:
    if not cycle:
        return False
    return all((cycle[i], cycle[(i + 1) % len(cycle)]) in g.edges for i in range(len(cycle)))


@dataclass(frozen=True)
class GrowthResult:
    kind: str  # "polynomial" or "exponential"
    degree: int | None = None
    witness: tuple = field(default=())

    def validates(self, g: DirectedGraph) -> bool:
        if self.kind == "exponential":
            c1, c2 = self.witness
            return is_cycle(g, c1) and is_cycle(g, c2) and _rotation_key(c1) != _rotation_key(c2) \
                and bool(set(c1) & set(c2))
        path, cycles = self.witness
        if any((path[i], path[i + 1]) not in g.edges for i in range(len(path) - 1)):
            return False
        return len(cycles) == self.degree and all(is_cycle(g, c) and set(c) & set(path) for c in cycles)

    def __str__(self) -> str:
        return "Exponential" if self.kind == "exponential" else f"Polynomial({self.degree})"


@dataclass(frozen=True)
class GlDimResult:
    kind: str  # "finite" or "infinite"
    value: int | None = None
    witness: tuple = field(default=())

    def validates(self, g: DirectedGraph) -> bool:
        if self.kind == "infinite":
            return is_cycle(g, self.witness)
        path = self.witness
        ok = all((path[i], path[i + 1]) in g.edges for i in range(len(path) - 1))
        return ok and self.value == len(path) and g.is_acyclic()

    def __str__(self) -> str:
        return "Infinite" if self.kind == "infinite" else f"Finite({self.value})"


def _rotation_key(cycle: Sequence) -> tuple:
    c = tuple(cycle)
    return min(c[i:] + c[:i] for i in range(len(c)))


def graph_of_normal_words(G: GroebnerBasis) -> DirectedGraph:
    names = G.alphabet.names
    edges = [(names[a], names[b]) for a, b in itertools.product(range(len(names)), repeat=2)
             if (a, b) not in G.obstructions]
    return DirectedGraph(names, edges)


def graph_of_obstructions(G: GroebnerBasis) -> DirectedGraph:
    names = G.alphabet.names
    return DirectedGraph(names, [(names[w[0]], names[w[1]]) for w in G.obstructions if len(w) == 2])


def _scc_cycle(g: nx.DiGraph, comp: set):
    """A cycle inside the strongly connected component, or None if it has none."""
    if len(comp) == 1:
        v = next(iter(comp))
        return [v] if g.has_edge(v, v) else None
    sub = g.subgraph(comp)
    return [a for a, _ in nx.find_cycle(sub)]


def gk_dimension(g: DirectedGraph) -> GrowthResult:
    ng = g.to_networkx()
    comps = [set(c) for c in nx.strongly_connected_components(ng)]
    for comp in sorted(comps, key=lambda c: min(g._pos[v] for v in c)):
        sub = ng.subgraph(comp)
        if sub.number_of_edges() > len(comp) or (len(comp) == 1 and sub.number_of_edges() > 1):
            # some vertex has two out-edges inside the component
            for v in sorted(comp, key=g._pos.get):
                outs = sorted(sub.successors(v), key=g._pos.get)
                if len(outs) >= 2:
                    cycles = []
                    for w in outs[:2]:
                        back = nx.shortest_path(sub, w, v)
                        cycles.append(tuple([v] + back[:-1]) if w != v else (v,))
                    return GrowthResult("exponential", None, tuple(cycles))
    cond = nx.condensation(ng, comps)
    weight = {}
    cyc = {}
    for node, data in cond.nodes(data=True):
        c = _scc_cycle(ng, set(data["members"]))
        weight[node] = 1 if c else 0
        cyc[node] = c
    best = {}
    prev = {}
    for node in nx.topological_sort(cond):
        preds = list(cond.predecessors(node))
        top = max(preds, key=lambda p: best[p], default=None)
        best[node] = weight[node] + (best[top] if top is not None else 0)
        prev[node] = top
    end = max(best, key=best.get)
    m = best[end]
    chain = []
    node = end
    while node is not None:
        chain.append(node)
        node = prev[node]
    chain.reverse()
    # realise the chain of components as a vertex path through each cycle
    path: list = []
    cycles = []
    for node in chain:
        members = set(cond.nodes[node]["members"])
        entry = next(iter(sorted(members, key=g._pos.get)))
        if path:
            hop = nx.shortest_path(ng, path[-1], entry)
            path.extend(hop[1:])
        else:
            path.append(entry)
        if cyc[node]:
            c = cyc[node]
            cycles.append(tuple(c))
            # walk once round the cycle from the current vertex
            start = path[-1]
            if start not in c:
                hop = nx.shortest_path(ng.subgraph(members), start, c[0])
                path.extend(hop[1:])
                start = c[0]
            i = c.index(start)
            loop = c[i:] + c[:i] + [start]
            path.extend(loop[1:])
    return GrowthResult("polynomial", m, (tuple(path), tuple(cycles)))


def global_dimension(gW: DirectedGraph) -> GlDimResult:
    ng = gW.to_networkx()
    loops = gW.loops()
    if loops:
        return GlDimResult("infinite", None, (loops[0],))
    try:
        cycle = nx.find_cycle(ng)
        return GlDimResult("infinite", None, tuple(a for a, _ in cycle))
    except nx.NetworkXNoCycle:
        pass
    path = nx.dag_longest_path(ng, topo_order=list(nx.lexicographical_topological_sort(ng, key=gW._pos.get)))
    if not path:
        path = [gW.vertices[0]] if gW.vertices else []
    return GlDimResult("finite", len(path), tuple(path))


def complete_to_acyclic_tournament(g: DirectedGraph) -> DirectedGraph:
    """Add one edge per non-adjacent pair, never closing a cycle."""
    if not g.is_acyclic():
        raise GraphError("input graph has a cycle or a loop")
    ng = g.to_networkx()
    for a, b in itertools.combinations(g.vertices, 2):
        if ng.has_edge(a, b) or ng.has_edge(b, a):
            continue
        if nx.has_path(ng, b, a):
            ng.add_edge(b, a)
        else:
            ng.add_edge(a, b)
    out = DirectedGraph(g.vertices, ng.edges())
    assert out.is_tournament() and out.is_acyclic()
    return out


def classify_max_monomial(g: DirectedGraph, loop_vertex) -> bool:
    """Loop at ``loop_vertex`` plus an acyclic tournament on the remaining edges."""
    structural = ((loop_vertex, loop_vertex) in g.edges
                  and g.loops() == [loop_vertex]
                  and g.without_loops().is_tournament()
                  and g.without_loops().is_acyclic())
    n = len(g.vertices)
    reach = nx.descendants(g.to_networkx(), loop_vertex) | {loop_vertex} if loop_vertex in g._pos else set()
    if (loop_vertex, loop_vertex) in g.edges and len(reach) == n:
        gk = gk_dimension(g)
        counting = len(g.edges) == comb(n, 2) + 1 and gk.kind == "polynomial" and gk.degree == 1
        if counting != structural:
            raise AssertionError(f"tournament classification disagrees with edge count on {g!r}")
    return structural


@dataclass(frozen=True)
class DimA2Report:
    dim_a2: int
    lower: int
    upper: int
    within: bool
    pbw_enumeration: tuple | None  # relabelling of generators giving a quadratic GB


def pbw_relabelling(s: SolutionTable, bound: int = 3):
    """First generator order (as a permutation) under which the orbit relations
    form a quadratic Groebner basis; returns (order, basis) or None."""
    from .yb_algebra import orbit_relations

    for order in itertools.permutations(range(s.n)):
        # relabel: generator x at new position order.index(x)
        pos = {x: i for i, x in enumerate(order)}
        table = [[None] * s.n for _ in range(s.n)]
        for x in range(s.n):
            for y in range(s.n):
                a, b = s(x, y)
                table[pos[x]][pos[y]] = (pos[a], pos[b])
        t = SolutionTable(s.n, table)
        G = orbit_relations(t).groebner(bound)
        if all(len(r.lm) == 2 for r in G.rules):
            return order, G
    return None


def dim_a2_bounds_check(s: SolutionTable) -> DimA2Report:
    if not (check_idempotent(s) and check_nondegenerate(s)[0] and check_braid(s)):
        raise ValueError("needs an idempotent left-nondegenerate braided set")
    found = pbw_relabelling(s)
    if found is None:
        raise ValueError("no generator enumeration gives a quadratic Groebner basis")
    order, G = found
    n = s.n
    dim = len(normal_words(G, 2))
    lower, upper = n, comb(n, 2) + 1
    return DimA2Report(dim, lower, upper, lower <= dim <= upper, tuple(o + 1 for o in order))


def hilbert_after_bound(s: SolutionTable, d_max: int) -> list:
    """Hilbert function of A(k,X,r) up to d_max under a PBW enumeration."""
    found = pbw_relabelling(s)
    if found is None:
        raise ValueError("not PBW under any enumeration")
    order, _ = found
    from .yb_algebra import orbit_relations

    pos = {x: i for i, x in enumerate(order)}
    table = [[None] * s.n for _ in range(s.n)]
    for x in range(s.n):
        for y in range(s.n):
            a, b = s(x, y)
            table[pos[x]][pos[y]] = (pos[a], pos[b])
    G = orbit_relations(SolutionTable(s.n, table)).groebner(d_max)
    return hilbert_function(G, d_max)


def monomial_algebra_graph(n: int, obstruction_pairs: Iterable[tuple]) -> tuple:
    """(Gamma_N, Gamma_W) for the monomial algebra with the given degree-2 obstructions."""
    names = tuple(f"x{i + 1}" for i in range(n))
    gW = DirectedGraph(names, [(names[a], names[b]) for a, b in obstruction_pairs])
    return gW.complement(), gW
