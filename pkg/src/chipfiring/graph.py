"""Immutable multidigraph value type plus the rewriting operations built on it.

Vertices are strings and keep their construction order; that order is the
canonical order used everywhere else (configuration domains, enumeration order,
matrix indexing).  Arcs are (tail, head) pairs identified by their position in
the arc list, so parallel arcs stay distinguishable; every rewriting operation
keeps the surviving arcs in their original relative order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .errors import GraphError

Arc = tuple[str, str]


@dataclass(frozen=True)
class MultiDigraph:
    """Labeled multidigraph; loops and parallel arcs allowed."""

    vertices: tuple[str, ...]
    arcs: tuple[Arc, ...]

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphError("duplicate vertex names")
        declared = set(self.vertices)
        for i, (tail, head) in enumerate(self.arcs):
            if tail not in declared or head not in declared:
                raise GraphError(f"arc {i} ({tail} -> {head}) uses an undeclared vertex")

    @classmethod
    def of(cls, arcs, vertices=()) -> "MultiDigraph":
        """Build a graph from arc pairs, inferring vertex order by first appearance."""
        arcs = tuple((str(t), str(h)) for t, h in arcs)
        order: dict[str, None] = {str(v): None for v in vertices}
        for tail, head in arcs:
            order.setdefault(tail, None)
            order.setdefault(head, None)
        return cls(tuple(order), arcs)

    # ------------------------------------------------------------------ sizes
    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_arcs(self) -> int:
        return len(self.arcs)

    # ---------------------------------------------------------------- lookups
    @cached_property
    def _index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def vertex_index(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v!r}") from None

    def has_vertex(self, v: str) -> bool:
        return v in self._index

    @cached_property
    def _outdeg(self) -> dict[str, int]:
        d = dict.fromkeys(self.vertices, 0)
        for tail, _ in self.arcs:
            d[tail] += 1
        return d

    @cached_property
    def _indeg(self) -> dict[str, int]:
        d = dict.fromkeys(self.vertices, 0)
        for _, head in self.arcs:
            d[head] += 1
        return d

    @cached_property
    def _mult(self) -> dict[Arc, int]:
        d: dict[Arc, int] = {}
        for arc in self.arcs:
            d[arc] = d.get(arc, 0) + 1
        return d

    def outdeg(self, v: str) -> int:
        """Out-degree including loops."""
        self.vertex_index(v)
        return self._outdeg[v]

    def indeg(self, v: str) -> int:
        """In-degree including loops."""
        self.vertex_index(v)
        return self._indeg[v]

    def multiplicity(self, tail: str, head: str) -> int:
        """Number of parallel arcs tail -> head."""
        self.vertex_index(tail)
        self.vertex_index(head)
        return self._mult.get((tail, head), 0)

    def loops_at(self, v: str) -> int:
        return self.multiplicity(v, v)

    @property
    def loop_count(self) -> int:
        return sum(1 for tail, head in self.arcs if tail == head)

    def out_neighbors(self, v: str) -> tuple[str, ...]:
        """Distinct heads of arcs leaving v, in canonical order; v itself excluded."""
        self.vertex_index(v)
        heads = {head for tail, head in self.arcs if tail == v and head != v}
        return tuple(u for u in self.vertices if u in heads)

    def arc(self, index: int) -> Arc:
        if not 0 <= index < len(self.arcs):
            raise GraphError(f"no arc with index {index}")
        return self.arcs[index]

    # ----------------------------------------------------------- connectivity
    def _reachable(self, start: str, adjacency: dict[str, set[str]]) -> set[str]:
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for u in adjacency[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return seen

    @cached_property
    def _forward(self) -> dict[str, set[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for tail, head in self.arcs:
            adj[tail].add(head)
        return adj

    @cached_property
    def _backward(self) -> dict[str, set[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for tail, head in self.arcs:
            adj[head].add(tail)
        return adj

    def is_weakly_connected(self) -> bool:
        if not self.vertices:
            return False
        both = {v: self._forward[v] | self._backward[v] for v in self.vertices}
        return len(self._reachable(self.vertices[0], both)) == self.n_vertices

    def is_strongly_connected(self) -> bool:
        if not self.vertices:
            return False
        root = self.vertices[0]
        return (
            len(self._reachable(root, self._forward)) == self.n_vertices
            and len(self._reachable(root, self._backward)) == self.n_vertices
        )

    def reachable_from(self, start: str) -> frozenset[str]:
        self.vertex_index(start)
        return frozenset(self._reachable(start, self._forward))

    def __repr__(self):
        return f"MultiDigraph({list(self.vertices)!r}, {list(self.arcs)!r})"


@dataclass(frozen=True)
class BridgeCut:
    """Vertex cut witnessing a bridge: exactly one arc leaves ``cut_set`` and one enters."""

    cut_set: frozenset[str]
    bridge: int
    co_bridge: int


def is_eulerian(g: MultiDigraph) -> bool:
    """True iff g is connected and every vertex has equal in- and out-degree.

    The empty graph is not Eulerian; a single loopless vertex is (degrees 0 = 0),
    which keeps fully contracted graphs valid.  For balanced degrees, weak and
    strong connectivity coincide.
    """
    if not g.vertices:
        return False
    if any(g._indeg[v] != g._outdeg[v] for v in g.vertices):
        return False
    return g.is_weakly_connected()


def is_undirected(g: MultiDigraph) -> bool:
    """True iff arc multiplicities are symmetric between every pair of distinct vertices."""
    return all(
        g.multiplicity(v, u) == g.multiplicity(u, v)
        for v, u in itertools.combinations(g.vertices, 2)
    )


def delete_out_arcs(g: MultiDigraph, s: str) -> MultiDigraph:
    """Remove every arc whose tail is s (loops at s included)."""
    g.vertex_index(s)
    return MultiDigraph(g.vertices, tuple(a for a in g.arcs if a[0] != s))


def delete_arcs(g: MultiDigraph, indices) -> MultiDigraph:
    """Remove the arcs with the given indices; the rest keep their relative order."""
    drop = set(indices)
    for i in drop:
        g.arc(i)
    return MultiDigraph(g.vertices, tuple(a for i, a in enumerate(g.arcs) if i not in drop))


def _merged_name(g: MultiDigraph, merged: set[str]) -> str:
    name = "+".join(sorted(merged))
    if name in set(g.vertices) - merged:
        raise GraphError(f"contraction name {name!r} collides with an existing vertex")
    return name


def _contract(g: MultiDigraph, merged: set[str], dropped_arcs: set[int]) -> MultiDigraph:
    name = _merged_name(g, merged)
    vertices = []
    placed = False
    for v in g.vertices:
        if v in merged:
            if not placed:
                vertices.append(name)
                placed = True
        else:
            vertices.append(v)
    rename = lambda v: name if v in merged else v
    arcs = tuple(
        (rename(tail), rename(head))
        for i, (tail, head) in enumerate(g.arcs)
        if i not in dropped_arcs
    )
    return MultiDigraph(tuple(vertices), arcs)


def contract_arc(g: MultiDigraph, index: int) -> MultiDigraph:
    """Contract a non-loop arc: merge its endpoints, drop the arc itself.

    Arcs parallel to the contracted one, and reverse partners, become loops at
    the merged vertex.  The merged vertex is named by joining the endpoint names
    with '+' in sorted order and takes the position of the earlier endpoint.
    """
    tail, head = g.arc(index)
    if tail == head:
        raise GraphError("cannot contract a loop")
    return _contract(g, {tail, head}, {index})


def contract_vertices(g: MultiDigraph, w) -> MultiDigraph:
    """Merge a nonempty vertex set into one vertex; internal arcs become loops."""
    merged = {str(v) for v in w}
    if not merged:
        raise GraphError("cannot contract an empty vertex set")
    for v in merged:
        g.vertex_index(v)
    return _contract(g, merged, set())


def remove_loops(g: MultiDigraph) -> tuple[MultiDigraph, int]:
    """Drop all loops; return the loopless graph and the number of loops removed."""
    kept = tuple(a for a in g.arcs if a[0] != a[1])
    return MultiDigraph(g.vertices, kept), len(g.arcs) - len(kept)


def reverse_partner(g: MultiDigraph, index: int) -> int | None:
    """Index of the first arc running opposite to the given one, or None."""
    tail, head = g.arc(index)
    if tail == head:
        return None
    for j, arc in enumerate(g.arcs):
        if j != index and arc == (head, tail):
            return j
    return None


def is_bridge(g: MultiDigraph, index: int) -> bool:
    """True iff deleting the arc destroys strong connectivity.

    Requires g strongly connected.  Loops are never bridges.
    """
    if not g.is_strongly_connected():
        raise GraphError("bridge test requires a strongly connected graph")
    g.arc(index)
    return not delete_arcs(g, [index]).is_strongly_connected()


def bridge_cut(g: MultiDigraph, index: int) -> BridgeCut:
    """Cut witness for a bridge b of an Eulerian graph.

    Returns X = vertices reachable from tail(b) once b is removed, together with
    the unique arc b' crossing back into X.  Both uniqueness properties are
    verified by scanning the arc list.
    """
    if not is_bridge(g, index):
        raise GraphError(f"arc {index} is not a bridge")
    tail, _ = g.arc(index)
    cut = delete_arcs(g, [index]).reachable_from(tail)
    outward = [i for i, (t, h) in enumerate(g.arcs) if t in cut and h not in cut]
    inward = [i for i, (t, h) in enumerate(g.arcs) if t not in cut and h in cut]
    if outward != [index] or len(inward) != 1:
        raise GraphError(
            f"arc {index} admits no single-crossing cut "
            f"(outward={outward}, inward={inward}); is the graph Eulerian?"
        )
    return BridgeCut(cut, index, inward[0])


def parse_edge_list(text: str) -> MultiDigraph:
    """Parse the shared edge-list format.

    Comment lines start with '#'.  Every other nonempty line is
    ``tail head [multiplicity]`` separated by whitespace; multiplicity defaults
    to 1.  The vertex set is the union of mentioned tokens in first-appearance
    order.
    """
    arcs: list[Arc] = []
    order: dict[str, None] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) not in (2, 3):
            raise GraphError(f"line {lineno}: expected 'tail head [multiplicity]', got {raw!r}")
        tail, head = parts[0], parts[1]
        mult = 1
        if len(parts) == 3:
            try:
                mult = int(parts[2])
            except ValueError:
                raise GraphError(f"line {lineno}: multiplicity {parts[2]!r} is not an integer") from None
            if mult < 1:
                raise GraphError(f"line {lineno}: multiplicity must be positive, got {mult}")
        order.setdefault(tail, None)
        order.setdefault(head, None)
        arcs.extend([(tail, head)] * mult)
    if not order:
        raise GraphError("empty graph description")
    return MultiDigraph(tuple(order), tuple(arcs))
