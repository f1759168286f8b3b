"""Power graphs of finite groups and their identity-deleted reductions.

Vertices x, y are adjacent exactly when one of the cyclic subgroups <x>, <y>
contains the other. Adjacency is kept as packed bit rows, one integer per
vertex, which keeps the later determinant assembly cheap.
"""

from __future__ import annotations

import json
from math import gcd

from .errors import OutOfRange, TooLarge, TrivialGroup
from .groups import FiniteGroup
from .numutil import divisors, phi

CLIQUE_SEARCH_LIMIT = 512


class PowerGraph:
    """Simple undirected graph on group elements with bitmask adjacency rows."""

    __slots__ = ("vertex_count", "rows", "vertex_labels", "vertex_names",
                 "includes_identity", "name")

    def __init__(self, name, rows, vertex_labels, vertex_names, includes_identity):
        self.name = name
        self.vertex_count = len(rows)
        self.rows = rows
        self.vertex_labels = vertex_labels
        self.vertex_names = vertex_names
        self.includes_identity = includes_identity

    def is_adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edges(self):
        for u in range(self.vertex_count):
            r = self.rows[u] >> (u + 1)
            v = u + 1
            while r:
                if r & 1:
                    yield (u, v)
                r >>= 1
                v += 1

    def edge_count(self) -> int:
        return sum(self.degree(v) for v in range(self.vertex_count)) // 2

    def __repr__(self):
        return f"PowerGraph({self.name}, n={self.vertex_count}, m={self.edge_count()})"


def power_graph(g: FiniteGroup) -> PowerGraph:
    """Power graph on all of g, one vertex per element, identity at vertex 0."""
    n = g.order
    orders = g.element_order
    closures = g.cyclic_closure
    rows = [0] * n
    for i in range(n):
        oi = orders[i]
        ci = closures[i]
        for j in range(i + 1, n):
            oj = orders[j]
            # <x> is contained in <y> iff x lies in <y>; testing order
            # divisibility first skips most membership probes.
            if oi % oj == 0:
                adjacent = j in ci
            elif oj % oi == 0:
                adjacent = i in closures[j]
            else:
                continue
            if adjacent:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    names = [g.element_repr(i) for i in range(n)]
    return PowerGraph(f"P({g.name})", rows, list(range(n)), names, True)


def reduced_power_graph(g: FiniteGroup) -> PowerGraph:
    """power_graph(g) with the identity vertex deleted; may be disconnected."""
    if g.order < 2:
        raise TrivialGroup("reduced power graph needs |G| >= 2")
    full = power_graph(g)
    rows = [full.rows[i] >> 1 for i in range(1, full.vertex_count)]
    labels = full.vertex_labels[1:]
    names = full.vertex_names[1:]
    return PowerGraph(f"P({g.name}#)", rows, labels, names, False)


def degree_in_cyclic(n: int, m: int) -> int:
    """Degree of the m-th power of a generator in the power graph of Z_n.

    Counts the n/gcd(m,n) - 1 other members of the generated subgroup plus,
    for each proper divisor d of gcd(m,n), the phi(n/d) elements whose
    subgroup strictly contains it.
    """
    if n < 1 or not 0 <= m < n:
        raise OutOfRange(f"need n >= 1 and 0 <= m < n, got n={n}, m={m}")
    g = gcd(m, n)
    deg = n // g - 1
    for d in divisors(g):
        if d != g:
            deg += phi(n // d)
    return deg


def is_complete(graph: PowerGraph) -> bool:
    n = graph.vertex_count
    full = (1 << n) - 1
    return all(graph.rows[v] | (1 << v) == full for v in range(n))


def clique_number(graph: PowerGraph) -> int:
    """Exact maximum clique size by coloring-bounded branch and bound."""
    n = graph.vertex_count
    if n > CLIQUE_SEARCH_LIMIT:
        raise TooLarge(f"clique search capped at {CLIQUE_SEARCH_LIMIT} vertices")
    if n == 0:
        raise OutOfRange("clique number needs at least one vertex")
    rows = graph.rows
    best = 1

    def expand(size: int, cand: int) -> None:
        nonlocal best
        # Greedy coloring of the candidate set; color index bounds any
        # clique inside it, so candidates are tried in reverse color order.
        order: list[int] = []
        bounds: list[int] = []
        color = 0
        uncolored = cand
        while uncolored:
            color += 1
            avail = uncolored
            while avail:
                v = (avail & -avail).bit_length() - 1
                bit = 1 << v
                uncolored &= ~bit
                avail &= ~bit & ~rows[v]
                order.append(v)
                bounds.append(color)
        for i in range(len(order) - 1, -1, -1):
            if size + bounds[i] <= best:
                return
            v = order[i]
            cand &= ~(1 << v)
            sub = cand & rows[v]
            if size + 1 > best:
                best = size + 1
            if sub:
                expand(size + 1, sub)

    expand(0, (1 << n) - 1)
    return best


def to_json(graph: PowerGraph) -> str:
    """Canonical JSON adjacency: {"vertices": N, "edges": [...], "labels": {...}}."""
    payload = {
        "vertices": graph.vertex_count,
        "edges": [[u, v] for u, v in graph.edges()],
        "labels": {str(v): graph.vertex_names[v] for v in range(graph.vertex_count)},
    }
    return json.dumps(payload, ensure_ascii=False, separators=(", ", ": "))


def to_dot(graph: PowerGraph) -> str:
    lines = [f'graph "{graph.name}" {{']
    for v in range(graph.vertex_count):
        lines.append(f'  {v} [label="{graph.vertex_names[v]}"];')
    for u, v in graph.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
