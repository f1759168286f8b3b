"""Exact spanning-tree counting.

Four independent routes to the same number: the all-ones-plus-Laplacian
determinant det(J+Q)/n^2, brute-force enumeration, the deletion-contraction
recurrence, and multiplication over biconnected blocks. A disconnected graph
counts 0 trees by convention.
"""

from __future__ import annotations

from .errors import Disconnected, DiscrepancyDetected, TooLarge
from .numutil import format_factored, try_factorize
from .powergraph import PowerGraph

FACTOR_VALUE_LIMIT = 10**150


class TreeNumber:
    """Exact nonnegative tree count plus (lazily computed) factorization."""

    __slots__ = ("value", "_factors")

    def __init__(self, value: int, factors: dict[int, int] | None = None):
        if value < 0:
            raise DiscrepancyDetected(f"negative tree count {value}")
        self.value = value
        if factors is not None:
            check = 1
            for p, e in factors.items():
                if e < 0:
                    raise DiscrepancyDetected(f"negative exponent for prime {p}")
                check *= p**e
            if check != value:
                raise DiscrepancyDetected(
                    f"factorization {factors} multiplies to {check}, not {value}"
                )
            factors = {p: e for p, e in factors.items() if e > 0}
        self._factors = factors

    @property
    def factorization(self) -> dict[int, int] | None:
        """Prime factorization, or None for 0 / values beyond the budget."""
        if self._factors is None and self.value > 0 and self.value <= FACTOR_VALUE_LIMIT:
            self._factors = try_factorize(self.value)
        return self._factors

    def factored(self) -> str:
        if self.value == 0:
            return "0"
        return format_factored(self.factorization, self.value)

    def __int__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, TreeNumber):
            return self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __mul__(self, other):
        if isinstance(other, TreeNumber):
            if self._factors is not None and other._factors is not None:
                combined = dict(self._factors)
                for p, e in other._factors.items():
                    combined[p] = combined.get(p, 0) + e
                return TreeNumber(self.value * other.value, combined)
            return TreeNumber(self.value * other.value)
        return NotImplemented

    def __repr__(self):
        return f"TreeNumber({self.value})"


class MultiGraph:
    """Undirected graph with edge multiplicities and no self-loops."""

    __slots__ = ("vertex_count", "_mult")

    def __init__(self, vertex_count: int, edges=()):
        if vertex_count < 0:
            raise ValueError("vertex count must be nonnegative")
        self.vertex_count = vertex_count
        self._mult: dict[tuple[int, int], int] = {}
        for e in edges:
            self.add_edge(*e)

    def add_edge(self, u: int, v: int, mult: int = 1) -> None:
        if u == v:
            raise ValueError(f"self-loop at vertex {u} not allowed")
        if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
            raise ValueError(f"edge ({u},{v}) outside vertex range")
        if mult < 1:
            raise ValueError("multiplicity must be >= 1")
        key = (u, v) if u < v else (v, u)
        self._mult[key] = self._mult.get(key, 0) + mult

    def multiplicity(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        return self._mult.get(key, 0)

    def edges(self) -> list[tuple[int, int, int]]:
        return sorted((u, v, m) for (u, v), m in self._mult.items())

    def edge_count(self) -> int:
        return sum(self._mult.values())

    def degree(self, v: int) -> int:
        return sum(m for (a, b), m in self._mult.items() if a == v or b == v)

    def neighbors(self, v: int) -> list[int]:
        out = []
        for a, b in self._mult:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return out

    def is_connected(self) -> bool:
        n = self.vertex_count
        if n <= 1:
            return True
        adj = [[] for _ in range(n)]
        for a, b in self._mult:
            adj[a].append(b)
            adj[b].append(a)
        seen = bytearray(n)
        seen[0] = 1
        stack = [0]
        count = 1
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = 1
                    count += 1
                    stack.append(y)
        return count == n

    def without_edge(self, u: int, v: int) -> "MultiGraph":
        """Copy with the (u,v) edge removed at all multiplicities."""
        key = (u, v) if u < v else (v, u)
        g = MultiGraph(self.vertex_count)
        g._mult = {k: m for k, m in self._mult.items() if k != key}
        return g

    def contracted(self, u: int, v: int) -> "MultiGraph":
        """Identify u and v (loops dropped); v's index disappears."""
        if u > v:
            u, v = v, u
        relabel = [x if x < v else (u if x == v else x - 1) for x in range(self.vertex_count)]
        g = MultiGraph(self.vertex_count - 1)
        for (a, b), m in self._mult.items():
            ra, rb = relabel[a], relabel[b]
            if ra == rb:
                continue
            key = (ra, rb) if ra < rb else (rb, ra)
            g._mult[key] = g._mult.get(key, 0) + m
        return g

    def __repr__(self):
        return f"MultiGraph(n={self.vertex_count}, edges={self.edges()})"


def as_multigraph(graph) -> MultiGraph:
    """PowerGraph inputs convert with all multiplicities 1."""
    if isinstance(graph, MultiGraph):
        return graph
    g = MultiGraph(graph.vertex_count)
    for u, v in graph.edges():
        g.add_edge(u, v)
    return g


def exact_integer_determinant(matrix) -> int:
    """Determinant over exact integers via fraction-free elimination.

    Entries after step k are (k+1)-minors of the input, so every pivot
    division is exact and intermediate growth obeys Hadamard's bound.
    """
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise ValueError("determinant needs a square matrix")
        for x in row:
            if not isinstance(x, int):
                raise ValueError(f"matrix entries must be integers, got {x!r}")
    if n == 0:
        return 1
    m = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        rk = m[k]
        for i in range(k + 1, n):
            ri = m[i]
            f = ri[k]
            if f:
                ri[k + 1 :] = [
                    (a * pivot - f * b) // prev
                    for a, b in zip(ri[k + 1 :], rk[k + 1 :])
                ]
            else:
                ri[k + 1 :] = [a * pivot // prev for a in ri[k + 1 :]]
        prev = pivot
    return sign * m[n - 1][n - 1]


def _ones_plus_laplacian(graph) -> list[list[int]]:
    n = graph.vertex_count
    if isinstance(graph, PowerGraph):
        rows = graph.rows
        mat = []
        for i in range(n):
            row = [1] * n
            r = rows[i]
            while r:
                low = r & -r
                row[low.bit_length() - 1] = 0
                r ^= low
            row[i] = 1 + rows[i].bit_count()
            mat.append(row)
        return mat
    mat = [[1] * n for _ in range(n)]
    deg = [0] * n
    for u, v, m in graph.edges():
        mat[u][v] -= m
        mat[v][u] -= m
        deg[u] += m
        deg[v] += m
    for i in range(n):
        mat[i][i] = 1 + deg[i]
    return mat


def temperley_kappa(graph) -> TreeNumber:
    """Tree count as det(J+Q)/n^2, J all-ones, Q the multiplicity Laplacian."""
    n = graph.vertex_count
    if n < 1:
        raise ValueError("temperley_kappa needs at least one vertex")
    det = exact_integer_determinant(_ones_plus_laplacian(graph))
    q, r = divmod(det, n * n)
    if r != 0:
        raise DiscrepancyDetected(f"det(J+Q)={det} not divisible by {n}^2")
    if q < 0:
        raise DiscrepancyDetected(f"negative tree count {q} from determinant")
    return TreeNumber(q)


def enumerate_spanning_trees(graph) -> TreeNumber:
    """Count spanning trees by backtracking over edge subsets.

    Parallel edges count as distinct trees. Valid when the graph has at most
    12 vertices or at most 24 edge instances.
    """
    g = as_multigraph(graph)
    n = g.vertex_count
    total_edges = g.edge_count()
    if n > 12 and total_edges > 24:
        raise TooLarge(
            f"enumeration capped at 12 vertices or 24 edges, got {n} and {total_edges}"
        )
    if n <= 1:
        return TreeNumber(1)
    instances = []
    for u, v, m in g.edges():
        instances.extend([(u, v)] * m)
    need = n - 1
    parent = list(range(n))
    rank = [0] * n

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    count = 0

    def rec(i: int, chosen: int) -> None:
        nonlocal count
        if chosen == need:
            count += 1
            return
        if len(instances) - i < need - chosen:
            return
        u, v = instances[i]
        ru, rv = find(u), find(v)
        if ru != rv:
            # union by rank, undone after the branch
            if rank[ru] < rank[rv]:
                ru, rv = rv, ru
            parent[rv] = ru
            bumped = rank[ru] == rank[rv]
            if bumped:
                rank[ru] += 1
            rec(i + 1, chosen + 1)
            parent[rv] = rv
            if bumped:
                rank[ru] -= 1
        rec(i + 1, chosen)

    rec(0, 0)
    return TreeNumber(count)


def _canonical_key(g: MultiGraph):
    """Color-refined relabeling key; equal keys imply isomorphic graphs."""
    n = g.vertex_count
    colors = [g.degree(v) for v in range(n)]
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for (a, b), m in g._mult.items():
        adj[a].append((b, m))
        adj[b].append((a, m))
    for _ in range(n):
        sigs = [
            (colors[v], tuple(sorted((m, colors[w]) for w, m in adj[v])))
            for v in range(n)
        ]
        palette = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new_colors = [palette[s] for s in sigs]
        if new_colors == colors:
            break
        colors = new_colors
    order = sorted(range(n), key=lambda v: (colors[v], v))
    pos = {v: i for i, v in enumerate(order)}
    edges = []
    for (a, b), m in g._mult.items():
        ra, rb = pos[a], pos[b]
        edges.append((min(ra, rb), max(ra, rb), m))
    return (n, tuple(sorted(edges)))


def deletion_contraction_kappa(graph) -> TreeNumber:
    """Tree count via kappa(G) = kappa(G - e) + kappa(G . e), memoized.

    An edge of multiplicity m contributes kappa(G without the edge) plus
    m * kappa(G contracted at it), which is the recurrence applied to each
    of the m parallel instances in turn. Capped at 14 vertices.
    """
    g = as_multigraph(graph)
    if g.vertex_count > 14:
        raise TooLarge("deletion-contraction capped at 14 vertices")
    memo: dict = {}

    def rec(h: MultiGraph) -> int:
        n = h.vertex_count
        if n == 1:
            return 1
        total = h.edge_count()
        if total < n - 1 or not h.is_connected():
            return 0
        if total == n - 1:
            return 1
        if n == 2:
            return next(iter(h._mult.values()))
        key = _canonical_key(h)
        found = memo.get(key)
        if found is not None:
            return found
        (u, v), m = next(iter(h._mult.items()))
        result = rec(h.without_edge(u, v)) + m * rec(h.contracted(u, v))
        memo[key] = result
        return result

    return TreeNumber(rec(g))


def _biconnected_blocks(g: MultiGraph) -> list[list[tuple[int, int]]]:
    """Blocks as lists of edge instances, via an iterative lowpoint DFS."""
    n = g.vertex_count
    instances: list[tuple[int, int]] = []
    for u, v, m in g.edges():
        instances.extend([(u, v)] * m)
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for eid, (u, v) in enumerate(instances):
        adj[u].append((v, eid))
        adj[v].append((u, eid))
    disc = [-1] * n
    low = [0] * n
    edge_stack: list[int] = []
    blocks: list[list[tuple[int, int]]] = []
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        stack = [(root, -1, iter(adj[root]))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, pe, it = stack[-1]
            advanced = False
            for w, eid in it:
                if eid == pe:
                    continue
                if disc[w] == -1:
                    edge_stack.append(eid)
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, eid, iter(adj[w])))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append(eid)
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                u, _, _ = stack[-1]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    block = []
                    while True:
                        eid = edge_stack.pop()
                        block.append(instances[eid])
                        if eid == pe:
                            break
                    blocks.append(block)
    return blocks


def block_decomposition_kappa(graph, inner=None) -> TreeNumber:
    """Tree count as a product over biconnected blocks.

    Deleting a cut vertex splits the count multiplicatively; iterating that
    over the whole block tree lets `inner` (default the determinant route)
    handle each block in isolation. Cut edges are K_2 blocks contributing 1.
    """
    if inner is None:
        inner = temperley_kappa
    g = as_multigraph(graph)
    if not g.is_connected():
        raise Disconnected("block decomposition needs a connected graph")
    result = TreeNumber(1, {})
    for block in _biconnected_blocks(g):
        verts = sorted({x for e in block for x in e})
        pos = {x: i for i, x in enumerate(verts)}
        sub = MultiGraph(len(verts))
        for u, v in block:
            sub.add_edge(pos[u], pos[v])
        result = result * inner(sub)
    return result
