"""Graph containers and the structural queries every other module builds on.

Two containers live here: ``Graph`` (simple, undirected, dense 0-based ids)
and ``CountedMultiGraph`` (parallel edges allowed, per-vertex counts and
provenance, used by the contraction pipeline).  All values are immutable
after construction; every query is a pure function with deterministic
tie-breaking (ascending vertex ids).
"""

from collections import deque

from .errors import Budget


class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Rejects self-loops, duplicate edges and out-of-range endpoints at
    construction time.  ``adj[v]`` is a sorted tuple of neighbours.
    """

    __slots__ = ("n", "edges", "adj", "labels", "_adj_sets", "_adj_bits")

    def __init__(self, n, edges, labels=None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        seen = set()
        normalized = []
        for u, v in edges:
            if u == v:
                raise ValueError("self-loop at vertex %d" % u)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError("edge (%d, %d) out of range for n=%d" % (u, v, n))
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError("duplicate edge (%d, %d)" % e)
            seen.add(e)
            normalized.append(e)
        self.n = n
        self.edges = tuple(sorted(normalized))
        adj = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self.adj = tuple(tuple(sorted(a)) for a in adj)
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError("need one label per vertex")
        self.labels = labels
        self._adj_sets = None
        self._adj_bits = None

    @property
    def m(self):
        return len(self.edges)

    def degree(self, v):
        return len(self.adj[v])

    def adj_sets(self):
        if self._adj_sets is None:
            self._adj_sets = tuple(set(a) for a in self.adj)
        return self._adj_sets

    def adj_bits(self):
        """Adjacency as one big int bitmask per vertex."""
        if self._adj_bits is None:
            bits = [0] * self.n
            for u, v in self.edges:
                bits[u] |= 1 << v
                bits[v] |= 1 << u
            self._adj_bits = tuple(bits)
        return self._adj_bits

    def has_edge(self, u, v):
        return v in self.adj_sets()[u]

    def __eq__(self, other):
        return (isinstance(other, Graph) and self.n == other.n
                and self.edges == other.edges and self.labels == other.labels)

    def __hash__(self):
        return hash((self.n, self.edges, self.labels))

    def __repr__(self):
        return "Graph(n=%d, m=%d)" % (self.n, len(self.edges))


def induced_subgraph(g, vertices):
    """Induced subgraph on ``vertices``, relabelled densely.

    Returns ``(subgraph, kept)`` where ``kept`` is the sorted tuple of
    original ids; new id i corresponds to ``kept[i]``.
    """
    kept = tuple(sorted(set(vertices)))
    index = {v: i for i, v in enumerate(kept)}
    keep = set(kept)
    edges = [(index[u], index[v]) for u, v in g.edges if u in keep and v in keep]
    labels = None
    if g.labels is not None:
        labels = tuple(g.labels[v] for v in kept)
    return Graph(len(kept), edges, labels), kept


def delete_vertices(g, drop):
    """Graph minus a vertex set, relabelled densely; returns (graph, kept)."""
    dropped = set(drop)
    return induced_subgraph(g, (v for v in range(g.n) if v not in dropped))


class CountedMultiGraph:
    """Undirected multigraph with per-vertex counts and provenance.

    Parallel edges are allowed, self-loops are not.  ``count[v]`` is a
    positive integer and ``provenance[v]`` the ordered tuple of original
    vertex ids the vertex stands for; provenance tuples are pairwise
    disjoint and have length ``count[v]``.
    """

    __slots__ = ("n", "edges", "counts", "provenance", "adj")

    def __init__(self, n, edges, counts=None, provenance=None):
        if counts is None:
            counts = (1,) * n
        if provenance is None:
            provenance = tuple((v,) for v in range(n))
        counts = tuple(counts)
        provenance = tuple(tuple(p) for p in provenance)
        if len(counts) != n or len(provenance) != n:
            raise ValueError("need one count and one provenance entry per vertex")
        seen_origins = set()
        for v in range(n):
            if counts[v] < 1:
                raise ValueError("count of vertex %d must be >= 1" % v)
            if len(provenance[v]) != counts[v]:
                raise ValueError("provenance length of vertex %d must equal its count" % v)
            for orig in provenance[v]:
                if orig in seen_origins:
                    raise ValueError("provenance lists must be pairwise disjoint")
                seen_origins.add(orig)
        normalized = []
        for u, v in edges:
            if u == v:
                raise ValueError("self-loop at vertex %d" % u)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError("edge (%d, %d) out of range for n=%d" % (u, v, n))
            normalized.append((u, v) if u < v else (v, u))
        self.n = n
        self.edges = tuple(sorted(normalized))
        self.counts = counts
        self.provenance = provenance
        adj = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self.adj = tuple(tuple(sorted(a)) for a in adj)

    @classmethod
    def from_graph(cls, g):
        """Lift a simple graph to unit counts and singleton provenance."""
        return cls(g.n, g.edges)

    def degree(self, v):
        return len(self.adj[v])

    def multiplicity(self, u, v):
        return self.adj[u].count(v)

    def __eq__(self, other):
        return (isinstance(other, CountedMultiGraph) and self.n == other.n
                and self.edges == other.edges and self.counts == other.counts
                and self.provenance == other.provenance)

    def __hash__(self):
        return hash((self.n, self.edges, self.counts, self.provenance))

    def __repr__(self):
        return "CountedMultiGraph(n=%d, m=%d)" % (self.n, len(self.edges))


def multigraph_restrict(mg, vertices):
    """Sub-multigraph on ``vertices`` (counts and provenance carried along)."""
    kept = tuple(sorted(set(vertices)))
    index = {v: i for i, v in enumerate(kept)}
    keep = set(kept)
    edges = [(index[u], index[v]) for u, v in mg.edges if u in keep and v in keep]
    return CountedMultiGraph(
        len(kept), edges,
        counts=tuple(mg.counts[v] for v in kept),
        provenance=tuple(mg.provenance[v] for v in kept))


def multigraph_delete(mg, drop):
    dropped = set(drop)
    return multigraph_restrict(mg, (v for v in range(mg.n) if v not in dropped))


def connected_components(g):
    """Maximal connected vertex sets, each sorted, ordered by smallest member.

    Works for both ``Graph`` and ``CountedMultiGraph``.
    """
    seen = [False] * g.n
    components = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        components.append(tuple(sorted(comp)))
    return components


def is_bipartite(g):
    """Decide bipartiteness.

    Returns ``(True, coloring)`` with a proper 2-coloring (colors 1 and 2),
    or ``(False, cycle)`` where ``cycle`` is an odd cycle as a vertex list
    (closure back to the first vertex implied).
    """
    color = [0] * g.n
    parent = [-1] * g.n
    for start in range(g.n):
        if color[start]:
            continue
        color[start] = 1
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if color[v] == 0:
                    color[v] = 3 - color[u]
                    parent[v] = u
                    queue.append(v)
                elif color[v] == color[u]:
                    return False, _odd_cycle(parent, u, v)
    return True, {v: color[v] for v in range(g.n)}


def _odd_cycle(parent, u, v):
    """Odd cycle through the conflict edge (u, v) using BFS-tree parents."""
    ancestors_u = [u]
    x = u
    while parent[x] != -1:
        x = parent[x]
        ancestors_u.append(x)
    pos = {x: i for i, x in enumerate(ancestors_u)}
    path_v = [v]
    y = v
    while y not in pos:
        y = parent[y]
        path_v.append(y)
    lca = y
    cycle = ancestors_u[:pos[lca] + 1]      # u .. lca
    cycle.extend(reversed(path_v[:-1]))     # .. back down to v
    return cycle


def is_triangle_free(g):
    """Returns ``(True, None)`` or ``(False, (a, b, c))`` with a triangle."""
    bits = g.adj_bits()
    for u, v in g.edges:
        common = bits[u] & bits[v]
        if common:
            w = (common & -common).bit_length() - 1
            return False, tuple(sorted((u, v, w)))
    return True, None


def diameter(g):
    """Largest shortest-path distance, or None when the graph is disconnected.

    The empty graph is connected by convention and has diameter 0.
    """
    if g.n == 0:
        return 0
    bits = g.adj_bits()
    full = (1 << g.n) - 1
    best = 0
    for src in range(g.n):
        seen = 1 << src
        frontier = seen
        dist = 0
        while seen != full:
            nxt = 0
            f = frontier
            while f:
                v = (f & -f).bit_length() - 1
                f &= f - 1
                nxt |= bits[v]
            nxt &= ~seen
            if nxt == 0:
                return None
            seen |= nxt
            frontier = nxt
            dist += 1
        if dist > best:
            best = dist
    return best


def shortest_cycle(g):
    """Shortest cycle of a counted multigraph as a vertex list, or None.

    A pair of parallel edges counts as a cycle of length 2.  Ties are broken
    by the lexicographically smallest vertex sequence; the sequence starts at
    the smallest vertex of the cycle and closure back to it is implied.
    """
    best_pair = None
    for u in range(g.n):
        prev = None
        for v in g.adj[u]:
            if v == prev and v > u:
                best_pair = (u, v)
                break
            prev = v
        if best_pair:
            break
    if best_pair:
        return list(best_pair)

    girth = _simple_girth(g)
    if girth is None:
        return None
    return _lex_smallest_cycle(g, girth)


def _simple_girth(g):
    """Girth of the simple support via BFS from every vertex (no parallels)."""
    best = None
    adj = [sorted(set(a)) for a in g.adj]
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] >= best:
                break
            for v in adj[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif parent[u] != v and parent[v] != u:
                    length = dist[u] + dist[v] + 1
                    if best is None or length < best:
                        best = length
        if best == 3:
            break
    return best


def _lex_smallest_cycle(g, length):
    """Lexicographically smallest simple cycle of exactly ``length`` >= 3."""
    adj = [sorted(set(a)) for a in g.adj]
    for v0 in range(g.n):
        # Cycles whose smallest vertex is v0: all other vertices exceed v0.
        dist = _bfs_dist_from(adj, v0, v0)
        path = [v0]
        on_path = {v0}

        def extend(u, depth):
            remaining = length - depth
            for w in adj[u]:
                if w == v0 and remaining == 0:
                    return True
                if w <= v0 or w in on_path:
                    continue
                if remaining < 1 or dist.get(w, length + 1) > remaining:
                    continue
                path.append(w)
                on_path.add(w)
                if extend(w, depth + 1):
                    return True
                on_path.discard(w)
                path.pop()
            return False

        if extend(v0, 1):
            return path
    return None


def _bfs_dist_from(adj, v0, floor):
    """BFS distances to v0 through vertices > floor (v0 itself allowed)."""
    dist = {v0: 0}
    queue = deque([v0])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v > floor and v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def find_proper_coloring(g, k, budget=None):
    """Backtracking search for a proper k-coloring.

    Vertices are processed in ascending id order, colors tried ascending
    from 1 to k.  Returns an assignment dict or None.  Raises
    BudgetExceededError when the node-expansion budget (default 2,000,000)
    runs out; intended for desk-scale or structured inputs.
    """
    if k < 1:
        raise ValueError("k must be positive")
    bud = Budget.ensure(2_000_000 if budget is None else budget)
    earlier = [[u for u in g.adj[v] if u < v] for v in range(g.n)]
    colors = [0] * g.n
    v = 0
    while 0 <= v < g.n:
        bud.charge(stage="proper-coloring", vertex=v)
        placed = False
        for c in range(colors[v] + 1, k + 1):
            if all(colors[u] != c for u in earlier[v]):
                colors[v] = c
                placed = True
                break
        if placed:
            v += 1
        else:
            colors[v] = 0
            v -= 1
    if v < 0:
        return None
    return {u: colors[u] for u in range(g.n)}


def coloring_is_proper(g, assignment):
    """True when every vertex is colored and no edge is monochromatic."""
    if any(v not in assignment for v in range(g.n)):
        return False
    return all(assignment[u] != assignment[v] for u, v in g.edges)
