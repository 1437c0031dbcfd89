"""Recognition of 2-choosable graphs and the exhaustive choosability oracle.

The fast path classifies the core (the graph left after repeatedly deleting
degree-1 vertices) per connected component: a graph is 2-choosable exactly
when every core component is a single vertex, an even cycle C_{2m+2}, or a
theta graph with path lengths 2, 2, 2m.  The slow path enumerates k-list
assignments up to color renaming and checks each one; it is deliberately
independent of the classification so the two can cross-check each other.
"""

from dataclasses import dataclass
from itertools import combinations

from .errors import Budget, BudgetExceededError
from .graphs import connected_components, induced_subgraph

KIND_K1 = "K1"
KIND_EVEN_CYCLE = "even-cycle"
KIND_THETA = "theta-2-2-even"
KIND_OUTSIDE = "outside"

#: default size cap per k for full oracle enumeration ("true" verdicts)
_ORACLE_CAPS = {1: 10, 2: 6}


@dataclass(frozen=True)
class CoreClassification:
    """Verdict for one core component.

    ``kind`` is one of KIND_K1, KIND_EVEN_CYCLE (C_{2m+2}), KIND_THETA
    (theta_{2,2,2m}) or KIND_OUTSIDE; ``m`` carries the cycle/theta
    parameter, ``vertices`` the component in the classified graph's ids.
    """

    kind: str
    m: int | None
    vertices: tuple

    @property
    def in_family(self):
        return self.kind != KIND_OUTSIDE


def compute_core(g):
    """Repeatedly delete degree-1 vertices.

    Returns ``(core, kept)`` where ``kept`` maps the core's dense ids back
    to ``g``'s ids.  The result is independent of removal order; isolated
    vertices survive as K1 components.
    """
    degree = [len(a) for a in g.adj]
    alive = [True] * g.n
    stack = [v for v in range(g.n) if degree[v] == 1]
    while stack:
        v = stack.pop()
        if not alive[v] or degree[v] != 1:
            continue
        alive[v] = False
        for u in g.adj[v]:
            if alive[u]:
                degree[u] -= 1
                if degree[u] == 1:
                    stack.append(u)
    return induced_subgraph(g, (v for v in range(g.n) if alive[v]))


def classify_core(core):
    """Classify every component of a core; rejects inputs with degree-1 vertices."""
    for v in range(core.n):
        if core.degree(v) == 1:
            raise ValueError("input has a degree-1 vertex (%d); not a core" % v)
    return [_classify_component(core, comp) for comp in connected_components(core)]


def _classify_component(core, comp):
    if len(comp) == 1:
        return CoreClassification(KIND_K1, None, comp)
    degrees = sorted(core.degree(v) for v in comp)
    if degrees[0] == 2 and degrees[-1] == 2:
        # connected and all degree 2: a single cycle
        if len(comp) % 2 == 0 and len(comp) >= 4:
            return CoreClassification(KIND_EVEN_CYCLE, (len(comp) - 2) // 2, comp)
        return CoreClassification(KIND_OUTSIDE, None, comp)
    hubs = [v for v in comp if core.degree(v) == 3]
    if len(hubs) == 2 and all(core.degree(v) in (2, 3) for v in comp):
        lengths = _theta_path_lengths(core, hubs[0], hubs[1], comp)
        if lengths is not None and sorted(lengths) == [2, 2, max(lengths)]:
            longest = max(lengths)
            if longest >= 2 and longest % 2 == 0:
                return CoreClassification(KIND_THETA, longest // 2, comp)
    return CoreClassification(KIND_OUTSIDE, None, comp)


def _theta_path_lengths(core, a, b, comp):
    """Lengths of the three internally disjoint a-b paths, or None if not a theta."""
    lengths = []
    visited = {a, b}
    for first in core.adj[a]:
        if first == b:
            # direct edge = path of length 1 (not a valid theta_{2,2,2m} part)
            lengths.append(1)
            continue
        length = 1
        prev, cur = a, first
        while cur != b:
            if core.degree(cur) != 2 or cur in visited:
                return None
            visited.add(cur)
            nxt = [w for w in core.adj[cur] if w != prev]
            if len(nxt) != 1:
                return None
            prev, cur = cur, nxt[0]
            length += 1
        lengths.append(length)
    if len(lengths) != 3 or len(visited) != len(comp):
        return None
    return lengths


def is_2_choosable(g):
    """Core-classification test for 2-choosability.

    Applied per connected component (lists never interact across
    components).  Returns ``(True, None)`` or ``(False, witness)`` where
    ``witness`` is one offending core component as a sorted tuple of ``g``'s
    vertex ids.
    """
    core, kept = compute_core(g)
    for verdict in classify_core(core):
        if not verdict.in_family:
            return False, tuple(sorted(kept[v] for v in verdict.vertices))
    return True, None


def is_L_colorable(g, lists):
    """Backtracking search for a proper coloring drawing each color from its list.

    ``lists`` maps every vertex to a non-empty collection of colors.
    Returns ``(True, coloring)`` or ``(False, None)``.
    """
    ordered = []
    for v in range(g.n):
        if v not in lists or not lists[v]:
            raise ValueError("vertex %d has no color list" % v)
        ordered.append(tuple(sorted(set(lists[v]))))
    earlier = [[u for u in g.adj[v] if u < v] for v in range(g.n)]
    chosen = [0] * g.n

    def place(v):
        if v == g.n:
            return True
        for c in ordered[v]:
            if all(chosen[u] != c for u in earlier[v]):
                chosen[v] = c
                if place(v + 1):
                    return True
        return False

    if place(0):
        return True, {v: chosen[v] for v in range(g.n)}
    return False, None


def is_k_choosable_exhaustive(g, k, budget=None, cap=None):
    """Exhaustive k-choosability oracle, independent of the core classification.

    Enumerates k-list assignments canonically up to color renaming (vertices
    in ascending id order; a new color may only be introduced as the smallest
    unused integer) and checks colorability of each.  Returns ``(True, None)``
    or ``(False, assignment)`` with a non-colorable witness assignment.

    A "false" answer short-circuits and therefore scales beyond the size cap;
    a "true" answer requires n within the cap (default 6 for k=2).  Raises
    BudgetExceededError carrying progress statistics when the budget runs out.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if cap is None:
        cap = _ORACLE_CAPS.get(k, 4)
    bud = Budget.ensure(budget)
    if g.n > cap and bud.limit is None:
        raise ValueError(
            "n=%d exceeds the cap %d for full enumeration; pass a budget to "
            "hunt for a counterexample anyway" % (g.n, cap))
    stats = {"assignments": 0}
    earlier = [[u for u in g.adj[v] if u < v] for v in range(g.n)]
    lists = []

    def bad_witness():
        # complete the current partial assignment with fresh colors
        used = max((c for lst in lists for c in lst), default=0)
        witness = {v: lists[v] for v in range(len(lists))}
        for v in range(len(lists), g.n):
            witness[v] = tuple(range(used + 1, used + k + 1))
            used += k
        return witness

    def enumerate_lists(v, used, colorings):
        """DFS over canonical lists; ``colorings`` = feasible prefix colorings."""
        if v == g.n:
            stats["assignments"] += 1
            return True
        nbrs = earlier[v]
        for n_new in range(k + 1):
            n_old = k - n_new
            new_part = tuple(range(used + 1, used + n_new + 1))
            for old_part in combinations(range(1, used + 1), n_old):
                bud.charge(stage="oracle", **stats)
                lst = old_part + new_part
                lists.append(lst)
                extended = []
                append = extended.append
                for coloring in colorings:
                    for c in lst:
                        for u in nbrs:
                            if coloring[u] == c:
                                break
                        else:
                            append(coloring + (c,))
                if not extended:
                    stats["assignments"] += 1
                    return False    # prefix already uncolorable
                if not enumerate_lists(v + 1, used + n_new, extended):
                    return False
                lists.pop()
        return True

    if enumerate_lists(0, 0, [()]):
        return True, None
    return False, bad_witness()


def format_list_assignment(lists):
    """Serialize a list assignment as lines ``v: c1 c2 ...`` with 1-based ids."""
    out = []
    for v in sorted(lists):
        out.append("%d: %s" % (v + 1, " ".join(str(c) for c in sorted(lists[v]))))
    return "\n".join(out)


def parse_list_assignment(text):
    """Inverse of :func:`format_list_assignment`."""
    lists = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        head, _, tail = line.partition(":")
        v = int(head) - 1
        lists[v] = tuple(int(tok) for tok in tail.split())
    return lists
