"""Desk-scale exact solvers for the deletion and decomposition problems.

All searches are budgeted by node-expansion counters (never wall clock) and
break ties deterministically.  Size caps guard the combinatorial blow-up;
callers may raise them explicitly.
"""

from dataclasses import dataclass
from itertools import combinations

from .errors import Budget
from .graphs import CountedMultiGraph, delete_vertices, induced_subgraph, shortest_cycle
from .recognition import KIND_OUTSIDE, classify_core, compute_core, is_2_choosable

DEFAULT_NEAR3_CAP = 25
DEFAULT_DEL_CAP = 20


@dataclass(frozen=True)
class Decomposition:
    """Vertex partition (a, b) with ``a`` independent and ``b`` inducing a 2-choosable graph."""

    a: tuple
    b: tuple


def decomposition_is_valid(g, decomp):
    a, b = set(decomp.a), set(decomp.b)
    if a & b or (a | b) != set(range(g.n)):
        return False
    if any(u in a and v in a for u, v in g.edges):
        return False
    return is_2_choosable(induced_subgraph(g, b)[0])[0]


def near_3_decide(g, budget=None, cap=DEFAULT_NEAR3_CAP):
    """Find a decomposition (A, B) with A independent and G[B] 2-choosable.

    Only maximal independent sets are tried: removing more vertices keeps
    the remainder 2-choosable, so if any (A, B) works then every maximal
    independent superset of A works too.  Returns a Decomposition or None.
    """
    if g.n > cap:
        raise ValueError("n=%d exceeds cap %d" % (g.n, cap))
    bud = Budget.ensure(budget)
    for mis in _maximal_independent_sets(g, bud):
        bud.charge(stage="near3-check")
        rest = tuple(v for v in range(g.n) if v not in set(mis))
        if is_2_choosable(induced_subgraph(g, rest)[0])[0]:
            return Decomposition(tuple(mis), rest)
    return None


def maximal_independent_sets(g, budget=None):
    """All maximal independent sets, each sorted, in lexicographic order."""
    return list(_maximal_independent_sets(g, Budget.ensure(budget)))


def _maximal_independent_sets(g, bud):
    """Yield all maximal independent sets, each sorted, in lexicographic order."""
    adj = g.adj_sets()

    def extend(chosen, candidates, excluded):
        bud.charge(stage="mis-enumeration")
        if not candidates and not excluded:
            yield tuple(chosen)
            return
        cands = sorted(candidates)
        for v in cands:
            yield from extend(chosen + [v],
                              {u for u in candidates if u > v and u not in adj[v]},
                              {u for u in excluded if u not in adj[v]})
            candidates.discard(v)
            excluded.add(v)

    yield from extend([], set(range(g.n)), set())


def min_near_3(g, budget=None, cap=DEFAULT_NEAR3_CAP):
    """Minimum-size independent A with G minus A 2-choosable.

    Sizes are tried ascending and, within a size, candidate sets in
    lexicographic order, so the first hit is the lexicographically smallest
    optimum.  Returns (size, A) or None when no independent set works.
    """
    if g.n > cap:
        raise ValueError("n=%d exceeds cap %d" % (g.n, cap))
    bud = Budget.ensure(budget)
    adj = g.adj_sets()

    def independent_sets_of_size(t):
        def extend(chosen, start):
            bud.charge(stage="independent-set-enumeration")
            if len(chosen) == t:
                yield tuple(chosen)
                return
            for v in range(start, g.n - (t - len(chosen)) + 1):
                if all(v not in adj[u] for u in chosen):
                    chosen.append(v)
                    yield from extend(chosen, v + 1)
                    chosen.pop()

        yield from extend([], 0)

    for t in range(g.n + 1):
        any_candidate = False
        for cand in independent_sets_of_size(t):
            any_candidate = True
            bud.charge(stage="near3-check")
            rest = tuple(v for v in range(g.n) if v not in set(cand))
            if is_2_choosable(induced_subgraph(g, rest)[0])[0]:
                return t, cand
        if not any_candidate:
            break
    return None


def _branch_cycle(g, removed):
    """Shortest cycle of the first outside-family core component, in g's ids.

    Returns None when the remainder is 2-choosable.
    """
    rest, kept = delete_vertices(g, removed)
    core, core_kept = compute_core(rest)
    for verdict in classify_core(core):
        if verdict.kind == KIND_OUTSIDE:
            comp_graph, comp_kept = induced_subgraph(core, verdict.vertices)
            cycle = shortest_cycle(CountedMultiGraph.from_graph(comp_graph))
            return sorted(kept[core_kept[comp_kept[v]]] for v in cycle)
    return None


def min_2_del_exact(g, budget=None, cap=DEFAULT_DEL_CAP):
    """Minimum-size vertex set whose removal leaves a 2-choosable graph.

    Branch and bound: branch on the vertices of a shortest cycle of the
    first offending core component (deterministic order), keep the best
    (size, lexicographic) answer seen.  Returns (size, A).
    """
    if g.n > cap:
        raise ValueError("n=%d exceeds cap %d" % (g.n, cap))
    bud = Budget.ensure(budget)
    best = [None]
    seen = set()

    def rec(removed):
        bud.charge(stage="del2-branch")
        key = frozenset(removed)
        if key in seen:
            return
        seen.add(key)
        cycle = _branch_cycle(g, removed)
        if cycle is None:
            cand = (len(removed), tuple(sorted(removed)))
            if best[0] is None or cand < best[0]:
                best[0] = cand
            return
        if best[0] is not None and len(removed) + 1 > best[0][0]:
            return
        for v in cycle:
            rec(removed | {v})

    rec(frozenset())
    return best[0]


def min_vertex_cover_exact(g, budget=None, cap=DEFAULT_DEL_CAP):
    """Minimum vertex cover via branch and bound on the first uncovered edge."""
    if g.n > cap:
        raise ValueError("n=%d exceeds cap %d" % (g.n, cap))
    bud = Budget.ensure(budget)
    best = [None]
    seen = set()

    def first_uncovered(chosen):
        for u, v in g.edges:
            if u not in chosen and v not in chosen:
                return u, v
        return None

    def rec(chosen):
        bud.charge(stage="vc-branch")
        key = frozenset(chosen)
        if key in seen:
            return
        seen.add(key)
        edge = first_uncovered(chosen)
        if edge is None:
            cand = (len(chosen), tuple(sorted(chosen)))
            if best[0] is None or cand < best[0]:
                best[0] = cand
            return
        if best[0] is not None and len(chosen) + 1 > best[0][0]:
            return
        for v in edge:
            rec(chosen | {v})

    rec(frozenset())
    return best[0]


def min_2_del_bruteforce(g, budget=None):
    """Reference oracle: try all vertex subsets by ascending size, lexicographic."""
    bud = Budget.ensure(budget)
    for t in range(g.n + 1):
        for cand in combinations(range(g.n), t):
            bud.charge(stage="del2-bruteforce")
            if is_2_choosable(delete_vertices(g, cand)[0])[0]:
                return t, cand
    raise AssertionError("deleting all vertices always works")
