"""Contraction-based 2-choosability test and the short-cycle deletion heuristic.

``preprocess`` peels degree-1 vertices and replaces every maximal chain of
two or more adjacent degree-2 vertices by a single counted vertex (a cycle
component contracts all but one of its vertices, yielding a two-vertex
parallel pair).  After preprocessing, a connected graph is 2-choosable
exactly when it lands in one of three counted shapes; ``approx_2_del``
repeatedly deletes a shortest cycle of the contracted graph until nothing
is left, then expands each contracted vertex back to the first original
vertex of its chain.
"""

from dataclasses import dataclass

from .errors import InternalCheckError
from .graphs import (CountedMultiGraph, connected_components, delete_vertices,
                     multigraph_delete, multigraph_restrict, shortest_cycle)
from .recognition import is_2_choosable

KIND_K1_COUNTED = "K1-counted"
KIND_PARALLEL_PAIR_EVEN = "parallel-pair-even-sum"
KIND_K23_ONE_ODD = "K23-one-odd-count"
KIND_NOT_IN_FAMILY = "not-in-family"


@dataclass(frozen=True)
class CPrimeVerdict:
    kind: str
    vertices: tuple

    @property
    def in_family(self):
        return self.kind != KIND_NOT_IN_FAMILY


def preprocess(mg):
    """Peel degree-1 vertices and contract degree-2 chains to a fixpoint.

    Contracted vertices carry the summed count and the concatenated
    provenance of their chain in path order.  Chains are located by
    ascending seed id; a path is oriented from its smaller-id endpoint; a
    cycle component is traversed from its smallest vertex towards that
    vertex's smaller neighbour and the last vertex is left out.
    """
    state = _MutableMulti(mg)
    state.peel_degree_one()
    while True:
        if not state.contract_one_chain():
            break
        state.peel_degree_one()
    return state.freeze()


class _MutableMulti:
    """Working representation for preprocessing; ids grow, then compact."""

    def __init__(self, mg):
        self.adj = {v: sorted(mg.adj[v]) for v in range(mg.n)}
        self.counts = {v: mg.counts[v] for v in range(mg.n)}
        self.prov = {v: mg.provenance[v] for v in range(mg.n)}
        self.next_id = mg.n

    def remove_vertex(self, v):
        for u in self.adj[v]:
            self.adj[u].remove(v)
        del self.adj[v], self.counts[v], self.prov[v]

    def peel_degree_one(self):
        queue = [v for v in sorted(self.adj) if len(self.adj[v]) == 1]
        while queue:
            v = queue.pop(0)
            if v not in self.adj or len(self.adj[v]) != 1:
                continue
            u = self.adj[v][0]
            self.remove_vertex(v)
            if len(self.adj[u]) == 1:
                queue.append(u)

    def contract_one_chain(self):
        skip = set()
        for v in sorted(self.adj):
            if v in skip or len(self.adj[v]) != 2:
                continue
            a, b = self.adj[v]
            if a == b:
                continue    # member of a parallel pair, never contracted
            path = self._chain_or_cycle_path(v)
            if path is None or len(path) < 2:
                skip.update(path or [v])
                continue
            self._contract(path)
            return True
        return False

    def _chain_or_cycle_path(self, v):
        """Maximal run of degree-2 vertices through v, oriented canonically.

        Returns the path to contract, or None when the run is a single
        vertex.  For a cycle component the path spans all vertices but one.
        """
        comp = self._component(v)
        if all(len(self.adj[u]) == 2 for u in comp):
            # the component is a cycle (or a parallel pair when len == 2)
            if len(comp) < 3:
                return None
            start = min(comp)
            nxt = min(self.adj[start])
            order = [start, nxt]
            while True:
                prev, cur = order[-2], order[-1]
                a, b = self.adj[cur]
                step = b if a == prev else a
                if step == start:
                    break
                order.append(step)
            return order[:-1]
        run = [v]
        for direction, side in enumerate(self.adj[v]):
            prev, cur = v, side
            while len(self.adj[cur]) == 2:
                a, b = self.adj[cur]
                if a == b:
                    break
                if direction == 0:
                    run.insert(0, cur)
                else:
                    run.append(cur)
                prev, cur = cur, (b if a == prev else a)
        if len(run) < 2:
            return None
        if run[0] > run[-1]:
            run.reverse()
        return run

    def _component(self, v):
        seen = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in self.adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    def _contract(self, path):
        first, last = path[0], path[-1]
        in_path = set(path)
        w = [u for u in self.adj[first] if u not in in_path][0]
        z = [u for u in self.adj[last] if u not in in_path][0]
        s = self.next_id
        self.next_id += 1
        self.counts[s] = sum(self.counts[u] for u in path)
        self.prov[s] = tuple(x for u in path for x in self.prov[u])
        for u in path:
            self.remove_vertex(u)
        self.adj[s] = sorted((w, z))
        self.adj[w].append(s)
        self.adj[w].sort()
        self.adj[z].append(s)
        self.adj[z].sort()

    def freeze(self):
        kept = sorted(self.adj)
        index = {v: i for i, v in enumerate(kept)}
        edges = []
        for v in kept:
            for u in self.adj[v]:
                if v < u:
                    edges.append((index[v], index[u]))
        return CountedMultiGraph(
            len(kept), edges,
            counts=tuple(self.counts[v] for v in kept),
            provenance=tuple(self.prov[v] for v in kept))


def classify_c_prime(component):
    """Classify one connected, fully preprocessed counted component."""
    for v in range(component.n):
        if component.degree(v) == 1:
            raise ValueError("degree-1 vertex %d present; input is not preprocessed" % v)
    vertices = tuple(range(component.n))
    if component.n == 1:
        return CPrimeVerdict(KIND_K1_COUNTED, vertices)
    if component.n == 2 and len(component.edges) == 2:
        if sum(component.counts) % 2 == 0:
            return CPrimeVerdict(KIND_PARALLEL_PAIR_EVEN, vertices)
        return CPrimeVerdict(KIND_NOT_IN_FAMILY, vertices)
    if _is_counted_k23(component):
        return CPrimeVerdict(KIND_K23_ONE_ODD, vertices)
    return CPrimeVerdict(KIND_NOT_IN_FAMILY, vertices)


def _is_counted_k23(c):
    """Underlying K_{2,3}; hub counts 1; at most one count>1, odd, on a degree-2 vertex."""
    if c.n != 5 or len(c.edges) != 6 or len(set(c.edges)) != 6:
        return False
    hubs = [v for v in range(5) if c.degree(v) == 3]
    legs = [v for v in range(5) if c.degree(v) == 2]
    if len(hubs) != 2 or len(legs) != 3:
        return False
    if any(set(c.adj[v]) != set(hubs) for v in legs):
        return False
    if any(c.counts[h] != 1 for h in hubs):
        return False
    heavy = [v for v in legs if c.counts[v] > 1]
    if len(heavy) > 1:
        return False
    return all(c.counts[v] % 2 == 1 for v in heavy)


def preprocessed_components(mg):
    """Split a counted multigraph into its connected component multigraphs."""
    return [multigraph_restrict(mg, comp) for comp in connected_components(mg)]


def is_2_choosable_via_preprocessing(g):
    """Contraction-pipeline test for 2-choosability.

    Lifts the simple graph to unit counts, preprocesses, and accepts exactly
    when every component classifies into the counted family.
    """
    reduced = preprocess(CountedMultiGraph.from_graph(g))
    return all(classify_c_prime(comp).in_family for comp in preprocessed_components(reduced))


def approx_2_del(g):
    """Greedy short-cycle deletion heuristic for 2-choosable deletion.

    Preprocess, drop the components already in the counted family, then
    repeatedly remove a shortest cycle of the contracted graph (re-preprocessing
    and re-dropping after each removal).  Each removed contracted vertex is
    expanded to the first original vertex of its chain.  The returned set is
    re-validated; failure raises InternalCheckError.
    """
    work = preprocess(CountedMultiGraph.from_graph(g))
    work = _drop_family_components(work)
    chosen = []
    while work.n:
        cycle = shortest_cycle(work)
        if cycle is None:
            raise InternalCheckError("contracted graph is acyclic but non-empty")
        for v in cycle:
            chosen.append(work.provenance[v][0])
        work = preprocess(multigraph_delete(work, cycle))
        work = _drop_family_components(work)
    result = tuple(sorted(set(chosen)))
    if len(result) != len(chosen):
        raise InternalCheckError("expanded deletion picks collided")
    ok, _ = is_2_choosable(delete_vertices(g, result)[0])
    if not ok:
        raise InternalCheckError("deletion set does not leave a 2-choosable graph")
    return result


def _drop_family_components(mg):
    doomed = []
    for comp in connected_components(mg):
        if classify_c_prime(multigraph_restrict(mg, comp)).in_family:
            doomed.extend(comp)
    if not doomed:
        return mg
    return multigraph_delete(mg, doomed)
