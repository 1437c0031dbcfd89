"""Generators and verifiers for the hardness constructions.

Everything here builds plain graphs plus per-vertex role annotations so the
structural claims (vertex counts, embedded subgraph copies, decomposition
recipes) can be re-checked mechanically rather than trusted.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil

from .errors import InternalCheckError
from .exact import Decomposition, maximal_independent_sets
from .graphs import Graph, coloring_is_proper, delete_vertices, induced_subgraph
from .recognition import is_2_choosable


@dataclass(frozen=True)
class CnfFormula:
    """A 3-CNF instance: clauses of exactly three distinct signed literals.

    ``rotation`` optionally reorders each clause's attachment slots for the
    planar construction: entry j is a permutation (a, b, c) of (1, 2, 3)
    meaning attachment points 1..3 of clause j receive literal slots a, b, c.
    """

    num_vars: int
    clauses: tuple
    rotation: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))
        if self.num_vars < 1:
            raise ValueError("need at least one variable")
        for idx, clause in enumerate(self.clauses, 1):
            if len(clause) != 3:
                raise ValueError("clause %d has %d literals; need exactly 3" % (idx, len(clause)))
            if len(set(clause)) != 3:
                raise ValueError("clause %d repeats a literal" % idx)
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError("literal %d of clause %d out of range" % (lit, idx))
        if self.rotation is not None:
            rot = tuple(tuple(r) for r in self.rotation)
            if len(rot) != len(self.clauses):
                raise ValueError("need one rotation entry per clause")
            for idx, r in enumerate(rot, 1):
                if sorted(r) != [1, 2, 3]:
                    raise ValueError("rotation of clause %d is not a permutation of 1..3" % idx)
            object.__setattr__(self, "rotation", rot)

    @property
    def num_clauses(self):
        return len(self.clauses)

    def rotation_of(self, j):
        if self.rotation is None:
            return (1, 2, 3)
        return self.rotation[j - 1]

    def to_dict(self):
        return {"num_vars": self.num_vars,
                "clauses": [list(c) for c in self.clauses],
                "rotation": None if self.rotation is None else [list(r) for r in self.rotation]}

    @classmethod
    def from_dict(cls, data):
        rot = data.get("rotation")
        return cls(data["num_vars"], tuple(tuple(c) for c in data["clauses"]),
                   None if rot is None else tuple(tuple(r) for r in rot))

    def satisfies(self, tau):
        tau = normalize_assignment(self, tau)
        return all(any(literal_true(lit, tau) for lit in clause) for clause in self.clauses)


def normalize_assignment(phi, tau):
    """Accept a dict {var: bool} or a sequence of n truth values; return a dict."""
    if isinstance(tau, dict):
        out = {i: bool(tau[i]) for i in range(1, phi.num_vars + 1)}
    else:
        values = list(tau)
        if len(values) != phi.num_vars:
            raise ValueError("assignment has %d values; need %d" % (len(values), phi.num_vars))
        out = {i: bool(values[i - 1]) for i in range(1, phi.num_vars + 1)}
    return out


def literal_true(lit, tau):
    return tau[abs(lit)] if lit > 0 else not tau[abs(lit)]


@dataclass
class ReductionArtifact:
    """Output graph plus per-vertex role records and construction metadata."""

    kind: str
    graph: Graph
    roles: dict
    meta: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# the 17-vertex constraint graph
# ---------------------------------------------------------------------------

P_LABELS = ("v1", "v2", "v3") + tuple("w%d" % t for t in range(1, 15))

P_EDGES_BY_LABEL = (
    ("w1", "w2"), ("w1", "w12"), ("w1", "w8"), ("w1", "w6"), ("w1", "v2"),
    ("w2", "v1"), ("w2", "w3"),
    ("w3", "w13"), ("w3", "v3"), ("w3", "w7"), ("w3", "w11"),
    ("v1", "w12"), ("v1", "w13"), ("v1", "w8"), ("v1", "w11"),
    ("v2", "w4"), ("v2", "w9"), ("v2", "w5"),
    ("v3", "w5"), ("v3", "w14"), ("v3", "w10"),
    ("w4", "w6"), ("w4", "w14"),
    ("w5", "w7"),
    ("w6", "w9"), ("w6", "w10"),
    ("w7", "w10"),
    ("w8", "w9"),
    ("w9", "w12"),
    ("w10", "w11"), ("w10", "w13"),
)

#: the unique maximal independent set containing {v1, v2, v3}
UNIQUE_EXTENSION_LABELS = ("v1", "v2", "v3", "w6", "w7")

#: independent extensions of every proper subset of {v1, v2, v3}, keyed by
#: the subset's slot numbers; each complement induces a 2-choosable graph
EXTENSION_TABLE = {
    frozenset(): ("w1", "w3", "w4", "w5", "w9", "w10"),
    frozenset({1}): ("v1", "w1", "w3", "w4", "w5", "w9", "w10"),
    frozenset({2}): ("v2", "w2", "w6", "w7", "w8", "w11", "w12", "w13"),
    frozenset({3}): ("v3", "w2", "w6", "w7", "w8", "w11", "w12", "w13"),
    frozenset({1, 2}): ("v1", "v2", "w3", "w10", "w14"),
    frozenset({1, 3}): ("v1", "v3", "w1", "w7", "w9"),
    frozenset({2, 3}): ("v2", "v3", "w2", "w6", "w7", "w12", "w13"),
}

#: the independent set whose members have exactly one neighbour among v1..v3
SINGLE_CONTACT_LABELS = ("w1", "w3", "w4", "w9", "w10")

ODD_CYCLE_LABELS = ("v2", "w5", "v3", "w14", "w4")

P_INDEX = {label: i for i, label in enumerate(P_LABELS)}


def constraint_graph_P():
    """The frozen 17-vertex, 31-edge constraint graph with label roles."""
    edges = [(P_INDEX[a], P_INDEX[b]) for a, b in P_EDGES_BY_LABEL]
    g = Graph(len(P_LABELS), edges, labels=P_LABELS)
    roles = {P_INDEX[lab]: {"role": "constraint-p", "label": lab} for lab in P_LABELS}
    return ReductionArtifact("constraint-p", g, roles)


def verify_lemma_2_2(art):
    """Re-check the three structural claims about the constraint graph.

    (a) the listed odd 5-cycle exists; (b) the listed set is the unique
    maximal independent set containing {v1, v2, v3} and removing it leaves a
    graph that is not 2-choosable; (c) each tabulated extension is an
    independent set meeting {v1, v2, v3} exactly in its subset and its
    complement induces a 2-choosable graph.  Failures are report entries,
    not exceptions.
    """
    g = art.graph
    idx = P_INDEX
    report = {}

    cyc = [idx[lab] for lab in ODD_CYCLE_LABELS]
    closed = all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))
    report["odd_cycle"] = {
        "ok": closed and len(cyc) % 2 == 1 and len(set(cyc)) == len(cyc),
        "cycle": list(ODD_CYCLE_LABELS),
    }

    u = {idx["v1"], idx["v2"], idx["v3"]}
    expected = tuple(sorted(idx[lab] for lab in UNIQUE_EXTENSION_LABELS))
    supersets = [mis for mis in maximal_independent_sets(g) if u <= set(mis)]
    remainder = delete_vertices(g, expected)[0]
    remainder_ok, _ = is_2_choosable(remainder)
    report["unique_extension"] = {
        "ok": supersets == [expected] and not remainder_ok,
        "extension": list(UNIQUE_EXTENSION_LABELS),
        "maximal_supersets_found": len(supersets),
        "core_outside_family": not remainder_ok,
    }

    entries = []
    for slots in sorted(EXTENSION_TABLE, key=lambda s: (len(s), sorted(s))):
        labels = EXTENSION_TABLE[slots]
        ext = {idx[lab] for lab in labels}
        independent = not any(a in ext and b in ext for a, b in g.edges)
        meets = ext & u == {idx["v%d" % r] for r in slots}
        rest_ok, _ = is_2_choosable(delete_vertices(g, ext)[0])
        entries.append({
            "subset": sorted("v%d" % r for r in slots),
            "extension": list(labels),
            "independent": independent,
            "meets_subset_exactly": meets,
            "remainder_2_choosable": rest_ok,
            "ok": independent and meets and rest_ok,
        })
    report["extensions"] = entries
    report["ok"] = (report["odd_cycle"]["ok"] and report["unique_extension"]["ok"]
                    and all(e["ok"] for e in entries))
    return report


# ---------------------------------------------------------------------------
# the satisfiability-to-decomposition construction
# ---------------------------------------------------------------------------

def _h_layout(n, k):
    rows = n + 14 * k

    def tid(s, row, col):
        return ((s - 1) * rows + (row - 1)) * 34 + (col - 1)

    def fid(s, row, col):
        return tid(s, row, col) + 17

    def dom(s, col):
        return 34 * rows * k + (s - 1) * 17 + (col - 1)

    d0 = 34 * rows * k + 17 * k
    return rows, tid, fid, dom, d0


def _identified_vertices(phi, s, tid, fid):
    """Map constraint-graph labels to vertex ids for clause gadget s."""
    n = phi.num_vars
    clause = phi.clauses[s - 1]
    vmap = {}
    for r, lit in enumerate(clause, 1):
        row = abs(lit)
        vmap["v%d" % r] = tid(s, row, r) if lit > 0 else fid(s, row, r)
    for t in range(1, 15):
        vmap["w%d" % t] = tid(s, n + 14 * (s - 1) + t, t + 3)
    return vmap


def build_H_phi(phi):
    """Array-of-rows satisfiability graph with embedded constraint copies.

    One gadget per clause: n + 14k paired rows of 17 columns (a true and a
    false vertex per position) plus a dominating row; each global row of the
    merged graph induces a complete bipartite graph between true and false
    vertices minus the pairing; an apex vertex is adjacent to the whole
    dominating row; each gadget carries one relabelled copy of the
    constraint graph on its designated vertices.
    """
    n, k = phi.num_vars, phi.num_clauses
    if k < 1:
        raise ValueError("need at least one clause")
    rows, tid, fid, dom, d0 = _h_layout(n, k)
    edges = set()

    positions = [(s, c) for s in range(1, k + 1) for c in range(1, 18)]
    for row in range(1, rows + 1):
        for s, c in positions:
            t = tid(s, row, c)
            for s2, c2 in positions:
                if (s, c) != (s2, c2):
                    f = fid(s2, row, c2)
                    edges.add((t, f) if t < f else (f, t))

    for s, c in positions:
        d = dom(s, c)
        for row in range(1, rows + 1):
            edges.add((tid(s, row, c), d))
            edges.add((fid(s, row, c), d))
        edges.add((d, d0))

    p_maps = {}
    for s in range(1, k + 1):
        vmap = _identified_vertices(phi, s, tid, fid)
        p_maps[s] = vmap
        for a, b in P_EDGES_BY_LABEL:
            x, y = vmap[a], vmap[b]
            edges.add((x, y) if x < y else (y, x))

    roles = {}
    label_of = {}
    for s, vmap in p_maps.items():
        for lab, vid in vmap.items():
            label_of[vid] = lab
    for row in range(1, rows + 1):
        in_variable_block = row <= n
        for s, c in positions:
            block = None if in_variable_block else (row - n - 1) // 14 + 1
            block_row = None if in_variable_block else (row - n - 1) % 14 + 1
            for vid, side in ((tid(s, row, c), "true"), (fid(s, row, c), "false")):
                rec = {"role": ("variable-" if in_variable_block else "clause-") + side,
                       "gadget": s, "row": row, "col": c}
                if not in_variable_block:
                    rec["block"] = block
                    rec["block_row"] = block_row
                if vid in label_of:
                    rec["p_label"] = label_of[vid]
                roles[vid] = rec
    for s, c in positions:
        roles[dom(s, c)] = {"role": "dominating", "gadget": s, "col": c}
    roles[d0] = {"role": "d0"}

    g = Graph(34 * rows * k + 17 * k + 1, sorted(edges))
    meta = {"formula": phi.to_dict(), "n": n, "k": k, "rows": rows}
    return ReductionArtifact("sat3", g, roles, meta)


_ROW_PAIRS = ((1, 2), (2, 1), (1, 3), (3, 1), (2, 3), (3, 2))

_W_CONTACT = {}
for _a, _b in P_EDGES_BY_LABEL:
    for _w, _v in ((_a, _b), (_b, _a)):
        if _w.startswith("w") and _v.startswith("v"):
            _W_CONTACT.setdefault(_w, []).append(_v)


def H_phi_four_coloring(art):
    """Search the row-uniform family for a proper 4-coloring.

    Every paired row gets uniform distinct colors from {1, 2, 3} for its
    true and false sides, the dominating row gets 4, the apex gets 1.  Rows
    are seeded with the intended rule (a designated row whose label has a
    single variable contact copies/opposes that contact's color; other
    designated rows start at (3, 2)) and a small backtracking search settles
    the rest.  Returns ``(assignment, details)``; failure to find any
    row-uniform coloring raises InternalCheckError.
    """
    phi = CnfFormula.from_dict(art.meta["formula"])
    n, k = phi.num_vars, phi.num_clauses
    rows, tid, fid, dom, d0 = _h_layout(n, k)

    constraints = [[] for _ in range(rows + 1)]     # row -> [(side, row2, side2)]
    single_contact = set(SINGLE_CONTACT_LABELS)
    seed_source = {}
    for s in range(1, k + 1):
        vmap = _identified_vertices(phi, s, tid, fid)
        side_of = {}
        row_of = {}
        for lab, vid in vmap.items():
            rec = art.roles[vid]
            side_of[lab] = "true" if rec["role"].endswith("true") else "false"
            row_of[lab] = rec["row"]
        for a, b in P_EDGES_BY_LABEL:
            ra, rb = row_of[a], row_of[b]
            constraints[ra].append((side_of[a], rb, side_of[b]))
            constraints[rb].append((side_of[b], ra, side_of[a]))
        for t in range(1, 15):
            lab = "w%d" % t
            if lab in single_contact:
                contact = _W_CONTACT[lab][0]
                seed_source[row_of[lab]] = (row_of[contact], side_of[contact])

    chosen = {}

    def seed_for(row):
        if row <= n:
            return (1, 2)
        if row in seed_source:
            src_row, src_side = seed_source[row]
            if src_row in chosen:
                contact_color = chosen[src_row][0 if src_side == "true" else 1]
                return (1, 2) if contact_color == 2 else (2, 1)
        return (3, 2)

    def consistent(row, pair):
        for side, row2, side2 in constraints[row]:
            if row2 not in chosen:
                continue
            mine = pair[0 if side == "true" else 1]
            theirs = chosen[row2][0 if side2 == "true" else 1]
            if mine == theirs:
                return False
        return True

    rules = {}

    def solve(row):
        if row > rows:
            return True
        seed = seed_for(row)
        candidates = [seed] + [p for p in _ROW_PAIRS if p != seed]
        for pair in candidates:
            if consistent(row, pair):
                chosen[row] = pair
                rules[row] = "seed" if pair == seed else "search"
                if solve(row + 1):
                    return True
                del chosen[row], rules[row]
        return False

    if not solve(1):
        raise InternalCheckError("no row-uniform 4-coloring exists")

    assignment = {d0: 1}
    for s in range(1, k + 1):
        for c in range(1, 18):
            assignment[dom(s, c)] = 4
            for row in range(1, rows + 1):
                y, z = chosen[row]
                assignment[tid(s, row, c)] = y
                assignment[fid(s, row, c)] = z
    if not coloring_is_proper(art.graph, assignment):
        raise InternalCheckError("row-uniform coloring failed the edge re-check")
    return assignment, {"row_pairs": dict(chosen), "rules": rules}


def decomposition_from_assignment(art, tau):
    """Build the decomposition induced by a satisfying assignment.

    The apex joins A; a variable row sends the side matching the assignment
    to B and the mates to A; in each gadget the designated vertices of the
    false literals are extended via the tabulated independent set, and every
    designated row follows its designated vertex.  The result is validated
    (A independent, remainder 2-choosable) before being returned.
    """
    phi = CnfFormula.from_dict(art.meta["formula"])
    tau = normalize_assignment(phi, tau)
    if not phi.satisfies(tau):
        raise ValueError("assignment does not satisfy the formula")
    n, k = phi.num_vars, phi.num_clauses
    rows, tid, fid, dom, d0 = _h_layout(n, k)

    # per global row: which side goes to A
    a_side = {}
    for i in range(1, n + 1):
        a_side[i] = "false" if tau[i] else "true"
    for s in range(1, k + 1):
        clause = phi.clauses[s - 1]
        false_slots = frozenset(r for r, lit in enumerate(clause, 1)
                                if not literal_true(lit, tau))
        extension = set(EXTENSION_TABLE[false_slots])
        for t in range(1, 15):
            row = n + 14 * (s - 1) + t
            a_side[row] = "true" if ("w%d" % t) in extension else "false"

    a = {d0}
    for s in range(1, k + 1):
        for row in range(1, rows + 1):
            pick = tid if a_side[row] == "true" else fid
            for c in range(1, 18):
                a.add(pick(s, row, c))

    b = tuple(v for v in range(art.graph.n) if v not in a)
    a = tuple(sorted(a))
    inside = set(a)
    if any(u in inside and v in inside for u, v in art.graph.edges):
        raise InternalCheckError("constructed A is not independent")
    ok, _ = is_2_choosable(induced_subgraph(art.graph, b)[0])
    if not ok:
        raise InternalCheckError("remainder of the constructed decomposition is not 2-choosable")
    return Decomposition(a, b)


# ---------------------------------------------------------------------------
# the inapproximability gadgets
# ---------------------------------------------------------------------------

class _ArtifactBuilder:
    def __init__(self):
        self.roles = {}
        self.edges = set()
        self.edge_records = []
        self.gadget_records = []

    def vertex(self, **record):
        vid = len(self.roles)
        self.roles[vid] = record
        return vid

    def edge(self, u, v):
        self.edges.add((u, v) if u < v else (v, u))

    def artifact(self, kind, **meta):
        g = Graph(len(self.roles), sorted(self.edges))
        meta = dict(meta)
        if self.edge_records:
            meta["edge_gadgets"] = self.edge_records
        if self.gadget_records:
            meta["forbidden_gadgets"] = self.gadget_records
        return ReductionArtifact(kind, g, self.roles, meta)


def _add_forbidden(builder, p, root, gadget_id):
    """Attach a root-core edge plus p+1 four-cycle petals sharing the core."""
    if p < 1:
        raise ValueError("petal parameter p must be >= 1")
    builder.roles[root]["roots_gadget"] = gadget_id
    core = builder.vertex(role="gadget-core", gadget=gadget_id)
    builder.edge(root, core)
    for petal in range(p + 1):
        a = builder.vertex(role="petal", gadget=gadget_id, petal=petal)
        b = builder.vertex(role="petal", gadget=gadget_id, petal=petal)
        c = builder.vertex(role="petal", gadget=gadget_id, petal=petal)
        builder.edge(core, a)
        builder.edge(a, b)
        builder.edge(b, c)
        builder.edge(c, core)
    builder.gadget_records.append({"gadget": gadget_id, "root": root, "core": core, "p": p})
    return core


def build_forbidden_gadget(p):
    """Standalone forbidden gadget on exactly 3p+5 vertices (fresh root)."""
    builder = _ArtifactBuilder()
    root = builder.vertex(role="gadget-root")
    _add_forbidden(builder, p, root, "standalone")
    return builder.artifact("forbidden-gadget", p=p, root=root)


def _add_clause_gadget(builder, p, j):
    """Hexagon w1 c2 w2 c1 w3 c3 with chord w1-c1; forbidden gadget on each w."""
    c = {r: builder.vertex(role="hexagon-c", clause=j, slot=r) for r in (1, 2, 3)}
    w = {r: builder.vertex(role="hexagon-w", clause=j, slot=r) for r in (1, 2, 3)}
    ring = (w[1], c[2], w[2], c[1], w[3], c[3])
    for i, u in enumerate(ring):
        builder.edge(u, ring[(i + 1) % 6])
    builder.edge(w[1], c[1])
    for r in (1, 2, 3):
        _add_forbidden(builder, p, w[r], ("clause", j, r))
    return c, w


def build_clause_gadget_planar(p):
    """Standalone clause gadget on 9p+18 vertices."""
    builder = _ArtifactBuilder()
    c, w = _add_clause_gadget(builder, p, 1)
    return builder.artifact("clause-gadget", p=p,
                            c_vertices=[c[r] for r in (1, 2, 3)],
                            w_vertices=[w[r] for r in (1, 2, 3)])


def _add_edge_gadget(builder, kind, p, x, c, edge_id):
    """Wire one variable-to-clause connection; endpoints already exist."""
    eid = list(edge_id)
    if kind == "positive":
        blacks = [builder.vertex(role="edge-plain", edge=eid) for _ in range(10)]
        b1, b2, b3, b4, b5, b6, b7, b8, b9, b10 = blacks
        r1 = builder.vertex(role="edge-red", edge=eid)
        mid = builder.vertex(role="edge-blue", edge=eid)
        r2 = builder.vertex(role="edge-red", edge=eid)
        for u, v in ((c, b1), (b1, b2), (b2, r1), (r1, b3), (b3, b4), (b4, c),
                     (r1, b5), (b5, b6), (b6, mid), (mid, r2),
                     (r2, b7), (b7, b8), (b8, mid), (b7, r1),
                     (r2, b9), (b9, b10), (b10, x), (x, r2),
                     (mid, r1), (r1, c), (b6, b9)):
            builder.edge(u, v)
        blue, red = [c, mid, x], [r1, r2]
    elif kind == "negative":
        blacks = [builder.vertex(role="edge-plain", edge=eid) for _ in range(4)]
        n1, n2, n3, n4 = blacks
        for u, v in ((c, n1), (n1, n2), (n2, x), (x, n3), (n3, n4), (n4, c), (c, x)):
            builder.edge(u, v)
        blue, red = [c], [x]
    else:
        raise ValueError("edge gadget kind must be 'positive' or 'negative'")
    for serial, b in enumerate(blacks):
        _add_forbidden(builder, p, b, ("edge", *edge_id, serial))
    builder.edge_records.append({
        "edge": eid, "kind": kind, "x": x, "c": c, "blue": blue, "red": red,
        "blacks": blacks,
    })


def build_edge_gadget(kind, p):
    """Standalone positive or negative edge gadget with fresh endpoints."""
    builder = _ArtifactBuilder()
    x = builder.vertex(role="variable", var=1)
    c = builder.vertex(role="hexagon-c", clause=1, slot=1)
    _add_edge_gadget(builder, kind, p, x, c, (1, 1))
    return builder.artifact("edge-gadget", p=p, kind_detail=kind, x=x, c=c)


def build_G_phi_p(phi, p):
    """Replace clause vertices by clause gadgets and incidences by edge gadgets.

    Attachment point r of clause j receives the literal slot given by the
    clause's rotation (identity when absent); the connection is a positive
    or negative gadget per the literal's polarity, sharing the variable
    vertex and the hexagon attachment vertex.
    """
    if p < 1:
        raise ValueError("petal parameter p must be >= 1")
    builder = _ArtifactBuilder()
    xs = {i: builder.vertex(role="variable", var=i) for i in range(1, phi.num_vars + 1)}
    for j, clause in enumerate(phi.clauses, 1):
        c, _ = _add_clause_gadget(builder, p, j)
        rot = phi.rotation_of(j)
        for r in (1, 2, 3):
            slot = rot[r - 1]
            lit = clause[slot - 1]
            kind = "positive" if lit > 0 else "negative"
            _add_edge_gadget(builder, kind, p, xs[abs(lit)], c[r], (j, r))
    return builder.artifact("planar3sat", p=p, formula=phi.to_dict())


def deletion_set_from_assignment(art, tau):
    """Independent deletion set induced by a satisfying assignment.

    Takes every forbidden-gadget core, the blue vertices of positive
    connections whose variable is true (red otherwise), and per negative
    connection the red vertex when the variable is true (blue otherwise).
    Validated before being returned.
    """
    phi = CnfFormula.from_dict(art.meta["formula"])
    tau = normalize_assignment(phi, tau)
    if not phi.satisfies(tau):
        raise ValueError("assignment does not satisfy the formula")
    a = set()
    for record in art.meta["forbidden_gadgets"]:
        a.add(record["core"])
    for record in art.meta["edge_gadgets"]:
        var = art.roles[record["x"]]["var"]
        if record["kind"] == "positive":
            a.update(record["blue"] if tau[var] else record["red"])
        else:
            a.update(record["red"] if tau[var] else record["blue"])
    a = tuple(sorted(a))
    inside = set(a)
    if any(u in inside and v in inside for u, v in art.graph.edges):
        raise InternalCheckError("constructed deletion set is not independent")
    ok, _ = is_2_choosable(delete_vertices(art.graph, a)[0])
    if not ok:
        raise InternalCheckError("remainder after deletion is not 2-choosable")
    return a


def compute_paper_p(k, epsilon):
    """Petal parameter (280k)^ceil((2-eps)/eps) as an exact integer.

    ``epsilon`` may be a Fraction, int, or float in (0, 1]; floats are
    snapped to the nearest small fraction so exact ceilings survive.
    """
    if isinstance(epsilon, float):
        epsilon = Fraction(epsilon).limit_denominator(1_000_000)
    epsilon = Fraction(epsilon)
    if not 0 < epsilon <= 1:
        raise ValueError("epsilon must lie in (0, 1]")
    exponent = ceil((2 - epsilon) / epsilon)
    return (280 * k) ** exponent


def triangle_reduction(g):
    """Copy of g plus one new vertex per edge forming a triangle with it."""
    edges = list(g.edges)
    new_edges = list(edges)
    roles = {v: {"role": "original", "source": v} for v in range(g.n)}
    for i, (u, v) in enumerate(edges):
        ve = g.n + i
        roles[ve] = {"role": "edge-vertex", "source": [u, v]}
        new_edges.append((u, ve))
        new_edges.append((v, ve))
    out = Graph(g.n + len(edges), new_edges)
    return ReductionArtifact("vc-triangle", out, roles,
                             {"n": g.n, "m": len(edges)})
