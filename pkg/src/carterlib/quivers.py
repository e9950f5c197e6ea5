"""Quiver mutation on skew-symmetrizable exchange matrices.

A quiver is an integer matrix b with a positive symmetrizer d
(diag(d) * b skew-symmetric); simply laced quivers have d = (1,...,1) and
b[i][j] counting arrows i -> j.  Matrix mutation restricts to the usual
arrow rule (reverse at k, compose through k, cancel 2-cycles) in the
skew-symmetric case, and is the standard mechanism behind the valued
types B, C, F4, G2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional

from .diagrams import CarterDiagram, abstract_diagram, canonical_form
from .roots import CapExceeded, build_root_system, cartan_pairing

_PRODUCT_TO_ORDER = {0: 2, 1: 3, 2: 4, 3: 6}


@dataclass(frozen=True)
class Quiver:
    b: tuple  # tuple of tuples of int
    d: tuple  # positive integer symmetrizer

    def __post_init__(self):
        n = len(self.b)
        if any(len(row) != n for row in self.b) or len(self.d) != n:
            raise ValueError("shape mismatch")
        if any(x <= 0 for x in self.d):
            raise ValueError("symmetrizer entries must be positive")
        for i in range(n):
            if self.b[i][i] != 0:
                raise ValueError("loops are not allowed")
            for j in range(n):
                if self.d[i] * self.b[i][j] != -self.d[j] * self.b[j][i]:
                    raise ValueError("matrix is not skew-symmetrizable")

    @property
    def n(self):
        return len(self.b)

    def is_simply_laced(self) -> bool:
        return all(x == 1 for x in self.d)

    def to_json(self) -> dict:
        return {"n": self.n, "b": [list(r) for r in self.b],
                "d": list(self.d)}

    @staticmethod
    def from_json(data) -> "Quiver":
        return Quiver(tuple(tuple(r) for r in data["b"]), tuple(data["d"]))

    def to_dot(self, name: str = "quiver") -> str:
        lines = [f"digraph {name} {{", "  node [shape=circle];"]
        for i in range(self.n):
            lines.append(f"  v{i};")
        for i in range(self.n):
            for j in range(self.n):
                if self.b[i][j] > 0:
                    label = "" if self.b[i][j] == self.b[j][i] * -1 == 1 \
                        else f' [label="({self.b[i][j]},{-self.b[j][i]})"]'
                    lines.append(f"  v{i} -> v{j}{label};")
        lines.append("}")
        return "\n".join(lines)


def mutate(q: Quiver, k: int) -> Quiver:
    """Exchange-matrix mutation at vertex k; an involution."""
    n = q.n
    if not 0 <= k < n:
        raise IndexError(f"vertex {k} out of range")
    b = q.b
    new = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == k or j == k:
                row.append(-b[i][j])
            else:
                row.append(b[i][j]
                           + (abs(b[i][k]) * b[k][j] + b[i][k] * abs(b[k][j])) // 2)
        new.append(tuple(row))
    return Quiver(tuple(new), q.d)


def canonical_quiver_key(q: Quiver) -> bytes:
    """Canonical byte string of (b, d) under simultaneous relabeling.

    Only one direction of each b entry is encoded: the reverse entry is
    forced by the symmetrizer.
    """
    n = q.n
    b, d = q.b, q.d

    colors = [0] * n
    while True:
        sigs = []
        for i in range(n):
            prof = sorted((d[j], b[i][j], b[j][i])
                          for j in range(n) if j != i)
            sigs.append((colors[i], d[i], tuple(prof)))
        ranking = {s: r for r, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if new == colors:
            break
        colors = new

    by_color = sorted(range(n), key=lambda i: (colors[i], i))
    best: list = [None]

    def enc(v, placed):
        out = [d[v]]
        for u in placed:
            out.append(b[v][u] + 8)  # offset keeps bytes nonnegative
        return bytes(out)

    def rec(perm, used, partial):
        if len(perm) == n:
            if best[0] is None or partial < best[0]:
                best[0] = partial
            return
        for i in by_color:
            if used[i]:
                continue
            if perm and colors[i] < colors[perm[-1]]:
                continue
            cand = partial + enc(i, perm)
            if best[0] is not None and cand > best[0][:len(cand)]:
                continue
            used[i] = True
            perm.append(i)
            rec(perm, used, cand)
            perm.pop()
            used[i] = False

    rec([], [False] * n, b"")
    return bytes([n]) + best[0]


def mutation_class(q: Quiver, cap: int = 100_000) -> dict:
    """All quivers mutation-equivalent to q, up to simultaneous relabeling.
    Returns {canonical key: representative}; raises :class:`CapExceeded`
    beyond ``cap`` classes."""
    start_key = canonical_quiver_key(q)
    seen = {start_key: q}
    frontier = [q]
    while frontier:
        nxt = []
        for cur in frontier:
            for k in range(cur.n):
                m = mutate(cur, k)
                key = canonical_quiver_key(m)
                if key not in seen:
                    if len(seen) >= cap:
                        raise CapExceeded(
                            f"mutation class exceeded cap {cap}", partial=seen)
                    seen[key] = m
                    nxt.append(m)
        frontier = nxt
    return seen


def underlying_graph(q: Quiver) -> CarterDiagram:
    """The underlying weighted undirected graph as an abstract diagram,
    via |b_ij * b_ji| in {0,1,2,3} -> pair order in {2,3,4,6}."""
    n = q.n
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            p = abs(q.b[i][j] * q.b[j][i])
            if p not in _PRODUCT_TO_ORDER:
                raise ValueError(f"entry product {p} outside finite type")
            if p:
                edges.append((i, j, _PRODUCT_TO_ORDER[p]))
    return abstract_diagram(n, edges)


def dynkin_quiver(type_label: str, rank: int) -> Quiver:
    """The canonically oriented valued quiver of a Dynkin diagram (edges
    directed from lower to higher canonical simple-root index)."""
    rs = build_root_system(type_label, rank)
    if not rs.is_crystallographic:
        raise ValueError("Dynkin quivers exist only for crystallographic types")
    simples = [rs.roots[s] for s in rs.simple_indices]
    n = len(simples)
    b = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            aij = cartan_pairing(simples[i], simples[j])
            aji = cartan_pairing(simples[j], simples[i])
            b[i][j] = int(-aij)
            b[j][i] = int(aji)
    # symmetrizer: proportional to 1/(root norm squared), scaled integral
    invs = []
    for s in simples:
        nn = Fraction(0)
        for x in s:
            nn += Fraction(x) * Fraction(x)
        invs.append(1 / nn)
    scale = lcm(*(f.denominator for f in invs)) * 1
    d = tuple(int(f * scale) for f in invs)
    from math import gcd
    g = 0
    for x in d:
        g = gcd(g, x)
    d = tuple(x // g for x in d)
    return Quiver(tuple(tuple(r) for r in b), d)


# ---------------------------------------------------------------------------
# structural checkers used as independent oracles in the tests


def _underlying_adj(q: Quiver):
    adj = {v: set() for v in range(q.n)}
    for i in range(q.n):
        for j in range(q.n):
            if q.b[i][j] > 0:
                adj[i].add(j)
                adj[j].add(i)
    return adj


def _biconnected_blocks(n, adj):
    """Vertex sets of the biconnected components (standard DFS)."""
    disc = [0] * n
    low = [0] * n
    timer = [1]
    stack = []
    blocks = []

    def dfs(v, parent):
        disc[v] = low[v] = timer[0]
        timer[0] += 1
        for u in adj[v]:
            if u == parent:
                continue
            if disc[u]:
                low[v] = min(low[v], disc[u])
                if disc[u] < disc[v]:
                    stack.append((v, u))
            else:
                stack.append((v, u))
                dfs(u, v)
                low[v] = min(low[v], low[u])
                if low[u] >= disc[v]:
                    block = set()
                    while True:
                        e = stack.pop()
                        block.update(e)
                        if e == (v, u):
                            break
                    blocks.append(block)

    for v in range(n):
        if not disc[v]:
            dfs(v, -1)
    return blocks


def _is_connected(n, adj, skip=frozenset()):
    verts = [v for v in range(n) if v not in skip]
    if not verts:
        return True
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u not in skip and u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(verts)


def _directed_triangles(q: Quiver):
    tris = set()
    n = q.n
    for i in range(n):
        for j in range(n):
            if q.b[i][j] > 0:
                for k in range(n):
                    if q.b[j][k] > 0 and q.b[k][i] > 0:
                        tris.add(frozenset((i, j, k)))
    return tris


def satisfies_type_A_class_conditions(q: Quiver) -> bool:
    """The four structural conditions characterizing the simply laced
    type-A mutation class: every cycle is a directed triangle, valency at
    most 4, and the triangle-membership conditions at valency 3 and 4."""
    if not q.is_simply_laced():
        return False
    n = q.n
    adj = _underlying_adj(q)
    if not _is_connected(n, adj):
        return False
    if any(abs(q.b[i][j]) > 1 for i in range(n) for j in range(n)):
        return False
    blocks = [b for b in _biconnected_blocks(n, adj) if len(b) >= 2]
    tris = _directed_triangles(q)
    for blk in blocks:
        if len(blk) == 3:
            if frozenset(blk) not in tris:
                return False  # undirected or chorded triangle
        elif len(blk) > 3:
            return False  # a cycle longer than 3 survives in such a block
    for v in range(n):
        val = len(adj[v])
        if val > 4:
            return False
        vtris = [t for t in tris if v in t]
        if val == 4 and (len(vtris) != 2
                         or set().union(*vtris) - {v} != adj[v]):
            return False
        if val == 3 and len(vtris) != 1:
            return False
        if val == 3:
            other = adj[v] - set().union(*vtris)
            if len(other) != 1:
                return False
    return True


def _connecting_vertex(q: Quiver, v: int, inside: set) -> bool:
    adj = {u: q_adj & inside for u, q_adj in _underlying_adj(q).items()}
    val = len(adj[v])
    if val > 2:
        return False
    if val == 2:
        tris = [t for t in _directed_triangles(q) if v in t and t <= inside]
        return bool(tris)
    return True


def _subquiver(q: Quiver, verts):
    verts = sorted(verts)
    b = tuple(tuple(q.b[i][j] for j in verts) for i in verts)
    d = tuple(q.d[i] for i in verts)
    return Quiver(b, d), {v: k for k, v in enumerate(verts)}


def vatne_type(q: Quiver) -> Optional[str]:
    """Which of the four structural shapes of the simply laced type-D
    mutation class the quiver matches (None if none)."""
    n = q.n
    adj = _underlying_adj(q)
    tris = _directed_triangles(q)

    def in_class_A(verts):
        if not verts:
            return False
        sub, _ = _subquiver(q, verts)
        return satisfies_type_A_class_conditions(sub)

    # (D1): two valency-1 vertices hanging off one vertex of an A-part
    for a in range(n):
        for b_ in range(a + 1, n):
            if len(adj[a]) == 1 and len(adj[b_]) == 1 and adj[a] == adj[b_]:
                v = next(iter(adj[a]))
                rest = set(range(n)) - {a, b_}
                if in_class_A(rest) and _connecting_vertex(q, v, rest):
                    return "D1"
    # (D2): two directed triangles sharing one arrow v1 -> v2
    for t1 in tris:
        for t2 in tris:
            if t1 == t2 or len(t1 & t2) != 2:
                continue
            v1v2 = tuple(t1 & t2)
            a = next(iter(t1 - t2))
            b_ = next(iter(t2 - t1))
            if adj[a] - set(v1v2) or adj[b_] - set(v1v2):
                continue
            if {a, b_} & set().union(*(t for t in tris if t not in (t1, t2))):
                continue
            x, y = v1v2
            for v1, v2 in ((x, y), (y, x)):
                if q.b[v1][v2] <= 0:
                    continue
                rest = set(range(n)) - {a, b_}
                # removing the shared arrow must split the A-parts
                comp1 = _side_of(q, rest, v1, v2)
                comp2 = _side_of(q, rest, v2, v1)
                if comp1 is None or comp2 is None:
                    continue
                if comp1 & comp2 or (comp1 | comp2) != rest:
                    continue
                if in_class_A(comp1) and in_class_A(comp2) and \
                        _connecting_vertex(q, v1, comp1) and \
                        _connecting_vertex(q, v2, comp2):
                    return "D2"
    # (D3): chordless directed 4-cycle with two opposite low-valency vertices
    for cyc in _directed_cycles(q, 4):
        v1, w, v2, v = cyc
        for (p1, p2, q1, q2) in ((v1, v2, w, v), (w, v, v1, v2)):
            if len(adj[q1]) != 2 or len(adj[q2]) != 2:
                continue
            if p2 in adj[p1]:
                continue
            rest = set(range(n)) - {q1, q2}
            comp1 = _side_of(q, rest, p1, p2)
            comp2 = _side_of(q, rest, p2, p1)
            if comp1 is None or comp2 is None:
                continue
            if comp1 & comp2 or (comp1 | comp2) != rest:
                continue
            if in_class_A(comp1) and in_class_A(comp2) and \
                    _connecting_vertex(q, p1, comp1) and \
                    _connecting_vertex(q, p2, comp2):
                return "D3"
    # (D4): central directed cycle with optional spikes
    for k in range(3, n + 1):
        for cyc in _directed_cycles(q, k):
            if _matches_d4(q, cyc, adj, tris):
                return "D4"
    return None


def _side_of(q: Quiver, rest, v_keep, v_drop):
    """Component of v_keep in the restriction to ``rest`` with the direct
    v_keep/v_drop edge removed; None if v_drop is still reachable (so the
    edge removal does not split the two sides)."""
    adj = _underlying_adj(q)
    seen = {v_keep}
    stack = [v_keep]
    while stack:
        x = stack.pop()
        for u in adj[x]:
            if u not in rest or u in seen:
                continue
            if {x, u} == {v_keep, v_drop}:
                continue
            seen.add(u)
            stack.append(u)
    if v_drop in seen:
        return None
    return seen


def _directed_cycles(q: Quiver, length):
    """Chordless directed cycles of the given length, as vertex tuples."""
    n = q.n
    out = []

    def rec(path):
        last = path[-1]
        if len(path) == length:
            if q.b[last][path[0]] > 0:
                verts = set(path)
                chords = any(
                    q.b[a][b] != 0
                    for a in verts for b in verts
                    if a != b and not _cyc_adjacent(path, a, b))
                if not chords:
                    out.append(tuple(path))
            return
        for u in range(n):
            if u in path or q.b[last][u] <= 0:
                continue
            if u < path[0]:
                continue
            rec(path + [u])

    for v in range(n):
        rec([v])
    # dedup rotations
    seen = set()
    uniq = []
    for cyc in out:
        key = frozenset(cyc)
        canon = min(tuple(cyc[(i + t) % length] for t in range(length))
                    for i in range(length))
        if canon not in seen:
            seen.add(canon)
            uniq.append(canon)
    return uniq


def _cyc_adjacent(path, a, b):
    k = len(path)
    ia, ib = path.index(a), path.index(b)
    return (ia - ib) % k in (1, k - 1)


def _matches_d4(q: Quiver, cyc, adj, tris) -> bool:
    n = q.n
    central = set(cyc)
    k = len(cyc)
    spikes = {}
    used = set(central)
    # each cycle arrow may carry one spike vertex c with i->j->c->i
    for t in range(k):
        i, j = cyc[t], cyc[(t + 1) % k]
        cands = [c for c in range(n) if c not in used
                 and q.b[j][c] > 0 and q.b[c][i] > 0]
        if len(cands) > 1:
            return False
        if cands:
            spikes[(i, j)] = cands[0]
            used.add(cands[0])
    # no other arrows at central vertices
    for v in central:
        allowed = set()
        idx = cyc.index(v)
        allowed.add(cyc[(idx + 1) % k])
        allowed.add(cyc[(idx - 1) % k])
        for (i, j), c in spikes.items():
            if v in (i, j):
                allowed.add(c)
        if adj[v] - allowed:
            return False
    # the rest must be A-parts hanging at spike tips
    rest = set(range(n)) - central
    for (i, j), c in spikes.items():
        comp = {c}
        stack = [c]
        while stack:
            x = stack.pop()
            for u in adj[x]:
                if u in rest and u not in comp:
                    comp.add(u)
                    stack.append(u)
        rest -= comp
        sub, _ = _subquiver(q, comp)
        if not satisfies_type_A_class_conditions(sub):
            return False
        if not _connecting_vertex(q, c, comp):
            return False
    return not rest


# ---------------------------------------------------------------------------
# the mutation-class / atlas comparison


@dataclass
class TheoremOneReport:
    type_label: str
    rank: int
    ok: bool
    missing: list  # cyclically orientable atlas keys not realized
    extra: list  # realized graphs not in the atlas
    not_orientable_realized: list
    class_size: int
    atlas_size: int

    def to_json(self):
        return {
            "type": self.type_label,
            "rank": self.rank,
            "pass": self.ok,
            "missing": [k.hex() for k in self.missing],
            "extra": [k.hex() for k in self.extra],
            "not_orientable_realized": [k.hex() for k in
                                        self.not_orientable_realized],
            "mutation_class_size": self.class_size,
            "atlas_size": self.atlas_size,
        }


def check_theorem1(type_label: str, rank: int, atlas=None,
                   class_cap: int = 100_000) -> TheoremOneReport:
    """Compare the mutation class of the Dynkin quiver against the Carter
    atlas of the same type: (a) every class member's underlying graph is in
    the atlas, (b) every cyclically orientable atlas entry is realized,
    (c) no non-orientable entry is realized."""
    from .families import enumerate_by_subsets
    if atlas is None:
        atlas = enumerate_by_subsets(build_root_system(type_label, rank))
    cls = mutation_class(dynkin_quiver(type_label, rank), cap=class_cap)
    realized = {canonical_form(underlying_graph(q)) for q in cls.values()}
    atlas_keys = atlas.keys()
    orientable = {k for k, e in atlas.entries.items() if e.cyclically_orientable}
    extra = sorted(realized - atlas_keys)
    missing = sorted(orientable - realized)
    bad = sorted(realized & (atlas_keys - orientable))
    ok = not (extra or missing or bad)
    return TheoremOneReport(type_label, rank, ok, missing, extra, bad,
                            len(cls), len(atlas_keys))
