"""Carter diagrams: weighted graphs on the roots of a reduced factorization.

The single source of truth per edge is m_ij, the order of the product of
the two reflections.  The displayed edge multiplicity is derived: the
Cartan-integer product for crystallographic diagrams and m - 2 for the
icosahedral ones (the two conventions disagree only at m = 6, which occurs
only in the rank-2 G2 diagram).
"""

from __future__ import annotations

from itertools import combinations
from typing import Optional, Sequence

from .roots import RootSystem, cartan_pairing, classify_subsystem_type, \
    is_linearly_independent, smallest_root_subsystem

_MAX_CANON = 10  # vertex bound for the canonical-form search

_CARTAN_TO_ORDER = {0: 2, 1: 3, 2: 4, 3: 6}
_ORDER_TO_CARTAN = {2: 0, 3: 1, 4: 2, 6: 3}


class CarterDiagram:
    """Weighted undirected graph; orders[i][j] is the order of t_i t_j."""

    __slots__ = ("n", "orders", "vertex_roots", "ambient", "_key")

    def __init__(self, n: int, orders, vertex_roots: Optional[tuple] = None,
                 ambient: Optional[RootSystem] = None):
        self.n = n
        self.orders = tuple(tuple(row) for row in orders)
        self.vertex_roots = vertex_roots
        self.ambient = ambient
        self._key = None
        for i in range(n):
            if self.orders[i][i] != 1:
                raise ValueError("diagonal entries must be 1")
            for j in range(n):
                if self.orders[i][j] != self.orders[j][i]:
                    raise ValueError("order matrix must be symmetric")
                if i != j and self.orders[i][j] not in (2, 3, 4, 5, 6):
                    raise ValueError(f"invalid pair order {self.orders[i][j]}")

    # -- basics ----------------------------------------------------------

    def edges(self):
        """Sorted (i, j, m) triples with i < j and m >= 3."""
        return [(i, j, self.orders[i][j])
                for i in range(self.n) for j in range(i + 1, self.n)
                if self.orders[i][j] >= 3]

    def neighbors(self, i: int):
        return [j for j in range(self.n) if j != i and self.orders[i][j] >= 3]

    def is_simply_laced(self) -> bool:
        return all(m == 3 for _, _, m in self.edges())

    def is_crystallographic(self) -> bool:
        return all(m in (3, 4, 6) for _, _, m in self.edges())

    def display_weight(self, i: int, j: int) -> int:
        m = self.orders[i][j]
        if m == 2:
            return 0
        if m in _ORDER_TO_CARTAN and self.is_crystallographic():
            return _ORDER_TO_CARTAN[m]
        return m - 2

    def __eq__(self, other):
        return isinstance(other, CarterDiagram) and self.orders == other.orders

    def __hash__(self):
        return hash(self.orders)

    def __repr__(self):
        return f"CarterDiagram(n={self.n}, edges={self.edges()})"

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        out = {"n": self.n, "edges": [list(e) for e in self.edges()]}
        if self.vertex_roots is not None and self.ambient is not None:
            from .roots import roots_to_json
            out["roots"] = roots_to_json(
                [self.ambient.roots[i] for i in self.vertex_roots])
            out["type"] = self.ambient.type_label
            out["rank"] = self.ambient.param
        return out

    def to_dot(self, name: str = "diagram") -> str:
        lines = [f"graph {name} {{", "  node [shape=circle];"]
        for i in range(self.n):
            lines.append(f"  v{i};")
        for i, j, m in self.edges():
            w = self.display_weight(i, j)
            for _ in range(w):
                lines.append(f"  v{i} -- v{j};")
        lines.append("}")
        return "\n".join(lines)


def diagram_from_json(data, build=None) -> CarterDiagram:
    n = data["n"]
    orders = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    for i, j, m in data["edges"]:
        orders[i][j] = orders[j][i] = m
    roots = None
    ambient = None
    if "roots" in data and build is not None and "type" in data:
        from .roots import roots_from_json
        ambient = build(data["type"], data["rank"])
        roots = tuple(ambient.positive_of(ambient.index_of(v))
                      for v in roots_from_json(data["roots"]))
    return CarterDiagram(n, orders, roots, ambient)


def diagram_of(root_indices: Sequence[int], rs: RootSystem) -> CarterDiagram:
    """Carter diagram of a linearly independent set of roots.

    Pair orders come from iterating the permutation product; for
    crystallographic pairs the Cartan-integer product provides an
    independent cross-check of every edge.
    """
    refs = [rs.positive_of(i) for i in root_indices]
    vecs = [rs.roots[i] for i in refs]
    if not is_linearly_independent(vecs):
        raise ValueError("roots are linearly dependent")
    n = len(refs)
    orders = [[1] * n for _ in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            m = rs.pair_order(refs[a], refs[b])
            if rs.is_crystallographic:
                prod = cartan_pairing(vecs[a], vecs[b]) * \
                    cartan_pairing(vecs[b], vecs[a])
                if _CARTAN_TO_ORDER.get(prod) != m:
                    raise AssertionError(
                        f"Cartan product {prod} disagrees with order {m}")
            orders[a][b] = orders[b][a] = m
    return CarterDiagram(n, orders, tuple(refs), rs)


def abstract_diagram(n: int, weighted_edges) -> CarterDiagram:
    """Diagram from an explicit (i, j, m) edge list, without roots."""
    orders = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    for i, j, m in weighted_edges:
        orders[i][j] = orders[j][i] = m
    return CarterDiagram(n, orders)


# ---------------------------------------------------------------------------
# canonical form


def canonical_form(d: CarterDiagram) -> bytes:
    """Canonical byte string of the isomorphism class.

    Vertices are first refined by iterated neighborhood weight profiles;
    the lexicographically smallest order-matrix encoding over all
    refinement-respecting relabelings is then found by backtracking.
    """
    if d._key is not None:
        return d._key
    n = d.n
    if n > _MAX_CANON:
        raise ValueError(f"canonical form supports at most {_MAX_CANON} vertices")
    orders = d.orders

    # iterated refinement: color = (old color, sorted multiset of
    # (edge weight, neighbor color))
    colors = [0] * n
    while True:
        sigs = []
        for i in range(n):
            prof = sorted((orders[i][j], colors[j]) for j in range(n) if j != i)
            sigs.append((colors[i], tuple(prof)))
        ranking = {s: r for r, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if new == colors:
            break
        colors = new

    by_color = sorted(range(n), key=lambda i: (colors[i], i))
    best: list = [None]

    # backtracking over color-monotone placements (sound: the refinement
    # colors are isomorphism invariants), pruning against the best
    # partial encoding found so far
    def rec(perm, used, partial: bytes):
        if len(perm) == n:
            if best[0] is None or partial < best[0]:
                best[0] = partial
            return
        for i in by_color:
            if used[i]:
                continue
            if perm and colors[i] < colors[perm[-1]]:
                continue
            cand = partial + bytes(orders[i][p] for p in perm)
            if best[0] is not None and cand > best[0][:len(cand)]:
                continue
            used[i] = True
            perm.append(i)
            rec(perm, used, cand)
            perm.pop()
            used[i] = False

    rec([], [False] * n, b"")
    key = bytes([n]) + best[0]
    d._key = key
    return key


def is_isomorphic(d1: CarterDiagram, d2: CarterDiagram) -> bool:
    return canonical_form(d1) == canonical_form(d2)


# ---------------------------------------------------------------------------
# cycles and orientability


def chordless_cycles(d: CarterDiagram):
    """All induced cycles, each in its normal form: smallest vertex first,
    then its smaller cycle-neighbor, listed in that traversal order."""
    n = d.n
    cycles = []
    for size in range(3, n + 1):
        for sub in combinations(range(n), size):
            degs = {}
            for v in sub:
                degs[v] = [u for u in sub if u != v and d.orders[v][u] >= 3]
            if any(len(nb) != 2 for nb in degs.values()):
                continue
            # connected 2-regular induced subgraph on |sub| vertices = cycle
            start = sub[0]
            a, b = degs[start]
            first = min(a, b)
            path = [start, first]
            while len(path) < size:
                nxts = [u for u in degs[path[-1]] if u != path[-2]]
                path.append(nxts[0])
            if len(set(path)) == size and path[0] in degs[path[-1]]:
                cycles.append(tuple(path))
    return sorted(cycles)


def all_cycles_even(d: CarterDiagram) -> bool:
    """Admissibility: every cycle subgraph has an even number of vertices,
    equivalently every connected component is bipartite."""
    color = [None] * d.n
    for start in range(d.n):
        if color[start] is not None:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for u in d.neighbors(v):
                if color[u] is None:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return False
    return True


def is_cyclically_orientable(d: CarterDiagram) -> bool:
    """Whether some edge orientation makes every chordless cycle a directed
    cycle.

    Within one chordless cycle, "cyclically oriented" pins every edge's
    orientation relative to the traversal, so each cycle contributes parity
    constraints between consecutive edges; the diagram is cyclically
    orientable iff the constraints have no odd contradiction.
    """
    edges = {(i, j): idx for idx, (i, j, _) in enumerate(d.edges())}
    parent = list(range(len(edges)))
    parity = [0] * len(edges)

    def find(x):
        path = []
        while parent[x] != x:
            path.append(x)
            x = parent[x]
        p = 0
        for v in reversed(path):
            p ^= parity[v]
            parent[v] = x
            parity[v] = p
        return x

    def root_parity(x):
        find(x)
        return parity[x] if parent[x] != x else 0

    def union(x, y, rel):
        rx, ry = find(x), find(y)
        px = parity[x] if parent[x] != x else 0
        py = parity[y] if parent[y] != y else 0
        if rx == ry:
            return (px ^ py) == rel
        parent[rx] = ry
        parity[rx] = px ^ py ^ rel
        return True

    for cyc in chordless_cycles(d):
        k = len(cyc)
        items = []
        for t in range(k):
            u, v = cyc[t], cyc[(t + 1) % k]
            key = (u, v) if u < v else (v, u)
            items.append((edges[key], 1 if u > v else 0))
        e0, s0 = items[0]
        for e, s in items[1:]:
            if not union(e0, e, s0 ^ s):
                return False
    return True


def diagram_type(d: CarterDiagram) -> list:
    """Type of the smallest root subsystem through the defining roots."""
    if d.vertex_roots is None or d.ambient is None:
        raise ValueError("diagram carries no witness roots")
    sub = smallest_root_subsystem(d.vertex_roots, d.ambient)
    return classify_subsystem_type(sub, d.ambient)


def connected_components(d: CarterDiagram):
    """Component split, carrying any vertex roots through."""
    seen = [False] * d.n
    comps = []
    for start in range(d.n):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        queue = [start]
        while queue:
            v = queue.pop()
            for u in d.neighbors(v):
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    queue.append(u)
        comp.sort()
        sub_orders = [[d.orders[a][b] for b in comp] for a in comp]
        roots = None
        if d.vertex_roots is not None:
            roots = tuple(d.vertex_roots[v] for v in comp)
        comps.append(CarterDiagram(len(comp), sub_orders, roots, d.ambient))
    return comps


def distinguished_vertices(d: CarterDiagram) -> list:
    """Vertices of a type-B diagram all of whose edges have pair order 4
    and whose removal keeps the diagram connected.  A type-B Carter diagram
    has exactly one such vertex up to its own symmetry (two literal
    candidates occur only for the single-edge rank-2 diagram)."""
    out = []
    for v in range(d.n):
        nbrs = d.neighbors(v)
        if not nbrs or any(d.orders[v][u] != 4 for u in nbrs):
            continue
        rest = [u for u in range(d.n) if u != v]
        if not rest:
            continue
        seen = {rest[0]}
        queue = [rest[0]]
        while queue:
            x = queue.pop()
            for u in d.neighbors(x):
                if u != v and u not in seen:
                    seen.add(u)
                    queue.append(u)
        if len(seen) == len(rest):
            out.append(v)
    return out


def distinguished_vertex(d: CarterDiagram):
    """Smallest qualifying vertex (see :func:`distinguished_vertices`),
    or None."""
    cands = distinguished_vertices(d)
    return cands[0] if cands else None


def predicted_hurwitz_diagram(d: CarterDiagram, i: int,
                              distinguished: Optional[int] = None
                              ) -> CarterDiagram:
    """Diagram predicted for a forward move at position i (1-based) by the
    edge-update rules, without touching any roots.

    In the simply laced case: edges away from the moved pair are kept; the
    pair edge appears; the conjugated vertex connects to j iff exactly one
    member of the old pair did.  ``distinguished`` names the short-root
    vertex for type-B diagrams: if it is the moved vertex i-1 itself, the
    conjugated vertex instead inherits exactly the other vertex's
    neighbors, and all edge weights follow the short/long split.
    Commuting pairs just swap.
    """
    a, b = i - 1, i  # 0-based positions of the moved pair
    n = d.n
    old = d.orders
    if old[a][b] == 2:
        perm = list(range(n))
        perm[a], perm[b] = b, a
        return CarterDiagram(
            n, [[old[perm[x]][perm[y]] for y in range(n)] for x in range(n)])
    new = [list(row) for row in old]
    # where the short root sits after the move
    if distinguished == a:
        short = b
    elif distinguished == b:
        short = a
    else:
        short = distinguished

    def weight(u, j):
        return 4 if short in (u, j) else 3

    for j in range(n):
        if j in (a, b):
            continue
        # position b now holds the old vertex a; edges carry over
        mb = weight(b, j) if old[a][j] >= 3 else 2
        new[b][j] = new[j][b] = mb
        if distinguished == a:
            edge = old[b][j] >= 3
        else:
            edge = (old[a][j] >= 3) != (old[b][j] >= 3)
        new[a][j] = new[j][a] = weight(a, j) if edge else 2
    new[a][b] = new[b][a] = old[a][b]
    return CarterDiagram(n, new)
