"""Classification engines for Carter diagrams.

Three independent routes produce atlases of diagram classes:

* constructive generators for the infinite families: type A via connected
  unions of complete blocks glued at vertices (plus vertex duplication),
  type B by doubling all edges at a non-cut vertex of a type-A diagram,
  type D via the same block machinery run one rank down with one extra
  vertex;
* the exhaustive oracle: scan all rank-sized subsets of positive roots,
  keep the linearly independent (and, for the full-type atlas, generating)
  ones, and collect diagram classes with witnesses;
* Hurwitz-orbit enumeration from quasi-Coxeter seed factorizations, for
  the types where subsets are too many.

Constructor/oracle agreement at desk scale is an acceptance gate.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import comb, gcd
from typing import Iterable, Optional

from .diagrams import (
    CarterDiagram,
    abstract_diagram,
    all_cycles_even,
    canonical_form,
    diagram_of,
    is_cyclically_orientable,
)
from .factorizations import (
    ReflectionFactorization,
    coxeter_factorization,
    is_coxeter_element,
    is_quasi_coxeter,
    is_reduced,
    product,
)
from .roots import CapExceeded, RootSystem, smallest_root_subsystem, type_str
from .scalars import GoldenNum


@dataclass
class AtlasEntry:
    diagram: CarterDiagram
    admissible: bool
    cyclically_orientable: bool
    coxeter_witness: Optional[bool] = None

    @property
    def witness(self):
        return self.diagram.vertex_roots


@dataclass
class DiagramAtlas:
    type_label: str
    rank: int
    entries: dict  # canonical key (bytes) -> AtlasEntry
    complete: bool = True
    method: str = ""

    def keys(self):
        return set(self.entries)

    def __len__(self):
        return len(self.entries)

    def to_json(self) -> dict:
        diagrams = []
        for key in sorted(self.entries):
            e = self.entries[key]
            item = {"key": key.hex()}
            item.update(e.diagram.to_json())
            item["admissible"] = e.admissible
            item["cyclically_orientable"] = e.cyclically_orientable
            if e.coxeter_witness is not None:
                item["coxeter_witness"] = e.coxeter_witness
            diagrams.append(item)
        out = {
            "type": self.type_label,
            "rank": self.rank,
            "method": self.method,
            "diagrams": diagrams,
        }
        if not self.complete:
            out["incomplete"] = True
        return out

    @staticmethod
    def from_json(data, build) -> "DiagramAtlas":
        from .diagrams import diagram_from_json
        entries = {}
        for item in data["diagrams"]:
            d = diagram_from_json(item, build)
            entries[canonical_form(d)] = AtlasEntry(
                d, item["admissible"], item["cyclically_orientable"],
                item.get("coxeter_witness"))
        return DiagramAtlas(data["type"], data["rank"], entries,
                            not data.get("incomplete", False),
                            data.get("method", ""))


def _entry_for(diagram: CarterDiagram, coxeter: Optional[bool] = None) -> AtlasEntry:
    return AtlasEntry(diagram, all_cycles_even(diagram),
                      is_cyclically_orientable(diagram), coxeter)


# ---------------------------------------------------------------------------
# block-graph machinery (type A construction and its rank-shift for type D)


def _partitions(total, parts, smallest=2):
    """Partitions of ``total`` into exactly ``parts`` parts, each >= smallest,
    nonincreasing."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    hi = total - smallest * (parts - 1)
    for first in range(hi, smallest - 1, -1):
        for rest in _partitions(total - first, parts - 1, smallest):
            if not rest or first >= rest[0]:
                yield (first,) + rest


def _connected_pairs(k, pair_set):
    if k == 1:
        return True
    adj = {i: [] for i in range(k)}
    for a, b in pair_set:
        adj[a].append(b)
        adj[b].append(a)
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == k


def _block_structure_graphs(n_vertices, extra):
    """All connected graphs on ``n_vertices`` vertices that are unions of
    complete blocks, pairwise sharing at most one vertex, every vertex in
    at most two blocks, with block sizes summing (as size-1 each) to
    n_vertices - 1 + extra.  Yields edge-sets; duplicates are possible and
    are deduplicated by the caller via canonical keys."""
    if n_vertices == 1:
        if extra == 0:
            yield frozenset()
        return
    target = n_vertices - 1 + extra
    for k in range(1, target + 1):
        n_shared = k - 1 + extra
        if n_shared > comb(k, 2):
            continue
        for sizes in _partitions(target + k, k, 2):
            if sizes[0] > n_vertices:
                continue
            all_pairs = list(combinations(range(k), 2))
            for pair_set in combinations(all_pairs, n_shared):
                deg = [0] * k
                for a, b in pair_set:
                    deg[a] += 1
                    deg[b] += 1
                if any(deg[i] > sizes[i] for i in range(k)):
                    continue
                if not _connected_pairs(k, pair_set):
                    continue
                # materialize: one shared vertex per pair, then privates
                vertex = 0
                shared = {}
                members = [[] for _ in range(k)]
                for a, b in pair_set:
                    shared[(a, b)] = vertex
                    members[a].append(vertex)
                    members[b].append(vertex)
                    vertex += 1
                for i in range(k):
                    while len(members[i]) < sizes[i]:
                        members[i].append(vertex)
                        vertex += 1
                if vertex != n_vertices:
                    continue
                edges = set()
                for i in range(k):
                    for a, b in combinations(sorted(members[i]), 2):
                        edges.add((a, b))
                yield frozenset(edges)


def _graph_diagram(n, edges) -> CarterDiagram:
    return abstract_diagram(n, [(a, b, 3) for a, b in sorted(edges)])


def _duplications(n, edges, count):
    """All graphs reachable by ``count`` vertex duplications (new vertex
    wired to exactly the neighbors of an existing one), deduplicated by
    canonical key at each step."""
    level = {canonical_form(_graph_diagram(n, edges)): (n, edges)}
    for _ in range(count):
        nxt = {}
        for nn, ee in level.values():
            adj = {v: set() for v in range(nn)}
            for a, b in ee:
                adj[a].add(b)
                adj[b].add(a)
            for v in range(nn):
                new_edges = set(ee) | {(u, nn) for u in sorted(adj[v])}
                cand = (nn + 1, frozenset(new_edges))
                key = canonical_form(_graph_diagram(*cand))
                nxt.setdefault(key, cand)
        level = nxt
    return level


def gen_kluitmann(n: int, m: int) -> dict:
    """All diagrams of m-tuples of transpositions generating Sym(n+1):
    block graphs on m' vertices (n <= m' <= m) followed by m - m' vertex
    duplications.  Returns {canonical key: abstract diagram}."""
    if not 1 <= n <= m:
        raise ValueError("need 1 <= n <= m")
    out = {}
    for mp in range(n, m + 1):
        for edges in _block_structure_graphs(mp, mp - n):
            for key, (nn, ee) in _duplications(mp, edges, m - mp).items():
                if key not in out:
                    out[key] = _graph_diagram(nn, ee)
    return out


# ---------------------------------------------------------------------------
# witness search


def _pair_order_table(rs: RootSystem):
    P = rs.n_positive
    return [[rs.pair_order(i, j) if i != j else 1 for j in range(P)]
            for i in range(P)]


def find_witness(d: CarterDiagram, rs: RootSystem,
                 require_full_type: bool = True):
    """Positive-root indices realizing the diagram in the given system, or
    None.  Backtracking over the pairwise-order constraints, then linear
    independence and (optionally) the full-type condition."""
    n = d.n
    P = rs.n_positive
    table = _pair_order_table(rs)
    # visit vertices so each one (after the first) touches a placed vertex
    order = [0]
    remaining = set(range(1, n))
    while remaining:
        nxt = next((v for v in sorted(remaining)
                    if any(d.orders[v][u] >= 3 for u in order)), None)
        if nxt is None:
            nxt = min(remaining)
        order.append(nxt)
        remaining.discard(nxt)
    pos_of = {v: k for k, v in enumerate(order)}
    assigned = [-1] * n

    def ok_leaf():
        refs = list(assigned)
        vecs = [rs.roots[i] for i in refs]
        from .roots import is_linearly_independent
        if not is_linearly_independent(vecs):
            return False
        if require_full_type:
            if len(smallest_root_subsystem(refs, rs)) != len(rs.roots):
                return False
        return True

    def rec(k):
        if k == n:
            return ok_leaf()
        v = order[k]
        for r in range(P):
            if r in assigned:
                continue
            good = True
            for placed in order[:k]:
                if table[r][assigned[placed]] != d.orders[v][placed]:
                    good = False
                    break
            if good:
                assigned[v] = r
                if rec(k + 1):
                    return True
                assigned[v] = -1
        return False

    if rec(0):
        return tuple(assigned)
    return None


def _with_witnesses(type_label, rank, diagrams: dict, rs: Optional[RootSystem],
                    method: str) -> DiagramAtlas:
    entries = {}
    for key, d in sorted(diagrams.items()):
        if rs is not None:
            refs = find_witness(d, rs)
            if refs is None:
                raise AssertionError(
                    f"no witness found in {type_str(type_label, rank)} for "
                    f"constructed diagram {d.edges()}")
            d = CarterDiagram(d.n, d.orders, refs, rs)
        entries[key] = _entry_for(d)
    return DiagramAtlas(type_label, rank, entries, True, method)


def gen_type_A(n: int, with_witnesses: bool = True) -> DiagramAtlas:
    """Carter diagrams of type A_n: connected block graphs on n vertices."""
    from .roots import build_root_system
    diagrams = gen_kluitmann(n, n)
    rs = build_root_system("A", n) if with_witnesses else None
    return _with_witnesses("A", n, diagrams, rs, "construct")


def gen_type_B(n: int, with_witnesses: bool = True) -> DiagramAtlas:
    """Carter diagrams of type B_n: a type A_n diagram with all edges at a
    chosen non-cut vertex (the distinguished vertex) given pair order 4."""
    from .roots import build_root_system
    if n < 2:
        raise ValueError("type B needs rank >= 2")
    diagrams = {}
    for base in gen_kluitmann(n, n).values():
        for v in range(base.n):
            rest = [u for u in range(base.n) if u != v]
            seen = {rest[0]}
            stack = [rest[0]]
            while stack:
                x = stack.pop()
                for u in base.neighbors(x):
                    if u != v and u not in seen:
                        seen.add(u)
                        stack.append(u)
            if len(seen) != len(rest):
                continue
            orders = [list(row) for row in base.orders]
            for u in base.neighbors(v):
                orders[v][u] = orders[u][v] = 4
            d = CarterDiagram(base.n, orders)
            diagrams.setdefault(canonical_form(d), d)
    rs = build_root_system("B", n) if with_witnesses else None
    return _with_witnesses("B", n, diagrams, rs, "construct")


def gen_type_D(n: int, with_witnesses: bool = True) -> DiagramAtlas:
    """Carter diagrams of type D_n: the block graphs one rank down with one
    extra vertex."""
    from .roots import build_root_system
    if n < 4:
        raise ValueError("type D needs rank >= 4")
    diagrams = gen_kluitmann(n - 1, n)
    rs = build_root_system("D", n) if with_witnesses else None
    return _with_witnesses("D", n, diagrams, rs, "construct")


# ---------------------------------------------------------------------------
# exhaustive subset oracle


def _scaled_int_vectors(rs: RootSystem):
    """Roots as integer vectors (doubled), or pairs of integers (a, b)
    encoding a + b*tau for the golden types."""
    out = []
    golden = any(isinstance(x, GoldenNum) for x in rs.roots[0])
    for r in rs.roots[:rs.n_positive]:
        if golden:
            vec = []
            for x in r:
                two = x + x
                a0, b0 = two.a, two.b  # a0 + b0*sqrt5 = (a0 - b0) + 2 b0 tau
                a, b = a0 - b0, 2 * b0
                if a.denominator != 1 or b.denominator != 1:
                    raise AssertionError("golden coordinates not integral")
                vec.append((int(a), int(b)))
            out.append(tuple(vec))
        else:
            vec = []
            for x in r:
                two = 2 * x
                if two.denominator != 1:
                    raise AssertionError("coordinates not half-integral")
                vec.append(int(two))
            out.append(tuple(vec))
    return out, golden


def _reduce_int(v, rows):
    """Fraction-free reduction of an integer vector against echelon rows
    [(pivot index, row)]; returns the reduced vector or None if dependent."""
    v = list(v)
    for piv, row in rows:
        c = v[piv]
        if c:
            p = row[piv]
            v = [p * a - c * b for a, b in zip(v, row)]
    if not any(v):
        return None
    g = 0
    for a in v:
        g = gcd(g, a)
    if g > 1:
        v = [a // g for a in v]
    piv = next(i for i, a in enumerate(v) if a)
    return piv, tuple(v)


def _golden_mul(x, y):
    return (x[0] * y[0] + x[1] * y[1], x[0] * y[1] + x[1] * y[0] + x[1] * y[1])


def _reduce_golden(v, rows):
    v = list(v)
    for piv, row in rows:
        c = v[piv]
        if c != (0, 0):
            p = row[piv]
            v = [(_golden_mul(p, a)[0] - _golden_mul(c, b)[0],
                  _golden_mul(p, a)[1] - _golden_mul(c, b)[1])
                 for a, b in zip(v, row)]
    if all(a == (0, 0) for a in v):
        return None
    g = 0
    for a, b in v:
        g = gcd(gcd(g, a), b)
    if g > 1:
        v = [(a // g, b // g) for a, b in v]
    piv = next(i for i, a in enumerate(v) if a != (0, 0))
    return piv, tuple(v)


def enumerate_by_subsets(rs: RootSystem, require_full_type: bool = True,
                         max_rank: int = 6, max_positive: int = 40,
                         track_coxeter: bool = False) -> DiagramAtlas:
    """The oracle: scan every rank-sized subset of positive roots, keep the
    linearly independent ones (restricted to those generating the whole
    system when ``require_full_type``), and collect diagram classes.

    Refuses oversized inputs up front, reporting the number of subsets the
    scan would visit; raise the limits explicitly for a long run.
    ``track_coxeter`` additionally records, per class, whether some witness
    ordering multiplies to a Coxeter element (exact: it sees every subset).
    """
    r = rs.rank
    P = rs.n_positive
    if r > max_rank or P > max_positive:
        raise CapExceeded(
            f"{type_str(rs.type_label, rs.param)} oracle would scan "
            f"C({P},{r}) = {comb(P, r)} subsets; raise max_rank/max_positive "
            "to run it anyway")
    vecs, golden = _scaled_int_vectors(rs)
    reduce_fn = _reduce_golden if golden else _reduce_int
    table = _pair_order_table(rs)
    perms = [rs.reflection_perm(p) for p in range(P)]
    nroots = len(rs.roots)
    entries: dict = {}
    chosen = []

    def closure_full():
        seen = set(chosen)
        seen.update(rs.negative_of(i) for i in chosen)
        gens = [perms[i] for i in chosen]
        frontier = list(seen)
        while frontier:
            nxt = []
            for i in frontier:
                for g in gens:
                    j = g[i]
                    if j not in seen:
                        seen.add(j)
                        nxt.append(j)
            frontier = nxt
            if len(seen) == nroots:
                return True
        return len(seen) == nroots

    def leaf():
        if require_full_type and not closure_full():
            return
        orders = [[1] * r for _ in range(r)]
        for a in range(r):
            for b in range(a + 1, r):
                orders[a][b] = orders[b][a] = table[chosen[a]][chosen[b]]
        d = CarterDiagram(r, orders, tuple(chosen), rs)
        key = canonical_form(d)
        entry = entries.get(key)
        if entry is None:
            entry = _entry_for(d, coxeter=False if track_coxeter else None)
            entries[key] = entry
        if track_coxeter and entry.coxeter_witness is False:
            from itertools import permutations
            for perm in permutations(chosen):
                w = product(ReflectionFactorization(rs, perm))
                if is_coxeter_element(w):
                    entry.coxeter_witness = True
                    break

    def dfs(start, rows):
        need = r - len(chosen)
        for i in range(start, P - need + 1):
            red = reduce_fn(vecs[i], rows)
            if red is None:
                continue
            chosen.append(i)
            if need == 1:
                leaf()
            else:
                rows.append(red)
                dfs(i + 1, rows)
                rows.pop()
            chosen.pop()

    dfs(0, [])
    return DiagramAtlas(rs.type_label, rs.param, entries, True,
                        "oracle" + ("-full" if require_full_type else "-all"))


# ---------------------------------------------------------------------------
# Hurwitz-orbit enumeration


def enumerate_by_hurwitz(seeds: Iterable[ReflectionFactorization],
                         orbit_cap: int = 10 ** 6,
                         complete_seed_list: bool = False) -> DiagramAtlas:
    """Diagram classes appearing in the Hurwitz orbits of the seeds.

    Every seed must be reduced, of full rank and quasi-Coxeter.  The result
    covers the whole type only if the seeds meet one representative per
    conjugacy class of quasi-Coxeter elements, which the caller asserts via
    ``complete_seed_list``; otherwise the atlas is marked incomplete
    (a lower bound)."""
    seeds = list(seeds)
    if not seeds:
        raise ValueError("need at least one seed")
    rs = seeds[0].ambient
    entries: dict = {}
    overflowed = False
    for f in seeds:
        if f.ambient is not rs:
            raise ValueError("seeds live in different root systems")
        if not is_quasi_coxeter(f):
            raise ValueError("seed is not quasi-Coxeter")
        n = len(f.refs)
        perms = {}
        seen_tuples = {f.refs}
        seen_sets = set()
        queue = [f.refs]
        head = 0
        while head < len(queue):
            refs = queue[head]
            head += 1
            fs = frozenset(refs)
            if fs not in seen_sets:
                seen_sets.add(fs)
                d = diagram_of(refs, rs)
                key = canonical_form(d)
                if key not in entries:
                    entries[key] = _entry_for(d)
            for i in range(n - 1):
                a, b = refs[i], refs[i + 1]
                pa = perms.get(a)
                if pa is None:
                    pa = perms[a] = rs.reflection_perm(a)
                pb = perms.get(b)
                if pb is None:
                    pb = perms[b] = rs.reflection_perm(b)
                for nxt in (
                    refs[:i] + (rs.positive_of(pa[b]), a) + refs[i + 2:],
                    refs[:i] + (b, rs.positive_of(pb[a])) + refs[i + 2:],
                ):
                    if nxt not in seen_tuples:
                        if len(seen_tuples) >= orbit_cap:
                            overflowed = True
                            break
                        seen_tuples.add(nxt)
                        queue.append(nxt)
                if overflowed:
                    break
            if overflowed:
                break
    atlas = DiagramAtlas(rs.type_label, rs.param, entries,
                         complete_seed_list and not overflowed, "hurwitz")
    if overflowed:
        raise CapExceeded("Hurwitz orbit exceeded cap", partial=atlas)
    return atlas


def hurwitz_class_walk(seeds: Iterable[ReflectionFactorization],
                       steps: int = 10 ** 6, seed: int = 0) -> DiagramAtlas:
    """Diagram classes met along random Hurwitz walks from the seeds.

    Memory-light alternative to the exhaustive orbit scan for the largest
    types: it keeps no visited set, so the result is always a lower bound
    (the atlas is marked incomplete).  The walk revisits the seed tuple
    periodically to keep coverage spread across the orbit.
    """
    rng = random.Random(seed)
    seeds = list(seeds)
    if not seeds:
        raise ValueError("need at least one seed")
    rs = seeds[0].ambient
    entries: dict = {}
    for f in seeds:
        if not is_quasi_coxeter(f):
            raise ValueError("seed is not quasi-Coxeter")
        n = len(f.refs)
        perms = {}
        refs = f.refs
        seen_sets = set()
        for step in range(steps):
            if step % 50000 == 0:
                refs = f.refs
            i = rng.randrange(n - 1)
            a, b = refs[i], refs[i + 1]
            key_root = a if rng.random() < 0.5 else None
            if key_root is None:
                pb = perms.get(b)
                if pb is None:
                    pb = perms[b] = rs.reflection_perm(b)
                refs = refs[:i] + (b, rs.positive_of(pb[a])) + refs[i + 2:]
            else:
                pa = perms.get(a)
                if pa is None:
                    pa = perms[a] = rs.reflection_perm(a)
                refs = refs[:i] + (rs.positive_of(pa[b]), a) + refs[i + 2:]
            fs = tuple(sorted(refs))
            if fs not in seen_sets:
                if len(seen_sets) > 2_000_000:
                    seen_sets.clear()  # only a recompute cache
                seen_sets.add(fs)
                d = diagram_of(refs, rs)
                key = canonical_form(d)
                if key not in entries:
                    entries[key] = _entry_for(d)
    return DiagramAtlas(rs.type_label, rs.param, entries, False,
                        "hurwitz-walk (lower bound)")


def find_quasi_coxeter_class_seeds(rs: RootSystem, budget: int = 20000,
                                   seed: int = 0) -> list:
    """Randomized search for one reduced factorization per conjugacy class
    of quasi-Coxeter elements.  Best effort within the sample budget; the
    returned list may be incomplete for the large exceptional types."""
    rng = random.Random(seed)
    P = rs.n_positive
    r = rs.rank
    nroots = len(rs.roots)
    classes: list = []  # (invariant, representative WeylElement, factorization)
    exact_conj = rs.weyl_order() <= 60000 if P <= 40 else False
    group = None
    if exact_conj:
        from .factorizations import _full_group
        group = _full_group(rs)
    always = coxeter_factorization(rs)
    candidates = [tuple(always.refs)]
    for _ in range(budget):
        refs = tuple(sorted(rng.sample(range(P), r)))
        candidates.append(refs)
    for refs in candidates:
        f = ReflectionFactorization(rs, refs)
        if not is_reduced(f):
            continue
        if len(smallest_root_subsystem(refs, rs)) != nroots:
            continue
        w = product(f)
        inv = (w.order(), tuple(sorted(_cycle_type(w.perm))), str(w.trace()))
        hit = False
        for known_inv, known_w, _ in classes:
            if known_inv != inv:
                continue
            if not exact_conj or _conjugate_in(group, known_w.perm, w.perm):
                hit = True
                break
        if not hit:
            classes.append((inv, w, f))
    return [f for _, _, f in classes]


def _cycle_type(perm):
    seen = [False] * len(perm)
    out = []
    for i in range(len(perm)):
        if not seen[i]:
            ln, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                ln += 1
            out.append(ln)
    return out


def _conjugate_in(group, a, b):
    for x in group:
        if tuple(x[v] for v in a) == tuple(b[v] for v in x):
            return True
    return False


# ---------------------------------------------------------------------------
# block decompositions (the type-A uniqueness statement)


def block_decompositions(d: CarterDiagram) -> list:
    """All ways to write a simply-laced diagram as a union of complete
    subgraphs, pairwise sharing at most one vertex, every vertex in at most
    two of them, with sizes-minus-one summing to n - 1.  Each decomposition
    is a frozenset of frozensets of vertices."""
    n = d.n
    edges = [(i, j) for i, j, m in d.edges()]
    if not edges:
        return [frozenset()] if n == 0 else [frozenset({frozenset({v}) for v in range(n)})]
    adj = {v: set() for v in range(n)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)

    cliques = []

    def extend(base, candidates):
        if len(base) >= 2:
            cliques.append(frozenset(base))
        for v in sorted(candidates):
            extend(base + [v], [u for u in candidates if u > v and u in adj[v]])

    extend([], list(range(n)))
    results = set()
    edge_index = {e: k for k, e in enumerate(edges)}

    def rec(covered, used, vertex_load, size_sum):
        if size_sum > n - 1:
            return
        free = next((e for e in edges if e not in covered), None)
        if free is None:
            if size_sum == n - 1:
                results.add(frozenset(used))
            return
        for c in cliques:
            if free[0] not in c or free[1] not in c:
                continue
            if any(len(c & u) > 1 for u in used):
                continue
            if any(vertex_load[v] >= 2 for v in c):
                continue
            inner = {(a, b) for a in c for b in c
                     if a < b and (a, b) in edge_index}
            if inner & covered:
                continue
            for v in c:
                vertex_load[v] += 1
            rec(covered | inner, used + [c], vertex_load, size_sum + len(c) - 1)
            for v in c:
                vertex_load[v] -= 1

    rec(set(), [], {v: 0 for v in range(n)}, 0)
    return sorted(results, key=lambda dec: sorted(sorted(b) for b in dec))
