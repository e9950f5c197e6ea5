"""Reflection factorizations and the braid-group (Hurwitz) action on them.

A factorization is an ordered tuple of reflections, each identified with
its positive root (replacing a root by its negative never changes anything
we compute).  The Hurwitz moves conjugate adjacent entries; they preserve
the product and, by the linear-independence criterion, reducedness.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from .roots import (
    CapExceeded,
    RootSystem,
    WeylElement,
    compose,
    is_linearly_independent,
    smallest_root_subsystem,
)
from .scalars import scalar_to_str


class ReflectionFactorization:
    """An ordered tuple of reflections of one ambient root system, stored
    as positive-root indices."""

    __slots__ = ("ambient", "refs")

    def __init__(self, ambient: RootSystem, refs: Iterable[int]):
        self.ambient = ambient
        self.refs = tuple(ambient.positive_of(i) for i in refs)

    def __len__(self):
        return len(self.refs)

    def __eq__(self, other):
        return (isinstance(other, ReflectionFactorization)
                and self.ambient is other.ambient and self.refs == other.refs)

    def __hash__(self):
        return hash(self.refs)

    def __repr__(self):
        return f"ReflectionFactorization({self.refs!r})"

    def root_vectors(self):
        return [self.ambient.roots[i] for i in self.refs]

    def to_json(self) -> dict:
        rs = self.ambient
        return {
            "type": rs.type_label,
            "rank": rs.param,
            "roots": [[scalar_to_str(x) for x in rs.roots[i]]
                      for i in self.refs],
        }

    def to_text(self) -> str:
        """Compact display for the signed-permutation types (B, C, D)."""
        rs = self.ambient
        if rs.type_label not in ("B", "C", "D"):
            raise ValueError("signed-permutation display only for B/C/D")
        parts = [signed_cycle_str(rs.roots[i]) for i in self.refs]
        return f"{rs.type_label}{rs.rank}: " + " ".join(parts)


def signed_cycle_str(root) -> str:
    """Signed-permutation cycle notation of the reflection in a B/C/D root."""
    support = [(k, x) for k, x in enumerate(root) if x]
    if len(support) == 1:
        i = support[0][0] + 1
        return f"({i},-{i})"
    (i, xi), (j, xj) = support
    i, j = i + 1, j + 1
    if (xi > 0) == (xj > 0):  # e_i + e_j
        return f"({i},-{j})(-{i},{j})"
    return f"({i},{j})(-{i},-{j})"


def factorization_from_json(data, build) -> ReflectionFactorization:
    """Rebuild a factorization from its JSON form; ``build`` is the root
    system constructor (injected to avoid an import cycle in callers)."""
    from .roots import roots_from_json
    rs = build(data["type"], data["rank"])
    refs = [rs.positive_of(rs.index_of(v))
            for v in roots_from_json(data["roots"])]
    return ReflectionFactorization(rs, refs)


def product(f: ReflectionFactorization) -> WeylElement:
    """Left-to-right composition of the reflections."""
    rs = f.ambient
    w = rs.identity()
    for i in f.refs:
        w = compose(w, rs.reflection_of(i))
    return w


def is_reduced(f: ReflectionFactorization) -> bool:
    """Reducedness via the linear-independence criterion; applied uniformly,
    and validated against a breadth-first oracle for the icosahedral types
    in the test suite."""
    return is_linearly_independent(f.root_vectors())


@lru_cache(maxsize=8)
def _length_table(rs: RootSystem):
    """Breadth-first reflection-length table keyed by permutation."""
    gens = [rs.reflection_perm(p) for p in range(rs.n_positive)]
    ident = tuple(range(len(rs.roots)))
    table = {ident: 0}
    frontier = [ident]
    depth = 0
    while frontier:
        depth += 1
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(g[x] for x in p)
                if q not in table:
                    table[q] = depth
                    nxt.append(q)
        frontier = nxt
    return table


def reflection_length(w: WeylElement) -> int:
    """Minimal number of reflections whose product is w.

    For crystallographic systems this equals the codimension of the fixed
    space; the icosahedral types fall back to a cached breadth-first table.
    """
    rs = w.system
    if rs.is_crystallographic:
        return w.fixed_space_codim()
    return _length_table(rs)[w.perm]


def is_quasi_coxeter(f: ReflectionFactorization) -> bool:
    """Whether the reflections of a reduced full-rank factorization generate
    the whole group; equivalently (for independent roots) whether the
    smallest root subsystem through its roots is the whole system."""
    rs = f.ambient
    if len(f.refs) != rs.rank:
        raise ValueError("factorization length differs from ambient rank")
    if not is_reduced(f):
        raise ValueError("factorization is not reduced")
    sub = smallest_root_subsystem(f.refs, rs)
    return len(sub) == len(rs.roots)


def hurwitz_move(f: ReflectionFactorization, i: int,
                 inverse: bool = False) -> ReflectionFactorization:
    """Elementary braid move at position i (1-based, 1 <= i <= len-1).

    Forward:  (..., t_i, t_{i+1}, ...) -> (..., t_i t_{i+1} t_i, t_i, ...);
    inverse:  (..., t_i, t_{i+1}, ...) -> (..., t_{i+1}, t_{i+1} t_i t_{i+1}, ...).
    Conjugated reflections are renormalized to positive roots; the product
    of the factorization is unchanged.
    """
    if not 1 <= i <= len(f.refs) - 1:
        raise ValueError(f"move position {i} out of range")
    rs = f.ambient
    refs = list(f.refs)
    a, b = refs[i - 1], refs[i]
    if inverse:
        conj = rs.positive_of(rs.reflection_perm(b)[a])
        refs[i - 1], refs[i] = b, conj
    else:
        conj = rs.positive_of(rs.reflection_perm(a)[b])
        refs[i - 1], refs[i] = conj, a
    return ReflectionFactorization(rs, refs)


def hurwitz_orbit(f: ReflectionFactorization, cap: int = 10 ** 6) -> set:
    """Closure of f under all forward and inverse moves.

    FIFO frontier, moves tried in order (sigma_1, sigma_1^-1, sigma_2, ...);
    tuples are deduplicated by their full ordered index tuple.  Raises
    :class:`CapExceeded` (partial orbit attached) beyond ``cap`` tuples.
    """
    rs = f.ambient
    n = len(f.refs)
    perms = {p: rs.reflection_perm(p) for p in set(f.refs)}

    def moves(refs):
        for i in range(n - 1):
            a, b = refs[i], refs[i + 1]
            pa = perms.get(a)
            if pa is None:
                pa = perms[a] = rs.reflection_perm(a)
            pb = perms.get(b)
            if pb is None:
                pb = perms[b] = rs.reflection_perm(b)
            fwd = list(refs)
            fwd[i], fwd[i + 1] = rs.positive_of(pa[b]), a
            yield tuple(fwd)
            inv = list(refs)
            inv[i], inv[i + 1] = b, rs.positive_of(pb[a])
            yield tuple(inv)

    seen = {f.refs}
    queue = [f.refs]
    head = 0
    while head < len(queue):
        cur = queue[head]
        head += 1
        for nxt in moves(cur):
            if nxt not in seen:
                if len(seen) >= cap:
                    raise CapExceeded(
                        f"Hurwitz orbit exceeded cap {cap}",
                        partial={ReflectionFactorization(rs, r) for r in seen})
                seen.add(nxt)
                queue.append(nxt)
    return {ReflectionFactorization(rs, r) for r in seen}


def coxeter_factorization(rs: RootSystem) -> ReflectionFactorization:
    """The factorization on the canonical simple system in canonical order."""
    return ReflectionFactorization(rs, rs.simple_indices)


def is_coxeter_element(w: WeylElement) -> bool:
    """Whether w is conjugate to the canonical Coxeter element.

    Brute-force conjugacy search over the full group; intended for the
    desk-scale systems where that group has been enumerated anyway.
    """
    rs = w.system
    c = rs.coxeter_element()
    if w.order() != c.order():
        return False
    group = _full_group(rs)
    wp = w.perm
    cp = c.perm
    for x in group:
        # x c x^-1 == w  <=>  x c == w x
        if tuple(x[v] for v in cp) == tuple(wp[v] for v in x):
            return True
    return False


@lru_cache(maxsize=8)
def _full_group(rs: RootSystem):
    from .roots import subgroup_closure
    closure = subgroup_closure(rs.simple_reflections())
    return [g.perm for g in closure.elements]
