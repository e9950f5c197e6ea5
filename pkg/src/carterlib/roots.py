"""Finite root systems and their reflection groups over exact scalars.

A root system is stored as an explicit list of coordinate vectors
(fractions, or golden-field elements for the icosahedral types) together
with the permutation each reflection induces on that list.  All downstream
group computation happens on those permutations, so everything stays exact
and hashable.

Conventions fixed here:

* positive roots are the lexicographically positive vectors (first nonzero
  coordinate > 0), sorted ascending; root ``i + n_positive`` is the negative
  of positive root ``i``;
* the simple system is the unique one inside that positive system;
* ``("I", m)`` denotes the dihedral type I2(m); only m in {3, 4, 5, 6} is
  realizable over the scalar fields used here (rank of an I2 system is 2,
  the type parameter m travels in the ``param`` slot).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations as _permutations
from typing import Iterable, Sequence

from .scalars import GoldenNum, TAU, scalar_from_str, scalar_to_str


class CapExceeded(Exception):
    """A search hit its configured cap.  Signals "undecided", not failure.

    ``partial`` carries whatever was accumulated before the cap hit.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


Vector = tuple  # tuple of Scalar


def dot(u: Vector, v: Vector):
    if len(u) != len(v):
        raise ValueError("dimension mismatch")
    s = u[0] * v[0]
    for a, b in zip(u[1:], v[1:]):
        s = s + a * b
    return s


def reflect(alpha: Vector, v: Vector) -> Vector:
    """Image of v under the reflection negating alpha and fixing the
    hyperplane orthogonal to it: v - (2(alpha|v)/(alpha|alpha)) alpha."""
    nn = dot(alpha, alpha)
    if not nn:
        raise ValueError("cannot reflect in the zero vector")
    c = 2 * dot(alpha, v) / nn
    return tuple(x - c * a for x, a in zip(v, alpha))


def cartan_pairing(alpha: Vector, beta: Vector):
    """2(alpha|beta)/(beta|beta); an integer when both are crystallographic."""
    nn = dot(beta, beta)
    if not nn:
        raise ValueError("beta must be nonzero")
    return 2 * dot(alpha, beta) / nn


def _row_reduce(rows):
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        for r in range(rank + 1, len(rows)):
            if rows[r][col]:
                f = rows[r][col] / prow[col]
                rows[r] = [x - f * p for x, p in zip(rows[r], prow)]
        rank += 1
    return rank


def is_linearly_independent(vectors: Sequence[Vector]) -> bool:
    """Exact Gaussian-elimination verdict."""
    if not vectors:
        return True
    dims = {len(v) for v in vectors}
    if len(dims) != 1:
        raise ValueError("vectors live in different ambient spaces")
    return _row_reduce(vectors) == len(vectors)


def _proportional(u: Vector, v: Vector) -> bool:
    i = next((k for k, x in enumerate(u) if x), None)
    if i is None or not v[i]:
        return False
    c = v[i] / u[i]
    return all(v[k] == c * u[k] for k in range(len(u)))


def _lex_positive(v: Vector) -> bool:
    for x in v:
        if x:
            return x > 0
    raise ValueError("zero vector has no sign")


# ---------------------------------------------------------------------------
# root lists per type


def _e(n, i, c=1):
    v = [Fraction(0)] * n
    v[i] = Fraction(c)
    return v


def _roots_A(n):
    out = []
    for i in range(n + 1):
        for j in range(n + 1):
            if i != j:
                v = _e(n + 1, i)
                v[j] -= 1
                out.append(tuple(v))
    return out


def _roots_BCD(n, short):
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            for si in (1, -1):
                for sj in (1, -1):
                    v = _e(n, i, si)
                    v[j] += sj
                    out.append(tuple(v))
    if short == "B":
        for i in range(n):
            for s in (1, -1):
                out.append(tuple(_e(n, i, s)))
    elif short == "C":
        for i in range(n):
            for s in (2, -2):
                out.append(tuple(_e(n, i, s)))
    return out


def _roots_E8():
    out = []
    for i in range(8):
        for j in range(i + 1, 8):
            for si in (1, -1):
                for sj in (1, -1):
                    v = _e(8, i, si)
                    v[j] += sj
                    out.append(tuple(v))
    half = Fraction(1, 2)
    for mask in range(256):
        if bin(mask).count("1") % 2 == 0:
            out.append(tuple(-half if (mask >> k) & 1 else half
                             for k in range(8)))
    return out


def _roots_E(n):
    if n == 8:
        return _roots_E8()
    out = []
    for r in _roots_E8():
        if r[6] + r[7] != 0:
            continue
        if n == 7 or r[5] + r[7] == 0:
            out.append(r)
    return out


def _roots_F4():
    out = _roots_BCD(4, "B")
    half = Fraction(1, 2)
    for mask in range(16):
        out.append(tuple(-half if (mask >> k) & 1 else half for k in range(4)))
    return out


def _roots_G2():
    out = []
    for i in range(3):
        for j in range(3):
            if i != j:
                v = _e(3, i)
                v[j] -= 1
                out.append(tuple(v))
    for i in range(3):
        for s in (1, -1):
            v = [Fraction(-s)] * 3
            v[i] = Fraction(2 * s)
            out.append(tuple(v))
    return out


def _cyclic(v):
    return [tuple(v), (v[2], v[0], v[1]), (v[1], v[2], v[0])]


def _roots_H3():
    # icosidodecahedral realization, scaled to be integral over Z[tau]
    zero = GoldenNum(0)
    one = GoldenNum(1)
    tau = TAU
    tau2 = TAU * TAU
    out = set()
    for s in (1, -1):
        for c in _cyclic((s * 2 * tau, zero, zero)):
            out.add(c)
    for s0 in (1, -1):
        for s1 in (1, -1):
            for s2 in (1, -1):
                for c in _cyclic((s0 * one, s1 * tau, s2 * tau2)):
                    out.add(c)
    return sorted(out)


def _roots_H4():
    zero = GoldenNum(0)
    one = GoldenNum(1)
    two = GoldenNum(2)
    tau = TAU
    sig = TAU - 1  # 1/tau
    out = set()
    for i in range(4):
        for s in (1, -1):
            v = [zero] * 4
            v[i] = s * two
            out.add(tuple(v))
    for mask in range(16):
        out.add(tuple(-one if (mask >> k) & 1 else one for k in range(4)))
    base = (zero, one, tau, sig)
    evens = [p for p in _permutations(range(4))
             if sum(1 for a in range(4) for b in range(a + 1, 4)
                    if p[a] > p[b]) % 2 == 0]
    for p in evens:
        for mask in range(8):
            v = [base[p[k]] for k in range(4)]
            bit = 0
            for k in range(4):
                if v[k] != zero:
                    if (mask >> bit) & 1:
                        v[k] = -v[k]
                    bit += 1
            out.add(tuple(v))
    return sorted(out)


_EXPECTED_COUNT = {
    "A": lambda n: n * (n + 1),
    "B": lambda n: 2 * n * n,
    "C": lambda n: 2 * n * n,
    "D": lambda n: 2 * n * (n - 1),
    "E": lambda n: {6: 72, 7: 126, 8: 240}[n],
    "F": lambda n: 48,
    "G": lambda n: 12,
    "H": lambda n: {3: 30, 4: 120}[n],
    "I": lambda m: 2 * m,
}

_REALIZABLE_I2 = (3, 4, 5, 6)


def validate_type(type_label: str, rank: int) -> None:
    ok = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 4,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
        "H": rank in (3, 4),
        "I": rank >= 3,
    }.get(type_label, False)
    if not ok:
        raise ValueError(f"({type_label}, {rank}) is not a valid finite type")
    if type_label == "I" and rank not in _REALIZABLE_I2:
        raise ValueError(
            f"I2({rank}) needs cos(pi/{rank}), which does not lie in Q or "
            "Q(sqrt 5); only I2(m) for m in {3,4,5,6} is realizable here")


def type_str(type_label: str, param: int) -> str:
    return f"I2({param})" if type_label == "I" else f"{type_label}{param}"


# ---------------------------------------------------------------------------


class WeylElement:
    """A group element, stored as the permutation it induces on the roots."""

    __slots__ = ("perm", "system")

    def __init__(self, perm: tuple, system: "RootSystem"):
        self.perm = perm
        self.system = system

    def __eq__(self, other):
        return (isinstance(other, WeylElement)
                and self.system is other.system and self.perm == other.perm)

    def __hash__(self):
        return hash(self.perm)

    def __mul__(self, other):
        return compose(self, other)

    def is_identity(self) -> bool:
        return all(p == i for i, p in enumerate(self.perm))

    def order(self) -> int:
        from math import lcm
        n = len(self.perm)
        seen = [False] * n
        result = 1
        for i in range(n):
            if not seen[i]:
                ln, j = 0, i
                while not seen[j]:
                    seen[j] = True
                    j = self.perm[j]
                    ln += 1
                result = lcm(result, ln)
        return result

    def apply(self, root_index: int) -> int:
        return self.perm[root_index]

    def matrix_in_simple_basis(self):
        """Matrix of the linear action in the basis of simple roots."""
        rs = self.system
        cols = [rs.coords_in_simple_basis(self.perm[p])
                for p in rs.simple_indices]
        n = rs.rank
        return [[cols[j][i] for j in range(n)] for i in range(n)]

    def fixed_space_codim(self) -> int:
        m = self.matrix_in_simple_basis()
        n = len(m)
        return _row_reduce([[m[i][j] - (1 if i == j else 0) for j in range(n)]
                            for i in range(n)])

    def trace(self):
        m = self.matrix_in_simple_basis()
        t = m[0][0]
        for i in range(1, len(m)):
            t = t + m[i][i]
        return t

    def __repr__(self):
        return f"WeylElement({self.perm!r})"


def compose(g: WeylElement, h: WeylElement) -> WeylElement:
    """Product g*h acting as "first h, then g"."""
    if g.system is not h.system:
        raise ValueError("elements live in different root systems")
    gp = g.perm
    return WeylElement(tuple(gp[x] for x in h.perm), g.system)


def invert(g: WeylElement) -> WeylElement:
    inv = [0] * len(g.perm)
    for i, p in enumerate(g.perm):
        inv[p] = i
    return WeylElement(tuple(inv), g.system)


class RootSystem:
    """Immutable realization of a finite root system.

    Do not instantiate directly; use :func:`build_root_system`, which caches
    one instance per type so identity comparison is meaningful.
    """

    def __init__(self, type_label: str, rank: int, param: int, roots: list):
        self.type_label = type_label
        self.rank = rank
        self.param = param  # equals rank except for I2(m), where it is m
        positives = sorted(r for r in roots if _lex_positive(r))
        self.n_positive = len(positives)
        self.roots: tuple = tuple(positives) + tuple(
            tuple(-x for x in r) for r in positives)
        if len(set(self.roots)) != len(roots) or len(roots) != len(self.roots):
            raise AssertionError("root list is not closed under negation")
        self._index = {r: i for i, r in enumerate(self.roots)}
        for i in range(self.n_positive):
            for j in range(i + 1, self.n_positive):
                if _proportional(positives[i], positives[j]):
                    raise AssertionError("proper scalar multiples present")
        if _row_reduce(positives) != rank:
            raise AssertionError("root span has wrong dimension")
        self._refl_perm: dict[int, tuple] = {}
        self._pair_order: dict[tuple, int] = {}
        self._simple_coords = None
        self._order = None
        self.simple_indices = self._find_simple_system()
        if len(self.simple_indices) != rank:
            raise AssertionError("simple system size differs from rank")

    # -- indexing --------------------------------------------------------

    def index_of(self, root: Vector) -> int:
        return self._index[tuple(root)]

    def negative_of(self, i: int) -> int:
        return i + self.n_positive if i < self.n_positive else i - self.n_positive

    def positive_of(self, i: int) -> int:
        return i if i < self.n_positive else i - self.n_positive

    def is_positive(self, i: int) -> bool:
        return i < self.n_positive

    # -- reflections -----------------------------------------------------

    def reflection_perm(self, i: int) -> tuple:
        """Permutation of all roots induced by the reflection in root i."""
        p = self.positive_of(i)
        perm = self._refl_perm.get(p)
        if perm is None:
            alpha = self.roots[p]
            images = []
            for r in self.roots:
                j = self._index.get(reflect(alpha, r))
                if j is None:
                    raise AssertionError(
                        "root system not closed under reflection")
                images.append(j)
            perm = tuple(images)
            self._refl_perm[p] = perm
        return perm

    def reflection_of(self, i: int) -> WeylElement:
        return WeylElement(self.reflection_perm(i), self)

    def identity(self) -> WeylElement:
        return WeylElement(tuple(range(len(self.roots))), self)

    def simple_reflections(self) -> list:
        return [self.reflection_of(i) for i in self.simple_indices]

    def pair_order(self, i: int, j: int) -> int:
        """Order of the product of the reflections in roots i and j."""
        i, j = self.positive_of(i), self.positive_of(j)
        if i == j:
            return 1
        key = (i, j) if i < j else (j, i)
        m = self._pair_order.get(key)
        if m is None:
            pi = self.reflection_perm(i)
            pj = self.reflection_perm(j)
            prod = tuple(pi[x] for x in pj)
            cur = prod
            m = 1
            ident = tuple(range(len(self.roots)))
            while cur != ident:
                cur = tuple(prod[x] for x in cur)
                m += 1
            self._pair_order[key] = m
        return m

    # -- structure -------------------------------------------------------

    def _find_simple_system(self):
        npos = self.n_positive
        simple = []
        for p in range(npos):
            perm = self.reflection_perm(p)
            if all(perm[q] < npos for q in range(npos) if q != p):
                simple.append(p)
        return tuple(simple)

    def coords_in_simple_basis(self, i: int):
        """Coordinates of root i in the basis of simple roots (exact)."""
        if self._simple_coords is None:
            simples = [self.roots[s] for s in self.simple_indices]
            gram = [[dot(a, b) for b in simples] for a in simples]
            sols = []
            for r in self.roots:
                rhs = [dot(r, b) for b in simples]
                sols.append(tuple(_solve(gram, rhs)))
            self._simple_coords = sols
        return self._simple_coords[i]

    @property
    def is_crystallographic(self) -> bool:
        if self.type_label == "H":
            return False
        if self.type_label == "I":
            return self.param in (3, 4, 6)
        return True

    def weyl_order(self) -> int:
        """Order of the reflection group generated by all the reflections."""
        if self._order is None:
            gens = self.simple_reflections()
            try:
                self._order = subgroup_closure(gens, cap=200_000).order
            except CapExceeded:
                self._order = perm_group_order(
                    [g.perm for g in gens], len(self.roots))
        return self._order

    def coxeter_element(self) -> WeylElement:
        c = self.identity()
        for s in self.simple_reflections():
            c = compose(c, s)
        return c

    def to_json(self) -> dict:
        return {
            "type": self.type_label,
            "rank": self.param,
            "roots": [[scalar_to_str(x) for x in r] for r in self.roots],
        }

    def __repr__(self):
        return (f"RootSystem({type_str(self.type_label, self.param)}, "
                f"{len(self.roots)} roots)")


def _solve(gram, rhs):
    """Solve the positive definite linear system gram * x = rhs exactly."""
    n = len(gram)
    a = [list(row) + [rhs[i]] for i, row in enumerate(gram)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col])
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * p for x, p in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]


@lru_cache(maxsize=None)
def build_root_system(type_label: str, rank: int) -> RootSystem:
    """Construct the root system of the given finite type.

    Deterministic: the root list, indexing and simple system depend only on
    (type_label, rank).  ("I", m) is the dihedral type I2(m), whose actual
    rank is 2.  C is included as the dual of B but takes no part in the
    diagram classification.
    """
    validate_type(type_label, rank)
    if type_label == "A":
        roots = _roots_A(rank)
    elif type_label in ("B", "C", "D"):
        roots = _roots_BCD(rank, "" if type_label == "D" else type_label)
    elif type_label == "E":
        roots = _roots_E(rank)
    elif type_label == "F":
        roots = _roots_F4()
    elif type_label == "G":
        roots = _roots_G2()
    elif type_label == "H":
        roots = _roots_H3() if rank == 3 else _roots_H4()
    else:  # I2(m)
        if rank == 3:
            roots = _roots_A(2)
        elif rank == 4:
            roots = _roots_BCD(2, "B")
        elif rank == 6:
            roots = _roots_G2()
        else:
            roots = _i2_5_roots()
    expected = _EXPECTED_COUNT[type_label](rank)
    if len(set(roots)) != expected or len(roots) != expected:
        raise AssertionError(
            f"{type_str(type_label, rank)}: got {len(roots)} roots, "
            f"expected {expected}")
    true_rank = 2 if type_label == "I" else rank
    return RootSystem(type_label, true_rank, rank, roots)


def _i2_5_roots():
    """The decagonal system, realized as a plane subsystem of H3."""
    h3 = build_root_system("H", 3)
    pair = None
    for i in range(h3.n_positive):
        for j in range(i + 1, h3.n_positive):
            if h3.pair_order(i, j) == 5:
                pair = (i, j)
                break
        if pair:
            break
    sub = smallest_root_subsystem(set(pair), h3)
    return [h3.roots[k] for k in sorted(sub)]


# ---------------------------------------------------------------------------
# group machinery


@dataclass(frozen=True)
class Closure:
    order: int
    elements: frozenset


def subgroup_closure(gens: Iterable[WeylElement], cap: int = 10 ** 6) -> Closure:
    """Breadth-first closure of a generating set under composition.

    Raises :class:`CapExceeded` (with the partial set attached) when more
    than ``cap`` elements are found.
    """
    gens = list(gens)
    if not gens:
        return Closure(1, frozenset())
    system = gens[0].system
    if any(g.system is not system for g in gens):
        raise ValueError("generators live in different root systems")
    ident = tuple(range(len(system.roots)))
    gen_perms = [g.perm for g in gens]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gen_perms:
                q = tuple(g[x] for x in p)
                if q not in seen:
                    if len(seen) >= cap:
                        raise CapExceeded(
                            f"subgroup closure exceeded cap {cap}",
                            partial=seen)
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    elements = frozenset(WeylElement(p, system) for p in seen)
    return Closure(len(seen), elements)


def perm_group_order(gens: Sequence[tuple], degree: int) -> int:
    """Order of the permutation group generated by ``gens``.

    Delegates to sympy's deterministic Schreier-Sims; only needed beyond
    breadth-first-closure scale (E7, E8).
    """
    from sympy.combinatorics import Permutation, PermutationGroup
    ps = [Permutation(list(g)) for g in gens]
    if not ps:
        return 1
    return int(PermutationGroup(ps).order())


# ---------------------------------------------------------------------------
# subsystems


def smallest_root_subsystem(root_indices: Iterable[int], rs: RootSystem) -> frozenset:
    """Indices of the smallest root subsystem containing the given roots:
    the orbit of the set under the reflections it defines.  Closed under
    those reflections and under negation."""
    gens = sorted({rs.positive_of(i) for i in root_indices})
    if not gens:
        raise ValueError("empty root set")
    perms = [rs.reflection_perm(p) for p in gens]
    seen = set()
    for p in gens:
        seen.add(p)
        seen.add(rs.negative_of(p))
    frontier = list(seen)
    while frontier:
        nxt = []
        for i in frontier:
            for g in perms:
                j = g[i]
                if j not in seen:
                    seen.add(j)
                    nxt.append(j)
        frontier = nxt
    return frozenset(seen)


def _component_split(positive_indices, rs):
    idx = sorted(positive_indices)
    parent = {i: i for i in idx}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in range(len(idx)):
        for b in range(a + 1, len(idx)):
            if dot(rs.roots[idx[a]], rs.roots[idx[b]]):
                ra, rb = find(idx[a]), find(idx[b])
                if ra != rb:
                    parent[ra] = rb
    comps: dict[int, list] = {}
    for i in idx:
        comps.setdefault(find(i), []).append(i)
    return list(comps.values())


def _candidate_types(rank, nroots):
    cands = []
    for label in "ABCDEFGHI":
        ranks = {
            "A": [rank] if rank >= 1 else [],
            "B": [rank] if rank >= 2 else [],
            "C": [rank] if rank >= 3 else [],  # B2 == C2, reported as B
            "D": [rank] if rank >= 4 else [],
            "E": [rank] if rank in (6, 7, 8) else [],
            "F": [rank] if rank == 4 else [],
            "G": [rank] if rank == 2 else [],
            "H": [rank] if rank in (3, 4) else [],
            "I": [nroots // 2]
                 if rank == 2 and nroots // 2 in _REALIZABLE_I2 else [],
        }[label]
        for r in ranks:
            if _EXPECTED_COUNT[label](r) == nroots:
                cands.append((label, r))
    return cands


def _cartan_match(cartan, ref):
    """Whether the square matrix is a simultaneous row/column permutation of
    ``ref``.  Backtracking; both sides are small (rank <= 8)."""
    n = len(cartan)
    if len(ref) != n:
        return False

    def sig(m, i):
        return tuple(sorted(str(x) for x in m[i]))

    csig = [sig(cartan, i) for i in range(n)]
    rsig = [sig(ref, i) for i in range(n)]
    if sorted(csig) != sorted(rsig):
        return False
    assignment = [-1] * n
    used = [False] * n

    def rec(i):
        if i == n:
            return True
        for j in range(n):
            if used[j] or csig[i] != rsig[j]:
                continue
            if all(cartan[i][k] == ref[j][assignment[k]]
                   and cartan[k][i] == ref[assignment[k]][j]
                   for k in range(i)):
                assignment[i] = j
                used[j] = True
                if rec(i + 1):
                    return True
                used[j] = False
        return False

    return rec(0)


def _simple_system_of(sub_positive, rs):
    """Simple system of a reflection-closed subsystem, given its positive
    part: the roots whose reflections permute the remaining positives."""
    psub = sorted(sub_positive)
    npos = rs.n_positive
    out = []
    for p in psub:
        perm = rs.reflection_perm(p)
        if all(perm[q] < npos for q in psub if q != p):
            out.append(p)
    return out


@lru_cache(maxsize=None)
def _reference_cartan(label, rank):
    ref = build_root_system(label, rank)
    simples = [ref.roots[s] for s in ref.simple_indices]
    return tuple(tuple(cartan_pairing(a, b) for b in simples) for a in simples)


def classify_subsystem_type(root_indices: Iterable[int], rs: RootSystem) -> list:
    """Decompose a reflection-closed set of roots into irreducible components
    and name each one, by matching the Cartan matrix of a computed simple
    system against the standard ones."""
    indices = set(root_indices)
    positives = [i for i in indices if rs.is_positive(i)]
    if not positives or any(rs.negative_of(i) not in indices for i in positives):
        raise ValueError("input must be a reflection-closed root subsystem")
    result = []
    for comp in _component_split(positives, rs):
        simples = _simple_system_of(comp, rs)
        vecs = [rs.roots[s] for s in simples]
        rank = _row_reduce(vecs)
        if rank != len(simples):
            raise AssertionError("subsystem simple system is dependent")
        nroots = 2 * len(comp)
        cartan = [[cartan_pairing(a, b) for b in vecs] for a in vecs]
        found = None
        for label, r in _candidate_types(rank, nroots):
            if _cartan_match(cartan, _reference_cartan(label, r)):
                found = (label, r)
                break
        if found is None:
            raise AssertionError(
                f"no standard type matches a rank-{rank} subsystem with "
                f"{nroots} roots")
        result.append(found)
    result.sort(key=lambda t: (-t[1], t[0]))
    return result


def roots_from_json(data) -> list:
    return [tuple(scalar_from_str(x) for x in row) for row in data]


def roots_to_json(vectors) -> list:
    return [[scalar_to_str(x) for x in v] for v in vectors]
