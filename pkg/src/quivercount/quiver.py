"""Quivers and their combinatorics.

A quiver is a finite directed multigraph: vertex labels, a totally ordered
arrow list (list position is the order, which the contraction-deletion
count depends on), and a per-vertex multiplicity.  Loops and parallel
arrows are allowed everywhere.
"""

from __future__ import annotations

import json
from itertools import combinations, product
from math import gcd

from .errors import (ContractLoop, DimensionMismatch, InvalidType,
                     NotConnected, ReflectionAtImaginaryVertex)


class Quiver:
    __slots__ = ("vertices", "arrows", "multiplicities")

    def __init__(self, vertices, arrows, multiplicities=None):
        self.vertices = tuple(str(v) for v in vertices)
        self.arrows = tuple((int(s), int(t)) for s, t in arrows)
        n = len(self.vertices)
        for s, t in self.arrows:
            if not (0 <= s < n and 0 <= t < n):
                raise ValueError(f"arrow ({s},{t}) out of range for {n} vertices")
        if multiplicities is None:
            multiplicities = (1,) * n
        self.multiplicities = tuple(int(m) for m in multiplicities)
        if len(self.multiplicities) != n:
            raise ValueError("one multiplicity per vertex required")
        if any(m < 1 for m in self.multiplicities):
            raise ValueError("multiplicities must be positive")

    # -- basics ---------------------------------------------------------

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_arrows(self) -> int:
        return len(self.arrows)

    def is_loop(self, a: int) -> bool:
        s, t = self.arrows[a]
        return s == t

    def loops_at(self, i: int) -> int:
        return sum(1 for s, t in self.arrows if s == t == i)

    def arrows_between(self, i: int, j: int) -> int:
        """Arrows joining i and j in either direction (i != j)."""
        return sum(1 for s, t in self.arrows if {s, t} == {i, j})

    def __eq__(self, other):
        if not isinstance(other, Quiver):
            return NotImplemented
        return (self.vertices == other.vertices and self.arrows == other.arrows
                and self.multiplicities == other.multiplicities)

    def __hash__(self):
        return hash((self.vertices, self.arrows, self.multiplicities))

    def __repr__(self):
        return (f"Quiver(vertices={list(self.vertices)}, arrows={list(self.arrows)}, "
                f"multiplicities={list(self.multiplicities)})")

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "arrows": [{"src": s, "dst": t} for s, t in self.arrows],
            "multiplicities": list(self.multiplicities),
        }

    @staticmethod
    def from_json(data: dict) -> "Quiver":
        arrows = [(a["src"], a["dst"]) for a in data["arrows"]]
        return Quiver(data["vertices"], arrows, data.get("multiplicities"))

    @staticmethod
    def load(path) -> "Quiver":
        with open(path) as fh:
            return Quiver.from_json(json.load(fh))

    def save(self, path) -> None:
        with open(path, "w") as fh:
            json.dump(self.to_json(), fh, indent=2)
            fh.write("\n")


# -- standard examples ----------------------------------------------------

def jordan_quiver(multiplicity: int = 1) -> Quiver:
    return Quiver(["v"], [(0, 0)], [multiplicity])


def loop_quiver(g: int, multiplicity: int = 1) -> Quiver:
    return Quiver(["v"], [(0, 0)] * g, [multiplicity])


def a2_quiver(multiplicity: int = 1) -> Quiver:
    return Quiver(["1", "2"], [(0, 1)], [multiplicity] * 2)


def kronecker_quiver(r: int, multiplicity: int = 1) -> Quiver:
    return Quiver(["1", "2"], [(0, 1)] * r, [multiplicity] * 2)


def cyclic_quiver(n: int, multiplicity: int = 1) -> Quiver:
    return Quiver([str(i + 1) for i in range(n)],
                  [(i, (i + 1) % n) for i in range(n)],
                  [multiplicity] * n)


# -- Euler forms ------------------------------------------------------------

def euler_form(Q: Quiver, d, e) -> int:
    """<d,e> = sum d_i e_i - sum over arrows d_{s(a)} e_{t(a)}."""
    n = Q.num_vertices
    if len(d) != n or len(e) != n:
        raise DimensionMismatch("rank vector length must equal vertex count")
    total = sum(d[i] * e[i] for i in range(n))
    for s, t in Q.arrows:
        total -= d[s] * e[t]
    return total


def euler_form_sym(Q: Quiver, d, e) -> int:
    return euler_form(Q, d, e) + euler_form(Q, e, d)


def euler_form_h(Q: Quiver, r, s) -> int:
    """Euler form of the multiplicity datum: hom minus ext dimension over the
    base field.

    Each vertex contributes n_i r_i s_i; an arrow a: i -> j contributes
    -lcm(n_i, n_j) r_i s_j, the dimension of the space of maps carried by a.
    With equal multiplicities alpha this is alpha times the ordinary form.
    """
    n = Q.num_vertices
    if len(r) != n or len(s) != n:
        raise DimensionMismatch("rank vector length must equal vertex count")
    mult = Q.multiplicities
    total = sum(mult[i] * r[i] * s[i] for i in range(n))
    for a, (i, j) in enumerate(Q.arrows):
        total -= (mult[i] * mult[j] // gcd(mult[i], mult[j])) * r[i] * s[j]
    return total


# -- graph invariants -------------------------------------------------------

def connected_components(Q: Quiver) -> int:
    return len(component_sets(Q))


def component_sets(Q: Quiver):
    """Vertex sets of the connected components (underlying graph)."""
    n = Q.num_vertices
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for s, t in Q.arrows:
        rs, rt = find(s), find(t)
        if rs != rt:
            parent[rs] = rt
    groups = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return [frozenset(g) for g in sorted(groups.values())]


def is_connected(Q: Quiver) -> bool:
    return Q.num_vertices > 0 and connected_components(Q) == 1


def betti(Q: Quiver) -> int:
    """Cycle rank C - V + E of the underlying graph."""
    return connected_components(Q) - Q.num_vertices + Q.num_arrows


def is_2_connected(Q: Quiver) -> bool:
    """Connected and bridgeless; loops never disconnect anything."""
    if not is_connected(Q):
        return False
    for a in range(Q.num_arrows):
        if Q.is_loop(a):
            continue
        if connected_components(delete(Q, a)) > 1:
            return False
    return True


# -- subquivers and edge operations ----------------------------------------

def restrict_vertices(Q: Quiver, I) -> Quiver:
    """Full subquiver on the vertex subset I (original order kept)."""
    I = sorted(set(int(i) for i in I))
    index = {v: k for k, v in enumerate(I)}
    arrows = [(index[s], index[t]) for s, t in Q.arrows if s in index and t in index]
    return Quiver([Q.vertices[i] for i in I], arrows,
                  [Q.multiplicities[i] for i in I])


def restrict_arrows(Q: Quiver, J) -> Quiver:
    """Subquiver with all vertices and only the arrows in J (order kept)."""
    J = set(int(j) for j in J)
    arrows = [Q.arrows[a] for a in range(Q.num_arrows) if a in J]
    return Quiver(Q.vertices, arrows, Q.multiplicities)


def contract(Q: Quiver, a: int) -> Quiver:
    """Contract the non-loop arrow a, merging its endpoints.

    The surviving arrows keep their relative order; parallel arrows to the
    contracted one become loops at the merged vertex.
    """
    s, t = Q.arrows[a]
    if s == t:
        raise ContractLoop(f"arrow {a} is a loop")
    lo, hi = min(s, t), max(s, t)

    def new_index(v):
        if v == hi:
            return lo
        return v - 1 if v > hi else v

    vertices = []
    mults = []
    for v in range(Q.num_vertices):
        if v == hi:
            continue
        if v == lo:
            vertices.append(f"{Q.vertices[lo]}~{Q.vertices[hi]}")
        else:
            vertices.append(Q.vertices[v])
        mults.append(Q.multiplicities[v])
    arrows = [(new_index(x), new_index(y))
              for k, (x, y) in enumerate(Q.arrows) if k != a]
    return Quiver(vertices, arrows, mults)


def delete(Q: Quiver, a: int) -> Quiver:
    arrows = [arr for k, arr in enumerate(Q.arrows) if k != a]
    return Quiver(Q.vertices, arrows, Q.multiplicities)


# -- spanning trees ---------------------------------------------------------

def spanning_trees(Q: Quiver):
    """All spanning trees as sorted tuples of non-loop arrow indices.

    Deterministic order (lexicographic on index tuples); raises if Q is
    disconnected.
    """
    if not is_connected(Q):
        raise NotConnected("spanning trees require a connected quiver")
    n = Q.num_vertices
    non_loops = [a for a in range(Q.num_arrows) if not Q.is_loop(a)]
    if n == 1:
        return [()]
    trees = []
    for subset in combinations(non_loops, n - 1):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        acyclic = True
        for a in subset:
            s, t = Q.arrows[a]
            rs, rt = find(s), find(t)
            if rs == rt:
                acyclic = False
                break
            parent[rs] = rt
        if acyclic:
            trees.append(subset)
    return trees


def tree_path(Q: Quiver, tree, a: int):
    """Edges of the unique path in the tree joining the endpoints of arrow a."""
    s, t = Q.arrows[a]
    if s == t:
        return ()
    adj = {}
    for e in tree:
        x, y = Q.arrows[e]
        adj.setdefault(x, []).append((y, e))
        adj.setdefault(y, []).append((x, e))
    # DFS from s to t collecting edges
    stack = [(s, None, ())]
    seen = {s}
    while stack:
        v, _, path = stack.pop()
        if v == t:
            return path
        for w, e in adj.get(v, []):
            if w not in seen:
                seen.add(w)
                stack.append((w, e, path + (e,)))
    raise NotConnected("arrow endpoints not joined by the tree")


# -- partitions and chains ---------------------------------------------------

def set_partitions(items):
    """All partitions of a sequence into nonempty blocks, deterministically.

    Each partition is a tuple of tuples; the first element always lies in
    the first block.
    """
    items = list(items)
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for sub in set_partitions(rest):
        # put first in its own block
        yield ((first,),) + sub
        # or join an existing block
        for k in range(len(sub)):
            yield tuple((first,) + sub[i] if i == k else sub[i]
                        for i in range(len(sub)))


def chains_of_edge_subsets(edges, length, *, strict=False, final=None,
                           connected_final_in=None):
    """Weakly increasing chains E_1 <= ... <= E_length of subsets of `edges`.

    strict          -- require proper inclusions throughout
    final           -- fix the last term to this subset
    connected_final_in -- keep only chains whose last term spans a connected
                          restriction of the given quiver (all vertices kept)
    """
    edges = sorted(set(int(e) for e in edges))
    if final is not None:
        final = frozenset(int(e) for e in final)

    def grow(chain):
        if len(chain) == length:
            last = chain[-1]
            if final is not None and last != final:
                return
            if connected_final_in is not None and not is_connected(
                    restrict_arrows(connected_final_in, last)):
                return
            yield tuple(chain)
            return
        prev = chain[-1] if chain else frozenset()
        remaining = [e for e in edges if e not in prev]
        for k in range(0 if not strict else 1, len(remaining) + 1):
            for extra in combinations(remaining, k):
                yield from grow(chain + [prev | frozenset(extra)])

    yield from grow([])


# -- property (P) and auxiliary quivers -------------------------------------

def is_totally_negative(Q: Quiver) -> bool:
    """(d,e) < 0 for all nonzero nonnegative d, e: at least two loops per
    vertex and every vertex pair joined by an arrow."""
    for i in range(Q.num_vertices):
        if Q.loops_at(i) < 2:
            return False
    for i in range(Q.num_vertices):
        for j in range(i + 1, Q.num_vertices):
            if Q.arrows_between(i, j) == 0:
                return False
    return True


def has_property_p(Q: Quiver, d) -> bool:
    """Total negativity plus the support exclusion: a two-vertex support
    joined by a single edge may not carry rank (1,1)."""
    if len(d) != Q.num_vertices:
        raise DimensionMismatch("rank vector length must equal vertex count")
    if any(x < 0 for x in d) or all(x == 0 for x in d):
        return False
    if not is_totally_negative(Q):
        return False
    support = [i for i in range(Q.num_vertices) if d[i] > 0]
    if len(support) == 2:
        i, j = support
        if Q.arrows_between(i, j) == 1 and d[i] == d[j] == 1:
            return False
    return True


class SemisimpleType:
    """Multiset of (rank vector, multiplicity) pairs describing a semisimple
    module; distinct simple summands may share a rank vector, so no
    distinctness is imposed on the parts."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        self.parts = tuple((tuple(int(x) for x in d), int(e)) for d, e in parts)
        for d, e in self.parts:
            if e < 1:
                raise InvalidType("part multiplicities must be >= 1")
            if any(x < 0 for x in d) or all(x == 0 for x in d):
                raise InvalidType("part rank vectors must be nonzero and nonnegative")

    def __repr__(self):
        return f"SemisimpleType({list(self.parts)!r})"


def aux_quiver(Q: Quiver, tau: SemisimpleType) -> Quiver:
    """Quiver governing the local structure at a semisimple point of type tau.

    Its double carries 2(1 - <d_i,d_i>) loops at vertex i and -(d_i,d_j)
    arrows between distinct vertices, so the quiver itself gets half of
    each; non-loop arrows are oriented from the lower part index to the
    higher one.
    """
    r = len(tau.parts)
    for d, _ in tau.parts:
        if len(d) != Q.num_vertices:
            raise InvalidType("part rank vectors must match the quiver")
    arrows = []
    for i, (di, _) in enumerate(tau.parts):
        n_loops = 1 - euler_form(Q, di, di)
        if n_loops < 0:
            raise InvalidType(f"part {i} has positive self-pairing")
        arrows.extend([(i, i)] * n_loops)
    for i in range(r):
        for j in range(i + 1, r):
            di, dj = tau.parts[i][0], tau.parts[j][0]
            n_arr = -euler_form_sym(Q, di, dj)
            if n_arr < 0:
                raise InvalidType(f"parts {i},{j} have positive pairing")
            arrows.extend([(i, j)] * n_arr)
    return Quiver([f"t{i + 1}" for i in range(r)], arrows)


# -- fundamental set and reflections ----------------------------------------

def fundamental_set_member(Q: Quiver, d) -> bool:
    """d nonzero, (d, eps_i) <= 0 at every vertex, connected support."""
    n = Q.num_vertices
    if len(d) != n:
        raise DimensionMismatch("rank vector length must equal vertex count")
    if any(x < 0 for x in d) or all(x == 0 for x in d):
        return False
    eps = [0] * n
    for i in range(n):
        eps[i] = 1
        if euler_form_sym(Q, d, eps) > 0:
            return False
        eps[i] = 0
    support = [i for i in range(n) if d[i] > 0]
    return is_connected(restrict_vertices(Q, support))


def simple_reflection(Q: Quiver, i: int, d):
    """r_i(d) = d - (d, eps_i) eps_i; only at loop-free vertices."""
    n = Q.num_vertices
    if len(d) != n:
        raise DimensionMismatch("rank vector length must equal vertex count")
    if Q.loops_at(i) > 0:
        raise ReflectionAtImaginaryVertex(f"vertex {i} carries a loop")
    eps = [0] * n
    eps[i] = 1
    pairing = euler_form_sym(Q, d, eps)
    out = list(d)
    out[i] -= pairing
    return tuple(out)


# -- corpus of small connected quivers --------------------------------------

def connected_quiver_corpus(max_vertices: int = 4, max_edges: int = 6):
    """Connected quivers with at most the given sizes, one per isomorphism
    class of underlying multigraph (loops and parallel edges included).

    Every quantity this package verifies on the corpus is orientation
    independent, so arrows run from the lower vertex index to the higher.
    """
    from itertools import permutations

    corpus = []
    seen = set()
    for n in range(1, max_vertices + 1):
        slots = [(i, j) for i in range(n) for j in range(i, n)]
        for e in range(n - 1, max_edges + 1):
            for combo in combinations_with_replacement_tuples(len(slots), e):
                edges = tuple(slots[k] for k in combo)
                Q = Quiver([str(v + 1) for v in range(n)], edges)
                if not is_connected(Q):
                    continue
                canon = None
                for perm in permutations(range(n)):
                    mapped = tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in edges))
                    if canon is None or mapped < canon:
                        canon = mapped
                key = (n, canon)
                if key in seen:
                    continue
                seen.add(key)
                corpus.append(Quiver([str(v + 1) for v in range(n)],
                                     sorted(canon)))
    return corpus


def combinations_with_replacement_tuples(n_slots: int, k: int):
    """Index tuples 0 <= i_1 <= ... <= i_k < n_slots."""
    from itertools import combinations_with_replacement
    return combinations_with_replacement(range(n_slots), k)
