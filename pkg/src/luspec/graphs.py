"""The graphs D(4,q) and Gamma(4,q), their automorphism group, and exports.

Vertices carry coordinate 4-tuples over GF(q).  A tuple (c1, c2, c3, c4) of
element indices is encoded base q with c1 least significant:

    index = c1 + c2*q + c3*q^2 + c4*q^3

Points of D(4,q) occupy indices 0 .. q^4-1 and lines q^4 .. 2*q^4-1.  The
point P(p1..p4) and line L(l1..l4) are incident iff

    p2 + l2 = p1*l1,   p3 + l3 = p1*l2,   p4 + l4 = p2*l1

and two distinct points are adjacent in the collinearity graph Gamma iff

    p1 != p1',  (p1-p1')*(p4-p4') = (p2-p2')^2,  p3-p3' = p2*p1' - p1*p2'.

Gamma is also realized as a Cayley graph of the group G of upper unitriangular
5x5 matrices g(t,u,v,w); the closed-form product

    g(t,u,v,w) * g(t',u',v',w') = g(t+t', u+u', v+v'-2*t*u', w+w')

is derived once from the matrix form (and unit-tested against literal 5x5
multiplication).  The connection set is S = {g(t, r*t, -r*t^2, r^2*t): t != 0}.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import ff
from .ff import FieldElem, FieldSpec, SizeBudgetError

DEFAULT_MAX_GRAPH_Q = 13


class PointCoords(NamedTuple):
    p1: FieldElem
    p2: FieldElem
    p3: FieldElem
    p4: FieldElem


class LineCoords(NamedTuple):
    l1: FieldElem
    l2: FieldElem
    l3: FieldElem
    l4: FieldElem


class GroupElem(NamedTuple):
    t: FieldElem
    u: FieldElem
    v: FieldElem
    w: FieldElem


def incident(P: PointCoords, L: LineCoords) -> bool:
    return (P.p2 + L.l2 == P.p1 * L.l1
            and P.p3 + L.l3 == P.p1 * L.l2
            and P.p4 + L.l4 == P.p2 * L.l1)


def collinear(P: PointCoords, Q: PointCoords) -> bool:
    if P.p1 == Q.p1:
        return False
    d2 = P.p2 - Q.p2
    return ((P.p1 - Q.p1) * (P.p4 - Q.p4) == d2 * d2
            and P.p3 - Q.p3 == P.p2 * Q.p1 - P.p1 * Q.p2)


# ----------------------------------------------------------------------
# group law

def _two(spec: FieldSpec) -> FieldElem:
    return spec.element([2 % spec.p] + [0] * (spec.e - 1))


def group_identity(spec: FieldSpec) -> GroupElem:
    z = spec.zero
    return GroupElem(z, z, z, z)


def group_mul(g: GroupElem, h: GroupElem) -> GroupElem:
    two = _two(g.t.spec)
    return GroupElem(g.t + h.t, g.u + h.u,
                     g.v + h.v - two * g.t * h.u, g.w + h.w)


def group_inv(g: GroupElem) -> GroupElem:
    two = _two(g.t.spec)
    return GroupElem(-g.t, -g.u, -g.v - two * g.t * g.u, -g.w)


def group_commutator(g: GroupElem, h: GroupElem) -> GroupElem:
    return group_mul(group_mul(group_inv(g), group_inv(h)), group_mul(g, h))


def group_matrix(g: GroupElem):
    """The literal 5x5 unitriangular matrix of g, rows of FieldElems."""
    spec = g.t.spec
    z, o = spec.zero, spec.one
    t, u, v, w = g
    return ((o, t, u, v + t * u, w),
            (z, o, z, -u, z),
            (z, z, o, t, z),
            (z, z, z, o, z),
            (z, z, z, z, o))


def matrix_mul(A, B):
    n = len(A)
    spec = A[0][0].spec
    return tuple(
        tuple(sum((A[i][k] * B[k][j] for k in range(n)), spec.zero)
              for j in range(n))
        for i in range(n))


def act_point(P: PointCoords, g: GroupElem) -> PointCoords:
    """Right action of G on points: the row vector (1, p1..p4) times g."""
    t, u, v, w = g
    return PointCoords(P.p1 + t, P.p2 + u,
                       P.p3 + v + t * u - P.p1 * u + P.p2 * t, P.p4 + w)


def connection_set(spec: FieldSpec) -> list[GroupElem]:
    """S = {g(t, r*t, -r*t^2, r^2*t) : r in F, t != 0}, in (t, r) scan order."""
    out = []
    for ti in range(1, spec.q):
        t = FieldElem(spec, ti)
        for ri in range(spec.q):
            r = FieldElem(spec, ri)
            out.append(GroupElem(t, r * t, -(r * t * t), r * r * t))
    return out


def _connection_index_tuples(spec: FieldSpec):
    out = []
    for ti in range(1, spec.q):
        for ri in range(spec.q):
            u = spec.mul_i(ri, ti)
            v = spec.neg_i(spec.mul_i(u, ti))
            w = spec.mul_i(spec.mul_i(ri, ri), ti)
            out.append((ti, u, v, w))
    return out


# ----------------------------------------------------------------------
# adjacency structures

@dataclass(eq=False)
class AdjacencyStructure:
    """Regular undirected graph held as a sorted (n, degree) neighbor matrix."""

    name: str
    q: int
    n: int
    neighbors: np.ndarray
    bipartite: bool
    indexing: str = "base-q"

    @property
    def degree(self) -> int:
        return self.neighbors.shape[1]

    @property
    def num_edges(self) -> int:
        return self.n * self.degree // 2

    def edge_array(self) -> np.ndarray:
        """(m, 2) array of edges u < v, sorted by (u, v)."""
        d = self.degree
        u = np.repeat(np.arange(self.n, dtype=np.int64), d)
        v = self.neighbors.reshape(-1).astype(np.int64)
        mask = u < v
        return np.column_stack([u[mask], v[mask]])

    def to_dense(self, dtype=np.float64) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        rows = np.repeat(np.arange(self.n), self.degree)
        a[rows, self.neighbors.reshape(-1)] = 1
        return a

    def to_sparse(self):
        from scipy.sparse import csr_matrix
        d = self.degree
        indptr = np.arange(0, self.n * d + 1, d)
        data = np.ones(self.n * d, dtype=np.int8)
        return csr_matrix((data, self.neighbors.reshape(-1), indptr),
                          shape=(self.n, self.n))

    def validate(self):
        nb = self.neighbors
        if np.any(np.diff(nb, axis=1) <= 0):
            raise ValueError("neighbor rows must be strictly increasing")
        if np.any(nb == np.arange(self.n)[:, None]):
            raise ValueError("loops present")
        a = self.to_sparse()
        if (a != a.T).nnz:
            raise ValueError("adjacency is not symmetric")
        return True


def _coord_cols(q: int):
    idx = np.arange(q ** 4, dtype=np.int64)
    return idx % q, (idx // q) % q, (idx // q ** 2) % q, (idx // q ** 3) % q


def _check_size(spec: FieldSpec, max_q: int):
    if spec.q > max_q:
        raise SizeBudgetError(
            f"q={spec.q} exceeds the graph construction bound {max_q}")
    if spec.add_table is None:
        raise SizeBudgetError(f"q={spec.q} has no operation tables")


def build_gamma(spec: FieldSpec, max_q: int = DEFAULT_MAX_GRAPH_Q) -> AdjacencyStructure:
    """Point collinearity graph: q^4 vertices, q*(q-1)-regular."""
    _check_size(spec, max_q)
    q = spec.q
    add, sub, mul = spec.add_table, spec.sub_table, spec.mul_table
    P1, P2, P3, P4 = _coord_cols(q)
    n = q ** 4
    nb = np.empty((n, q * (q - 1)), dtype=np.int32)
    col = 0
    for d in range(1, q):  # d = p1' - p1 != 0
        ivd = int(spec.inv_table[d])
        Q1 = add[P1, d]
        for b in range(q):  # b = p2'
            e2 = sub[P2, b]
            Q4 = add[P4, mul[ivd, mul[e2, e2]]]
            Q3 = sub[P3, sub[mul[P2, Q1], mul[P1, b]]]
            nb[:, col] = Q1 + q * b + q * q * Q3 + q ** 3 * Q4
            col += 1
    nb.sort(axis=1)
    return AdjacencyStructure("GAMMA4", q, n, nb, bipartite=False)


def build_d4(spec: FieldSpec, max_q: int = DEFAULT_MAX_GRAPH_Q) -> AdjacencyStructure:
    """Bipartite point-line incidence graph: 2*q^4 vertices, q-regular."""
    _check_size(spec, max_q)
    q = spec.q
    sub, mul = spec.sub_table, spec.mul_table
    C1, C2, C3, C4 = _coord_cols(q)
    n4 = q ** 4
    nb_pts = np.empty((n4, q), dtype=np.int32)
    nb_lns = np.empty((n4, q), dtype=np.int32)
    for a in range(q):
        # lines through each point, parameterized by l1 = a
        L2 = sub[mul[C1, a], C2]
        L3 = sub[mul[C1, L2], C3]
        L4 = sub[mul[C2, a], C4]
        nb_pts[:, a] = n4 + (a + q * L2 + q * q * L3 + q ** 3 * L4)
        # points on each line, parameterized by p1 = a
        P2 = sub[mul[C1, a], C2]
        P3 = sub[mul[C2, a], C3]
        P4 = sub[mul[P2, C1], C4]
        nb_lns[:, a] = a + q * P2 + q * q * P3 + q ** 3 * P4
    nb = np.vstack([nb_pts, nb_lns])
    nb.sort(axis=1)
    return AdjacencyStructure("D4", q, 2 * n4, nb, bipartite=True)


def build_cayley(spec: FieldSpec, max_q: int = DEFAULT_MAX_GRAPH_Q) -> AdjacencyStructure:
    """Cay(G, S): vertex g(t,u,v,w) at index enc(t,u,v,w); g ~ g' iff g'*g^-1 in S."""
    _check_size(spec, max_q)
    q = spec.q
    add, sub, mul = spec.add_table, spec.sub_table, spec.mul_table
    T, U, V, W = _coord_cols(q)
    n = q ** 4
    two = 2 % spec.p
    nb = np.empty((n, q * (q - 1)), dtype=np.int32)
    for col, (ts, us, vs, ws) in enumerate(_connection_index_tuples(spec)):
        # left multiplication: s*g = (ts+t, us+u, vs+v-2*ts*u, ws+w)
        T2 = add[T, ts]
        U2 = add[U, us]
        V2 = sub[add[V, vs], mul[two, mul[ts, U]]]
        W2 = add[W, ws]
        nb[:, col] = T2 + q * U2 + q * q * V2 + q ** 3 * W2
    nb.sort(axis=1)
    return AdjacencyStructure("CAYLEY4", q, n, nb, bipartite=False)


def action_permutation(spec: FieldSpec, g: GroupElem) -> np.ndarray:
    """The permutation P -> P*g of point indices, vectorized over all points."""
    q = spec.q
    add, sub, mul = spec.add_table, spec.sub_table, spec.mul_table
    P1, P2, P3, P4 = _coord_cols(q)
    t, u, v, w = g.t.i, g.u.i, g.v.i, g.w.i
    tu = spec.mul_i(t, u)
    Q1 = add[P1, t]
    Q2 = add[P2, u]
    Q3 = add[P3, sub[add[spec.add_i(v, tu), mul[P2, t]], mul[P1, u]]]
    Q4 = add[P4, w]
    return (Q1 + q * Q2 + q * q * Q3 + q ** 3 * Q4).astype(np.int64)


def cayley_vertex_map(spec: FieldSpec) -> np.ndarray:
    """Permutation sigma with sigma[enc(g)] = point index of P(0,0,0,0)*g.

    P(0,0,0,0)*g(t,u,v,w) = P(t, u, v + t*u, w); this is the regular-action
    bijection carrying Cay(G, S) onto the collinearity graph.
    """
    q = spec.q
    add, mul = spec.add_table, spec.mul_table
    T, U, V, W = _coord_cols(q)
    VP = add[V, mul[T, U]]
    return (T + q * U + q * q * VP + q ** 3 * W).astype(np.int64)


def point_index(P: PointCoords) -> int:
    q = P.p1.spec.q
    return P.p1.i + q * P.p2.i + q * q * P.p3.i + q ** 3 * P.p4.i


def point_from_index(spec: FieldSpec, i: int) -> PointCoords:
    q = spec.q
    return PointCoords(FieldElem(spec, i % q), FieldElem(spec, (i // q) % q),
                       FieldElem(spec, (i // q ** 2) % q), FieldElem(spec, i // q ** 3))


def group_elem_index(g: GroupElem) -> int:
    q = g.t.spec.q
    return g.t.i + q * g.u.i + q * q * g.v.i + q ** 3 * g.w.i


def group_elem_from_index(spec: FieldSpec, i: int) -> GroupElem:
    q = spec.q
    return GroupElem(FieldElem(spec, i % q), FieldElem(spec, (i // q) % q),
                     FieldElem(spec, (i // q ** 2) % q), FieldElem(spec, i // q ** 3))


# ----------------------------------------------------------------------
# connectivity / girth / exports

def connected_components(adj: AdjacencyStructure):
    """(component count, sizes in decreasing order) by BFS."""
    comp = np.full(adj.n, -1, dtype=np.int64)
    sizes = []
    for start in range(adj.n):
        if comp[start] >= 0:
            continue
        c = len(sizes)
        comp[start] = c
        frontier = np.asarray([start])
        size = 1
        while frontier.size:
            nxt = np.unique(adj.neighbors[frontier].reshape(-1))
            nxt = nxt[comp[nxt] < 0]
            comp[nxt] = c
            size += nxt.size
            frontier = nxt
        sizes.append(size)
    return len(sizes), sorted(sizes, reverse=True)


def girth_at_least(adj: AdjacencyStructure, g: int = 8) -> bool:
    """True iff the graph has no cycle shorter than g (BFS to depth (g-1)//2)."""
    depth = (g - 1) // 2
    nb = adj.neighbors
    dist = np.full(adj.n, -1, dtype=np.int32)
    parent = np.full(adj.n, -1, dtype=np.int64)
    for root in range(adj.n):
        seen = [root]
        dist[root] = 0
        parent[root] = -1
        frontier = [root]
        ok = True
        for level in range(depth + 1):
            nxt = []
            for x in frontier:
                for y in nb[x]:
                    y = int(y)
                    if y == parent[x]:
                        continue
                    if dist[y] >= 0:
                        # non-tree edge closes a cycle of length <= sum + 1
                        if dist[y] + level + 1 < g:
                            ok = False
                            break
                    elif level < depth:
                        dist[y] = level + 1
                        parent[y] = x
                        seen.append(y)
                        nxt.append(y)
                if not ok:
                    break
            if not ok:
                break
            frontier = nxt
        dist[seen] = -1
        if not ok:
            return False
    return True


def write_edge_list(adj: AdjacencyStructure, fp, timestamp: str | None = None):
    """Header '# graph=.. q=.. vertices=.. edges=.. indexing=base-q', then 'u v' rows."""
    fp.write(f"# graph={adj.name} q={adj.q} vertices={adj.n} "
             f"edges={adj.num_edges} indexing={adj.indexing}\n")
    if timestamp:
        fp.write(f"# generated={timestamp}\n")
    for u, v in adj.edge_array():
        fp.write(f"{u} {v}\n")


def coordinate_dict(adj: AdjacencyStructure) -> dict:
    """Vertex index -> coordinate 4-tuple (points first; D4 lines follow)."""
    q = adj.q
    n4 = q ** 4
    coords = {}
    for i in range(adj.n):
        j = i - n4 if i >= n4 else i
        coords[str(i)] = [j % q, (j // q) % q, (j // q ** 2) % q, j // q ** 3]
    return coords


def write_coordinate_dict(adj: AdjacencyStructure, fp, timestamp: str | None = None):
    doc = {"graph": adj.name, "q": adj.q, "vertices": adj.n,
           "indexing": adj.indexing, "coords": coordinate_dict(adj)}
    if timestamp:
        doc["generated"] = timestamp
    json.dump(doc, fp, indent=None, separators=(",", ":"))
    fp.write("\n")
