"""Characters and degree-q representations of the vertex group G.

G has q^3 linear characters (it abelianizes over the derived subgroup
{g(0,0,v,0)}) plus q^2 - q irreducible representations of degree q,

    M[a,b](g(t,u,v,w))[i,j] = zeta^tr(a*(v - 2*i*u) + b*w) * delta(i+t, j),

indexed by pairs a != 0, b.  Summing M over the connection set S factors as
U * U^adj - q*I with U[i,j] = zeta^tr(a*i^2*j - b*i*j^2), which ties the
nontrivial eigenvalues to cubic exponential sums: M[a,b](S) has eigenvalue
multiset {eps_f^2 - q : f(t) = a'*t^3 + c*t, c in F} with a' = 1/(3ab) for
p >= 5, and the GR(9,e) family t^3 + 3*c*t for p = 3.

Matrices are materialized only at verification scale (q <= 7); the spectrum
assembly in :mod:`luspec.closedform` never builds them.  For p = 3 matrix
entries live in conductor 9 with zeta_3 = zeta_9^3.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import closedform, cyclo, ff, gr9, graphs
from .cyclo import CycInt, cyc_spec, embed, exp_sum_field
from .closedform import ExactValue, SpectrumMultiset
from .ff import FieldElem, FieldSpec


def _char_spec(spec: FieldSpec) -> tuple[cyclo.CycSpec, int]:
    """Conductor and exponent scale for zeta_p powers; p=3 embeds via zeta_9^3."""
    if spec.p == 3:
        return cyc_spec(9), 3
    return cyc_spec(spec.p), 1


def _zeta_pow(spec: FieldSpec, k: int) -> CycInt:
    cspec, scale = _char_spec(spec)
    return cyclo.zeta(cspec, scale * (k % spec.p))


@dataclass(frozen=True)
class CharValue:
    label: tuple
    value: int
    root_count: int | None = None


def linear_char_value(alpha: FieldElem, beta: FieldElem, gamma: FieldElem) -> CharValue:
    """Character sum over S for odd q: (m-1)*q with m = #roots of
    alpha + beta*r + gamma*r^2 (m = q for the trivial character)."""
    spec = alpha.spec
    if spec.q % 2 == 0:
        raise ValueError("linear_char_value is the odd-q form")
    m = 0
    for r in spec.elements():
        if alpha + beta * r + gamma * r * r == spec.zero:
            m += 1
    return CharValue((alpha.i, beta.i, gamma.i), (m - 1) * spec.q, m)


def linear_char_sum_direct(alpha: FieldElem, beta: FieldElem,
                           gamma: FieldElem) -> CycInt:
    """The same sum evaluated literally over S (cross-check path)."""
    spec = alpha.spec
    cspec, scale = _char_spec(spec)
    hist = [0] * cspec.n
    for g in graphs.connection_set(spec):
        k = ff.trace(alpha * g.t + beta * g.u + gamma * g.w)
        hist[(scale * k) % cspec.n] += 1
    return CycInt.from_histogram(cspec, hist)


def even_char_value(alpha: FieldElem, beta: FieldElem, gamma: FieldElem,
                    eta: FieldElem) -> CharValue:
    """Even-q character sum over S, computed directly and verified against
    the reduced form q * sum_{t != 0, beta^2 t + gamma^2 t^3 = eta} (-1)^tr(alpha*t)."""
    spec = alpha.spec
    q = spec.q
    if q % 2:
        raise ValueError("even_char_value needs even q")
    total = 0
    for g in graphs.connection_set(spec):
        k = ff.trace(alpha * g.t + beta * g.u + gamma * g.v + eta * g.w)
        total += 1 if k == 0 else -1
    reduced = 0
    b2, g2 = beta * beta, gamma * gamma
    for t in spec.elements():
        if t.i and b2 * t + g2 * t * t * t == eta:
            reduced += 1 if ff.trace(alpha * t) == 0 else -1
    assert total == q * reduced, "direct and reduced character sums disagree"
    return CharValue((alpha.i, beta.i, gamma.i, eta.i), total)


# ----------------------------------------------------------------------
# representation matrices

@dataclass(eq=False)
class RepMatrix:
    """q x q matrix of exact cyclotomic entries, rows/cols in element order."""

    label: tuple
    entries: np.ndarray  # object array of CycInt

    @property
    def size(self) -> int:
        return self.entries.shape[0]

    def conj_transpose(self) -> "RepMatrix":
        n = self.size
        out = np.empty((n, n), dtype=object)
        for i in range(n):
            for j in range(n):
                out[i, j] = self.entries[j, i].conj()
        return RepMatrix(self.label + ("*",), out)

    def __matmul__(self, other: "RepMatrix") -> "RepMatrix":
        n = self.size
        a, b = self.entries, other.entries
        out = np.empty((n, n), dtype=object)
        for i in range(n):
            for j in range(n):
                acc = a[i, 0] * b[0, j]
                for k in range(1, n):
                    acc = acc + a[i, k] * b[k, j]
                out[i, j] = acc
        return RepMatrix(("prod",), out)

    def __eq__(self, other):
        return (isinstance(other, RepMatrix) and self.size == other.size
                and all(self.entries[i, j] == other.entries[i, j]
                        for i in range(self.size) for j in range(self.size)))

    def is_hermitian(self) -> bool:
        return self == self.conj_transpose()

    def trace_sum(self) -> CycInt:
        acc = self.entries[0, 0]
        for i in range(1, self.size):
            acc = acc + self.entries[i, i]
        return acc

    def embed(self) -> np.ndarray:
        n = self.size
        out = np.empty((n, n), dtype=complex)
        for i in range(n):
            for j in range(n):
                out[i, j] = embed(self.entries[i, j])
        return out

    def eigenvalues(self) -> np.ndarray:
        """Numeric eigenvalues; Hermitian-symmetrized before decomposition."""
        m = self.embed()
        return np.linalg.eigvalsh((m + m.conj().T) / 2)


def rep_matrix(alpha: FieldElem, beta: FieldElem, g: graphs.GroupElem) -> RepMatrix:
    """M[alpha,beta](g) for a single group element."""
    spec = alpha.spec
    q = spec.q
    two = spec.element([2 % spec.p] + [0] * (spec.e - 1))
    zero = cyclo.CycInt.integer(_char_spec(spec)[0], 0)
    out = np.full((q, q), zero, dtype=object)
    for ii in range(q):
        i = FieldElem(spec, ii)
        k = ff.trace(alpha * (g.v - two * i * g.u) + beta * g.w)
        out[ii, (i + g.t).i] = _zeta_pow(spec, k)
    return RepMatrix((alpha.i, beta.i, "g"), out)


def build_M(alpha: FieldElem, beta: FieldElem, spec: FieldSpec) -> RepMatrix:
    """M[alpha,beta](S) = sum over the connection set, exact."""
    if spec.q % 2 == 0:
        raise ValueError("the degree-q representations need odd q")
    if alpha.i == 0:
        raise ValueError("alpha must be nonzero")
    q = spec.q
    two = spec.element([2 % spec.p] + [0] * (spec.e - 1))
    zero = cyclo.CycInt.integer(_char_spec(spec)[0], 0)
    acc = np.full((q, q), zero, dtype=object)
    for g in graphs.connection_set(spec):
        t = g.t.i
        for ii in range(q):
            i = FieldElem(spec, ii)
            k = ff.trace(alpha * (g.v - two * i * g.u) + beta * g.w)
            jj = spec.add_i(ii, t)
            acc[ii, jj] = acc[ii, jj] + _zeta_pow(spec, k)
    return RepMatrix((alpha.i, beta.i, "S"), acc)


def build_U(alpha: FieldElem, beta: FieldElem, spec: FieldSpec) -> RepMatrix:
    """U[alpha,beta][i,j] = zeta^tr(alpha*i^2*j - beta*i*j^2)."""
    q = spec.q
    out = np.empty((q, q), dtype=object)
    for ii in range(q):
        i = FieldElem(spec, ii)
        for jj in range(q):
            j = FieldElem(spec, jj)
            k = ff.trace(alpha * i * i * j - beta * i * j * j)
            out[ii, jj] = _zeta_pow(spec, k)
    return RepMatrix((alpha.i, beta.i, "U"), out)


def m_from_u(alpha: FieldElem, beta: FieldElem, spec: FieldSpec) -> RepMatrix:
    """U * U^adj - q*I, the factored form of M[alpha,beta](S)."""
    u = build_U(alpha, beta, spec)
    prod = u @ u.conj_transpose()
    q = spec.q
    for i in range(q):
        prod.entries[i, i] = prod.entries[i, i] - q
    return RepMatrix((alpha.i, beta.i, "UU*-qI"), prod.entries)


def psi_value(alpha: FieldElem, beta: FieldElem, g: graphs.GroupElem) -> CycInt:
    """Character of M[alpha,beta]: q * zeta^tr(alpha v + beta w) on the
    centre (t = u = 0), zero elsewhere."""
    spec = alpha.spec
    cspec, _ = _char_spec(spec)
    if g.t.i or g.u.i:
        return CycInt.integer(cspec, 0)
    return spec.q * _zeta_pow(spec, ff.trace(alpha * g.v + beta * g.w))


def psi_orthogonality(spec: FieldSpec) -> bool:
    """First orthogonality over all pairs of degree-q characters (full group sum)."""
    q = spec.q
    if q % 2 == 0 or q > 7:
        raise ValueError("orthogonality sweep is an odd-q, q <= 7 check")
    cspec, _ = _char_spec(spec)
    labels = [(FieldElem(spec, a), FieldElem(spec, b))
              for a in range(1, q) for b in range(q)]
    elems = [graphs.group_elem_from_index(spec, i) for i in range(q ** 4)]
    values = {}
    for a, b in labels:
        values[(a.i, b.i)] = [psi_value(a, b, g) for g in elems]
    zero = CycInt.integer(cspec, 0)
    for a, b in labels:
        va = values[(a.i, b.i)]
        for a2, b2 in labels:
            vb = values[(a2.i, b2.i)]
            acc = zero
            for x, y in zip(va, vb):
                if x != zero and y != zero:
                    acc = acc + x * y.conj()
            want = q ** 4 if (a.i, b.i) == (a2.i, b2.i) else 0
            if not (acc.is_rational and acc.as_int == want):
                return False
    return True


def eigen_via_epsilon(alpha: FieldElem, beta: FieldElem) -> SpectrumMultiset:
    """Exact eigenvalue multiset {eps_f^2 - q} of M[alpha,beta](S)."""
    spec = alpha.spec
    q = spec.q
    if spec.p == 2:
        raise ValueError("no degree-q representations for p = 2")
    if alpha.i == 0 or beta.i == 0:
        raise ValueError("the eps route needs alpha*beta != 0")
    pairs = []
    if spec.p == 3:
        R = gr9.gr9_make(spec.e)
        three = R.element(3)
        for c in R.teich:
            eps = cyclo.exp_sum_gr([R.zero, three * c, R.zero, R.one], R)
            pairs.append((ExactValue.eps_shift(eps, q), 1))
    else:
        three = spec.element([3 % spec.p] + [0] * (spec.e - 1))
        a = (three * alpha * beta) ** (-1)
        for c in range(q):
            eps = exp_sum_field([0, c, 0, a.i], spec)
            pairs.append((ExactValue.eps_shift(eps, q), 1))
    return SpectrumMultiset.assemble(f"M[{alpha.i},{beta.i}]", q, pairs,
                                     expected_total=q)


def conjugacy_class_data(spec: FieldSpec):
    """(class count, size histogram) of G by exhaustive orbit computation."""
    q = spec.q
    n = q ** 4
    add, sub, mul = spec.add_table, spec.sub_table, spec.mul_table
    idx = np.arange(n, dtype=np.int64)
    T, U, V, W = idx % q, (idx // q) % q, (idx // q ** 2) % q, idx // q ** 3
    two = 2 % spec.p
    orbmin = idx.copy()
    for h in range(n):
        th, uh = h % q, (h // q) % q
        # h g h^-1 = g(t, u, v + 2*(t*uh - u*th), w)
        shift = mul[two, sub[mul[T, uh], mul[U, th]]]
        conj = T + q * U + q * q * add[V, shift] + q ** 3 * W
        np.minimum(orbmin, conj, out=orbmin)
    classes, sizes = np.unique(orbmin, return_counts=True)
    hist: dict[int, int] = {}
    for s in sizes:
        hist[int(s)] = hist.get(int(s), 0) + 1
    return len(classes), hist


def irreducible_degree_check(spec: FieldSpec) -> bool:
    """Sum of squared degrees over the constructed irreducibles equals |G|."""
    q = spec.q
    return q ** 3 * 1 + (q * q - q) * q * q == q ** 4
