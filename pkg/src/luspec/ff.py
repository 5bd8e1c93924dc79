"""Arithmetic in the finite fields GF(p^e).

A field is described by a :class:`FieldSpec` holding the characteristic p,
the extension degree e, and a fixed monic irreducible modulus of degree e
over F_p.  Elements are residues of degree < e, stored by the index
``sum(c_i * p**i)`` of their coefficient vector ``(c_0, ..., c_{e-1})``;
index order is the canonical element order used everywhere (vertex labels,
the "smallest" primitive element, table layouts).

The modulus is chosen deterministically: the lexicographically smallest
monic irreducible polynomial of degree e, comparing coefficient tuples
constant term first.  This keeps every derived object reproducible.

For small fields (q <= TABLE_LIMIT) full operation tables are precomputed
as numpy arrays; the graph builders and character sums index them directly.
Larger fields fall back to per-element polynomial arithmetic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

DEFAULT_MAX_Q = 1 << 20
TABLE_LIMIT = 256


class SizeBudgetError(ValueError):
    """Raised when a construction exceeds its configured size bound."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorization, {prime: exponent}."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(q: int):
    """Return (p, e) with q = p**e, or None if q is not a prime power."""
    if q < 2:
        return None
    f = factorize(q)
    if len(f) != 1:
        return None
    [(p, e)] = f.items()
    return p, e


# ----------------------------------------------------------------------
# dense polynomial arithmetic over F_p (tuples, constant term first)

def _ptrim(c):
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def _pmulmod(a, b, modulus, p):
    """a*b mod (modulus, p); modulus monic, full coefficient tuple."""
    if not a or not b:
        return ()
    c = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                c[i + j] = (c[i + j] + ai * bj) % p
    e = len(modulus) - 1
    for k in range(len(c) - 1, e - 1, -1):
        ck = c[k]
        if ck:
            c[k] = 0
            for j in range(e):
                c[k - e + j] = (c[k - e + j] - ck * modulus[j]) % p
    return _ptrim(c)


def _ppow(a, n, modulus, p):
    result = (1,)
    base = a
    while n > 0:
        if n & 1:
            result = _pmulmod(result, base, modulus, p)
        base = _pmulmod(base, base, modulus, p)
        n >>= 1
    return result


def _pgcd(a, b, p):
    a, b = _ptrim(a), _ptrim(b)
    while b:
        inv_lead = pow(b[-1], p - 2, p)
        r = list(a)
        db, da = len(b) - 1, len(r) - 1
        while da >= db and any(r):
            lead = r[da]
            if lead:
                f = (lead * inv_lead) % p
                for j in range(db + 1):
                    r[da - db + j] = (r[da - db + j] - f * b[j]) % p
            da -= 1
        a, b = b, _ptrim(r)
    return a


def is_irreducible(modulus, p: int) -> bool:
    """Monic polynomial irreducibility over F_p.

    Uses the standard criterion: x^(p^e) == x mod f, and for every prime
    r | e the polynomial x^(p^(e/r)) - x is coprime to f.
    """
    e = len(modulus) - 1
    if e == 1:
        return True
    x = (0, 1)
    t = x
    for _ in range(e):
        t = _ppow(t, p, modulus, p)
    if t != x:
        return False
    for r in factorize(e):
        t = x
        for _ in range(e // r):
            t = _ppow(t, p, modulus, p)
        diff = list(t) + [0] * max(0, 2 - len(t))
        diff[1] = (diff[1] - 1) % p
        g = _pgcd(_ptrim(diff), modulus, p)
        if len(g) > 1:
            return False
    return True


def smallest_irreducible(p: int, e: int):
    """Lexicographically smallest monic irreducible of degree e over F_p
    (low-degree coefficients compared first)."""
    for low in itertools.product(range(p), repeat=e):
        cand = low + (1,)
        if is_irreducible(cand, p):
            return cand
    raise RuntimeError(f"no irreducible polynomial of degree {e} over F_{p}")


# ----------------------------------------------------------------------

class FieldElem:
    """Immutable element of GF(p^e), identified by its index in the spec."""

    __slots__ = ("spec", "i")

    def __init__(self, spec: "FieldSpec", i: int):
        self.spec = spec
        self.i = i

    @property
    def coeffs(self):
        return self.spec.index_coeffs(self.i)

    def _other(self, other):
        if not isinstance(other, FieldElem):
            raise TypeError(f"cannot combine FieldElem with {type(other).__name__}")
        if other.spec.key != self.spec.key:
            raise ValueError("mismatched field specs")
        return other

    def __add__(self, other):
        o = self._other(other)
        return FieldElem(self.spec, self.spec.add_i(self.i, o.i))

    def __sub__(self, other):
        o = self._other(other)
        return FieldElem(self.spec, self.spec.sub_i(self.i, o.i))

    def __neg__(self):
        return FieldElem(self.spec, self.spec.neg_i(self.i))

    def __mul__(self, other):
        o = self._other(other)
        return FieldElem(self.spec, self.spec.mul_i(self.i, o.i))

    def __truediv__(self, other):
        o = self._other(other)
        return FieldElem(self.spec, self.spec.div_i(self.i, o.i))

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        return FieldElem(self.spec, self.spec.pow_i(self.i, n))

    def __eq__(self, other):
        return (isinstance(other, FieldElem)
                and other.spec.key == self.spec.key and other.i == self.i)

    def __hash__(self):
        return hash((self.spec.key, self.i))

    def __bool__(self):
        return self.i != 0

    def __repr__(self):
        return f"F{self.spec.q}({self.i})"


class FieldSpec:
    """GF(p^e) with a fixed defining polynomial; immutable and shareable."""

    __slots__ = ("p", "e", "q", "modulus", "key",
                 "add_table", "sub_table", "mul_table", "neg_table",
                 "inv_table", "trace_table", "frob_table",
                 "exp_table", "log_table", "_gen_index")

    def __init__(self, p: int, e: int, max_q: int = DEFAULT_MAX_Q):
        if not is_prime(p):
            raise ValueError(f"p={p} is not prime")
        if e < 1:
            raise ValueError(f"e={e} must be >= 1")
        q = p ** e
        if q > max_q:
            raise SizeBudgetError(f"q={q} exceeds the size bound {max_q}")
        self.p, self.e, self.q = p, e, q
        self.modulus = smallest_irreducible(p, e)
        self.key = (p, e, self.modulus)
        self._gen_index = None
        if q <= TABLE_LIMIT:
            self._build_tables()
        else:
            self.add_table = self.sub_table = self.mul_table = None
            self.neg_table = self.inv_table = None
            self.trace_table = self.frob_table = None
            self.exp_table = self.log_table = None

    # -- index <-> coefficient vector

    def index_coeffs(self, i: int):
        p = self.p
        out = []
        for _ in range(self.e):
            i, r = divmod(i, p)
            out.append(r)
        return tuple(out)

    def coeffs_index(self, coeffs) -> int:
        p = self.p
        i = 0
        for c in reversed(list(coeffs)):
            i = i * p + (c % p)
        return i

    def element(self, x) -> FieldElem:
        if isinstance(x, FieldElem):
            if x.spec.key != self.key:
                raise ValueError("mismatched field specs")
            return x
        if isinstance(x, (int, np.integer)):
            if self.e == 1:
                return FieldElem(self, int(x) % self.p)
            if 0 <= x < self.q:
                return FieldElem(self, int(x))
            raise ValueError(f"index {x} out of range for GF({self.q}); "
                             "pass a coefficient sequence instead")
        return FieldElem(self, self.coeffs_index(x))

    @property
    def zero(self) -> FieldElem:
        return FieldElem(self, 0)

    @property
    def one(self) -> FieldElem:
        return FieldElem(self, 1)

    def elements(self):
        return (FieldElem(self, i) for i in range(self.q))

    # -- table construction

    def _build_tables(self):
        p, e, q = self.p, self.e, self.q
        idx = np.arange(q, dtype=np.int64)
        digits = np.empty((q, e), dtype=np.int64)
        t = idx.copy()
        for j in range(e):
            digits[:, j] = t % p
            t //= p
        weights = p ** np.arange(e, dtype=np.int64)

        add = np.zeros((q, q), dtype=np.int64)
        for j in range(e):
            add += ((digits[:, None, j] + digits[None, :, j]) % p) * weights[j]
        self.add_table = add
        self.neg_table = np.asarray(
            [self.coeffs_index([-c for c in self.index_coeffs(i)]) for i in range(q)],
            dtype=np.int64)
        self.sub_table = add[:, self.neg_table]

        gen = self._find_generator()
        self._gen_index = gen
        exp = np.empty(q - 1, dtype=np.int64)
        exp[0] = 1
        gpoly = _ptrim(self.index_coeffs(gen))
        acc = (1,)
        for k in range(1, q - 1):
            acc = _pmulmod(acc, gpoly, self.modulus, p)
            exp[k] = self.coeffs_index(acc + (0,) * e)
        log = np.full(q, -1, dtype=np.int64)
        log[exp] = np.arange(q - 1)
        self.exp_table, self.log_table = exp, log

        mul = np.zeros((q, q), dtype=np.int64)
        if q > 1:
            nz = exp[(log[1:, None] + log[None, 1:]) % (q - 1)]
            mul[1:, 1:] = nz
        self.mul_table = mul
        inv = np.zeros(q, dtype=np.int64)
        inv[1:] = exp[(-log[1:]) % (q - 1)]
        self.inv_table = inv

        tr_basis = np.asarray([self._basis_trace(j) for j in range(e)], dtype=np.int64)
        self.trace_table = (digits @ tr_basis) % p
        frob_rows = np.asarray(
            [(list(_ppow((0,) * j + (1,), p, self.modulus, p)) + [0] * e)[:e]
             for j in range(e)], dtype=np.int64)
        self.frob_table = ((digits @ frob_rows) % p) @ weights

    def _basis_trace(self, j: int) -> int:
        base = _ptrim((0,) * j + (1,))
        t = base
        acc = list(base) + [0] * self.e
        for _ in range(self.e - 1):
            t = _ppow(t, self.p, self.modulus, self.p)
            for k, c in enumerate(t):
                acc[k] = (acc[k] + c) % self.p
        assert not any(acc[1:self.e]), "trace of a basis element must be scalar"
        return acc[0]

    def _find_generator(self) -> int:
        if self.q == 2:
            return 1
        order_facts = list(factorize(self.q - 1))
        for i in range(1, self.q):
            a = _ptrim(self.index_coeffs(i))
            if all(_ppow(a, (self.q - 1) // r, self.modulus, self.p) != (1,)
                   for r in order_facts):
                return i
        raise RuntimeError("no generator found")  # pragma: no cover

    # -- index-level operations (fast tables, polynomial fallback)

    def add_i(self, a: int, b: int) -> int:
        if self.add_table is not None:
            return int(self.add_table[a, b])
        ca, cb = self.index_coeffs(a), self.index_coeffs(b)
        return self.coeffs_index([x + y for x, y in zip(ca, cb)])

    def sub_i(self, a: int, b: int) -> int:
        return self.add_i(a, self.neg_i(b))

    def neg_i(self, a: int) -> int:
        if self.neg_table is not None:
            return int(self.neg_table[a])
        return self.coeffs_index([-c for c in self.index_coeffs(a)])

    def mul_i(self, a: int, b: int) -> int:
        if self.mul_table is not None:
            return int(self.mul_table[a, b])
        c = _pmulmod(_ptrim(self.index_coeffs(a)), _ptrim(self.index_coeffs(b)),
                     self.modulus, self.p)
        return self.coeffs_index(c + (0,) * self.e)

    def inv_i(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("division by zero in GF(q)")
        if self.inv_table is not None:
            return int(self.inv_table[a])
        return self.pow_i(a, self.q - 2)

    def div_i(self, a: int, b: int) -> int:
        return self.mul_i(a, self.inv_i(b))

    def pow_i(self, a: int, n: int) -> int:
        if a == 0:
            if n > 0:
                return 0
            if n == 0:
                return 1
            raise ZeroDivisionError("0 cannot be raised to a negative power")
        if self.log_table is not None:
            return int(self.exp_table[(int(self.log_table[a]) * n) % (self.q - 1)])
        c = _ppow(_ptrim(self.index_coeffs(a)), n % (self.q - 1), self.modulus, self.p)
        return self.coeffs_index(c + (0,) * self.e)

    def trace_i(self, a: int) -> int:
        if self.trace_table is not None:
            return int(self.trace_table[a])
        acc_vec = [0] * self.e
        t = a
        for _ in range(self.e):
            for k, c in enumerate(self.index_coeffs(t)):
                acc_vec[k] = (acc_vec[k] + c) % self.p
            t = self.pow_i(t, self.p)
        assert not any(acc_vec[1:])
        return acc_vec[0]

    def eval_poly_i(self, coeffs, a: int) -> int:
        """Horner evaluation of a polynomial given by element indices."""
        acc = 0
        for c in reversed(list(coeffs)):
            acc = self.add_i(self.mul_i(acc, a), c)
        return acc

    def __repr__(self):
        return f"FieldSpec(GF({self.q}) = GF({self.p}^{self.e}), modulus={self.modulus})"


_SPEC_CACHE: dict[tuple[int, int], FieldSpec] = {}


def ff_make(p: int, e: int, max_q: int = DEFAULT_MAX_Q) -> FieldSpec:
    """Deterministic field constructor; instances are cached per (p, e)."""
    q = p ** e if e >= 1 else 0
    if q > max_q:
        raise SizeBudgetError(f"q={q} exceeds the size bound {max_q}")
    key = (p, e)
    spec = _SPEC_CACHE.get(key)
    if spec is None:
        spec = FieldSpec(p, e, max_q=max_q)
        _SPEC_CACHE[key] = spec
    return spec


def field_for(q: int, max_q: int = DEFAULT_MAX_Q) -> FieldSpec:
    """Field of order q; rejects non prime powers."""
    pe = prime_power(q)
    if pe is None:
        raise ValueError(f"q={q} is not a prime power; GF(q) does not exist")
    return ff_make(*pe, max_q=max_q)


_ARITH_OPS = {"add", "sub", "mul", "div", "pow"}


def ff_arith(a: FieldElem, b, op: str) -> FieldElem:
    """Named arithmetic dispatch; 'pow' reads b as an integer exponent."""
    if op not in _ARITH_OPS:
        raise ValueError(f"unknown op {op!r}")
    if op == "pow":
        n = b.i if isinstance(b, FieldElem) else int(b)
        return a ** n
    if not isinstance(b, FieldElem) or b.spec.key != a.spec.key:
        raise ValueError("mismatched field specs")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    return a / b


def trace(a: FieldElem) -> int:
    """Absolute trace GF(p^e) -> F_p, as an integer in [0, p)."""
    return a.spec.trace_i(a.i)


def primitive_element(spec: FieldSpec) -> FieldElem:
    """Smallest element (index order) of multiplicative order q - 1."""
    if spec._gen_index is None:
        spec._gen_index = spec._find_generator()
    return FieldElem(spec, spec._gen_index)


def cube_root(a: FieldElem) -> FieldElem:
    """Unique cube root when cubing is a bijection (q not 1 mod 3)."""
    spec = a.spec
    if spec.q % 3 == 1:
        raise ValueError(f"cubing is not injective in GF({spec.q}) (q = 1 mod 3)")
    if spec.p == 3:
        return a ** (3 ** (spec.e - 1))
    return a ** ((2 * spec.q - 1) // 3)


def moment_sum(spec: FieldSpec, k: int) -> int:
    """sum(a**k for a in GF(q)) as an element of the prime subfield.

    Exists as a self-test of the arithmetic: the value must be -1 mod p
    when (q-1) | k, k >= 1, and 0 otherwise.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    acc = 0
    for i in range(spec.q):
        term = 1 if (k == 0 and i == 0) else spec.pow_i(i, k)
        acc = spec.add_i(acc, term)
    coeffs = spec.index_coeffs(acc)
    assert not any(coeffs[1:]), "moment sum must lie in the prime subfield"
    return coeffs[0]


@dataclass(frozen=True)
class RootProfile:
    """Distribution of root counts over a family of polynomials."""
    q: int
    counts: dict

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def count(self, k: int) -> int:
        return self.counts.get(k, 0)


def quadratic_root_profile(spec: FieldSpec) -> RootProfile:
    """Root-count profile of all nonzero a2*t^2 + a1*t + a0 over GF(q)."""
    q = spec.q
    counts: dict[int, int] = {}
    # v(t) = a2*t^2 + a1*t; the number of roots of v(t) + a0 is the number
    # of t with v(t) == -a0, read off a value histogram.
    for a2 in range(q):
        for a1 in range(q):
            hist = [0] * q
            for t in range(q):
                v = spec.add_i(spec.mul_i(a2, spec.mul_i(t, t)), spec.mul_i(a1, t))
                hist[v] += 1
            for a0 in range(q):
                if a2 == 0 and a1 == 0 and a0 == 0:
                    continue
                k = hist[spec.neg_i(a0)]
                counts[k] = counts.get(k, 0) + 1
    return RootProfile(q, counts)


def cubic_root_profile_even(spec: FieldSpec) -> RootProfile:
    """Nonzero-root profile of all nonzero a3*t^3 + a1*t + a0, q even."""
    q = spec.q
    if q % 2:
        raise ValueError("even-characteristic profile requested for odd q")
    counts: dict[int, int] = {}
    for a3 in range(q):
        for a1 in range(q):
            hist = [0] * q
            for t in range(1, q):  # nonzero roots only
                v = spec.add_i(spec.mul_i(a3, spec.pow_i(t, 3)), spec.mul_i(a1, t))
                hist[v] += 1
            for a0 in range(q):
                if a3 == 0 and a1 == 0 and a0 == 0:
                    continue
                k = hist[spec.neg_i(a0)]
                counts[k] = counts.get(k, 0) + 1
    return RootProfile(q, counts)


def quadratic_profile_expected(q: int) -> dict:
    """Closed-form quadratic profile {k: n_k}."""
    return {0: (q - 1) * (q * q - q + 2) // 2,
            1: 2 * q * (q - 1),
            2: q * (q - 1) ** 2 // 2}


def cubic_even_profile_expected(q: int) -> dict:
    """Closed-form even-q cubic nonzero-root profile {k: n_k}."""
    return {0: (q - 1) * (q * q + 8) // 3,
            1: (q - 1) ** 2 * (q + 4) // 2,
            3: (q - 1) ** 2 * (q - 2) // 6}
