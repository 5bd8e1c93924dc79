"""Exact cyclotomic integers and the exponential sums of the spectra.

Values live in Z[zeta_n] for a restricted set of conductors: n = 2, an odd
prime, or 9 (the characteristic-9 route for q = 3^e).  Elements are integer
vectors in the power basis 1, zeta, ..., zeta^(phi(n)-1), reduced eagerly
modulo the n-th cyclotomic polynomial, so representations are unique and
equality is exact.

The reductions used:
  * n prime:  zeta^(n-1) = -(1 + zeta + ... + zeta^(n-2))
  * n = 9:    zeta^(6+k) = -zeta^k - zeta^(3+k)   (Phi_9 = x^6 + x^3 + 1)
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import ff, gr9


class CycSpec:
    """Conductor data: n, phi(n) and the complex embedding root."""

    __slots__ = ("n", "phi", "roots")

    def __init__(self, n: int):
        if not (n == 2 or n == 9 or (n > 2 and ff.is_prime(n))):
            raise ValueError(f"conductor {n} not supported (use 2, an odd prime, or 9)")
        self.n = n
        self.phi = 6 if n == 9 else n - 1
        self.roots = tuple(cmath.exp(2j * cmath.pi * k / n) for k in range(n))

    def __repr__(self):
        return f"CycSpec(n={self.n})"


@lru_cache(maxsize=None)
def cyc_spec(n: int) -> CycSpec:
    return CycSpec(n)


def _reduce_histogram(spec: CycSpec, hist):
    """Exponent histogram of length n -> canonical power-basis coefficients."""
    n = spec.n
    h = list(hist)
    assert len(h) == n
    if n == 9:
        c = h[:6]
        for k in range(3):
            c[k] -= h[6 + k]
            c[3 + k] -= h[6 + k]
        return tuple(c)
    top = h[n - 1]
    return tuple(h[k] - top for k in range(n - 1))


class CycInt:
    """Exact element of Z[zeta_n] in reduced power-basis form."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: CycSpec, coeffs):
        self.spec = spec
        coeffs = tuple(int(c) for c in coeffs)
        assert len(coeffs) == spec.phi
        self.coeffs = coeffs

    @classmethod
    def from_histogram(cls, spec: CycSpec, hist) -> "CycInt":
        return cls(spec, _reduce_histogram(spec, hist))

    @classmethod
    def integer(cls, spec: CycSpec, n: int) -> "CycInt":
        return cls(spec, (n,) + (0,) * (spec.phi - 1))

    def _other(self, other):
        if isinstance(other, int):
            return CycInt.integer(self.spec, other)
        if not isinstance(other, CycInt):
            raise TypeError(f"cannot combine CycInt with {type(other).__name__}")
        if other.spec.n != self.spec.n:
            raise ValueError("mismatched conductors")
        return other

    def __add__(self, other):
        o = self._other(other)
        return CycInt(self.spec, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return CycInt(self.spec, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return CycInt(self.spec, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt(self.spec, [other * a for a in self.coeffs])
        o = self._other(other)
        n = self.spec.n
        hist = [0] * n
        for i, ai in enumerate(self.coeffs):
            if ai:
                for j, bj in enumerate(o.coeffs):
                    if bj:
                        hist[(i + j) % n] += ai * bj
        return CycInt.from_histogram(self.spec, hist)

    __rmul__ = __mul__

    def conj(self) -> "CycInt":
        n = self.spec.n
        hist = [0] * n
        for k, c in enumerate(self.coeffs):
            hist[(-k) % n] += c
        return CycInt.from_histogram(self.spec, hist)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_rational and self.coeffs[0] == other
        return (isinstance(other, CycInt)
                and other.spec.n == self.spec.n and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash((self.spec.n, self.coeffs))

    @property
    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    @property
    def as_int(self) -> int:
        if not self.is_rational:
            raise ValueError(f"{self!r} is not a rational integer")
        return self.coeffs[0]

    def __repr__(self):
        return f"CycInt(n={self.spec.n}, {list(self.coeffs)})"


def zeta(spec: CycSpec, k: int = 1) -> CycInt:
    hist = [0] * spec.n
    hist[k % spec.n] = 1
    return CycInt.from_histogram(spec, hist)


def cyc_arith(a: CycInt, b, op: str) -> CycInt:
    """Named dispatch; 'conj' is unary (b ignored)."""
    if op == "add":
        return a + a._other(b)
    if op == "sub":
        return a - a._other(b)
    if op == "mul":
        return a * a._other(b)
    if op == "conj":
        return a.conj()
    raise ValueError(f"unknown op {op!r}")


def embed(a: CycInt) -> complex:
    """Evaluate at exp(2*pi*i/n) in double precision.

    Rounding error is at most about phi(n) * max|coeff| * 2**-50.
    """
    roots = a.spec.roots
    return sum(c * roots[k % a.spec.n] for k, c in enumerate(a.coeffs) if c)


def exp_sum_field(f, spec: ff.FieldSpec) -> CycInt:
    """sum over a in GF(q) of zeta_p^trace(f(a)), exact in Z[zeta_p].

    ``f`` is a polynomial given as a coefficient sequence (constant term
    first) of FieldElems or element indices.
    """
    coeffs = [c.i if isinstance(c, ff.FieldElem) else int(c) for c in f]
    p = spec.p
    cspec = cyc_spec(p)
    hist = [0] * p
    if spec.trace_table is not None and spec.mul_table is not None:
        vals = np.zeros(spec.q, dtype=np.int64)
        idx = np.arange(spec.q, dtype=np.int64)
        for c in reversed(coeffs):
            vals = spec.add_table[spec.mul_table[vals, idx], c]
        tr = spec.trace_table[vals]
        for t in tr:
            hist[t] += 1
    else:
        for a in range(spec.q):
            hist[spec.trace_i(spec.eval_poly_i(coeffs, a))] += 1
    return CycInt.from_histogram(cspec, hist)


def exp_sum_gr(f, spec: gr9.GR9Spec) -> CycInt:
    """sum over the Teichmueller set of zeta_9^trace(f(i)), exact in Z[zeta_9]."""
    cspec = cyc_spec(9)
    coeffs = [c if isinstance(c, gr9.RingElem) else spec.element(c) for c in f]
    hist = [0] * 9
    for x in spec.teich:
        acc = spec.zero
        for c in reversed(coeffs):
            acc = acc * x + c
        hist[gr9.gr_trace(acc)] += 1
    return CycInt.from_histogram(cspec, hist)


@dataclass(frozen=True)
class WeilCheck:
    ok: bool
    bound: float
    abs_value: float
    margin: float


def weil_check(eps: CycInt, q: int, d: int = 3, slack: float = 1e-9) -> WeilCheck:
    """|eps| <= (d-1)*sqrt(q) with numerical slack; returns the margin."""
    if d < 2:
        raise ValueError("the bound (d-1)*sqrt(q) needs weighted degree d >= 2")
    bound = (d - 1) * float(q) ** 0.5
    val = abs(embed(eps))
    return WeilCheck(ok=val <= bound + slack, bound=bound,
                     abs_value=val, margin=bound - val)
