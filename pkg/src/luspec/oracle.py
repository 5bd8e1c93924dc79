"""Brute-force spectral verification and expansion reporting.

Numeric spectra come from a dense symmetric eigendecomposition of the
constructed adjacency matrix (full multiset comparison needs every
multiplicity, so dense beats sparse at desk scale).  A sparse Lanczos path
is provided for extreme-eigenvalue-only queries on graphs too large for the
dense budget.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from . import closedform, ff, graphs
from .closedform import SpectrumMultiset
from .graphs import AdjacencyStructure

DEFAULT_MAX_DENSE_N = 15000


class TotalMismatchError(ValueError):
    """Exact and numeric spectra have different sizes."""


@dataclass(frozen=True)
class NumericSpectrum:
    """Ascending eigenvalues of a symmetric adjacency operator."""

    values: np.ndarray
    clustering_tol: float = 1e-6

    @property
    def n(self) -> int:
        return len(self.values)

    def check_moments(self, num_edges: int):
        s1 = float(self.values.sum())
        if abs(s1) > self.n * 1e-8:
            raise ValueError(f"trace {s1} deviates from 0")
        s2 = float((self.values ** 2).sum())
        if abs(s2 - 2 * num_edges) > 1e-8 * max(1.0, 2 * num_edges):
            raise ValueError(f"sum of squares {s2} != 2*edges {2 * num_edges}")
        return True


def numeric_spectrum(adj: AdjacencyStructure,
                     max_dense_n: int = DEFAULT_MAX_DENSE_N) -> NumericSpectrum:
    """Full eigenvalue list by dense symmetric decomposition."""
    if adj.n > max_dense_n:
        raise ff.SizeBudgetError(
            f"{adj.n} vertices exceed the dense budget {max_dense_n}; "
            "use the closed-form path (or lambda2_sparse)")
    a = adj.to_dense(np.float64)
    w = scipy.linalg.eigvalsh(a, overwrite_a=True, check_finite=False)
    spec = NumericSpectrum(np.sort(w))
    spec.check_moments(adj.num_edges)
    return spec


def lambda2_sparse(adj: AdjacencyStructure, k: int = 4) -> float:
    """Second-largest eigenvalue via sparse Lanczos (large graphs)."""
    from scipy.sparse.linalg import eigsh
    a = adj.to_sparse().astype(np.float64)
    w = eigsh(a, k=k, which="LA", return_eigenvectors=False)
    w = np.sort(w)[::-1]
    top = adj.degree
    below = w[w < top - 1e-6]
    if not len(below):
        raise ValueError("increase k: all Lanczos values sit at the top eigenvalue")
    return float(below[0])


@dataclass(frozen=True)
class ClusterMismatch:
    value: float
    expected: int
    observed: int


@dataclass(frozen=True)
class CompareReport:
    passed: bool
    n: int
    worst_dev: float
    worst_at: float
    tol: float
    mismatches: tuple

    def text(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        lines = [f"{verdict}: {self.n} eigenvalues, worst deviation "
                 f"{self.worst_dev:.3e} (near {self.worst_at:.6g}, tol {self.tol:g})"]
        for m in self.mismatches:
            lines.append(f"  multiplicity at {m.value:.6g}: expected {m.expected}, "
                         f"observed {m.observed}")
        return "\n".join(lines)


def compare_spectra(exact: SpectrumMultiset, numeric: NumericSpectrum,
                    tol: float = 1e-6) -> CompareReport:
    """Greedy sorted matching; per-entry tolerance tol * max(1, |lambda|)."""
    if exact.total != numeric.n:
        raise TotalMismatchError(
            f"total mismatch {exact.total} vs {numeric.n}")
    expanded = exact.expand()
    devs = np.abs(expanded - numeric.values)
    scale = np.maximum(1.0, np.abs(expanded))
    rel = devs / scale
    worst = int(np.argmax(rel))
    passed = bool(rel[worst] <= tol)
    mismatches = []
    for e in exact.entries:
        window = tol * max(1.0, abs(e.approx))
        observed = int(np.count_nonzero(
            np.abs(numeric.values - e.approx) <= window))
        if observed != e.multiplicity:
            mismatches.append(ClusterMismatch(e.approx, e.multiplicity, observed))
    return CompareReport(passed=passed, n=numeric.n,
                         worst_dev=float(devs[worst]),
                         worst_at=float(expanded[worst]), tol=tol,
                         mismatches=tuple(mismatches))


# ----------------------------------------------------------------------
# expansion / Ramanujan reporting

@dataclass(frozen=True)
class ExpansionReport:
    q: int
    source: str
    lambda2: float
    spectral_gap: float
    isoperimetric_lower: float
    isoperimetric_upper: float
    ramanujan: bool
    near_ramanujan: bool
    margin_ramanujan: float   # 2*sqrt(q-1) - lambda2
    margin_weil: float        # 2*sqrt(q)   - lambda2

    def to_json_dict(self) -> dict:
        return {"q": self.q, "source": self.source, "lambda2": self.lambda2,
                "spectral_gap": self.spectral_gap,
                "isoperimetric_lower": self.isoperimetric_lower,
                "isoperimetric_upper": self.isoperimetric_upper,
                "ramanujan": self.ramanujan,
                "near_ramanujan": self.near_ramanujan,
                "margin_ramanujan": self.margin_ramanujan,
                "margin_weil": self.margin_weil}

    def verdict(self) -> str:
        word = "Ramanujan" if self.ramanujan else "NOT Ramanujan"
        return f"q={self.q}: {word} (margin {self.margin_ramanujan:+.4f})"


def _lambda2_from_values(values, q: int) -> float:
    below = [v for v in values if v < q - 1e-9]
    return max(below)


def expansion_report(q, source: str = "closed",
                     max_dense_n: int = DEFAULT_MAX_DENSE_N) -> ExpansionReport:
    """Spectral expansion data for D(4,q); lambda2 is the largest eigenvalue
    below the degree q.  Accepts q or a FieldSpec."""
    spec = q if isinstance(q, ff.FieldSpec) else ff.field_for(q)
    q = spec.q
    if source == "closed":
        gam = closedform.spectrum_closed(spec)
        lifted = closedform.lift_to_bipartite(gam, q)
        lam2 = _lambda2_from_values([e.approx for e in lifted.entries], q)
    elif source == "numeric":
        adj = graphs.build_d4(spec)
        nspec = numeric_spectrum(adj, max_dense_n=max_dense_n)
        lam2 = _lambda2_from_values(nspec.values.tolist(), q)
    else:
        raise ValueError(f"unknown source {source!r}")
    gap = q - lam2
    lower = gap / 2
    upper = math.sqrt(2 * q * gap)
    assert lower <= upper + 1e-12
    return ExpansionReport(
        q=q, source=source, lambda2=lam2, spectral_gap=gap,
        isoperimetric_lower=lower, isoperimetric_upper=upper,
        ramanujan=lam2 <= 2 * math.sqrt(q - 1) + 1e-12,
        near_ramanujan=lam2 <= 2 * math.sqrt(q) + 1e-9,
        margin_ramanujan=2 * math.sqrt(q - 1) - lam2,
        margin_weil=2 * math.sqrt(q) - lam2)


def expansion_table(reports) -> str:
    """Aligned plain-text table of expansion reports."""
    header = (f"{'q':>4} {'source':>8} {'lambda2':>12} {'gap':>10} "
              f"{'h_lower':>10} {'h_upper':>10} {'ramanujan':>10} {'2rt(q-1)':>10}")
    lines = [header]
    for r in reports:
        lines.append(f"{r.q:>4} {r.source:>8} {r.lambda2:>12.6f} "
                     f"{r.spectral_gap:>10.6f} {r.isoperimetric_lower:>10.6f} "
                     f"{r.isoperimetric_upper:>10.6f} "
                     f"{str(r.ramanujan):>10} {2 * math.sqrt(r.q - 1):>10.6f}")
    return "\n".join(lines)


def reports_to_json(reports) -> str:
    return json.dumps([r.to_json_dict() for r in reports], indent=2)
