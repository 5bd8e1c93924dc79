import pytest

from luspec import ff, graphs, oracle

_GRAPHS: dict = {}
_NUMERIC: dict = {}


def _graph(kind: str, q: int) -> graphs.AdjacencyStructure:
    key = (kind, q)
    if key not in _GRAPHS:
        spec = ff.field_for(q)
        builder = {"gamma": graphs.build_gamma, "d4": graphs.build_d4,
                   "cayley": graphs.build_cayley}[kind]
        _GRAPHS[key] = builder(spec)
    return _GRAPHS[key]


def _numeric(kind: str, q: int) -> oracle.NumericSpectrum:
    key = (kind, q)
    if key not in _NUMERIC:
        _NUMERIC[key] = oracle.numeric_spectrum(_graph(kind, q))
    return _NUMERIC[key]


@pytest.fixture(scope="session")
def graph():
    """graph('gamma'|'d4'|'cayley', q), cached for the whole session."""
    return _graph


@pytest.fixture(scope="session")
def numeric():
    """numeric('gamma'|'d4', q): cached dense eigendecomposition."""
    return _numeric


@pytest.fixture(scope="session")
def field():
    return ff.field_for
