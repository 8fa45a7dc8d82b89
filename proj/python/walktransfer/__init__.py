"""Continuous-time quantum walks on weighted graphs."""

import json as _json

from . import _core
from ._core import (
    DomainError,
    Graph,
    automorphisms,
    circulant,
    complement,
    complete,
    cycle,
    disjoint_union,
    double_cover,
    empty_graph,
    hamiltonian,
    join,
    path,
    path_family,
    quotient,
    state,
    transition,
)

__all__ = [
    "DomainError",
    "Graph",
    "automorphisms",
    "certify_no_pgst",
    "check_fr",
    "check_pst",
    "circulant",
    "complement",
    "complete",
    "cycle",
    "cycle_verdict",
    "disjoint_union",
    "double_cover",
    "empty_graph",
    "hamiltonian",
    "intertwiner_check",
    "is_periodic",
    "join",
    "path",
    "path_family",
    "quotient",
    "search_pgst",
    "spectrum",
    "state",
    "transition",
    "verify_suite",
]


def _state(x, n):
    return _core.state(x, n) if isinstance(x, str) else x


def spectrum(graph, kind="adjacency", projectors=False):
    return _json.loads(_core.spectrum(graph, kind, projectors))


def check_pst(graph, u, v, tau, kind="adjacency", tol=1e-8):
    n = graph.order
    return _json.loads(_core.check_pst(graph, kind, _state(u, n), _state(v, n), tau, tol))


def check_fr(graph, u, v, tau, kind="adjacency", tol=1e-8):
    n = graph.order
    return _json.loads(_core.check_fr(graph, kind, _state(u, n), _state(v, n), tau, tol))


def is_periodic(graph, u, tau, kind="adjacency", tol=1e-8):
    return _json.loads(_core.is_periodic(graph, kind, _state(u, graph.order), tau, tol))


def search_pgst(graph, u, v, t_max=100.0, samples=20001, kind="adjacency", trace=False):
    n = graph.order
    return _json.loads(_core.search_pgst(graph, kind, _state(u, n), _state(v, n), t_max, samples, trace))


def certify_no_pgst(graph, perm, u, v, m=2, kind="adjacency", bound=4, max_l1=16):
    n = graph.order
    return _json.loads(_core.certify_no_pgst(graph, kind, list(perm), _state(u, n), _state(v, n), m, bound, max_l1))


def cycle_verdict(n, query="vertex", complement=False):
    return _json.loads(_core.cycle_verdict(n, query, complement))


def intertwiner_check(graph, cells, times, kind="adjacency"):
    return _json.loads(_core.intertwiner_check(graph, cells, kind, list(times)))


def verify_suite(name="all", seed=20240607):
    return _json.loads(_core.verify_suite(name, seed))
