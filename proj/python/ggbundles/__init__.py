"""Python bindings for the ggb core.

Nodes are passed as catalog expressions, either JSON strings or the
equivalent dicts, e.g. ``{"ker": {"src": [2, 2, 2, 1], "tgt": [3], "rows": [["x0", "x1", "x2", "x3^2"]]}}``.
"""

import json as _json

from . import _core
from ._core import (
    CatalogError,
    InsufficientTable,
    NotGloballyGenerated,
    RRDomainError,
    UncertifiedNode,
    beilinson_terms,
    cayley_bacharach,
    classify_pencil,
    double_point,
    edge_avoidance,
    enumerate_spectra,
    h1_from_spectrum,
    h2_from_spectrum,
    prime,
    rr_chi,
    schwarzenberger,
    set_prime,
    surface_bundle_data,
    wedge_map_rank,
)


def _expr(node):
    return node if isinstance(node, str) else _json.dumps(node)


def chern(n, node):
    """(rank, [c1, ..., cn]) of a node on P^n."""
    return _core.chern(n, _expr(node))


def coh_table(n, node, lo, hi):
    """Rows l = lo..hi of [h^0, ..., h^n]; None marks an indeterminate cell."""
    return _core.coh_table(n, _expr(node), lo, hi)


def is_globally_generated(n, node, trials=500, seed=1, hint_lines=()):
    return _core.is_globally_generated(n, _expr(node), trials, seed, [list(l) for l in hint_lines])


def splitting_type(n, node, line):
    return _core.splitting_type(n, _expr(node), list(line))


def verify_catalog(path, seed=1, trials=500):
    """Verification report of a catalog file, as a dict."""
    return _json.loads(_core.verify_catalog(path, seed, trials))
