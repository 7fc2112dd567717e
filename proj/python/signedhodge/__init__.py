"""Exact chromatic polynomials and Hodge decompositions of signed graphs.

The heavy lifting happens in the compiled extension ``signedhodge._core``;
this package re-exports its surface and adds ``verify``, which returns the
full check report as a plain dictionary.
"""

import json as _json

from ._core import (
    SignedGraph,
    chromatic_by_interpolation,
    chromatic_coefficients,
    chromatic_polynomial,
    chromatic_string,
    count_proper_colorings,
    f_vector,
    hodge_dims_euler,
    hodge_dims_kernel,
    homology_dims,
    switch_at,
    verify_json,
)

try:
    from ._core import __version__
except ImportError:  # pragma: no cover - version stamp is optional
    __version__ = "0.0.0"

__all__ = [
    "SignedGraph",
    "chromatic_by_interpolation",
    "chromatic_coefficients",
    "chromatic_polynomial",
    "chromatic_string",
    "count_proper_colorings",
    "f_vector",
    "hodge_dims_euler",
    "hodge_dims_kernel",
    "homology_dims",
    "switch_at",
    "verify",
    "verify_json",
    "__version__",
]


def verify(graph):
    """Run every structural check against *graph*.

    Accepts a :class:`SignedGraph` or a string in the text format that
    :meth:`SignedGraph.parse` reads.  Returns a dict with keys
    ``chromatic``, ``c``, ``homology``, ``hodge_euler``, ``hodge_kernel``,
    ``checks`` and ``verdict``; raises ``ValueError`` for graphs whose
    complex is undefined (no edges).
    """
    if isinstance(graph, str):
        graph = SignedGraph.parse(graph)
    return _json.loads(verify_json(graph))
