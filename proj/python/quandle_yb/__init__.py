"""Exact Yang-Baxter deformations of racks and quandles.

Rationals cross the boundary as ``fractions.Fraction`` on the Python side and
"p/q" strings underneath.
"""

from fractions import Fraction

from . import _core
from ._core import (
    Rack,
    YbeVerdict,
    CohomologyReport,
    resolve_rack,
    rack_from_table,
    rack_hash,
    classify_h2,
    inner_group_order,
    behavioral_classes,
    d4_reflection_quandle,
)

__all__ = [
    "Rack",
    "YbeVerdict",
    "CohomologyReport",
    "resolve_rack",
    "rack_from_table",
    "rack_hash",
    "classify_h2",
    "inner_group_order",
    "behavioral_classes",
    "d4_reflection_quandle",
    "cq_matrix",
    "check_ybe_cq",
    "entropic_orbits",
    "deform_ybe",
    "trace_square",
    "jones_ybe",
    "normalize",
]


def _q(x):
    return str(Fraction(x))


def _frac(s):
    return Fraction(s)


def cq_matrix(rack):
    """Dense c_Q as a list of rows of ints (column x*n+y holds the image of x (x) y)."""
    return _core.cq_dense(rack)


def check_ybe_cq(rack):
    return _core.check_ybe_cq(rack)


def entropic_orbits(rack, degree=2):
    """Orbits of the degree-d entropic basis as lists of pair indices."""
    return _core.entropic_orbits(rack, degree)


def deform_ybe(rack, params, order=1):
    """YBE verdict for c_Q (I + f(lambda)); params are rationals or lists of h-coefficients."""
    return _core.deform_ybe(rack, [_poly(p) for p in params], order)


def trace_square(printed_lambda, order=1):
    """(computed, formula) for tr[c(lambda)^2] on the D4 reflections, as lists of Fractions."""
    computed, formula = _core.trace_square([_poly(p) for p in printed_lambda], order)
    return [_frac(c) for c in computed], [_frac(c) for c in formula]


def jones_ybe(q):
    return _core.jones_ybe(_q(q))


def normalize(rack, operator_json):
    """Normalizes an operator given in the JSON operator encoding; returns a dict."""
    import json

    text = operator_json if isinstance(operator_json, str) else json.dumps(operator_json)
    return json.loads(_core.normalize_json(rack, text))


def _poly(p):
    if isinstance(p, (list, tuple)):
        return [_q(c) for c in p]
    return [_q(p)]
