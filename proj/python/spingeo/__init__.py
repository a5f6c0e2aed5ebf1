"""Exact spin-operator algebra, hypercomplex numbers, and finite geometries."""

import json as _json

from ._spingeo import (
    all_points,
    associator,
    centralizer,
    classify,
    decad_from_pentad,
    degree,
    fano_triads,
    heptads,
    lie_closure,
    oct_mul,
    oct_table,
    oct_verify,
    pauli_commutes,
    pauli_mul,
    pentads,
    quat_mul,
    verify_all,
    verify_report,
)
from ._spingeo import doily_json as _doily_json
from ._spingeo import fano_json as _fano_json
from ._spingeo import operator_lines_json as _operator_lines_json
from ._spingeo import polar_space_json as _polar_space_json


def fano():
    """The Fano plane of the octonion table, as a dict."""
    return _json.loads(_fano_json())


def doily():
    """The generalized quadrangle GQ(2,2), as a dict."""
    return _json.loads(_doily_json())


def operator_lines(n=2):
    """All 3-element operator lines on the n-qubit points, as a dict."""
    return _json.loads(_operator_lines_json(n))


def polar_space(n):
    """The rank-n symplectic polar space, as a dict."""
    return _json.loads(_polar_space_json(n))


__all__ = [
    "all_points",
    "associator",
    "centralizer",
    "classify",
    "decad_from_pentad",
    "degree",
    "doily",
    "fano",
    "fano_triads",
    "heptads",
    "lie_closure",
    "oct_mul",
    "oct_table",
    "oct_verify",
    "operator_lines",
    "pauli_commutes",
    "pauli_mul",
    "pentads",
    "polar_space",
    "quat_mul",
    "verify_all",
    "verify_report",
]
