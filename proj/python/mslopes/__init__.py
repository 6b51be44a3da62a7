"""Boundary slope diameters and crossing numbers of Montesinos knots."""

import json as _json

from ._core import (
    __version__,
    basic_edgepaths,
    case_tag,
    component_count,
    crossing_number,
    diameter,
    parse_knot,
    partial_edge_length,
    report_json,
    twist_extremes,
)


def report(knot, candidates=False):
    """Report for `knot` (e.g. "M(-1/2,1/3,1/7)") as a dict."""
    return _json.loads(report_json(knot, candidates))


__all__ = [
    "__version__",
    "basic_edgepaths",
    "case_tag",
    "component_count",
    "crossing_number",
    "diameter",
    "parse_knot",
    "partial_edge_length",
    "report",
    "report_json",
    "twist_extremes",
]
