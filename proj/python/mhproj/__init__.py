"""Multihomogeneous spectra of graded polynomial rings."""

import json as _json

from ._core import (  # noqa: F401
    ArithmeticOverflowError,
    DomainError,
    Error,
    InvariantError,
    ParseError,
    ResourceError,
    RingSpec,
    __version__,
    binomial_relations,
    hilbert_basis,
    irrelevant_radical_generators,
    is_relevant_support,
    kernel_lattice,
    minimal_relevant_supports,
    rank,
    smith_normal_form,
    veronese_generators,
    zero_subring_generators,
)
from . import _core


def analyze(spec, max_vars=24):
    """Full report (charts, fan, separation) as a dict."""
    return _json.loads(_core.analyze_json(spec, max_vars))


def chart(spec, support):
    """Chart report for a support given as variable names or a comma-separated string."""
    if not isinstance(support, str):
        support = ",".join(support)
    return _json.loads(_core.chart_json(spec, support))


def separation(spec, max_vars=24):
    return _json.loads(_core.separation_json(spec, max_vars))
