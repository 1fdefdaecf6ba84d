"""Critical and maximal digraphs."""

import json as _json

from ._critdg import (
    CritdgError,
    Digraph,
    are_isomorphic,
    blow_up,
    canonical_form,
    centers,
    condensation,
    count_formula,
    count_labeled,
    d4,
    gamma_k,
    gamma_k0,
    gamma_ki,
    is_critical,
    is_maximal,
    iso_class_count,
    max_arcs_where,
    max_radius,
    metric_invariants,
    partition,
    qd3,
    recognize_hertz_family,
    reverse,
    scenario_names,
    transitive_closure,
)

__version__ = "0.1.0"


def run_scenario(name, max_n, workers=0):
    """Verification report as a dict."""
    from ._critdg import run_scenario_json

    return _json.loads(run_scenario_json(name, max_n, workers))
