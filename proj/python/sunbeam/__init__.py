"""Exact multiphoton interference at the symmetric SU(N) beam splitter.

Thin convenience layer over the compiled core: structured results come back
as plain dicts/lists, exact ring values as CycloPoly objects.
"""

import json as _json

try:
    from ._sunbeam import *  # noqa: F401,F403  (installed package layout)
    from . import _sunbeam as _core
except ImportError:  # flat build-tree layout used by the ctest harness
    from _sunbeam import *  # noqa: F401,F403
    import _sunbeam as _core


def group_report(N, input, output):
    """Cancellation-group analysis as a dict."""
    return _json.loads(_core.group_report_json(N, input, output))


def predict(N, input):
    """Symmetry-constraint verdict for the coincident output, as a dict."""
    return _json.loads(_core.predict_json(N, input))


def scan(N, n, confirm_exact=True, max_side=20, jobs=0):
    """geHOM scan summary (with the CSV table under the 'csv' key)."""
    return _json.loads(_core.scan_json(N, n, confirm_exact, max_side, jobs))


def cnl_family(N, k_max, confirm_max=12):
    """Per-k verdicts for the |Nk,1,...,1,2> -> |k+1>^N family."""
    return _json.loads(_core.cnl_family_json(N, k_max, confirm_max))
