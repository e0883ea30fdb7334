"""Analysis of planar piecewise smooth quadratic quasi-homogeneous systems.

Scalar operations come straight from the C++ extension; the functions below
wrap the JSON-string entry points into plain dicts.
"""

import json as _json

from pwqh._pwqh import (  # noqa: F401
    base_integral,
    descartes_variations,
    exponent_set,
    lanczos_gamma,
    minimal_weight_vector,
    numeric_return_map,
    period_beta0,
    period_closed_form,
    period_numeric,
    sigma_at as _sigma_at,
    xi_max,
)
from pwqh import _pwqh


def analyze(system):
    """Full report (weights, canonical form, switching, center, portrait)."""
    return _json.loads(_pwqh.analyze_json(_json.dumps(system)))


def switching_analysis(system):
    return _json.loads(_pwqh.switching_analysis_json(_json.dumps(system)))


def sigma_at(system, x):
    return _sigma_at(_json.dumps(system), x)


def integrate(system, x0, y0, tmax, tol=1e-10):
    return _json.loads(_pwqh.integrate_json(_json.dumps(system), x0, y0, tmax, tol))


def center_report(variant, params):
    return _json.loads(_pwqh.center_report_json(variant, list(params)))


def melnikov(a1, b1, a1_tilde, pert):
    return _json.loads(_pwqh.melnikov_json(a1, b1, a1_tilde, _json.dumps(pert)))


def realize_roots(a1, b1, a1_tilde, n, roots):
    return _json.loads(_pwqh.realize_roots_json(a1, b1, a1_tilde, n, list(roots)))


def displacement(a1, b1, a1_tilde, pert, h, eps):
    return _pwqh.displacement(a1, b1, a1_tilde, _json.dumps(pert), h, eps)


def find_limit_cycles(a1, b1, a1_tilde, pert, eps, h_range, grid=40):
    zeros, warnings = _pwqh.find_limit_cycles(
        a1, b1, a1_tilde, _json.dumps(pert), eps, h_range[0], h_range[1], grid
    )
    return {"zeros": zeros, "warnings": warnings}


def classify(variant, params):
    return _json.loads(_pwqh.classify_json(variant, list(params)))


def render_svg(variant, params, grid=12, radius=4.0):
    return _pwqh.render_svg(variant, list(params), grid, radius)
