"""Python front end for the gsk C++ core."""

import json

from ._gsk import (
    CoefficientGrid,
    Error,
    Window,
    admissibility_constant,
    compose,
    cwt,
    dual_act,
    group_tags,
    icwt,
    log_uniform,
    orbit_coords,
    orbit_label,
    stft,
    stockwell,
    stockwell_time_marginal,
    suite_names,
    to_matrix,
    verify_json,
)


def verify(suite="all", seed=1, samples=1000):
    """Run an invariant suite; returns the report as a dict."""
    return json.loads(verify_json(suite, seed, samples))


__all__ = [
    "CoefficientGrid",
    "Error",
    "Window",
    "admissibility_constant",
    "compose",
    "cwt",
    "dual_act",
    "group_tags",
    "icwt",
    "log_uniform",
    "orbit_coords",
    "orbit_label",
    "stft",
    "stockwell",
    "stockwell_time_marginal",
    "suite_names",
    "to_matrix",
    "verify",
]
