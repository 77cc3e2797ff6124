"""Point configurations on hypersurfaces: exact membership, smoothness and fitting."""

import json

from ._core import (
    Error,
    InputError,
    PreconditionError,
    __version__,
    basis_size,
    commands,
    expected_dimension,
    fit,
    kernel_basis,
    monomial_basis,
    rank,
)
from ._core import run as _run


def run(command, config, **options):
    """Run a command on a config dict; returns the full report dict."""
    text = config if isinstance(config, str) else json.dumps(config) if config is not None else ""
    return json.loads(_run(command, text, **options))


def _config(points, r=None, field="rational", **extra):
    pts = [[str(x) for x in p] for p in points]
    if r is None:
        if not pts:
            raise InputError("r: cannot infer the ambient dimension of an empty configuration")
        r = len(pts[0]) - 1
    cfg = {"r": r, "field": field, "points": pts}
    cfg.update(extra)
    return cfg


def membership(points, d, m=1, field="rational"):
    return run("membership", _config(points, field=field), degree=d, m=m)["result"]


def interpolate(points, d, field="rational"):
    return run("interpolate", _config(points, field=field), degree=d)["result"]


def classify(points, d, field="rational"):
    return run("classify", _config(points, field=field), degree=d)["result"]


def classify_plane(points, d, field="rational"):
    return run("classify-plane", _config(points, field=field), degree=d)["result"]


def classify_quadric3(points, field="rational"):
    return run("classify-quadric3", _config(points, field=field))["result"]


def regularity(points, field="rational"):
    return run("regularity", _config(points, field=field))["result"]


def secants(points, field="rational"):
    return run("secants", _config(points, field=field))["result"]


def minimal_degree(points, d_max, eps=None, homogenize=False):
    pts = [[repr(float(x)) for x in p] for p in points]
    r = len(pts[0]) if homogenize else len(pts[0]) - 1
    cfg = {"r": r, "field": "float", "points": pts, "homogenize": homogenize}
    return run("minimal-degree", cfg, d_max=d_max, eps=eps)["result"]


def multidegree_check(r, d, n, trials, seed, field="fp:1000003"):
    return run("multidegree-check", None, r=r, degree=d, n=n, trials=trials, seed=seed, field=field)["result"]


__all__ = [
    "Error",
    "InputError",
    "PreconditionError",
    "__version__",
    "basis_size",
    "classify",
    "classify_plane",
    "classify_quadric3",
    "commands",
    "expected_dimension",
    "fit",
    "interpolate",
    "kernel_basis",
    "membership",
    "minimal_degree",
    "monomial_basis",
    "multidegree_check",
    "rank",
    "regularity",
    "run",
    "secants",
]
