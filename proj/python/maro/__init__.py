"""Finite multi-objective adjustable robust optimization."""

import json

from ._core import (
    Instance,
    MaroError,
    f_eps,
    f_lambda,
    f_pb,
    fixture,
    fixture_names,
    image_pb,
    image_ws,
    load_instance,
    load_instance_file,
    maro_efficient,
    smaro_set,
    solve_eps,
    solve_pb,
    solve_ws,
)
from . import _core


def verify(seed=42, count=500, jitter=False):
    """Runs the randomized property battery and returns the report as a dict."""
    return json.loads(_core.verify_json(seed, count, jitter))


def compare(instance, weight, eps, j):
    """Concept comparison table as a dict; j is 1-based."""
    return json.loads(_core.compare_json(instance, weight, eps, j))


__all__ = [
    "Instance",
    "MaroError",
    "compare",
    "f_eps",
    "f_lambda",
    "f_pb",
    "fixture",
    "fixture_names",
    "image_pb",
    "image_ws",
    "load_instance",
    "load_instance_file",
    "maro_efficient",
    "smaro_set",
    "solve_eps",
    "solve_pb",
    "solve_ws",
    "verify",
]
