"""Exterior-calculus stress and electrodynamics engine.

Python access to the exact (rational) verification pipeline: mesh
generation, identity suites, and power reports. All heavy lifting happens
in the compiled extension; this layer adds dict-level convenience.
"""

import json as _json

from ._gec import (
    InputError,
    mesh_json,
    power_json,
    suite_names,
    verify_json,
    worked_power,
)

__all__ = [
    "InputError",
    "mesh",
    "mesh_json",
    "power",
    "power_json",
    "suite_names",
    "verify",
    "verify_json",
    "worked_power",
]


def mesh(kind="box", dim=3, sub=1):
    """Generate a mesh and return it as a dict."""
    return _json.loads(mesh_json(kind, dim, sub))


def verify(scenario, base_dir=".", seed=None):
    """Run the identity suites for a scenario dict; returns the report dict."""
    return _json.loads(verify_json(_json.dumps(scenario), base_dir, seed))


def power(scenario, base_dir=".", refine=None):
    """Evaluate the power scalars for a scenario dict; returns the report dict."""
    return _json.loads(power_json(_json.dumps(scenario), base_dir, refine))
