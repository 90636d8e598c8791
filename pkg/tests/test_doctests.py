"""Every docstring example in the package must execute as written."""

import doctest
import importlib

import pytest

MODULES = [
    "prymal.rational_series",
    "prymal.polynomials",
    "prymal.exactlinalg",
    "prymal.sympower_ring",
    "prymal.curve_tensor",
    "prymal.cover_pushforward",
    "prymal.cubic27",
    "prymal.intersection_solver",
    "prymal.grr_hilbert",
    "prymal.hodge_primal",
    "prymal.reports",
    "prymal.payloads",
    "prymal.cli",
]


@pytest.mark.parametrize("name", MODULES)
def test_module_doctests(name):
    module = importlib.import_module(name)
    result = doctest.testmod(module)
    assert result.failed == 0
