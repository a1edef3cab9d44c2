"""Run the usage examples embedded in the library docstrings."""

import doctest
import importlib
import pkgutil

import pytest

import bncells

MODULES = sorted(m.name for m in pkgutil.iter_modules(bncells.__path__, "bncells."))


def test_modules_discovered():
    assert "bncells.group" in MODULES
    assert len(MODULES) >= 10


@pytest.mark.parametrize("name", MODULES)
def test_module_doctests(name):
    module = importlib.import_module(name)
    result = doctest.testmod(module)
    assert result.failed == 0
