"""Shared fixtures: canonical instances, the standard grid, seeded corpora."""

from __future__ import annotations

import pytest

from foxhpos import ConvolutionSpec, build_foxh


def log_grid(lo: float, hi: float, count: int):
    if count == 1:
        return [lo]
    ratio = hi / lo
    return [lo * ratio ** (i / (count - 1)) for i in range(count)]


@pytest.fixture(scope="session")
def standard_grid():
    """25 log-spaced points in [1e-2, 1e2]."""
    return log_grid(1e-2, 1e2, 25)


@pytest.fixture(scope="session")
def exp_spec():
    """f = varphi_{1,0} = e^{-t}."""
    return ConvolutionSpec(varphi=((1, 0),))


@pytest.fixture(scope="session")
def exp_instance(exp_spec):
    return build_foxh(exp_spec)


@pytest.fixture(scope="session")
def psi_spec():
    """f = psi_{1,0,1} = 1/(1+t)."""
    return ConvolutionSpec(psi=((1, 0, 1),))


@pytest.fixture(scope="session")
def psi_instance(psi_spec):
    return build_foxh(psi_spec)
