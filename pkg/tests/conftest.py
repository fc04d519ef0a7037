from __future__ import annotations

import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile(
    "repo",
    deadline=None,
    max_examples=40,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")


@pytest.fixture(scope="session")
def multipole():
    from trabound.problems.models import MultipoleParams
    from trabound.solver.instances import MultipoleInstance

    return MultipoleInstance(MultipoleParams(Z=2.0, d=3.0, q=5.0, m=0, eta=0.5))


@pytest.fixture(scope="session")
def multipole_spectrum(multipole):
    from trabound.solver.spectrum import SearchSpec, default_window, spectrum_selfconsistent

    lo, hi = default_window(multipole)
    return spectrum_selfconsistent(multipole, SearchSpec(lo, hi, max_levels=10))


@pytest.fixture(scope="session")
def pt25():
    from trabound.problems.models import PoschlTellerParams
    from trabound.solver.instances import PoschlTellerInstance

    return PoschlTellerInstance(PoschlTellerParams(1.0, 3.7, 0.5, -25.0))
