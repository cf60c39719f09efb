import numpy as np
import pytest
from hypothesis import settings

from dirac_hawking import DensityMatrix

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

_ACCEPTANCE = []


@pytest.fixture
def criterion():
    """Record a pass/fail line for the acceptance summary, then assert."""

    def record(label, ok, detail=""):
        _ACCEPTANCE.append((label, bool(ok), detail))
        assert ok, f"{label}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {label}  {detail}")


def random_density(rng, dims=(2, 2), rank=None):
    d = int(np.prod(dims))
    k = rank or d
    g = rng.normal(size=(d, k)) + 1j * rng.normal(size=(d, k))
    rho = g @ g.conj().T
    rho /= np.trace(rho).real
    rho = 0.5 * (rho + rho.conj().T)
    return DensityMatrix(rho, dims)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
