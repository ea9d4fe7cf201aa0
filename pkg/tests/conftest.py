"""Independent dense-matrix references used as oracles across the suite."""

import numpy as np
import pytest

H_MAT = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)


def embed(gate: np.ndarray, qubit: int, n: int) -> np.ndarray:
    """Full 2^n matrix of a single-qubit gate; qubit q has weight 2**q."""
    return np.kron(np.kron(np.eye(2 ** (n - 1 - qubit)), gate), np.eye(2 ** qubit))


def diag_matrix(flipped, n: int) -> np.ndarray:
    d = np.ones(2 ** n, dtype=complex)
    for i in flipped:
        d[i] = -1
    return np.diag(d)


def reflection_matrix(axis: np.ndarray) -> np.ndarray:
    return 2 * np.outer(axis, axis.conj()) - np.eye(axis.shape[0])


def random_state(rng: np.random.Generator, n: int) -> np.ndarray:
    v = rng.normal(size=2 ** n) + 1j * rng.normal(size=2 ** n)
    return v / np.linalg.norm(v)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


# (criterion, passed, detail) rows filled in by test_acceptance.py
ACCEPTANCE_RESULTS: list = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in sorted(ACCEPTANCE_RESULTS, key=lambda r: r[0]):
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}: {detail}")
