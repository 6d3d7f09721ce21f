"""Shared fixtures: small fields and the codes used across the suite.

GF(4) uses the modulus x² + x + 1, so ω = 2 and ω² = ω + 1 = 3.
GF(9) uses x² + 1, so i = 3 and -i = 2i = 6.
"""

import pytest

from mpcodes.codes import LinearCode, from_generator, full_space, zero_code
from mpcodes.field import FieldSpec
from mpcodes.matrix import ExactMatrix
from mpcodes.observability import configure_logging


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive scans taking several seconds")


def make_code(spec: FieldSpec, rows: list[list[int]], n: int) -> LinearCode:
    """Code spanned by integer-encoded rows."""
    return from_generator(ExactMatrix.from_rows(spec, rows, cols=n))


@pytest.fixture
def gf4() -> FieldSpec:
    return FieldSpec.from_order(4)


@pytest.fixture
def gf9() -> FieldSpec:
    return FieldSpec.from_order(9)


@pytest.fixture
def omega_matrix(gf4) -> ExactMatrix:
    """[[1, 1], [1, ω]]: Gram matrix [[0, ω], [ω², 0]], tau = (1 2)."""
    return ExactMatrix.from_rows(gf4, [[1, 1], [1, 2]])


@pytest.fixture
def diagonal_code(gf4) -> LinearCode:
    """<(1, 1)>: Hermitian self-dual over GF(4)."""
    return make_code(gf4, [[1, 1]], 2)


@pytest.fixture
def axis_code(gf4) -> LinearCode:
    """<(1, 0)>: trivial hull, so AHDC, AHSO and HLCD at once."""
    return make_code(gf4, [[1, 0]], 2)


@pytest.fixture
def full2(gf4) -> LinearCode:
    return full_space(gf4, 2)


@pytest.fixture
def zero2(gf4) -> LinearCode:
    return zero_code(gf4, 2)


@pytest.fixture(autouse=True)
def quiet_logging():
    """Point logging back at the session stderr once a test is done."""
    yield
    configure_logging(log_level="WARNING", json_format=True, _silent=True)
