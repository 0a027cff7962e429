import numpy as np
import pytest

from opoly.field import FieldSpec
from opoly.func import from_table


@pytest.fixture
def gf4():
    return FieldSpec(2, 0b111)


@pytest.fixture
def gf8():
    return FieldSpec(3, 0b1011)


@pytest.fixture
def gf16():
    return FieldSpec(4, 0b10011)


def random_functions(n, count, seed):
    spec = FieldSpec.default(n)
    rng = np.random.default_rng(seed)
    return [
        from_table(spec, rng.integers(0, spec.order, size=spec.order), f"rand{seed}.{i}")
        for i in range(count)
    ]


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("tests.test_acceptance")
    RESULTS = getattr(module, "RESULTS", None)
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS):
        status, detail = RESULTS[key]
        terminalreporter.write_line(f"criterion {key:>2}: {status}  {detail}")
