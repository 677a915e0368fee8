import random

import pytest
from hypothesis import strategies as st

from trihopf.laurent import LaurentPoly


def laurent_polys(min_exp=-20, max_exp=20, bound=10**6, max_terms=8):
    return st.dictionaries(
        st.integers(min_exp, max_exp), st.integers(-bound, bound), max_size=max_terms
    ).map(LaurentPoly.from_dict)


def random_poly(rng: random.Random, min_exp=-20, max_exp=20, bound=10**6, max_terms=8) -> LaurentPoly:
    n = rng.randint(0, max_terms)
    return LaurentPoly.from_dict({rng.randint(min_exp, max_exp): rng.randint(-bound, bound) for _ in range(n)})


@pytest.fixture
def rng():
    return random.Random(20261019)


ACCEPTANCE: list[tuple[str, bool, str]] = []


@pytest.fixture
def criterion():
    """Record one acceptance line; the test still asserts on its own."""

    def record(name, ok, detail=""):
        ACCEPTANCE.append((name, bool(ok), detail))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE:
        terminalreporter.write_line("%s  %s%s" % ("PASS" if ok else "FAIL", name, "  (%s)" % detail if detail else ""))
