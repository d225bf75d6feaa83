import pytest
from hypothesis import strategies as st

from nzflow.multigraph import build_graph

ACCEPTANCE_LINES: list[str] = []


@st.composite
def multigraphs(draw, max_n=5, max_extra=5, loops=True, connected=True):
    """Small oriented multigraphs; connected ones start from a random spanning tree."""
    n = draw(st.integers(1, max_n))
    pairs = []
    if connected:
        for v in range(1, n):
            pairs.append((v, draw(st.integers(0, v - 1))))
    extra = draw(st.integers(0, max_extra))
    for _ in range(extra):
        a = draw(st.integers(0, n - 1))
        b = draw(st.integers(0, n - 1))
        if a == b and not loops:
            continue
        pairs.append((a, b))
    pairs = draw(st.permutations(pairs))
    flips = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [(b, a) if f else (a, b) for (a, b), f in zip(pairs, flips)])


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def record_criterion():
    def record(number, title, ok, detail=""):
        status = "N/A" if ok is None else ("PASS" if ok else "FAIL")
        ACCEPTANCE_LINES.append(f"[{status}] criterion {number}: {title}" + (f" ({detail})" if detail else ""))
        print(ACCEPTANCE_LINES[-1])
        return ok

    return record
