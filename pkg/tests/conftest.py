import pytest

from quadfactor import suite


@pytest.fixture(scope="session")
def suite_results():
    """Run the full check battery once per test session."""
    return {r.name: r for r in suite.run_all(0)}
