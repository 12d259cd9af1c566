"""
Configuration hooks for pytest. Report files written by the tests are
registered in ``REPORT_REGISTRY``; this hook removes them after each test.
"""
from sgl_cocycles.registry import REPORT_REGISTRY

__license__ = "MIT"
__all__ = ("pytest_runtest_teardown",)


def pytest_runtest_teardown(item, nextitem):
    """Clean up after test ends."""
    REPORT_REGISTRY.clean_up()
