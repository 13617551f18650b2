"""Pytest conftest module."""
from typing import Any, Generator

import _pytest.fixtures
import pluggy
import pytest
from _pytest.python import Function
from _pytest.runner import CallInfo

from flag_algebras.settings import SETTINGS

# flake8: noqa: E402
pytest.register_assert_rewrite("tests.helpers")


@pytest.hookimpl(tryfirst=True, hookwrapper=True)  # type: ignore
def pytest_runtest_makereport(
    item: Function, call: CallInfo[Any]
) -> Generator[None, pluggy.Result, None]:
    """
    Ensures `request.node.rep_[setup,call,teardown]` from pytest is set to the
    respective stage result.
    """
    _ = call
    # execute all other hooks to obtain the report object
    outcome = yield
    rep = outcome.get_result()
    assert rep is not None

    # set a report attribute for each phase of a call, which can
    # be "setup", "call", "teardown"

    setattr(item, "rep_" + rep.when, rep)


@pytest.fixture(autouse=True)
def show_budgets(
    request: _pytest.fixtures.FixtureRequest,
) -> Generator[None, None, None]:
    """Shows the budgets in effect when a test fails."""
    from pprint import pprint

    yield

    rep_call = getattr(request.node, "rep_call", None)
    if rep_call is not None and rep_call.failed:
        print("Test failed. Budgets in effect:")
        pprint(SETTINGS.budgets)
