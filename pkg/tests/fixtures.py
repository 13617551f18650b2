"""Pytest fixtures for flag_algebras' unit tests."""
from pathlib import Path
from typing import Generator

import pytest

from flag_algebras.field import PrimeField, prime_field
from flag_algebras.groups import FiniteGroup, build_group
from flag_algebras.poset import Preorder, QuotientPoset, fixture, quotient_order


def poset_of(name: str) -> QuotientPoset:
    """Quotient poset of a named fixture."""
    return quotient_order(fixture(name))


@pytest.fixture()
def ex56() -> Preorder:
    """Two minimal and two maximal elements, each below each: a square."""
    return fixture("EX56")


@pytest.fixture()
def vee() -> Preorder:
    """1 and 2 below 3."""
    return fixture("VEE")


@pytest.fixture()
def ut2() -> Preorder:
    """Upper triangular 2×2 matrices."""
    return fixture("UT2")


@pytest.fixture()
def full2() -> Preorder:
    """The full 2×2 matrix algebra."""
    return fixture("FULL2")


@pytest.fixture()
def cls3() -> Preorder:
    """A class {1, 2} below 3."""
    return fixture("CLS3")


@pytest.fixture()
def twopaths() -> Preorder:
    """Two parallel paths 1 → 2 → 3 and 1 → 4 → 3."""
    return fixture("TWOPATHS")


@pytest.fixture()
def f2() -> PrimeField:
    """The field with two elements."""
    return prime_field(2)


@pytest.fixture()
def f3() -> PrimeField:
    """The field with three elements."""
    return prime_field(3)


@pytest.fixture()
def z2() -> FiniteGroup:
    """Cyclic group of order 2."""
    return build_group("Z2")


@pytest.fixture()
def z3() -> FiniteGroup:
    """Cyclic group of order 3."""
    return build_group("Z3")


@pytest.fixture()
def s3() -> FiniteGroup:
    """Symmetric group on three points."""
    return build_group("S3")


@pytest.fixture()
def results_sink(tmp_path: Path) -> Generator[Path, None, None]:
    """A sink file for records written by the CLI."""
    sink = tmp_path / "test_results.jsonl"
    yield sink
    sink.unlink(missing_ok=True)
