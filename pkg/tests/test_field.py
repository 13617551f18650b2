"""Tests prime fields and arithmetic in structural matrix algebras."""
import random

import pytest

from flag_algebras.errors import DomainMismatch, NotPrime, ShapeMismatch, SingularMatrix
from flag_algebras.field import (
    PrimeField,
    algebra_invert,
    algebra_multiply,
    all_matrices,
    diagonal,
    identity,
    is_invertible,
    matrix_unit,
    prime_field,
    random_unit,
    struct_matrix,
    unit_group_order,
)
from flag_algebras.poset import Preorder, fixture

from .fixtures import f2, f3, ut2, vee
from .helpers import ignore_unused

ignore_unused(f2, f3, ut2, vee, reason="Fixtures")


# pylint: disable=redefined-outer-name


def test_prime_field_validation() -> None:
    """Tests the modulus checks."""
    assert prime_field(7).generator == 3
    assert prime_field(2).generator == 1
    with pytest.raises(NotPrime):
        prime_field(4)
    with pytest.raises(NotPrime):
        prime_field(1)
    with pytest.raises(NotPrime):
        prime_field(263)
    with pytest.raises(NotPrime):
        prime_field(11, max_prime=7)


def test_generator_spans_units() -> None:
    """Tests if powers of the primitive root reach every unit."""
    field = prime_field(11)

    assert {field.power_of_generator(k) for k in range(10)} == set(field.units)
    assert field.mul(field.inv(7), 7) == 1


def test_matrix_units_multiply(vee: Preorder, f3: PrimeField) -> None:
    """Tests e_ij·e_pq = δ_jp·e_iq."""
    e11, e13, e33 = (matrix_unit(vee, f3, i, j) for i, j in [(1, 1), (1, 3), (3, 3)])

    assert e11 * e13 == e13
    assert e13 * e33 == e13
    assert (e13 * e11).is_zero
    assert algebra_multiply(identity(vee, f3), e13) == e13


def test_coefficients_are_reduced(ut2: Preorder, f3: PrimeField) -> None:
    """Tests reduction mod p and the dropping of zeros."""
    x = struct_matrix(ut2, f3, {(1, 1): 4, (1, 2): 3, (2, 2): -1})

    assert x.entries == (((1, 1), 1), ((2, 2), 2))
    assert x[1, 2] == 0
    assert (x + x.scaled(2)).is_zero


def test_positions_outside_relation(ut2: Preorder, f3: PrimeField) -> None:
    """Tests if coefficients off ρ are refused."""
    with pytest.raises(DomainMismatch):
        struct_matrix(ut2, f3, {(2, 1): 1})
    with pytest.raises(DomainMismatch):
        struct_matrix(ut2, f3, {(1, 3): 1})


def test_incompatible_operands(ut2: Preorder, f2: PrimeField, f3: PrimeField) -> None:
    """Tests if matrices of different algebras cannot be combined."""
    with pytest.raises(ShapeMismatch):
        _ = identity(ut2, f2) + identity(ut2, f3)
    with pytest.raises(ShapeMismatch):
        _ = identity(ut2, f3) * identity(fixture("FULL2"), f3)


def test_inverse(ut2: Preorder, f3: PrimeField) -> None:
    """Tests the inverse of an upper triangular unit."""
    x = struct_matrix(ut2, f3, {(1, 1): 2, (1, 2): 1, (2, 2): 1})

    assert is_invertible(x)
    assert algebra_invert(x) == x
    assert x * algebra_invert(x) == identity(ut2, f3)


def test_singular_inverse(ut2: Preorder, f3: PrimeField) -> None:
    """Tests if singular matrices are refused."""
    singular = diagonal(ut2, f3, [1, 0])

    assert not is_invertible(singular)
    with pytest.raises(SingularMatrix):
        algebra_invert(singular)


@pytest.mark.parametrize(
    ("name", "p", "order"),
    [("UT2", 2, 2), ("UT2", 3, 12), ("FULL2", 2, 6), ("FULL2", 3, 48), ("EX56", 2, 16)],
)
def test_unit_group_order(name: str, p: int, order: int) -> None:
    """Tests |U(M(ρ, F_p))| from class sizes."""
    assert unit_group_order(fixture(name), prime_field(p)) == order


@pytest.mark.parametrize(("name", "p"), [("UT2", 2), ("UT2", 3), ("FULL2", 2), ("CLS3", 2)])
def test_unit_group_order_exhaustively(name: str, p: int) -> None:
    """Tests the unit count against every matrix of tiny algebras."""
    preorder, field = fixture(name), prime_field(p)
    units = sum(1 for x in all_matrices(preorder, field) if is_invertible(x))

    assert units == unit_group_order(preorder, field)


def test_random_unit(ut2: Preorder, f3: PrimeField) -> None:
    """Tests if sampled units are invertible and reproducible."""
    first = [random_unit(random.Random(5), ut2, f3) for _ in range(3)]

    assert all(is_invertible(x) for x in first)
    assert first[0] == first[1] == first[2]
