"""Tests finite groups, the group spec parser and Smith normal forms."""
from pathlib import Path

import pytest

from flag_algebras.errors import GroupAxiomError, MalformedInput, UnknownGroupSpec
from flag_algebras.groups import (
    FiniteGroup,
    build_group,
    cyclic,
    from_table,
    hom_triviality,
    load_table,
)
from flag_algebras.smith import IntMatrix, smith_normal_form, verify_smith_form

from .fixtures import s3, z2, z3
from .helpers import ignore_unused

ignore_unused(s3, z2, z3, reason="Fixtures")


# pylint: disable=redefined-outer-name


@pytest.mark.parametrize(
    ("spec", "order", "abelian"),
    [
        ("Z1", 1, True),
        ("Z4", 4, True),
        ("S3", 6, False),
        ("S4", 24, False),
        ("D4", 8, False),
        ("Z2xZ2", 4, True),
        ("Z2xS3", 12, False),
    ],
)
def test_build_group(spec: str, order: int, abelian: bool) -> None:
    """Tests the group spec parser on cyclic, symmetric, dihedral and products."""
    group = build_group(spec)

    assert group.order == order
    assert group.abelian == abelian
    assert group.label(0) == "e"
    for a in group.elems:
        assert group.mul(a, group.inverse(a)) == 0


@pytest.mark.parametrize("spec", ["Q8", "Z0", "S6", "Z2x", "z3", "D0"])
def test_unknown_group_specs(spec: str) -> None:
    """Tests if unsupported specs are refused."""
    with pytest.raises(UnknownGroupSpec):
        build_group(spec)


def test_element_orders(s3: FiniteGroup) -> None:
    """Tests element orders, powers and products in S3."""
    orders = sorted(s3.element_order(a) for a in s3.elems)

    assert orders == [1, 2, 2, 2, 3, 3]
    for a in s3.elems:
        assert s3.power(a, s3.element_order(a)) == 0
    assert s3.prod([]) == 0


def test_cyclic_labels(z3: FiniteGroup) -> None:
    """Tests the generator-power labels."""
    assert z3.labels == ("e", "g", "g^2")
    assert z3.label_tuple([0, 2, 1]) == "(e,g^2,g)"
    assert cyclic(1).labels == ("e",)


def test_table_validation() -> None:
    """Tests if tables breaking the axioms are refused with a witness."""
    with pytest.raises(GroupAxiomError):
        from_table([])
    with pytest.raises(GroupAxiomError) as error:
        from_table([[0, 1], [1, 1]])
    assert error.value.witness == (1,)
    with pytest.raises(GroupAxiomError):
        from_table([[0, 1], [1]])
    with pytest.raises(GroupAxiomError):
        from_table([[0, 2], [1, 0]])


def test_load_table(tmp_path: Path, z2: FiniteGroup) -> None:
    """Tests reading a group table file."""
    path = tmp_path / "klein.txt"
    path.write_text("4\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n", encoding="utf-8")

    group = build_group(f"table:{path}")

    assert group.order == 4
    assert group.abelian
    assert all(group.element_order(a) <= z2.order for a in group.elems)
    assert group.name == "klein"


@pytest.mark.parametrize(
    ("contents", "error"),
    [
        ("", MalformedInput),
        ("2\n0 1\n1", MalformedInput),
        ("2\n0 x\n1 0", MalformedInput),
        ("2\n0 1\n1 1", GroupAxiomError),
    ],
)
def test_load_bad_tables(tmp_path: Path, contents: str, error: type[Exception]) -> None:
    """Tests if broken table files are refused."""
    path = tmp_path / "bad.txt"
    path.write_text(contents, encoding="utf-8")

    with pytest.raises(error):
        load_table(path)


def test_load_missing_table(tmp_path: Path) -> None:
    """Tests if a missing file is reported as malformed input."""
    with pytest.raises(MalformedInput):
        load_table(tmp_path / "missing.txt")


def test_hom_triviality(z2: FiniteGroup, z3: FiniteGroup) -> None:
    """Tests the homomorphism criterion on small invariant factors."""
    assert hom_triviality((1, 6), 0, build_group("Z5"))
    assert not hom_triviality((1, 6), 0, z3)
    assert not hom_triviality((1, 6), 0, z2)
    assert not hom_triviality((), 1, z2)
    assert not hom_triviality((0,), 0, z2)
    assert hom_triviality((), 0, z2)
    assert hom_triviality((), 3, build_group("Z1"))


def test_smith_diagonal() -> None:
    """Tests the invariant factors of diag(2, 3)."""
    matrix = IntMatrix.of([[2, 0], [0, 3]])
    form = smith_normal_form(matrix)

    assert form.factors == (1, 6)
    assert form.rank == 2
    assert form.torsion == (6,)
    assert verify_smith_form(matrix, form)


@pytest.mark.parametrize(
    ("entries", "factors", "rank"),
    [
        ([[0, 0], [0, 0]], (0, 0), 0),
        ([[1, -1, 0], [0, 1, -1], [1, 0, -1]], (1, 1, 0), 2),
        ([[2, 4], [6, 8]], (2, 4), 2),
        ([[-3]], (3,), 1),
        ([[4, 6]], (2,), 1),
    ],
)
def test_smith_forms(entries: list[list[int]], factors: tuple[int, ...], rank: int) -> None:
    """Tests factors, rank and the unimodular transforms on a few matrices."""
    matrix = IntMatrix.of(entries)
    form = smith_normal_form(matrix)

    assert form.factors == factors
    assert form.rank == rank
    assert verify_smith_form(matrix, form)


def test_smith_of_empty_matrix() -> None:
    """Tests a matrix without rows."""
    matrix = IntMatrix.of([], cols=3)
    form = smith_normal_form(matrix)

    assert form.factors == ()
    assert form.rank == 0
    assert form.torsion == ()
