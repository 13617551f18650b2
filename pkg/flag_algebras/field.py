"""Prime fields and structural matrices M(ρ, F_p)."""
import random
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import prod
from typing import Any, Iterable, Mapping, Sequence

from sympy.ntheory import isprime, primitive_root
from sympy.polys.domains import GF
from sympy.polys.matrices import DomainMatrix

from .errors import DomainMismatch, NotPrime, ShapeMismatch, SingularMatrix
from .poset import Pair, Preorder, equivalence_classes
from .settings import SETTINGS


@dataclass(frozen=True)
class PrimeField:
    """The field of integers modulo a prime p; elements are 0..p-1."""

    p: int

    @cached_property
    def domain(self) -> Any:
        """The sympy domain GF(p)."""
        return GF(self.p)

    @cached_property
    def generator(self) -> int:
        """A primitive root, generating the unit group."""
        return 1 if self.p == 2 else int(primitive_root(self.p))

    @property
    def units(self) -> range:
        """Nonzero residues."""
        return range(1, self.p)

    def inv(self, x: int) -> int:
        """Multiplicative inverse of a nonzero element."""
        return pow(x, -1, self.p)

    def mul(self, x: int, y: int) -> int:
        """x·y mod p."""
        return x * y % self.p

    def power_of_generator(self, exponent: int) -> int:
        """generator^exponent mod p."""
        return pow(self.generator, exponent, self.p)


def prime_field(p: int, max_prime: int | None = None) -> PrimeField:
    """Validates the modulus."""
    cap = SETTINGS.max_prime if max_prime is None else max_prime
    if not isprime(p):
        raise NotPrime(f"{p} is not prime.")
    if p > cap:
        raise NotPrime(f"{p} is above the supported maximum of {cap}.")
    return PrimeField(p)


Dense = DomainMatrix


def dense(field: PrimeField, rows: Sequence[Sequence[int]]) -> Dense:
    """A full n×n matrix over the field."""
    n = len(rows)
    domain = field.domain
    return DomainMatrix([[domain(v % field.p) for v in row] for row in rows], (n, n), domain)


def dense_rows(field: PrimeField, matrix: Dense) -> list[list[int]]:
    """Entries as integers in 0..p-1."""
    return [[int(v) % field.p for v in row] for row in matrix.to_list()]


def dense_identity(field: PrimeField, n: int) -> Dense:
    """The n×n identity."""
    return DomainMatrix.eye(n, field.domain)


def dense_inverse(field: PrimeField, matrix: Dense) -> Dense:
    """Inverse by elimination over F_p."""
    if int(matrix.det()) % field.p == 0:
        raise SingularMatrix("Matrix has zero determinant.")
    return matrix.inv()


@dataclass(frozen=True)
class StructMatrix:
    """
    An element of M(ρ, F_p): nonzero coefficients on ρ-pairs, sorted by pair.
    """

    preorder: Preorder
    field: PrimeField
    entries: tuple[tuple[Pair, int], ...]

    @cached_property
    def coeffs(self) -> Mapping[Pair, int]:
        """Pair -> nonzero coefficient."""
        return dict(self.entries)

    def __getitem__(self, pair: Pair) -> int:
        return self.coeffs.get(pair, 0)

    def __add__(self, other: "StructMatrix") -> "StructMatrix":
        _check_compatible(self, other)
        total = dict(self.coeffs)
        for pair, value in other.entries:
            total[pair] = total.get(pair, 0) + value
        return struct_matrix(self.preorder, self.field, total)

    def __mul__(self, other: "StructMatrix") -> "StructMatrix":
        return algebra_multiply(self, other)

    def scaled(self, factor: int) -> "StructMatrix":
        """Multiplies every coefficient by `factor`."""
        return struct_matrix(
            self.preorder, self.field, {k: v * factor for k, v in self.entries}
        )

    @property
    def is_zero(self) -> bool:
        """Whether there are no nonzero coefficients."""
        return not self.entries

    def to_dense(self) -> Dense:
        """The full n×n matrix."""
        n = self.preorder.n
        rows = [[0] * n for _ in range(n)]
        for (i, j), value in self.entries:
            rows[i - 1][j - 1] = value
        return dense(self.field, rows)


def _check_compatible(x: StructMatrix, y: StructMatrix) -> None:
    if x.preorder != y.preorder or x.field != y.field:
        raise ShapeMismatch("Matrices belong to different algebras.")


def struct_matrix(
    preorder: Preorder, field: PrimeField, coeffs: Mapping[Pair, int]
) -> StructMatrix:
    """Reduces coefficients mod p, drops zeros and checks every key is in ρ."""
    entries = []
    for (i, j), value in sorted(coeffs.items()):
        if not (1 <= i <= preorder.n and 1 <= j <= preorder.n and preorder.related(i, j)):
            raise DomainMismatch(f"Position ({i}, {j}) is not in the relation.")
        if value % field.p:
            entries.append(((i, j), value % field.p))
    return StructMatrix(preorder, field, tuple(entries))


def matrix_unit(preorder: Preorder, field: PrimeField, i: int, j: int) -> StructMatrix:
    """e_ij."""
    return struct_matrix(preorder, field, {(i, j): 1})


def identity(preorder: Preorder, field: PrimeField) -> StructMatrix:
    """The identity matrix."""
    return struct_matrix(preorder, field, {(i, i): 1 for i in range(1, preorder.n + 1)})


def diagonal(preorder: Preorder, field: PrimeField, values: Sequence[int]) -> StructMatrix:
    """diag(values[0], ..., values[n-1])."""
    return struct_matrix(preorder, field, {(i, i): v for i, v in enumerate(values, start=1)})


def from_dense(preorder: Preorder, field: PrimeField, matrix: Dense) -> StructMatrix:
    """Reads a full matrix that must vanish outside ρ."""
    coeffs = {
        (i, j): value
        for i, row in enumerate(dense_rows(field, matrix), start=1)
        for j, value in enumerate(row, start=1)
        if value
    }
    return struct_matrix(preorder, field, coeffs)


def algebra_multiply(x: StructMatrix, y: StructMatrix) -> StructMatrix:
    """Product by bilinearity of e_ij·e_pq = δ_jp·e_iq."""
    _check_compatible(x, y)
    by_row: dict[int, list[tuple[int, int]]] = {}
    for (j, r), value in y.entries:
        by_row.setdefault(j, []).append((r, value))

    total: dict[Pair, int] = {}
    for (i, j), lhs in x.entries:
        for r, rhs in by_row.get(j, []):
            total[i, r] = total.get((i, r), 0) + lhs * rhs
    return struct_matrix(x.preorder, x.field, total)


def is_invertible(x: StructMatrix) -> bool:
    """Whether det(x) != 0."""
    return int(x.to_dense().det()) % x.field.p != 0


def algebra_invert(x: StructMatrix) -> StructMatrix:
    """
    Inverse computed on the full matrix. It always lies in M(ρ, F_p) again;
    `from_dense` rejects anything else.
    """
    inverse = dense_inverse(x.field, x.to_dense())
    return from_dense(x.preorder, x.field, inverse)


def _general_linear_order(m: int, p: int) -> int:
    return prod(p**m - p**k for k in range(m))


def unit_group_order(preorder: Preorder, field: PrimeField) -> int:
    """
    |U(M(ρ, F_p))|: a matrix is a unit exactly when its diagonal blocks are,
    and the off-diagonal ρ-positions are free.
    """
    sizes = [len(c) for c in equivalence_classes(preorder)]
    free = len(preorder.pairs) - sum(m * m for m in sizes)
    return field.p**free * prod(_general_linear_order(m, field.p) for m in sizes)


def random_struct_matrix(
    rng: random.Random, preorder: Preorder, field: PrimeField
) -> StructMatrix:
    """A uniformly random element of M(ρ, F_p)."""
    return struct_matrix(
        preorder, field, {pair: rng.randrange(field.p) for pair in preorder.pairs}
    )


def random_unit(rng: random.Random, preorder: Preorder, field: PrimeField) -> StructMatrix:
    """A uniformly random invertible element, by rejection."""
    while True:
        candidate = random_struct_matrix(rng, preorder, field)
        if is_invertible(candidate):
            return candidate


def all_matrices(preorder: Preorder, field: PrimeField) -> Iterable[StructMatrix]:
    """Every element of M(ρ, F_p), for exhaustive checks on tiny algebras."""
    pairs = preorder.pairs
    for values in product(range(field.p), repeat=len(pairs)):
        yield struct_matrix(preorder, field, dict(zip(pairs, values)))
