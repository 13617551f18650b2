"""Finite groups given by multiplication tables."""
import re
from dataclasses import dataclass
from functools import cached_property, reduce
from itertools import product as cartesian
from pathlib import Path
from typing import Any, Iterable, Sequence

from .errors import GroupAxiomError, MalformedInput, UnknownGroupSpec

Element = int


@dataclass(frozen=True)
class FiniteGroup:
    """
    A finite group on the elements 0..order-1, 0 being the identity.
    `table[a][b]` is the product a·b.
    """

    name: str
    table: tuple[tuple[Element, ...], ...]
    labels: tuple[str, ...]

    @property
    def order(self) -> int:
        """Number of elements."""
        return len(self.table)

    @property
    def elems(self) -> range:
        """Element ids, identity first."""
        return range(self.order)

    @property
    def identity(self) -> Element:
        """The identity element."""
        return 0

    @cached_property
    def inv(self) -> tuple[Element, ...]:
        """Inverse of each element."""
        return tuple(row.index(0) for row in self.table)

    @cached_property
    def abelian(self) -> bool:
        """Whether the table is symmetric."""
        return all(
            self.table[a][b] == self.table[b][a] for a in self.elems for b in self.elems
        )

    def mul(self, a: Element, b: Element) -> Element:
        """The product a·b."""
        return self.table[a][b]

    def inverse(self, a: Element) -> Element:
        """The inverse of a."""
        return self.inv[a]

    def prod(self, elements: Iterable[Element]) -> Element:
        """Left-to-right product of a sequence (identity when empty)."""
        return reduce(self.mul, elements, 0)

    def power(self, a: Element, exponent: int) -> Element:
        """a multiplied by itself `exponent` times (exponent >= 0)."""
        return self.prod(a for _ in range(exponent))

    def element_order(self, a: Element) -> int:
        """Smallest d > 0 with a^d = e."""
        d, x = 1, a
        while x != 0:
            x = self.mul(x, a)
            d += 1
        return d

    def label(self, a: Element) -> str:
        """Human-readable name of an element."""
        return self.labels[a]

    def label_tuple(self, elements: Sequence[Element]) -> str:
        """Human-readable name of a tuple of elements."""
        return "(" + ",".join(self.labels[x] for x in elements) + ")"


def validate_table(table: Sequence[Sequence[int]]) -> None:
    """
    Checks the group axioms for a table with identity 0. Raises
    `GroupAxiomError` with the offending elements otherwise.
    """
    order = len(table)
    if order == 0:
        raise GroupAxiomError("A group needs at least one element", ())
    for a, row in enumerate(table):
        if len(row) != order:
            raise GroupAxiomError(f"Row {a} has {len(row)} entries instead of {order}", (a,))
        for b, value in enumerate(row):
            if not 0 <= value < order:
                raise GroupAxiomError(f"Product {a}·{b} = {value} is not an element", (a, b))

    for a in range(order):
        if table[0][a] != a or table[a][0] != a:
            raise GroupAxiomError("Element 0 is not an identity", (0, a))
        if not any(table[a][b] == 0 and table[b][a] == 0 for b in range(order)):
            raise GroupAxiomError(f"Element {a} has no inverse", (a,))

    for a, b, c in cartesian(range(order), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise GroupAxiomError("Table is not associative", (a, b, c))


def from_table(
    rows: Sequence[Sequence[int]], name: str = "table", labels: Sequence[str] | None = None
) -> FiniteGroup:
    """A validated group from an explicit multiplication table."""
    validate_table(rows)
    table = tuple(tuple(row) for row in rows)
    if labels is None:
        labels = ["e", *(str(a) for a in range(1, len(table)))]
    return FiniteGroup(name, table, tuple(labels))


def cyclic(m: int) -> FiniteGroup:
    """Z/m, generated by g."""
    if m < 1:
        raise UnknownGroupSpec(f"Z{m}: the order must be positive.")
    labels = ["e", "g", *(f"g^{k}" for k in range(2, m))][:m]
    table = [[(a + b) % m for b in range(m)] for a in range(m)]
    return from_table(table, f"Z{m}", labels)


def _from_permutations(name: str, group: Any) -> FiniteGroup:
    from sympy.combinatorics import Permutation

    perms: list[Permutation] = sorted(
        group.generate(), key=lambda p: p.array_form
    )
    index = {tuple(p.array_form): k for k, p in enumerate(perms)}
    table = [[index[tuple((p * q).array_form)] for q in perms] for p in perms]
    labels = [
        "".join("(" + " ".join(str(x + 1) for x in cycle) + ")" for cycle in p.cyclic_form)
        or "e"
        for p in perms
    ]
    return from_table(table, name, labels)


def symmetric(m: int) -> FiniteGroup:
    """The symmetric group on m points (m <= 5)."""
    from sympy.combinatorics.named_groups import SymmetricGroup

    if not 1 <= m <= 5:
        raise UnknownGroupSpec(f"S{m}: only S1 to S5 are supported.")
    return _from_permutations(f"S{m}", SymmetricGroup(m))


def dihedral(m: int) -> FiniteGroup:
    """The symmetries of an m-gon, of order 2m."""
    from sympy.combinatorics.named_groups import DihedralGroup

    if m < 1:
        raise UnknownGroupSpec(f"D{m}: the polygon needs at least one vertex.")
    return _from_permutations(f"D{m}", DihedralGroup(m))


def product(lhs: FiniteGroup, rhs: FiniteGroup) -> FiniteGroup:
    """Direct product; (a, b) has id a·|rhs| + b."""
    size = rhs.order

    def split(x: int) -> tuple[int, int]:
        return divmod(x, size)

    elements = [split(x) for x in range(lhs.order * size)]
    table = [
        [lhs.mul(a, c) * size + rhs.mul(b, d) for c, d in elements] for a, b in elements
    ]
    labels = [f"({lhs.label(a)},{rhs.label(b)})" for a, b in elements]
    labels[0] = "e"
    return from_table(table, f"{lhs.name}x{rhs.name}", labels)


def load_table(path: Path) -> FiniteGroup:
    """Reads a whitespace-separated file: the order, then the table row by row."""
    try:
        tokens = path.read_text(encoding="utf-8").split()
    except OSError as error:
        raise MalformedInput(f"Cannot read {path}: {error.strerror}", str(path)) from error

    for token in tokens:
        if not token.isdigit():
            raise MalformedInput(f"Group table entry {token!r} is not an integer.", token)
    if not tokens:
        raise MalformedInput(f"Group table {path} is empty.", str(path))

    order, entries = int(tokens[0]), [int(t) for t in tokens[1:]]
    if len(entries) != order * order:
        raise MalformedInput(
            f"Expected {order * order} table entries, found {len(entries)}.", tokens[0]
        )
    rows = [entries[k * order : (k + 1) * order] for k in range(order)]
    return from_table(rows, path.stem)


_FACTOR = re.compile(r"^([ZSD])(\d+)$")


def build_group(spec: str) -> FiniteGroup:
    """
    Parses a group spec: `Z<m>`, `S<m>`, `D<m>`, products such as `Z2xZ3`, or
    `table:<path>`.
    """
    if spec.startswith("table:"):
        return load_table(Path(spec.removeprefix("table:")))

    factors = []
    for token in spec.split("x"):
        found = _FACTOR.match(token)
        if found is None:
            raise UnknownGroupSpec(f"Unknown group {token!r} in spec {spec!r}.")
        kind, m = found.group(1), int(found.group(2))
        match kind:
            case "Z":
                factors.append(cyclic(m))
            case "S":
                factors.append(symmetric(m))
            case _:
                factors.append(dihedral(m))

    return reduce(product, factors)


def hom_triviality(factors: Sequence[int], rank: int, group: FiniteGroup) -> bool:
    """
    Whether every homomorphism Z^rank ⊕ (⊕ Z/d) -> G is trivial. A factor 0
    counts as a free summand.
    """
    if group.order == 1:
        return True
    if rank > 0 or any(d == 0 for d in factors):
        return False
    return not any(
        group.power(x, d) == 0 for d in factors if d > 1 for x in group.elems if x != 0
    )
