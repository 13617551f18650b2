"""The lattice of antichains of a quotient poset and its automorphisms."""
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from networkx.algorithms.isomorphism import DiGraphMatcher, categorical_node_match

from .errors import NotALatticeAutomorphism, NotAnAntichain
from .outcome import check_budget
from .poset import QuotientPoset
from .settings import SETTINGS


@dataclass(frozen=True, order=True)
class Antichain:
    """A set of pairwise incomparable classes, kept sorted."""

    members: tuple[int, ...]

    @property
    def mask(self) -> int:
        """The members as a bitset over class indices."""
        return sum(1 << a for a in self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)


EMPTY = Antichain(())


def antichain(poset: QuotientPoset, members: Iterable[int]) -> Antichain:
    """Validates and builds an antichain of `poset`."""
    result = Antichain(tuple(sorted(set(members))))
    _validate(poset, result)
    return result


def _validate(poset: QuotientPoset, value: Antichain) -> None:
    for a in value:
        if not 0 <= a < poset.size:
            raise NotAnAntichain(f"Class {a} does not exist.")
        for b in value:
            if poset.less(a, b):
                raise NotAnAntichain(f"Classes {a} and {b} are comparable.")


def antichain_sort_key(value: Antichain) -> tuple[int, tuple[int, ...]]:
    """Increasing size, then lexicographic order."""
    return len(value), value.members


def enumerate_antichains(
    poset: QuotientPoset, max_classes: int | None = None
) -> list[Antichain]:
    """Every antichain of `poset`, the empty one included."""
    check_budget(
        "antichain enumeration (classes)",
        poset.size,
        SETTINGS.budgets.antichain_classes if max_classes is None else max_classes,
    )
    found = [EMPTY]

    def extend(start: int, current: tuple[int, ...]) -> None:
        for candidate in range(start, poset.size):
            if not any(poset.comparable(candidate, m) for m in current):
                grown = (*current, candidate)
                found.append(Antichain(grown))
                extend(candidate + 1, grown)

    extend(0, ())
    return sorted(found, key=antichain_sort_key)


def maximal(poset: QuotientPoset, classes: Iterable[int]) -> Antichain:
    """Maximal elements of a set of classes."""
    pool = set(classes)
    return Antichain(
        tuple(sorted(a for a in pool if not any(poset.less(a, b) for b in pool)))
    )


def lower_set(poset: QuotientPoset, value: Antichain) -> set[int]:
    """Classes below some member of `value`."""
    return {a for a in range(poset.size) if any(poset.leq[a][b] for b in value)}


def antichain_leq(poset: QuotientPoset, lhs: Antichain, rhs: Antichain) -> bool:
    """Every member of `lhs` lies below some member of `rhs`."""
    _validate(poset, lhs)
    _validate(poset, rhs)
    return all(any(poset.leq[a][b] for b in rhs) for a in lhs)


def antichain_meet(poset: QuotientPoset, lhs: Antichain, rhs: Antichain) -> Antichain:
    """Maximal elements of the common lower set."""
    _validate(poset, lhs)
    _validate(poset, rhs)
    return maximal(poset, lower_set(poset, lhs) & lower_set(poset, rhs))


def antichain_join(poset: QuotientPoset, lhs: Antichain, rhs: Antichain) -> Antichain:
    """Maximal elements of the union."""
    _validate(poset, lhs)
    _validate(poset, rhs)
    return maximal(poset, {*lhs, *rhs})


@dataclass(frozen=True, order=True)
class PosetAutomorphism:
    """An order automorphism of a quotient poset, as the images of each class."""

    mapping: tuple[int, ...]
    multiplicity_preserving: bool = True

    def __call__(self, alpha: int) -> int:
        return self.mapping[alpha]

    @staticmethod
    def identity(size: int) -> "PosetAutomorphism":
        """The identity automorphism on `size` classes."""
        return PosetAutomorphism(tuple(range(size)))

    @property
    def is_identity(self) -> bool:
        """Whether every class is fixed."""
        return all(a == b for a, b in enumerate(self.mapping))

    def compose(self, other: "PosetAutomorphism") -> "PosetAutomorphism":
        """`self ∘ other`, i.e. `other` is applied first."""
        return PosetAutomorphism(
            tuple(self.mapping[b] for b in other.mapping),
            self.multiplicity_preserving and other.multiplicity_preserving,
        )

    def inverse(self) -> "PosetAutomorphism":
        """The inverse automorphism."""
        inverse = [0] * len(self.mapping)
        for a, b in enumerate(self.mapping):
            inverse[b] = a
        return PosetAutomorphism(tuple(inverse), self.multiplicity_preserving)

    def apply(self, value: Antichain) -> Antichain:
        """The induced lattice map f_g(D) = {g(α) | α ∈ D}."""
        return Antichain(tuple(sorted(self.mapping[a] for a in value)))


def automorphism(poset: QuotientPoset, mapping: Iterable[int]) -> PosetAutomorphism:
    """Wraps a class mapping, setting its multiplicity flag."""
    images = tuple(mapping)
    return PosetAutomorphism(
        images,
        all(poset.mult[a] == poset.mult[b] for a, b in enumerate(images)),
    )


def poset_automorphisms(
    poset: QuotientPoset, multiplicity_preserving: bool, budget: int | None = None
) -> list[PosetAutomorphism]:
    """
    Every order automorphism, optionally only those keeping class sizes (Aut₀).
    Sorted, so the identity comes first.
    """
    graph = poset.hasse_graph()
    for a, size in enumerate(poset.mult):
        graph.nodes[a]["mult"] = size if multiplicity_preserving else 0

    budget = SETTINGS.budgets.enumeration if budget is None else budget
    matcher = DiGraphMatcher(graph, graph, node_match=categorical_node_match("mult", 0))
    found = []
    for match in matcher.isomorphisms_iter():
        found.append(automorphism(poset, (match[a] for a in range(poset.size))))
        check_budget("poset automorphisms", len(found), budget)
    return sorted(found)


def lattice_map(poset: QuotientPoset, g: PosetAutomorphism) -> dict[Antichain, Antichain]:
    """f_g on every antichain."""
    return {value: g.apply(value) for value in enumerate_antichains(poset)}


def lattice_automorphism_decompose(
    poset: QuotientPoset, f: Mapping[Antichain, Antichain]
) -> PosetAutomorphism:
    """
    Finds the poset automorphism g with f = f_g, peeling the poset by heights.
    """
    antichains = enumerate_antichains(poset)
    if set(f) != set(antichains) or sorted(f.values(), key=antichain_sort_key) != antichains:
        missing = next((d for d in antichains if d not in f), None)
        raise NotALatticeAutomorphism("Map is not a bijection on antichains", (missing, None))

    for lhs in antichains:
        for rhs in antichains:
            if antichain_leq(poset, lhs, rhs) != antichain_leq(poset, f[lhs], f[rhs]):
                raise NotALatticeAutomorphism("Map does not preserve the order", (lhs, rhs))

    mapping = [0] * poset.size
    for height in range(max(poset.height_of) + 1):
        for alpha in (a for a in range(poset.size) if poset.height_of[a] == height):
            image = f[Antichain((alpha,))]
            if len(image) != 1 or poset.height_of[image.members[0]] != height:
                raise NotALatticeAutomorphism(
                    "Singleton is not sent to a singleton of the same height",
                    (Antichain((alpha,)), image),
                )
            mapping[alpha] = image.members[0]

    g = automorphism(poset, mapping)
    for value in antichains:
        if g.apply(value) != f[value]:
            raise NotALatticeAutomorphism("Map is not induced by its singletons", (value, f[value]))
    return g
