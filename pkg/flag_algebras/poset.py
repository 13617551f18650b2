"""
Preorders on {1..n}, their quotient posets and Hasse graphs.

Ground elements are 1-based everywhere. Classes and components are referred to by
their 0-based position in the canonical order (ascending minimum element).
"""
import json
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Mapping, NamedTuple, Sequence

import networkx as nx

from .errors import IndexOutOfRange, MalformedInput

Pair = tuple[int, int]
Class = tuple[int, ...]


@dataclass(frozen=True)
class Preorder:
    """A reflexive and transitive relation on {1..n}."""

    n: int
    rel: tuple[tuple[bool, ...], ...]

    def related(self, i: int, j: int) -> bool:
        """Whether i ρ j."""
        return self.rel[i - 1][j - 1]

    @cached_property
    def pairs(self) -> tuple[Pair, ...]:
        """Every pair (i, j) with i ρ j, in lexicographic order."""
        return tuple(
            (i, j)
            for i in range(1, self.n + 1)
            for j in range(1, self.n + 1)
            if self.related(i, j)
        )

    def digraph(self) -> nx.DiGraph:
        """The relation as a directed graph on {1..n} (loops omitted)."""
        graph = nx.DiGraph()
        graph.add_nodes_from(range(1, self.n + 1))
        graph.add_edges_from((i, j) for i, j in self.pairs if i != j)
        return graph


class Closure(NamedTuple):
    """A closed preorder and whether the input already was one."""

    preorder: Preorder
    already_closed: bool


def closure_and_validate(n: int, pairs: Iterable[Pair]) -> Closure:
    """
    Smallest reflexive and transitive relation on {1..n} containing `pairs`.
    """
    if n < 1:
        raise IndexOutOfRange(f"Ground set size must be positive, got {n}.")

    pairs = list(pairs)
    for i, j in pairs:
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexOutOfRange(f"Pair ({i}, {j}) is outside of 1..{n}.")

    graph = nx.DiGraph()
    graph.add_nodes_from(range(1, n + 1))
    graph.add_edges_from(pairs)
    closed = nx.transitive_closure(graph, reflexive=True)

    rel = tuple(
        tuple(closed.has_edge(i, j) for j in range(1, n + 1))
        for i in range(1, n + 1)
    )
    preorder = Preorder(n, rel)
    given = set(pairs) | {(i, i) for i in range(1, n + 1)}
    return Closure(preorder, given == set(preorder.pairs))


def preorder_from_pairs(n: int, pairs: Iterable[Pair]) -> Preorder:
    """Shortcut for `closure_and_validate(n, pairs).preorder`."""
    return closure_and_validate(n, pairs).preorder


def equivalence_classes(preorder: Preorder) -> list[Class]:
    """Classes of i ~ j (i ρ j and j ρ i), sorted by their least element."""
    components = nx.strongly_connected_components(preorder.digraph())
    return sorted((tuple(sorted(c)) for c in components), key=lambda c: c[0])


@dataclass(frozen=True)
class QuotientPoset:
    """The partial order induced by a preorder on its equivalence classes."""

    preorder: Preorder
    classes: tuple[Class, ...]
    leq: tuple[tuple[bool, ...], ...]
    hasse: tuple[Pair, ...]
    comp_of: tuple[int, ...]
    height_of: tuple[int, ...]

    @property
    def size(self) -> int:
        """Number of classes."""
        return len(self.classes)

    @property
    def mult(self) -> tuple[int, ...]:
        """Cardinality of each class."""
        return tuple(len(c) for c in self.classes)

    @property
    def num_components(self) -> int:
        """Number of connected components of the undirected Hasse graph."""
        return max(self.comp_of) + 1

    @cached_property
    def class_of(self) -> Mapping[int, int]:
        """Ground element -> index of its class."""
        return {i: index for index, cls in enumerate(self.classes) for i in cls}

    def less(self, alpha: int, beta: int) -> bool:
        """Strict order between classes."""
        return alpha != beta and self.leq[alpha][beta]

    def comparable(self, alpha: int, beta: int) -> bool:
        """Whether alpha <= beta or beta <= alpha."""
        return self.leq[alpha][beta] or self.leq[beta][alpha]

    def component(self, t: int) -> tuple[int, ...]:
        """Classes of the t-th component."""
        return tuple(a for a in range(self.size) if self.comp_of[a] == t)

    def hasse_graph(self) -> nx.DiGraph:
        """Hasse arrows as a directed graph on class indices."""
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.size))
        graph.add_edges_from(self.hasse)
        return graph

    def undirected_hasse(self) -> nx.Graph:
        """Hasse arrows with their direction forgotten."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.size))
        graph.add_edges_from(self.hasse)
        return graph


def _components(size: int, arrows: Sequence[Pair]) -> tuple[int, ...]:
    graph = nx.Graph()
    graph.add_nodes_from(range(size))
    graph.add_edges_from(arrows)
    comp_of = [0] * size
    components = sorted(nx.connected_components(graph), key=min)
    for index, component in enumerate(components):
        for node in component:
            comp_of[node] = index
    return tuple(comp_of)


def _heights(size: int, arrows: Sequence[Pair]) -> tuple[int, ...]:
    graph = nx.DiGraph()
    graph.add_nodes_from(range(size))
    graph.add_edges_from(arrows)
    height_of = [0] * size
    # Each generation is the set of minimal elements left after peeling the
    # previous ones.
    for height, generation in enumerate(nx.topological_generations(graph)):
        for node in generation:
            height_of[node] = height
    return tuple(height_of)


def quotient_order(preorder: Preorder) -> QuotientPoset:
    """Builds the quotient poset C together with its Hasse arrows."""
    classes = tuple(equivalence_classes(preorder))
    size = len(classes)
    leq = tuple(
        tuple(preorder.related(alpha[0], beta[0]) for beta in classes)
        for alpha in classes
    )

    order = nx.DiGraph()
    order.add_nodes_from(range(size))
    order.add_edges_from(
        (a, b) for a in range(size) for b in range(size) if a != b and leq[a][b]
    )
    hasse = tuple(sorted(nx.transitive_reduction(order).edges()))

    return QuotientPoset(
        preorder=preorder,
        classes=classes,
        leq=leq,
        hasse=hasse,
        comp_of=_components(size, hasse),
        height_of=_heights(size, hasse),
    )


def components_and_heights(
    poset: QuotientPoset,
) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
    """Number of components, component of each class and height of each class."""
    comp_of = _components(poset.size, poset.hasse)
    return max(comp_of) + 1, comp_of, _heights(poset.size, poset.hasse)


def symmetric_graph(preorder: Preorder) -> nx.Graph:
    """Undirected graph on {1..n} joining i != j whenever i ρ j or j ρ i."""
    graph = nx.Graph()
    graph.add_nodes_from(range(1, preorder.n + 1))
    graph.add_edges_from((i, j) for i, j in preorder.pairs if i != j)
    return graph


def comparability_graph(poset: QuotientPoset) -> nx.Graph:
    """
    Graph on the elements of non-isolated classes, joining i and j when their
    classes are distinct and comparable.
    """
    graph = nx.Graph()
    isolated = {
        a
        for a in range(poset.size)
        if not any(poset.comparable(a, b) for b in range(poset.size) if b != a)
    }
    graph.add_nodes_from(
        i for a, cls in enumerate(poset.classes) if a not in isolated for i in cls
    )
    graph.add_edges_from(
        (i, j)
        for a in range(poset.size)
        for b in range(poset.size)
        if poset.less(a, b)
        for i in poset.classes[a]
        for j in poset.classes[b]
    )
    return graph


def bfs_forest(graph: nx.Graph) -> list[Pair]:
    """
    Breadth-first spanning forest as (parent, child) edges, rooted at the least
    vertex of each component and visiting neighbours in ascending order.
    """
    forest: list[Pair] = []
    seen: set[int] = set()
    for root in sorted(graph.nodes):
        if root in seen:
            continue
        seen.add(root)
        frontier = [root]
        while frontier:
            next_frontier = []
            for parent in frontier:
                for child in sorted(graph.neighbors(parent)):
                    if child not in seen:
                        seen.add(child)
                        forest.append((parent, child))
                        next_frontier.append(child)
            frontier = next_frontier
    return forest


def augment_with_apex(preorder: Preorder) -> Preorder:
    """
    Adds an element n+1 above every maximal class reached by at least two Hasse
    arrows.
    """
    poset = quotient_order(preorder)
    graph = poset.hasse_graph()
    targets = [
        poset.classes[a][0]
        for a in range(poset.size)
        if graph.in_degree(a) >= 2 and graph.out_degree(a) == 0
    ]
    apex = preorder.n + 1
    pairs = [*preorder.pairs, *((i, apex) for i in targets)]
    return preorder_from_pairs(apex, pairs)


def parse_preorder(text: str, *, json_format: bool | None = None) -> Closure:
    """
    Parses the preorder text format (`n <int>` followed by `i j` lines, `#`
    comments) or its JSON equivalent `{"n": int, "pairs": [[i, j], ...]}`.
    """
    if json_format is None:
        json_format = text.lstrip().startswith("{")

    if json_format:
        try:
            contents = json.loads(text)
            n = int(contents["n"])
            pairs = [(int(i), int(j)) for i, j in contents["pairs"]]
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as error:
            raise MalformedInput(f"Invalid JSON preorder: {error}", str(error)) from error
        return closure_and_validate(n, pairs)

    lines = [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.strip().startswith("#")
    ]
    if not lines:
        raise MalformedInput("Empty preorder file.", "")

    header = lines[0].split()
    if len(header) != 2 or header[0] != "n" or not header[1].isdigit():
        raise MalformedInput(f"Expected `n <integer>`, got {lines[0]!r}.", lines[0])

    pairs = []
    for line in lines[1:]:
        tokens = line.split()
        if len(tokens) != 2 or not all(t.lstrip("-").isdigit() for t in tokens):
            raise MalformedInput(f"Expected a pair `i j`, got {line!r}.", line)
        pairs.append((int(tokens[0]), int(tokens[1])))

    return closure_and_validate(int(header[1]), pairs)


def load_fixtures(path: Path) -> Mapping[str, tuple[int, tuple[Pair, ...]]]:
    """Loads a TOML file containing named preorders."""
    import toml

    with open(path, encoding="utf-8") as f:
        toml_contents = toml.load(f)

    return {
        name: (int(spec["n"]), tuple((int(i), int(j)) for i, j in spec["pairs"]))
        for name, spec in toml_contents["fixtures"].items()
    }


FIXTURES = load_fixtures(Path(__file__).parent / "fixtures.toml")


def fixture(name: str) -> Preorder:
    """A named preorder from the fixtures table."""
    try:
        n, pairs = FIXTURES[name]
    except KeyError as error:
        raise MalformedInput(f"Unknown fixture {name!r}.", name) from error
    return preorder_from_pairs(n, pairs)


def load_preorder(source: str) -> Closure:
    """Reads a preorder from a file path or from `fixture:<NAME>`."""
    if source.startswith("fixture:"):
        name = source.removeprefix("fixture:")
        n, pairs = fixture(name).n, FIXTURES[name][1]
        return closure_and_validate(n, pairs)

    path = Path(source)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as error:
        raise MalformedInput(f"Cannot read {source}: {error.strerror}", source) from error

    return parse_preorder(text, json_format=True if path.suffix == ".json" else None)
