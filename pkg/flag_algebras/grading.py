"""
Transitive functions ρ -> G (good gradings), their triviality, and the cycle
machinery of the Hasse graph.
"""
from dataclasses import dataclass
from functools import cached_property, lru_cache, partial
from itertools import product
from typing import Iterator, Mapping, NamedTuple, Sequence

import networkx as nx

from .errors import (
    BudgetExceeded,
    CocycleViolation,
    DomainMismatch,
    InconsistentLabeling,
)
from .field import StructMatrix
from .groups import Element, FiniteGroup, build_group, hom_triviality
from .outcome import Verdict, check_budget
from .poset import Pair, Preorder, QuotientPoset, bfs_forest, quotient_order, symmetric_graph
from .settings import SETTINGS
from .smith import IntMatrix, smith_normal_form
from .workers import map_chunks

HassePath = tuple[int, ...]


@dataclass(frozen=True)
class TransitiveLabeling:
    """u: ρ -> G with u(i,j)·u(j,r) = u(i,r); every ρ-pair is labeled."""

    preorder: Preorder
    group: FiniteGroup
    values: tuple[tuple[Pair, Element], ...]

    @cached_property
    def mapping(self) -> Mapping[Pair, Element]:
        """Pair -> group element."""
        return dict(self.values)

    def __getitem__(self, pair: Pair) -> Element:
        return self.mapping[pair]

    def labels(self) -> dict[str, str]:
        """`"i,j"` -> element name, for reports."""
        return {f"{i},{j}": self.group.label(x) for (i, j), x in self.values}


@dataclass(frozen=True)
class ArrowLabeling:
    """v: Γ₁ -> G, one value per Hasse arrow (in the poset's arrow order)."""

    poset: QuotientPoset
    group: FiniteGroup
    values: tuple[Element, ...]

    def __getitem__(self, arrow: Pair) -> Element:
        return self.values[self.poset.hasse.index(arrow)]


@dataclass(frozen=True)
class VertexWeights:
    """Group values indexed by position (ground element i at i-1, or class index)."""

    group: FiniteGroup
    values: tuple[Element, ...]


def check_transitive(
    preorder: Preorder, group: FiniteGroup, raw: Mapping[Pair, Element]
) -> TransitiveLabeling:
    """Validates the domain and the cocycle law; witnesses are (i, j, r)."""
    if set(raw) != set(preorder.pairs):
        extra = sorted(set(raw) ^ set(preorder.pairs))
        raise DomainMismatch(f"Labeling is not defined exactly on ρ (first difference {extra[0]}).")
    for pair, value in raw.items():
        if value not in group.elems:
            raise DomainMismatch(f"{value} is not an element of {group.name} (at {pair}).")

    for i, j in preorder.pairs:
        for r in range(1, preorder.n + 1):
            if preorder.related(j, r) and group.mul(raw[i, j], raw[j, r]) != raw[i, r]:
                raise CocycleViolation((i, j, r))

    return TransitiveLabeling(preorder, group, tuple(sorted(raw.items())))


def degree_of(u: TransitiveLabeling, x: StructMatrix) -> Element | None:
    """The degree of a nonzero homogeneous element, None otherwise."""
    degrees = {u[pair] for pair, _ in x.entries}
    return degrees.pop() if len(degrees) == 1 else None


def is_graded(u: TransitiveLabeling) -> bool:
    """deg(e_ij)·deg(e_jr) = deg(e_ir) for every nonzero basis product."""
    preorder = u.preorder
    return all(
        u.group.mul(u[i, j], u[j, r]) == u[i, r]
        for i, j in preorder.pairs
        for r in range(1, preorder.n + 1)
        if preorder.related(j, r)
    )


def triviality_witness(u: TransitiveLabeling) -> VertexWeights | None:
    """
    Weights g with u(i,j) = g_i·g_j⁻¹, if any. Weights are propagated along a
    spanning forest of the symmetrized relation and then checked on every pair.
    """
    group, preorder = u.group, u.preorder
    weights = [0] * preorder.n
    for parent, child in bfs_forest(symmetric_graph(preorder)):
        if preorder.related(child, parent):
            weights[child - 1] = group.mul(u[child, parent], weights[parent - 1])
        else:
            weights[child - 1] = group.mul(group.inverse(u[parent, child]), weights[parent - 1])

    for (i, j), value in u.values:
        if group.mul(weights[i - 1], group.inverse(weights[j - 1])) != value:
            return None
    return VertexWeights(group, tuple(weights))


@lru_cache(maxsize=64)
def parallel_paths(poset: QuotientPoset) -> Mapping[Pair, tuple[HassePath, ...]]:
    """
    For each α < β, every directed Hasse path from α to β as a tuple of arrow
    indices.
    """
    graph = poset.hasse_graph()
    index = {arrow: k for k, arrow in enumerate(poset.hasse)}
    paths: dict[Pair, tuple[HassePath, ...]] = {}
    for alpha in range(poset.size):
        for beta in range(poset.size):
            if poset.less(alpha, beta):
                found = sorted(
                    tuple(index[edge] for edge in zip(nodes, nodes[1:]))
                    for nodes in nx.all_simple_paths(graph, alpha, beta)
                )
                paths[alpha, beta] = tuple(found)
    return paths


def _inconsistency(
    poset: QuotientPoset, group: FiniteGroup, values: Sequence[Element]
) -> tuple[HassePath, HassePath] | None:
    for paths in parallel_paths(poset).values():
        first = group.prod(values[a] for a in paths[0])
        for path in paths[1:]:
            if group.prod(values[a] for a in path) != first:
                return paths[0], path
    return None


def path_consistent(v: ArrowLabeling) -> bool:
    """Equal products along parallel paths."""
    return _inconsistency(v.poset, v.group, v.values) is None


def arrow_labeling(
    poset: QuotientPoset, group: FiniteGroup, values: Mapping[Pair, Element]
) -> ArrowLabeling:
    """Builds and checks a path-consistent labeling of the Hasse arrows."""
    if set(values) != set(poset.hasse):
        raise DomainMismatch("Labeling must cover exactly the Hasse arrows.")
    labeling = ArrowLabeling(poset, group, tuple(values[a] for a in poset.hasse))
    if (witness := _inconsistency(poset, group, labeling.values)) is not None:
        raise InconsistentLabeling(witness)
    return labeling


class CycleTest(NamedTuple):
    """Outcome of `cycle_test`."""

    holds: bool
    cycle: tuple[Pair, ...]
    weights: VertexWeights | None


def _class_weights(
    poset: QuotientPoset, group: FiniteGroup, values: Sequence[Element]
) -> tuple[list[Element], dict[int, int], int | None]:
    """
    Propagates f(child) = ṽ(child -> parent)·f(parent) along a BFS forest of Γᵘ.
    Returns the weights, the parent map and the first arrow f fails to explain.
    """
    arrows = {arrow: k for k, arrow in enumerate(poset.hasse)}
    weights = [0] * poset.size
    parents: dict[int, int] = {}
    for parent, child in bfs_forest(poset.undirected_hasse()):
        parents[child] = parent
        if (child, parent) in arrows:
            step = values[arrows[child, parent]]
        else:
            step = group.inverse(values[arrows[parent, child]])
        weights[child] = group.mul(step, weights[parent])

    for k, (s, t) in enumerate(poset.hasse):
        if group.mul(weights[s], group.inverse(weights[t])) != values[k]:
            return weights, parents, k
    return weights, parents, None


def _ancestors(parents: Mapping[int, int], node: int) -> list[int]:
    chain = [node]
    while chain[-1] in parents:
        chain.append(parents[chain[-1]])
    return chain


def cycle_test(v: ArrowLabeling) -> CycleTest:
    """
    Whether ṽ has trivial product around every cycle of Γᵘ, i.e. v(a) =
    f(s(a))·f(t(a))⁻¹ for some f. On failure, returns the fundamental cycle of
    the first unexplained arrow as a closed walk of steps.
    """
    if (witness := _inconsistency(v.poset, v.group, v.values)) is not None:
        raise InconsistentLabeling(witness)

    weights, parents, failing = _class_weights(v.poset, v.group, v.values)
    if failing is None:
        return CycleTest(True, (), VertexWeights(v.group, tuple(weights)))

    s, t = v.poset.hasse[failing]
    up_from_t, up_from_s = _ancestors(parents, t), _ancestors(parents, s)
    common = next(x for x in up_from_t if x in up_from_s)
    down_to_s = list(reversed(up_from_s[: up_from_s.index(common) + 1]))
    walk = [s, *up_from_t[: up_from_t.index(common) + 1], *down_to_s[1:]]
    return CycleTest(False, tuple(zip(walk, walk[1:])), None)


def arrow_triviality(v: ArrowLabeling) -> bool:
    """Whether v(a) = f(s(a))·f(t(a))⁻¹ for some class weights f."""
    return _class_weights(v.poset, v.group, v.values)[2] is None


def arrow_labeling_from(u: TransitiveLabeling) -> ArrowLabeling:
    """Restricts u to Hasse arrows through class representatives."""
    poset = quotient_order(u.preorder)
    values = tuple(u[poset.classes[a][0], poset.classes[b][0]] for a, b in poset.hasse)
    return ArrowLabeling(poset, u.group, values)


def lift_arrow_labeling(
    preorder: Preorder, v: ArrowLabeling, free: Mapping[int, Element] | None = None
) -> TransitiveLabeling:
    """
    The transitive function u(i,j) = c_i·w(î,ĵ)·c_j⁻¹, where w multiplies v along
    any Hasse path (identity inside a class) and c_i = u(i, min î) are the
    `free` values (identity when absent, always identity on representatives).
    """
    poset, group = v.poset, v.group
    free = free or {}
    representatives = {cls[0] for cls in poset.classes}
    values = [
        0 if i in representatives else free.get(i, 0) for i in range(1, preorder.n + 1)
    ]
    paths = parallel_paths(poset)

    def w(alpha: int, beta: int) -> Element:
        if alpha == beta:
            return 0
        return group.prod(v.values[a] for a in paths[alpha, beta][0])

    raw = {
        (i, j): group.prod(
            (
                values[i - 1],
                w(poset.class_of[i], poset.class_of[j]),
                group.inverse(values[j - 1]),
            )
        )
        for i, j in preorder.pairs
    }
    return TransitiveLabeling(preorder, group, tuple(sorted(raw.items())))


def _labeling_space_size(poset: QuotientPoset, group: FiniteGroup) -> int:
    return int(group.order ** len(poset.hasse))


def consistent_arrow_labelings(
    poset: QuotientPoset, group: FiniteGroup, budget: int | None = None
) -> list[ArrowLabeling]:
    """Every path-consistent v: Γ₁ -> G, in lexicographic order of values."""
    budget = SETTINGS.budgets.labelings if budget is None else budget
    check_budget("arrow labelings", _labeling_space_size(poset, group), budget)
    return [
        ArrowLabeling(poset, group, values)
        for values in product(group.elems, repeat=len(poset.hasse))
        if _inconsistency(poset, group, values) is None
    ]


def enumerate_transitive(
    preorder: Preorder, group: FiniteGroup, budget: int | None = None
) -> Iterator[TransitiveLabeling]:
    """
    Every transitive function ρ -> G, each exactly once: free values
    u(i, min î) for non-representatives times a path-consistent arrow labeling.
    """
    poset = quotient_order(preorder)
    free_elements = [i for cls in poset.classes for i in cls[1:]]
    budget = SETTINGS.budgets.enumeration if budget is None else budget
    check_budget(
        "transitive functions",
        group.order ** (len(free_elements) + len(poset.hasse)),
        budget,
    )
    for v in consistent_arrow_labelings(poset, group, budget):
        for values in product(group.elems, repeat=len(free_elements)):
            yield lift_arrow_labeling(preorder, v, dict(zip(free_elements, values)))


class _ChunkScan(NamedTuple):
    consistent: int
    trivial: int
    first_nontrivial: tuple[Element, ...] | None


def _scan_chunk(
    poset: QuotientPoset, group: FiniteGroup, chunk: list[tuple[Element, ...]]
) -> _ChunkScan:
    consistent = trivial = 0
    first = None
    for values in chunk:
        if _inconsistency(poset, group, values) is not None:
            continue
        consistent += 1
        if _class_weights(poset, group, values)[2] is None:
            trivial += 1
        elif first is None:
            first = values
    return _ChunkScan(consistent, trivial, first)


@dataclass(frozen=True)
class TrivialityReport:
    """Outcome of `all_trivial_for_group`."""

    verdict: Verdict
    labelings: int
    consistent: int
    trivial: int
    counterexample: TransitiveLabeling | None


def all_trivial_for_group(
    preorder: Preorder, group: FiniteGroup, budget: int | None = None, jobs: int = 1
) -> TrivialityReport:
    """
    Whether every transitive function ρ -> G is trivial, by scanning all arrow
    labelings of the Hasse graph. The lexicographically least nontrivial one is
    lifted back to ρ as the counterexample.
    """
    poset = quotient_order(preorder)
    size = _labeling_space_size(poset, group)
    try:
        check_budget(
            "arrow labelings", size, SETTINGS.budgets.labelings if budget is None else budget
        )
    except BudgetExceeded:
        return TrivialityReport(Verdict.UNDECIDED, size, 0, 0, None)

    scans = map_chunks(
        partial(_scan_chunk, poset, group),
        product(group.elems, repeat=len(poset.hasse)),
        jobs=jobs,
    )
    first = next((s.first_nontrivial for s in scans if s.first_nontrivial is not None), None)
    counterexample = (
        None if first is None else lift_arrow_labeling(preorder, ArrowLabeling(poset, group, first))
    )
    return TrivialityReport(
        verdict=Verdict.of(first is None),
        labelings=size,
        consistent=sum(s.consistent for s in scans),
        trivial=sum(s.trivial for s in scans),
        counterexample=counterexample,
    )


@dataclass(frozen=True)
class AbelianReport:
    """
    The quotient of the cycle space of Γᵘ by the parallel-path differences,
    as Z^free_rank ⊕ ⊕ Z/torsion.
    """

    verdict: bool
    cycle_rank: int
    torsion: tuple[int, ...]
    free_rank: int
    group_verdict: bool | None


def cycle_coordinates(poset: QuotientPoset) -> tuple[list[int], IntMatrix]:
    """
    The non-tree arrows (one per fundamental cycle of the BFS forest) and the
    parallel-path differences written in those coordinates.
    """
    forest = {frozenset(edge) for edge in bfs_forest(poset.undirected_hasse())}
    non_tree = [k for k, arrow in enumerate(poset.hasse) if frozenset(arrow) not in forest]
    column = {k: c for c, k in enumerate(non_tree)}

    rows = []
    for paths in parallel_paths(poset).values():
        for path in paths[1:]:
            row = [0] * len(non_tree)
            for arrow in path:
                if arrow in column:
                    row[column[arrow]] += 1
            for arrow in paths[0]:
                if arrow in column:
                    row[column[arrow]] -= 1
            rows.append(row)
    return non_tree, IntMatrix.of(rows, cols=len(non_tree))


def all_trivial_abelian(preorder: Preorder, group: FiniteGroup | None = None) -> AbelianReport:
    """
    Decides whether all transitive functions into every abelian group are
    trivial, and optionally into the given abelian `group`.
    """
    poset = quotient_order(preorder)
    non_tree, matrix = cycle_coordinates(poset)
    form = smith_normal_form(matrix)
    free_rank = len(non_tree) - form.rank
    torsion = form.torsion

    group_verdict = None
    if group is not None and group.abelian:
        group_verdict = hom_triviality(torsion, free_rank, group)

    return AbelianReport(
        verdict=not torsion and free_rank == 0,
        cycle_rank=len(non_tree),
        torsion=torsion,
        free_rank=free_rank,
        group_verdict=group_verdict,
    )


def catalog_evidence(
    preorder: Preorder, catalog: Sequence[str], budget: int | None = None, jobs: int = 1
) -> dict[str, Verdict]:
    """Exhaustive verdicts over a list of group specs. Evidence, not proof."""
    return {
        spec: all_trivial_for_group(preorder, build_group(spec), budget, jobs).verdict
        for spec in catalog
    }
