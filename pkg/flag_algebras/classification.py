"""
G-graded flags as degree tuples in G^n and their classification up to
isomorphism of the induced gradings.
"""
from collections import Counter
from dataclasses import dataclass
from functools import partial
from itertools import product
from typing import Iterable, Mapping, NamedTuple, Sequence

from networkx.utils import UnionFind

from .automorphisms import AlgebraMap, Side, invert_tilde, tilde_permutation
from .errors import BudgetExceeded, InvalidComponent, ShapeMismatch
from .field import PrimeField, StructMatrix, matrix_unit, struct_matrix
from .grading import TransitiveLabeling
from .groups import Element, FiniteGroup
from .lattice import PosetAutomorphism, poset_automorphisms
from .outcome import Verdict, check_budget
from .poset import QuotientPoset
from .settings import SETTINGS
from .workers import map_chunks


@dataclass(frozen=True)
class GradingTuple:
    """(h₁, …, hₙ): h_i is the degree of the i-th basis vector of the flag."""

    group: FiniteGroup
    degrees: tuple[Element, ...]

    def __getitem__(self, i: int) -> Element:
        """Degree of ground element i (1-based)."""
        return self.degrees[i - 1]

    @property
    def label(self) -> str:
        """Human-readable form, e.g. `(e,g)`."""
        return self.group.label_tuple(self.degrees)


def grading_tuple(
    poset: QuotientPoset, group: FiniteGroup, degrees: Sequence[Element]
) -> GradingTuple:
    """Checks the length and the elements of a degree tuple."""
    if len(degrees) != poset.preorder.n:
        raise ShapeMismatch(f"Expected {poset.preorder.n} degrees, got {len(degrees)}.")
    if any(h not in group.elems for h in degrees):
        raise ShapeMismatch(f"Degrees {tuple(degrees)} are not all elements of {group.name}.")
    return GradingTuple(group, tuple(degrees))


@dataclass(frozen=True)
class ActionElement:
    """
    (ψ, g, σ) in ∏ S(α) ⋊ (Aut₀(C) ⋉ G^q). `young[α][k]` is the image under
    ψ_α of the k-th smallest element of α.
    """

    young: tuple[tuple[int, ...], ...]
    aut: PosetAutomorphism
    shifts: tuple[Element, ...]


def grading_from_tuple(poset: QuotientPoset, h: GradingTuple) -> TransitiveLabeling:
    """deg(e_ij) = h_i·h_j⁻¹."""
    group = h.group
    return TransitiveLabeling(
        poset.preorder,
        group,
        tuple(
            ((i, j), group.mul(h[i], group.inverse(h[j])))
            for i, j in poset.preorder.pairs
        ),
    )


def graded_components(x: StructMatrix, h: GradingTuple) -> dict[Element, StructMatrix]:
    """The nonzero homogeneous components of x, keyed by degree."""
    group = h.group
    parts: dict[Element, dict[tuple[int, int], int]] = {}
    for (i, j), value in x.entries:
        degree = group.mul(h[i], group.inverse(h[j]))
        parts.setdefault(degree, {})[i, j] = value
    return {
        degree: struct_matrix(x.preorder, x.field, coeffs)
        for degree, coeffs in sorted(parts.items())
    }


def map_is_graded(phi: AlgebraMap, h: GradingTuple, target: GradingTuple) -> bool:
    """Whether φ sends each e_ij to a homogeneous element of the same degree."""
    group = h.group
    for (i, j), image in phi.images:
        degree = group.mul(h[i], group.inverse(h[j]))
        for (s, r), _ in image.entries:
            if group.mul(target[s], group.inverse(target[r])) != degree:
                return False
    return True


def suspend(
    poset: QuotientPoset,
    h: GradingTuple,
    t: int,
    sigma: Element,
    side: Side = Side.RIGHT,
) -> GradingTuple:
    """
    Suspension of the t-th component: degrees become h_i·σ⁻¹ (right) or σ⁻¹·h_i
    (left) there, and stay untouched elsewhere.
    """
    if not 0 <= t < poset.num_components:
        raise InvalidComponent(f"Component {t} does not exist (there are {poset.num_components}).")
    group = h.group
    shift = group.inverse(sigma)
    degrees = list(h.degrees)
    for alpha in poset.component(t):
        for i in poset.classes[alpha]:
            if side is Side.RIGHT:
                degrees[i - 1] = group.mul(degrees[i - 1], shift)
            else:
                degrees[i - 1] = group.mul(shift, degrees[i - 1])
    return GradingTuple(group, tuple(degrees))


def young_map(poset: QuotientPoset, young: Sequence[Sequence[int]]) -> dict[int, int]:
    """ψ as a permutation of {1..n}."""
    return {i: j for cls, images in zip(poset.classes, young) for i, j in zip(cls, images)}


def young_from_map(poset: QuotientPoset, psi: Mapping[int, int]) -> tuple[tuple[int, ...], ...]:
    """Inverse of `young_map`."""
    return tuple(tuple(psi[i] for i in cls) for cls in poset.classes)


def component_permutation(poset: QuotientPoset, g: PosetAutomorphism) -> tuple[int, ...]:
    """τ with g(C^t) = C^{τ(t)}."""
    tau = [0] * poset.num_components
    for alpha in range(poset.size):
        tau[poset.comp_of[alpha]] = poset.comp_of[g(alpha)]
    return tuple(tau)


def identity_action(poset: QuotientPoset, group: FiniteGroup) -> ActionElement:
    """(id, id, e)."""
    _ = group
    return ActionElement(
        poset.classes,
        PosetAutomorphism.identity(poset.size),
        (0,) * poset.num_components,
    )


def act_young(poset: QuotientPoset, h: GradingTuple, young: Sequence[Sequence[int]]) -> GradingTuple:
    """h′_i = h_{ψ(i)}."""
    psi = young_map(poset, young)
    return GradingTuple(h.group, tuple(h[psi[i]] for i in range(1, poset.preorder.n + 1)))


def act_aut(poset: QuotientPoset, h: GradingTuple, g: PosetAutomorphism) -> GradingTuple:
    """h′_i = h_{g̃(i)}."""
    tilde = tilde_permutation(poset, g)
    return GradingTuple(h.group, tuple(h[tilde[i]] for i in range(1, poset.preorder.n + 1)))


def act_shift(poset: QuotientPoset, h: GradingTuple, shifts: Sequence[Element]) -> GradingTuple:
    """h′_i = h_i·σ_p where î lies in the p-th component."""
    group = h.group
    return GradingTuple(
        group,
        tuple(
            group.mul(h[i], shifts[poset.comp_of[poset.class_of[i]]])
            for i in range(1, poset.preorder.n + 1)
        ),
    )


def conjugate_young(
    poset: QuotientPoset, g: PosetAutomorphism, young: Sequence[Sequence[int]]
) -> tuple[tuple[int, ...], ...]:
    """g→ψ: i ↦ g̃(ψ(g̃⁻¹(i)))."""
    tilde = tilde_permutation(poset, g)
    back = invert_tilde(tilde)
    psi = young_map(poset, young)
    return young_from_map(poset, {i: tilde[psi[back[i]]] for i in psi})


def shift_along(
    poset: QuotientPoset, shifts: Sequence[Element], g: PosetAutomorphism
) -> tuple[Element, ...]:
    """σ←g: the t-th entry is σ_{τ(t)}."""
    tau = component_permutation(poset, g)
    return tuple(shifts[tau[t]] for t in range(poset.num_components))


def act(poset: QuotientPoset, h: GradingTuple, a: ActionElement) -> GradingTuple:
    """(((h) ← ψ) ← g) ← σ."""
    return act_shift(poset, act_aut(poset, act_young(poset, h, a.young), a.aut), a.shifts)


def multiply_actions(
    poset: QuotientPoset, group: FiniteGroup, lhs: ActionElement, rhs: ActionElement
) -> ActionElement:
    """
    (ψ₁, g₁, σ₁)·(ψ₂, g₂, σ₂) = (ψ₁∘(g₁→ψ₂), g₁∘g₂, (σ₁←g₂)·σ₂), so that
    acting by the product equals acting by lhs and then by rhs.
    """
    psi1 = young_map(poset, lhs.young)
    psi2 = young_map(poset, conjugate_young(poset, lhs.aut, rhs.young))
    psi = {i: psi1[psi2[i]] for i in psi1}
    moved = shift_along(poset, lhs.shifts, rhs.aut)
    shifts = tuple(group.mul(s, t) for s, t in zip(moved, rhs.shifts))
    return ActionElement(young_from_map(poset, psi), lhs.aut.compose(rhs.aut), shifts)


def action_generators(
    poset: QuotientPoset, group: FiniteGroup, auts: Sequence[PosetAutomorphism]
) -> list[ActionElement]:
    """
    Adjacent transpositions inside each class, every non-identity element of
    Aut₀, and every single-component shift.
    """
    identity = identity_action(poset, group)
    generators = []
    for alpha, cls in enumerate(poset.classes):
        for k in range(len(cls) - 1):
            swapped = list(cls)
            swapped[k], swapped[k + 1] = swapped[k + 1], swapped[k]
            young = list(identity.young)
            young[alpha] = tuple(swapped)
            generators.append(ActionElement(tuple(young), identity.aut, identity.shifts))
    for g in auts:
        if not g.is_identity:
            generators.append(ActionElement(identity.young, g, identity.shifts))
    for t in range(poset.num_components):
        for sigma in group.elems:
            if sigma != 0:
                shifts = list(identity.shifts)
                shifts[t] = sigma
                generators.append(ActionElement(identity.young, identity.aut, tuple(shifts)))
    return generators


def graded_flag_isomorphic(
    poset: QuotientPoset,
    h: GradingTuple,
    target: GradingTuple,
    g: PosetAutomorphism,
    shift: Sequence[Element] | None = None,
) -> bool:
    """
    Whether, for every class α, the degrees h_i·σ_t⁻¹ (i ∈ α, t the component of
    α) are those of `target` on g(α), counted with multiplicity.
    """
    return flag_isomorphism(poset, h, target, g, shift) is not None


def flag_isomorphism(
    poset: QuotientPoset,
    h: GradingTuple,
    target: GradingTuple,
    g: PosetAutomorphism,
    shift: Sequence[Element] | None = None,
) -> dict[int, int] | None:
    """
    A permutation π of {1..n} sending each α onto g(α) and preserving the
    (shifted) degrees, if one exists.
    """
    group = h.group
    shift = shift or (0,) * poset.num_components
    matching: dict[int, int] = {}
    for alpha, cls in enumerate(poset.classes):
        inverse_shift = group.inverse(shift[poset.comp_of[alpha]])
        shifted = {i: group.mul(h[i], inverse_shift) for i in cls}
        image = poset.classes[g(alpha)]
        if len(image) != len(cls) or Counter(shifted.values()) != Counter(target[j] for j in image):
            return None
        sources = sorted(cls, key=lambda i: (shifted[i], i))
        targets = sorted(image, key=lambda j: (target[j], j))
        matching.update(zip(sources, targets))
    return matching


def induced_end_isomorphism(
    poset: QuotientPoset, field: PrimeField, matching: Mapping[int, int]
) -> AlgebraMap:
    """Conjugation by the permutation matrix of π: e_ij ↦ e_{π(i)π(j)}."""
    preorder = poset.preorder
    return AlgebraMap(
        preorder,
        field,
        tuple(
            ((i, j), matrix_unit(preorder, field, matching[i], matching[j]))
            for i, j in preorder.pairs
        ),
    )


class IsoWitness(NamedTuple):
    """A multiplicity-preserving automorphism, per-component shifts and τ."""

    aut: PosetAutomorphism
    shifts: tuple[Element, ...]
    tau: tuple[int, ...]


class IsoResult(NamedTuple):
    """Outcome of `end_graded_iso`."""

    verdict: Verdict
    witness: IsoWitness | None


def end_graded_iso(
    poset: QuotientPoset,
    h: GradingTuple,
    target: GradingTuple,
    auts: Sequence[PosetAutomorphism] | None = None,
    budget: int | None = None,
) -> IsoResult:
    """
    Whether the END gradings of h and target are isomorphic: searches Aut₀ and
    all shift tuples in G^q.
    """
    group = h.group
    if auts is None:
        auts = poset_automorphisms(poset, multiplicity_preserving=True)
    size = len(auts) * group.order**poset.num_components
    try:
        check_budget("isomorphism search", size, SETTINGS.budgets.search if budget is None else budget)
    except BudgetExceeded:
        return IsoResult(Verdict.UNDECIDED, None)

    for g in auts:
        for shifts in product(group.elems, repeat=poset.num_components):
            if graded_flag_isomorphic(poset, h, target, g, shifts):
                return IsoResult(
                    Verdict.TRUE, IsoWitness(g, tuple(shifts), component_permutation(poset, g))
                )
    return IsoResult(Verdict.FALSE, None)


def encode(group: FiniteGroup, degrees: Sequence[Element]) -> int:
    """Position of a tuple in the lexicographic order of G^n."""
    index = 0
    for h in degrees:
        index = index * group.order + h
    return index


def decode(group: FiniteGroup, n: int, index: int) -> tuple[Element, ...]:
    """Inverse of `encode`."""
    degrees = []
    for _ in range(n):
        index, h = divmod(index, group.order)
        degrees.append(h)
    return tuple(reversed(degrees))


@dataclass(frozen=True)
class Orbit:
    """An orbit of G^n, by its lexicographically least member."""

    representative: tuple[Element, ...]
    size: int


@dataclass(frozen=True)
class OrbitReport:
    """Outcome of `classify_orbits`; `orbit_of` indexes tuples by `encode`."""

    verdict: Verdict
    orbits: tuple[Orbit, ...]
    orbit_of: tuple[int, ...]

    @property
    def count(self) -> int:
        """Number of orbits."""
        return len(self.orbits)


def _generator_images(
    poset: QuotientPoset,
    group: FiniteGroup,
    generators: Sequence[ActionElement],
    chunk: list[tuple[Element, ...]],
) -> list[tuple[int, list[int]]]:
    return [
        (
            encode(group, degrees),
            [encode(group, act(poset, GradingTuple(group, degrees), a).degrees) for a in generators],
        )
        for degrees in chunk
    ]


def classify_orbits(
    poset: QuotientPoset,
    group: FiniteGroup,
    budget: int | None = None,
    jobs: int = 1,
) -> OrbitReport:
    """
    Orbits of G^n under ∏ S(α) ⋊ (Aut₀(C) ⋉ G^q): every tuple is joined to its
    images under the generators.
    """
    n = poset.preorder.n
    size = group.order**n
    try:
        check_budget("grading tuples", size, SETTINGS.budgets.orbits if budget is None else budget)
    except BudgetExceeded:
        return OrbitReport(Verdict.UNDECIDED, (), ())

    auts = poset_automorphisms(poset, multiplicity_preserving=True)
    generators = action_generators(poset, group, auts)
    batches = map_chunks(
        partial(_generator_images, poset, group, generators),
        product(group.elems, repeat=n),
        jobs=jobs,
    )

    forest = UnionFind(range(size))
    for batch in batches:
        for index, images in batch:
            for image in images:
                forest.union(index, image)

    members: dict[int, list[int]] = {}
    for index in range(size):
        members.setdefault(forest[index], []).append(index)
    ordered = sorted(members.values(), key=min)

    orbit_of = [0] * size
    for number, orbit in enumerate(ordered):
        for index in orbit:
            orbit_of[index] = number

    return OrbitReport(
        Verdict.TRUE,
        tuple(Orbit(decode(group, n, min(orbit)), len(orbit)) for orbit in ordered),
        tuple(orbit_of),
    )


def all_tuples(poset: QuotientPoset, group: FiniteGroup) -> Iterable[GradingTuple]:
    """Every element of G^n, in lexicographic order."""
    for degrees in product(group.elems, repeat=poset.preorder.n):
        yield GradingTuple(group, degrees)
