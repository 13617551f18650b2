"""
Brute-force counterparts of the structural computations, and the property
suites that pit one against the other.
"""
import random
from dataclasses import dataclass
from itertools import permutations, product
from typing import Callable, Iterable, NamedTuple, Sequence

from .automorphisms import (
    AlgebraMap,
    AutoTriple,
    F_map,
    Side,
    approx_equivalent,
    automorphism_summary,
    coelho_decompose,
    coelho_recompose,
    coelho_subgroup,
    enumerate_T,
    in_kernel,
    random_triple,
    shuffle,
    tilde_permutation,
    triple_identity,
    triple_multiply,
)
from .classification import (
    ActionElement,
    GradingTuple,
    act,
    act_aut,
    act_shift,
    act_young,
    action_generators,
    classify_orbits,
    conjugate_young,
    encode,
    end_graded_iso,
    flag_isomorphism,
    induced_end_isomorphism,
    map_is_graded,
    multiply_actions,
    shift_along,
)
from .errors import BudgetExceeded, DomainMismatch
from .field import (
    Dense,
    PrimeField,
    all_matrices,
    dense,
    dense_rows,
    is_invertible,
    prime_field,
    random_struct_matrix,
    random_unit,
    struct_matrix,
)
from .grading import (
    TransitiveLabeling,
    VertexWeights,
    all_trivial_abelian,
    all_trivial_for_group,
    enumerate_transitive,
    triviality_witness,
)
from .groups import Element, FiniteGroup, build_group, hom_triviality
from .lattice import (
    Antichain,
    PosetAutomorphism,
    antichain_join,
    antichain_leq,
    antichain_meet,
    enumerate_antichains,
    lattice_automorphism_decompose,
    lattice_map,
    lower_set,
    poset_automorphisms,
)
from .outcome import Verdict, check_budget
from .poset import Preorder, QuotientPoset, fixture, quotient_order
from .settings import SETTINGS, Budgets

Subspace = frozenset[int]

SUBSPACE_MAX_DIMENSION = 5
CROSS_VALIDATION_MAX_TUPLES = 256


def _span(vectors: Iterable[int]) -> Subspace:
    space = {0}
    for v in vectors:
        space |= {v ^ w for w in space}
    return frozenset(space)


def _unit_image(i: int, j: int, vector: int) -> int:
    """e_ij on a vector of F₂ⁿ stored as a bitmask: coordinate j moves to i."""
    return 1 << (i - 1) if vector >> (j - 1) & 1 else 0


def all_subspaces(n: int) -> list[Subspace]:
    """Every subspace of F₂ⁿ."""
    check_budget("subspace dimension", n, SUBSPACE_MAX_DIMENSION)
    found = {frozenset({0})}
    frontier = list(found)
    while frontier:
        grown = []
        for space in frontier:
            for v in range(1, 1 << n):
                if v not in space:
                    bigger = _span((*space, v))
                    if bigger not in found:
                        found.add(bigger)
                        grown.append(bigger)
        frontier = grown
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def submodule_oracle(preorder: Preorder, field: PrimeField) -> list[Subspace]:
    """Subspaces of F₂ⁿ stable under every e_ij with i ρ j."""
    if field.p != 2:
        raise DomainMismatch("The subspace scan only runs over F_2.")
    return [
        space
        for space in all_subspaces(preorder.n)
        if all(_unit_image(i, j, v) in space for i, j in preorder.pairs for v in space)
    ]


def antichain_subspace(poset: QuotientPoset, value: Antichain) -> Subspace:
    """V_D: spanned by the basis vectors of every class below D."""
    return _span(1 << (i - 1) for alpha in lower_set(poset, value) for i in poset.classes[alpha])


def brute_force_lattice_automorphisms(
    poset: QuotientPoset, budget: int | None = None
) -> list[dict[Antichain, Antichain]]:
    """Every permutation of the antichains preserving ≤ in both directions."""
    antichains = enumerate_antichains(poset)
    budget = SETTINGS.budgets.enumeration if budget is None else budget
    size = 1
    for k in range(2, len(antichains) + 1):
        size *= k
    check_budget("antichain permutations", size, budget)

    leq = {(a, b): antichain_leq(poset, a, b) for a in antichains for b in antichains}
    found = []
    for images in permutations(antichains):
        f = dict(zip(antichains, images))
        if all(leq[a, b] == leq[f[a], f[b]] for a in antichains for b in antichains):
            found.append(f)
    return found


def count_units_exhaustively(preorder: Preorder, field: PrimeField) -> int:
    """|U(M(ρ, F_p))| by testing every matrix."""
    check_budget(
        "matrices", field.p ** len(preorder.pairs), SETTINGS.budgets.enumeration
    )
    return sum(1 for x in all_matrices(preorder, field) if is_invertible(x))


def brute_force_algebra_automorphisms(
    preorder: Preorder, field: PrimeField, budget: int | None = None
) -> list[AlgebraMap]:
    """
    Every bijective linear map that multiplies matrix units like matrix units,
    found by trying all images of the basis.
    """
    pairs = preorder.pairs
    budget = SETTINGS.budgets.enumeration if budget is None else budget
    check_budget("basis images", field.p ** (len(pairs) ** 2), budget)

    elements = list(all_matrices(preorder, field))
    zero = struct_matrix(preorder, field, {})
    found = []
    for images in product(elements, repeat=len(pairs)):
        mapping = dict(zip(pairs, images))
        if any(
            mapping[i, j] * mapping[k, r] != (mapping[i, r] if j == k else zero)
            for i, j in pairs
            for k, r in pairs
        ):
            continue
        coordinates = dense(field, [[image[pair] for pair in pairs] for image in images])
        if int(coordinates.det()) % field.p:
            found.append(AlgebraMap(preorder, field, tuple(zip(pairs, images))))
    return found


def hom_count_brute_force(factors: Sequence[int], rank: int, group: FiniteGroup) -> int:
    """
    |Hom(Z^rank ⊕ ⊕ Z/d, G)| for abelian G: tuples whose torsion entries
    satisfy x^d = e. A zero factor stands for a free summand.
    """
    orders = [0] * rank + list(factors)
    return sum(
        1
        for images in product(group.elems, repeat=len(orders))
        if all(group.power(x, d) == group.identity for x, d in zip(images, orders))
    )


def exhaustive_witness_search(
    u: TransitiveLabeling, budget: int | None = None
) -> VertexWeights | None:
    """The lexicographically least weights g with u(i,j) = g_i·g_j⁻¹, if any."""
    group, n = u.group, u.preorder.n
    check_budget(
        "vertex weights", group.order**n, SETTINGS.budgets.enumeration if budget is None else budget
    )
    for weights in product(group.elems, repeat=n):
        if all(
            group.mul(weights[i - 1], group.inverse(weights[j - 1])) == value
            for (i, j), value in u.values
        ):
            return VertexWeights(group, weights)
    return None


class CrossValidation(NamedTuple):
    """Pairs compared, and those where the orbit and the graded-iso test disagree."""

    compared: int
    disagreements: tuple[tuple[tuple[Element, ...], tuple[Element, ...]], ...]


def cross_validate(
    poset: QuotientPoset, group: FiniteGroup, budgets: Budgets = SETTINGS.budgets
) -> CrossValidation:
    """
    Compares orbit membership with `end_graded_iso` on every pair of tuples,
    and checks each isomorphism found yields a degree-preserving map.
    """
    n = poset.preorder.n
    check_budget("cross-validated tuples", group.order**n, CROSS_VALIDATION_MAX_TUPLES)
    check_budget("grading tuples", group.order**n, budgets.orbits)
    report = classify_orbits(poset, group, budgets.orbits)
    auts = poset_automorphisms(poset, True, budgets.enumeration)
    check_budget(
        "isomorphism search", len(auts) * group.order**poset.num_components, budgets.search
    )
    field = PrimeField(2)

    tuples = list(product(group.elems, repeat=n))
    compared = 0
    disagreements = []
    for k, lhs in enumerate(tuples):
        for rhs in tuples[k:]:
            compared += 1
            h, target = GradingTuple(group, lhs), GradingTuple(group, rhs)
            result = end_graded_iso(poset, h, target, auts, budgets.search)
            same = report.orbit_of[encode(group, lhs)] == report.orbit_of[encode(group, rhs)]
            graded = True
            if result.witness is not None:
                matching = flag_isomorphism(
                    poset, h, target, result.witness.aut, result.witness.shifts
                )
                graded = matching is not None and map_is_graded(
                    induced_end_isomorphism(poset, field, matching), h, target
                )
            if same != (result.verdict is Verdict.TRUE) or not graded:
                disagreements.append((lhs, rhs))
    return CrossValidation(compared, tuple(disagreements))


@dataclass(frozen=True)
class SuiteResult:
    """`passed` is None when the suite was skipped for budget reasons."""

    name: str
    passed: bool | None
    detail: str


@dataclass(frozen=True)
class SuiteContext:
    """Sampling parameters shared by the suites."""

    seed: int = SETTINGS.seed
    samples: int = SETTINGS.samples
    identity_cases: int = SETTINGS.identity_cases
    budgets: Budgets = SETTINGS.budgets
    catalog: tuple[str, ...] = SETTINGS.catalog

    def rng(self) -> random.Random:
        """A fresh generator, so suites do not depend on each other's draws."""
        return random.Random(self.seed)


def _result(name: str, failures: list[str], summary: str) -> SuiteResult:
    if failures:
        return SuiteResult(name, False, "; ".join(failures))
    return SuiteResult(name, True, summary)


def submodule_suite(context: SuiteContext) -> SuiteResult:
    """Stable subspaces over F₂ are exactly the V_D, with meet and join as ∩ and +."""
    _ = context
    field = PrimeField(2)
    failures = []
    counts = []
    for name in ("VEE", "UT2", "FULL2", "EX56"):
        preorder = fixture(name)
        poset = quotient_order(preorder)
        antichains = enumerate_antichains(poset)
        spaces = {d: antichain_subspace(poset, d) for d in antichains}
        stable = submodule_oracle(preorder, field)
        counts.append(f"{name}={len(stable)}")
        if set(stable) != set(spaces.values()) or len(stable) != len(antichains):
            failures.append(f"{name}: {len(stable)} stable subspaces, {len(antichains)} antichains")
        for d in antichains:
            for e in antichains:
                if spaces[antichain_meet(poset, d, e)] != spaces[d] & spaces[e]:
                    failures.append(f"{name}: meet of {d.members} and {e.members}")
                if spaces[antichain_join(poset, d, e)] != _span(spaces[d] | spaces[e]):
                    failures.append(f"{name}: join of {d.members} and {e.members}")
    return _result("submodules", failures, ", ".join(counts))


def lattice_suite(context: SuiteContext) -> SuiteResult:
    """Lattice automorphisms are exactly the f_g."""
    _ = context
    failures = []
    counts = []
    for name in ("EX56", "VEE", "UT2", "CLS3"):
        poset = quotient_order(fixture(name))
        found = brute_force_lattice_automorphisms(poset)
        expected = poset_automorphisms(poset, multiplicity_preserving=False)
        counts.append(f"{name}={len(found)}")
        if len(found) != len(expected):
            failures.append(f"{name}: {len(found)} lattice automorphisms, |Aut(C)| = {len(expected)}")
        for f in found:
            if lattice_map(poset, lattice_automorphism_decompose(poset, f)) != f:
                failures.append(f"{name}: decomposition does not reproduce a lattice automorphism")
    return _result("lattice-automorphisms", failures, ", ".join(counts))


def morphism_suite(context: SuiteContext) -> SuiteResult:
    """F(t₁·t₂) = F(t₁)∘F(t₂) on random pairs; the kernel of F is D."""
    rng = context.rng()
    field = prime_field(3)
    failures = []
    for name in ("UT2", "VEE", "EX56"):
        preorder = fixture(name)
        poset = quotient_order(preorder)
        auts = poset_automorphisms(poset, multiplicity_preserving=True)
        scalars = enumerate_T(preorder, field)
        for _ in range(context.samples):
            lhs = random_triple(rng, preorder, field, auts, scalars)
            rhs = random_triple(rng, preorder, field, auts, scalars)
            if F_map(triple_multiply(lhs, rhs)) != F_map(lhs).compose(F_map(rhs)):
                failures.append(f"{name}: F is not multiplicative on a sampled pair")
                break

    preorder = fixture("UT2")
    poset = quotient_order(preorder)
    one = triple_identity(preorder, field)
    units = [x for x in all_matrices(preorder, field) if is_invertible(x)]
    triples = 0
    for matrix, g, a in product(
        units, poset_automorphisms(poset, multiplicity_preserving=True), enumerate_T(preorder, field)
    ):
        t = AutoTriple(matrix, g, a)
        triples += 1
        trivial = F_map(t).is_identity
        if trivial != in_kernel(t) or trivial != approx_equivalent(t, one).equivalent:
            failures.append("UT2: kernel of F differs from D")
            break
    return _result(
        "morphism", failures, f"{context.samples} pairs per fixture, {triples} kernel triples"
    )


def _every_transitive_trivial(preorder: Preorder, group: FiniteGroup) -> bool:
    return all(triviality_witness(u) is not None for u in enumerate_transitive(preorder, group))


def twopaths_suite(context: SuiteContext) -> SuiteResult:
    """Two parallel paths: every transitive function is trivial."""
    _ = context
    preorder = fixture("TWOPATHS")
    failures = [
        f"nontrivial transitive function into {spec}"
        for spec in ("Z2", "Z3", "S3")
        if not _every_transitive_trivial(preorder, build_group(spec))
    ]
    if not all_trivial_abelian(preorder).verdict:
        failures.append("abelian verdict is false")
    return _result("two-paths", failures, "Z2, Z3, S3 exhaustive; abelian verdict true")


def square_suite(context: SuiteContext) -> SuiteResult:
    """A square without parallel paths carries nontrivial Z₂ gradings."""
    _ = context
    preorder = fixture("EX56")
    report = all_trivial_for_group(preorder, build_group("Z2"))
    abelian = all_trivial_abelian(preorder)
    failures = []
    if (report.consistent, report.trivial) != (16, 8):
        failures.append(f"{report.consistent} consistent, {report.trivial} trivial")
    if report.verdict is not Verdict.FALSE:
        failures.append(f"Z2 verdict {report.verdict.value}")
    if abelian.verdict or abelian.free_rank + len(abelian.torsion) == 0:
        failures.append("abelian quotient is trivial")
    return _result(
        "square", failures, f"{report.consistent} consistent, {report.trivial} trivial"
    )


def witness_suite(context: SuiteContext) -> SuiteResult:
    """Forest propagation finds a witness exactly when exhaustive search does."""
    failures = []
    checked = skipped = 0
    for name in ("UT2", "FULL2", "CLS3", "VEE", "EX56", "TWOPATHS"):
        preorder = fixture(name)
        for spec in context.catalog:
            group = build_group(spec)
            try:
                labelings = list(
                    enumerate_transitive(preorder, group, context.budgets.enumeration)
                )
                check_budget(
                    "witness searches",
                    len(labelings) * group.order**preorder.n,
                    context.budgets.enumeration,
                )
                for u in labelings:
                    if (triviality_witness(u) is None) != (exhaustive_witness_search(u) is None):
                        failures.append(f"{name}/{spec}: witness search disagrees")
                        break
                checked += 1
                if group.abelian:
                    abelian = all_trivial_abelian(preorder, group)
                    verdict = all_trivial_for_group(
                        preorder, group, context.budgets.labelings
                    ).verdict
                    if Verdict.of(bool(abelian.group_verdict)) is not verdict:
                        failures.append(f"{name}/{spec}: abelian decision disagrees")
                    factors = [*abelian.torsion]
                    if (hom_count_brute_force(factors, abelian.free_rank, group) == 1) != (
                        hom_triviality(factors, abelian.free_rank, group)
                    ):
                        failures.append(f"{name}/{spec}: homomorphism count disagrees")
            except BudgetExceeded:
                skipped += 1
    return _result("witness-search", failures, f"{checked} cases, {skipped} over budget")


def classification_suite(context: SuiteContext) -> SuiteResult:
    """Orbits coincide with isomorphism classes of induced gradings."""
    budgets = context.budgets
    failures = []
    counts = []
    for name, spec in (("FULL2", "Z2"), ("UT2", "Z2"), ("UT2", "Z3"), ("VEE", "Z2")):
        poset = quotient_order(fixture(name))
        group = build_group(spec)
        result = cross_validate(poset, group, budgets)
        orbits = classify_orbits(poset, group, budgets.orbits).count
        counts.append(f"{name}/{spec}: {orbits} orbits")
        if result.disagreements:
            failures.append(f"{name}/{spec}: {len(result.disagreements)} disagreeing pairs")

    poset = quotient_order(fixture("FULL2"))
    for spec in ("Z2", "Z3"):
        group = build_group(spec)
        reduced = _biaction_orbits(poset.preorder.n, group)
        if reduced != classify_orbits(poset, group, budgets.orbits).count:
            failures.append(f"FULL2/{spec}: reduced biaction gives {reduced} orbits")
    return _result("classification", failures, "; ".join(counts))


def _biaction_orbits(n: int, group: FiniteGroup) -> int:
    """Orbits of G^n under coordinate permutations and right translation."""
    seen: set[tuple[Element, ...]] = set()
    orbits = 0
    for degrees in product(group.elems, repeat=n):
        if degrees in seen:
            continue
        orbits += 1
        for sigma in group.elems:
            shifted = tuple(group.mul(h, sigma) for h in degrees)
            seen.update(permutations(shifted))
    return orbits


def algebra_automorphism_suite(context: SuiteContext) -> SuiteResult:
    """Exhaustive algebra automorphisms of small algebras against the group order."""
    _ = context
    field = PrimeField(2)
    failures = []
    counts = []
    for name in ("UT2",):
        preorder = fixture(name)
        found = len(brute_force_algebra_automorphisms(preorder, field))
        total = automorphism_summary(preorder, field).total
        counts.append(f"{name}={found}")
        if found != total:
            failures.append(f"{name}: {found} automorphisms, formula gives {total}")
    for name, p in (("UT2", 3), ("FULL2", 2), ("CLS3", 2)):
        preorder = fixture(name)
        field = PrimeField(p)
        exhaustive = count_units_exhaustively(preorder, field)
        formula = automorphism_summary(preorder, field).units
        if exhaustive != formula:
            failures.append(f"{name}/F{p}: {exhaustive} units, formula gives {formula}")
    return _result("algebra-automorphisms", failures, ", ".join(counts))


def _random_young(rng: random.Random, poset: QuotientPoset) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(rng.sample(cls, len(cls))) for cls in poset.classes)


def _random_action(
    rng: random.Random,
    poset: QuotientPoset,
    group: FiniteGroup,
    auts: Sequence[PosetAutomorphism],
) -> ActionElement:
    return ActionElement(
        _random_young(rng, poset),
        rng.choice(auts),
        tuple(rng.choice(group.elems) for _ in range(poset.num_components)),
    )


def _identity_failures(
    poset: QuotientPoset, h: GradingTuple, a: ActionElement, b: ActionElement
) -> list[str]:
    group = h.group
    failures = []
    if act(poset, act(poset, h, a), b) != act(poset, h, multiply_actions(poset, group, a, b)):
        failures.append("right action law")
    g, sigma, psi = a.aut, a.shifts, a.young
    if act_aut(poset, act_shift(poset, h, sigma), g) != act_shift(
        poset, act_aut(poset, h, g), shift_along(poset, sigma, g)
    ):
        failures.append("shift then automorphism")
    if act_aut(poset, act_young(poset, h, psi), g) != act_young(
        poset, act_aut(poset, h, g), conjugate_young(poset, g.inverse(), psi)
    ):
        failures.append("permutation then automorphism")
    if act_shift(poset, act_young(poset, h, psi), sigma) != act_young(
        poset, act_shift(poset, h, sigma), psi
    ):
        failures.append("permutation then shift")
    return failures


def _same(field: PrimeField, lhs: Dense, rhs: Dense) -> bool:
    return dense_rows(field, lhs) == dense_rows(field, rhs)


def _shuffle_failures(
    poset: QuotientPoset,
    field: PrimeField,
    rng: random.Random,
    auts: Sequence[PosetAutomorphism],
) -> list[str]:
    preorder = poset.preorder
    g, h = rng.choice(auts), rng.choice(auts)
    a = random_unit(rng, preorder, field).to_dense()
    b = random_struct_matrix(rng, preorder, field).to_dense()
    tg, th = tilde_permutation(poset, g), tilde_permutation(poset, h)
    tgh = tilde_permutation(poset, g.compose(h))
    tg_inv = tilde_permutation(poset, g.inverse())
    right, left = Side.RIGHT, Side.LEFT

    failures = []
    if not _same(field, shuffle(shuffle(a, tg, right), th, right), shuffle(a, tgh, right)):
        failures.append("(A^g)^h = A^{gh}")
    if not _same(field, shuffle(shuffle(a, tg, left), th, left), shuffle(a, tgh, left)):
        failures.append("^h(^gA) = ^{gh}A")
    if not _same(field, shuffle(shuffle(a, tg, left), th, right), shuffle(shuffle(a, th, right), tg, left)):
        failures.append("(^gA)^h = ^g(A^h)")
    if not _same(field, shuffle(a * b, tg, right), a * shuffle(b, tg, right)):
        failures.append("(AB)^g = A·B^g")
    if not _same(field, shuffle(a * b, tg, left), shuffle(a, tg, left) * b):
        failures.append("^g(AB) = (^gA)·B")
    if not _same(field, shuffle(a, tg, right) * b, a * shuffle(b, tg_inv, left)):
        failures.append("(A^g)·B = A·(^{g⁻¹}B)")
    if not _same(field, shuffle(a, tg, right) * shuffle(a.inv(), tg, left), a * a.inv()):
        failures.append("(A^g)⁻¹ = ^g(A⁻¹)")
    return failures


def identity_suite(context: SuiteContext) -> SuiteResult:
    """
    Action and shuffle identities: exhaustive over generators on small cases,
    random elsewhere.
    """
    rng = context.rng()
    failures: set[str] = set()
    group = build_group("Z2")
    for name in ("UT2", "EX56"):
        poset = quotient_order(fixture(name))
        auts = poset_automorphisms(poset, multiplicity_preserving=True)
        generators = action_generators(poset, group, auts)
        for degrees in product(group.elems, repeat=poset.preorder.n):
            h = GradingTuple(group, degrees)
            for a, b in product(generators, repeat=2):
                failures.update(f"{name}: {f}" for f in _identity_failures(poset, h, a, b))

    field = prime_field(3)
    cases = 0
    for name, spec in (("CLS3", "S3"), ("VEE", "Z3"), ("EX56", "Z2xZ2")):
        poset = quotient_order(fixture(name))
        group = build_group(spec)
        auts = poset_automorphisms(poset, multiplicity_preserving=True)
        for _ in range(context.identity_cases // 3):
            cases += 1
            h = GradingTuple(group, tuple(rng.choice(group.elems) for _ in range(poset.preorder.n)))
            a, b = _random_action(rng, poset, group, auts), _random_action(rng, poset, group, auts)
            failures.update(f"{name}: {f}" for f in _identity_failures(poset, h, a, b))
            failures.update(f"{name}: {f}" for f in _shuffle_failures(poset, field, rng, auts))
    return _result("identities", sorted(failures), f"{cases} random cases")


def coelho_suite(context: SuiteContext) -> SuiteResult:
    """Every element of T splits into a trivial part and an element of 𝒢."""
    _ = context
    preorder = fixture("EX56")
    field = prime_field(3)
    elements = enumerate_T(preorder, field)
    failures = [
        f"round trip fails on {a.values}"
        for a in elements
        if coelho_recompose(coelho_decompose(preorder, field, a)) != a
    ]
    subgroup = coelho_subgroup(preorder, field)
    if len(subgroup) != 2:
        failures.append(f"|𝒢| = {len(subgroup)}")
    summary = automorphism_summary(preorder, field)
    if summary.total != summary.coelho_total:
        failures.append(f"|Aut| = {summary.total} but the Coelho count is {summary.coelho_total}")
    return _result("coelho", failures, f"|T| = {len(elements)}, |𝒢| = {len(subgroup)}")


Suite = Callable[[SuiteContext], SuiteResult]

SUITES: dict[str, Suite] = {
    "submodules": submodule_suite,
    "lattice-automorphisms": lattice_suite,
    "morphism": morphism_suite,
    "two-paths": twopaths_suite,
    "square": square_suite,
    "witness-search": witness_suite,
    "classification": classification_suite,
    "algebra-automorphisms": algebra_automorphism_suite,
    "identities": identity_suite,
    "coelho": coelho_suite,
}


def run_suite(name: str, context: SuiteContext) -> SuiteResult:
    """Runs one suite, turning an exhausted budget into a skip."""
    try:
        return SUITES[name](context)
    except BudgetExceeded as error:
        return SuiteResult(name, None, str(error))
