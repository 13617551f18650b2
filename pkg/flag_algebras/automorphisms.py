"""
Automorphisms of M(ρ, F_p): the triples (A, g, a) of units, multiplicity
preserving poset automorphisms and scalar transitive functions, and the map F
sending a triple to an algebra automorphism.
"""
import random
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Mapping, NamedTuple, Sequence

import networkx as nx

from .errors import (
    CocycleViolation,
    DomainMismatch,
    NotMultiplicityPreserving,
    ShapeMismatch,
    SingularMatrix,
)
from .field import (
    Dense,
    PrimeField,
    StructMatrix,
    algebra_invert,
    algebra_multiply,
    dense_rows,
    diagonal,
    identity,
    is_invertible,
    matrix_unit,
    random_unit,
    struct_matrix,
    unit_group_order,
)
from .grading import enumerate_transitive
from .groups import cyclic
from .lattice import PosetAutomorphism, poset_automorphisms
from .poset import Pair, Preorder, QuotientPoset, bfs_forest, comparability_graph, quotient_order
from .settings import SETTINGS

Tilde = Mapping[int, int]


class Side(str, Enum):
    """Whether a shuffle permutes columns (right) or rows (left)."""

    RIGHT = "right"
    LEFT = "left"


def tilde_permutation(poset: QuotientPoset, g: PosetAutomorphism) -> dict[int, int]:
    """
    g̃: sends the k-th smallest element of α to the k-th smallest of g(α).
    """
    for alpha, beta in enumerate(g.mapping):
        if poset.mult[alpha] != poset.mult[beta]:
            raise NotMultiplicityPreserving(
                f"Class {alpha} has {poset.mult[alpha]} elements, its image {poset.mult[beta]}."
            )
    return {
        i: j
        for alpha, cls in enumerate(poset.classes)
        for i, j in zip(cls, poset.classes[g(alpha)])
    }


def invert_tilde(tilde: Tilde) -> dict[int, int]:
    """The inverse permutation."""
    return {j: i for i, j in tilde.items()}


def shuffle(matrix: StructMatrix | Dense, tilde: Tilde, side: Side) -> Dense:
    """
    A^g (entry (i,j) is A[i, g̃(j)]) for `Side.RIGHT`, ^gA (entry (i,j) is
    A[g̃(i), j]) for `Side.LEFT`.
    """
    if isinstance(matrix, StructMatrix):
        matrix = matrix.to_dense()
    n = matrix.shape[0]
    permuted = [tilde[k] - 1 for k in range(1, n + 1)]
    if side is Side.RIGHT:
        return matrix.extract(list(range(n)), permuted)
    return matrix.extract(permuted, list(range(n)))


def relabel(x: StructMatrix, tilde: Tilde) -> StructMatrix:
    """^gX^g: entry (i,j) is X[g̃(i), g̃(j)]."""
    back = invert_tilde(tilde)
    return struct_matrix(
        x.preorder, x.field, {(back[i], back[j]): v for (i, j), v in x.entries}
    )


@dataclass(frozen=True)
class ScalarTransitive:
    """A transitive function ρ -> F_p^*, the group T under pointwise products."""

    preorder: Preorder
    field: PrimeField
    values: tuple[tuple[Pair, int], ...]

    @cached_property
    def mapping(self) -> Mapping[Pair, int]:
        """Pair -> nonzero residue."""
        return dict(self.values)

    def __getitem__(self, pair: Pair) -> int:
        return self.mapping[pair]

    def __mul__(self, other: "ScalarTransitive") -> "ScalarTransitive":
        return ScalarTransitive(
            self.preorder,
            self.field,
            tuple((pair, self.field.mul(v, other[pair])) for pair, v in self.values),
        )

    def inverse(self) -> "ScalarTransitive":
        """Pointwise inverse."""
        return ScalarTransitive(
            self.preorder,
            self.field,
            tuple((pair, self.field.inv(v)) for pair, v in self.values),
        )

    def act(self, x: StructMatrix) -> StructMatrix:
        """(a·X)_ij = a_ij·X_ij."""
        return struct_matrix(
            x.preorder, x.field, {pair: v * self[pair] for pair, v in x.entries}
        )

    @property
    def is_one(self) -> bool:
        """Whether every value is 1."""
        return all(v == 1 for _, v in self.values)


def scalar_transitive(
    preorder: Preorder, field: PrimeField, values: Mapping[Pair, int]
) -> ScalarTransitive:
    """Validates that `values` is defined on ρ, nonzero and transitive."""
    if set(values) != set(preorder.pairs):
        raise DomainMismatch("Scalars must be given exactly on ρ.")
    normalized = {pair: v % field.p for pair, v in values.items()}
    if 0 in normalized.values():
        raise DomainMismatch("Scalars must be nonzero.")
    for i, j in preorder.pairs:
        for r in range(1, preorder.n + 1):
            if preorder.related(j, r) and field.mul(normalized[i, j], normalized[j, r]) != normalized[i, r]:
                raise CocycleViolation((i, j, r))
    return ScalarTransitive(preorder, field, tuple(sorted(normalized.items())))


def ones(preorder: Preorder, field: PrimeField) -> ScalarTransitive:
    """The identity of T."""
    return ScalarTransitive(preorder, field, tuple((pair, 1) for pair in preorder.pairs))


def enumerate_T(
    preorder: Preorder, field: PrimeField, budget: int | None = None
) -> list[ScalarTransitive]:
    """
    Every element of T. F_p^* is cyclic of order p-1, so T is read off the
    transitive functions into that cyclic group through a primitive root.
    """
    units = cyclic(field.p - 1)
    return sorted(
        (
            ScalarTransitive(
                preorder,
                field,
                tuple((pair, field.power_of_generator(k)) for pair, k in u.values),
            )
            for u in enumerate_transitive(preorder, units, budget)
        ),
        key=lambda a: a.values,
    )


@dataclass(frozen=True)
class AlgebraMap:
    """A linear map on M(ρ, F_p) given by the images of the matrix units."""

    preorder: Preorder
    field: PrimeField
    images: tuple[tuple[Pair, StructMatrix], ...]

    @cached_property
    def mapping(self) -> Mapping[Pair, StructMatrix]:
        """Pair -> image of e_ij."""
        return dict(self.images)

    def __getitem__(self, pair: Pair) -> StructMatrix:
        return self.mapping[pair]

    def apply(self, x: StructMatrix) -> StructMatrix:
        """φ(x) by linearity."""
        total = struct_matrix(self.preorder, self.field, {})
        for pair, value in x.entries:
            total = total + self[pair].scaled(value)
        return total

    def compose(self, other: "AlgebraMap") -> "AlgebraMap":
        """`self ∘ other`; `other` is applied first."""
        return AlgebraMap(
            self.preorder,
            self.field,
            tuple((pair, self.apply(image)) for pair, image in other.images),
        )

    @property
    def is_identity(self) -> bool:
        """Whether every e_ij is fixed."""
        return all(
            image == matrix_unit(self.preorder, self.field, *pair) for pair, image in self.images
        )


def algebra_map(
    preorder: Preorder, field: PrimeField, images: Mapping[Pair, StructMatrix]
) -> AlgebraMap:
    """
    Checks that the images multiply like matrix units and that the images of
    the e_ii add up to the identity.
    """
    if set(images) != set(preorder.pairs):
        raise DomainMismatch("Images must be given for exactly the ρ-pairs.")
    zero = struct_matrix(preorder, field, {})
    for (i, j), lhs in images.items():
        for (k, r), rhs in images.items():
            expected = images[i, r] if j == k else zero
            if algebra_multiply(lhs, rhs) != expected:
                raise ShapeMismatch(f"Images of e_{i}{j} and e_{k}{r} do not multiply as units.")
    total = zero
    for i in range(1, preorder.n + 1):
        total = total + images[i, i]
    if total != identity(preorder, field):
        raise ShapeMismatch("Images of the diagonal units do not add up to the identity.")
    return AlgebraMap(preorder, field, tuple(sorted(images.items())))


@dataclass(frozen=True)
class AutoTriple:
    """A ⋊ (g ⋉ a): a unit, an element of Aut₀ and an element of T."""

    matrix: StructMatrix
    aut: PosetAutomorphism
    scalars: ScalarTransitive

    @property
    def preorder(self) -> Preorder:
        """The relation the triple lives on."""
        return self.matrix.preorder

    @property
    def field(self) -> PrimeField:
        """The base field."""
        return self.matrix.field


def auto_triple(
    matrix: StructMatrix, aut: PosetAutomorphism, scalars: ScalarTransitive
) -> AutoTriple:
    """Validates a triple."""
    if not is_invertible(matrix):
        raise SingularMatrix("The matrix part of a triple must be invertible.")
    if not aut.multiplicity_preserving:
        raise NotMultiplicityPreserving("The automorphism part must preserve class sizes.")
    if scalars.preorder != matrix.preorder or scalars.field != matrix.field:
        raise ShapeMismatch("Matrix and scalars belong to different algebras.")
    return AutoTriple(matrix, aut, scalars)


def triple_identity(preorder: Preorder, field: PrimeField) -> AutoTriple:
    """(I, id, 1)."""
    size = quotient_order(preorder).size
    return AutoTriple(identity(preorder, field), PosetAutomorphism.identity(size), ones(preorder, field))


def F_map(t: AutoTriple) -> AlgebraMap:
    """
    φ(e_ij) = a_ij·A·e_{g̃(i)g̃(j)}·A⁻¹: column g̃(i) of A times row g̃(j) of A⁻¹.
    """
    preorder, field = t.preorder, t.field
    tilde = tilde_permutation(quotient_order(preorder), t.aut)
    A = dense_rows(field, t.matrix.to_dense())
    A_inv = dense_rows(field, algebra_invert(t.matrix).to_dense())
    n = preorder.n

    images = {}
    for i, j in preorder.pairs:
        column, row = tilde[i] - 1, tilde[j] - 1
        scale = t.scalars[i, j]
        images[i, j] = struct_matrix(
            preorder,
            field,
            {
                (s + 1, r + 1): scale * A[s][column] * A_inv[row][r]
                for s in range(n)
                for r in range(n)
                if A[s][column] and A_inv[row][r]
            },
        )
    return AlgebraMap(preorder, field, tuple(sorted(images.items())))


def _poset_of(t: AutoTriple) -> QuotientPoset:
    return quotient_order(t.preorder)


def triple_multiply(lhs: AutoTriple, rhs: AutoTriple) -> AutoTriple:
    """
    (B, h, b)·(A, g, a) = (B·^{h⁻¹}(b·A)^{h⁻¹}, h∘g, (b_{g̃(i)g̃(j)}·a_ij)), so
    that F(lhs·rhs) = F(lhs)∘F(rhs).
    """
    if lhs.preorder != rhs.preorder or lhs.field != rhs.field:
        raise ShapeMismatch("Triples belong to different algebras.")
    poset = _poset_of(lhs)
    h_tilde = tilde_permutation(poset, lhs.aut)
    g_tilde = tilde_permutation(poset, rhs.aut)

    matrix = algebra_multiply(
        lhs.matrix, relabel(lhs.scalars.act(rhs.matrix), invert_tilde(h_tilde))
    )
    scalars = ScalarTransitive(
        lhs.preorder,
        lhs.field,
        tuple(
            ((i, j), lhs.field.mul(lhs.scalars[g_tilde[i], g_tilde[j]], a))
            for (i, j), a in rhs.scalars.values
        ),
    )
    return AutoTriple(matrix, lhs.aut.compose(rhs.aut), scalars)


def triple_inverse(t: AutoTriple) -> AutoTriple:
    """
    (A′, g⁻¹, a′) with a′_ij = a_{g̃⁻¹(i)g̃⁻¹(j)}⁻¹ and A′_ij = A⁻¹[g̃(i), g̃(j)]/a_ij.
    """
    poset = _poset_of(t)
    tilde = tilde_permutation(poset, t.aut)
    back = invert_tilde(tilde)
    field = t.field

    relabeled = relabel(algebra_invert(t.matrix), tilde)
    matrix = struct_matrix(
        t.preorder,
        field,
        {pair: v * field.inv(t.scalars[pair]) for pair, v in relabeled.entries},
    )
    scalars = ScalarTransitive(
        t.preorder,
        field,
        tuple(((i, j), field.inv(t.scalars[back[i], back[j]])) for i, j in t.preorder.pairs),
    )
    return AutoTriple(matrix, t.aut.inverse(), scalars)


class Approx(NamedTuple):
    """Outcome of `approx_equivalent`, with the diagonal d when it holds."""

    equivalent: bool
    d: tuple[int, ...] | None


def approx_equivalent(lhs: AutoTriple, rhs: AutoTriple) -> Approx:
    """
    (A, g, a) ≈ (B, h, b): g = h, B^g = A^g·diag(d) and a_ij·b_ij⁻¹ = d_i·d_j⁻¹.
    Exactly the pairs with F(lhs) = F(rhs).
    """
    if lhs.aut.mapping != rhs.aut.mapping:
        return Approx(False, None)

    field, n = lhs.field, lhs.preorder.n
    tilde = tilde_permutation(_poset_of(lhs), lhs.aut)
    A = dense_rows(field, lhs.matrix.to_dense())
    B = dense_rows(field, rhs.matrix.to_dense())

    d = []
    for j in range(1, n + 1):
        column = tilde[j] - 1
        s = next(s for s in range(n) if A[s][column])
        factor = field.mul(B[s][column], field.inv(A[s][column]))
        if factor == 0 or any(B[r][column] != field.mul(factor, A[r][column]) for r in range(n)):
            return Approx(False, None)
        d.append(factor)

    for i, j in lhs.preorder.pairs:
        if field.mul(lhs.scalars[i, j], d[j - 1]) != field.mul(rhs.scalars[i, j], d[i - 1]):
            return Approx(False, None)
    return Approx(True, tuple(d))


def kernel_triple(preorder: Preorder, field: PrimeField, d: Sequence[int]) -> AutoTriple:
    """diag(d) ⋊ (Id ⋉ (d_i⁻¹·d_j)), an element of the kernel D of F."""
    size = quotient_order(preorder).size
    scalars = ScalarTransitive(
        preorder,
        field,
        tuple(((i, j), field.mul(field.inv(d[i - 1]), d[j - 1])) for i, j in preorder.pairs),
    )
    return AutoTriple(diagonal(preorder, field, d), PosetAutomorphism.identity(size), scalars)


def in_kernel(t: AutoTriple) -> bool:
    """Whether t has the shape diag(d) ⋊ (Id ⋉ (d_i⁻¹·d_j))."""
    if not t.aut.is_identity:
        return False
    if any(i != j for (i, j), _ in t.matrix.entries):
        return False
    d = [t.matrix[i, i] for i in range(1, t.preorder.n + 1)]
    return t == kernel_triple(t.preorder, t.field, d)


def inner_automorphism(x: StructMatrix) -> AlgebraMap:
    """y ↦ x·y·x⁻¹."""
    preorder, field = x.preorder, x.field
    size = quotient_order(preorder).size
    return F_map(auto_triple(x, PosetAutomorphism.identity(size), ones(preorder, field)))


def center_basis(preorder: Preorder, field: PrimeField) -> list[StructMatrix]:
    """One indicator diagonal per connected component of the Hasse graph."""
    poset = quotient_order(preorder)
    return [
        struct_matrix(
            preorder,
            field,
            {(i, i): 1 for a in poset.component(t) for i in poset.classes[a]},
        )
        for t in range(poset.num_components)
    ]


def coelho_forest(poset: QuotientPoset) -> list[Pair]:
    """Default spanning forest of Δ: BFS from the least vertex of each component."""
    return bfs_forest(comparability_graph(poset))


class CoelhoDecomposition(NamedTuple):
    """a = (d_i·d_j⁻¹)·residual."""

    d: tuple[int, ...]
    residual: ScalarTransitive


def coelho_decompose(
    preorder: Preorder,
    field: PrimeField,
    a: ScalarTransitive,
    forest: Sequence[Pair] | None = None,
) -> CoelhoDecomposition:
    """
    Splits a ∈ T into a trivial part and a residual equal to 1 on the forest
    edges and inside isolated classes. Weights are fixed root first, along the
    tree edges.
    """
    poset = quotient_order(preorder)
    if forest is None:
        forest = coelho_forest(poset)

    d = [1] * preorder.n
    graph = nx.Graph()
    graph.add_edges_from(forest)
    for parent, child in bfs_forest(graph):
        if preorder.related(parent, child):
            d[child - 1] = field.mul(d[parent - 1], field.inv(a[parent, child]))
        else:
            d[child - 1] = field.mul(d[parent - 1], a[child, parent])

    delta = comparability_graph(poset)
    for cls in poset.classes:
        if cls[0] in delta:
            continue
        last = cls[-1]
        for i in cls[:-1]:
            d[i - 1] = a[i, last]

    residual = ScalarTransitive(
        preorder,
        field,
        tuple(
            ((i, j), field.mul(value, field.mul(field.inv(d[i - 1]), d[j - 1])))
            for (i, j), value in a.values
        ),
    )
    return CoelhoDecomposition(tuple(d), residual)


def coelho_recompose(decomposition: CoelhoDecomposition) -> ScalarTransitive:
    """Inverse of `coelho_decompose`."""
    d, residual = decomposition
    field = residual.field
    return ScalarTransitive(
        residual.preorder,
        field,
        tuple(
            ((i, j), field.mul(value, field.mul(d[i - 1], field.inv(d[j - 1]))))
            for (i, j), value in residual.values
        ),
    )


def coelho_subgroup(
    preorder: Preorder,
    field: PrimeField,
    forest: Sequence[Pair] | None = None,
    budget: int | None = None,
) -> list[ScalarTransitive]:
    """Elements of T equal to 1 on the forest edges and inside isolated classes."""
    poset = quotient_order(preorder)
    if forest is None:
        forest = coelho_forest(poset)
    delta = comparability_graph(poset)
    pinned = [
        (i, j) if preorder.related(i, j) else (j, i) for i, j in forest
    ] + [
        (i, j)
        for cls in poset.classes
        if cls[0] not in delta
        for i in cls
        for j in cls
    ]
    return [a for a in enumerate_T(preorder, field, budget) if all(a[pair] == 1 for pair in pinned)]


@dataclass(frozen=True)
class AutomorphismSummary:
    """Orders of the groups assembling Aut(M(ρ, F_p))."""

    units: int
    central_units: int
    inner: int
    aut0: int
    T: int
    kernel: int
    coelho: int
    total: int
    coelho_total: int


def automorphism_summary(
    preorder: Preorder, field: PrimeField, budget: int | None = None
) -> AutomorphismSummary:
    """
    |Aut| two ways: |U|·|Aut₀|·|T|/|D| from F, and |I|·|𝒢|·|Aut₀| from the
    Coelho decomposition.
    """
    poset = quotient_order(preorder)
    budget = SETTINGS.budgets.enumeration if budget is None else budget
    units = unit_group_order(preorder, field)
    central = (field.p - 1) ** poset.num_components
    aut0 = len(poset_automorphisms(poset, multiplicity_preserving=True, budget=budget))
    t_order = len(enumerate_T(preorder, field, budget))
    kernel = (field.p - 1) ** preorder.n
    coelho = len(coelho_subgroup(preorder, field, budget=budget))
    return AutomorphismSummary(
        units=units,
        central_units=central,
        inner=units // central,
        aut0=aut0,
        T=t_order,
        kernel=kernel,
        coelho=coelho,
        total=units * aut0 * t_order // kernel,
        coelho_total=units // central * coelho * aut0,
    )


def random_triple(
    rng: random.Random,
    preorder: Preorder,
    field: PrimeField,
    auts: Sequence[PosetAutomorphism],
    scalars: Sequence[ScalarTransitive],
) -> AutoTriple:
    """A seeded random triple from precomputed Aut₀ and T."""
    return AutoTriple(random_unit(rng, preorder, field), rng.choice(auts), rng.choice(scalars))

