"""V-categories (generalized metric spaces), V-functors, and V-distributors.

Distributors between finite V-categories are quantale-valued matrices; their
composite is a join-of-tensors matrix product (min-plus style over the
additive Lawvere carrier, relational composition over the two-chain).
Adjunction checking, Isbell conjugation, representability, and a brute-force
Lawvere-completeness decision over finite quantales live here.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Any, Iterable, Iterator, Mapping

from .common import (
    DEFAULT_BUDGET,
    PreconditionError,
    Report,
    guard_count,
)
from .quantale import (
    FiniteQuantale,
    Quantale,
    require_finite,
    require_same_quantale,
)

POINT = "*"


class VCategory:
    """A finite object set with a quantale-valued distance matrix.

    The container does not enforce the axioms; ``validate_vcat`` checks
    reflexivity and transitivity, so arbitrary "distance sets" can also be
    carried around and validated when needed.
    """

    def __init__(self, quantale: Quantale, objects, dist: Mapping):
        self.quantale = quantale
        self.objects = tuple(objects)
        if len(set(self.objects)) != len(self.objects):
            raise ValueError("duplicate objects")
        self.dist = {}
        for x in self.objects:
            for y in self.objects:
                if (x, y) not in dist:
                    raise ValueError(f"distance missing for pair {(x, y)!r}")
                self.dist[(x, y)] = quantale.check(dist[(x, y)])

    def d(self, x, y):
        return self.dist[(x, y)]

    def __eq__(self, other):
        return (
            isinstance(other, VCategory)
            and self.quantale == other.quantale
            and self.objects == other.objects
            and self.dist == other.dist
        )

    def __repr__(self):
        return f"VCategory(objects={list(self.objects)!r})"


def vcat_from_matrix(q: Quantale, objects, matrix) -> VCategory:
    objects = list(objects)
    dist = {
        (x, y): matrix[i][j]
        for i, x in enumerate(objects)
        for j, y in enumerate(objects)
    }
    return VCategory(q, objects, dist)


def unit_vcat(q: Quantale) -> VCategory:
    """The one-object V-category with self-distance the unit."""
    return VCategory(q, [POINT], {(POINT, POINT): q.unit})


def opposite(X: VCategory) -> VCategory:
    return VCategory(
        X.quantale, X.objects, {(x, y): X.d(y, x) for x in X.objects for y in X.objects}
    )


def is_symmetric(X: VCategory) -> bool:
    return all(X.d(x, y) == X.d(y, x) for x in X.objects for y in X.objects)


@dataclass
class VFunctor:
    source: VCategory
    target: VCategory
    obj_map: dict

    def __post_init__(self):
        require_same_quantale(self.source.quantale, self.target.quantale)
        if set(self.obj_map.keys()) != set(self.source.objects):
            raise ValueError("object map is not total")
        for x, fx in self.obj_map.items():
            if fx not in self.target.objects:
                raise ValueError(f"image {fx!r} of {x!r} not in the target")

    def __call__(self, x):
        return self.obj_map[x]


class VDistributor:
    """A matrix X ⇸ Y of quantale values, contravariant in X, covariant in Y."""

    def __init__(self, source: VCategory, target: VCategory, values: Mapping):
        require_same_quantale(source.quantale, target.quantale)
        self.quantale = source.quantale
        self.source = source
        self.target = target
        self.values = {}
        for x in source.objects:
            for y in target.objects:
                if (x, y) not in values:
                    raise ValueError(f"value missing for pair {(x, y)!r}")
                self.values[(x, y)] = self.quantale.check(values[(x, y)])

    def at(self, x, y):
        return self.values[(x, y)]

    def __eq__(self, other):
        return (
            isinstance(other, VDistributor)
            and self.source == other.source
            and self.target == other.target
            and self.values == other.values
        )

    def __repr__(self):
        return f"VDistributor({len(self.source.objects)}x{len(self.target.objects)})"


def identity_vdist(X: VCategory) -> VDistributor:
    return VDistributor(X, X, dict(X.dist))


def left_weight(X: VCategory, vector: Mapping) -> VDistributor:
    """A weight E ⇸ X given by one value per object."""
    E = unit_vcat(X.quantale)
    return VDistributor(E, X, {(POINT, x): vector[x] for x in X.objects})


def right_weight(X: VCategory, vector: Mapping) -> VDistributor:
    """A coweight X ⇸ E given by one value per object."""
    E = unit_vcat(X.quantale)
    return VDistributor(X, E, {(x, POINT): vector[x] for x in X.objects})


def weight_vector(phi: VDistributor) -> dict:
    """Read a weight E ⇸ X back as an object-indexed vector."""
    if len(phi.source.objects) != 1:
        raise ValueError("not a weight out of the unit category")
    (star,) = phi.source.objects
    return {x: phi.at(star, x) for x in phi.target.objects}


def coweight_vector(psi: VDistributor) -> dict:
    if len(psi.target.objects) != 1:
        raise ValueError("not a coweight into the unit category")
    (star,) = psi.target.objects
    return {x: psi.at(x, star) for x in psi.source.objects}


@dataclass
class VWeightPair:
    """A candidate adjoint pair: φ: E ⇸ X together with ψ: X ⇸ E."""

    phi: VDistributor
    psi: VDistributor

    def __post_init__(self):
        if self.phi.target != self.psi.source:
            raise ValueError("weight pair must share the same V-category")


# ---------------------------------------------------------------------------
# validation


def validate_vcat(X: VCategory) -> Report:
    q = X.quantale
    report = Report()
    refl = next((x for x in X.objects if not q.leq(q.unit, X.d(x, x))), None)
    report.add(
        "reflexivity",
        refl is None,
        None if refl is None else f"{refl!r}: k ≰ {q.format(X.d(refl, refl))}",
    )
    tri = next(
        (
            (x, y, z)
            for x in X.objects
            for y in X.objects
            for z in X.objects
            if not q.leq(q.tensor(X.d(y, z), X.d(x, y)), X.d(x, z))
        ),
        None,
    )
    report.add("transitivity", tri is None, tri)
    return report


def validate_vfunctor(f: VFunctor) -> Report:
    q = f.source.quantale
    report = Report()
    bad = next(
        (
            (x, y)
            for x in f.source.objects
            for y in f.source.objects
            if not q.leq(f.source.d(x, y), f.target.d(f(x), f(y)))
        ),
        None,
    )
    report.add("functor-contracts-distances", bad is None, bad)
    return report


def validate_vdist(phi: VDistributor) -> Report:
    """Bimodule laws: Y(y,y') ⊗ φ(x,y) ⊗ X(x',x) ≤ φ(x',y')."""
    q = phi.quantale
    X, Y = phi.source, phi.target
    report = Report()
    bad = None
    for x in X.objects:
        for xp in X.objects:
            for y in Y.objects:
                for yp in Y.objects:
                    lhs = q.tensor(Y.d(y, yp), q.tensor(phi.at(x, y), X.d(xp, x)))
                    if not q.leq(lhs, phi.at(xp, yp)):
                        bad = (x, xp, y, yp)
                        break
                if bad:
                    break
            if bad:
                break
        if bad:
            break
    report.add("bimodule-laws", bad is None, bad)
    return report


# ---------------------------------------------------------------------------
# composition, induced distributors, adjunctions


def compose_vdist(psi: VDistributor, phi: VDistributor) -> VDistributor:
    """The composite ψ·φ: X ⇸ Z with (ψ·φ)(x,z) = ⋁_y ψ(y,z) ⊗ φ(x,y)."""
    if phi.target != psi.source:
        raise ValueError("middle categories do not match")
    q = phi.quantale
    mid = phi.target.objects
    values = {
        (x, z): q.join(q.tensor(psi.at(y, z), phi.at(x, y)) for y in mid)
        for x in phi.source.objects
        for z in psi.target.objects
    }
    return VDistributor(phi.source, psi.target, values)


def f_lower(f: VFunctor) -> VDistributor:
    """The induced distributor X ⇸ Y with matrix Y(f x, y)."""
    values = {
        (x, y): f.target.d(f(x), y) for x in f.source.objects for y in f.target.objects
    }
    return VDistributor(f.source, f.target, values)


def f_upper(f: VFunctor) -> VDistributor:
    """The induced distributor Y ⇸ X with matrix Y(y, f x)."""
    values = {
        (y, x): f.target.d(y, f(x)) for y in f.target.objects for x in f.source.objects
    }
    return VDistributor(f.target, f.source, values)


def object_lower(X: VCategory, a) -> VDistributor:
    """The representable weight X(a, −)."""
    return left_weight(X, {x: X.d(a, x) for x in X.objects})


def object_upper(X: VCategory, a) -> VDistributor:
    """The representable coweight X(−, a)."""
    return right_weight(X, {x: X.d(x, a) for x in X.objects})


def dist_leq(phi: VDistributor, psi: VDistributor) -> bool:
    """Pointwise order of parallel distributors (the 2-cells of the thin case)."""
    if phi.source != psi.source or phi.target != psi.target:
        raise ValueError("distributors are not parallel")
    q = phi.quantale
    return all(q.leq(v, psi.at(*key)) for key, v in phi.values.items())


def check_adjoint(phi: VDistributor, psi: VDistributor) -> bool:
    """Whether φ: X ⇸ Y is left adjoint to ψ: Y ⇸ X.

    In the thin setting this is the unit inequality X ≤ ψ·φ together with
    the counit inequality φ·ψ ≤ Y; triangle identities are automatic.
    """
    if phi.source != psi.target or phi.target != psi.source:
        raise ValueError("shapes do not form a candidate adjunction")
    return dist_leq(identity_vdist(phi.source), compose_vdist(psi, phi)) and dist_leq(
        compose_vdist(phi, psi), identity_vdist(phi.target)
    )


def adjoint_report(phi: VDistributor, psi: VDistributor) -> Report:
    report = Report()
    q = phi.quantale
    unit = compose_vdist(psi, phi)
    idX = identity_vdist(phi.source)
    bad_unit = next(
        (key for key in idX.values if not q.leq(idX.values[key], unit.values[key])),
        None,
    )
    report.add("unit-inequality", bad_unit is None, bad_unit)
    counit = compose_vdist(phi, psi)
    idY = identity_vdist(phi.target)
    bad_counit = next(
        (key for key in idY.values if not q.leq(counit.values[key], idY.values[key])),
        None,
    )
    report.add("counit-inequality", bad_counit is None, bad_counit)
    return report


# ---------------------------------------------------------------------------
# Isbell conjugation


def isbell_conjugate_weight(phi: VDistributor) -> VDistributor:
    """The conjugate of a weight φ: E ⇸ X: the coweight ⋀_b hom(φ(b), X(a, b))."""
    q = phi.quantale
    X = phi.target
    vec = weight_vector(phi)
    out = {a: q.meet(q.hom(vec[b], X.d(a, b)) for b in X.objects) for a in X.objects}
    return right_weight(X, out)


def isbell_conjugate_coweight(psi: VDistributor) -> VDistributor:
    """The conjugate of a coweight ψ: X ⇸ E: the weight ⋀_b hom(ψ(b), X(b, a))."""
    q = psi.quantale
    X = psi.source
    vec = coweight_vector(psi)
    out = {a: q.meet(q.hom(vec[b], X.d(b, a)) for b in X.objects) for a in X.objects}
    return left_weight(X, out)


# ---------------------------------------------------------------------------
# representability and Lawvere completeness


def is_representable(phi: VDistributor, psi: VDistributor):
    """A witness object a with k ≤ φ(a) and k ≤ ψ(a), or None.

    Requires the pair to be adjoint; by the representability criterion the
    witness exists iff φ is representable, and then φ = a_* and ψ = a^*.
    """
    if not check_adjoint(phi, psi):
        raise PreconditionError(
            "is_representable requires an adjoint pair", adjoint_report(phi, psi)
        )
    q = phi.quantale
    pv, cv = weight_vector(phi), coweight_vector(psi)
    for a in phi.target.objects:
        if q.leq(q.unit, pv[a]) and q.leq(q.unit, cv[a]):
            return a
    return None


def enumerate_weight_pairs(
    X: VCategory, budget: int = DEFAULT_BUDGET
) -> Iterator[tuple[VDistributor, VDistributor]]:
    """All (φ, ψ) in V^X × V^X, unconstrained; callers filter."""
    q = require_finite(X.quantale, "weight-pair enumeration")
    n = len(X.objects)
    count = q.size ** (2 * n) if n else 1
    guard_count(count, budget, f"weight pairs |V|^(2·{n})")
    carrier = list(q.carrier())
    for pvec in product(carrier, repeat=n):
        for cvec in product(carrier, repeat=n):
            phi = left_weight(X, dict(zip(X.objects, pvec)))
            psi = right_weight(X, dict(zip(X.objects, cvec)))
            yield phi, psi


def adjoint_weight_pairs(
    X: VCategory, budget: int = DEFAULT_BUDGET
) -> Iterator[tuple[VDistributor, VDistributor]]:
    """The genuine adjoint pairs: bimodule laws first, then the adjunction."""
    for phi, psi in enumerate_weight_pairs(X, budget):
        if not validate_vdist(phi).ok or not validate_vdist(psi).ok:
            continue
        if check_adjoint(phi, psi):
            yield phi, psi


@dataclass
class LawvereVerdict:
    complete: bool
    #: a witness object per adjoint pair when complete; a failing pair otherwise
    witness: Any = None

    def __bool__(self):
        return self.complete


def lawvere_complete_vcat(
    X: VCategory, q: Quantale | None = None, budget: int = DEFAULT_BUDGET
) -> LawvereVerdict:
    """Decide Lawvere completeness by exhausting candidate adjoint pairs.

    Every left adjoint weight must have a representability witness; the first
    adjoint pair without one is returned as a counterexample certificate.
    """
    if q is not None:
        require_same_quantale(q, X.quantale)
    require_finite(X.quantale, "lawvere_complete_vcat")
    witnesses = []
    for phi, psi in adjoint_weight_pairs(X, budget):
        a = is_representable(phi, psi)
        if a is None:
            return LawvereVerdict(False, (weight_vector(phi), coweight_vector(psi)))
        witnesses.append((weight_vector(phi), a))
    return LawvereVerdict(True, witnesses)


def totally_compact_unit(q: Quantale, budget: int = DEFAULT_BUDGET) -> bool:
    """Whether k ≤ ⋁S forces k ≤ s for some member s, for every subset S."""
    q = require_finite(q, "totally_compact_unit")
    for S in q.subsets(budget):
        if q.leq(q.unit, q.join(S)) and not any(q.leq(q.unit, s) for s in S):
            return False
    return True


def unit_tensor_splits(q: Quantale) -> bool:
    """Whether k ≤ u ⊗ v forces k ≤ u and k ≤ v.

    Together with a totally compact unit this is the sufficient criterion for
    every V-category over the carrier to be Lawvere complete.
    """
    q = require_finite(q, "unit_tensor_splits")
    for u in q.carrier():
        for v in q.carrier():
            if q.leq(q.unit, q.tensor(u, v)) and not (
                q.leq(q.unit, u) and q.leq(q.unit, v)
            ):
                return False
    return True


def all_vcategories(
    q: FiniteQuantale, objects: Iterable, budget: int = DEFAULT_BUDGET
) -> Iterator[VCategory]:
    """Every V-category structure on the given objects (axioms filtered)."""
    objects = list(objects)
    n = len(objects)
    count = q.size ** (n * n) if n else 1
    guard_count(count, budget, f"distance matrices |V|^{n * n}")
    pairs = [(x, y) for x in objects for y in objects]
    for assignment in product(list(q.carrier()), repeat=len(pairs)):
        X = VCategory(q, objects, dict(zip(pairs, assignment)))
        if validate_vcat(X).ok:
            yield X
