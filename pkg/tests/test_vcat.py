from fractions import Fraction

import pytest

from quantcat.common import BudgetExceeded, PreconditionError
from quantcat.quantale import INF
from quantcat.vcat import (
    VCategory,
    VFunctor,
    adjoint_weight_pairs,
    all_vcategories,
    check_adjoint,
    compose_vdist,
    coweight_vector,
    dist_leq,
    f_lower,
    f_upper,
    identity_vdist,
    is_representable,
    isbell_conjugate_coweight,
    isbell_conjugate_weight,
    lawvere_complete_vcat,
    left_weight,
    object_lower,
    object_upper,
    right_weight,
    totally_compact_unit,
    unit_tensor_splits,
    unit_vcat,
    validate_vcat,
    validate_vdist,
    validate_vfunctor,
    vcat_from_matrix,
)

# ---------------------------------------------------------------------------
# oracles


def oracle_min_plus(A, B):
    """(B·A)[i][k] = min_j (B[j][k] + A[i][j]) with inf absorbing."""
    rows, mid, cols = len(A), len(A[0]) if A else 0, len(B[0]) if B else 0
    out = []
    for i in range(rows):
        row = []
        for k in range(cols):
            best = INF
            for j in range(mid):
                a, b = A[i][j], B[j][k]
                s = INF if (a is INF or b is INF) else a + b
                if s is not INF and (best is INF or s < best):
                    best = s
            row.append(best)
        out.append(row)
    return out


def oracle_bool_relcomp(A, B):
    """Relational composition of boolean matrices."""
    rows, mid, cols = len(A), len(A[0]) if A else 0, len(B[0]) if B else 0
    return [
        [any(A[i][j] and B[j][k] for j in range(mid)) for k in range(cols)]
        for i in range(rows)
    ]


def brute_force_representable(X, phi, psi):
    """Objects a with a_* = φ and a^* = ψ, by matrix equality."""
    return [
        a
        for a in X.objects
        if object_lower(X, a) == phi and object_upper(X, a) == psi
    ]


# ---------------------------------------------------------------------------
# fixtures


def metric2(qplus, d_ab=Fraction(1), d_ba=Fraction(1)):
    return VCategory(
        qplus,
        ["a", "b"],
        {
            ("a", "a"): 0,
            ("b", "b"): 0,
            ("a", "b"): d_ab,
            ("b", "a"): d_ba,
        },
    )


# ---------------------------------------------------------------------------
# validation


def test_validate_metric_space(qplus):
    assert validate_vcat(metric2(qplus)).ok


def test_validate_reflexivity_failure(qplus):
    X = VCategory(
        qplus,
        ["a", "b"],
        {("a", "a"): 1, ("b", "b"): 0, ("a", "b"): 1, ("b", "a"): 1},
    )
    report = validate_vcat(X)
    assert not report.ok
    assert report.failures()[0].name == "reflexivity"


def test_validate_triangle_failure(qplus):
    X = VCategory(
        qplus,
        ["a", "b", "c"],
        {
            ("a", "a"): 0, ("b", "b"): 0, ("c", "c"): 0,
            ("a", "b"): 1, ("b", "c"): 1, ("a", "c"): 5,
            ("b", "a"): 1, ("c", "b"): 1, ("c", "a"): 1,
        },
    )
    report = validate_vcat(X)
    assert not report.ok
    assert ("a", "b", "c") in [c.witness for c in report.failures()]


def test_validate_vfunctor(qplus):
    X = metric2(qplus, Fraction(2), Fraction(2))
    Y = metric2(qplus, Fraction(1), Fraction(1))
    assert validate_vfunctor(VFunctor(X, Y, {"a": "a", "b": "b"})).ok
    assert not validate_vfunctor(VFunctor(Y, X, {"a": "a", "b": "b"})).ok


# ---------------------------------------------------------------------------
# composition


def test_compose_identity_is_unit_law(q2, qplus):
    for q, X in ((q2, vcat_from_matrix(q2, ["x", "y"], [["1", "0"], ["0", "1"]])),
                 (qplus, metric2(qplus))):
        phi = left_weight(X, {o: q.unit for o in X.objects})
        assert compose_vdist(identity_vdist(X), phi) == phi


def test_compose_is_boolean_relational_product(q2):
    X = vcat_from_matrix(q2, ["x0", "x1"], [["1", "1"], ["0", "1"]])
    phi = left_weight(X, {"x0": "1", "x1": "1"})  # E ⇸ X
    psi_vals = {("x0", "y0"): "0", ("x0", "y1"): "1", ("x1", "y0"): "1", ("x1", "y1"): "1"}
    Y = vcat_from_matrix(q2, ["y0", "y1"], [["1", "0"], ["0", "1"]])
    from quantcat.vcat import VDistributor

    psi = VDistributor(X, Y, psi_vals)
    got = compose_vdist(psi, phi)
    A = [[True, True]]  # phi as 1x2 boolean matrix
    B = [[False, True], [True, True]]
    expected = oracle_bool_relcomp(A, B)
    for j, y in enumerate(Y.objects):
        assert (got.at("*", y) == q2.el("1")) == expected[0][j]


def test_compose_is_min_plus_product(qplus):
    X = metric2(qplus)
    from quantcat.vcat import VDistributor

    phi = VDistributor(
        X, X, {("a", "a"): 0, ("a", "b"): 1, ("b", "a"): 2, ("b", "b"): 0}
    )
    psi = VDistributor(
        X, X, {("a", "a"): 3, ("a", "b"): 1, ("b", "a"): 0, ("b", "b"): 5}
    )
    got = compose_vdist(psi, phi)
    A = [[Fraction(0), Fraction(1)], [Fraction(2), Fraction(0)]]
    B = [[Fraction(3), Fraction(1)], [Fraction(0), Fraction(5)]]
    expected = oracle_min_plus(A, B)
    for i, x in enumerate(X.objects):
        for k, z in enumerate(X.objects):
            assert got.at(x, z) == expected[i][k]


def test_compose_associative_on_sampled_distributors(q2, q3):
    for q in (q2, q3):
        X = vcat_from_matrix(q, ["x", "y"], [[q.unit, q.bottom], [q.bottom, q.unit]])
        ds = []
        from quantcat.vcat import VDistributor

        vals = list(q.carrier())
        for v1 in vals:
            for v2 in vals:
                ds.append(
                    VDistributor(
                        X, X,
                        {("x", "x"): q.unit, ("x", "y"): v1,
                         ("y", "x"): v2, ("y", "y"): q.unit},
                    )
                )
        for f in ds[:4]:
            for g in ds[:4]:
                for h in ds[:4]:
                    assert compose_vdist(h, compose_vdist(g, f)) == compose_vdist(
                        compose_vdist(h, g), f
                    )


# ---------------------------------------------------------------------------
# induced distributors and adjunctions


def test_identity_functor_induces_identity(qplus):
    X = metric2(qplus)
    f = VFunctor(X, X, {"a": "a", "b": "b"})
    assert f_lower(f) == identity_vdist(X)
    assert f_upper(f) == identity_vdist(X)


def test_constant_functor_lower(qplus):
    X = metric2(qplus)
    f = VFunctor(X, X, {"a": "a", "b": "a"})
    low = f_lower(f)
    for x in X.objects:
        for z in X.objects:
            assert low.at(x, z) == X.d("a", z)


def test_functor_adjunction_all_functors(q2, qplus):
    spaces = [
        vcat_from_matrix(q2, ["x", "y"], [["1", "1"], ["0", "1"]]),
        metric2(qplus, Fraction(1, 2), Fraction(3)),
    ]
    for X in spaces:
        for img_a in X.objects:
            for img_b in X.objects:
                f = VFunctor(X, X, {"a": img_a, "b": img_b} if "a" in X.objects else
                             {X.objects[0]: img_a, X.objects[1]: img_b})
                if not validate_vfunctor(f).ok:
                    continue
                assert check_adjoint(f_lower(f), f_upper(f))


def test_check_adjoint_one_point(q3):
    X = unit_vcat(q3)
    phi = left_weight(X, {"*": q3.unit})
    psi = right_weight(X, {"*": q3.unit})
    assert check_adjoint(phi, psi)


def test_representables_are_adjoint(q2, qplus):
    for X in (vcat_from_matrix(q2, ["x", "y"], [["1", "1"], ["0", "1"]]),
              metric2(qplus, Fraction(1), Fraction(2))):
        for a in X.objects:
            assert check_adjoint(object_lower(X, a), object_upper(X, a))


def test_up_down_sets_not_adjoint(q2):
    # ordered set x < y; up-set of y paired with down-set of x fails the unit
    X = vcat_from_matrix(q2, ["x", "y"], [["1", "1"], ["0", "1"]])
    phi = left_weight(X, {"x": "0", "y": "1"})  # up-set of y: X(y, -)
    psi = right_weight(X, {"x": "1", "y": "0"})  # down-set of x: X(-, x)
    assert validate_vdist(phi).ok and validate_vdist(psi).ok
    assert not check_adjoint(phi, psi)


# ---------------------------------------------------------------------------
# Isbell conjugation


def test_isbell_yoneda(q2, q3, qplus):
    spaces = [
        vcat_from_matrix(q2, ["x", "y"], [["1", "1"], ["0", "1"]]),
        vcat_from_matrix(q3, ["x", "y"], [["1", "m"], ["0", "1"]]),
        metric2(qplus, Fraction(1), Fraction(2)),
    ]
    for X in spaces:
        for a in X.objects:
            assert isbell_conjugate_weight(object_lower(X, a)) == object_upper(X, a)
            assert isbell_conjugate_coweight(object_upper(X, a)) == object_lower(X, a)


def test_isbell_one_point(q3):
    X = unit_vcat(q3)
    for v in q3.carrier():
        phi = left_weight(X, {"*": v})
        conj = isbell_conjugate_weight(phi)
        assert coweight_vector(conj)["*"] == q3.hom(v, q3.unit)


def test_isbell_adjunction_laws(q2, q3):
    for q in (q2, q3):
        X = vcat_from_matrix(q, ["x", "y"], [[q.unit, q.unit], [q.bottom, q.unit]])
        from itertools import product as iproduct

        for vec in iproduct(list(q.carrier()), repeat=2):
            phi = left_weight(X, dict(zip(X.objects, vec)))
            if not validate_vdist(phi).ok:
                continue
            conj = isbell_conjugate_weight(phi)
            back = isbell_conjugate_coweight(conj)
            assert dist_leq(phi, back)  # φ ≤ φ∨∨
            assert isbell_conjugate_weight(back) == conj  # φ∨∨∨ = φ∨
            psi = right_weight(X, dict(zip(X.objects, vec)))
            if validate_vdist(psi).ok:
                assert dist_leq(psi, isbell_conjugate_weight(isbell_conjugate_coweight(psi)))


# ---------------------------------------------------------------------------
# representability


def test_is_representable_requires_adjoint(q2):
    X = vcat_from_matrix(q2, ["x", "y"], [["1", "1"], ["0", "1"]])
    phi = left_weight(X, {"x": "0", "y": "1"})
    psi = right_weight(X, {"x": "1", "y": "0"})
    with pytest.raises(PreconditionError):
        is_representable(phi, psi)


def test_representable_pair_has_witness(qplus):
    X = metric2(qplus, Fraction(1), Fraction(2))
    for a in X.objects:
        w = is_representable(object_lower(X, a), object_upper(X, a))
        assert w is not None


def test_witness_criterion_matches_brute_force(q2, q3):
    for q in (q2, q3):
        spaces = [
            unit_vcat(q),
            vcat_from_matrix(q, ["x", "y"], [[q.unit, q.unit], [q.bottom, q.unit]]),
        ]
        for X in spaces:
            for phi, psi in adjoint_weight_pairs(X, budget=10**6):
                witness = is_representable(phi, psi)
                brute = brute_force_representable(X, phi, psi)
                assert (witness is not None) == bool(brute)
                if witness is not None:
                    assert witness in brute


# ---------------------------------------------------------------------------
# Lawvere completeness


def test_ordered_sets_are_lawvere_complete(q2):
    for X in (unit_vcat(q2), vcat_from_matrix(q2, ["x", "y"], [["1", "1"], ["0", "1"]])):
        assert lawvere_complete_vcat(X).complete


def test_empty_set_over_trivial_quantale_incomplete(q1):
    empty = VCategory(q1, [], {})
    verdict = lawvere_complete_vcat(empty)
    assert not verdict.complete
    nonempty = unit_vcat(q1)
    assert lawvere_complete_vcat(nonempty).complete


def test_empty_vcat_over_two_chain_complete(q2):
    assert lawvere_complete_vcat(VCategory(q2, [], {})).complete


def test_one_point_complete_when_unit_compact_and_tensor_splits(q2, q3, qluka):
    for q in (q2, q3, qluka):
        assert totally_compact_unit(q)
        if unit_tensor_splits(q):
            assert lawvere_complete_vcat(unit_vcat(q)).complete


def test_sufficient_criterion_on_fixtures(q2, q3):
    for q in (q2, q3):
        if totally_compact_unit(q) and unit_tensor_splits(q):
            X = vcat_from_matrix(
                q, ["x", "y"], [[q.unit, q.bottom], [q.bottom, q.unit]]
            )
            assert lawvere_complete_vcat(X).complete


def test_totally_compact_examples(q2, q3, q4bool, q1):
    assert totally_compact_unit(q2)
    assert totally_compact_unit(q3)
    assert not totally_compact_unit(q4bool)  # top ≤ a ∨ b
    assert not totally_compact_unit(q1)  # the empty cover reaches the unit


def test_crafted_bool4_incomplete(q4bool):
    # two far-apart points with witness mass split between the atoms
    q = q4bool
    X = vcat_from_matrix(
        q, ["x1", "x2"], [["top", "bot"], ["bot", "top"]]
    )
    verdict = lawvere_complete_vcat(X)
    assert not verdict.complete
    phi_vec, psi_vec = verdict.witness
    phi = left_weight(X, phi_vec)
    psi = right_weight(X, psi_vec)
    assert check_adjoint(phi, psi)
    assert is_representable(phi, psi) is None


def test_lawvere_budget(q4bool):
    X = vcat_from_matrix(
        q4bool,
        ["x", "y", "z"],
        [["top", "bot", "bot"], ["bot", "top", "bot"], ["bot", "bot", "top"]],
    )
    with pytest.raises(BudgetExceeded):
        lawvere_complete_vcat(X, budget=10)


def test_all_vcategories_generation(q2):
    cats = list(all_vcategories(q2, ["x", "y"], budget=10**6))
    # reflexivity forces the diagonal; transitivity cuts nothing at size 2
    # with tensor = meet, so 4 off-diagonal choices remain
    assert len(cats) == 4
    for X in cats:
        assert validate_vcat(X).ok


from hypothesis import given, settings, strategies as st


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(min_value=0, max_value=3), min_size=2, max_size=2))
def test_isbell_unit_law_sampled_bool4(vec):
    from quantcat.quantale import bool4

    q = bool4()
    X = vcat_from_matrix(
        q, ["x", "y"], [["top", "bot"], ["bot", "top"]]
    )
    phi = left_weight(X, dict(zip(X.objects, vec)))
    if not validate_vdist(phi).ok:
        return
    back = isbell_conjugate_coweight(isbell_conjugate_weight(phi))
    assert dist_leq(phi, back)
