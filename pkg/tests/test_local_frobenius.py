"""The formal-local pullback model: normal form, membership, colengths."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import given, strategies as st

from frobstrat.errors import (
    ExtrapolationWarning,
    InvalidLevel,
    InvalidParameters,
    ModulusMismatch,
    PrecisionExhausted,
)
from frobstrat.local_frobenius import (
    FiberPoint,
    LocalContext,
    colength,
    colength_profile,
    element_from_monomials,
    fiber_points,
    fiber_polygon,
    phi_image,
    right_multiply,
    submodule_contains,
    submodule_contains_monomial,
    tau_power,
)
from frobstrat.polygons import REFERENCE_POLYGONS, reference_label
from oracles import normalize_monomials, rowspace_rank, shift_right, tau_monomials

CTX3 = LocalContext.default(3)


def grid(element):
    return element.coeffs


def test_context_precision_floor():
    with pytest.raises(InvalidParameters):
        LocalContext(3, 5)
    assert LocalContext.default(3).precision == 9


def test_fiber_point_normal_form():
    assert FiberPoint((2, 0, 0), 3) == FiberPoint((1, 0, 0), 3)
    assert FiberPoint((0, 2, 1), 3).lambdas == (0, 1, 2)


def test_fiber_point_rejects_zero_tuple():
    with pytest.raises(InvalidParameters):
        FiberPoint((0, 0, 0), 3)
    with pytest.raises(InvalidParameters):
        FiberPoint((3, 3, 3), 3)  # reduces to zero mod 3
    with pytest.raises(InvalidParameters):
        FiberPoint((1, 0), 3)  # wrong length


def test_fiber_points_census_size():
    pts = fiber_points(3)
    assert len(pts) == 13
    assert len(set(pts)) == 13
    assert len(fiber_points(2)) == 3


def test_tau_power_zero_is_unit():
    e = tau_power(CTX3, 0)
    assert e.coeffs[0][0] == 1
    assert sum(sum(row) for row in e.coeffs) == 1


def test_tau_power_one():
    e = tau_power(CTX3, 1)
    assert e.coeffs[1][0] == 1
    assert e.coeffs[0][1] == 2  # -1 mod 3


def test_tau_power_two():
    e = tau_power(CTX3, 2)
    assert e.coeffs[2][0] == 1
    assert e.coeffs[1][1] == 1  # -2 mod 3
    assert e.coeffs[0][2] == 1


def test_tau_power_range():
    with pytest.raises(InvalidLevel):
        tau_power(CTX3, 3)
    with pytest.raises(InvalidLevel):
        tau_power(CTX3, -1)


def test_right_multiply_shift_one():
    e = right_multiply(tau_power(CTX3, 2), 1)
    assert e.coeffs[2][1] == 1
    assert e.coeffs[1][2] == 1
    assert e.coeffs[0][3] == 1


def test_right_multiply_identity_shift():
    e = tau_power(CTX3, 2)
    assert right_multiply(e, 0) == e


def test_right_multiply_shift_three():
    # (u - v)^2 v^3 = u^2 v^3 - 2 u v^4 + v^5, already in normal form.
    e = right_multiply(tau_power(CTX3, 2), 3)
    assert e.coeffs[2][3] == 1
    assert e.coeffs[1][4] == 1
    assert e.coeffs[0][5] == 1
    expected = normalize_monomials(shift_right(tau_monomials(2), 3), 3, 9)
    assert e.coeffs == expected


def test_right_multiply_overflow():
    with pytest.raises(PrecisionExhausted):
        right_multiply(tau_power(CTX3, 2), 7)
    with pytest.raises(InvalidParameters):
        right_multiply(tau_power(CTX3, 2), -1)


def test_normal_form_matches_rewriting_oracle_exhaustive():
    for a, b in itertools.product(range(9), repeat=2):
        got = element_from_monomials(CTX3, [(a, b, 1)])
        assert got.coeffs == normalize_monomials([(a, b, 1)], 3, 9)


def test_normal_form_idempotent():
    e = element_from_monomials(CTX3, [(4, 1, 2), (2, 2, 1)])
    again = element_from_monomials(
        CTX3,
        [
            (i, j, c)
            for i, row in enumerate(e.coeffs)
            for j, c in enumerate(row)
            if c
        ],
    )
    assert again == e


@given(
    j1=st.integers(min_value=0, max_value=3),
    j2=st.integers(min_value=0, max_value=3),
    m=st.integers(min_value=0, max_value=2),
)
def test_right_multiply_composes(j1, j2, m):
    e = tau_power(CTX3, m)
    assert right_multiply(e, j1 + j2) == right_multiply(
        right_multiply(e, j1), j2
    )


def test_phi_image_of_tau_squared():
    # image is c - 2bt + at^2 for the point (a : b : c); never zero.
    for point in fiber_points(3):
        a, b, c = point.lambdas
        series = phi_image(tau_power(CTX3, 2), point)
        assert series.coeffs == (c % 3, (-2 * b) % 3, a % 3)
        assert not series.is_zero()


def test_phi_image_shift_one_examples():
    e = right_multiply(tau_power(CTX3, 2), 1)
    assert phi_image(e, FiberPoint((1, 0, 0), 3)).is_zero()
    series = phi_image(e, FiberPoint((0, 1, 0), 3))
    assert series.coeffs == (0, 0, 1)  # -2 t^2 = t^2 mod 3


def test_phi_image_shift_three_always_zero():
    e = right_multiply(tau_power(CTX3, 2), 3)
    for point in fiber_points(3):
        assert phi_image(e, point).is_zero()


def test_phi_image_modulus_check():
    with pytest.raises(ModulusMismatch):
        phi_image(tau_power(CTX3, 1), FiberPoint((1, 0, 0, 0, 0), 5))


def test_membership_claims_exhaustive():
    """The four membership claims, checked against the monomial criterion
    at every point of the projective plane over F_3."""
    top = tau_power(CTX3, 2)
    for point in fiber_points(3):
        lam = point.lambdas
        # (a) tau^2 itself is never in the induced submodule
        assert not submodule_contains(top, point)
        # (b) tau^2 t is in iff t and t^2 both lie in V
        assert submodule_contains(right_multiply(top, 1), point) == (
            lam[1] == 0 and lam[2] == 0
        )
        # (c) tau^2 t^2 is in iff t^2 lies in V
        assert submodule_contains(right_multiply(top, 2), point) == (
            lam[2] == 0
        )
        # (d) tau^2 t^3 is always in
        assert submodule_contains(right_multiply(top, 3), point)


def test_monomial_membership():
    assert submodule_contains_monomial(FiberPoint((1, 1, 1), 3), 3)
    assert submodule_contains_monomial(FiberPoint((1, 0, 0), 3), 1)
    assert not submodule_contains_monomial(FiberPoint((1, 0, 0), 3), 0)
    assert not submodule_contains_monomial(FiberPoint((0, 0, 1), 3), 2)
    with pytest.raises(InvalidParameters):
        submodule_contains_monomial(FiberPoint((1, 0, 0), 3), -1)


def test_colength_level_two_cases():
    assert colength(CTX3, FiberPoint((0, 0, 1), 3), 2) == 3
    assert colength(CTX3, FiberPoint((1, 0, 0), 3), 2) == 1
    assert colength(CTX3, FiberPoint((0, 1, 0), 3), 2) == 2


def test_colength_level_one_frozen_case():
    # images of tau t^j and tau^2 t^j at (1:0:0) span {t, t^2}: rank 2,
    # hence intersection degree 4 - 2 = 2 at level 1.
    assert colength(CTX3, FiberPoint((1, 0, 0), 3), 1) == 2
    assert rowspace_rank(((0, 2, 0), (0, 0, 2), (0, 0, 1)), 3) == 2


def test_colength_level_range():
    with pytest.raises(InvalidLevel):
        colength(CTX3, FiberPoint((1, 0, 0), 3), 0)
    with pytest.raises(InvalidLevel):
        colength(CTX3, FiberPoint((1, 0, 0), 3), 3)


def test_colength_matches_monomial_dichotomy():
    for point in fiber_points(3):
        has_t = submodule_contains_monomial(point, 1)
        has_t2 = submodule_contains_monomial(point, 2)
        expected = 3 if not has_t2 else (1 if has_t else 2)
        assert colength(CTX3, point, 2) == expected


def test_colength_matches_rowspace_oracle():
    for point in fiber_points(3):
        for level in (1, 2):
            rows = []
            for m in range(level, 3):
                base = tau_power(CTX3, m)
                for j in range(3):
                    rows.append(phi_image(right_multiply(base, j), point).coeffs)
            assert colength(CTX3, point, level) == rowspace_rank(rows, 3)


def test_fiber_polygon_reference_points():
    cases = {
        (0, 0, 1): "P2",
        (0, 1, 0): "P3",
        (1, 0, 0): "P4",
    }
    for lambdas, label in cases.items():
        pg = fiber_polygon(CTX3, FiberPoint(lambdas, 3), 2, -1)
        assert pg == REFERENCE_POLYGONS[label]


def test_fiber_polygon_agrees_with_level_two_classification():
    # independent route: the level-2 intersection degree alone decides the
    # shape (2 -> P4, 1 -> P3, 0 -> P2).
    by_degree = {2: "P4", 1: "P3", 0: "P2"}
    for point in fiber_points(3):
        d2 = 3 - colength(CTX3, point, 2)
        pg = fiber_polygon(CTX3, point, 2, -1)
        assert reference_label(pg) == by_degree[d2]
        assert pg.endpoint == (3, 0)
        assert sum(b - a for (_, a), (_, b) in zip(pg.vertices, pg.vertices[1:])) == 0


def test_colength_profile_reference_values():
    profile = colength_profile(CTX3, FiberPoint((1, 0, 0), 3), 2, -1)
    assert profile.colengths == {1: 2, 2: 1}
    assert profile.intersection_degrees == {1: 2, 2: 2}
    assert not profile.extrapolated


def test_colength_profile_degree_identity():
    # intersection degree = level degree - colength, per level
    for point in fiber_points(3):
        profile = colength_profile(CTX3, point, 2, -1)
        level_degrees = {1: 4, 2: 3}
        for level in (1, 2):
            assert (
                profile.intersection_degrees[level]
                == level_degrees[level] - profile.colengths[level]
            )


def test_fiber_polygon_extrapolation_warns():
    ctx = LocalContext.default(2)
    with pytest.warns(ExtrapolationWarning):
        pg = fiber_polygon(ctx, FiberPoint((1, 0), 2), 2, -1)
    assert pg.vertices == ((0, 0), (1, 0), (2, -2))
    with pytest.warns(ExtrapolationWarning):
        fiber_polygon(CTX3, FiberPoint((1, 0, 0), 3), 3, -1)
