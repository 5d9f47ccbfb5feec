"""Formal-local model of Frobenius push/pull at a smooth point.

The complete local ring at the point is k[[t]], and Frobenius makes it a
free module of rank p over the subring A = k[[t^p]].  Pulling the direct
image back again yields the module k[[t]] ⊗_A k[[t]], whose elements are
kept in a normal form with left exponents below p (t^p lies in A and may
cross the tensor sign).  The canonical filtration of the pullback is
generated level by level by powers of tau = t⊗1 - 1⊗t, acting through the
right factor.

A colength-one A-submodule V of k[[t]] is named by a point (λ0 : ... :
λ_{p-1}) of P^{p-1}: V is the kernel of the functional sending a series to
Σ λ_i times the constant term of its i-th component in the basis 1, t,
..., t^{p-1}.  Tensoring the quotient map with k[[t]] lands in
k[t]/(t^p), so membership of a pullback element in V ⊗_A k[[t]] is the
vanishing of a precision-p series, and the colengths that locate the
pullback of a colength-one subsheaf against the filtration levels reduce
to ranks of small matrices over F_p.  Those ranks drive the polygon
classification at the end of the module.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import comb

from .algebra import FpMatrix, TruncSeries, matrix_rank, require_prime
from .errors import (
    ExtrapolationWarning,
    InvalidLevel,
    InvalidParameters,
    ModulusMismatch,
    PrecisionExhausted,
)
from .polygons import LatticePolygon, make_polygon

#: Parameters (p, genus, line degree) the degree bookkeeping is exact for.
REFERENCE_PARAMETERS = (3, 2, -1)


@dataclass(frozen=True)
class LocalContext:
    """Ambient data of the local model: the prime p and a working precision.

    Right exponents live below ``precision``; membership tests for the top
    filtration level need products up to t^(2p-1), hence the hard floor
    precision >= 2p.
    """

    p: int
    precision: int

    def __post_init__(self) -> None:
        require_prime(self.p)
        if self.precision < 2 * self.p:
            raise InvalidParameters(
                f"precision must be at least 2p = {2 * self.p}, "
                f"got {self.precision}"
            )

    @classmethod
    def default(cls, p: int) -> LocalContext:
        """Context at the default precision 3p (a full layer of slack)."""
        return cls(p, 3 * p)


@dataclass(frozen=True)
class PullbackElement:
    """Element of k[[t]] ⊗_A k[[t]] in normal form.

    ``coeffs[i][j]`` is the coefficient of t^i ⊗ t^j with 0 <= i < p and
    0 <= j < precision; any monomial with left exponent >= p has been
    rewritten by moving t^p across the tensor sign, and right exponents at
    or past the precision are truncated.  Normal form is unique, so
    dataclass equality decides equality of elements.
    """

    coeffs: tuple[tuple[int, ...], ...]
    modulus: int

    def __post_init__(self) -> None:
        require_prime(self.modulus)
        if len(self.coeffs) != self.modulus:
            raise InvalidParameters("coefficient grid must have p rows")
        width = len(self.coeffs[0])
        if any(len(row) != width for row in self.coeffs):
            raise InvalidParameters("coefficient rows must share one length")
        reduced = tuple(
            tuple(int(c) % self.modulus for c in row) for row in self.coeffs
        )
        object.__setattr__(self, "coeffs", reduced)

    @property
    def precision(self) -> int:
        return len(self.coeffs[0])

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.coeffs)


@dataclass(frozen=True)
class FiberPoint:
    """Point (λ0 : ... : λ_{p-1}) of P^{p-1}(F_p) naming a colength-one
    submodule of k[[t]].

    Stored in projective normal form: the first nonzero coordinate is
    scaled to 1, so dataclass equality decides projective equality.
    """

    lambdas: tuple[int, ...]
    modulus: int

    def __post_init__(self) -> None:
        require_prime(self.modulus)
        p = self.modulus
        if len(self.lambdas) != p:
            raise InvalidParameters(
                f"need exactly p = {p} coordinates, got {len(self.lambdas)}"
            )
        reduced = [int(v) % p for v in self.lambdas]
        lead = next((v for v in reduced if v), None)
        if lead is None:
            raise InvalidParameters("coordinates must not all vanish")
        inv = pow(lead, p - 2, p)
        object.__setattr__(
            self, "lambdas", tuple((v * inv) % p for v in reduced)
        )


def fiber_points(p: int) -> tuple[FiberPoint, ...]:
    """All points of P^{p-1}(F_p) in a fixed lexicographic order."""
    require_prime(p)
    points: list[FiberPoint] = []
    for lead in range(p):
        tail_len = p - 1 - lead
        for idx in range(p**tail_len):
            tail = []
            rest = idx
            for _ in range(tail_len):
                rest, digit = divmod(rest, p)
                tail.append(digit)
            lambdas = (0,) * lead + (1,) + tuple(reversed(tail))
            points.append(FiberPoint(lambdas, p))
    return tuple(points)


def element_from_monomials(ctx: LocalContext, terms) -> PullbackElement:
    """Normal form of a sum of monomials (left_exp, right_exp, coefficient).

    Left exponents are reduced below p by moving t^p across the tensor
    sign; right exponents landing at or past the precision are truncated.
    """
    p, n = ctx.p, ctx.precision
    grid = [[0] * n for _ in range(p)]
    for left, right, coef in terms:
        left, right = int(left), int(right)
        if left < 0 or right < 0:
            raise InvalidParameters("monomial exponents must be nonnegative")
        carry, left = divmod(left, p)
        right += p * carry
        if right < n:
            grid[left][right] = (grid[left][right] + int(coef)) % p
    return PullbackElement(tuple(tuple(row) for row in grid), p)


def tau_power(ctx: LocalContext, m: int) -> PullbackElement:
    """Normal form of (t⊗1 - 1⊗t)^m, the generator of filtration level m."""
    if not 0 <= m <= ctx.p - 1:
        raise InvalidLevel(f"power must lie in [0, {ctx.p - 1}], got {m}")
    terms = [(m - k, k, (-1) ** k * comb(m, k)) for k in range(m + 1)]
    return element_from_monomials(ctx, terms)


def right_multiply(element: PullbackElement, j: int) -> PullbackElement:
    """Multiply by 1⊗t^j: shift right exponents, left exponents unchanged.

    Raises :class:`PrecisionExhausted` if any nonzero coefficient would be
    pushed to a right exponent at or past the precision, so results are
    never silently wrong.
    """
    if j < 0:
        raise InvalidParameters(f"shift must be nonnegative, got {j}")
    if j == 0:
        return element
    n = element.precision
    cut = max(n - j, 0)
    if any(any(row[cut:]) for row in element.coeffs):
        raise PrecisionExhausted(
            f"shift by {j} overflows precision {n}; rebuild the context "
            "with a larger precision"
        )
    pad = (0,) * min(j, n)
    shifted = tuple(pad + row[:cut] for row in element.coeffs)
    return PullbackElement(shifted, element.modulus)


def phi_image(element: PullbackElement, point: FiberPoint) -> TruncSeries:
    """Image of the element in k[t]/(t^p) under the tensored functional.

    The element lies in the submodule V ⊗_A k[[t]] named by ``point`` if
    and only if the returned precision-p series vanishes.
    """
    if element.modulus != point.modulus:
        raise ModulusMismatch(
            f"element over F_{element.modulus}, point over F_{point.modulus}"
        )
    p = element.modulus
    coeffs = tuple(
        sum(lam * element.coeffs[i][j] for i, lam in enumerate(point.lambdas))
        for j in range(p)
    )
    return TruncSeries(coeffs, p)


def submodule_contains(element: PullbackElement, point: FiberPoint) -> bool:
    """Membership of the element in V ⊗_A k[[t]]."""
    return phi_image(element, point).is_zero()


def submodule_contains_monomial(point: FiberPoint, j: int) -> bool:
    """Whether t^j lies in the colength-one submodule named by ``point``.

    Holds exactly when j >= p (those monomials generate the part of V
    forced by the A-module structure) or the j-th coordinate vanishes.
    """
    if j < 0:
        raise InvalidParameters(f"exponent must be nonnegative, got {j}")
    return j >= point.modulus or point.lambdas[j] == 0


def colength(ctx: LocalContext, point: FiberPoint, level: int) -> int:
    """Codimension of (V ⊗_A k[[t]]) ∩ (level stalk) inside the level stalk.

    The stalk of filtration level l is free over k[[t]] on the tau powers
    tau^l, ..., tau^(p-1); its image in k[t]/(t^p) under the tensored
    functional is spanned by the images of tau^m t^j for 0 <= j < p (for
    j >= p the image dies), and the colength is the F_p rank of that span.
    """
    p = ctx.p
    if not 1 <= level <= p - 1:
        raise InvalidLevel(f"level must lie in [1, {p - 1}], got {level}")
    if point.modulus != p:
        raise ModulusMismatch(
            f"context over F_{p}, point over F_{point.modulus}"
        )
    rows = []
    for m in range(level, p):
        base = tau_power(ctx, m)
        for j in range(p):
            rows.append(phi_image(right_multiply(base, j), point).coeffs)
    return matrix_rank(FpMatrix(tuple(rows), p))


@dataclass(frozen=True)
class ColengthProfile:
    """Colengths and intersection degrees of one fiber point, per level.

    ``colengths[l]`` is the stalk codimension at level l and
    ``intersection_degrees[l]`` the resulting degree of the intersection
    of the pulled-back subsheaf with level l: the level degree
    Σ_{m=l}^{p-1} (line_degree + m(2g - 2)) minus the colength.
    ``extrapolated`` marks parameters away from the reference
    configuration (3, 2, -1), where the degree bookkeeping is a formal
    extension rather than an established classification.
    """

    modulus: int
    genus: int
    line_degree: int
    colengths: dict[int, int]
    intersection_degrees: dict[int, int]
    extrapolated: bool


def level_degree(p: int, genus: int, line_degree: int, level: int) -> int:
    """Degree of filtration level ``level``: the sum of its graded degrees."""
    return sum(line_degree + m * (2 * genus - 2) for m in range(level, p))


def colength_profile(
    ctx: LocalContext, point: FiberPoint, genus: int, line_degree: int
) -> ColengthProfile:
    """Colengths at every level together with the induced degrees."""
    if genus < 2:
        raise InvalidParameters(f"genus must be at least 2, got {genus}")
    p = ctx.p
    cols = {lv: colength(ctx, point, lv) for lv in range(1, p)}
    inter = {
        lv: level_degree(p, genus, line_degree, lv) - cols[lv]
        for lv in range(1, p)
    }
    return ColengthProfile(
        modulus=p,
        genus=genus,
        line_degree=line_degree,
        colengths=cols,
        intersection_degrees=inter,
        extrapolated=(p, genus, line_degree) != REFERENCE_PARAMETERS,
    )


def fiber_polygon(
    ctx: LocalContext, point: FiberPoint, genus: int, line_degree: int
) -> LatticePolygon:
    """Full pull-back polygon of the colength-one subsheaf named by ``point``.

    Assembles the chain (0, 0), (p - l, deg of the level-l intersection)
    for l = p-1, ..., 1, then the endpoint (p, p * subsheaf degree), and
    returns its upper convex envelope in canonical form.  Chain points
    from levels that do not appear in the destabilizing filtration fall
    strictly below the envelope and drop out, which is what shortens the
    chain in the least destabilized case.

    Outside the reference configuration (p, g, line degree) = (3, 2, -1)
    the result is flagged with :class:`ExtrapolationWarning`.
    """
    profile = colength_profile(ctx, point, genus, line_degree)
    if profile.extrapolated:
        warnings.warn(
            f"polygon for (p, g, line degree) = "
            f"({ctx.p}, {genus}, {line_degree}) extrapolates the reference "
            f"configuration {REFERENCE_PARAMETERS}",
            ExtrapolationWarning,
            stacklevel=2,
        )
    p = ctx.p
    subsheaf_degree = (line_degree + (p - 1) * (genus - 1)) - 1
    chain = [(0, 0)]
    for lv in range(p - 1, 0, -1):
        chain.append((p - lv, profile.intersection_degrees[lv]))
    chain.append((p, p * subsheaf_degree))
    return make_polygon(_upper_hull(chain))


def _upper_hull(points):
    """Upper convex envelope of points with strictly increasing abscissae."""
    hull: list[tuple[int, int]] = []
    for pt in points:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) >= 0:
            hull.pop()
        hull.append(pt)
    return hull


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
