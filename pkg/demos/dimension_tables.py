"""Degree bookkeeping and the assembled stratum dimension table.

Run with:  python3 demos/dimension_tables.py
"""

from frobstrat import (
    CurveContext,
    b1_splits,
    canonical_polygon,
    canonical_stratum_dim,
    filtration_degrees,
    pushforward_type,
    stratum_table,
    sun_slope_bound,
)

# Pushing a line bundle of degree -1 forward under Frobenius (p = 3,
# genus 2) produces a rank-3 bundle of degree 1; its pullback carries the
# canonical filtration with line pieces of degrees -1, 1, 3.
print("direct image of type (1, -1):", pushforward_type(1, -1, 3, 2))
print("graded filtration degrees   :", filtration_degrees(3, 2, -1))

# Slope bound certifying that every rank-3 degree-0 subsheaf of such a
# direct image is semistable: proper subsheaves have nonpositive slope.
for rk in (1, 2):
    print(f"slope bound for rank-{rk} subsheaves: {sun_slope_bound(3, 2, -1, rk)}")

# The assembled table: fiber, parameter-space and moduli dimensions per
# stratum, with enumerated point counts next to their closed forms.
print("\nstratum table at (p, g, r, d) = (3, 2, 3, 0):")
header = f"{'id':<4}{'fiber':<7}{'quot':<6}{'moduli':<8}{'counts'}"
print(header)
for row in stratum_table(CurveContext()):
    fiber = "-" if row.fiber_dim is None else row.fiber_dim
    quot = "-" if row.quot_dim is None else row.quot_dim
    print(f"{row.polygon_id:<4}{fiber:<7}{quot:<6}{row.moduli_dim:<8}{row.counts}")

# The extremal stratum exists at every (p, g, r): its polygon has all
# slope drops equal to 2g - 2 and its dimension is r^2 (g - 1) + 1.
print("\nextremal strata for r = 1, 2 at a few (p, g):")
for p, g in [(3, 2), (5, 2), (3, 3)]:
    for r in (1, 2):
        pg = canonical_polygon(p, g, r, 0)
        print(
            f"  (p={p}, g={g}, r={r}): dim {canonical_stratum_dim(r, g)}, "
            f"polygon {pg}"
        )

# Whether the pullback of the locally-exact-differentials sheaf splits is
# the congruence p | (g - 1); at (3, 2) it does not, at (3, 4) it does.
print("\nsplitting criterion p | (g-1):")
for p, g in [(3, 2), (3, 4), (5, 6), (7, 8)]:
    print(f"  (p={p}, g={g}): {b1_splits(p, g)}")
