"""Classify every point of the colength-one fiber and tally the strata.

Run with:  python3 demos/fiber_census_demo.py
"""

import warnings

from frobstrat import (
    ExtrapolationWarning,
    FiberPoint,
    LocalContext,
    fiber_census,
    fiber_points,
    fiber_polygon,
    reference_label,
)

# Each point of P^2(F_3) names a colength-one submodule of the stalk of
# the direct image; classifying all 13 gives the exact stratification of
# the fiber: an affine plane of P2 points, an affine line of P3 points,
# and the single most-degenerate P4 point.
ctx = LocalContext.default(3)
print("point -> stratum:")
for point in fiber_points(3):
    pg = fiber_polygon(ctx, point, 2, -1)
    print(f"  ({':'.join(map(str, point.lambdas))}) -> {reference_label(pg)}")

census = fiber_census(3, 2, -1)
print(f"\nstrict counts : {census.strict_counts}   forms {census.strict_forms}")
print(f"closed counts : {census.closed_counts}   forms {census.closed_forms}")
print(f"total         : {census.total} = q^2 + q + 1 at q = {census.field_size}")

# The same stalk machinery runs at any prime.  Away from the reference
# configuration the degree bookkeeping is an extrapolation and says so;
# here is the rank-2, characteristic-2 picture for comparison.
print("\nextrapolated classification at p = 2 (flagged, not established):")
ctx2 = LocalContext.default(2)
with warnings.catch_warnings():
    warnings.simplefilter("ignore", ExtrapolationWarning)
    for lambdas in [(1, 0), (1, 1), (0, 1)]:
        pg = fiber_polygon(ctx2, FiberPoint(lambdas, 2), 2, -1)
        print(f"  ({':'.join(map(str, lambdas))}) -> {pg}")
