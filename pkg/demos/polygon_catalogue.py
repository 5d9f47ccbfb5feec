"""Walk through the polygon layer: enumeration, order, duals, extremals.

Run with:  python3 demos/polygon_catalogue.py
"""

from frobstrat import (
    canonical_polygon,
    dominates,
    dual_polygon,
    enumerate_frobenius_polygons,
    integer_heights,
    is_canonical,
    reference_label,
    slopes,
)

# In characteristic 3, for semistable bundles of rank 3 and degree 0 on a
# genus-2 curve, the destabilized pull-back polygons are pinned down by two
# constraints: successive slope drops of at most 2g - 2 = 2, and a total
# slope spread of at most min(r-1, p-1)(2g - 2) = 4.  Enumerating every
# integral convex chain that satisfies them yields exactly four shapes.
catalogue = enumerate_frobenius_polygons(p=3, g=2, r=3, d=0)
print(f"admissible destabilized shapes: {len(catalogue)}")
for pg in catalogue:
    label = reference_label(pg)
    print(f"  {label}: {pg}   slopes {[str(s) for s in slopes(pg)]}")

# The order that matters for closures is pointwise domination of the
# height functions.  P4 sits on top, P3 below it, and P1, P2 are
# incomparable: each beats the other at a different abscissa.
print("\nheights at ranks 0..3:")
for pg in catalogue:
    print(f"  {reference_label(pg)}: {[str(h) for h in integer_heights(pg)]}")
print("\ndomination relations:")
for a in catalogue:
    above = [reference_label(b) for b in catalogue if a != b and dominates(a, b)]
    print(f"  {reference_label(a)} strictly dominates {above or 'nothing'}")

# Dualizing a bundle reflects its polygon; on the catalogue this swaps
# P1 and P2 and fixes P3 and P4.
print("\nduals:")
for pg in catalogue:
    print(f"  dual({reference_label(pg)}) = {reference_label(dual_polygon(pg))}")

# The most destabilized shape is exactly the one realised by direct images
# of line bundles: the extremal polygon with all slope drops equal to
# 2g - 2.  At (p, g) = (3, 2) that is P4.
extremal = canonical_polygon(p=3, g=2, r=1, d=0)
print(f"\nextremal polygon at (3, 2): {extremal} = {reference_label(extremal)}")
print(f"is_canonical over the catalogue: "
      f"{[ (reference_label(pg), is_canonical(pg, 3, 2)) for pg in catalogue ]}")
