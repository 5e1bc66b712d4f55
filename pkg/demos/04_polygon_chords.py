"""Chords of an affinely regular polygon through a point, vs curve counts.

The k-gon with vertices (g^i, g^-i) sits on the hyperbola XY = 1.  The
classical dictionary says the number of its chords through P = (a, b)
is the restricted point count of the curve with parameters (a, b),
divided by 2n^2.  Running the dictionary exactly turns up a correction:
each tangent of the hyperbola at a k-th root of unity passing through P
contributes n^2 - n extra curve points, so the exact relation is

    N_p = 2 n^2 n_P + (n^2 - n) D.

The classical form holds exactly when D = 0, and the 2n^2 identity is
restored by excluding all points with x^n = y^n rather than only x = y.
"""

from gfcurves import build_polygon, chords_through, make_field, verify_prop41

ctx = make_field(13)
poly = build_polygon(ctx, k=4)
print(f"4-gon on XY=1 over F_13: vertices {poly.vertices}")
print(f"chords through (6, 2): {chords_through(poly, (6, 2))}")
print()

for point in [(6, 2), (2, 3), (3, 12)]:
    rep = verify_prop41(13, 3, point)
    print(f"P={point}: n_P={rep.n_p}  N_p={rep.restricted}  2n^2*n_P={rep.lhs}  "
          f"tangents-through-P={rep.tangency}")
    print(f"   classical identity: {'holds' if rep.holds else 'FAILS'};  "
          f"decomposition exact: {rep.decomposition_exact};  "
          f"refined (x^n != y^n) identity: {'holds' if rep.refined_holds else 'FAILS'}")
