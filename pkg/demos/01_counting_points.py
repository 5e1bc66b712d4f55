"""Counting rational points on a X^n Y^n - X^n - Y^n + b = 0.

Walks one curve from parameter validation to the model count: the affine
solutions, the special points on the axes, and the rational branches over
the two singular points at infinity.
"""

from gfcurves import count_points, count_points_fast, make_curve, make_field, special_points

ctx = make_field(31)
curve = make_curve(ctx, n=5, a=5, b=5)
print(f"curve over F_{ctx.p}: n={curve.n}, a={curve.a}, b={curve.b}")
print(f"genus (n-1)^2 = {curve.g},  k = (q-1)/n = {curve.k}")

report = count_points(curve)          # exhaustive double loop
fast = count_points_fast(curve)       # one pass over the n-th power classes
assert report == fast
print()
print("affine solutions:            ", report.affine_total)
print("off the axes:                ", report.off_axes)
print("off axes and off X=Y:        ", report.off_axes_off_diag)
print("roots of T^n = b      (n1):  ", report.n1)
print("roots of T^n = 1/a    (n2):  ", report.n2)
print("rational branches at infinity:", report.branches_at_infinity_rational)
print("points of the nonsingular model:", report.model_total)

# with b = 1 every n-th root of unity gives an inflection on each axis
curve2 = make_curve(ctx, n=5, a=3, b=1)
print()
print("special points of the curve with b = 1:")
for sp in special_points(curve2):
    where = sp.point if sp.point is not None else sp.center
    print(f"  {sp.kind:16} at {where}, tangent {sp.tangent_axis} = {sp.tangent_value}")
