"""Every upper bound on one curve, next to the exact count.

The Hasse-Weil bound needs only (q, genus); the degree-s bounds improve on
it for small s when the series degree 2n(s-1) stays below p; the cube-root
bound trades the choice of s for a closed form in k = (p-1)/n alone.
"""

from gfcurves import count_points_fast, hasse_weil, make_curve, make_field, sv_bound, w_bound

ctx = make_field(73)
curve = make_curve(ctx, n=3, a=2, b=3)
exact = count_points_fast(curve).model_total
print(f"curve over F_73, n=3: exact model count = {exact}")
print()

hw = hasse_weil(curve.q, curve.g)
print(f"hasse_weil      = {hw.value}")

for s in range(2, curve.n):
    rep = sv_bound(curve, s)
    tag = "applicable" if rep.applicable else f"flagged {rep.reasons}"
    print(f"sv_bound(s={s})   = {rep.value}  [{tag}]  "
          f"N={rep.intermediates['N']} delta={rep.intermediates['delta']}")

w = w_bound(curve)
print(f"w_bound         = {w.value}  [k={w.intermediates['k']}, "
      f"threshold={w.intermediates['threshold']}]")
print()
print("each bound dominates the exact count:",
      all(v >= exact for v in (hw.value, w.value)
          if v is not None))
