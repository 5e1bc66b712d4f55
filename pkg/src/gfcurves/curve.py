"""The plane curve g(X,Y) = a*X^n*Y^n - X^n - Y^n + b over F_q.

Validated parameters, exact point counts on the affine curve and on the
nonsingular model, the inventory of special points (inflections on the axes
and rational branches over the two singular points at infinity), and a
smoothness sweep over all affine rational points.

Two counting routes are provided.  `count_points` is the plain exhaustive
double loop over F_q x F_q.  `count_points_fast` collapses the loop over the
n-th power classes: writing u = x^n, the equation becomes
y^n = (u - b)/(a*u - 1), so each of the (q-1)/n nonzero classes contributes
n * #roots.  Both are exact; the test suite pins them equal.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, asdict
from typing import NamedTuple

from .errors import DegenerateParams, DegreeTooSmall, IncompatibleOrder, SingularAffinePoint
from .ffield import FieldCtx, inverse_table


@dataclass(frozen=True)
class CurveParams:
    """Validated (field, n, a, b) with the derived genus and k = (q-1)/n."""

    ctx: FieldCtx
    n: int
    a: object
    b: object
    g: int
    k: int

    @property
    def p(self) -> int:
        return self.ctx.p

    @property
    def q(self) -> int:
        return self.ctx.q


@dataclass(frozen=True)
class CountReport:
    """Exact point counts; model_total counts points of the nonsingular model."""

    affine_total: int
    off_axes: int
    off_axes_off_diag: int
    n1: int
    n2: int
    branches_at_infinity_rational: int
    model_total: int

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=False)


class SpecialPoint(NamedTuple):
    kind: str           # "inflection" | "infinite-branch"
    center: str         # "affine" | "P1" | "P2"
    point: tuple | None  # (x, y) for inflections, None at infinity
    tangent_axis: str   # "X" or "Y": the tangent line is axis = tangent_value
    tangent_value: object


def make_curve(ctx: FieldCtx, n: int, a, b) -> CurveParams:
    """Validate parameters and derive genus (n-1)^2 and k = (q-1)/n."""
    if n < 2:
        raise DegreeTooSmall(f"n = {n} < 2")
    if (ctx.q - 1) % n:
        raise IncompatibleOrder(f"n = {n} does not divide q-1 = {ctx.q - 1}")
    a = ctx.element(a) if isinstance(a, (int, list)) else a
    b = ctx.element(b) if isinstance(b, (int, list)) else b
    if ctx.is_zero(a) or ctx.is_zero(b) or ctx.mul(a, b) == ctx.one:
        raise DegenerateParams("need a != 0, b != 0 and a*b != 1")
    return CurveParams(ctx=ctx, n=n, a=a, b=b, g=(n - 1) ** 2, k=(ctx.q - 1) // n)


def equation_value(curve: CurveParams, x, y):
    """g(x, y) = a*x^n*y^n - x^n - y^n + b."""
    ctx, n = curve.ctx, curve.n
    xn, yn = ctx.pow(x, n), ctx.pow(y, n)
    v = ctx.mul(curve.a, ctx.mul(xn, yn))
    v = ctx.sub(v, xn)
    v = ctx.sub(v, yn)
    return ctx.add(v, curve.b)


# ---------------------------------------------------------------------------
# n-th power class tables, cached per (field, n)

class _ClassTables(NamedTuple):
    power: object        # x -> x^n               (list for m=1, dict else)
    power_down: object   # x -> x^(n-1)           (list for m=1, None else)
    root_count: object   # v -> #{x : x^n = v}
    preimages: object    # v -> sorted list of x with x^n = v
    nonzero_powers: list  # distinct nonzero n-th powers, canonical order
    inv: object          # multiplicative inverse table (m=1 only)


_TABLES_CACHE: dict = {}


def class_tables(ctx: FieldCtx, n: int) -> _ClassTables:
    key = (ctx, n)
    hit = _TABLES_CACHE.get(key)
    if hit is not None:
        return hit
    if ctx.m == 1:
        p = ctx.p
        power = [pow(x, n, p) for x in range(p)]
        power_down = [pow(x, n - 1, p) for x in range(p)]
        root_count = [0] * p
        preimages = [[] for _ in range(p)]
        for x, v in enumerate(power):
            root_count[v] += 1
            preimages[v].append(x)
        nonzero = sorted({v for v in power[1:]})
        tables = _ClassTables(power, power_down, root_count, preimages, nonzero,
                              inverse_table(p))
    else:
        power = {}
        root_count = {}
        preimages = {}
        for x in ctx.elements():
            v = ctx.pow(x, n)
            power[x] = v
            root_count[v] = root_count.get(v, 0) + 1
            preimages.setdefault(v, []).append(x)
        nonzero = sorted((v for v in root_count if v != ctx.zero), key=ctx.encode)
        tables = _ClassTables(power, None, root_count, preimages, nonzero, None)
    _TABLES_CACHE[key] = tables
    return tables


# ---------------------------------------------------------------------------


def count_points(curve: CurveParams) -> CountReport:
    """Exhaustive double loop over F_q^2 (reference route)."""
    ctx, n = curve.ctx, curve.n
    if ctx.m == 1:
        p, a, b = ctx.p, curve.a, curve.b
        xn = [pow(x, n, p) for x in range(p)]
        affine = off_axes = off_diag = 0
        for x in range(p):
            ax = (a * xn[x] - 1) % p          # y^n * ax = bx on the curve
            bx = (xn[x] - b) % p
            for y in range(p):
                if (ax * xn[y] - bx) % p == 0:
                    affine += 1
                    if x and y:
                        off_axes += 1
                        if x != y:
                            off_diag += 1
    else:
        els = list(ctx.elements())
        pw = {x: ctx.pow(x, n) for x in els}
        a, b, zero = curve.a, curve.b, ctx.zero
        affine = off_axes = off_diag = 0
        for x in els:
            for y in els:
                v = ctx.add(ctx.sub(ctx.sub(ctx.mul(a, ctx.mul(pw[x], pw[y])),
                                            pw[x]), pw[y]), b)
                if v == zero:
                    affine += 1
                    if x != zero and y != zero:
                        off_axes += 1
                        if x != y:
                            off_diag += 1
    t = class_tables(ctx, n)
    n1 = _root_count_of(ctx, t, curve.b)
    n2 = _root_count_of(ctx, t, ctx.inv(curve.a))
    return CountReport(affine, off_axes, off_diag, n1, n2, 2 * n2, affine + 2 * n2)


def _root_count_of(ctx: FieldCtx, tables: _ClassTables, v) -> int:
    if ctx.m == 1:
        return tables.root_count[v]
    return tables.root_count.get(v, 0)


def count_points_fast(curve: CurveParams) -> CountReport:
    """Single pass over the n-th power classes; exact, O(q/n) per curve."""
    ctx, n = curve.ctx, curve.n
    t = class_tables(ctx, n)
    if ctx.m == 1:
        p, a, b = ctx.p, curve.a, curve.b
        rc, inv = t.root_count, t.inv
        n1 = rc[b]
        n2 = rc[inv[a]]
        total = n1  # x = 0 row: y^n = b
        diag = 0
        for u in t.nonzero_powers:
            d = (a * u - 1) % p
            if d:
                total += n * rc[(u - b) * inv[d] % p]
            if (a * u * u - 2 * u + b) % p == 0:
                diag += 1
    else:
        a, b = curve.a, curve.b
        rc = t.root_count
        n1 = rc.get(b, 0)
        n2 = rc.get(ctx.inv(a), 0)
        total = n1
        diag = 0
        two = ctx.add(ctx.one, ctx.one)
        for u in t.nonzero_powers:
            d = ctx.sub(ctx.mul(a, u), ctx.one)
            if d != ctx.zero:
                total += n * rc.get(ctx.mul(ctx.sub(u, b), ctx.inv(d)), 0)
            w = ctx.add(ctx.sub(ctx.mul(a, ctx.mul(u, u)), ctx.mul(two, u)), b)
            if w == ctx.zero:
                diag += 1
    off_axes = total - 2 * n1
    off_diag = off_axes - n * diag
    return CountReport(total, off_axes, off_diag, n1, n2, 2 * n2, total + 2 * n2)


def special_points(curve: CurveParams) -> list[SpecialPoint]:
    """Rational inflections (xi,0), (0,xi) with xi^n = b, and rational
    tangent directions c with c^n = 1/a of the branches at infinity."""
    ctx, n = curve.ctx, curve.n
    t = class_tables(ctx, n)
    zero = ctx.zero
    out = []
    if ctx.m == 1:
        xi_list = t.preimages[curve.b]
        c_list = t.preimages[t.inv[curve.a]]
    else:
        xi_list = t.preimages.get(curve.b, [])
        c_list = t.preimages.get(ctx.inv(curve.a), [])
    for xi in xi_list:
        out.append(SpecialPoint("inflection", "affine", (xi, zero), "X", xi))
        out.append(SpecialPoint("inflection", "affine", (zero, xi), "Y", xi))
    for c in c_list:
        out.append(SpecialPoint("infinite-branch", "P1", None, "Y", c))
        out.append(SpecialPoint("infinite-branch", "P2", None, "X", c))
    return out


@dataclass(frozen=True)
class SmoothnessReport:
    points_checked: int
    clean: bool


def smoothness_scan(curve: CurveParams) -> SmoothnessReport:
    """Check (g_X, g_Y) != (0,0) at every affine rational point.

    g_X = n*x^(n-1)*(a*y^n - 1) and g_Y = n*y^(n-1)*(a*x^n - 1); a violation
    raises SingularAffinePoint since it would falsify the curve's smoothness
    inventory for these parameters.
    """
    ctx, n = curve.ctx, curve.n
    t = class_tables(ctx, n)
    a, b = curve.a, curve.b
    checked = 0
    if ctx.m == 1:
        p = ctx.p
        pw, pd = t.power, t.power_down
        for x, y in _affine_points(curve, t):
            gx = n * pd[x] * (a * pw[y] - 1) % p
            gy = n * pd[y] * (a * pw[x] - 1) % p
            if gx == 0 and gy == 0:
                raise SingularAffinePoint(f"singular affine point {(x, y)} on {curve}")
            checked += 1
    else:
        for x, y in _affine_points(curve, t):
            gx = ctx.mul(ctx.mul(ctx.element(n), ctx.pow(x, n - 1)),
                         ctx.sub(ctx.mul(a, ctx.pow(y, n)), ctx.one))
            gy = ctx.mul(ctx.mul(ctx.element(n), ctx.pow(y, n - 1)),
                         ctx.sub(ctx.mul(a, ctx.pow(x, n)), ctx.one))
            if ctx.is_zero(gx) and ctx.is_zero(gy):
                raise SingularAffinePoint(f"singular affine point {(x, y)} on {curve}")
            checked += 1
    return SmoothnessReport(points_checked=checked, clean=True)


def _affine_points(curve: CurveParams, t: _ClassTables):
    """Enumerate all affine rational points via the class tables."""
    ctx, n = curve.ctx, curve.n
    a, b = curve.a, curve.b
    if ctx.m == 1:
        p = ctx.p
        for y in t.preimages[b]:
            yield 0, y
        for u in t.nonzero_powers:
            d = (a * u - 1) % p
            if d == 0:
                continue
            c = (u - b) * t.inv[d] % p
            for x in t.preimages[u]:
                for y in t.preimages[c]:
                    yield x, y
    else:
        for y in t.preimages.get(b, []):
            yield ctx.zero, y
        for u in t.nonzero_powers:
            d = ctx.sub(ctx.mul(a, u), ctx.one)
            if d == ctx.zero:
                continue
            c = ctx.mul(ctx.sub(u, b), ctx.inv(d))
            for x in t.preimages[u]:
                for y in t.preimages.get(c, []):
                    yield x, y
