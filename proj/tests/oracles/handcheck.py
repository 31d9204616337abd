#!/usr/bin/env python3
"""Independent hand-check of the worked fixtures.

Everything here is computed with fractions.Fraction and elementary planar
geometry (monotone-chain hull, Sutherland-Hodgman clipping, shoelace area),
sharing no code with the C++ library. The values printed by this script are
the ones frozen into the C++ unit and acceptance tests.

Run with --check to assert the frozen constants (exit status 1 on mismatch).
"""

import itertools
import json
import sys
from fractions import Fraction as F


def hull(points):
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def area(poly):
    s = F(0)
    for i in range(len(poly)):
        x0, y0 = poly[i]
        x1, y1 = poly[(i + 1) % len(poly)]
        s += x0 * y1 - x1 * y0
    return abs(s) / 2


def clip(poly, a, b):
    """Clip a convex polygon (ccw list) by a.x <= b."""
    out = []
    n = len(poly)
    for i in range(n):
        p, q = poly[i], poly[(i + 1) % n]
        fp = a[0] * p[0] + a[1] * p[1] - b
        fq = a[0] * q[0] + a[1] * q[1] - b
        if fp <= 0:
            out.append(p)
        if (fp < 0 < fq) or (fq < 0 < fp):
            s = fp / (fp - fq)
            out.append((p[0] + s * (q[0] - p[0]), p[1] + s * (q[1] - p[1])))
    return hull(out)


def quadrant_truncated(complement_vertices, t):
    """K ∩ {x + y <= t} for K = conv(vertices) + quadrant."""
    big = [(F(0), t + 100), (t + 100, F(0)), (t + 100, t + 100)]
    pts = list(complement_vertices)
    for v in complement_vertices:
        pts += [(v[0] + big[0][1], v[1]), (v[0], v[1] + big[1][0])]
    pts += big
    poly = hull(pts)
    return clip(poly, (F(1), F(1)), t)


def co_area(complement_vertices, t):
    sector = area([(F(0), F(0)), (t, F(0)), (F(0), t)])
    return sector - area(quadrant_truncated(complement_vertices, t))


def minkowski(p, q):
    return hull([(a[0] + b[0], a[1] + b[1]) for a in p for b in q])


def solve(rows, rhs):
    n = len(rows[0])
    m = [list(r) + [v] for r, v in zip(rows, rhs)]
    # normal equations keep the oracle a plain exact square solve
    ata = [[sum(m[k][i] * m[k][j] for k in range(len(m))) for j in range(n + 1)] for i in range(n)]
    for c in range(n):
        piv = next(r for r in range(c, n) if ata[r][c] != 0)
        ata[c], ata[piv] = ata[piv], ata[c]
        for r in range(n):
            if r != c and ata[r][c] != 0:
                f = ata[r][c] / ata[c][c]
                ata[r] = [x - f * y for x, y in zip(ata[r], ata[c])]
    return [ata[i][n] / ata[i][i] for i in range(n)]


def fit_binary_quadratic(vol):
    """Coefficients (a, b, c) of a λ1² + b λ1λ2 + c λ2² from a 3x3 grid."""
    rows, rhs = [], []
    for l1, l2 in itertools.product([F(1), F(2), F(3)], repeat=2):
        rows.append([l1 * l1, l1 * l2, l2 * l2])
        rhs.append(vol(l1, l2))
    return solve(rows, rhs)


def box(w, h):
    return [(F(0), F(0)), (w, F(0)), (w, h), (F(0), h)]


def scale(poly, s):
    return [(s * x, s * y) for x, y in poly]


MASK = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15


def mix64(z):
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
    return z ^ (z >> 31)


def splitmix64(state, count):
    out = []
    for _ in range(count):
        state = (state + GAMMA) & MASK
        out.append(mix64(state))
    return out


def compute():
    out = {}
    out["splitmix64_seed_1234567"] = splitmix64(1234567, 5)
    out["splitmix64_stream_7_3"] = splitmix64(mix64(7 ^ mix64((3 + GAMMA) & MASK)), 3)
    unit_sq = box(F(1), F(1))
    rect = box(F(3), F(2))

    out["volume_rect_3x2"] = area(hull(rect))
    out["clip_trapezoid_volume"] = area(quadrant_truncated([(F(1), F(0)), (F(0), F(1))], F(3)))

    coeffs = fit_binary_quadratic(
        lambda l1, l2: area(minkowski(scale(unit_sq, l1), scale(rect, l2))))
    out["volpoly_square_rect"] = coeffs
    out["mixed_volume_square_rect"] = coeffs[1] / 2

    coeffs_h = fit_binary_quadratic(
        lambda l1, l2: area(minkowski(scale(unit_sq, l1), scale(box(F(2), F(2)), l2))))
    out["volpoly_square_homothetic"] = coeffs_h

    tri = [(F(1), F(0)), (F(0), F(1))]
    out["co_volume_triangle_t3"] = co_area(tri, F(3))
    out["co_volume_triangle_t5"] = co_area(tri, F(5))
    # A ⊕ A: complement K + K
    kk = [(a[0] + b[0], a[1] + b[1]) for a in tri for b in tri]
    out["co_sum_triangle_area"] = co_area(kk, F(10))
    # K1 ⊕ K2 with K2 = quadrant ∩ {2x + y >= 2} ∩ {x + 2y >= 2}
    k2 = [(F(2), F(0)), (F(2, 3), F(2, 3)), (F(0), F(2))]
    k12 = [(a[0] + b[0], a[1] + b[1]) for a in tri for b in k2]
    out["co_sum_mixed_area_t10"] = co_area(k12, F(10))
    out["co_sum_mixed_area_t17"] = co_area(k12, F(17))
    out["co_volume_k2"] = co_area(k2, F(10))

    # co volume polynomial of the unit-triangle family: interpolate a·λ² at λ = 1, 2, 3
    vals = [co_area([(l, F(0)), (F(0), l)], F(20)) for l in (F(1), F(2), F(3))]
    out["co_volpoly_triangle"] = [v / (l * l) for v, l in zip(vals, (1, 2, 3))]

    # homothetic triangle pair (legs 1 and 2): Vol_beta(λ1, λ2) fit
    def pair_vol(l1, l2):
        leg = l1 + 2 * l2
        return co_area([(leg, F(0)), (F(0), leg)], F(50))
    pair = fit_binary_quadratic(pair_vol)
    out["co_volpoly_pair"] = pair
    # B^C = (1/2!)·Hessian, Q^C Hessian = (2/2!)·Hessian
    a, b, c = pair
    hess = [[2 * a, b], [b, 2 * c]]
    out["co_af_pair_B"] = [[x / 2 for x in row] for row in hess]
    out["co_af_pair_Q"] = hess
    out["co_af_triangle_Q"] = [[2 * out["co_volpoly_triangle"][0]]]

    # lifted family of the unit triangle body: c = area(C ∩ {x+y <= 1})
    c = area([(F(0), F(0)), (F(1), F(0)), (F(0), F(1))])
    out["lift_c"] = c
    out["lift_c_prime"] = c  # d = 2: no marked points, c' = c
    out["lift_trapezoid_t3"] = area(quadrant_truncated(tri, F(3)))
    out["lift_pair_volume_11_t4"] = area(quadrant_truncated([(F(3), F(0)), (F(0), F(3))], F(4)))
    # Q_alpha Hessian of (2/2!)(c t² - λ²/2) in (λ, t) order
    out["lift_Q_alpha"] = [[-2 * out["co_volpoly_triangle"][0], F(0)], [F(0), 2 * c]]
    return out


FROZEN = {
    "splitmix64_seed_1234567": [6457827717110365317, 3203168211198807973, 9817491932198370423,
                                4593380528125082431, 16408922859458223821],
    "splitmix64_stream_7_3": [7250273413821410515, 16474944268897792596, 627910309507936648],
    "volume_rect_3x2": F(6),
    "clip_trapezoid_volume": F(4),
    "volpoly_square_rect": [F(1), F(5), F(6)],
    "mixed_volume_square_rect": F(5, 2),
    "volpoly_square_homothetic": [F(1), F(4), F(4)],
    "co_volume_triangle_t3": F(1, 2),
    "co_volume_triangle_t5": F(1, 2),
    "co_sum_triangle_area": F(2),
    "co_sum_mixed_area_t10": F(19, 6),
    "co_sum_mixed_area_t17": F(19, 6),
    "co_volume_k2": F(4, 3),
    "co_volpoly_triangle": [F(1, 2), F(1, 2), F(1, 2)],
    "co_volpoly_pair": [F(1, 2), F(2), F(2)],
    "co_af_pair_B": [[F(1, 2), F(1)], [F(1), F(2)]],
    "co_af_pair_Q": [[F(1), F(2)], [F(2), F(4)]],
    "co_af_triangle_Q": [[F(1)]],
    "lift_c": F(1, 2),
    "lift_c_prime": F(1, 2),
    "lift_trapezoid_t3": F(4),
    "lift_pair_volume_11_t4": F(7, 2),
    "lift_Q_alpha": [[F(-1), F(0)], [F(0), F(1)]],
}


def to_json(v):
    if isinstance(v, (F, int)):
        return str(v)
    return [to_json(x) for x in v]


def main():
    got = compute()
    print(json.dumps({k: to_json(v) for k, v in got.items()}, indent=1))
    if "--check" in sys.argv:
        bad = [k for k in FROZEN if got.get(k) != FROZEN[k]]
        for k in bad:
            print(f"MISMATCH {k}: computed {to_json(got[k])}, frozen {to_json(FROZEN[k])}")
        return 1 if bad else 0
    return 0


if __name__ == "__main__":
    sys.exit(main())
