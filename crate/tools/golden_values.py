#!/usr/bin/env python3
"""Regenerates the golden-value fixtures for the benchmark evaluators.

Each problem's formula is transcribed here from its source definition,
independently of the Rust implementation. The script samples a
deterministic grid of in-bounds points, evaluates them, and writes one
headerless CSV per problem to crates/momo-core/tests/data/ with rows
`x_1,...,x_D,f_1,f_2`. The Rust test suite re-evaluates the same inputs
and compares, which catches transcription drift in either direction.

Run from anywhere: paths are resolved relative to this file.
"""

import math
from pathlib import Path

OUT_DIR = Path(__file__).resolve().parent.parent / "crates" / "momo-core" / "tests" / "data"

PI = math.pi


def nearest(v, a, b):
    """Signed deviation from the nearer of two branch levels."""
    da, db = v - a, v - b
    return da if abs(da) <= abs(db) else db


def mmf_ripple(y):
    return 2.0 * (4.0 * y * y - 2.0 * math.cos(20.0 * y * PI / math.sqrt(2.0)) + 2.0)


def mmf7_curve(a):
    return (0.3 * a * a * math.cos(24.0 * PI * a + 4.0 * PI) + 0.6 * a) * math.sin(
        6.0 * PI * a + PI
    )


def mmf1(x):
    a = abs(x[0] - 2.0)
    y = x[1] - math.sin(6.0 * PI * a + PI)
    return [a, 1.0 - math.sqrt(a) + 2.0 * y * y]


def mmf2(x):
    s = math.sqrt(x[0])
    y = nearest(x[1], s, 1.0 + s)
    return [x[0], 1.0 - s + mmf_ripple(y)]


def mmf3(x):
    s = math.sqrt(x[0])
    y = nearest(x[1], s, 0.5 + s)
    return [x[0], 1.0 - s + mmf_ripple(y)]


def mmf4(x):
    a = abs(x[0])
    b = math.sin(PI * a)
    y = nearest(x[1], b, 1.0 + b)
    return [a, 1.0 - a * a + 2.0 * y * y]


def mmf5(x):
    a = abs(x[0] - 2.0)
    b = math.sin(6.0 * PI * a + PI)
    y = nearest(x[1], b, 2.0 + b)
    return [a, 1.0 - math.sqrt(a) + 2.0 * y * y]


def mmf6(x):
    a = abs(x[0] - 2.0)
    b = math.sin(6.0 * PI * a + PI)
    y = nearest(x[1], b, 1.0 + b)
    return [a, 1.0 - math.sqrt(a) + 2.0 * y * y]


def mmf7(x):
    a = abs(x[0] - 2.0)
    y = x[1] - mmf7_curve(a)
    return [a, 1.0 - math.sqrt(a) + y * y]


def mmf8(x):
    a = abs(x[0])
    b = math.sin(a) + a
    y = nearest(x[1], b, 4.0 + b)
    f1 = math.sin(a)
    return [f1, math.sqrt(1.0 - f1 * f1) + 2.0 * y * y]


def sym_part_simple(x):
    def shift(v):
        return v - 10.0 * max(-1.0, min(1.0, round(v / 10.0)))

    u, v = shift(x[0]), shift(x[1])
    return [(u + 1.0) ** 2 + v * v, (u - 1.0) ** 2 + v * v]


def sym_part_rotated(x):
    c = math.cos(PI / 4.0)
    s = math.sin(PI / 4.0)
    return sym_part_simple([c * x[0] + s * x[1], -s * x[0] + c * x[1]])


def omni_test(x):
    return [
        sum(math.sin(PI * v) for v in x),
        sum(math.cos(PI * v) for v in x),
    ]


def comb(v, p):
    return math.cos(p * PI * v) ** 2


def mmmop(g, shape):
    def f(x):
        gv = g(x)
        h = shape(x[0])
        return [(1.0 + gv) * h[0], (1.0 + gv) * h[1]]

    return f


def linear_shape(x1):
    return [x1, 1.0 - x1]


def circle_shape(x1):
    return [math.sin(PI * x1 / 2.0), math.cos(PI * x1 / 2.0)]


mmmop1a = mmmop(lambda x: comb(x[1], 5.0) + 4.0 * (x[2] - 0.5) ** 2, linear_shape)
mmmop2a = mmmop(lambda x: comb(x[1], 3.0) + comb(x[2], 2.0), circle_shape)
mmmop3a = mmmop(lambda x: comb(x[1], 3.0), circle_shape)
mmmop4a = mmmop(lambda x: comb(x[1], 4.0), circle_shape)
mmmop5a = mmmop(lambda x: comb(x[1] * x[1], 4.0), circle_shape)
mmmop6a = mmmop(lambda x: comb(x[1], 2.0), circle_shape)


def idmp(scale):
    def f(x):
        g = min(abs(x[0] + 0.5), scale * abs(x[0] - 0.5))
        t = 0.5 * (x[1] + 1.0)
        return [g + t, g + 1.0 - t]

    return f


PROBLEMS = {
    "mmf1": (mmf1, [1.0, -1.0], [3.0, 1.0]),
    "mmf2": (mmf2, [0.0, 0.0], [1.0, 2.0]),
    "mmf3": (mmf3, [0.0, 0.0], [1.0, 1.5]),
    "mmf4": (mmf4, [-1.0, 0.0], [1.0, 2.0]),
    "mmf5": (mmf5, [1.0, -1.0], [3.0, 3.0]),
    "mmf6": (mmf6, [1.0, -1.0], [3.0, 2.0]),
    "mmf7": (mmf7, [1.0, -1.0], [3.0, 1.0]),
    "mmf8": (mmf8, [-PI, 0.0], [PI, 9.0]),
    "sym_part_simple": (sym_part_simple, [-20.0, -20.0], [20.0, 20.0]),
    "sym_part_rotated": (sym_part_rotated, [-20.0, -20.0], [20.0, 20.0]),
    "omni_test": (omni_test, [0.0, 0.0], [6.0, 6.0]),
    "mmmop1a": (mmmop1a, [0.0] * 3, [1.0] * 3),
    "mmmop2a": (mmmop2a, [0.0] * 3, [1.0] * 3),
    "mmmop3a": (mmmop3a, [0.0] * 2, [1.0] * 2),
    "mmmop4a": (mmmop4a, [0.0] * 2, [1.0] * 2),
    "mmmop5a": (mmmop5a, [0.0] * 2, [1.0] * 2),
    "mmmop6a": (mmmop6a, [0.0] * 2, [1.0] * 2),
    "idmp_m2_t1": (idmp(1.0), [-1.0, -1.0], [1.0, 1.0]),
    "idmp_m2_t2": (idmp(0.75), [-1.0, -1.0], [1.0, 1.0]),
    "idmp_m2_t3": (idmp(0.5), [-1.0, -1.0], [1.0, 1.0]),
    "idmp_m2_t4": (idmp(0.25), [-1.0, -1.0], [1.0, 1.0]),
}


def sample_points(lower, upper):
    """Deterministic low-discrepancy grid: 5 levels per axis for 2D
    problems, 3 for 3D, plus golden-ratio jitter points, all in bounds."""
    d = len(lower)
    levels = 5 if d == 2 else 3
    fracs = [i / (levels - 1) for i in range(levels)]
    points = []

    def rec(prefix):
        if len(prefix) == d:
            points.append(list(prefix))
            return
        i = len(prefix)
        for f in fracs:
            rec(prefix + [lower[i] + f * (upper[i] - lower[i])])

    rec([])
    # additive-recurrence sequence for off-grid coverage
    phi = (math.sqrt(5.0) - 1.0) / 2.0
    for k in range(1, 11):
        points.append(
            [
                lower[i] + ((k * phi * (i + 1)) % 1.0) * (upper[i] - lower[i])
                for i in range(d)
            ]
        )
    return points


def main():
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    for name, (evaluate, lower, upper) in sorted(PROBLEMS.items()):
        rows = []
        for x in sample_points(lower, upper):
            f = evaluate(x)
            rows.append(",".join(repr(v) for v in x + f))
        path = OUT_DIR / f"golden_{name}.csv"
        path.write_text("\n".join(rows) + "\n")
        print(f"wrote {path} ({len(rows)} rows)")


if __name__ == "__main__":
    main()
