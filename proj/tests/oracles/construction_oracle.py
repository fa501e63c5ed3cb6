#!/usr/bin/env python3
# Copyright 2026 The Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Independent oracle for the frozen values in tests/fixtures/oracle.json.

Solves each construction step by Cramer's rule on 2x2 systems (no shared code
with the C++ line canonicalization), and computes cocircuits by brute force:
for every pair of points, the oriented line through them, then the side of
every other point.
"""

import hashlib
import json
from fractions import Fraction as F
from itertools import combinations

SEED = {
    "alpha": (F(0), F(0)), "beta": (F(6), F(0)), "gamma": (F(4), F(0)),
    "omega": (F(3), F(5)), "nu": (F(-2), F(1)), "a": (F(1), F(-2)),
    "b1": (F(9, 2), F(5, 2)),
}


def meet(p1, p2, q1, q2):
    # p1 + s (p2 - p1) = q1 + t (q2 - q1)
    a, b = p2[0] - p1[0], -(q2[0] - q1[0])
    c, d = p2[1] - p1[1], -(q2[1] - q1[1])
    e, f = q1[0] - p1[0], q1[1] - p1[1]
    det = a * d - b * c
    s = (e * d - b * f) / det
    return (p1[0] + s * (p2[0] - p1[0]), p1[1] + s * (p2[1] - p1[1]))


def build(depth):
    s = SEED
    b, c, d = {1: s["b1"]}, {}, {}
    for n in range(1, depth + 1):
        d[n] = meet(s["omega"], s["gamma"], s["alpha"], b[n])
        b[n + 1] = meet(s["omega"], s["beta"], s["a"], d[n])
        c[n] = meet(s["alpha"], s["beta"], s["a"], b[n + 1])
    return b, c, d


def fmt(x):
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def cross_ratio(a, b, c, d):
    # Euclidean form on a horizontal line: all points have y = 0 here.
    return abs(a[0] - c[0]) / abs(b[0] - c[0]) * abs(b[0] - d[0]) / abs(a[0] - d[0])


ORDER = ["alpha", "beta", "gamma", "omega", "nu", "a", "delta", "b1"]


def fingerprint(points):
    names = [n for n in ORDER if n in points]
    cocircuits = set()
    for p, q in combinations(names, 2):
        P, Q = points[p], points[q]
        row = []
        for r in names:
            R = points[r]
            v = (Q[0] - P[0]) * (R[1] - P[1]) - (Q[1] - P[1]) * (R[0] - P[0])
            row.append("+" if v > 0 else "-" if v < 0 else "0")
        s = "".join(row)
        neg = s.translate(str.maketrans("+-", "-+"))
        cocircuits.update([s, neg])
    doc = json.dumps({"cocircuits": sorted(cocircuits), "ground_set": names},
                     separators=(",", ":"))
    return hashlib.sha256(doc.encode()).hexdigest(), sorted(cocircuits)


def main():
    b, c, d = build(20)
    a0_fp, a0_cocircuits = fingerprint(SEED)
    limit = dict(SEED)
    limit["delta"] = c[1]
    m_fp, _ = fingerprint(limit)
    out = {
        "d1": [fmt(x) for x in d[1]],
        "b2": [fmt(x) for x in b[2]],
        "c1": [fmt(x) for x in c[1]],
        "c2": [fmt(x) for x in c[2]],
        "c_x": [fmt(c[i][0]) for i in range(1, 21)],
        "cr": [fmt(cross_ratio(SEED["alpha"], c[i], SEED["gamma"], SEED["beta"]))
               for i in range(1, 4)],
        "a0_fingerprint": a0_fp,
        "a0_cocircuit_count": len(a0_cocircuits),
        "m_fingerprint": m_fp,
    }
    print(json.dumps(out, indent=2))


if __name__ == "__main__":
    main()
