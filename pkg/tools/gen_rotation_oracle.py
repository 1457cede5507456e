#!/usr/bin/env python3
"""Freeze the rotated-member oracle fixture.

Generates 50 random rotations of a 0.3 x 0.3 x 10 m prism, bounds each
rotated corner set, and records the diagonal length and the volume error
of the diagonal rule relative to the true Ar * L volume. Pure stdlib
arithmetic on purpose: the numbers here are the independent expectation
the engine is later tested against, so nothing from the package may leak
in.

Usage: python tools/gen_rotation_oracle.py
"""

import json
import math
import random
from pathlib import Path

SEED = 20260810
COUNT = 50
SECTION_SIDE = 0.3
SECTION_AREA = SECTION_SIDE * SECTION_SIDE
TRUE_LENGTH = 10.0
TRUE_VOLUME = SECTION_AREA * TRUE_LENGTH

OUT = Path(__file__).resolve().parents[1] / "tests" / "fixtures" / "rotation_oracle.json"


def rotation_matrix(axis, angle):
    """Rodrigues rotation matrix for a unit axis."""
    x, y, z = axis
    c, s = math.cos(angle), math.sin(angle)
    t = 1.0 - c
    return [
        [t * x * x + c, t * x * y - s * z, t * x * z + s * y],
        [t * x * y + s * z, t * y * y + c, t * y * z - s * x],
        [t * x * z - s * y, t * y * z + s * x, t * z * z + c],
    ]


def apply(matrix, point):
    return tuple(sum(matrix[r][k] * point[k] for k in range(3)) for r in range(3))


def prism_corners():
    half = SECTION_SIDE / 2.0
    corners = []
    for sx in (-half, half):
        for sy in (-half, half):
            for sz in (-TRUE_LENGTH / 2.0, TRUE_LENGTH / 2.0):
                corners.append((sx, sy, sz))
    return corners


def main():
    rng = random.Random(SEED)
    base = prism_corners()
    rotations = []
    for _ in range(COUNT):
        raw = (rng.gauss(0, 1), rng.gauss(0, 1), rng.gauss(0, 1))
        norm = math.sqrt(sum(v * v for v in raw))
        axis = tuple(v / norm for v in raw)
        angle = rng.uniform(0.0, 2.0 * math.pi)
        matrix = rotation_matrix(axis, angle)
        rotated = [apply(matrix, p) for p in base]
        lo = [min(p[k] for p in rotated) for k in range(3)]
        hi = [max(p[k] for p in rotated) for k in range(3)]
        extents = [hi[k] - lo[k] for k in range(3)]
        diag = math.sqrt(sum(e * e for e in extents))
        rotations.append(
            {
                "axis": list(axis),
                "angle": angle,
                "extents": extents,
                "diagonal_length": diag,
                "volume_error": SECTION_AREA * diag - TRUE_VOLUME,
            }
        )
    doc = {
        "seed": SEED,
        "section_area": SECTION_AREA,
        "section_side": SECTION_SIDE,
        "true_length": TRUE_LENGTH,
        "true_volume": TRUE_VOLUME,
        "rotations": rotations,
    }
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(doc, indent=1) + "\n", encoding="utf-8")
    worst = max(r["volume_error"] for r in rotations)
    print(f"wrote {OUT} ({COUNT} rotations, worst over-estimate {worst:.4f} m^3)")


if __name__ == "__main__":
    main()
