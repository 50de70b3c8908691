#!/usr/bin/env python3
"""Writes data/tables/lines.txt and families.txt from a literal transcription
of the reference line and family tables, kept independent of the C++
enumerator so the golden test compares two separate encodings."""

import math
import pathlib
import sys


def isqrt(n):
    return math.isqrt(n)


def psl2(q):
    return q * (q * q - 1) // math.gcd(2, q - 1)


# Branch lists per line id: each entry is (order formula, count).
LINES = {
    "Alt7": [("1a", [(lambda q: 5, 1)]),
             ("1b", [(lambda q: 5, 1), (lambda q: 7, 1)])],
    "PSL2-7": [("2a", [(lambda q: 2, 1)]),
               ("2b", [(lambda q: 2, 1), (lambda q: 3, 1)]),
               ("2c", [(lambda q: 2, 1), (lambda q: 3, 2)]),
               ("2d", [(lambda q: 2, 1), (lambda q: 7, 1)]),
               ("2e", [(lambda q: 2, 1), (lambda q: 3, 1), (lambda q: 7, 1)]),
               ("2f", [(lambda q: 2, 1), (lambda q: 3, 2), (lambda q: 7, 1)])],
    "PSL2-8": [("3a", [(lambda q: 2, 1)]),
               ("3b", [(lambda q: 2, 1), (lambda q: 7, 1)]),
               ("3c", [(lambda q: 2, 1), (lambda q: 7, 2)]),
               ("3d", [(lambda q: 2, 1), (lambda q: 9, 1)]),
               ("3e", [(lambda q: 2, 1), (lambda q: 9, 2)]),
               ("3f", [(lambda q: 2, 1), (lambda q: 7, 1), (lambda q: 9, 1)]),
               ("3g", [(lambda q: 2, 1), (lambda q: 7, 2), (lambda q: 9, 1)]),
               ("3h", [(lambda q: 2, 1), (lambda q: 7, 1), (lambda q: 9, 2)]),
               ("3i", [(lambda q: 2, 1), (lambda q: 7, 2), (lambda q: 9, 2)])],
    "PSU4": [("4a", [(lambda q: 5, 1)]),
             ("4b", [(lambda q: 5, 1), (lambda q: 7, 1)])],
    "PSL2+": [("5a", [(lambda q: (q - 1) // 4, 1)]),
              ("5c", [(lambda q: (q - 1) // 4, 1), (lambda q: (q + 1) // 2, 1)]),
              ("5d", [(lambda q: (q - 1) // 4, 1), (lambda q: (q + 1) // 2, 2)])],
    "PSL2-": [("5b", [(lambda q: (q + 1) // 4, 1)]),
              ("5e", [(lambda q: (q + 1) // 4, 1), (lambda q: (q - 1) // 2, 1)]),
              ("5f", [(lambda q: (q + 1) // 4, 1), (lambda q: (q - 1) // 2, 2)])],
    "PSp4": [("6", [(lambda q: (q * q + 1) // math.gcd(2, q * q - 1), 1)])],
    "POmega8-": [("7", [(lambda q: (q ** 4 + 1) // math.gcd(2, q ** 4 - 1), 1)])],
}

# The fixity-4 orders of Sz(q) are q + sqrt(2q) + 1 and q - sqrt(2q) + 1.
A = lambda q: q + isqrt(2 * q) + 1
B = lambda q: q - isqrt(2 * q) + 1
C = lambda q: q - 1
LINES["Sz"] = [("8a", [(A, 1)]), ("8b", [(B, 1)]), ("8c", [(A, 1), (B, 1)]),
               ("8d", [(A, 1), (C, 1)]), ("8e", [(A, 1), (C, 2)]),
               ("8f", [(B, 1), (C, 1)]), ("8g", [(B, 1), (C, 2)]),
               ("8h", [(A, 1), (C, 1), (B, 1)]), ("8i", [(A, 1), (C, 2), (B, 1)])]
LINES["3D4"] = [("9", [(lambda q: q ** 4 - q ** 2 + 1, 1)])]
LINES["2G2"] = [("10", [(lambda q: (q - 1) // 2, 1)])]
LINES["M11"] = [("11", [(lambda q: 5, 1)])]
LINES["M22"] = [("12a", [(lambda q: 5, 1)]), ("12b", [(lambda q: 5, 1), (lambda q: 7, 1)])]
LINES["J1"] = [("13", [(lambda q: 15, 1)])]

# g0 lower bounds that differ from the three-branch-point rule.
FLOOR_OVERRIDE = {"2a": 2, "3a": 2, "2c": 1}

# (key, group token, q values); the generic PSL2 rows share one block,
# ordered by q.
BLOCKS = [
    [("Alt7", "Alt7", [None])],
    [("PSL2-7", "PSL2", [7])],
    [("PSL2-8", "PSL2", [8])],
    [("PSU4", "PSU4", [3])],
    [("PSL2+", "PSL2", [9, 13, 17, 25]), ("PSL2-", "PSL2", [11, 19, 23])],
    [("PSp4", "PSp4", [3, 4, 5])],
    [("POmega8-", "POmega8-", [2, 3])],
    [("Sz", "Sz", [8, 32])],
    [("3D4", "3D4", [2, 3])],
    [("2G2", "2G2", [27])],
    [("M11", "M11", [None])],
    [("M22", "M22", [None])],
    [("J1", "J1", [None])],
]

FAMILIES = """\
family Alt7 - | fix4 5 | fix3 7 | fix2 -
family PSL2 q=7 | fix4 2 | fix3 7 | fix2 3
family PSL2 q=8 | fix4 2 | fix3 - | fix2 7 9
family PSU4 q=3 | fix4 5 | fix3 7 | fix2 -
family PSL2 q=1mod4 | fix4 (q-1)/4 | fix3 - | fix2 (q+1)/2
family PSL2 q=-1mod4 | fix4 (q+1)/4 | fix3 - | fix2 (q-1)/2
family PSp4 q>=3 | fix4 (q^2+1)/(2,q^2-1) | fix3 - | fix2 -
family Sz q=2^(2k+1)>=8 | fix4 q+sqrt(2q)+1 q-sqrt(2q)+1 | fix3 - | fix2 q-1
family POmega8- - | fix4 (q^4+1)/(2,q^4-1) | fix3 - | fix2 -
family 3D4 - | fix4 q^4-q^2+1 | fix3 - | fix2 -
family 2G2 q=3^(2k+1)>=27 | fix4 (q-1)/2 | fix3 - | fix2 -
family M11 - | fix4 5 | fix3 - | fix2 -
family M22 - | fix4 5 | fix3 7 | fix2 -
family J1 - | fix4 15 | fix3 - | fix2 -
"""


def render_line(lid, group, q, branches):
    counts = {}
    for f, n in branches:
        m = f(q)
        counts[m] = counts.get(m, 0) + n
    text = " ".join(f"{m}:{n}" for m, n in sorted(counts.items()))
    points = sum(counts.values())
    floor = FLOOR_OVERRIDE.get(lid, 0 if points >= 3 else 1)
    qtext = "-" if q is None else str(q)
    return f"line {lid} {group} {qtext} | {text} | g0min {floor}"


def main():
    root = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "data/tables")
    out = []
    for block in BLOCKS:
        runs = [(q, key, group) for key, group, qs in block for q in qs]
        runs.sort(key=lambda r: -1 if r[0] is None else r[0])
        for q, key, group in runs:
            for lid, branches in LINES[key]:
                out.append(render_line(lid, group, q, branches))
    root.mkdir(parents=True, exist_ok=True)
    (root / "lines.txt").write_text("\n".join(out) + "\n")
    (root / "families.txt").write_text(FAMILIES)


if __name__ == "__main__":
    main()
