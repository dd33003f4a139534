"""Independent oracle for tests/data/theorem_cases.txt.

Applies the seven case formulas of the classification directly, with its own
lens and Seifert normalization, and prints one golden line per quadruple:

    l1 m1 l2 m2 | case | canonical expression

Run: python3 tests/oracle/theorem_oracle.py > tests/data/theorem_cases.txt
"""
from math import gcd

QUADS = [
    # case 1
    (0, 1, 5, 2), (0, 2, 5, 2), (0, -1, 7, 3), (0, 1, 1, 5), (0, 2, -1, 4),
    (0, 1, 2, 1), (0, 2, 3, -1), (0, -1, -9, 4), (0, 1, 4, 3), (0, 2, 6, 5),
    # case 2
    (5, 2, 0, 1), (7, 4, 0, -1), (1, 3, 0, 1), (-4, 1, 0, 1), (2, 3, 0, -1),
    (9, 2, 0, 1),
    # case 3
    (0, 2, 0, 1), (0, 1, 0, -1), (0, -1, 0, 1),
    # case 4
    (1, 0, 5, 2), (1, 0, 3, 1), (-1, 2, 7, 3), (1, 1, 2, 1), (1, 4, -5, 2),
    (1, 0, 4, 1), (1, 0, 9, 4), (-1, 5, 3, -2),
    # case 5
    (5, 2, 1, 0), (3, 1, -1, 1), (7, 3, 1, 0), (2, 1, 1, 3), (-8, 3, 1, 1),
    # case 6
    (1, 0, 1, 1), (-1, 3, 1, 0), (1, 1, -1, 1), (-1, -1, -1, 2),
    # case 7
    (2, 1, 3, 2), (2, 1, 3, 1), (3, 1, 5, 2), (-3, 1, 5, 2), (5, 2, 7, 3),
    (4, 3, 3, -1), (2, 1, 2, 1), (6, 5, 7, 2), (-5, -2, 4, 1), (9, 2, 8, 3),
]


def lens(p, q):
    if p == 0:
        assert q in (1, -1)
        return ("S2xS1",)
    p = abs(p)
    assert gcd(p, q) == 1
    if p == 1:
        return ("S3",)
    if p == 2:
        return ("RP3",)
    # smallest member of the class {+-q mod p}, found by scanning
    q = min(r for r in range(1, p) if (r - q) % p == 0 or (r + q) % p == 0)
    return ("L", p, q)


ORDER = {"S3": 0, "S2xS1": 1, "L": 2, "RP3": 3, "SFS": 4}


def connected_sum(*atoms):
    parts = sorted((a for a in atoms if a[0] != "S3"), key=lambda a: (ORDER[a[0]], a[1:]))
    if not parts:
        return ("S3",)
    if len(parts) == 1:
        return parts[0]
    return ("#",) + tuple(parts)


def inverse(m, n):
    return next(b for b in range(1, n) if (b * m) % n == 1 % n)


def seifert(fibers):
    b = 0
    out = []
    for a, be in fibers:
        if a == 1:
            b += be
            continue
        while be >= a:
            be -= a
            b += 1
        while be <= 0:
            be += a
            b -= 1
        out.append((a, be))
    if b:
        out.append((1, b))
    return ("SFS", tuple(sorted(out)))


def classify(l1, m1, l2, m2):
    if l1 == 0 and l2 != 0:
        return 1, connected_sum(lens(l2, m2), ("RP3",))
    if l1 != 0 and l2 == 0:
        return 2, connected_sum(lens(l1, m1), ("RP3",))
    if l1 == 0 and l2 == 0:
        return 3, connected_sum(("S2xS1",), ("RP3",))
    if abs(l1) == 1 and abs(l2) > 1:
        return 4, lens(2 * m2 - l2, m2)
    if abs(l2) == 1 and abs(l1) > 1:
        return 5, lens(2 * m1 - l1, m1)
    if abs(l1 * l2) == 1:
        return 6, ("S3",)
    a1, a2 = abs(l1), abs(l2)
    return 7, seifert([(2, 1), (a1, inverse(m1, a1)), (a2, inverse(m2, a2))])


def render(m):
    if m[0] == "#":
        return " # ".join(render(x) for x in m[1:])
    if m[0] == "L":
        return f"L({m[1]},{m[2]})"
    if m[0] == "SFS":
        return "SFS(S2; " + ",".join(f"({a},{b})" for a, b in m[1]) + ")"
    return m[0]


if __name__ == "__main__":
    for q in QUADS:
        case, m = classify(*q)
        print(f"{q[0]} {q[1]} {q[2]} {q[3]} | {case} | {render(m)}")
