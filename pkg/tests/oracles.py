"""Brute-force reference computations, independent of the code under test."""

from itertools import product


def brute_points(p, a4, a6):
    """Every (x, y) in F_p^2 on the curve, plus None for infinity."""
    return [None] + [
        (x, y) for x, y in product(range(p), repeat=2) if (y * y - x**3 - a4 * x - a6) % p == 0
    ]


def naive_multiple(add, neg, identity, e, m):
    total = identity
    step = e if m >= 0 else neg(e)
    for _ in range(abs(m)):
        total = add(total, step)
    return total


def chord_third_point(p, a4, a6, P, Q):
    """Third intersection of the line PQ with the curve, found by scanning F_p."""
    (x1, y1), (x2, y2) = P, Q
    hits = []
    for x, y in brute_points(p, a4, a6)[1:]:
        # collinearity via the cross product
        if ((x2 - x1) * (y - y1) - (y2 - y1) * (x - x1)) % p == 0:
            hits.append((x, y))
    others = [R for R in hits if R not in (P, Q)]
    return others


def sequence_positions(N, a, b, c, d, x1, y1):
    """Positions generated by literally iterating the step rule k = 1..N^2."""
    pos = {}
    for k in range(1, N * N + 1):
        x = (x1 + a * (k - 1) + b * ((k - 1) // N)) % N
        y = (y1 + c * (k - 1) + d * ((k - 1) // N)) % N
        pos[k] = (x or N, y or N)
    return pos
