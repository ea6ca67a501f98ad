"""Shared sampling helpers for the randomized suites."""

from fractions import Fraction


def random_paving_collection(rng, lat, k, limit=3):
    candidates = [i for i in range(lat.size) if lat.dims[i] == k]
    rng.shuffle(candidates)
    chosen = []
    for c in candidates:
        if len(chosen) >= limit:
            break
        if all(lat.dims[lat.meet(c, other)] <= k - 2 for other in chosen):
            chosen.append(c)
    return frozenset(chosen)


def random_disjoint_paving_pair(rng, lat, k, limit=3):
    s1 = random_paving_collection(rng, lat, k, limit)
    pool = [i for i in range(lat.size) if lat.dims[i] == k and i not in s1]
    rng.shuffle(pool)
    s2 = []
    for c in pool:
        if len(s2) >= limit:
            break
        if all(lat.dims[lat.meet(c, other)] <= k - 2 for other in s2):
            s2.append(c)
    return s1, frozenset(s2)


def random_lambda(rng, max_den=5):
    den = rng.randrange(2, max_den + 1)
    num = rng.randrange(1, den)
    return Fraction(num, den)
