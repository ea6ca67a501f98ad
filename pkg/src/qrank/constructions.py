"""Named rank points: uniform q-matroids, the paving construction, and
convex combinations, together with the closed-form predictions that the
brute-force oracles in rankfun are tested against.

Conventions for two-term combinations follow the source constructions:

* paving combinations weigh the FIRST paving q-matroid by lam,
  so values on S1 read lam*(k-1) + (1-lam)*k;
* two-uniform and MRD combinations weigh the SECOND (higher rank)
  term by lam, so middle dimensions read k1 + lam*(dim - k1).

Combinations of uniform q-matroids take the same value on every
subspace of one dimension, so reports carry a values_by_dim profile
that exists even when the full lattice is over the size cap; the
mu-independence of such a point is decided exactly from the profile.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (CoefficientSum, InvalidCollection, LatticeMismatch,
                     Overlap, OutOfRange, RankMismatch)
from .rankfun import RankPoint, rank_point
from .subspaces import build_lattice


def uniform(lattice, k):
    """Uniform q-matroid of rank k: v_X = min(k, dim X)."""
    if not 0 <= k <= lattice.n:
        raise OutOfRange(f"need 0 <= k <= {lattice.n}, got {k}")
    return rank_point(lattice, (min(k, d) for d in lattice.dims))


@dataclass(frozen=True)
class PavingSpec:
    """A collection S of k-dimensional spaces with pairwise intersections
    of dimension at most k-2, the input of the paving construction."""

    lattice: object
    k: int
    spaces: frozenset

    def __post_init__(self):
        lat = self.lattice
        if not 1 <= self.k <= lat.n - 1:
            raise InvalidCollection(f"need 1 <= k <= n-1, got k={self.k}")
        spaces = sorted(self.spaces)
        for i in spaces:
            if lat.dims[i] != self.k:
                raise InvalidCollection(
                    f"space {i} has dimension {lat.dims[i]}, expected {self.k}")
        for a in range(len(spaces)):
            for b in range(a + 1, len(spaces)):
                m = lat.meet(spaces[a], spaces[b])
                if lat.dims[m] > self.k - 2:
                    raise InvalidCollection(
                        f"spaces {spaces[a]} and {spaces[b]} intersect in "
                        f"dimension {lat.dims[m]} > k-2")


def paving_spec(lattice, k, spaces):
    return PavingSpec(lattice, k, frozenset(spaces))


def paving(spec):
    """Paving q-matroid induced by S: value k-1 on S, min(dim, k) elsewhere."""
    lat = spec.lattice
    vals = [min(spec.k, d) for d in lat.dims]
    for i in spec.spaces:
        vals[i] = spec.k - 1
    return rank_point(lat, vals)


def combo_denominator(coeffs):
    return math.lcm(*(Fraction(c).denominator for c in coeffs))


def convex_combination(terms):
    """Coordinatewise mix sum(lam_i * p_i) with lam_i > 0 summing to 1."""
    terms = [(Fraction(c), p) for c, p in terms]
    if not terms:
        raise CoefficientSum("empty combination")
    total = sum(c for c, _ in terms)
    if total != 1 or any(c <= 0 for c, _ in terms):
        raise CoefficientSum(f"coefficients must be positive with sum 1, sum={total}")
    lat = terms[0][1].lattice
    if any(p.lattice is not lat for _, p in terms):
        raise LatticeMismatch("all points must live on one lattice")
    size = lat.size
    vals = [Fraction(0)] * size
    for c, p in terms:
        for i in range(size):
            vals[i] += c * p.values[i]
    return RankPoint(lat, tuple(vals))


# -- profiles: rank functions constant on each grade --------------------

def point_from_profile(lattice, values_by_dim):
    vals = [Fraction(values_by_dim[d]) for d in lattice.dims]
    return RankPoint(lattice, tuple(vals))


def profile_independent_dims(values_by_dim, mu):
    """Dimensions D whose spaces are mu-independent, for a point that is
    constant on grades: D qualifies iff f(s) >= s/mu for all s <= D."""
    good = []
    for d, v in enumerate(values_by_dim):
        if Fraction(v) < Fraction(d, mu):
            break
        good.append(d)
    return frozenset(good)


# -- paving combination --------------------------------------------------

@dataclass(frozen=True)
class PavingComboReport:
    point: RankPoint
    lam: Fraction
    mu: int
    k: int
    s0: object  # int, or None when no dimension violates the bound
    independent_prediction: frozenset
    circuits_prediction: frozenset
    flats_prediction: frozenset
    cyclic_prediction: frozenset
    cyclic_flats_prediction: frozenset


def paving_combo_report(spec1, spec2, lam):
    """Combination lam*M_S1 + (1-lam)*M_S2 of two disjoint equal-rank
    paving collections, with every closed-form prediction attached.

    For k = 1 a nonempty collection makes its atoms loops (rank k-1 = 0),
    and a loop space of one term need not stay cyclic in a combination,
    so the cyclic-space and cyclic-flat closed forms only hold in the
    loopless regime; they are reported as None when k = 1 and some
    collection is nonempty."""
    if spec1.lattice is not spec2.lattice:
        raise LatticeMismatch("paving specs on different lattices")
    if spec1.k != spec2.k:
        raise RankMismatch(f"ranks differ: {spec1.k} vs {spec2.k}")
    if spec1.spaces & spec2.spaces:
        raise Overlap("S1 and S2 must be disjoint; the closed forms do not "
                      "cover overlapping collections")
    lam = Fraction(lam)
    if not 0 < lam < 1:
        raise CoefficientSum(f"need 0 < lam < 1, got {lam}")
    lat = spec1.lattice
    k = spec1.k
    mu = lam.denominator
    point = convex_combination([(lam, paving(spec1)), (1 - lam, paving(spec2))])

    s0 = k * mu + 1 if k * mu + 1 <= lat.n else None
    everything = frozenset(range(lat.size))
    if s0 is None:
        indep = everything
        circuits = frozenset()
    else:
        indep = frozenset(i for i in range(lat.size) if lat.dims[i] <= s0 - 1)
        circuits = frozenset(i for i in range(lat.size) if lat.dims[i] == s0)
    both = spec1.spaces | spec2.spaces
    fl = both | {lat.top} | frozenset(
        i for i in range(lat.size) if lat.dims[i] <= k - 1)
    if k == 1 and both:
        cy = None
        zf = None
    else:
        cy = both | {lat.zero} | frozenset(
            i for i in range(lat.size) if lat.dims[i] >= k + 1)
        zf = both | {lat.zero, lat.top}
    return PavingComboReport(point, lam, mu, k, s0, indep, circuits, fl, cy, zf)


# -- two uniform q-matroids ----------------------------------------------

@dataclass(frozen=True)
class TwoUniformReport:
    q: int
    n: int
    k1: int
    k2: int
    lam: Fraction
    mu: int
    values_by_dim: tuple
    predicts_all_independent: bool
    all_independent: bool
    flat_dims: frozenset
    cyclic_dims: frozenset
    cyclic_flat_dims: frozenset
    point: object  # RankPoint when a lattice was supplied, else None


def two_uniform_values(n, k1, k2, lam):
    lam = Fraction(lam)
    vals = []
    for d in range(n + 1):
        if d <= k1:
            vals.append(Fraction(d))
        elif d <= k2:
            vals.append(k1 + lam * (d - k1))
        else:
            vals.append((1 - lam) * k1 + lam * k2)
    return tuple(vals)


def two_uniform_combo_report(q, n, k1, k2, lam, lattice=None):
    """Report on (1-lam)*U_{k1,n} + lam*U_{k2,n}.

    The sufficient conditions for full mu-independence (mu at least
    ceil(n/k1), or k1+k2 >= n) are reported separately from the exact
    profile-checked answer, since they are not necessary.
    """
    if not 1 < k1 < k2 < n:
        raise OutOfRange(f"need 1 < k1 < k2 < n, got {k1}, {k2}, {n}")
    lam = Fraction(lam)
    if not 0 < lam < 1:
        raise OutOfRange(f"need 0 < lam < 1, got {lam}")
    mu = lam.denominator
    vals = two_uniform_values(n, k1, k2, lam)
    predicted = mu >= math.ceil(Fraction(n, k1)) or k1 + k2 >= n
    actual = n in profile_independent_dims(vals, mu)
    flat_dims = frozenset(range(k2)) | {n}
    cyclic_dims = frozenset(range(k1 + 1, n + 1)) | {0}
    zf_dims = frozenset({0, n}) | frozenset(range(k1 + 1, k2))
    point = None
    if lattice is not None:
        if (lattice.q, lattice.n) != (q, n):
            raise LatticeMismatch("lattice does not match (q, n)")
        point = point_from_profile(lattice, vals)
    return TwoUniformReport(q, n, k1, k2, lam, mu, vals, predicted, actual,
                            flat_dims, cyclic_dims, zf_dims, point)


# -- flag of n-2 uniform q-matroids ---------------------------------------

@dataclass(frozen=True)
class FlagComboReport:
    q: int
    n: int
    lambdas: tuple
    mu: int
    values_by_dim: tuple
    predicts_all_independent: bool
    all_independent: bool
    independent_dims: frozenset
    point: object


def flag_uniform_values(n, lambdas):
    vals = [Fraction(0), Fraction(1), Fraction(2)]
    for d in range(3, n):
        head = sum((i + 2) * lambdas[i] for i in range(d - 2))
        tail = d * sum(lambdas[i] for i in range(d - 2, n - 2))
        vals.append(head + tail)
    vals.append(sum((i + 2) * lambdas[i] for i in range(n - 2)))
    return tuple(vals)


def flag_uniform_combo(q, n, lambdas, lattice=None):
    """Report on sum_i lam_i * U_{i+1,n} for i = 1..n-2 (n >= 5).

    Every space of dimension at most n-1 is mu-independent; the whole
    lattice is predicted mu-independent when mu >= ceil(n/2).
    """
    if n < 5:
        raise OutOfRange(f"need n >= 5, got {n}")
    lambdas = tuple(Fraction(x) for x in lambdas)
    if len(lambdas) != n - 2:
        raise OutOfRange(f"need {n - 2} coefficients, got {len(lambdas)}")
    if any(x <= 0 for x in lambdas) or sum(lambdas) != 1:
        raise CoefficientSum("coefficients must be positive with sum 1")
    mu = combo_denominator(lambdas)
    vals = flag_uniform_values(n, lambdas)
    indep_dims = profile_independent_dims(vals, mu)
    predicted = mu >= math.ceil(Fraction(n, 2))
    point = None
    if lattice is not None:
        if (lattice.q, lattice.n) != (q, n):
            raise LatticeMismatch("lattice does not match (q, n)")
        point = point_from_profile(lattice, vals)
    return FlagComboReport(q, n, lambdas, mu, vals, predicted,
                           n in indep_dims, indep_dims, point)


# -- declarative construction specs (consumed by the CLI) ------------------

def compile_spec(obj, lattice_cache=None):
    """Build a RankPoint from a declarative JSON-style construction spec:
    {"kind": "uniform"|"paving"|"combo"|"flag", ...}."""
    if lattice_cache is None:
        lattice_cache = {}

    def get_lattice(q, n):
        key = (q, n)
        if key not in lattice_cache:
            lattice_cache[key] = build_lattice(q, n)
        return lattice_cache[key]

    kind = obj.get("kind")
    if kind == "uniform":
        lat = get_lattice(obj["q"], obj["n"])
        return uniform(lat, obj["k"])
    if kind == "paving":
        lat = get_lattice(obj["q"], obj["n"])
        spaces = frozenset(lat.index_of_rows([tuple(r) for r in rows])
                           for rows in obj["spaces"])
        return paving(paving_spec(lat, obj["k"], spaces))
    if kind == "combo":
        coeffs = [Fraction(c) for c in obj["coefficients"]]
        points = [compile_spec(t, lattice_cache) for t in obj["terms"]]
        if len(coeffs) != len(points):
            raise CoefficientSum("coefficient/term count mismatch")
        return convex_combination(list(zip(coeffs, points)))
    if kind == "flag":
        lat = get_lattice(obj["q"], obj["n"])
        rep = flag_uniform_combo(obj["q"], obj["n"], obj["lambdas"], lattice=lat)
        return rep.point
    raise OutOfRange(f"unknown construction kind {kind!r}")
