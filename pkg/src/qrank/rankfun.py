"""Rank points: candidate q-rank functions as exact rational vectors.

A RankPoint assigns one Fraction to every subspace in a lattice, in the
lattice's canonical order.  Everything the theory defines at the level
of the rank function lives here: the three axioms, denominators,
mu-independence with circuits and loops, bases, closure, flats, cyclic
spaces, cyclic flats, and the classification report (q-matroid, loop
space, fullness, pavingness).

All set-valued operations are deliberately literal: they evaluate the
defining condition over the whole lattice.  They double as the oracles
against which every closed-form construction is tested.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, NotADenominator

__all__ = [
    "RankPoint", "AxiomReport", "Violation", "IndependenceReport",
    "Classification", "rank_point", "check_axioms", "principal_denominator",
    "independence_report", "mu_bases", "closure", "flats", "cyclic_spaces",
    "cyclic_flats", "classify", "is_strong_independent",
    "point_to_json", "point_from_json",
]


def _to_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


@dataclass(frozen=True)
class RankPoint:
    """A vector of exact rationals indexed by lattice positions."""

    lattice: object
    values: tuple

    def __post_init__(self):
        if len(self.values) != self.lattice.size:
            raise DimensionMismatch(
                f"expected {self.lattice.size} values, got {len(self.values)}")

    def value(self, i):
        return self.values[i]

    @property
    def rank(self):
        return self.values[self.lattice.top]

    def is_integral(self):
        return all(v.denominator == 1 for v in self.values)

    def grade_values(self, d):
        return tuple(self.values[i] for i in self.lattice.grade(d))

    def __repr__(self):
        vals = ",".join(str(v) for v in self.values)
        return f"RankPoint(q={self.lattice.q}, n={self.lattice.n}, [{vals}])"


def rank_point(lattice, values):
    return RankPoint(lattice, tuple(_to_fraction(v) for v in values))


Violation = tuple  # (axiom tag, witness indices, positive slack)


@dataclass(frozen=True)
class AxiomReport:
    ok: bool
    violations: tuple


def check_axioms(p):
    """Check (R1) bounds, (R2) on covers, (R3) on incomparable pairs.

    Monotonicity on covers implies monotonicity everywhere, and
    submodularity holds with equality on comparable pairs, so this row
    set is exactly the irredundant one.  Violations are reported with
    their exact positive slack; they are data, not errors.
    """
    lat = p.lattice
    vals = p.values
    bad = []
    for i, v in enumerate(vals):
        if v < 0:
            bad.append(("R1", (i,), -v))
        elif v > lat.dims[i]:
            bad.append(("R1", (i,), v - lat.dims[i]))
    for y in range(lat.size):
        vy = vals[y]
        for x in lat.covers_down[y]:
            if vals[x] > vy:
                bad.append(("R2", (x, y), vals[x] - vy))
    for x in range(lat.size):
        bx = lat.below_mask[x]
        for y in range(x + 1, lat.size):
            if (bx >> y) & 1 or (lat.below_mask[y] >> x) & 1:
                continue
            slack = vals[lat.meet(x, y)] + vals[lat.join(x, y)] - vals[x] - vals[y]
            if slack > 0:
                bad.append(("R3", (x, y), slack))
    return AxiomReport(not bad, tuple(bad))


def principal_denominator(p):
    """Smallest positive integer mu with mu * v_X integral for all X."""
    return math.lcm(*(v.denominator for v in p.values))


def is_denominator(p, mu):
    return mu >= 1 and all((v * mu).denominator == 1 for v in p.values)


def _require_denominator(p, mu):
    if not isinstance(mu, int) or not is_denominator(p, mu):
        raise NotADenominator(f"{mu} is not a denominator of the point")


def is_strong_independent(p, i):
    return p.values[i] == p.lattice.dims[i]


@dataclass(frozen=True)
class IndependenceReport:
    mu: int
    independent: frozenset
    circuits: frozenset
    loops: frozenset


def independence_report(p, mu):
    """mu-independent spaces, mu-circuits and mu-loops, by definition.

    A space I is mu-independent iff rho(J) >= dim(J)/mu for every
    subspace J <= I; the universally quantified condition is evaluated
    literally over the lattice interval below I.  Circuits are the
    dependent spaces all of whose hyperplanes are independent.
    """
    _require_denominator(p, mu)
    lat = p.lattice
    vals = p.values
    ok_local = [vals[i] >= Fraction(lat.dims[i], mu) for i in range(lat.size)]
    indep = frozenset(i for i in range(lat.size)
                      if all(ok_local[j] for j in lat.below(i)))
    circuits = frozenset(
        i for i in range(lat.size)
        if i not in indep and all(h in indep for h in lat.covers_down[i]))
    loops = frozenset(i for i in lat.atom_range if i not in indep)
    return IndependenceReport(mu, indep, circuits, loops)


def mu_bases(p, mu, v):
    """Inclusion-maximal mu-independent subspaces of the space at index v."""
    rep = independence_report(p, mu)
    lat = p.lattice
    inside = set(lat.below(v))
    return frozenset(
        i for i in inside
        if i in rep.independent
        and not any(u in rep.independent for u in lat.covers_up[i] if u in inside))


@dataclass(frozen=True)
class ClosureResult:
    atoms: frozenset  # 1-dimensional members of Cl_rho(A)
    closure: int      # their join


def closure(p, a):
    lat = p.lattice
    va = p.values[a]
    atoms = frozenset(x for x in lat.atom_range
                      if p.values[lat.join(a, x)] == va)
    return ClosureResult(atoms, lat.join_many(atoms))


def flats(p):
    """Spaces whose rank strictly increases under any external atom."""
    lat = p.lattice
    vals = p.values
    out = []
    for x in range(lat.size):
        vx = vals[x]
        inside = lat.below_mask[x]
        if all((inside >> a) & 1 or vals[lat.join(x, a)] > vx
               for a in lat.atom_range):
            out.append(x)
    return frozenset(out)


def cyclic_spaces(p):
    """Spaces X satisfying, for every hyperplane H of X, condition (1)
    rho(X) = rho(H) or condition (2) 0 < rho(X) - rho(H) < rho(a) for
    some atom a of X outside H."""
    lat = p.lattice
    vals = p.values
    out = []
    for x in range(lat.size):
        vx = vals[x]
        good = True
        for h in lat.covers_down[x]:
            diff = vx - vals[h]
            if diff == 0:
                continue
            inside_h = lat.below_mask[h]
            if diff > 0 and any(not (inside_h >> a) & 1 and diff < vals[a]
                                for a in lat.atoms_of[x]):
                continue
            good = False
            break
        if good:
            out.append(x)
    return frozenset(out)


def cyclic_flats(p):
    return flats(p) & cyclic_spaces(p)


@dataclass(frozen=True)
class Classification:
    is_qmatroid: bool
    loop_space: int
    is_full: bool
    is_paving: object   # bool for q-matroids, None otherwise
    is_mu_paving: bool


def classify(p, mu):
    _require_denominator(p, mu)
    lat = p.lattice
    is_qm = p.is_integral()
    loop_space = lat.join_many(a for a in lat.atom_range if p.values[a] == 0)
    fl = flats(p)
    cy = cyclic_spaces(p)
    full = lat.zero in fl and lat.top in cy
    rep = independence_report(p, mu)
    if rep.independent:
        max_indep_dim = max(lat.dims[i] for i in rep.independent)
    else:
        max_indep_dim = 0
    mu_paving = all(lat.dims[c] >= max_indep_dim for c in rep.circuits)
    paving = None
    if is_qm:
        rep1 = independence_report(p, 1)
        paving = all(lat.dims[c] >= p.rank for c in rep1.circuits)
    return Classification(is_qm, loop_space, full, paving, mu_paving)


# -- serialization -----------------------------------------------------

def point_to_json(p):
    lat = p.lattice
    return {
        "q": lat.q,
        "n": lat.n,
        "order_digest": lat.order_digest(),
        "values": [str(v) for v in p.values],
    }


def point_from_json(obj, lattice):
    if obj.get("q") != lattice.q or obj.get("n") != lattice.n:
        raise DimensionMismatch("point parameters do not match the lattice")
    digest = obj.get("order_digest")
    if digest is not None and digest != lattice.order_digest():
        raise DimensionMismatch(
            "order digest mismatch: point was serialized against a "
            "different lattice ordering")
    return rank_point(lattice, obj["values"])


def point_dumps(p):
    return json.dumps(point_to_json(p), sort_keys=True, indent=None)
