"""The polytope of all q-rank functions, in H-representation.

Rows use the redundancy-filtered system: type-1 upper bounds v_X <= dim X
on every nonzero subspace, nonnegativity on atoms, type-2 monotonicity
only on cover pairs not starting at the zero space, and type-3
submodularity only on unordered incomparable pairs.  The unreduced
variant keeps the zero coordinate and pins it with the paired rows
v_0 <= 0 and -v_0 <= 0 (tag "zero").

Vertex certification computes the exact rank of the tight-row normals,
so every certificate is checkable by hand.  Vertex enumeration runs an
exact integer double description pass over homogenized constraints;
adjacency of rays is decided by exact rank tests on common tight sets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, NotFeasible, TooLarge
from .rankfun import RankPoint, rank_point

MAX_VERTEX_ENUM_DIM = 15
MAX_FVECTOR_DIM = 6


@dataclass(frozen=True)
class HRow:
    coeffs: tuple  # sparse ((lattice index, coefficient), ...)
    rhs: int
    tag: tuple     # ("type1", x) | ("nonneg", x) | ("type2", x, y)
                   # | ("type3", x, y) | ("zero", +1 or -1)

    def evaluate(self, values):
        return sum(c * values[i] for i, c in self.coeffs)


@dataclass(frozen=True)
class HRepresentation:
    lattice: object
    reduced: bool
    rows: tuple

    @property
    def ambient_dim(self):
        return self.lattice.size - (1 if self.reduced else 0)

    def tag_counts(self):
        counts = {}
        for row in self.rows:
            counts[row.tag[0]] = counts.get(row.tag[0], 0) + 1
        return counts

    def to_text(self):
        """Line 1: HREP <rows> <dim>; then one inequality a.v <= b per
        line as space-separated reduced rationals a_1 .. a_dim b."""
        lat = self.lattice
        offset = 1 if self.reduced else 0
        dim = self.ambient_dim
        lines = [f"HREP {len(self.rows)} {dim}"]
        for row in self.rows:
            dense = [0] * dim
            for i, c in row.coeffs:
                dense[i - offset] = c
            lines.append(" ".join(str(x) for x in dense) + f" {row.rhs}")
        return "\n".join(lines) + "\n"


def build_hrep(lattice, reduced=True):
    """H-representation of the q-rank polytope on the given lattice."""
    lat = lattice
    rows = []
    for x in range(1, lat.size):
        rows.append(HRow(((x, 1),), lat.dims[x], ("type1", x)))
    for a in lat.atom_range:
        rows.append(HRow(((a, -1),), 0, ("nonneg", a)))
    for y in range(1, lat.size):
        for x in lat.covers_down[y]:
            if x == lat.zero:
                continue
            rows.append(HRow(((x, 1), (y, -1)), 0, ("type2", x, y)))
    for x in range(1, lat.size):
        mask_x = lat.below_mask[x]
        for y in range(x + 1, lat.size):
            if (mask_x >> y) & 1 or (lat.below_mask[y] >> x) & 1:
                continue
            m = lat.meet(x, y)
            j = lat.join(x, y)
            coeffs = [(j, 1), (x, -1), (y, -1)]
            if m != lat.zero or not reduced:
                coeffs.append((m, 1))
            rows.append(HRow(tuple(sorted(coeffs)), 0, ("type3", x, y)))
    if not reduced:
        rows.append(HRow(((0, 1),), 0, ("zero", 1)))
        rows.append(HRow(((0, -1),), 0, ("zero", -1)))
    return HRepresentation(lat, reduced, tuple(rows))


@dataclass(frozen=True)
class Membership:
    status: str          # "interior" | "boundary" | "outside"
    tight_rows: tuple
    violated_rows: tuple


def membership(H, p):
    """Exact evaluation of every row at the point.

    Interior means strict on every inequality (the unreduced zero pair
    only has to hold, since it is an equality in disguise)."""
    if p.lattice is not H.lattice:
        raise DimensionMismatch(
            "point and H-representation use different lattices")
    tight = []
    violated = []
    for k, row in enumerate(H.rows):
        val = row.evaluate(p.values)
        if val > row.rhs:
            violated.append(k)
        elif val == row.rhs:
            tight.append(k)
    if violated:
        return Membership("outside", tuple(tight), tuple(violated))
    if any(H.rows[k].tag[0] != "zero" for k in tight):
        return Membership("boundary", tuple(tight), ())
    return Membership("interior", tuple(tight), ())


@dataclass(frozen=True)
class VertexCertificate:
    point: RankPoint
    tight_rows: tuple
    normal_rank: int
    is_vertex: bool


def is_vertex(H, p):
    """Certify the point: gather tight rows and rank their normals; the
    point is a vertex iff the rank equals the ambient dimension."""
    mem = membership(H, p)
    if mem.status == "outside":
        raise NotFeasible(f"point violates rows {mem.violated_rows}")
    offset = 1 if H.reduced else 0
    dim = H.ambient_dim
    normals = []
    for k in mem.tight_rows:
        dense = [0] * dim
        for i, c in H.rows[k].coeffs:
            dense[i - offset] = c
        normals.append(dense)
    rank = _int_rank(normals)
    return VertexCertificate(p, mem.tight_rows, rank, rank == dim)


def interior_witness(lattice):
    """The point v_X = dim(X) / (dim(X) + 1); strictly inside."""
    return rank_point(lattice, (Fraction(d, d + 1) for d in lattice.dims))


def affine_dimension(H):
    """Ambient dimension minus the rank of implied equalities, certified
    by the interior witness being strict on every inequality row."""
    wit = interior_witness(H.lattice)
    mem = membership(H, wit)
    if mem.status != "interior":
        raise AssertionError("interior witness failed; cannot certify dimension")
    return H.ambient_dim - (1 if not H.reduced else 0)


def lattice_points(lattice):
    """All integer points of the polytope, i.e. all q-matroid rank
    functions on the lattice.

    Depth-first search in the lattice's linear order.  Integer
    feasibility prunes hard: on a cover X < Y every feasible point obeys
    v_X <= v_Y <= v_X + 1 (the upper step is submodularity against an
    atom), and each submodularity row is checked as soon as its join,
    the largest of its four spaces, is reached."""
    lat = lattice
    size = lat.size
    join_pairs = [[] for _ in range(size)]
    for x in range(size):
        mask_x = lat.below_mask[x]
        for y in range(x + 1, size):
            if (mask_x >> y) & 1 or (lat.below_mask[y] >> x) & 1:
                continue
            join_pairs[lat.join(x, y)].append((x, y, lat.meet(x, y)))
    vals = [0] * size
    out = []

    def rec(z):
        if z == size:
            out.append(rank_point(lat, vals))
            return
        lo = 0
        hi = lat.dims[z]
        for x in lat.covers_down[z]:
            v = vals[x]
            if v > lo:
                lo = v
            if v + 1 < hi:
                hi = v + 1
        for a, b, m in join_pairs[z]:
            bound = vals[a] + vals[b] - vals[m]
            if bound < hi:
                hi = bound
        for v in range(lo, hi + 1):
            vals[z] = v
            rec(z + 1)
        vals[z] = 0

    rec(1)
    return out


# -- exact linear algebra helpers ---------------------------------------

def _int_rank(rows):
    """Rank over Q of an integer matrix, by fraction-free elimination."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pr = m[rank]
        pv = pr[col]
        for i in range(rank + 1, len(m)):
            ri = m[i]
            f = ri[col]
            if f:
                for j in range(col, ncols):
                    ri[j] = ri[j] * pv - pr[j] * f
                g = 0
                for x in ri:
                    g = math.gcd(g, x)
                if g > 1:
                    for j in range(ncols):
                        ri[j] //= g
        rank += 1
        if rank == len(m):
            break
    return rank


def _affine_rank(points):
    """Dimension of the affine hull of a list of rational tuples."""
    if len(points) <= 1:
        return 0
    base = points[0]
    rows = []
    for p in points[1:]:
        diff = [a - b for a, b in zip(p, base)]
        lcm = math.lcm(*(f.denominator for f in diff)) if diff else 1
        rows.append([int(f * lcm) for f in diff])
    return _int_rank(rows)


# -- vertex enumeration: exact double description ------------------------

def _dd_constraint_order(lat, reduced_rows):
    """Deterministic insertion order: coordinate-major along the lattice
    order, nonneg then type-2 then type-3 inside each coordinate's
    stage.  A submodularity row belongs to the stage of its join, the
    last of its spaces in the linear order, which keeps every
    intermediate cone equal to a small prefix polytope crossed with
    down-rays on the untouched coordinates."""
    def stage(row):
        tag = row.tag
        if tag[0] == "nonneg":
            return (tag[1], 0, tag[1], 0)
        if tag[0] == "type2":
            return (tag[2], 1, tag[1], 0)
        # type3: stage of the join
        j = lat.join(tag[1], tag[2])
        return (j, 2, tag[1], tag[2])
    return sorted(reduced_rows, key=lambda rv: stage(rv[0]))


def enumerate_vertices(H, max_dim=MAX_VERTEX_ENUM_DIM):
    """All vertices of the polytope, by exact double description.

    Works over the homogenization cone {(v, t) : Av <= bt, t >= 0}: the
    initial simplicial cone comes from the type-1 rows plus the t-row,
    and the remaining rows are inserted one at a time.  Rays are primitive
    integer vectors; a positive/negative ray pair combines only if the
    constraints tight at both have rank exactly dim-1, the exact rank
    test for adjacency.  Output is sorted by coordinates."""
    lat = H.lattice
    d = lat.size - 1
    if d > max_dim:
        raise TooLarge(f"ambient dimension {d} exceeds cap {max_dim}")

    type1 = {}
    rest = []
    for row in H.rows:
        if row.tag[0] == "zero":
            continue
        vec = [0] * (d + 1)
        for i, c in row.coeffs:
            if i == 0:
                continue
            vec[i - 1] = c
        vec[d] = -row.rhs
        if row.tag[0] == "type1":
            type1[row.tag[1]] = tuple(vec)
        else:
            rest.append((row, tuple(vec)))

    cons = [type1[i] for i in range(1, lat.size)]
    cons.append(tuple([0] * d + [-1]))  # t >= 0
    base = len(cons)  # == d + 1
    cons.extend(vec for _, vec in _dd_constraint_order(lat, rest))

    D = d + 1
    base_mask = (1 << base) - 1
    rays = []
    for k in range(d):
        vec = [0] * D
        vec[k] = -1
        rays.append((tuple(vec), base_mask ^ (1 << k)))
    corner = tuple(lat.dims[1:]) + (1,)
    rays.append((corner, base_mask ^ (1 << d)))

    def adjacent(zmask):
        tight = []
        m = zmask
        while m:
            low = m & -m
            tight.append(cons[low.bit_length() - 1])
            m ^= low
        return _int_rank(tight) == D - 2

    for ci in range(base, len(cons)):
        c = cons[ci]
        bit = 1 << ci
        plus, zero, minus = [], [], []
        for vec, z in rays:
            val = sum(a * b for a, b in zip(c, vec))
            if val > 0:
                plus.append((vec, z, val))
            elif val < 0:
                minus.append((vec, z, val))
            else:
                zero.append((vec, z | bit))
        if not plus:
            rays = zero + [(vec, z) for vec, z, _ in minus]
            continue
        new = []
        need = D - 2
        for pvec, pz, pval in plus:
            for mvec, mz, mval in minus:
                z = pz & mz
                if z.bit_count() < need or not adjacent(z):
                    continue
                comb = [pval * mm - mval * pp for pp, mm in zip(pvec, mvec)]
                g = 0
                for x in comb:
                    g = math.gcd(g, x)
                if g > 1:
                    comb = [x // g for x in comb]
                new.append((tuple(comb), z | bit))
        rays = zero + [(vec, z) for vec, z, _ in minus] + new

    verts = []
    for vec, _ in rays:
        t = vec[-1]
        assert t != 0, "unbounded direction survived; polytope must be bounded"
        assert t > 0
        values = (Fraction(0),) + tuple(Fraction(x, t) for x in vec[:-1])
        verts.append(rank_point(lat, values))
    verts.sort(key=lambda p: p.values)
    return verts


def f_vector(H, max_dim=MAX_FVECTOR_DIM):
    """Face counts by dimension 0 .. dim(P)-1, from the vertex-facet
    incidence closed under intersection."""
    lat = H.lattice
    if lat.size - 1 > max_dim:
        raise TooLarge(f"ambient dimension {lat.size - 1} exceeds cap {max_dim}")
    verts = enumerate_vertices(H, max_dim=max_dim)
    coords = [p.values for p in verts]
    all_v = frozenset(range(len(verts)))
    rowsets = []
    for row in H.rows:
        s = frozenset(i for i, vals in enumerate(coords)
                      if row.evaluate(vals) == row.rhs)
        if s and s != all_v:
            rowsets.append(s)
    rowsets = list(set(rowsets))
    faces = set()
    frontier = set(rowsets)
    while frontier:
        faces |= frontier
        nxt = set()
        for f in frontier:
            for r in rowsets:
                g = f & r
                if g and g not in faces:
                    nxt.add(g)
        frontier = nxt - faces
    dim_p = _affine_rank(coords)
    counts = [0] * dim_p
    for f in faces:
        fdim = _affine_rank([coords[i] for i in f])
        if fdim < dim_p:
            counts[fdim] += 1
    return tuple(counts)
