"""The lattice of subspaces of F_q^n with a fixed linear order.

Subspaces are identified with their canonical RREF bases and listed
grade by grade (dimension 0 first, full space last); inside a grade the
order is lexicographic on the flattened basis entries.  That order is
what coordinatizes rank points, so it must never change.

build_lattice enumerates every subspace exactly once, records the cover
relation, containment bitmasks and (for small lattices) full meet/join
tables, and exposes the helpers the rest of the package leans on.
"""

from __future__ import annotations

import hashlib
import json
from itertools import combinations, product

from .errors import OutOfRange, TooLarge
from .fields import FqMatrix, make_field, matrix_vectors, nullspace, rref

MAX_LATTICE_SIZE = 1000
MEMO_THRESHOLD = 200


def gaussian_binomial(n, l, q):
    """Number of l-dimensional subspaces of F_q^n."""
    if not 0 <= l <= n:
        raise OutOfRange(f"need 0 <= l <= n, got l={l}, n={n}")
    num = 1
    den = 1
    for i in range(l):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den


def _rref_bases(field, n, r):
    """All full-rank r x n RREF matrices over the field, one per subspace."""
    if r == 0:
        yield FqMatrix(field, 0, n, ())
        return
    q = field.q
    for pivots in combinations(range(n), r):
        pivot_set = set(pivots)
        free = [(i, j) for i in range(r)
                for j in range(pivots[i] + 1, n) if j not in pivot_set]
        for vals in product(range(q), repeat=len(free)):
            rows = [[0] * n for _ in range(r)]
            for i in range(r):
                rows[i][pivots[i]] = 1
            for (i, j), v in zip(free, vals):
                rows[i][j] = v
            yield FqMatrix.from_rows(field, rows, n)


class Subspace:
    """A subspace of F_q^n held by its canonical RREF basis."""

    __slots__ = ("basis", "dim")

    def __init__(self, basis):
        self.basis = basis
        self.dim = basis.rows

    def __repr__(self):
        return f"Subspace(dim={self.dim}, rows={self.basis.entries})"


class SubspaceLattice:
    """Fully enumerated L(F_q^n); immutable after build_lattice returns."""

    def __init__(self, field, n, subspaces):
        self.field = field
        self.q = field.q
        self.n = n
        self.subspaces = tuple(subspaces)
        self.size = len(self.subspaces)
        self.dims = tuple(s.dim for s in self.subspaces)
        self.index = {s.basis.entries: i for i, s in enumerate(self.subspaces)}
        offsets = [0] * (n + 2)
        for s in self.subspaces:
            offsets[s.dim + 1] += 1
        for d in range(1, n + 2):
            offsets[d] += offsets[d - 1]
        self.grade_offsets = tuple(offsets)
        self._vecsets = tuple(frozenset(matrix_vectors(s.basis))
                              for s in self.subspaces)
        # containment bitmasks: bit i of below_mask[j] <=> subspace i <= j
        below = []
        for j, vs in enumerate(self._vecsets):
            mask = 0
            dj = self.dims[j]
            for i, s in enumerate(self.subspaces):
                if self.dims[i] <= dj and all(r in vs for r in s.basis.entries):
                    mask |= 1 << i
            below.append(mask)
        self.below_mask = tuple(below)
        self._below_list = tuple(tuple(self._bits(m)) for m in self.below_mask)
        self.covers_down = tuple(
            tuple(i for i in self._below_list[j] if self.dims[i] == self.dims[j] - 1)
            for j in range(self.size))
        ups = [[] for _ in range(self.size)]
        for j in range(self.size):
            for i in self.covers_down[j]:
                ups[i].append(j)
        self.covers_up = tuple(tuple(u) for u in ups)
        a0, a1 = self.grade_offsets[1], self.grade_offsets[2]
        self.atom_range = range(a0, a1)
        self.atoms_of = tuple(
            tuple(i for i in self._below_list[j] if self.dims[i] == 1)
            for j in range(self.size))
        self._meet_table = None
        self._join_table = None
        if self.size <= MEMO_THRESHOLD:
            self._fill_meet_join()
        self._digest = None

    @staticmethod
    def _bits(mask):
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    # -- basic queries -------------------------------------------------

    @property
    def zero(self):
        return 0

    @property
    def top(self):
        return self.size - 1

    def dim(self, i):
        return self.dims[i]

    def grade(self, d):
        return range(self.grade_offsets[d], self.grade_offsets[d + 1])

    def leq(self, i, j):
        return (self.below_mask[j] >> i) & 1 == 1

    def below(self, j):
        """Indices of all subspaces contained in j (including j)."""
        return self._below_list[j]

    def hyperplanes_of(self, j):
        return self.covers_down[j]

    def index_of_matrix(self, M):
        """Canonical index of the row space of M (any spanning matrix)."""
        return self.index[rref(M).matrix.entries]

    def index_of_rows(self, rows):
        if not rows:
            return 0
        M = FqMatrix.from_rows(self.field, rows, self.n)
        return self.index_of_matrix(M)

    # -- meet / join ---------------------------------------------------

    def _fill_meet_join(self):
        size = self.size
        meet = [[0] * size for _ in range(size)]
        join = [[0] * size for _ in range(size)]
        for i in range(size):
            for j in range(i, size):
                m = self._meet_raw(i, j)
                v = self._join_raw(i, j)
                meet[i][j] = meet[j][i] = m
                join[i][j] = join[j][i] = v
        self._meet_table = tuple(tuple(r) for r in meet)
        self._join_table = tuple(tuple(r) for r in join)

    def _meet_raw(self, i, j):
        if self.leq(i, j):
            return i
        if self.leq(j, i):
            return j
        common = self._vecsets[i] & self._vecsets[j]
        vecs = [v for v in common if any(v)]
        if not vecs:
            return 0
        return self.index[rref(FqMatrix.from_rows(self.field, vecs, self.n)).matrix.entries]

    def _join_raw(self, i, j):
        if self.leq(i, j):
            return j
        if self.leq(j, i):
            return i
        rows = self.subspaces[i].basis.entries + self.subspaces[j].basis.entries
        return self.index[rref(FqMatrix.from_rows(self.field, rows, self.n)).matrix.entries]

    def meet(self, i, j):
        if self._meet_table is not None:
            return self._meet_table[i][j]
        return self._meet_raw(i, j)

    def join(self, i, j):
        if self._join_table is not None:
            return self._join_table[i][j]
        return self._join_raw(i, j)

    def meet_join(self, i, j):
        return self.meet(i, j), self.join(i, j)

    def join_many(self, indices):
        acc = 0
        for i in indices:
            acc = self.join(acc, i)
        return acc

    def orthogonal_complement(self, i):
        """Index of U^perp under the standard dot product."""
        sub = self.subspaces[i]
        if sub.dim == 0:
            return self.top
        ns = nullspace(sub.basis)
        if ns.rows == 0:
            return 0
        return self.index[ns.entries]

    def boundary_sets(self, i):
        """(hyperplanes of X, atoms of X) for the subspace at index i."""
        return self.covers_down[i], self.atoms_of[i]

    # -- serialization -------------------------------------------------

    def dump(self):
        return {
            "q": self.q,
            "n": self.n,
            "subspaces": [[list(r) for r in s.basis.entries] for s in self.subspaces],
        }

    def dump_json(self):
        return json.dumps(self.dump(), sort_keys=True, separators=(",", ":"))

    def order_digest(self):
        if self._digest is None:
            h = hashlib.sha256(self.dump_json().encode("ascii"))
            self._digest = h.hexdigest()[:16]
        return self._digest

    def __repr__(self):
        return f"SubspaceLattice(q={self.q}, n={self.n}, size={self.size})"


def build_lattice(q, n, max_size=MAX_LATTICE_SIZE):
    """Enumerate L(F_q^n) in canonical order.

    Raises TooLarge when the lattice would have more than max_size
    elements (the default keeps exhaustive oracles feasible).
    """
    if n < 2:
        raise OutOfRange(f"need n >= 2, got {n}")
    field = make_field(q)
    total = sum(gaussian_binomial(n, l, q) for l in range(n + 1))
    if total > max_size:
        raise TooLarge(f"L(F_{q}^{n}) has {total} subspaces, cap is {max_size}")
    subspaces = []
    for r in range(n + 1):
        grade = sorted(_rref_bases(field, n, r),
                       key=lambda M: tuple(x for row in M.entries for x in row))
        expected = gaussian_binomial(n, r, q)
        assert len(grade) == expected, (q, n, r, len(grade), expected)
        subspaces.extend(Subspace(M) for M in grade)
    return SubspaceLattice(field, n, subspaces)
