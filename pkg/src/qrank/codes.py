"""Rank-metric matrix codes, their shortenings, and the q-polymatroids
they induce.

A matrix code is an F_q-linear space of n x m matrices, given by a
basis.  The induced rank function on the subspace lattice of F_q^n is
rho(U) = (k - dim C(U)) / m with C(U) the codewords whose column space
lies inside the orthogonal complement of U.  Minimum distances are
found by exhaustive codeword scans, capped at 2^20 words; the worked
examples all have k <= 3.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from pathlib import Path

from .constructions import profile_independent_dims, point_from_profile, uniform
from .errors import (HypothesisFail, LatticeMismatch, OutOfRange, TooLarge,
                     UnsupportedOrder, UnsupportedShape, ValidationError,
                     ZeroCode)
from .fields import FqMatrix, make_field, nullspace, rref
from .rankfun import rank_point

CODEWORD_SCAN_CAP = 2 ** 20


def _flatten(M):
    return tuple(x for row in M.entries for x in row)


@dataclass(frozen=True)
class MatrixCode:
    """F_q-linear rank-metric code in F_q^{n x m}, given by a basis."""

    field: object
    n: int
    m: int
    generators: tuple  # tuple of n x m FqMatrix, linearly independent

    def __post_init__(self):
        for G in self.generators:
            if G.field is not self.field or (G.rows, G.cols) != (self.n, self.m):
                raise ValidationError("generator shape or field mismatch")
        if self.generators:
            flat = FqMatrix.from_rows(self.field,
                                      [_flatten(G) for G in self.generators],
                                      self.n * self.m)
            if rref(flat).rank != len(self.generators):
                raise ValidationError("generators are linearly dependent")

    @property
    def k(self):
        return len(self.generators)

    def codewords(self, cap=CODEWORD_SCAN_CAP):
        """All q^k codewords as entry tuples (row-major)."""
        q = self.field.q
        if q ** self.k > cap:
            raise TooLarge(f"codeword scan of size {q}^{self.k} exceeds cap {cap}")
        F = self.field
        gens = [_flatten(G) for G in self.generators]
        nm = self.n * self.m
        for coeffs in product(range(q), repeat=self.k):
            w = [0] * nm
            for c, g in zip(coeffs, gens):
                if c:
                    for j, x in enumerate(g):
                        if x:
                            w[j] = F.add(w[j], F.mul(c, x))
            yield tuple(w)

    def word_rank(self, flat_word):
        rows = [flat_word[i * self.m:(i + 1) * self.m] for i in range(self.n)]
        return rref(FqMatrix.from_rows(self.field, rows, self.m)).rank


def matrix_code(field, n, m, generators):
    return MatrixCode(field, n, m, tuple(generators))


def dual_code(C):
    """C^perp under the trace form Tr(M N^T), which on matrix entries is
    the plain dot product of the flattenings."""
    nm = C.n * C.m
    if C.k == 0:
        basis = FqMatrix.identity(C.field, nm).entries
    else:
        flat = FqMatrix.from_rows(C.field, [_flatten(G) for G in C.generators], nm)
        basis = nullspace(flat).entries
    gens = [FqMatrix.from_rows(C.field,
                               [row[i * C.m:(i + 1) * C.m] for i in range(C.n)],
                               C.m)
            for row in basis]
    return MatrixCode(C.field, C.n, C.m, tuple(gens))


def minimum_distance(C, cap=CODEWORD_SCAN_CAP):
    if C.k == 0:
        raise ZeroCode("minimum distance of the zero code is undefined")
    best = None
    for w in C.codewords(cap):
        if any(w):
            r = C.word_rank(w)
            if best is None or r < best:
                best = r
                if best == 1:
                    break
    return best


@dataclass(frozen=True)
class CodeMetrics:
    k: int
    d: int
    d_perp: int
    is_mrd: bool


def code_metrics(C, cap=CODEWORD_SCAN_CAP):
    """Dimension, minimum distance, dual distance, and the Singleton
    bound check k = max(n,m) (min(n,m) - d + 1)."""
    d = minimum_distance(C, cap)
    d_perp = minimum_distance(dual_code(C), cap)
    singleton = max(C.n, C.m) * (min(C.n, C.m) - d + 1)
    return CodeMetrics(C.k, d, d_perp, C.k == singleton)


def shortening_dim(C, lattice, u):
    """dim { M in C : colsp(M) <= U^perp } for the subspace at index u.

    Column spaces lie in U^perp exactly when B_U M = 0 for a basis
    matrix B_U of U, which is a linear system on the coordinates of C."""
    if lattice.q != C.field.q or lattice.n != C.n:
        raise LatticeMismatch("lattice does not match the code's row space")
    if C.k == 0:
        return 0
    B = lattice.subspaces[u].basis
    if B.rows == 0:
        return C.k
    cols = []
    for G in C.generators:
        cols.append(_flatten(B.mul(G)))
    # system rows indexed by (row of B, column of G); unknowns are the c_i
    mat = FqMatrix.from_rows(C.field,
                             [tuple(col[r] for col in cols) for r in range(len(cols[0]))],
                             C.k)
    return C.k - rref(mat).rank


def induced_polymatroid(C, lattice):
    """RankPoint with v_U = (k - dim C(U)) / m."""
    vals = [Fraction(C.k - shortening_dim(C, lattice, u), C.m)
            for u in range(lattice.size)]
    return rank_point(lattice, vals)


def mrd_closed_form(lattice, m, d):
    """Rank function of an MRD code in F_q^{n x m} with distance d.

    For m >= n it is the uniform q-matroid of rank n-d+1.  For m = n-1
    the value is dim(U) up to dimension n-d and n(n-d)/(n-1) above.
    Other shapes with m < n are rejected: the cited bound leaves a gap
    of dimensions where the rank value is not determined."""
    n = lattice.n
    if not 1 <= d <= min(n, m):
        raise OutOfRange(f"need 1 <= d <= min(n, m), got d={d}")
    if m >= n:
        return uniform(lattice, n - d + 1)
    if m == n - 1:
        plateau = Fraction(n * (n - d), n - 1)
        vals = [Fraction(dd) if dd <= n - d else plateau for dd in lattice.dims]
        return rank_point(lattice, vals)
    raise UnsupportedShape(f"m={m} < n-1={n - 1}: no closed form is available")


def mrd_combo_values(n, d1, d2, lam):
    """Dimension profile of (1-lam) M[C1] + lam M[C2] for MRD codes in
    F_q^{n x (n-1)} with distances d1 > d2 (so k1 < k2)."""
    k1, k2 = n * (n - d1), n * (n - d2)
    lam = Fraction(lam)
    vals = []
    for dd in range(n + 1):
        if dd <= n - d1:
            vals.append(Fraction(dd))
        elif dd <= n - d2:
            vals.append(Fraction(k1, n - 1) * (1 - lam) + lam * dd)
        else:
            vals.append((1 - lam) * Fraction(k1, n - 1) + lam * Fraction(k2, n - 1))
    return tuple(vals)


@dataclass(frozen=True)
class MrdComboReport:
    n: int
    k1: int
    k2: int
    lam: Fraction
    mu: int
    values_by_dim: tuple
    all_independent: bool
    point: object  # RankPoint when a lattice was supplied


def mrd_combo_independence(n, d1, d2, lam, lattice=None):
    """Combination of two MRD-induced q-polymatroids on F_q^{n x (n-1)}.

    Requires 1 < k1 < k2 with k1 + k2 >= n (k_i = n(n - d_i)); then
    mu = denom(lam) * (n-1) is a denominator and the whole lattice is
    mu-independent, which the report re-derives from the profile."""
    k1, k2 = n * (n - d1), n * (n - d2)
    if not (1 < k1 < k2 and k1 + k2 >= n):
        raise HypothesisFail(
            f"need 1 < k1 < k2 and k1 + k2 >= n; got k1={k1}, k2={k2}, n={n}")
    lam = Fraction(lam)
    if not 0 < lam < 1:
        raise HypothesisFail(f"need 0 < lam < 1, got {lam}")
    mu = lam.denominator * (n - 1)
    vals = mrd_combo_values(n, d1, d2, lam)
    all_indep = n in profile_independent_dims(vals, mu)
    point = None
    if lattice is not None:
        if lattice.n != n:
            raise LatticeMismatch("lattice dimension does not match n")
        point = point_from_profile(lattice, vals)
    return MrdComboReport(n, k1, k2, lam, mu, vals, all_indep, point)


# -- vector codes over an extension field --------------------------------

@dataclass(frozen=True)
class VectorCode:
    """F_{q^m}-linear code of length n, given by a basis over F_{q^m}."""

    base_field: object   # GF(q)
    ext_field: object    # GF(q^m)
    n: int
    generators: tuple    # tuple of length-n tuples of GF(q^m) encodings

    def __post_init__(self):
        if self.ext_field.p != self.base_field.p:
            raise UnsupportedOrder("extension field characteristic mismatch")
        if self.base_field.e != 1:
            raise UnsupportedOrder("vector codes are supported over prime base fields")
        for g in self.generators:
            if len(g) != self.n:
                raise ValidationError("generator length mismatch")
        if self.generators:
            M = FqMatrix.from_rows(self.ext_field, self.generators, self.n)
            if rref(M).rank != len(self.generators):
                raise ValidationError("generators dependent over the extension field")

    @property
    def k(self):
        return len(self.generators)

    @property
    def m(self):
        return self.ext_field.e


def vector_code(q, m, n, generators):
    base = make_field(q)
    ext = make_field(q ** m)
    return VectorCode(base, ext, n, tuple(tuple(g) for g in generators))


def vector_code_qmatroid(V, lattice):
    """Integer RankPoint with rho(W) = k - dim_{F_{q^m}} C(W), where
    C(W) kills the codewords orthogonal to W over the extension field."""
    if lattice.q != V.base_field.q or lattice.n != V.n:
        raise LatticeMismatch("lattice does not match the code length")
    ext = V.ext_field
    vals = []
    for w in range(lattice.size):
        B = lattice.subspaces[w].basis
        if B.rows == 0:
            vals.append(0)
            continue
        rows = [tuple(ext.dot(g, brow) for g in V.generators)
                for brow in B.entries]
        mat = FqMatrix.from_rows(ext, rows, V.k)
        vals.append(rref(mat).rank)
    return rank_point(lattice, vals)


def expanded_matrix_code(V):
    """Column expansion of a vector code: coordinate j of a codeword
    becomes column j, written in the basis 1, t, t^2, ... of F_{q^m}
    over F_q.  The result is a matrix code in F_q^{m x n} whose induced
    q-polymatroid lives on the lattice of F_q^m."""
    base, ext = V.base_field, V.ext_field
    m, n = V.m, V.n

    def expand(vec):
        cols = [ext.decode(x) for x in vec]
        rows = [tuple(cols[j][i] for j in range(n)) for i in range(m)]
        return FqMatrix.from_rows(base, rows, n)

    gens = []
    for g in V.generators:
        for a in range(m):
            scaled = tuple(ext.mul(ext.encode([0] * a + [1]), x) for x in g)
            gens.append(expand(scaled))
    return MatrixCode(base, m, n, tuple(gens))


# -- fixtures and serialization -------------------------------------------

def code_to_json(C):
    return {
        "q": C.field.q,
        "n": C.n,
        "m": C.m,
        "generators": [[list(r) for r in G.entries] for G in C.generators],
    }


def code_from_json(obj):
    field = make_field(obj["q"])
    n, m = obj["n"], obj["m"]
    gens = [FqMatrix.from_rows(field, [tuple(r) for r in rows], m)
            for rows in obj["generators"]]
    return MatrixCode(field, n, m, tuple(gens))


def load_code(path):
    with open(path, "r", encoding="utf-8") as fh:
        return code_from_json(json.load(fh))


def bundled_vertex_code_path():
    return Path(__file__).parent / "data" / "f2_3x2_vertex_code.json"


def vertex_example_code():
    """The F_2-[3x2, 3, 1] code whose induced point is a polytope vertex
    with fractional coordinates; ships as a JSON fixture as well."""
    return load_code(bundled_vertex_code_path())


def gabidulin_line_code():
    """The F_8-line spanned by (1, t), column-expanded to an
    F_2-[3x2, 3, 2] MRD code."""
    return expanded_matrix_code(vector_code(2, 3, 2, [(1, 2)]))
