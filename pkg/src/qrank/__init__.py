"""qrank: exact tools for the polytope of q-rank functions.

The package materializes the polytope whose points are the q-rank
functions on the subspace lattice of F_q^n, enumerates and certifies
its vertices in exact rational arithmetic, and implements the
surrounding q-polymatroid toolbox: uniform and paving constructions,
convex combinations, mu-independence, flats and cyclic flats, the
characteristic Puiseux polynomial, and the q-polymatroids induced by
rank-metric codes.
"""

from .charpoly import TruncatedPuiseux, char_puiseux, moebius, paving_combo_char
from .constructions import (PavingSpec, convex_combination, flag_uniform_combo,
                            paving, paving_combo_report, paving_spec,
                            two_uniform_combo_report, uniform)
from .codes import (MatrixCode, VectorCode, code_metrics, dual_code,
                    induced_polymatroid, matrix_code, mrd_closed_form,
                    mrd_combo_independence, shortening_dim, vector_code,
                    vector_code_qmatroid)
from .fields import Field, FqMatrix, make_field, nullspace, rref
from .polytope import (HRepresentation, affine_dimension, build_hrep,
                       enumerate_vertices, f_vector, interior_witness,
                       is_vertex, lattice_points, membership)
from .rankfun import (AxiomReport, RankPoint, check_axioms, classify, closure,
                      cyclic_flats, cyclic_spaces, flats, independence_report,
                      mu_bases, principal_denominator, rank_point)
from .subspaces import SubspaceLattice, build_lattice, gaussian_binomial

__version__ = "0.1.0"
