"""Self-dual bent sequences of Hadamard matrices and the groups acting on them."""

__version__ = "0.1.0"

from .errors import BentHadError
from .matrix import (
    HadamardMatrix,
    MonomialMatrix,
    apply_monomial,
    bush_check,
    kronecker,
    make_hadamard,
    normalize,
    paley,
    regularity,
    sylvester,
    sylvester_form,
    symplectic_form,
)
from .bent import (
    EigenBasis,
    HadamardCode,
    SearchResult,
    covering_distance,
    dual,
    eigenspace_basis,
    greedy_minor,
    is_bent,
    is_self_dual_bent,
    kron_seq,
    search_eigenspace,
    search_exhaustive,
    selfdualize,
)
from .groebner import build_system, buchberger, search_groebner, solve_pm1
from .symmetry import c_group, full_aut, full_aut_order, polarities, saut, strong_equivalent
from .affine import ExtendedAffineTransform, apply_eat, eat_in_saut, orth_group
