"""drinfactor: factor univariate polynomials over odd finite fields with
rank-2 Drinfeld modules carrying complex multiplication.

The randomized splitter separates supersingular from ordinary factors
through a Hasse-invariant lift; the deterministic variant sweeps the CM
parameter in order and solves equal-degree factorization without
randomness.  A classical DDF/Cantor-Zassenhaus pipeline ships alongside as
the oracle, and a skew-polynomial computation of the Hasse invariant
cross-checks the lift.

Hot kernels run compiled when the extension module built; set
DRINFACTOR_PURE=1 before import to force the pure-Python fallback
(``drinfactor.kernel.BACKEND`` names the active one).
"""

from .kernel import BACKEND
from .errors import FallbackWarning, IntegrityError, SmallFieldWarning
from .field import FieldElem, FieldSpec, build_extension, quadratic_character
from .poly import (
    Poly,
    Residue,
    find_roots,
    format_poly,
    frobenius_q,
    gcd,
    mod_pow,
    parse_poly,
    squarefree_decomposition,
    squarefree_part,
)
from .skew import SkewPoly, drinfeld_image, hasse_direct
from .cm import CMModule, check_good_reduction, j_invariant, j_square_identity_holds
from .hasse import FrobTables, HasseSeq, build_tables, is_supersingular, lift_at
from .baseline import (
    cz_edf,
    ddf,
    factor_full,
    is_irreducible,
    random_factor_mix,
    random_irreducible,
    random_monic,
    random_squarefree,
)
from .factor import (
    FactorSet,
    factor,
    factor_edf_deterministic,
    factor_randomized,
    lift_factor_small_q,
    verify_factorization,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CMModule",
    "FactorSet",
    "FallbackWarning",
    "FieldElem",
    "FieldSpec",
    "FrobTables",
    "HasseSeq",
    "IntegrityError",
    "Poly",
    "Residue",
    "SkewPoly",
    "SmallFieldWarning",
    "build_extension",
    "build_tables",
    "check_good_reduction",
    "cz_edf",
    "ddf",
    "drinfeld_image",
    "factor",
    "factor_edf_deterministic",
    "factor_full",
    "factor_randomized",
    "find_roots",
    "format_poly",
    "frobenius_q",
    "gcd",
    "hasse_direct",
    "is_irreducible",
    "is_supersingular",
    "j_invariant",
    "j_square_identity_holds",
    "lift_at",
    "lift_factor_small_q",
    "mod_pow",
    "parse_poly",
    "quadratic_character",
    "random_factor_mix",
    "random_irreducible",
    "random_monic",
    "random_squarefree",
    "squarefree_decomposition",
    "squarefree_part",
    "verify_factorization",
    "__version__",
]
