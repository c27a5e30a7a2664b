"""Semi-magic squares whose entries are the N-torsion of a finite abelian group."""

from .curve import (
    INFINITY,
    Curve,
    CurvePoint,
    enumerate_points,
    find_full_torsion_curve,
    find_torsion_basis,
    torsion_subgroup,
)
from .errors import (
    CharacteristicError,
    DomainError,
    GroupError,
    NotInvertibleError,
    ParameterError,
    ResourceError,
    SemimagicError,
    TorsionError,
)
from .group import (
    AbelianGroup,
    ProductGroup,
    SymbolicTorsion3,
    TorsionBasis,
    element_for_index,
    make_product_group,
    make_symbolic_3torsion,
    psi,
    verify_basis,
)
from .square import (
    GridPos,
    LatinSquare,
    MagicSquare,
    StepParams,
    VerifyReport,
    build_square,
    latin_to_square,
    line_sum_prediction,
    reverse_search,
    step_line_sums,
    step_positions,
    to_classic_labels,
    validate_latin,
    validate_params,
    verify_square,
)
from .zmod import CoordPair, Residue, inverse_mod, phi, phi_inv

__version__ = "0.1.0"
