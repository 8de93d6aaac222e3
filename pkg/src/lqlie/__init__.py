"""Exact computations in the bigraded Lie algebras lq and ls."""
from .bimould import (
    Bimould,
    CommPoly,
    PredicateReport,
    ari,
    arit,
    beta,
    beta_inverse,
    delta_bimould,
    is_alternal,
    is_even,
    is_swap_invariant,
    mu,
    swap,
)
from .brackets import (
    SideTag,
    bracket_A,
    bracket_A0,
    delta,
    der_A,
    ihara_bracket,
    ihara_der,
    mul0,
    zero_projected_der,
)
from .embedding import piY, theta, thetaX, thetaY
from .errors import (
    AlphabetError,
    DomainError,
    NotInDbiError,
    ParseError,
    ResourceLimitError,
    TrailingB0Error,
)
from .hopfmaps import (
    S0,
    antipode_S,
    from_dbi,
    is_primitive,
    partial0,
    pi0,
    reduced_coproduct,
    rho,
    sec,
    tau,
    tau_dbi,
    to_dbi,
)
from .ncpoly import (
    Alphabet,
    Letter,
    NcPoly,
    Word,
    balanced_quasi_shuffle,
    bword,
    commutator,
    concat,
    dword,
    gr_D,
    shuffle,
    wt_dep,
    xword,
    yword,
)
from .parsing import parse, parse_expr
from .spaces import (
    GradedBasis,
    MembershipReport,
    basis_lq,
    basis_ls,
    dim_table,
    is_in_lq,
    is_in_ls,
    lyndon_basis,
)

__all__ = [name for name in dir() if not name.startswith("_")]
