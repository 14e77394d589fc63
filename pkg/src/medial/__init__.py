"""Arrow terms of the free medial category, their permutation semantics and a coherence checker."""

from .decision import arrows_equal, functor_f
from .errors import (
    ArityMismatch,
    BudgetExceeded,
    DialectMismatch,
    IndexOutOfRange,
    MedialError,
    MissingBinding,
    ParseError,
    SizeMismatch,
    TypeMismatch,
    UnitNotAllowed,
    UnsatisfiableIndices,
)
from .semantics import Permutation, compose_perm, eval_perm, identity_perm, tensor_perm
from .syntax import (
    TOP,
    Cm,
    Comp,
    Conj,
    DeltaBw,
    DeltaFw,
    Id,
    Letter,
    SigmaBw,
    SigmaFw,
    Tensor,
    Unit,
    compose,
    format_arrow,
    format_formula,
    parse_arrow,
    parse_formula,
)

__version__ = "0.1.0"
