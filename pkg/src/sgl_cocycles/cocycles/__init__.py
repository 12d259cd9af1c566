from .ackp import ackp_alpha
from .base import BaseCocycle, CocycleKind, eval_bilinear, get_cocycle
from .closed import c_closed, vir_beta, vir_n_beta
from .kac_moody import kac_moody
from .psi import psi
from .table import CocycleTable, TheoremTable, theorem_table
from .verify import (
    compare_psi_restriction,
    decompose_in_ackp,
    torsor_exponents,
    verify_cocycle_condition,
    verify_gl_restriction,
    verify_jacobi,
    verify_local_mumford,
    verify_mumford,
    verify_oracle,
    verify_torsor,
    verify_witt_pullback,
)

__license__ = "MIT"
__all__ = (
    "BaseCocycle",
    "CocycleKind",
    "CocycleTable",
    "TheoremTable",
    "ackp_alpha",
    "c_closed",
    "compare_psi_restriction",
    "decompose_in_ackp",
    "eval_bilinear",
    "get_cocycle",
    "kac_moody",
    "psi",
    "theorem_table",
    "torsor_exponents",
    "verify_cocycle_condition",
    "verify_gl_restriction",
    "verify_jacobi",
    "verify_local_mumford",
    "verify_mumford",
    "verify_oracle",
    "verify_torsor",
    "verify_witt_pullback",
    "vir_beta",
    "vir_n_beta",
)
