"""Exact skein action of the symmetric group on noncrossing partitions."""

from .core import (
    AlmostNoncrossing,
    Crossing,
    Noncrossing,
    ParseError,
    Permutation,
    SetPartition,
    apply_perm,
    classify,
    conjugator_to_canonical,
    dominance_leq,
    enumerate_partitions,
    pi_lambda,
    reflect,
    rotate,
    valence,
)
from .projection import project, project_via
from .qpoly import QPoly, eval_at_root
from .report import RunReport
from .skein import (
    NCVector,
    SignedPartition,
    act_perm,
    act_word,
    reduced_word,
    rho,
    sigma,
    sigma_tilde,
    star_act,
    tau,
    tau_tilde,
)

__version__ = "0.1.0"

__all__ = [
    "AlmostNoncrossing",
    "Crossing",
    "NCVector",
    "Noncrossing",
    "ParseError",
    "Permutation",
    "QPoly",
    "RunReport",
    "SetPartition",
    "SignedPartition",
    "act_perm",
    "act_word",
    "apply_perm",
    "classify",
    "conjugator_to_canonical",
    "dominance_leq",
    "enumerate_partitions",
    "eval_at_root",
    "pi_lambda",
    "project",
    "project_via",
    "reduced_word",
    "reflect",
    "rho",
    "rotate",
    "sigma",
    "sigma_tilde",
    "star_act",
    "tau",
    "tau_tilde",
    "valence",
]
