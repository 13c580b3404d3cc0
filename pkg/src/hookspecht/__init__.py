"""Exact KLR Specht modules of hook shape ``(a,1^b)`` at ``e = 2``.

The generic rewriting engine acts on the tableau basis of any hook Specht
module; a closed-form layer covers the domino subspace; the endomorphism
``f`` and its spectrum decide decomposability.
"""

from .combinatorics import (
    DominoNormalForm,
    HookShape,
    StandardTableau,
    enumerate_domino,
    enumerate_standard,
    normal_form,
    residue_sequence,
)
from .endomorphism import (
    Verdict,
    analyze,
    build_f,
    decide,
    end_algebra_b2,
    generalized_eigenspaces,
    matrix_of_f,
    spectrum,
)
from .fields import Field
from .hook_actions import HookActions
from .klr_engine import E, ModuleElement, Psi, RewriteError, SpechtModule, Y
from .matrices import ActionMatrix
from .oracle import VerificationReport, verify_presentation, verify_domino_identities, verify_endomorphism

__version__ = "0.1.0"

__all__ = [
    "ActionMatrix",
    "DominoNormalForm",
    "E",
    "Field",
    "HookActions",
    "HookShape",
    "ModuleElement",
    "Psi",
    "RewriteError",
    "SpechtModule",
    "StandardTableau",
    "VerificationReport",
    "Verdict",
    "Y",
    "analyze",
    "build_f",
    "decide",
    "end_algebra_b2",
    "enumerate_domino",
    "enumerate_standard",
    "generalized_eigenspaces",
    "matrix_of_f",
    "normal_form",
    "residue_sequence",
    "spectrum",
    "verify_presentation",
    "verify_domino_identities",
    "verify_endomorphism",
]
