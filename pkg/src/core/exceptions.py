"""
Hopf YD Verifier - Exceptions
Hiérarchie d'erreurs partagée par tous les modules
"""
from typing import Any, Optional, Sequence


class HopfYDError(Exception):
    """Erreur de base du vérificateur"""


class MalformedInputError(HopfYDError):
    """Fichier d'entrée illisible ou non conforme au schéma"""


class ShapeMismatchError(HopfYDError):
    """Étape d'un plan de contraction incompatible avec les pattes courantes"""

    def __init__(self, message: str, step_index: Optional[int] = None):
        self.step_index = step_index
        if step_index is not None:
            message = f"step {step_index}: {message}"
        super().__init__(message)


class AxiomViolationError(HopfYDError):
    """Une structure ne satisfait pas un axiome à la construction"""

    def __init__(self, axiom: str, basis_tuple: Optional[Sequence[Any]] = None):
        self.axiom = axiom
        self.basis_tuple = tuple(basis_tuple) if basis_tuple is not None else None
        where = f" at {self.basis_tuple}" if self.basis_tuple is not None else ""
        super().__init__(f"axiom '{axiom}' violated{where}")


class ComponentMismatchError(HopfYDError):
    """Modules dans des composantes différentes de G"""


class SingularMatrixError(HopfYDError):
    """Matrice non inversible sur le corps"""


class NoPairInInvolutionError(HopfYDError):
    """Aucune paire en involution pour la composante demandée"""


class BudgetExceededError(HopfYDError):
    """Tenseur intermédiaire au-delà du budget --max-dim"""
