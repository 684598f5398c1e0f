"""
Hopf YD Verifier - Group G = Aut(H) × Aut(H)
Composantes (α,β) et loi de groupe (α,β)∗(γ,δ) = (αγ, δγ⁻¹βγ)
"""
from dataclasses import dataclass
from typing import Tuple

from src.hopf.algebra import HopfAlgebraData
from src.hopf.automorphisms import HopfAutomorphism


@dataclass(frozen=True, eq=False)
class GroupElementG:
    alpha: HopfAutomorphism
    beta: HopfAutomorphism

    @classmethod
    def unit(cls, H: HopfAlgebraData) -> "GroupElementG":
        return cls(HopfAutomorphism.identity(H), HopfAutomorphism.identity(H))

    @property
    def dim(self) -> int:
        return self.alpha.dim

    @property
    def name(self) -> str:
        return f"({self.alpha.name},{self.beta.name})"

    def __mul__(self, other: "GroupElementG") -> "GroupElementG":
        gamma, delta = other.alpha, other.beta
        alpha = self.alpha.compose(gamma)
        beta = delta.compose(gamma.inverse()).compose(self.beta).compose(gamma)
        return GroupElementG(alpha, beta)

    def inverse(self) -> "GroupElementG":
        a_inv = self.alpha.inverse()
        return GroupElementG(a_inv, self.alpha.compose(self.beta.inverse()).compose(a_inv))

    def conjugate(self, q: "GroupElementG") -> "GroupElementG":
        """self ∗ q ∗ self⁻¹"""
        return self * q * self.inverse()

    def is_unit(self) -> bool:
        return self.alpha.is_identity() and self.beta.is_identity()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupElementG):
            return NotImplemented
        return self.alpha == other.alpha and self.beta == other.beta

    __hash__ = None  # type: ignore[assignment]

    def key(self) -> Tuple[Tuple[str, ...], Tuple[str, ...]]:
        return (self.alpha.key(), self.beta.key())

    def __repr__(self) -> str:
        return f"GroupElementG{self.name}"
