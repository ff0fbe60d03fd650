"""The first homology lattice of a closed genus-g surface.

Basis convention: a1, b1, a2, b2, ..., a_g, b_g, with the algebraic
intersection form given blockwise by [[0, 1], [-1, 0]] for each (a_i, b_i)
pair. This is the ambient module every cut system and every chain complex in
the package lives in.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .lattice import Subgroup, as_int_vector, column_vector, identity, zeros


@dataclass(frozen=True)
class SymplecticLattice:
    """Z^2g with the standard unimodular skew form of a genus-g surface."""

    genus: int

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")

    @property
    def rank(self) -> int:
        return 2 * self.genus

    @cached_property
    def form_matrix(self) -> np.ndarray:
        J = zeros(self.rank, self.rank)
        for i in range(self.genus):
            J[2 * i, 2 * i + 1] = 1
            J[2 * i + 1, 2 * i] = -1
        J.setflags(write=False)
        return J

    def intersection_number(self, x: Sequence[int], y: Sequence[int]) -> int:
        """Algebraic intersection <x, y>; skew-symmetric and unimodular."""
        x = as_int_vector(x, self.rank)
        y = as_int_vector(y, self.rank)
        total = 0
        for i in range(self.genus):
            total += x[2 * i] * y[2 * i + 1] - x[2 * i + 1] * y[2 * i]
        return total

    def pi_dual(self, x: Sequence[int]) -> tuple[int, ...]:
        """Coordinates of the functional <., x> in the dual basis.

        The assignment x -> <., x> identifies the lattice with its dual because
        the form is unimodular; concretely the coordinate vector is J @ x.
        """
        x = column_vector(as_int_vector(x, self.rank))
        out = self.form_matrix @ x
        return tuple(int(e) for e in out[:, 0])

    def is_isotropic(self, sub: Subgroup) -> bool:
        """Whether the form vanishes identically on the subgroup."""
        if sub.ambient_rank != self.rank:
            raise ValueError("subgroup lives in a different ambient rank")
        B = sub.basis
        return not np.any(B.T @ self.form_matrix @ B)

    def is_lagrangian(self, sub: Subgroup) -> bool:
        return sub.rank == self.genus and self.is_isotropic(sub)

    def m_subgroup(self, lagrangian: Subgroup) -> Subgroup:
        """Image of a Lagrangian under the duality map x -> <., x>."""
        if not self.is_lagrangian(lagrangian):
            raise ValueError("m_subgroup needs a Lagrangian subgroup")
        return Subgroup.from_columns(
            self.rank, [self.pi_dual(col) for col in lagrangian.columns()]
        )

    def transvection_matrix(self, v: Sequence[int]) -> np.ndarray:
        """Matrix of x -> x + <x, v> v, an integral symplectomorphism."""
        v = column_vector(as_int_vector(v, self.rank))
        return identity(self.rank) + v @ (self.form_matrix @ v).T

    def standard_basis_vector(self, index: int) -> tuple[int, ...]:
        vec = [0] * self.rank
        vec[index] = 1
        return tuple(vec)
