"""Chain complexes attached to a diagram and their integral (co)homology.

Three independent routes to the same manifold invariants live here:

* a five-term complex of free groups built from the Lagrangians, whose
  homology in degrees 0..4 is the integral homology of the 4-manifold;
* Cech complexes of the three coefficient presheaves over the standard
  three-set cover, arranged into a 3x3 Hodge-style diamond whose antidiagonals
  assemble the cohomology;
* a dual complex through handlebody and sector-boundary H1 quotients, whose
  middle homology gives a second, independently computed copy of H2.

Keeping all three honest (they are compared in the tests, never silently
merged) is the package's main self-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .diagram import TrisectionDiagram, ensure_valid
from .lattice import (
    Subgroup,
    _snf_with_inverses,
    intmat,
    invariant_factors,
    kernel_basis,
    matrix_columns,
    snf_diagonal,
    zeros,
)


class InvalidStateError(RuntimeError):
    """Internal invariant broke; indicates a bug rather than bad user input."""


@dataclass(frozen=True)
class HomologyGroup:
    """Finitely generated abelian group: free rank plus invariant factors."""

    rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 0 or any(t < 2 for t in self.torsion):
            raise ValueError("rank must be >= 0 and invariant factors >= 2")

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def direct_sum(self, other: "HomologyGroup") -> "HomologyGroup":
        merged = self.torsion + other.torsion
        if merged:
            diag = zeros(len(merged), len(merged))
            for i, t in enumerate(merged):
                diag[i, i] = t
            merged = tuple(f for f in invariant_factors(diag) if f >= 2)
        return HomologyGroup(self.rank + other.rank, tuple(merged))

    def __str__(self) -> str:
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True, eq=False)
class FreeChainComplex:
    """Finite complex of free abelian groups with explicit differentials.

    Position i maps to position i+1 via ``diffs[i]``; consecutive composites
    must vanish. ``degrees`` carries the semantic degree label of each
    position (descending for the homology complex, ascending Cech degrees for
    the cochain complexes).
    """

    term_names: tuple[str, ...]
    ranks: tuple[int, ...]
    degrees: tuple[int, ...]
    diffs: tuple[np.ndarray, ...]

    def __post_init__(self):
        n = len(self.ranks)
        if len(self.term_names) != n or len(self.degrees) != n or len(self.diffs) != n - 1:
            raise ValueError("inconsistent complex data")
        for i, mat in enumerate(self.diffs):
            if mat.shape != (self.ranks[i + 1], self.ranks[i]):
                raise ValueError(
                    f"differential {i} has shape {mat.shape}, expected "
                    f"({self.ranks[i + 1]}, {self.ranks[i]})"
                )
        for i in range(len(self.diffs) - 1):
            if np.any(self.diffs[i + 1] @ self.diffs[i]):
                raise ValueError(f"differentials {i} and {i + 1} do not compose to zero")

    def position_of_degree(self, degree: int) -> int:
        try:
            return self.degrees.index(degree)
        except ValueError:
            raise ValueError(
                f"degree {degree} not in this complex (degrees: {self.degrees})"
            ) from None

    def _outgoing(self, pos: int) -> np.ndarray:
        return self.diffs[pos] if pos < len(self.diffs) else zeros(0, self.ranks[pos])

    def _incoming(self, pos: int) -> np.ndarray:
        return self.diffs[pos - 1] if pos > 0 else zeros(self.ranks[pos], 0)

    def homology_at(self, pos: int) -> HomologyGroup:
        return self.homology_with_generators(pos)[0]

    def homology_with_generators(self, pos: int) -> tuple[HomologyGroup, list[tuple[int, ...]]]:
        """Homology at a position plus lifts of free-part generators.

        The generators are cycle vectors in the coordinates of term ``pos``
        whose classes form a basis of the free part of the homology group.
        """
        if not (0 <= pos < len(self.ranks)):
            raise ValueError("position out of range")
        cycles = kernel_basis(self._outgoing(pos))
        boundary = self._incoming(pos)
        if cycles.rank == 0:
            return HomologyGroup(0), []
        # boundary columns land in the cycle subgroup (d o d = 0, saturated basis)
        coords = [cycles.coordinates_of(col) for col in matrix_columns(boundary)]
        X = (
            intmat([list(c) for c in zip(*coords)], cols=len(coords))
            if coords
            else zeros(cycles.rank, 0)
        )
        full = _snf_with_inverses(X)
        diag = snf_diagonal(full.D)
        s = len(diag)
        torsion = tuple(d for d in diag if d >= 2)
        gens = []
        for i in range(s, cycles.rank):
            combo = full.Uinv[:, [i]]
            vec = cycles.basis @ combo
            gens.append(tuple(int(e) for e in vec[:, 0]))
        return HomologyGroup(cycles.rank - s, torsion), gens


def homology(complex_: FreeChainComplex, degree: int) -> HomologyGroup:
    """Homology of the complex at a semantic degree label."""
    return complex_.homology_at(complex_.position_of_degree(degree))


def _lagrangian_block_matrix(d: TrisectionDiagram) -> np.ndarray:
    """Columns: canonical bases of L1, L2, L3 side by side (the total-sum map)."""
    blocks = [d.lagrangian_subgroup(lam).basis for lam in (1, 2, 3)]
    return np.hstack(blocks) if d.genus else zeros(0, 0)


def _pair_difference_matrix(d: TrisectionDiagram) -> np.ndarray:
    """Map from pairwise-intersection coordinates into Lagrangian coordinates.

    Input blocks run over the cyclic pair subgroups P_lam = L_lam n L_{lam+1};
    a generator w of block lam contributes -w to the L_lam block and +w to the
    L_{lam+1} block, which is the (c-a, a-b, b-c) pattern componentwise.
    """
    g = d.genus
    lag = [d.lagrangian_subgroup(lam) for lam in (1, 2, 3)]
    pair = [d.pair_intersection(lam) for lam in (1, 2, 3)]
    k_total = sum(p.rank for p in pair)
    out = zeros(3 * g, k_total)
    col = 0
    for p_idx in range(3):
        for w in pair[p_idx].columns():
            minus = lag[p_idx].coordinates_of(w)
            plus = lag[(p_idx + 1) % 3].coordinates_of(w)
            for r, val in enumerate(minus):
                out[p_idx * g + r, col] = -val
            for r, val in enumerate(plus):
                out[((p_idx + 1) % 3) * g + r, col] += val
            col += 1
    return out


@lru_cache(maxsize=None)
def homology_complex(d: TrisectionDiagram) -> FreeChainComplex:
    """The five-term complex whose homology is H_*(X; Z).

    Terms, left to right: Z, the sum of cyclic pairwise intersections, the sum
    of the three Lagrangians, the surface lattice, Z. Degrees run 4 down to 0.
    """
    ensure_valid(d)
    g = d.genus
    k_total = sum(d.pair_intersection(lam).rank for lam in (1, 2, 3))
    ranks = (1, k_total, 3 * g, 2 * g, 1)
    diffs = (
        zeros(k_total, 1),
        _pair_difference_matrix(d),
        _lagrangian_block_matrix(d),
        zeros(1, 2 * g),
    )
    return FreeChainComplex(
        term_names=(
            "Z",
            "pairwise intersections",
            "lagrangian sum",
            "surface lattice",
            "Z",
        ),
        ranks=ranks,
        degrees=(4, 3, 2, 1, 0),
        diffs=diffs,
    )


def homology_groups(d: TrisectionDiagram) -> tuple[HomologyGroup, ...]:
    """H_0 .. H_4 of the 4-manifold."""
    c = homology_complex(d)
    return tuple(homology(c, k) for k in range(5))


@lru_cache(maxsize=None)
def cech_complex(d: TrisectionDiagram, sheaf_degree: int) -> FreeChainComplex:
    """Cech complex of one coefficient presheaf over the three-sector cover.

    sheaf_degree 0: constant coefficients, cohomology (Z, 0, 0).
    sheaf_degree 1: degree-one coefficients, realized on the Lagrangian data;
    this is the middle of the homology complex read as a cochain complex.
    sheaf_degree 2: top coefficients vanish except over the central surface.
    """
    ensure_valid(d)
    g = d.genus
    if sheaf_degree == 0:
        delta0 = intmat([[1, -1, 0], [0, 1, -1], [-1, 0, 1]])
        delta1 = intmat([[1, 1, 1]])
        return FreeChainComplex(
            term_names=("sector constants", "pair constants", "central constant"),
            ranks=(3, 3, 1),
            degrees=(0, 1, 2),
            diffs=(delta0, delta1),
        )
    if sheaf_degree == 1:
        k_total = sum(d.pair_intersection(lam).rank for lam in (1, 2, 3))
        return FreeChainComplex(
            term_names=("sector classes", "handlebody classes", "surface classes"),
            ranks=(k_total, 3 * g, 2 * g),
            degrees=(0, 1, 2),
            diffs=(_pair_difference_matrix(d), _lagrangian_block_matrix(d)),
        )
    if sheaf_degree == 2:
        return FreeChainComplex(
            term_names=("zero", "zero", "central constant"),
            ranks=(0, 0, 1),
            degrees=(0, 1, 2),
            diffs=(zeros(0, 0), zeros(1, 0)),
        )
    raise ValueError("sheaf degree must be 0, 1 or 2")


@lru_cache(maxsize=None)
def dual_complex(d: TrisectionDiagram) -> FreeChainComplex:
    """Quotient-side complex whose middle homology is H_2(X; Z).

    Surface lattice -> sum of handlebody H1 quotients (diagonal map) -> sum of
    sector-boundary H1 quotients (cyclic differences). For a valid diagram all
    quotients are free, so this is a complex of free groups. It shares no
    matrices with the homology complex, which is what makes the H2 comparison
    a real cross-check.
    """
    ensure_valid(d)
    g = d.genus
    rank2g = 2 * g
    hb = [d.handlebody_quotient(lam) for lam in (1, 2, 3)]
    pq = [d.pair_quotient(lam) for lam in (1, 2, 3)]
    if any(q.torsion for q in hb + pq):
        raise InvalidStateError("free quotients expected for a valid diagram")

    diag_map = np.vstack([q.free_part_matrix for q in hb]) if g else zeros(0, 0)

    k_ranks = [q.free_rank for q in pq]
    diff_map = zeros(sum(k_ranks), 3 * g)
    row = 0
    for lam_idx in range(3):
        R = pq[lam_idx].free_part_matrix
        if k_ranks[lam_idx]:
            left = R @ hb[lam_idx].free_lift_matrix
            right = R @ hb[(lam_idx + 1) % 3].free_lift_matrix
            diff_map[row : row + k_ranks[lam_idx], lam_idx * g : (lam_idx + 1) * g] = left
            nxt = (lam_idx + 1) % 3
            diff_map[row : row + k_ranks[lam_idx], nxt * g : (nxt + 1) * g] -= right
        row += k_ranks[lam_idx]

    return FreeChainComplex(
        term_names=("surface classes", "handlebody quotients", "sector boundary quotients"),
        ranks=(rank2g, 3 * g, sum(k_ranks)),
        degrees=(0, 1, 2),
        diffs=(diag_map, diff_map),
    )


def dual_middle_homology(d: TrisectionDiagram) -> HomologyGroup:
    c = dual_complex(d)
    return c.homology_at(1)


@dataclass(frozen=True)
class HodgeDiamond:
    """3x3 grid: rows are Cech degrees, columns are coefficient degrees."""

    grid: tuple[tuple[HomologyGroup, ...], ...]

    def entry(self, cech_degree: int, sheaf_degree: int) -> HomologyGroup:
        return self.grid[cech_degree][sheaf_degree]

    def ranks(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(h.rank for h in row) for row in self.grid)

    def cohomology(self, k: int) -> HomologyGroup:
        """H^k of the manifold: direct sum along the antidiagonal i + j = k."""
        if not 0 <= k <= 4:
            raise ValueError("cohomological degree must be between 0 and 4")
        total = HomologyGroup(0)
        for i in range(3):
            j = k - i
            if 0 <= j <= 2:
                total = total.direct_sum(self.grid[i][j])
        return total


@lru_cache(maxsize=None)
def hodge_diamond(d: TrisectionDiagram) -> HodgeDiamond:
    ensure_valid(d)
    columns = []
    for j in range(3):
        c = cech_complex(d, j)
        columns.append(tuple(homology(c, i) for i in range(3)))
    grid = tuple(tuple(columns[j][i] for j in range(3)) for i in range(3))
    return HodgeDiamond(grid=grid)


def cohomology_groups(d: TrisectionDiagram) -> tuple[HomologyGroup, ...]:
    """H^0 .. H^4 assembled from the diamond antidiagonals."""
    diamond = hodge_diamond(d)
    return tuple(diamond.cohomology(k) for k in range(5))


def serre_duality_holds(diamond: HodgeDiamond) -> bool:
    """Rank symmetry rank(i, j) == rank(2-i, 2-j) across the diamond."""
    r = diamond.ranks()
    return all(r[i][j] == r[2 - i][2 - j] for i in range(3) for j in range(3))


def betti_numbers(d: TrisectionDiagram) -> tuple[int, ...]:
    return tuple(h.rank for h in homology_groups(d))
