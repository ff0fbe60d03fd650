"""Cohomology pairings computed on explicit cocycle representatives.

Degree-two classes are carried as triples (b1, b2, b3) with b_lam in the
lam-th Lagrangian and b1 + b2 + b3 = 0; the cup product of two such classes
evaluates on the fundamental class as a single intersection number on the
central surface. Degree-two homology classes are carried dually, as triples
of handlebody H1 classes satisfying the cyclic matching conditions. The two
sides meet in an integer evaluation pairing, and an exact linear solve
converts one representation into the other.

Everything here is integer arithmetic; signatures use Fraction pivots only
as bookkeeping for an exact congruence diagonalization.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .complexes import homology_complex
from .diagram import TrisectionDiagram, ensure_valid
from .lattice import (
    Subgroup,
    as_int_vector,
    column_vector,
    det,
    integer_solve,
    intmat,
    kernel_basis,
    subgroup_intersection,
    zeros,
)

_CYCLIC = ((1, 2), (2, 3), (3, 1))


class CycleConditionError(ValueError):
    """A handlebody-class triple fails one of the cyclic matching conditions."""


def _vector_add(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def _vector_scale(n: int, a: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(n * x for x in a)


@dataclass(frozen=True)
class OneOneCocycle:
    """Degree-two cohomology class as a sum-zero triple of Lagrangian vectors."""

    diagram: TrisectionDiagram
    b1: tuple[int, ...]
    b2: tuple[int, ...]
    b3: tuple[int, ...]

    def __post_init__(self):
        width = 2 * self.diagram.genus
        object.__setattr__(self, "b1", as_int_vector(self.b1, width))
        object.__setattr__(self, "b2", as_int_vector(self.b2, width))
        object.__setattr__(self, "b3", as_int_vector(self.b3, width))
        for lam, b in enumerate(self.blocks, start=1):
            if not self.diagram.lagrangian_subgroup(lam).contains(b):
                raise ValueError(f"component {lam} does not lie in Lagrangian {lam}")
        if any(_vector_add(_vector_add(self.b1, self.b2), self.b3)):
            raise ValueError("components do not sum to zero")

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        return (self.b1, self.b2, self.b3)

    @classmethod
    def zero(cls, d: TrisectionDiagram) -> "OneOneCocycle":
        z = (0,) * (2 * d.genus)
        return cls(d, z, z, z)

    @classmethod
    def from_lagrangian_coordinates(
        cls, d: TrisectionDiagram, coords: "tuple[int, ...]"
    ) -> "OneOneCocycle":
        """Build from a length-3g vector of coordinates in the Lagrangian bases."""
        g = d.genus
        coords = as_int_vector(coords, 3 * g)
        blocks = [
            d.lagrangian_subgroup(lam).member_from_coordinates(coords[(lam - 1) * g : lam * g])
            for lam in (1, 2, 3)
        ]
        return cls(d, *blocks)

    def lagrangian_coordinates(self) -> tuple[int, ...]:
        out: list[int] = []
        for lam, b in enumerate(self.blocks, start=1):
            out.extend(self.diagram.lagrangian_subgroup(lam).coordinates_of(b))
        return tuple(out)

    @property
    def is_zero(self) -> bool:
        return not any(self.b1) and not any(self.b2) and not any(self.b3)

    def __add__(self, other: "OneOneCocycle") -> "OneOneCocycle":
        if self.diagram != other.diagram:
            raise ValueError("cocycles belong to different diagrams")
        return OneOneCocycle(
            self.diagram,
            _vector_add(self.b1, other.b1),
            _vector_add(self.b2, other.b2),
            _vector_add(self.b3, other.b3),
        )

    def scale(self, n: int) -> "OneOneCocycle":
        return OneOneCocycle(
            self.diagram,
            _vector_scale(n, self.b1),
            _vector_scale(n, self.b2),
            _vector_scale(n, self.b3),
        )

    def __neg__(self) -> "OneOneCocycle":
        return self.scale(-1)

    def __sub__(self, other: "OneOneCocycle") -> "OneOneCocycle":
        return self + (-other)


@dataclass(frozen=True)
class H2DualRep:
    """Degree-two homology class as a matched triple of handlebody H1 classes.

    ``coords`` hold the class of each component in the free quotient
    H1(surface)/L_lam; ``lifts`` are chosen ambient vectors projecting to
    those coordinates. Construction checks the cyclic matching conditions:
    the difference of consecutive lifts must vanish in the sector boundary
    quotient H1(surface)/(L_lam + L_{lam+1}).
    """

    diagram: TrisectionDiagram
    coords: tuple[tuple[int, ...], ...]
    lifts: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        d = self.diagram
        g = d.genus
        coords = tuple(as_int_vector(c, g) for c in self.coords)
        lifts = tuple(as_int_vector(v, 2 * g) for v in self.lifts)
        if len(coords) != 3 or len(lifts) != 3:
            raise ValueError("expected one component per handlebody")
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "lifts", lifts)
        for lam in (1, 2, 3):
            q = d.handlebody_quotient(lam)
            if q.project(lifts[lam - 1]) != coords[lam - 1]:
                raise ValueError(f"lift {lam} does not project to its coordinates")
        for lam, nxt in _CYCLIC:
            diff = tuple(x - y for x, y in zip(lifts[lam - 1], lifts[nxt - 1]))
            if not d.pair_quotient(lam).is_zero(diff):
                raise CycleConditionError(
                    f"a{lam} - a{nxt} is nonzero in the sector boundary quotient {lam}"
                )

    @classmethod
    def from_lifts(
        cls, d: TrisectionDiagram, lifts: "tuple[tuple[int, ...], ...]"
    ) -> "H2DualRep":
        coords = tuple(
            d.handlebody_quotient(lam).project(lifts[lam - 1]) for lam in (1, 2, 3)
        )
        return cls(d, coords, tuple(lifts))

    @classmethod
    def from_coords(
        cls, d: TrisectionDiagram, coords: "tuple[tuple[int, ...], ...]"
    ) -> "H2DualRep":
        lifts = tuple(
            d.handlebody_quotient(lam).lift(coords[lam - 1]) for lam in (1, 2, 3)
        )
        return cls(d, tuple(coords), lifts)

    @classmethod
    def zero(cls, d: TrisectionDiagram) -> "H2DualRep":
        g = d.genus
        return cls(d, ((0,) * g,) * 3, ((0,) * (2 * g),) * 3)

    @property
    def is_zero(self) -> bool:
        return not any(any(c) for c in self.coords)

    def coordinate_vector(self) -> tuple[int, ...]:
        """All three coordinate blocks concatenated (length 3g)."""
        return self.coords[0] + self.coords[1] + self.coords[2]

    def __add__(self, other: "H2DualRep") -> "H2DualRep":
        if self.diagram != other.diagram:
            raise ValueError("dual reps belong to different diagrams")
        coords = tuple(_vector_add(a, b) for a, b in zip(self.coords, other.coords))
        lifts = tuple(_vector_add(a, b) for a, b in zip(self.lifts, other.lifts))
        return H2DualRep(self.diagram, coords, lifts)

    def scale(self, n: int) -> "H2DualRep":
        coords = tuple(_vector_scale(n, c) for c in self.coords)
        lifts = tuple(_vector_scale(n, v) for v in self.lifts)
        return H2DualRep(self.diagram, coords, lifts)

    def __neg__(self) -> "H2DualRep":
        return self.scale(-1)

    def __sub__(self, other: "H2DualRep") -> "H2DualRep":
        return self + (-other)


def _normalized_sign(vec: tuple[int, ...]) -> int:
    """+1 if the first nonzero entry is positive, -1 if negative, +1 for zero."""
    for e in vec:
        if e:
            return 1 if e > 0 else -1
    return 1


@lru_cache(maxsize=None)
def h2_basis_cocycles(d: TrisectionDiagram) -> tuple[OneOneCocycle, ...]:
    """Cocycle representatives for a basis of the free part of H^2.

    Computed as free generators of the middle homology of the five-term
    complex, read off in the canonical Lagrangian bases; each generator is
    normalized so its first nonzero coordinate is positive.
    """
    ensure_valid(d)
    c = homology_complex(d)
    _, gens = c.homology_with_generators(c.position_of_degree(2))
    out = []
    for gen in gens:
        gen = _vector_scale(_normalized_sign(gen), gen)
        out.append(OneOneCocycle.from_lagrangian_coordinates(d, gen))
    return tuple(out)


def _check_cocycle(d: TrisectionDiagram, x: OneOneCocycle, name: str) -> None:
    if x.diagram != d:
        raise ValueError(f"{name} belongs to a different diagram")


def intersection_pairing(d: TrisectionDiagram, x: OneOneCocycle, y: OneOneCocycle) -> int:
    """Cup-product pairing of two degree-two classes on the fundamental class.

    Evaluated as the surface intersection number of the first component of x
    with the second of y; the two cyclically rotated expressions give the
    same integer because Lagrangian components annihilate each other.
    """
    _check_cocycle(d, x, "first argument")
    _check_cocycle(d, y, "second argument")
    return d.lattice.intersection_number(x.b1, y.b2)


@dataclass(frozen=True)
class IntersectionForm:
    """The integral intersection form on H^2 modulo torsion."""

    gram: tuple[tuple[int, ...], ...]
    signature: tuple[int, int]
    parity: str
    unimodular: bool

    @property
    def rank(self) -> int:
        return len(self.gram)


def _signature_of_symmetric(gram: tuple[tuple[int, ...], ...]) -> tuple[int, int]:
    """Exact (positive, negative) inertia of a symmetric integer matrix.

    Congruence diagonalization over the rationals: clear with a nonzero
    diagonal pivot when one exists, otherwise make one by adding a row and
    column (which turns an off-diagonal entry 2m into a diagonal one).
    """
    n = len(gram)
    M = [[Fraction(gram[i][j]) for j in range(n)] for i in range(n)]
    pos = neg = 0
    active = list(range(n))
    while active:
        pivot_row = next((i for i in active if M[i][i]), None)
        if pivot_row is None:
            off = next(
                ((i, j) for i in active for j in active if i != j and M[i][j]),
                None,
            )
            if off is None:
                break
            i, j = off
            for k in range(n):
                M[i][k] += M[j][k]
            for k in range(n):
                M[k][i] += M[k][j]
            pivot_row = i
        p = M[pivot_row][pivot_row]
        if p > 0:
            pos += 1
        else:
            neg += 1
        active.remove(pivot_row)
        for r in active:
            f = M[r][pivot_row] / p
            if f:
                for k in range(n):
                    M[r][k] -= f * M[pivot_row][k]
                for k in range(n):
                    M[k][r] -= f * M[k][pivot_row]
    return pos, neg


@lru_cache(maxsize=None)
def intersection_form(d: TrisectionDiagram) -> IntersectionForm:
    """Gram matrix, signature, parity and unimodularity of the form on H^2.

    Parity: the form is even exactly when the zero vector is characteristic,
    which for a symmetric integer matrix means every diagonal entry is even;
    diagonal parity is invariant under unimodular change of basis.
    """
    basis = h2_basis_cocycles(d)
    n = len(basis)
    gram = tuple(
        tuple(intersection_pairing(d, basis[i], basis[j]) for j in range(n))
        for i in range(n)
    )
    signature = _signature_of_symmetric(gram)
    parity = "even" if all(gram[i][i] % 2 == 0 for i in range(n)) else "odd"
    gram_matrix = intmat([list(row) for row in gram], cols=n) if n else zeros(0, 0)
    unimodular = abs(det(gram_matrix)) == 1
    return IntersectionForm(gram, signature, parity, unimodular)


@lru_cache(maxsize=None)
def triple_intersection(d: TrisectionDiagram) -> Subgroup:
    """L1 n L2 n L3: representatives of the free degree-one cohomology."""
    ensure_valid(d)
    return subgroup_intersection(d.pair_intersection(1), d.lagrangian_subgroup(3))


def pairing_h3_h1(d: TrisectionDiagram, h3, h1) -> int:
    """Pairing of a degree-three class with a degree-one class.

    ``h3`` is any ambient representative of its class modulo L1 + L2 + L3;
    ``h1`` must lie in all three Lagrangians. The value is the surface
    intersection number, independent of the h3 representative because every
    Lagrangian vector pairs to zero against h1.
    """
    ensure_valid(d)
    h3 = as_int_vector(h3, 2 * d.genus)
    h1 = as_int_vector(h1, 2 * d.genus)
    if not triple_intersection(d).contains(h1):
        raise ValueError("h1 does not lie in all three Lagrangians")
    return d.lattice.intersection_number(h3, h1)


def h1_basis(d: TrisectionDiagram) -> tuple[tuple[int, ...], ...]:
    """Basis of the free degree-one cohomology (triple intersection columns)."""
    return triple_intersection(d).columns()


def h3_representatives(d: TrisectionDiagram) -> tuple[tuple[int, ...], ...]:
    """Ambient lifts of a basis of the degree-three cohomology modulo torsion."""
    ensure_valid(d)
    q = d.triple_quotient
    return tuple(
        tuple(int(e) for e in q.free_lift_matrix[:, j])
        for j in range(q.free_rank)
    )


def h3_h1_gram(d: TrisectionDiagram) -> np.ndarray:
    """Matrix of the degree-three against degree-one pairing on the bases above."""
    rows = [
        [pairing_h3_h1(d, h3, h1) for h1 in h1_basis(d)] for h3 in h3_representatives(d)
    ]
    n = len(h1_basis(d))
    return intmat(rows, cols=n) if rows else zeros(0, n)


def evaluate_on_surface_class(d: TrisectionDiagram, x: OneOneCocycle, rep: H2DualRep) -> int:
    """Evaluate a degree-two cocycle on a degree-two homology class.

    The sum of the three intersection numbers of matching components. The
    value does not depend on the choice of ambient lifts (each b_lam kills
    the L_lam ambiguity) nor on coboundary changes to the cocycle (the
    matching conditions kill those).
    """
    _check_cocycle(d, x, "cocycle")
    if rep.diagram != d:
        raise ValueError("dual rep belongs to a different diagram")
    return sum(
        d.lattice.intersection_number(b, lift) for b, lift in zip(x.blocks, rep.lifts)
    )


@lru_cache(maxsize=None)
def dual_rep_basis(d: TrisectionDiagram) -> tuple[H2DualRep, ...]:
    """Dual reps generating the free part of degree-two homology.

    Free generators of the middle homology of the quotient-side complex,
    sign-normalized like the cocycle basis.
    """
    from .complexes import dual_complex

    ensure_valid(d)
    g = d.genus
    c = dual_complex(d)
    _, gens = c.homology_with_generators(1)
    out = []
    for gen in gens:
        gen = _vector_scale(_normalized_sign(gen), gen)
        coords = (gen[:g], gen[g : 2 * g], gen[2 * g :])
        out.append(H2DualRep.from_coords(d, coords))
    return tuple(out)


def poincare_dual_rep(d: TrisectionDiagram, x: OneOneCocycle) -> H2DualRep:
    """The homology class realizing cup product with x, by exact linear solve.

    Returns a rep K with evaluate_on_surface_class(d, b, K) equal to
    intersection_pairing(d, b, x) for every basis cocycle b. The solve is
    modulo torsion; unimodularity of the form makes it integral.
    """
    _check_cocycle(d, x, "cocycle")
    basis = h2_basis_cocycles(d)
    reps = dual_rep_basis(d)
    if len(basis) != len(reps):
        raise ValueError("cocycle and dual-rep bases have mismatched ranks")
    n = len(basis)
    if n == 0:
        return H2DualRep.zero(d)
    eval_matrix = intmat(
        [[evaluate_on_surface_class(d, basis[i], reps[j]) for j in range(n)] for i in range(n)]
    )
    rhs = [intersection_pairing(d, basis[i], x) for i in range(n)]
    coeffs = integer_solve(eval_matrix, rhs)
    total = H2DualRep.zero(d)
    for cf, rep in zip(coeffs, reps):
        if cf:
            total = total + rep.scale(cf)
    return total


def cocycle_from_dual_rep(d: TrisectionDiagram, rep: H2DualRep) -> OneOneCocycle:
    """Inverse direction of the duality solve, modulo torsion.

    Returns a cocycle c with intersection_pairing(d, b, c) equal to
    evaluate_on_surface_class(d, b, rep) for every basis cocycle b.
    """
    if rep.diagram != d:
        raise ValueError("dual rep belongs to a different diagram")
    basis = h2_basis_cocycles(d)
    n = len(basis)
    if n == 0:
        return OneOneCocycle.zero(d)
    gram = intmat([list(row) for row in intersection_form(d).gram])
    rhs = [evaluate_on_surface_class(d, b, rep) for b in basis]
    coeffs = integer_solve(gram, rhs)
    total = OneOneCocycle.zero(d)
    for cf, b in zip(coeffs, basis):
        if cf:
            total = total + b.scale(cf)
    return total


def random_cocycle(d: TrisectionDiagram, rng: random.Random, span: int = 4) -> OneOneCocycle:
    """Random element of the cocycle group (kernel of the total-sum map)."""
    c = homology_complex(d)
    cycles = kernel_basis(c.diffs[2])
    if cycles.rank == 0:
        return OneOneCocycle.zero(d)
    combo = column_vector([rng.randint(-span, span) for _ in range(cycles.rank)])
    coords = tuple(int(e) for e in (cycles.basis @ combo)[:, 0])
    return OneOneCocycle.from_lagrangian_coordinates(d, coords)


def random_coboundary(d: TrisectionDiagram, rng: random.Random, span: int = 4) -> OneOneCocycle:
    """Random image of the pairwise-intersection difference map."""
    c = homology_complex(d)
    zeta = c.diffs[1]
    if zeta.shape[1] == 0:
        return OneOneCocycle.zero(d)
    combo = column_vector([rng.randint(-span, span) for _ in range(zeta.shape[1])])
    coords = tuple(int(e) for e in (zeta @ combo)[:, 0])
    return OneOneCocycle.from_lagrangian_coordinates(d, coords)


def random_cycle_rep(d: TrisectionDiagram, rng: random.Random, span: int = 4) -> H2DualRep:
    """Random triple of handlebody classes satisfying the matching conditions."""
    from .complexes import dual_complex

    g = d.genus
    c = dual_complex(d)
    cycles = kernel_basis(c.diffs[1])
    if cycles.rank == 0:
        return H2DualRep.zero(d)
    combo = column_vector([rng.randint(-span, span) for _ in range(cycles.rank)])
    vec = tuple(int(e) for e in (cycles.basis @ combo)[:, 0])
    return H2DualRep.from_coords(d, (vec[:g], vec[g : 2 * g], vec[2 * g :]))
