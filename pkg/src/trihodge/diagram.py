"""Trisection diagrams as triples of cut systems on a surface lattice.

A genus-g diagram is three systems of g curves each, every system spanning a
Lagrangian of the surface lattice. Validity is a property of the *homology*
data: each system must be isotropic and primitive, and each cyclic pair of
Lagrangians must sum to a saturated subgroup (torsion-free quotient). All
downstream invariants require a valid diagram.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from .lattice import (
    QuotientPresentation,
    Subgroup,
    as_int_vector,
    column_vector,
    invariant_factors,
    quotient,
    subgroup_intersection,
    subgroup_sum,
)
from .surface import SymplecticLattice

SYSTEM_NAMES = ("alpha", "beta", "gamma")


class InvalidDiagramError(ValueError):
    """Raised when an operation requires a valid diagram and gets an invalid one."""


@dataclass(frozen=True)
class CutSystem:
    """g curves on a genus-g surface, each recorded as a homology class."""

    curves: tuple[tuple[int, ...], ...]

    def __init__(self, curves: Sequence[Sequence[int]]):
        normalized = tuple(as_int_vector(c) for c in curves)
        if normalized:
            width = len(normalized[0])
            if any(len(c) != width for c in normalized):
                raise ValueError("curves of mixed lengths in one cut system")
            if width != 2 * len(normalized):
                raise ValueError(
                    f"genus-{len(normalized)} system needs curves of length "
                    f"{2 * len(normalized)}, got {width}"
                )
        object.__setattr__(self, "curves", normalized)

    @property
    def genus(self) -> int:
        return len(self.curves)

    def subgroup(self) -> Subgroup:
        return Subgroup.from_columns(2 * self.genus, self.curves)


@dataclass(frozen=True)
class TrisectionDiagram:
    genus: int
    alpha: CutSystem
    beta: CutSystem
    gamma: CutSystem
    label: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")
        for name, cs in zip(SYSTEM_NAMES, self.systems):
            if cs.genus != self.genus:
                raise ValueError(
                    f"{name} system has {cs.genus} curves, expected {self.genus}"
                )

    @property
    def systems(self) -> tuple[CutSystem, CutSystem, CutSystem]:
        return (self.alpha, self.beta, self.gamma)

    @cached_property
    def lattice(self) -> SymplecticLattice:
        return SymplecticLattice(self.genus)

    @cached_property
    def _lagrangians(self) -> tuple[Subgroup, Subgroup, Subgroup]:
        return tuple(cs.subgroup() for cs in self.systems)

    def lagrangian_subgroup(self, lam: int) -> Subgroup:
        """Canonical subgroup spanned by cut system lam (1=alpha, 2=beta, 3=gamma)."""
        return self._lagrangians[_system_index(lam)]

    @cached_property
    def _pair_intersections(self) -> tuple[Subgroup, Subgroup, Subgroup]:
        L = self._lagrangians
        return tuple(
            subgroup_intersection(L[i], L[(i + 1) % 3]) for i in range(3)
        )

    def pair_intersection(self, lam: int) -> Subgroup:
        """L_lam intersected with L_{lam+1} (indices cyclic)."""
        return self._pair_intersections[_system_index(lam)]

    @cached_property
    def _pair_sums(self) -> tuple[Subgroup, Subgroup, Subgroup]:
        L = self._lagrangians
        return tuple(subgroup_sum(L[i], L[(i + 1) % 3]) for i in range(3))

    def pair_sum(self, lam: int) -> Subgroup:
        return self._pair_sums[_system_index(lam)]

    @cached_property
    def triple_sum(self) -> Subgroup:
        return subgroup_sum(self._pair_sums[0], self._lagrangians[2])

    @cached_property
    def triple_quotient(self) -> QuotientPresentation:
        """The surface lattice modulo L1 + L2 + L3 (degree-one homology of X)."""
        return quotient(self.lattice.rank, self.triple_sum)

    def handlebody_quotient(self, lam: int) -> QuotientPresentation:
        """H1 of handlebody lam: the surface lattice modulo L_lam."""
        return self._handlebody_quotients[_system_index(lam)]

    @cached_property
    def _handlebody_quotients(self) -> tuple[QuotientPresentation, ...]:
        return tuple(quotient(self.lattice.rank, L) for L in self._lagrangians)

    def pair_quotient(self, lam: int) -> QuotientPresentation:
        """H1 of the boundary 3-manifold of sector lam: lattice mod (L_lam + L_{lam+1})."""
        return self._pair_quotients[_system_index(lam)]

    @cached_property
    def _pair_quotients(self) -> tuple[QuotientPresentation, ...]:
        return tuple(quotient(self.lattice.rank, S) for S in self._pair_sums)

    @cached_property
    def validation(self) -> "ValidationReport":
        return validate(self)

    @property
    def is_valid(self) -> bool:
        return self.validation.is_valid

    def describe(self) -> str:
        return self.label if self.label is not None else f"genus-{self.genus} diagram"


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of every validity check, plus k-values when all of them pass."""

    checks: tuple[tuple[str, bool], ...]
    k_values: tuple[int, int, int] | None

    @property
    def is_valid(self) -> bool:
        return all(ok for _, ok in self.checks)

    @property
    def failures(self) -> tuple[str, ...]:
        return tuple(name for name, ok in self.checks if not ok)


def _system_index(lam: int) -> int:
    if lam not in (1, 2, 3):
        raise ValueError(f"system index must be 1, 2 or 3, got {lam}")
    return lam - 1


def validate(d: TrisectionDiagram) -> ValidationReport:
    """Run every validity check; never raises, failures land in the report."""
    lat = d.lattice
    checks: list[tuple[str, bool]] = []
    for name, L in zip(SYSTEM_NAMES, d._lagrangians):
        checks.append((f"{name} isotropic", lat.is_isotropic(L)))
        primitive = (
            L.rank == d.genus
            and all(f == 1 for f in invariant_factors(L.basis))
        )
        checks.append((f"{name} primitive", primitive))
    pair_names = ("alpha+beta", "beta+gamma", "gamma+alpha")
    for name, idx in zip(pair_names, range(3)):
        q = quotient(lat.rank, d._pair_sums[idx])
        checks.append((f"{name} torsion-free", q.torsion == ()))
    report_checks = tuple(checks)
    k = None
    if all(ok for _, ok in report_checks):
        k = tuple(P.rank for P in d._pair_intersections)
    return ValidationReport(checks=report_checks, k_values=k)


def ensure_valid(d: TrisectionDiagram) -> None:
    report = d.validation
    if not report.is_valid:
        raise InvalidDiagramError(
            "invalid diagram, failing checks: " + ", ".join(report.failures)
        )


def k_values(d: TrisectionDiagram) -> tuple[int, int, int]:
    """Ranks of the three cyclic pair intersections; determines chi."""
    ensure_valid(d)
    return d.validation.k_values


def euler_characteristic(d: TrisectionDiagram) -> int:
    k1, k2, k3 = k_values(d)
    return 2 + d.genus - (k1 + k2 + k3)


def diagram_from_curves(
    genus: int,
    alpha: Sequence[Sequence[int]],
    beta: Sequence[Sequence[int]],
    gamma: Sequence[Sequence[int]],
    label: str | None = None,
) -> TrisectionDiagram:
    return TrisectionDiagram(
        genus=genus,
        alpha=CutSystem(alpha),
        beta=CutSystem(beta),
        gamma=CutSystem(gamma),
        label=label,
    )


_BASE_BUILTINS: dict[str, tuple[int, list, list, list]] = {
    "S4": (0, [], [], []),
    "CP2": (1, [(1, 0)], [(0, 1)], [(1, 1)]),
    "CP2bar": (1, [(1, 0)], [(0, 1)], [(1, -1)]),
    "S1xS3": (1, [(0, 1)], [(0, 1)], [(0, 1)]),
    "S2xS2_candidate": (
        2,
        [(1, 0, 0, 0), (0, 0, 1, 0)],
        [(0, 1, 0, 0), (0, 0, 0, 1)],
        [(1, 1, 0, 0), (0, 0, 1, 1)],
    ),
    "S2xS2": (
        2,
        [(1, 0, 0, 0), (0, 0, 1, 0)],
        [(0, 1, 0, 0), (0, 0, 0, 1)],
        [(1, 0, 0, 1), (0, 1, 1, 0)],
    ),
    # Rational homology 4-spheres with torsion first homology, found by a
    # randomized search over genus-3 Lagrangian triples (the smallest genus
    # where validity and torsion can coexist). They exercise every torsion
    # code path: chi = 2, b_1 = b_2 = 0, H_1 = H_2 = the named cyclic group.
    "QS4_Z2": (
        3,
        [(0, 1, 0, 0, 0, 0), (0, 0, 0, 1, 0, 0), (0, 0, 0, 0, 1, 0)],
        [(-1, 1, 1, 0, 0, 0), (1, 0, -1, 1, 0, 0), (0, 0, 0, 0, 0, 1)],
        [(1, 2, 1, 1, 1, 1), (0, -1, 0, 1, 0, 0), (0, 0, 0, -1, 0, 1)],
    ),
    "QS4_Z3": (
        3,
        [(1, 0, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0), (0, 0, 0, 0, 0, 1)],
        [(0, 1, 0, 0, 0, 0), (0, 0, -1, 0, 0, -1), (0, 0, -1, -1, -1, 1)],
        [(0, 1, 0, 0, 0, -1), (-1, -1, 0, 2, -1, -1), (-1, -1, -1, 2, -1, 1)],
    ),
}


def builtin_names() -> tuple[str, ...]:
    return tuple(sorted(_BASE_BUILTINS))


def builtin(name: str) -> TrisectionDiagram:
    """Catalog diagram by name; 'A#B' builds the connected sum of catalog entries."""
    parts = name.split("#")
    diagrams = []
    for part in parts:
        if part not in _BASE_BUILTINS:
            raise KeyError(
                f"unknown builtin diagram {part!r}; available: {', '.join(builtin_names())}"
            )
        g, alpha, beta, gamma = _BASE_BUILTINS[part]
        diagrams.append(diagram_from_curves(g, alpha, beta, gamma, label=part))
    result = diagrams[0]
    for other in diagrams[1:]:
        result = connected_sum(result, other)
    return result


def connected_sum(d1: TrisectionDiagram, d2: TrisectionDiagram) -> TrisectionDiagram:
    """Block sum of two diagrams; genus and k-values add, chi adds minus 2."""
    g1, g2 = d1.genus, d2.genus
    genus = g1 + g2

    def paste(cs1: CutSystem, cs2: CutSystem):
        left = [tuple(c) + (0,) * (2 * g2) for c in cs1.curves]
        right = [(0,) * (2 * g1) + tuple(c) for c in cs2.curves]
        return left + right

    label = None
    if d1.label is not None and d2.label is not None:
        label = f"{d1.label}#{d2.label}"
    return diagram_from_curves(
        genus,
        paste(d1.alpha, d2.alpha),
        paste(d1.beta, d2.beta),
        paste(d1.gamma, d2.gamma),
        label=label,
    )


def handleslide(cs: CutSystem, i: int, j: int, sign: int = 1) -> CutSystem:
    """Replace curve i by curve i + sign * curve j; preserves the spanned subgroup."""
    if sign not in (1, -1):
        raise ValueError("handleslide sign must be +1 or -1")
    if i == j:
        raise ValueError("handleslide needs two distinct curves")
    if not (0 <= i < cs.genus and 0 <= j < cs.genus):
        raise ValueError("curve index out of range")
    curves = list(cs.curves)
    curves[i] = tuple(x + sign * y for x, y in zip(curves[i], curves[j]))
    return CutSystem(curves)


def handleslide_diagram(
    d: TrisectionDiagram, system: str, i: int, j: int, sign: int = 1
) -> TrisectionDiagram:
    """New diagram with one handleslide applied to the named cut system."""
    if system not in SYSTEM_NAMES:
        raise ValueError(f"unknown cut system {system!r}; expected one of {SYSTEM_NAMES}")
    replaced = {name: getattr(d, name) for name in SYSTEM_NAMES}
    replaced[system] = handleslide(replaced[system], i, j, sign)
    return TrisectionDiagram(
        genus=d.genus,
        alpha=replaced["alpha"],
        beta=replaced["beta"],
        gamma=replaced["gamma"],
        label=d.label,
    )


def standard_triple(genus: int) -> TrisectionDiagram:
    """alpha = {a_i}, beta = {b_i}, gamma = {a_i + b_i}."""
    alpha, beta, gamma = [], [], []
    for i in range(genus):
        a = [0] * (2 * genus)
        b = [0] * (2 * genus)
        a[2 * i] = 1
        b[2 * i + 1] = 1
        alpha.append(tuple(a))
        beta.append(tuple(b))
        gamma.append(tuple(x + y for x, y in zip(a, b)))
    return diagram_from_curves(genus, alpha, beta, gamma, label=f"standard(g={genus})")


def random_diagram(genus: int, seed: int) -> TrisectionDiagram:
    """Deterministic pseudo-random valid diagram.

    Applies a seed-determined word of integral symplectic transvections to the
    standard triple. Transvections preserve the form, so isotropy, primitivity
    and pair saturation survive and the result is always valid.
    """
    if genus < 0:
        raise ValueError("genus must be nonnegative")
    base = standard_triple(genus)
    if genus == 0:
        return diagram_from_curves(0, [], [], [], label=f"random(g=0, seed={seed})")
    rng = random.Random(seed)
    lat = base.lattice
    rank = lat.rank

    systems = [list(cs.curves) for cs in base.systems]
    moves = rng.randint(genus + 1, 3 * genus + 4)
    for _ in range(moves):
        v = [0] * rank
        support = rng.sample(range(rank), rng.randint(1, min(2, rank)))
        for idx in support:
            v[idx] = rng.choice((-1, 1))
        T = lat.transvection_matrix(v)
        for curves in systems:
            for c_idx, curve in enumerate(curves):
                out = T @ column_vector(curve)
                curves[c_idx] = tuple(int(e) for e in out[:, 0])

    return diagram_from_curves(
        genus, systems[0], systems[1], systems[2], label=f"random(g={genus}, seed={seed})"
    )
