"""Explicit complete sets of mutually orthogonal supersquares.

A complete set is d+1 order-d subgroups of F_d x F_d that meet pairwise only
in the origin.  The order-4 constructions (``example_set_d4``, ``type_I``,
``type_II``) keep their members in the listing order of their defining
formulas, so panel a) is always the first subgroup built from (v1, v2).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import DeterminantNotOne, InvalidArgument, NotABasis
from .finite_field import Field
from .squares import Square, supersquare
from .vector_space import (
    Point,
    Subgroup,
    _check_point,
    det,
    padd,
    pscale,
    span_additive,
    span_line,
)

TYPE_I = "TypeI"
TYPE_II = "TypeII"
UNTYPED = "Untyped"


@dataclass(frozen=True, eq=False)
class CompleteSet:
    """d+1 subgroups; equality ignores member order."""

    field: Field
    subgroups: tuple[Subgroup, ...]
    kind: str = UNTYPED
    basis: tuple[Point, Point] | None = None

    @property
    def key(self) -> tuple:
        return tuple(sorted(G.key for G in self.subgroups))

    def __eq__(self, other):
        return isinstance(other, CompleteSet) and self.field == other.field and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __len__(self):
        return len(self.subgroups)

    def __iter__(self):
        return iter(self.subgroups)

    def is_valid(self) -> bool:
        """Pairwise trivial intersections and union equal to the whole plane."""
        F = self.field
        if len(self.subgroups) != F.d + 1 or any(len(G) != F.d for G in self.subgroups):
            return False
        if any(G.intersection(H) != {(0, 0)} for G, H in itertools.combinations(self.subgroups, 2)):
            return False
        covered = set().union(*(set(G) for G in self.subgroups))
        return len(covered) == F.d * F.d


def _require_basis(F: Field, v1, v2) -> tuple[Point, Point]:
    v1, v2 = _check_point(F, v1), _check_point(F, v2)
    if det(F, v1, v2) == 0:
        raise NotABasis(f"{v1} and {v2} are not a basis")
    return v1, v2


def _require_d4(F: Field):
    if F.d != 4:
        raise InvalidArgument(f"construction is defined for d = 4 only, got d = {F.d}")


def basis_fan(F: Field, v1: Point, v2: Point) -> CompleteSet:
    """F_d (v1 + c v2) for every c in canonical order, then F_d v2."""
    v1, v2 = _require_basis(F, v1, v2)
    lines = [span_line(F, padd(F, v1, pscale(F, c, v2))) for c in F.order]
    lines.append(span_line(F, v2))
    return CompleteSet(F, tuple(lines), UNTYPED, (v1, v2))


def example_set_d4(F: Field, v1: Point, v2: Point) -> CompleteSet:
    """Z2 v1 + Z2 v2, its two scalings by m and m^2, F4(v1 + m v2), F4(v1 + m^2 v2)."""
    _require_d4(F)
    v1, v2 = _require_basis(F, v1, v2)
    m, m2 = F.mu(1), F.mu(2)
    A = span_additive(F, [v1, v2])
    members = (
        A,
        A.scaled(m),
        A.scaled(m2),
        span_line(F, padd(F, v1, pscale(F, m, v2))),
        span_line(F, padd(F, v1, pscale(F, m2, v2))),
    )
    return CompleteSet(F, members, UNTYPED, (v1, v2))


def extraordinary_through(F: Field, v: Point, w: Point) -> list[Subgroup]:
    """The three extraordinary order-4 subgroups containing v, given |v w| = 1."""
    _require_d4(F)
    v, w = _check_point(F, v), _check_point(F, w)
    if v == (0, 0):
        raise InvalidArgument("v must be nonzero")
    if det(F, v, w) != 1:
        raise DeterminantNotOne(f"|v w| must equal 1, got {F.format(det(F, v, w))}")
    m = F.mu(1)
    return [
        span_line(F, v),
        span_additive(F, [v, w]),
        span_additive(F, [v, padd(F, w, pscale(F, m, v))]),
    ]


def type_I(F: Field, v1: Point, v2: Point) -> CompleteSet:
    """The five lines F4 v1, F4 v2, F4(v1 + m v2), F4(v1 + m^2 v2), F4(v1 + v2)."""
    _require_d4(F)
    v1, v2 = _require_basis(F, v1, v2)
    m, m2 = F.mu(1), F.mu(2)
    members = (
        span_line(F, v1),
        span_line(F, v2),
        span_line(F, padd(F, v1, pscale(F, m, v2))),
        span_line(F, padd(F, v1, pscale(F, m2, v2))),
        span_line(F, padd(F, v1, v2)),
    )
    return CompleteSet(F, members, TYPE_I, (v1, v2))


def type_II(F: Field, v1: Point, v2: Point) -> CompleteSet:
    """F4 v1 together with four non-line extraordinary subgroups; needs |v1 v2| = 1."""
    _require_d4(F)
    v1, v2 = _require_basis(F, v1, v2)
    if det(F, v1, v2) != 1:
        raise DeterminantNotOne(f"determinant must equal 1, got {F.format(det(F, v1, v2))}")
    m, m2 = F.mu(1), F.mu(2)

    def lin(a, b):
        return padd(F, pscale(F, a, v1), pscale(F, b, v2))

    members = (
        span_line(F, v1),
        span_additive(F, [lin(0, 1), lin(1, m)]),
        span_additive(F, [lin(0, m), lin(m2, m2)]),
        span_additive(F, [lin(0, m2), lin(m, m)]),
        span_additive(F, [lin(1, 1), lin(m, m2)]),
    )
    return CompleteSet(F, members, TYPE_II, (v1, v2))


def complete_set_to_squares(cs: CompleteSet) -> list[Square]:
    return [supersquare(G) for G in cs.subgroups]
