"""The plane F_d x F_d: points, the determinant form, order-d subgroups.

A point is a tuple ``(x, y)`` of field element indices; ``x`` labels the row
and ``y`` the column of a square.  Points are ordered lexicographically by the
canonical element rank of each coordinate (0, 1, m, m^2, ...).
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field as dc_field
from functools import cached_property

from .errors import InvalidArgument, NotABasis
from .finite_field import Field

Point = tuple[int, int]


def point_key(F: Field, v: Point) -> tuple[int, int]:
    return (F.rank[v[0]], F.rank[v[1]])


def all_points(F: Field) -> list[Point]:
    """Every point of the plane, in canonical order."""
    return [(x, y) for x in F.order for y in F.order]


def padd(F: Field, u: Point, v: Point) -> Point:
    return (F.add(u[0], v[0]), F.add(u[1], v[1]))


def pscale(F: Field, c: int, v: Point) -> Point:
    return (F.mul(c, v[0]), F.mul(c, v[1]))


def pneg(F: Field, v: Point) -> Point:
    return (F.neg(v[0]), F.neg(v[1]))


def _check_point(F: Field, v) -> Point:
    try:
        x, y = v
    except (TypeError, ValueError):
        raise InvalidArgument(f"{v!r} is not a point") from None
    return (F.check(x), F.check(y))


@dataclass(frozen=True, eq=False)
class Subgroup:
    """An additive subgroup of F_d x F_d, stored as its sorted element list."""

    field: Field
    elements: tuple[Point, ...]
    _set: frozenset = dc_field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_set", frozenset(self.elements))

    @classmethod
    def from_points(cls, F: Field, points: Iterable[Point]) -> "Subgroup":
        pts = sorted(set(points), key=lambda v: point_key(F, v))
        return cls(F, tuple(pts))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, v):
        return v in self._set

    def __eq__(self, other):
        return (
            isinstance(other, Subgroup)
            and self.field == other.field
            and self.elements == other.elements
        )

    def __hash__(self):
        return hash(self.elements)

    @property
    def key(self) -> tuple:
        """Sort key: element list by canonical rank."""
        F = self.field
        return tuple(point_key(F, v) for v in self.elements)

    @property
    def nonzero(self) -> tuple[Point, ...]:
        return tuple(v for v in self.elements if v != (0, 0))

    @cached_property
    def generators(self) -> tuple[Point, ...]:
        """A minimal additive (Z_p) generating list, greedy in canonical order."""
        F = self.field
        gens: list[Point] = []
        spanned = {(0, 0)}
        for v in self.elements:
            if v not in spanned:
                gens.append(v)
                spanned = set(_zp_span(F, gens))
        return tuple(gens)

    def is_line(self) -> bool:
        """True iff this subgroup equals F_d v for some nonzero v in it."""
        nz = self.nonzero
        return bool(nz) and len(self) == self.field.d and self == span_line(self.field, nz[0])

    def scaled(self, c: int) -> "Subgroup":
        """The subgroup c * G."""
        F = self.field
        return Subgroup.from_points(F, (pscale(F, c, v) for v in self.elements))

    def intersection(self, other: "Subgroup") -> frozenset[Point]:
        return self._set & other._set

    def format(self) -> str:
        F = self.field
        return "{" + ", ".join(f"({F.format(x)},{F.format(y)})" for x, y in self.elements) + "}"

    def __repr__(self):
        return f"Subgroup({self.format()})"


def _zp_span(F: Field, gens: list[Point]) -> set[Point]:
    span = {(0, 0)}
    for g in gens:
        if g in span:
            continue
        multiples = [(0, 0)]
        for _ in range(F.p - 1):
            multiples.append(padd(F, multiples[-1], g))
        span = {padd(F, s, m) for s in span for m in multiples}
    return span


def det(F: Field, v1: Point, v2: Point) -> int:
    """|v1 v2| = x1*y2 - x2*y1."""
    (x1, y1), (x2, y2) = v1, v2
    return F.sub(F.mul(x1, y2), F.mul(x2, y1))


def symplectic(F: Field, v1: Point, v2: Point) -> int:
    """trace(|v1 v2|), the Z_p-valued form whose zeros define extraordinarity."""
    return F.trace(det(F, v1, v2))


def is_basis(F: Field, v1: Point, v2: Point) -> bool:
    return det(F, v1, v2) != 0


def span_line(F: Field, v: Point) -> Subgroup:
    """F_d v."""
    v = _check_point(F, v)
    if v == (0, 0):
        raise InvalidArgument("cannot span a line from the zero vector")
    return Subgroup.from_points(F, (pscale(F, c, v) for c in range(F.d)))


def span_additive(F: Field, gens: Iterable[Point]) -> Subgroup:
    """Additive closure (Z_p-span) of ``gens``."""
    gens = [_check_point(F, g) for g in gens]
    if not gens:
        raise InvalidArgument("need at least one generator")
    return Subgroup.from_points(F, _zp_span(F, gens))


def is_subgroup(F: Field, points: Iterable[Point]) -> bool:
    s = set(points)
    return (0, 0) in s and all(padd(F, a, b) in s for a in s for b in s)


def is_extraordinary(G: Subgroup) -> bool:
    """True iff trace(|g1 g2|) = 0 for all g1, g2 in G.

    The form is bi-additive, so checking pairs of additive generators is enough.
    """
    F = G.field
    gens = G.generators
    return all(symplectic(F, a, b) == 0 for i, a in enumerate(gens) for b in gens[i + 1:])


def cosets(G: Subgroup) -> list[tuple[Point, ...]]:
    """The d cosets of G, ordered by minimal element; block 0 is G itself."""
    F = G.field
    if len(G) != F.d:
        raise InvalidArgument(f"subgroup has {len(G)} elements, expected {F.d}")
    seen: set[Point] = set()
    blocks = []
    for a in all_points(F):
        if a in seen:
            continue
        block = Subgroup.from_points(F, (padd(F, a, g) for g in G.elements)).elements
        seen.update(block)
        blocks.append(block)
    return blocks


def basis_completion(F: Field, v1: Point) -> Point:
    """First point in canonical order forming a basis with ``v1``."""
    v1 = _check_point(F, v1)
    if v1 == (0, 0):
        raise InvalidArgument("zero vector has no basis completion")
    return next(w for w in all_points(F) if det(F, v1, w) != 0)


def det_preimage(F: Field, v1: Point, x: int) -> tuple[Point, Subgroup]:
    """Solve |v1 w| = x: the solution set is ``base + F_d v1``.

    Uses the canonical companion v2 (first basis completion), base = x/|v1 v2| * v2.
    """
    v2 = basis_completion(F, v1)
    return unique_w_on_line(F, v1, v2, x), span_line(F, v1)


def unique_w_on_line(F: Field, v1: Point, v2: Point, x: int) -> Point:
    """The unique w in F_d v2 with |v1 w| = x."""
    delta = det(F, v1, v2)
    if delta == 0:
        raise NotABasis(f"{v1} and {v2} do not form a basis")
    return pscale(F, F.mul(F.inv(delta), F.check(x)), v2)


def find_unit_partner(F: Field, v: Point) -> Point:
    """First w in canonical order with |v w| = 1."""
    v = _check_point(F, v)
    if v == (0, 0):
        raise InvalidArgument("zero vector has no unit partner")
    return next(w for w in all_points(F) if det(F, v, w) == 1)


def format_point(F: Field, v: Point) -> str:
    return f"({F.format(v[0])},{F.format(v[1])})"


def parse_point(F: Field, text: str) -> Point:
    """Parse ``"x,y"`` (optionally parenthesised) in element syntax."""
    parts = text.strip().strip("()").split(",")
    if len(parts) != 2:
        raise InvalidArgument(f"cannot parse {text!r} as a point")
    return (F.parse(parts[0]), F.parse(parts[1]))
