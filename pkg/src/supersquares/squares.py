"""Squares as labelled partitions of M x M, supersquares, orthogonality.

``M`` is either the additive group of a finite field (:class:`FieldGroup`) or
a product of cyclic groups (:class:`CyclicGroup`).  A cell of a square is a
pair ``(x, y)`` of group elements; ``x`` picks the row, ``y`` the column.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

from .errors import InvalidArgument, InvalidPartition
from .finite_field import Field
from .vector_space import Subgroup, is_extraordinary


class GroupSpec:
    """A finite commutative group with a deterministic element order."""

    order: int
    elements: tuple

    def add(self, a, b):
        raise NotImplementedError

    def rank(self, a) -> int:
        raise NotImplementedError

    def format(self, a) -> str:
        raise NotImplementedError

    @property
    def zero(self):
        return self.elements[0]

    def cell_key(self, v) -> tuple[int, int]:
        return (self.rank(v[0]), self.rank(v[1]))

    def cells(self) -> list:
        return [(x, y) for x in self.elements for y in self.elements]

    def cell_add(self, u, v):
        return (self.add(u[0], v[0]), self.add(u[1], v[1]))


class FieldGroup(GroupSpec):
    """(F_d, +) with elements in canonical order 0, 1, m, m^2, ..."""

    def __init__(self, field: Field):
        self.field = field
        self.order = field.d
        self.elements = field.order

    def add(self, a, b):
        return self.field.add(a, b)

    def rank(self, a) -> int:
        return self.field.rank[a]

    def format(self, a) -> str:
        return self.field.format(a)

    def __eq__(self, other):
        return isinstance(other, FieldGroup) and self.field == other.field

    def __hash__(self):
        return hash(("field", self.field))

    def __repr__(self):
        return f"FieldGroup(GF({self.field.d}))"


class CyclicGroup(GroupSpec):
    """Z_{n1} x ... x Z_{nk}; elements are tuples in lexicographic order."""

    def __init__(self, orders: Sequence[int]):
        orders = tuple(int(o) for o in orders)
        if not orders or any(o < 1 for o in orders):
            raise InvalidArgument(f"bad cyclic orders {orders}")
        self.orders = orders
        self.elements = tuple(itertools.product(*(range(o) for o in orders)))
        self.order = len(self.elements)
        self._rank = {a: i for i, a in enumerate(self.elements)}

    def add(self, a, b):
        return tuple((x + y) % o for x, y, o in zip(a, b, self.orders))

    def rank(self, a) -> int:
        return self._rank[a]

    def format(self, a) -> str:
        return str(a[0]) if len(a) == 1 else "(" + ",".join(map(str, a)) + ")"

    def __eq__(self, other):
        return isinstance(other, CyclicGroup) and self.orders == other.orders

    def __hash__(self):
        return hash(("cyclic", self.orders))

    def __repr__(self):
        return f"CyclicGroup({list(self.orders)})"


def as_group(g) -> GroupSpec:
    return FieldGroup(g) if isinstance(g, Field) else g


@dataclass(frozen=True)
class SquareTaxonomy:
    is_latin: bool
    is_row_latin: bool
    is_column_latin: bool
    is_supersquare: bool
    is_extraordinary: bool
    generating_subgroup: object = None

    @property
    def kind(self) -> str:
        if self.is_latin:
            return "latin"
        if self.is_row_latin:
            return "row-latin"
        if self.is_column_latin:
            return "column-latin"
        return "general"

    def describe(self) -> str:
        words = [self.kind]
        if self.is_supersquare:
            words.append("supersquare")
        if self.is_extraordinary:
            words.append("extraordinary")
        return ", ".join(words)


@dataclass(frozen=True)
class Square:
    """Ordered blocks A_1..A_D of M x M; cells of block j carry label j+1.

    Two squares compare equal when their ordered blocks agree; use
    :attr:`partition` to compare the underlying partitions only.
    """

    group: GroupSpec
    blocks: tuple[tuple, ...]

    @property
    def order(self) -> int:
        return self.group.order

    @cached_property
    def labels(self) -> dict:
        return {v: j + 1 for j, block in enumerate(self.blocks) for v in block}

    @cached_property
    def partition(self) -> frozenset:
        return frozenset(frozenset(b) for b in self.blocks)

    def grid(self) -> list[list[int]]:
        """grid[i][j] = label of (x_i, y_j), elements in canonical order."""
        els, lab = self.group.elements, self.labels
        return [[lab[(x, y)] for y in els] for x in els]

    def relabeled(self, perm: Sequence[int]) -> "Square":
        """Block j moves to position perm[j]."""
        blocks = [None] * len(self.blocks)
        for j, k in enumerate(perm):
            blocks[k] = self.blocks[j]
        return Square(self.group, tuple(blocks))


def square_from_partition(group, blocks: Iterable[Iterable]) -> Square:
    """Build a square from D blocks; block j (0-based) receives label j+1."""
    group = as_group(group)
    D = group.order
    cell_set = set(group.cells())
    out = []
    seen: set = set()
    for block in blocks:
        b = {tuple(v) for v in block}
        if len(b) != D:
            raise InvalidPartition(f"block of size {len(b)}, expected {D}")
        if not b <= cell_set:
            raise InvalidPartition("block contains cells outside M x M")
        if b & seen:
            raise InvalidPartition("blocks overlap")
        seen |= b
        out.append(tuple(sorted(b, key=group.cell_key)))
    if len(out) != D or len(seen) != D * D:
        raise InvalidPartition(f"expected {D} blocks covering {D * D} cells")
    return Square(group, tuple(out))


def square_from_grid(group, grid: Sequence[Sequence[int]]) -> Square:
    """Build a square from a label grid (rows in canonical element order)."""
    group = as_group(group)
    D = group.order
    if len(grid) != D or any(len(row) != D for row in grid):
        raise InvalidPartition(f"grid must be {D}x{D}")
    blocks: list[list] = [[] for _ in range(D)]
    for x, row in zip(group.elements, grid):
        for y, label in zip(group.elements, row):
            if not 1 <= label <= D:
                raise InvalidPartition(f"label {label} out of range 1..{D}")
            blocks[label - 1].append((x, y))
    return square_from_partition(group, blocks)


def _group_cosets(group: GroupSpec, sub: set) -> list[tuple]:
    seen: set = set()
    blocks = []
    for a in group.cells():
        if a in seen:
            continue
        block = tuple(sorted({group.cell_add(a, g) for g in sub}, key=group.cell_key))
        seen.update(block)
        blocks.append(block)
    return blocks


def supersquare(A1, group=None) -> Square:
    """The square M x M / A1, cosets ordered by their minimal cell.

    ``A1`` is a :class:`Subgroup` of F_d x F_d, or any iterable of cells of
    ``group`` forming a subgroup of order D.
    """
    if isinstance(A1, Subgroup):
        group = FieldGroup(A1.field)
    elif group is None:
        raise InvalidArgument("a group is required for a generic subgroup")
    group = as_group(group)
    sub = {tuple(v) for v in A1}
    if len(sub) != group.order:
        raise InvalidArgument(f"generating subgroup has {len(sub)} elements, expected {group.order}")
    if not _is_group_subgroup(group, sub):
        raise InvalidArgument("generating set is not a subgroup")
    return Square(group, tuple(_group_cosets(group, sub)))


def _is_group_subgroup(group: GroupSpec, s: set) -> bool:
    z = (group.zero, group.zero)
    return z in s and all(group.cell_add(a, b) in s for a in s for b in s)


def generic_subgroups(group: GroupSpec) -> list[frozenset]:
    """All order-D subgroups of M x M, by growing subgroups one generator at a time."""
    D = group.order
    cells = group.cells()

    def join(s: frozenset, g) -> frozenset:
        out = set(s)
        frontier = list(s)
        while frontier:
            b = group.cell_add(frontier.pop(), g)
            if b not in out:
                out.add(b)
                frontier.append(b)
        return frozenset(out)

    found: set[frozenset] = set()
    level = {frozenset([(group.zero, group.zero)])}
    while level:
        nxt = set()
        for s in level:
            for g in cells:
                if g in s:
                    continue
                t = join(s, g)
                if len(t) == D:
                    found.add(t)
                elif len(t) < D and D % len(t) == 0:
                    nxt.add(t)
        level = nxt
    return sorted(found, key=lambda s: sorted(group.cell_key(v) for v in s))


def first_collision(S: Square, T: Square):
    """First pair of distinct cells with equal label pairs, or None."""
    if S.order != T.order or S.group != T.group:
        raise InvalidArgument("squares have different orders or groups")
    seen = {}
    for v in S.group.cells():
        pair = (S.labels[v], T.labels[v])
        if pair in seen:
            return seen[pair], v, pair
        seen[pair] = v
    return None


def are_orthogonal(S: Square, T: Square) -> bool:
    return first_collision(S, T) is None


def mutually_orthogonal(squares: Sequence[Square]) -> bool:
    return all(are_orthogonal(S, T) for S, T in itertools.combinations(squares, 2))


def classify(S: Square) -> SquareTaxonomy:
    D = S.order
    full = set(range(1, D + 1))
    grid = S.grid()
    rows = all(set(row) == full for row in grid)
    cols = all({grid[i][j] for i in range(D)} == full for j in range(D))

    group = S.group
    z = (group.zero, group.zero)
    base = next(set(b) for b in S.blocks if z in b)
    is_super = _is_group_subgroup(group, base) and all(
        {group.cell_add(b[0], g) for g in base} == set(b) for b in S.blocks
    )
    generating = None
    extraordinary = False
    if is_super:
        if isinstance(group, FieldGroup):
            generating = Subgroup.from_points(group.field, base)
            extraordinary = is_extraordinary(generating)
        else:
            generating = frozenset(base)
    return SquareTaxonomy(
        is_latin=rows and cols,
        is_row_latin=rows,
        is_column_latin=cols,
        is_supersquare=is_super,
        is_extraordinary=extraordinary,
        generating_subgroup=generating,
    )


def render(S: Square, origin: str = "bottom", transpose: bool = False) -> str:
    """Label grid as text; with origin='bottom' the row of x=0 is printed last.

    ``transpose`` draws x along the columns instead of the rows.
    """
    if origin not in ("bottom", "top"):
        raise InvalidArgument(f"origin must be 'bottom' or 'top', not {origin!r}")
    width = len(str(S.order))
    grid = S.grid()
    if transpose:
        grid = [list(col) for col in zip(*grid)]
    lines = [" ".join(str(c).rjust(width) for c in row) for row in grid]
    if origin == "bottom":
        lines.reverse()
    return "\n".join(lines)


def parse_grid(text: str, origin: str = "bottom") -> list[list[int]]:
    """Inverse of :func:`render`: returns rows in canonical element order."""
    rows = [[int(t) for t in line.split()] for line in text.strip().splitlines() if line.strip()]
    if origin == "bottom":
        rows.reverse()
    return rows
