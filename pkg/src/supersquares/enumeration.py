"""Exhaustive enumeration of subgroups and complete sets, and theorem checks.

Order-d subgroups of F_d x F_d are exactly the n-dimensional Z_p-subspaces of
Z_p^(2n); they are generated from reduced row echelon forms.  Complete sets
are found as exact covers of the d^2 - 1 nonzero points.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field

from . import kernels
from .constructions import (
    TYPE_I,
    TYPE_II,
    CompleteSet,
    extraordinary_through,
    type_I,
    type_II,
)
from .errors import InvalidArgument, UnsupportedOrder
from .finite_field import Field, make_field
from .squares import are_orthogonal, supersquare
from .vector_space import (
    Point,
    Subgroup,
    all_points,
    det,
    find_unit_partner,
    is_extraordinary,
    padd,
    pscale,
    span_additive,
    span_line,
    symplectic,
)

NOT_APPLICABLE = "NotApplicable"
UNCLASSIFIED = "Unclassified"

MAX_SUBGROUP_ORDER = 16
COMPLETE_SET_ORDERS = (2, 3, 4, 5, 7, 8, 9)


# -- subgroups -----------------------------------------------------------------

def _rref_bases(p: int, k: int, m: int):
    """Yield every k x m reduced row echelon matrix of rank k over Z_p.

    Each row is packed into one integer, sum of row[j] * p**j.
    """
    for pivots in itertools.combinations(range(m), k):
        free = [(r, c) for r, pc in enumerate(pivots) for c in range(pc + 1, m) if c not in pivots]
        base = [p**pc for pc in pivots]
        for values in itertools.product(range(p), repeat=len(free)):
            rows = list(base)
            for (r, c), val in zip(free, values):
                rows[r] += val * p**c
            yield rows


def _bases(F: Field):
    # a packed row splits into (x, y) element indices
    for rows in _rref_bases(F.p, F.n, 2 * F.n):
        yield tuple(divmod(r, F.d)[::-1] for r in rows)


def _span(F: Field, gens) -> Subgroup:
    span = [(0, 0)]
    for g in gens:
        layer = span
        for _ in range(F.p - 1):
            layer = [padd(F, v, g) for v in layer]
            span = span + layer
    return Subgroup.from_points(F, span)


def _check_order(F: Field):
    if F.d > MAX_SUBGROUP_ORDER:
        raise UnsupportedOrder(f"exhaustive subgroup enumeration supports d <= {MAX_SUBGROUP_ORDER}")


def all_order_d_subgroups(F: Field) -> list[Subgroup]:
    """Every additive subgroup of F_d x F_d with d elements, canonically sorted."""
    _check_order(F)
    return sorted((_span(F, gens) for gens in _bases(F)), key=lambda G: G.key)


def all_extraordinary(F: Field) -> list[Subgroup]:
    _check_order(F)
    # the trace form is bi-additive, so checking basis pairs suffices
    groups = [
        _span(F, gens) for gens in _bases(F)
        if all(symplectic(F, a, b) == 0 for a, b in itertools.combinations(gens, 2))
    ]
    return sorted(groups, key=lambda G: G.key)


def all_lines(F: Field) -> list[Subgroup]:
    seen = {span_line(F, v) for v in all_points(F) if v != (0, 0)}
    return sorted(seen, key=lambda G: G.key)


# -- complete sets -------------------------------------------------------------

def _point_bits(F: Field) -> dict[Point, int]:
    nonzero = [v for v in all_points(F) if v != (0, 0)]
    return {v: i for i, v in enumerate(nonzero)}


def subgroup_mask(G: Subgroup, bits: dict[Point, int]) -> int:
    m = 0
    for v in G.nonzero:
        m |= 1 << bits[v]
    return m


def _cover_task(args):
    masks, full, start, backend = args
    return kernels.exact_cover(masks, full, start, backend=backend)


def all_complete_sets(
    F: Field,
    extraordinary_only: bool = True,
    jobs: int = 1,
    backend: str | None = None,
) -> list[CompleteSet]:
    """Every family of d+1 order-d subgroups meeting pairwise in 0.

    With ``jobs > 1`` the branches through the first nonzero point run in
    separate processes; results are sorted, so output does not depend on jobs.
    """
    if F.d not in COMPLETE_SET_ORDERS:
        raise UnsupportedOrder(f"complete-set enumeration supports d in {COMPLETE_SET_ORDERS}")
    cands = all_extraordinary(F) if extraordinary_only else all_order_d_subgroups(F)
    bits = _point_bits(F)
    masks = [subgroup_mask(G, bits) for G in cands]
    full = (1 << len(bits)) - 1

    if jobs > 1:
        starts = [(i,) for i, m in enumerate(masks) if m & 1]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(_cover_task, [(masks, full, s, backend) for s in starts])
            solutions = [sol for part in parts for sol in part]
    else:
        solutions = kernels.exact_cover(masks, full, backend=backend)

    sets = {}
    for sol in solutions:
        members = tuple(sorted((cands[i] for i in sol), key=lambda G: G.key))
        cs = CompleteSet(F, members)
        sets[cs.key] = cs
    return [sets[k] for k in sorted(sets)]


def classify_complete_set(cs: CompleteSet) -> str:
    """TypeI (all five members lines) or TypeII (exactly one line) at d = 4.

    Any other line count for a valid extraordinary set at d = 4 would
    contradict the classification and is returned as ``Unclassified``.
    """
    if not cs.is_valid():
        raise InvalidArgument("not a complete set: members must partition the nonzero points")
    F = cs.field
    if F.d != 4 or not all(is_extraordinary(G) for G in cs.subgroups):
        return NOT_APPLICABLE
    lines = sum(G.is_line() for G in cs.subgroups)
    if lines == 5:
        return TYPE_I
    if lines == 1:
        return TYPE_II
    return UNCLASSIFIED


def max_orthogonal_count(F: Field, backend: str | None = None) -> int:
    """Largest number of order-d subgroups with pairwise trivial intersection."""
    if F.d > 5:
        raise UnsupportedOrder("exhaustive maximum search supports d <= 5")
    bits = _point_bits(F)
    masks = [subgroup_mask(G, bits) for G in all_order_d_subgroups(F)]
    return len(kernels.max_disjoint_family(masks, F.d - 1, backend=backend))


# -- reports -------------------------------------------------------------------

def _subgroup_json(G: Subgroup) -> list[list[int]]:
    return [[x, y] for x, y in G.elements]


def digest(payload) -> str:
    text = json.dumps(payload, separators=(",", ":"), sort_keys=True)
    return hashlib.sha256(text.encode()).hexdigest()


@dataclass
class EnumerationReport:
    p: int
    n: int
    d: int
    target: str
    counts: dict
    digest: str
    elapsed: float = 0.0
    items: list | None = None

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "field": {"p": self.p, "n": self.n, "d": self.d},
            "target": self.target,
            "counts": self.counts,
            "digest": self.digest,
        }
        if self.items is not None:
            out["items"] = self.items
        if timing:
            out["timing"] = {"elapsed_s": round(self.elapsed, 6)}
        return out


def enumerate_report(
    F: Field,
    target: str,
    extraordinary_only: bool = False,
    jobs: int = 1,
    include_items: bool = False,
) -> EnumerationReport:
    t0 = time.perf_counter()
    if target == "subgroups":
        groups = all_order_d_subgroups(F)
        payload = [_subgroup_json(G) for G in groups]
        counts = {
            "subgroups": len(groups),
            "extraordinary": sum(is_extraordinary(G) for G in groups),
            "lines": sum(G.is_line() for G in groups),
        }
    elif target == "extraordinary":
        groups = all_extraordinary(F)
        payload = [_subgroup_json(G) for G in groups]
        counts = {"extraordinary": len(groups), "lines": sum(G.is_line() for G in groups)}
    elif target == "complete-sets":
        sets = all_complete_sets(F, extraordinary_only, jobs=jobs)
        payload = [[_subgroup_json(G) for G in cs.subgroups] for cs in sets]
        counts = {"complete_sets": len(sets)}
        if F.d == 4 and extraordinary_only:
            kinds: dict[str, int] = {}
            for cs in sets:
                k = classify_complete_set(cs)
                kinds[k] = kinds.get(k, 0) + 1
            counts["kinds"] = dict(sorted(kinds.items()))
        counts["with_non_line_member"] = sum(
            any(not G.is_line() for G in cs.subgroups) for cs in sets
        )
    else:
        raise InvalidArgument(f"unknown enumeration target {target!r}")
    return EnumerationReport(
        F.p, F.n, F.d, target, counts, digest(payload),
        elapsed=time.perf_counter() - t0,
        items=payload if include_items else None,
    )


@dataclass
class VerificationReport:
    name: str
    passed: bool
    checked: int
    counterexamples: list = dc_field(default_factory=list)
    out_of_scope: list = dc_field(default_factory=list)
    details: dict = dc_field(default_factory=dict)

    def summary(self) -> str:
        status = "pass" if self.passed else "FAIL"
        extra = "".join(f", {k} = {v}" for k, v in self.details.items() if not isinstance(v, (list, dict)))
        return f"{self.name}: {status} ({self.checked} checked, {len(self.counterexamples)} counterexamples{extra})"


def _require_d4(F: Field):
    if F.d != 4:
        raise UnsupportedOrder(f"this check is specific to d = 4, got d = {F.d}")


def verify_prop_4_3(p: int) -> VerificationReport:
    """Every order-p subgroup of F_p x F_p is extraordinary and equals F_p g for all g != 0."""
    F = make_field(p, 1)
    bad = []
    groups = all_order_d_subgroups(F)
    for G in groups:
        if not is_extraordinary(G) or any(span_line(F, g) != G for g in G.nonzero):
            bad.append(G.format())
    return VerificationReport(
        f"subgroups of F_{p}^2 are extraordinary lines", not bad, len(groups), bad,
        details={"subgroups": len(groups)},
    )


def verify_prop_3_3(F: Field) -> VerificationReport:
    """Supersquares are orthogonal iff their generating subgroups meet only in 0."""
    groups = all_order_d_subgroups(F)
    squares = [supersquare(G) for G in groups]
    bad = []
    checked = 0
    for (i, A), (j, B) in itertools.combinations(enumerate(groups), 2):
        trivial = A.intersection(B) == {(0, 0)}
        if are_orthogonal(squares[i], squares[j]) != trivial:
            bad.append((A.format(), B.format()))
        checked += 1
    return VerificationReport(f"orthogonality vs trivial intersection, d = {F.d}", not bad, checked, bad)


def verify_prop_3_5b(F: Field, backend: str | None = None) -> VerificationReport:
    best = max_orthogonal_count(F, backend=backend)
    bound = (F.d * F.d - 1) // (F.d - 1)
    passed = best == F.d + 1 and bound == F.d + 1
    return VerificationReport(
        f"maximum number of mutually orthogonal supersquares, d = {F.d}",
        passed, 1, [] if passed else [best],
        details={"max": best, "d+1": F.d + 1},
    )


def verify_prop_4_7(F: Field) -> VerificationReport:
    """Extraordinary order-4 subgroups through v are exactly F4 v, Z2 v + Z2 (w + c v), c in {0, m}."""
    _require_d4(F)
    extra = all_extraordinary(F)
    m, m2 = F.mu(1), F.mu(2)
    bad = []
    checked = 0
    incidences = 0
    for v in all_points(F):
        if v == (0, 0):
            continue
        containing = {G for G in extra if v in G}
        incidences += len(containing)
        partners = [w for w in all_points(F) if det(F, v, w) == 1]
        if find_unit_partner(F, v) != partners[0]:
            bad.append((v, "partner"))
        for w in partners:
            checked += 1
            through = set(extraordinary_through(F, v, w))
            if through != containing or len(through) != 3:
                bad.append((v, w, "mismatch"))
            # c = 1 and c = m^2 add nothing new
            if span_additive(F, [v, padd(F, w, v)]) != span_additive(F, [v, w]):
                bad.append((v, w, "c=1"))
            if span_additive(F, [v, padd(F, w, pscale(F, m2, v))]) != span_additive(
                F, [v, padd(F, w, pscale(F, m, v))]
            ):
                bad.append((v, w, "c=m^2"))
    identity_ok = incidences == sum(len(G.nonzero) for G in extra)
    if not identity_ok:
        bad.append(("double counting", incidences))
    return VerificationReport(
        "extraordinary subgroups through a point", not bad, checked, bad,
        details={"extraordinary": len(extra), "per_point": incidences // (F.d**2 - 1)},
    )


def verify_lemma_4_8(F: Field, sets: list[CompleteSet] | None = None) -> VerificationReport:
    """Every extraordinary complete set at d = 4 contains a line F4 u."""
    _require_d4(F)
    if sets is None:
        sets = all_complete_sets(F, extraordinary_only=True)
    bad, skipped = [], []
    for cs in sets:
        if not cs.is_valid() or not all(is_extraordinary(G) for G in cs.subgroups):
            skipped.append(cs)
        elif not any(G.is_line() for G in cs.subgroups):
            bad.append(cs)
    return VerificationReport(
        "every extraordinary complete set contains a line",
        not bad, len(sets) - len(skipped), bad, skipped,
    )


def verify_theorem_4_13(F: Field) -> VerificationReport:
    """Both directions of the Type I / Type II classification at d = 4."""
    _require_d4(F)
    enumerated = all_complete_sets(F, extraordinary_only=True)
    known = set(enumerated)
    pts = [v for v in all_points(F) if v != (0, 0)]
    witnesses: dict[CompleteSet, tuple] = {}
    bad = []
    constructed = 0
    for v1, v2 in itertools.product(pts, pts):
        delta = det(F, v1, v2)
        if delta == 0:
            continue
        built = [type_I(F, v1, v2)]
        if delta == 1:
            built.append(type_II(F, v1, v2))
        for cs in built:
            constructed += 1
            ok = (
                cs.is_valid()
                and all(is_extraordinary(G) for G in cs.subgroups)
                and cs in known
                and classify_complete_set(cs) == cs.kind
            )
            if not ok:
                bad.append(("constructed", cs.kind, v1, v2))
            witnesses.setdefault(cs, (cs.kind, v1, v2))

    kinds: dict[str, int] = {}
    for cs in enumerated:
        kind = classify_complete_set(cs)
        kinds[kind] = kinds.get(kind, 0) + 1
        w = witnesses.get(cs)
        if kind not in (TYPE_I, TYPE_II) or w is None or w[0] != kind:
            bad.append(("enumerated", kind, [G.format() for G in cs.subgroups]))
    return VerificationReport(
        "extraordinary complete sets are exactly Type I and Type II",
        not bad, len(enumerated) + constructed, bad,
        details={"complete_sets": len(enumerated), "kinds": dict(sorted(kinds.items())),
                 "constructions": constructed},
    )
