"""Regenerate the frozen figure goldens in tests/goldens.

Inputs are the hand transcriptions ``figN_drawn.txt`` (grids top to bottom,
panels separated by blank lines).  For each figure this script

* parses the panels as labelled squares over GF(4),
* checks every panel partition against the matching construction member,
* writes ``figN.json`` (the transcribed squares, labels as drawn) and
  ``figN_canonical.txt`` (each panel relabelled by minimal coset cell).

It then confirms the d = 4 and d = 8 enumeration counts against the
brute-force oracles in tests/oracles.py and freezes the reports (without
timings) as ``enumeration.json``.  Any disagreement stops the script.

The fig6 grids are drawn with x along the columns, so they are transposed on input.
Run again only after editing a transcription; the outputs are committed.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

from supersquares.constructions import example_set_d4, type_I, type_II
from supersquares.enumeration import enumerate_report
from supersquares.finite_field import make_field
from supersquares.io import dumps, to_document
from supersquares.squares import classify, parse_grid, render, square_from_grid, supersquare
from supersquares.vector_space import Subgroup

TESTS = Path(__file__).resolve().parent.parent / "tests"
GOLDENS = TESTS / "goldens"
sys.path.insert(0, str(TESTS))
from oracles import brute_complete_sets, brute_extraordinary, brute_subgroups  # noqa: E402
F4 = make_field(2, 2)
MU = F4.mu(1)
MU2 = F4.mu(2)

# figure -> (construction members, drawn panel -> member index, transposed?)
FIGURES = {
    "fig4": (lambda: example_set_d4(F4, (1, 0), (0, 1)), (0, 1, 2, 4, 3), False),
    "fig5": (lambda: type_I(F4, (1, MU2), (0, MU)), (3, 2, 4, 1, 0), False),
    "fig6": (lambda: type_II(F4, (1, MU2), (1, MU)), (0, 1, 2, 3, 4), True),
}


def read_panels(name: str) -> list[str]:
    text = (GOLDENS / f"{name}_drawn.txt").read_text()
    return [p.strip() for p in text.strip().split("\n\n")]


def panel_square(text: str, transposed: bool):
    grid = parse_grid(text)
    if transposed:
        # drawn rows are y (bottom to top), columns are x
        grid = [list(col) for col in zip(*grid)]
    return square_from_grid(F4, grid)


def main() -> int:
    for name in ("fig1", "fig2"):
        (S,) = [panel_square(p, False) for p in read_panels(name)]
        (GOLDENS / f"{name}.json").write_text(dumps(to_document(S)))

    S2 = panel_square(read_panels("fig2")[0], False)
    if S2 != supersquare(Subgroup.from_points(F4, [(0, 0), (1, 1), (MU, MU), (MU2, MU2)])):
        print("fig2: transcription does not match F4(1,1)", file=sys.stderr)
        return 1

    for name, (build, mapping, transposed) in FIGURES.items():
        members = build().subgroups
        squares = [panel_square(p, transposed) for p in read_panels(name)]
        canon = []
        for k, (S, m) in enumerate(zip(squares, mapping)):
            gen = classify(S).generating_subgroup
            if gen is None or gen != members[m]:
                print(f"{name} panel {'abcde'[k]}: partition differs from member {m}", file=sys.stderr)
                return 1
            canon.append(render(supersquare(gen)))
        (GOLDENS / f"{name}.json").write_text(dumps([to_document(S) for S in squares]))
        (GOLDENS / f"{name}_canonical.txt").write_text("\n\n".join(canon) + "\n")
        print(f"{name}: {len(squares)} panels cross-checked and frozen")
    return freeze_enumeration()


def freeze_enumeration() -> int:
    frozen = {}
    for n in (2, 3):
        F = make_field(2, n)
        extra = brute_extraordinary(F)
        oracle = {
            "subgroups": len(brute_subgroups(F)),
            "extraordinary": len(extra),
            "lines": sum(_is_line(F, s) for s in extra),
            "complete_sets": len(brute_complete_sets(F, extra)),
        }
        reports = {
            t: enumerate_report(F, t, extraordinary_only=True).to_dict(timing=False)
            for t in ("subgroups", "extraordinary", "complete-sets")
        }
        got = {
            "subgroups": reports["subgroups"]["counts"]["subgroups"],
            "extraordinary": reports["extraordinary"]["counts"]["extraordinary"],
            "lines": reports["extraordinary"]["counts"]["lines"],
            "complete_sets": reports["complete-sets"]["counts"]["complete_sets"],
        }
        if got != oracle:
            print(f"d={F.d}: enumerator {got} disagrees with oracle {oracle}", file=sys.stderr)
            return 1
        if F.d == 4:
            # kinds from line counts on the oracle's own sets
            kinds = {"TypeI": 0, "TypeII": 0}
            for cs in brute_complete_sets(F, extra):
                lines = sum(_is_line(F, s) for s in cs)
                kinds["TypeI" if lines == 5 else "TypeII" if lines == 1 else "other"] += 1
            if kinds != reports["complete-sets"]["counts"]["kinds"]:
                print(f"d=4: kind split {reports['complete-sets']['counts']['kinds']} vs oracle {kinds}",
                      file=sys.stderr)
                return 1
        frozen[str(F.d)] = reports
        print(f"d={F.d}: enumeration counts confirmed by oracle and frozen")
    (GOLDENS / "enumeration.json").write_text(json.dumps(frozen, indent=1, sort_keys=True) + "\n")
    return 0


def _is_line(F, s) -> bool:
    nz = [v for v in s if v != (0, 0)]
    v = nz[0]
    return set(s) == {(F.mul(c, v[0]), F.mul(c, v[1])) for c in range(F.d)}


if __name__ == "__main__":
    sys.exit(main())
