"""Compare the compiled and pure-Python search kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each workload is run on every available backend; the best of N wall times
is reported along with the result size, which must agree across backends.
"""

from __future__ import annotations

import argparse
import random
import time

from supersquares import kernels
from supersquares.enumeration import _point_bits, all_extraordinary, all_order_d_subgroups, subgroup_mask
from supersquares.finite_field import make_field


def subgroup_masks(F, extraordinary: bool):
    bits = _point_bits(F)
    groups = all_extraordinary(F) if extraordinary else all_order_d_subgroups(F)
    return [subgroup_mask(G, bits) for G in groups], (1 << len(bits)) - 1


def triples(nbits: int, count: int, seed: int):
    rng = random.Random(seed)
    masks = set()
    while len(masks) < count:
        masks.add(sum(1 << b for b in rng.sample(range(nbits), 3)))
    return sorted(masks), (1 << nbits) - 1


def workloads():
    m8, full8 = subgroup_masks(make_field(2, 3), True)
    m4, full4 = subgroup_masks(make_field(2, 2), False)
    mt, fullt = triples(27, 150, 7)
    mf, _ = triples(36, 90, 11)
    return [
        ("exact cover, d=8 extraordinary (135 masks)", lambda b: kernels.exact_cover(m8, full8, backend=b)),
        ("exact cover, d=4 all subgroups (35 masks)", lambda b: kernels.exact_cover(m4, full4, backend=b)),
        ("exact cover, random triples (27 bits, 150 masks)", lambda b: kernels.exact_cover(mt, fullt, backend=b)),
        ("max family, d=4 all subgroups", lambda b: kernels.max_disjoint_family(m4, 3, backend=b)),
        ("max family, random triples (36 bits, 90 masks)", lambda b: kernels.max_disjoint_family(mf, 3, backend=b)),
    ]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = kernels.available_backends()
    print(f"backends: {', '.join(backends)}")
    if "cython" not in backends:
        print("compiled kernels not built; only the pure-Python timings are shown")
    for name, fn in workloads():
        times, sizes = {}, {}
        for b in backends:
            best = float("inf")
            for _ in range(args.repeat):
                t0 = time.perf_counter()
                out = fn(b)
                best = min(best, time.perf_counter() - t0)
            times[b], sizes[b] = best, len(out)
        assert len(set(sizes.values())) == 1, sizes
        row = "  ".join(f"{b} {t * 1e3:9.2f} ms" for b, t in times.items())
        speedup = f"  x{times['python'] / times['cython']:.1f}" if "cython" in times else ""
        print(f"{name:<50} result {sizes['python']:>6}  {row}{speedup}")


if __name__ == "__main__":
    main()
