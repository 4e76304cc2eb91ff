"""Compare the numba and numpy kernels on scaled copies of a link.

    python benchmarks/kernels.py [--word W] [--scales 1,10,100]

Prints a CSV table: backend, kernel, scale, size, seconds (best of repeats).
"""

from __future__ import annotations

import argparse

from bunchlinks import _kernels
from bunchlinks.bench import best_time, scale_link
from bunchlinks.parent import build_parent_diagram, count_crossings
from bunchlinks.williams import Mode, branch_order
from bunchlinks.word import parse_link


def main() -> None:
    p = argparse.ArgumentParser()
    p.add_argument("--word", default="x^10y^2x^5y^2x^7y^6x^2y^2x^5y^3")
    p.add_argument("--scales", default="1,10,100")
    p.add_argument("--repeats", type=int, default=5)
    args = p.parse_args()
    link = parse_link(args.word)
    scales = [int(s) for s in args.scales.split(",")]
    # a wide link for the crossing kernel: n-step decreasing family
    wide = [parse_link("".join(f"x^{k}y^{1 + k % 3}" for k in range(n, 0, -1))) for n in (10, 100, 400)]
    print("backend,kernel,scale,size,seconds")
    for backend in _kernels.available_backends():
        for s in scales:
            sl = scale_link(link, s)
            t = best_time(lambda: branch_order(sl, Mode.NAIVE, backend=backend), args.repeats)
            print(f"{backend},naive_sort,{s},{sl.letter_length},{t:.6e}")
        for w in wide:
            d = build_parent_diagram(w)
            t = best_time(lambda: count_crossings(d, backend=backend), args.repeats)
            print(f"{backend},rule_counts,1,{w.nbar},{t:.6e}")


if __name__ == "__main__":
    main()
