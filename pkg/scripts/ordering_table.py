"""Print the shifted weights of every {2,3} bounce sequence of a given length.

Usage: python3 scripts/ordering_table.py [--length 4] [--w 7 10 100]
"""

import argparse
import itertools
from fractions import Fraction

from reliab.transforms import BounceSeq, bounce_graph, bounce_shift


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--length", type=int, default=4)
    ap.add_argument("--w", type=Fraction, nargs="+", default=[Fraction(7), Fraction(10), Fraction(100)])
    args = ap.parse_args()

    seqs = [BounceSeq(t) for t in itertools.product((2, 3), repeat=args.length)]
    for w in args.w:
        values = [bounce_shift(s, w).new_weight for s in seqs]
        ordered = all(a > b for a, b in zip(values, values[1:]))
        print(f"w = {w}: strictly decreasing in lex order: {ordered}")
        for s, v in zip(seqs, values):
            print(f"  <{s}>  edges={bounce_graph(s).graph.m:3d}  w_S ~ {float(v):.6g}")


if __name__ == "__main__":
    main()
