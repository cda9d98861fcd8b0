"""Compare the general-q bounce shift (series/parallel composition) with the
closed product form, and both with brute force on an inflated single edge."""

from fractions import Fraction as F

from reliab.evaluators import ztut_brute
from reliab.graph import path_graph
from reliab.transforms import BounceSeq, bounce_graph, inflate, mv_bounce_shift

CASES = [
    ((2,), F(3), F(6)),
    ((3,), F(2), F(1)),
    ((2, 2), F(3), F(6)),
    ((2, 3), F(1, 2), F(5)),
    ((3, 2), F(-1), F(2)),
    ((3, 3), F(5), F(7, 2)),
    ((4,), F(-3), F(7)),
    ((2, 2, 2), F(2), F(3)),
]


def main() -> None:
    k2 = path_graph(1)
    for entries, q, w in CASES:
        seq = BounceSeq(entries)
        r = mv_bounce_shift(seq, q, w)
        brute = ztut_brute(inflate(k2, bounce_graph(seq, w)), q) / q
        ok = brute == r.prefactor * (q + r.new_weight)
        print(
            f"<{seq}> q={q} w={w}: w_S={r.new_weight}  brute-force match={ok}  "
            f"closed form={r.closed_form_weight}  agrees={r.closed_form_agrees}"
        )


if __name__ == "__main__":
    main()
