"""Jordan-Hoelder constituents of Ind_B^G(chi1 (x) chi2) over GL_2(F_q).

For f = 1 the script checks the closed form
    JH Ind(chi1 (x) chi2) = {det^b Sym^n, det^(b+n) Sym^(p-1-n)},  n = (a - b) mod (p-1),
with chi1 = omega^a, chi2 = omega^b and n taken in [0, p-2], against the Brauer
decomposition.  For f > 1 it only prints the table.

Usage: python scripts/principal_series_table.py [--q 3 5 7 9]
"""

import argparse
from dataclasses import dataclass, field

from serreweights.char_arith import LocalPlace, make_character
from serreweights.weight_core import WeightMultiset, canonicalize_weight, jh_principal_series


@dataclass
class Config:
    qs: list[int] = field(default_factory=lambda: [3, 5, 7, 9])


def closed_form(place, a, b, swap=False):
    if swap:
        a, b = b, a
    p = place.p
    n = (a - b) % (p - 1)
    return WeightMultiset([
        canonicalize_weight(place, (n,), b),
        canonicalize_weight(place, (p - 1 - n,), b + n),
    ])


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--q", dest="qs", type=int, nargs="+", default=Config().qs)
    cfg = Config(**vars(ap.parse_args()))
    for q in cfg.qs:
        p = next(d for d in range(2, q + 1) if q % d == 0)
        f = {p**k: k for k in range(1, 8)}[q]
        place = LocalPlace(p, 1, f)
        hits = {False: 0, True: 0}
        total = 0
        print(f"q = {q}")
        for a in range(q - 1):
            for b in range(q - 1):
                ms = jh_principal_series((make_character(place, 1, a), make_character(place, 1, b)))
                print(f"  ({a},{b}): " + " + ".join(f"{m}*{s.label()}" if m > 1 else s.label() for s, m in ms.items()))
                if f == 1:
                    total += 1
                    for swap in hits:
                        hits[swap] += closed_form(place, a, b, swap) == ms
        if f == 1:
            print(f"  closed form (chi1 = omega^a): {hits[False]}/{total}; with chi1, chi2 swapped: {hits[True]}/{total}")


if __name__ == "__main__":
    main()
