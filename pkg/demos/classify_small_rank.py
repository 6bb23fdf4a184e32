"""Enumerate the discrete parameters of a small dual group and compare the
two stability rules on every (psi, eps).

    python demos/classify_small_rank.py [--N 2] [--two-n 4]
"""
import argparse
from collections import Counter

from level0.params import enumerate_parameters, enumerate_sign_characters
from level0.stability import classify_parameter, classify_pair, pair_of_parameter
from level0.tame import enumerate_tame_characters


def describe(psi, eps):
    parts = []
    for key, plus, minus in psi.comps:
        parts.append(f"[{key}] +{plus.blocks} -{minus.blocks}")
    return " ".join(parts) + f"  eps={eps}"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--q", type=int, default=3)
    ap.add_argument("--N", type=int, default=2)
    ap.add_argument("--two-n", type=int, default=4)
    args = ap.parse_args()

    tally = Counter()
    for chi in enumerate_tame_characters(args.q, args.two_n, args.N):
        for psi in enumerate_parameters(chi):
            for eps in enumerate_sign_characters(psi):
                n_data, cusp = pair_of_parameter(psi, eps)
                pair = classify_pair(n_data, cusp)
                rule = classify_parameter(psi, eps)
                tally[(pair.value, rule.value)] += 1
                flag = "" if pair == rule else "   <- rules differ"
                print(f"{pair.value:>10}  {cusp.label():<32} {describe(psi, eps)}{flag}")
    print()
    for (pair, rule), n in sorted(tally.items()):
        print(f"pair rule {pair:>10} / parameter rule {rule:>10}: {n}")


if __name__ == "__main__":
    main()
