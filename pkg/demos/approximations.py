"""Lower and upper approximations under a quasiorder, and the size of RS for chains."""
import argparse

from roughnelson import relations as rel
from roughnelson.rough import enumerate_rs_generated, format_pair, rough_pair


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=3, help="length of the chain 1 <= 2 <= ... <= n")
    args = ap.parse_args()

    R = rel.chain_order(args.n)
    print(f"chain of length {args.n}; every subset and its rough pair:")
    for mask in range(1 << args.n):
        X = {R.universe.elements[i] for i in range(args.n) if mask >> i & 1}
        print(f"  {sorted(X)!s:<20} -> {format_pair(R.universe, rough_pair(R, X))}")

    rs = enumerate_rs_generated(R)
    print(f"|RS| = {len(rs)} (distinct pairs), totally ordered: {rs.is_chain()}")
    for n in range(1, 11):
        rs = enumerate_rs_generated(rel.chain_order(n))
        print(f"  n={n:2d}  |RS|={len(rs):3d}")

    E = rel.equivalence_from_blocks([["a"], ["b", "c"]])
    rs = enumerate_rs_generated(E)
    print("equivalence {a | b c}:", ", ".join(format_pair(E.universe, p) for p in rs.pairs))


if __name__ == "__main__":
    main()
