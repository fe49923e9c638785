"""Check the axiom suites on a few catalog algebras, including ones that fail (M)."""
import argparse

from roughnelson.algebra import condition_M, interpolation_prime_filters, verify_all
from roughnelson.catalog import boolean_algebra, chain_algebra, crown_kleene_algebra, nelson8, smallest_kleene_failing_M


def show(label, A):
    print(f"{label} ({A.lattice.size} elements)")
    for name, v in verify_all(A).items():
        mark = {True: "pass", False: "FAIL", None: "skip"}[v.passed]
        wit = f"  witness {v.witness}" if v.witness is not None else ""
        print(f"  {name:<14} {mark}{wit}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--search-size", type=int, default=7, help="largest Kleene algebra to try when hunting for a failure of (M)")
    args = ap.parse_args()

    show("3-element chain", chain_algebra(3))
    show("eight-element Nelson algebra", nelson8())
    show("Boolean algebra 2^2", boolean_algebra(2))
    show("crown Kleene algebra", crown_kleene_algebra())

    A = smallest_kleene_failing_M(args.search_size)
    if A is None:
        print(f"no Kleene algebra with at most {args.search_size} elements fails (M)")
        return
    print(f"smallest Kleene algebra failing (M) has {A.lattice.size} elements")
    print(f"  (M): {bool(condition_M(A))}, prime-filter interpolation: {bool(interpolation_prime_filters(A))}")


if __name__ == "__main__":
    main()
