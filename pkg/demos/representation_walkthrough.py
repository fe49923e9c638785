"""Represent the eight-element Nelson algebra as the rough sets of a quasiorder."""
import argparse
from pathlib import Path

from roughnelson.catalog import nelson8
from roughnelson.io import lattice_dot, relation_dot, rs_dot
from roughnelson.representation import represent
from roughnelson.rough import format_pair


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=None, help="directory for DOT files")
    args = ap.parse_args()

    A = nelson8()
    res = represent(A)
    part = res.partition
    print("join-irreducibles:", [A.name(j) for j in sorted(res.rho)])
    print("rho:", {A.name(j): A.name(r) for j, r in res.rho.items()})
    print("J-, J*, J+:", [sorted(A.name(j) for j in s) for s in (part.j_minus, part.j_star, part.j_plus)])
    print("non-loop pairs of R_J:", [f"{a}{b}" for a, b in res.relation.pairs() if a != b])
    print("phi:")
    for j, p in res.phi.items():
        print(f"  {A.name(j)} -> {format_pair(res.universe, p)}")
    print("RS:", ", ".join(format_pair(res.universe, p) for p in res.rs.pairs))
    print("verdicts:", res.verdicts)

    if args.out:
        args.out.mkdir(parents=True, exist_ok=True)
        (args.out / "algebra.dot").write_text(lattice_dot(A.lattice, "A"), encoding="utf-8")
        (args.out / "relation.dot").write_text(relation_dot(res.relation), encoding="utf-8")
        (args.out / "rs.dot").write_text(rs_dot(res.rs), encoding="utf-8")
        print(f"DOT files written to {args.out}")


if __name__ == "__main__":
    main()
