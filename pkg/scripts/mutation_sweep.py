"""Perturb each structure constant of a builtin and list which axioms notice.

Entries that survive every validator are printed as "valid deformation".
"""
import argparse
from fractions import Fraction

from rinehart.axioms import validate_all
from rinehart.instances import BUILTIN_NAMES, builtin
from rinehart.mutation import entries, mutate


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("names", nargs="*", default=["B1", "B3"], choices=BUILTIN_NAMES)
    ap.add_argument("--values", default="2,0", help="comma separated multipliers; 0 deletes the entry")
    args = ap.parse_args()
    factors = [Fraction(v) for v in args.values.split(",")]
    for name in args.names:
        P = builtin(name)
        Ln, An = P.L.basis.names, P.A.basis.names
        survivors = 0
        for table, key, k, c in entries(P):
            out_names = An if table in ("product", "rho") else Ln
            for fac in factors:
                Q = mutate(P, table, key, k, c * fac)
                failing = [getattr(r, "axiom_id", getattr(r, "name", "?")) for r in validate_all(Q) if not r.passed]
                label = f"{name} {table} {key}->{out_names[k]} x{fac}"
                if failing:
                    print(f"{label}: {', '.join(failing)}")
                else:
                    survivors += 1
                    print(f"{label}: valid deformation")
        print(f"{name}: {survivors} surviving mutations")


if __name__ == "__main__":
    main()
