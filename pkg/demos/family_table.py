"""Tabulate B0 for the families 1/r(1,1,r-2) next to the closed forms."""

import argparse
from fractions import Fraction

from ghilb.fan import build_fan
from ghilb.ktheory import b0_report
from ghilb.lattice import build_lattice_context


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--r-max", type=int, default=13)
    args = parser.parse_args()
    print(f"{'r':>3} {'B0':>6} {'closed form':>12}")
    for r in range(4, args.r_max + 1):
        k = r // 2
        form = Fraction(k - 1, 2 * k - 1) if r % 2 == 0 else Fraction(k - 1, 2 * k)
        rep = b0_report(build_fan(build_lattice_context(f"1/{r}(1,1,{r - 2})")), degrees=False)
        flag = "" if rep.b0 == form else "  differs"
        print(f"{r:>3} {str(rep.b0):>6} {str(form):>12}{flag}")


if __name__ == "__main__":
    main()
