"""Write SVG and TikZ pictures of a few fans into a directory."""

import argparse
from pathlib import Path

from ghilb.fan import build_fan
from ghilb.lattice import build_lattice_context
from ghilb.render import emit_svg, emit_tikz

GROUPS = {"c5": "1/5(1,1,3)", "c6": "1/6(1,1,4)", "c7": "1/7(1,1,5)", "klein": "1/2(1,0,1);1/2(0,1,1)"}


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("outdir", type=Path)
    parser.add_argument("--mode", default="h0-classes", choices=["none", "wall-degrees", "h0-classes"])
    args = parser.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)
    for name, spec in GROUPS.items():
        fan = build_fan(build_lattice_context(spec))
        (args.outdir / f"{name}.svg").write_bytes(emit_svg(fan, args.mode))
        (args.outdir / f"{name}.tex").write_text(emit_tikz(fan, args.mode))
        print(f"{name}: {spec}")


if __name__ == "__main__":
    main()
