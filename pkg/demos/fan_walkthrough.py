"""Walk through the fan, G-graphs and character classification for two small groups."""

import argparse

from ghilb import analyze
from ghilb.fan import fan_statistics


def show(spec):
    result = analyze(spec, degrees=True)
    fan = result.fan
    s = fan_statistics(fan)
    print(f"== {spec}")
    print(f"triangles {s.triangle_count}, interior edges {s.interior_edge_count}, "
          f"boundary edges {s.boundary_edge_count}")
    for t in fan.triangles:
        verts = " ".join("(" + ",".join(str(c) for c in v.coords) + ")" for v in t.vertices)
        print(f"  {verts}: {', '.join(t.ggraph.monomials())}")
    for rec in result.b0.records:
        values = ", ".join(str(v) for v in rec.values)
        print(f"  {rec.character.label}: p(n) = {values}, degree {rec.homological_degree}")
    print(f"h0 = {{{', '.join(c.label for c in result.b0.h0)}}}, B0 = {result.b0.b0}")
    for note in result.notes:
        print(f"note: {note}")
    print()


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("groups", nargs="*", default=["1/5(1,1,3)", "1/2(1,0,1);1/2(0,1,1)"])
    for spec in parser.parse_args().groups:
        show(spec)


if __name__ == "__main__":
    main()
