"""Build a grid motion of the 3-prism and save it as an animated SVG.

Run with ``python3 demos/02_grid_motion.py [output-dir]``.
"""
import sys
from fractions import Fraction
from pathlib import Path

from flexrig import analyze_motion, catalog, grid_motion, nac_colorings
from flexrig.animation import animation_svg, write_svg


def main(outdir="."):
    g = catalog("ThreePrism")
    delta = nac_colorings(g)[0]
    motion = grid_motion(g, delta)
    print(motion.parametrization("trig"))

    info = analyze_motion(motion)
    print("squared edge lengths:", {e: str(l) for e, l in info.labeling.items()})
    print("nontrivial:", info.nontrivial, " proper:", info.proper)

    # a zig-zag grid: same colouring, skewed base points
    zigzag = ([[0, 0], [Fraction(3, 4), Fraction(1, 2)], [2, 0]], [[0, 0], [1, 0]])
    skew = grid_motion(g, delta, zigzag=zigzag)
    print("\nzig-zag lengths:", {e: str(l) for e, l in analyze_motion(skew).labeling.items()})

    out = Path(outdir)
    write_svg(out / "3-prism_grid.svg", animation_svg(motion, nac=delta))
    write_svg(out / "3-prism_zigzag.svg", animation_svg(skew, nac=delta))
    print("\nwrote", out / "3-prism_grid.svg", "and", out / "3-prism_zigzag.svg")


if __name__ == "__main__":
    main(*sys.argv[1:])
