"""Walk through the NAC-colorings of a few small graphs.

Run with ``python3 demos/01_nac_colorings.py``.
"""
from flexrig import catalog, has_nac_coloring, isomorphism_classes, nac_colorings, triangle_components


def main():
    c4 = catalog("C4")
    print("The 4-cycle:", c4)
    for c in nac_colorings(c4):
        print("  ", c)

    # colourings related by a symmetry of the square share a letter
    print("\nUp to automorphisms:")
    for k in isomorphism_classes(c4, nac_colorings(c4)):
        print("  ", ", ".join(m.name for m in k.members))

    # triangles force their edges to share a colour, so the diamond has no split
    diamond = catalog("Diamond")
    print("\nDiamond triangle components:", [list(c) for c in triangle_components(diamond).components])
    print("Diamond has a NAC-coloring:", has_nac_coloring(diamond))

    prism = catalog("ThreePrism")
    print("\n3-prism colourings:", len(nac_colorings(prism)))
    print("  ", nac_colorings(prism)[0])


if __name__ == "__main__":
    main()
