"""Q1 has no injective grid, but a spatial embedding still makes it move.

Run with ``python3 demos/03_spatial_motion.py``.
"""
from flexrig import analyze_motion, catalog, fix_edge, has_injective_grid_construction, spatial_motion
from flexrig.movable import find_spatial_embedding


def main():
    q1 = catalog("Q1")
    print("injective grid:", has_injective_grid_construction(q1)[0])

    (c1, c2), emb = find_spatial_embedding(q1)
    print("colouring pair:")
    print("  ", c1)
    print("  ", c2)
    print("vertex positions in space:")
    for v, p in emb.omega.items():
        print(f"   {v}: ({', '.join(str(x) for x in p)})")

    motion = fix_edge(spatial_motion(q1, emb, 3), (5, 6))
    print(motion.parametrization())

    info = analyze_motion(motion)
    print("squared edge lengths:", {e: str(l) for e, l in info.labeling.items()})
    print("nontrivial:", info.nontrivial, " proper:", info.proper)
    print("distance 1-2 squared:", motion.squared_distance(1, 2))


if __name__ == "__main__":
    main()
