"""Constant distance closure and the combined movability verdict.

Run with ``python3 demos/04_constant_distance_closure.py``.
"""
from flexrig import catalog, constant_distance_closure, movability_status


def show(name):
    g = catalog(name)
    trace = constant_distance_closure(g)
    print(f"{name}:")
    for k, stage in enumerate(trace.stages):
        print(f"   stage {k}: adds {sorted(stage.upairs)}")
    print("   closure complete:", trace.complete)
    print("   verdict:", movability_status(g))


def main():
    for name in ("Diamond", "C4", "ThreePrism", "Q1"):
        show(name)


if __name__ == "__main__":
    main()
