"""A gallery of Delzant polygons and the three-way count.

For each polygon Q in the catalogue we draw a random smooth tropical curve
with Newton polygon Q, compactify it in the toric surface of Q, and compare:
the intersection-ring number deg((D - K).D)/2 + 1, the Euler characteristic
of the complement computed by iterated Euler calculus, and the raw count of
lattice points of Q (with Pick's formula as a fourth, classical witness).
"""

from troprr.instances import delzant_catalogue, verify_polygon


def main():
    print("polygon".ljust(44), "rr  chi  #pts  pick")
    print("-" * 68)
    for i, q in enumerate(delzant_catalogue()[:12]):
        rec = verify_polygon(q, seed=500 + i)
        label = str(list(q.vertices))
        print(label.ljust(44),
              f"{rec.rr:3d} {rec.chi:4d} {rec.lattice_count:5d} "
              f"{rec.pick_count:5d}")
        assert rec.rr == rec.chi == rec.lattice_count == rec.pick_count
    print("\nFour independent computations, one column of numbers each row.")


if __name__ == "__main__":
    main()
