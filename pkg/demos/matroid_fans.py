"""Bergman fans, beta invariants, and CSM cycles of small matroids.

The Bergman fan of U_{2,4} is the tropical line in 3-space with a 2-valent
vertex structure; its CSM cycles carry weights built from beta invariants of
flag minors. The script prints the weights, checks balancing, and walks the
support identity: cutting the tropical hyperplane by itself steps down the
chain of uniform matroids one rank at a time.
"""

from math import comb

from troprr.cycles import check_balancing, power_tower
from troprr.hypersurface import TropicalPolynomial, tropical_hypersurface
from troprr.matroids import bergman_fan, beta, csm_cycle, uniform_matroid


def main():
    m = uniform_matroid(2, 4)
    fan = bergman_fan(m)
    print(f"U(2,4): beta = {beta(m)}, Bergman fan has "
          f"{len(fan.weights)} maximal cones, "
          f"balanced = {check_balancing(fan).ok}")
    for k in (1, 0):
        ck = csm_cycle(m, k)
        ws = sorted(ck.weights.values())
        print(f"  csm_{k}: {len(ck.weights)} cells, weights {ws}, "
              f"balanced = {check_balancing(ck).ok}")
    print()
    print("beta(U(r,n)) follows the Pascal recursion:")
    for n in range(2, 8):
        row = [beta(uniform_matroid(r, n)) for r in range(1, n)]
        assert row == [comb(n - 2, r - 1) for r in range(1, n)]
        print(f"  n={n}: {row}")
    print()
    r = 3
    terms = {tuple(0 for _ in range(r)): 0}
    for i in range(r):
        terms[tuple(1 if j == i else 0 for j in range(r))] = 0
    f = TropicalPolynomial(r, terms)
    tower = power_tower(f, tropical_hypersurface(f))
    print(f"powers of the tropical hyperplane in R^{r}:")
    for j, layer in enumerate(tower.layers):
        print(f"  power {j + 1}: {len(layer.weights)} cones "
              f"(= C({r + 1},{j + 2}) = {comb(r + 1, j + 2)}), support = "
              f"Bergman fan of U({r - j},{r + 1})")
        assert len(layer.weights) == comb(r + 1, j + 2)


if __name__ == "__main__":
    main()
