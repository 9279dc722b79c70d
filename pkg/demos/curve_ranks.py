"""Divisors on a genus-2 tropical curve (the theta graph).

Baker-Norine ranks, Riemann-Roch for graphs, and the cohomology of punctured
curves: removing k points from one edge leaves k components and a genus-1
core, while the divisor-theoretic ranks r(D) and r(K - D) follow their own,
different law. Both are computed exactly below.
"""

from troprr.curves import (
    TropicalCurveGraph,
    baker_norine_rank,
    complement_cohomology_ranks,
    divisor_degree,
    subdivide_edge,
)


def main():
    theta = TropicalCurveGraph(2, [(0, 1), (0, 1), (0, 1)])
    print(f"theta graph: genus {theta.genus()}, "
          f"canonical divisor {theta.canonical_divisor()}")
    print()
    print(" #D | rank H0 | rank H1 | r(D)+1 | r(K-D)+1")
    print("----+---------+---------+--------+----------")
    for k in (3, 4, 5):
        model, mids = subdivide_edge(theta, 0, k)
        divisor = [0] * model.n
        for m in mids:
            divisor[m] = 1
        h0, h1 = complement_cohomology_ranks(model, divisor)
        kan = model.canonical_divisor()
        r_d = baker_norine_rank(model, divisor)
        r_kd = baker_norine_rank(model, [a - b for a, b in zip(kan, divisor)])
        print(f" {k:2d} | {h0:7d} | {h1:7d} | {r_d + 1:6d} | {r_kd + 1:8d}")
        assert (h0, h1) == (k, 1)
        assert r_d + 1 == k - 1 and r_kd + 1 == 0
        # Riemann-Roch for graphs ties the two columns together.
        assert r_d - r_kd == divisor_degree(divisor) + 1 - model.genus()
    print()
    print("rank H0 = #D grows faster than r(D) + 1 = #D - 1: the complement")
    print("sees every component, the linear system does not.")


if __name__ == "__main__":
    main()
