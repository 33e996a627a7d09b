"""Tour of the irregularity indices on a few familiar graphs.

Run: python3 demos/01_indices_tour.py
"""

from totirr import (
    collatz_sinogowitz,
    complement,
    degree_variance,
    gen_complete_multipartite,
    gen_cycle,
    gen_path,
    gen_star,
    graph_total_irregularity,
    irregularity,
    zagreb_m1,
    zagreb_m2,
)

samples = {
    "P_6 (path)": gen_path(6),
    "C_6 (cycle)": gen_cycle(6),
    "S_6 (star)": gen_star(6),
    "K_{2,3}": gen_complete_multipartite([2, 3]),
}

print(f"{'graph':14} {'irr_t':>6} {'irr':>5} {'M1':>5} {'M2':>5} {'Var':>8} {'CS':>8}")
for name, g in samples.items():
    print(
        f"{name:14} {graph_total_irregularity(g):6d} {irregularity(g):5d} "
        f"{zagreb_m1(g):5d} {zagreb_m2(g):5d} "
        f"{degree_variance(g):8.4f} {collatz_sinogowitz(g):8.4f}"
    )

print()
p5 = gen_path(5)
print("irr_t is invariant under complement:")
print(f"  irr_t(P_5) = {graph_total_irregularity(p5)}, "
      f"irr_t(complement(P_5)) = {graph_total_irregularity(complement(p5))}")
