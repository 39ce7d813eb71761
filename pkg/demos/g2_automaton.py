"""Walk the G2 reduced-word automaton and list the affine Grassmannian words it accepts."""

from affinepm import build_affine_data, build_gamma_rho
from affinepm.gamma import automaton_accepts, enumerate_reduced, reduced_word_counts_oracle

G2 = build_affine_data("G2")
G = build_gamma_rho(G2)

print("Gamma_rho(G2):", len(G), "vertices,", len(G.edges), "arrows")
for e in G.edges:
    if e.type == 0:
        print(f"  {G.vertices[e.src]:>7} -> {G.vertices[e.dst]:<7} weight {G.fmt(e.weight)}")

# t_{omega_2} = s2 s1 s2 s1 s2 s0, read from the right
word = [0, 2, 1, 2, 1, 2]
print("t_omega2 accepted:", automaton_accepts(G2, word))
print("s0 s0 accepted:   ", automaton_accepts(G2, [0, 0]))

counts = enumerate_reduced(G2, 12)
print("accepted words by length:", counts)
print("BFS oracle agrees:", counts == reduced_word_counts_oracle(G2, 12))
