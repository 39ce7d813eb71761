"""Gamma_gamma, its particle model and the key-tableau orbit for gamma = omega_1 + omega_2 in A3."""

from affinepm import build_affine_data, build_gamma_gamma, typed_isomorphic
from affinepm.particles import (
    color_word_of,
    forget_weights,
    key_orbit_graph,
    particle_isomorphism,
    windowA_of,
)

A3 = build_affine_data("A3")
Jp = [1, 2]
G = build_gamma_gamma(A3, Jp)
for w, label in zip(G.meta["elements"], G.vertices):
    print(f"{label:>6}  window {windowA_of(A3, w)!s:<12} colours {color_word_of(A3, Jp, w)}")

print("particle model isomorphic:", not particle_isomorphism(A3, Jp, G))
K = key_orbit_graph(A3, Jp)
print("key tableaux:", ", ".join(K.vertices))
print("key orbit graph isomorphic to unweighted Gamma:", typed_isomorphic(forget_weights(G), K)[0])
