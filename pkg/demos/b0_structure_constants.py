"""Certify Gamma_B0 in types A2 and G2 and print a few structure constants."""

import time

from affinepm import build_affine_data, build_gamma_B0, minimal_polynomial_degree, multiplicative_basis_at

for label in ("A2", "G2"):
    data = build_affine_data(label)
    G = build_gamma_B0(data)
    start = time.perf_counter()
    cert = multiplicative_basis_at(G, 0)
    print(f"{label}: B0 = {G.vertices}")
    print(f"  verdict {cert.verdict} via {cert.method}, deg mu = {minimal_polynomial_degree(G)}, "
          f"{time.perf_counter() - start:.2f}s")
    shown = 0
    for (j, k, i), c in sorted(cert.structure_constants.items()):
        if j and k and shown < 6:
            print(f"  xi_{G.vertices[j]} * xi_{G.vertices[k]} contains ({G.fmt(c)}) xi_{G.vertices[i]}")
            shown += 1
