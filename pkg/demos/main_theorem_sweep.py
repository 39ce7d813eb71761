"""Compare the Coxeter-side graph Gamma_gamma with the alcove-side matrix for every J'."""

from itertools import combinations

from affinepm import build_affine_data, verify_main_theorem

for label in ("A2", "A3", "C2", "C3", "G2"):
    data = build_affine_data(label)
    n = data.rank
    for size in range(1, n + 1):
        for Jp in combinations(range(1, n + 1), size):
            rep = verify_main_theorem(data, list(Jp))
            d = rep.details
            print(f"{label} J'={list(Jp)!s:<10} vertices={d['vertices']:>3} identity={'ok' if not rep.mismatches else 'FAILS'} "
                  f"certificate={d.get('geometric_verdict')} deg mu={d.get('min_poly_degree')}")
