"""Classify skew quadratic Poisson algebras by permuting their matrices."""
from poissonalg import iso_decision

pairs = [([1, 2, 3], [-3, -2, -1]), ([1, 2, 3], [1, 2, 4]), ([2, 5, 5, 7, 7, 3], [-2, 7, 7, 5, 5, 3])]
for a, b in pairs:
    dec = iso_decision(a, b)
    if dec.isomorphic:
        print(f"{a} ~ {b}: sigma = {dec.cycles}, relabeling {dec.relabeling}, Poisson map {dec.poisson_map_ok}")
    else:
        print(f"{a} and {b}: not isomorphic")
