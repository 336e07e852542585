"""Poisson derivations, locally nilpotent search and exponential automorphisms."""
from poissonalg import (
    Derivation,
    Ring,
    automorphism_G,
    dt_higher_derivation,
    find_poisson_lnds,
    from_table,
    is_higher_poisson,
    is_poisson_derivation,
    lnd_status,
    tensor,
    trivial,
    variables,
    weyl,
)

R, (x, y) = variables("x,y")
Q = from_table(R, {("x", "y"): 3 * x * y})
d = Derivation(R, {"x": y})
print("d = x -> y on {x,y} = 3xy")
print("  Poisson derivation:", bool(is_poisson_derivation(Q, d)))
print("  nilpotency:        ", lnd_status(d, 8).status)

search = find_poisson_lnds(Q, 2)
print("Poisson derivations with images of degree <= 2:", search.solution_dimension, "dimensional")
for b in search.basis:
    print("  ", b)
print("certified locally nilpotent ones:", search.certified or "none")

AT = tensor(weyl(), trivial(Ring(["t"])))
D = dt_higher_derivation(AT, "t")
print("binomial higher derivation of d/dt is Poisson:", bool(is_higher_poisson(AT, D)))
G = automorphism_G(D, t="s")
for v in AT.ring.names:
    print(f"  G_s({v}) = {G(G.source.var(v))}")
print("G_s o G_-s = id:", G.compose(automorphism_G(D, t="s", sign=-1)).is_identity())
