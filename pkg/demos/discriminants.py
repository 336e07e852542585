"""Discriminants of the Poisson-point property over a central subalgebra."""
from poissonalg import Ring, discriminant_poisson_points, from_potential, from_table, variables, weyl

R = Ring(["x", "y", "t"])
H = from_table(R, {("x", "y"): R.var("t") ** 2})
_, (x, y, z) = variables("x,y,z")
f = x**2 - y * z
J = from_potential(f)
W = weyl()

for label, P, g in [("H over Q[t]", H, R.var("t")), ("Jacobian over Q[f]", J, f), ("Weyl over Q", W, W.ring.one)]:
    rep = discriminant_poisson_points(P, g)
    print(label)
    print("  critical polynomial:", rep.critical_polynomial)
    print("  discriminant:       ", rep.discriminant)
    print("  Poisson points:     ", rep.locus_note)
