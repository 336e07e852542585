"""Bounded-degree centers of a few small Poisson algebras."""
from poissonalg import Ring, center_basis, from_potential, from_table, skew_quadratic, variables, weyl


def show(label, P, dmax):
    basis = center_basis(P, dmax).basis
    print(f"{label:<28} degree <= {dmax}: {', '.join(map(str, basis))}")


show("Weyl {x,y} = 1", weyl(), 6)

R = Ring(["x", "y", "t"])
show("homogenized Weyl {x,y} = t^2", from_table(R, {("x", "y"): R.var("t") ** 2}), 4)

_, (x, y, z) = variables("x,y,z")
show("Jacobian of x^2 - y*z", from_potential(x**2 - y * z), 4)

show("skew quadratic (1, 1, 1)", skew_quadratic([1, 1, 1]), 6)
