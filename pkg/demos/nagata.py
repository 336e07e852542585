"""The Nagata automorphism is a Poisson automorphism of the Jacobian bracket of x^2 - y*z."""
from poissonalg import from_potential, is_poisson_map, variables

_, (x, y, z) = variables("x,y,z")
f = x**2 - y * z
J = from_potential(f)
sigma = {"x": x + f * z, "y": y + 2 * f * x + f**2 * z, "z": z}

for v, img in sigma.items():
    print(f"{v} -> {img}")
print("Poisson map:", bool(is_poisson_map(J, J, sigma)))
print("f fixed:    ", f.substitute(sigma) == f)
