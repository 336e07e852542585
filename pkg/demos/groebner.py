"""Groebner bases, elimination and a singular-locus computation."""
from poissonalg import LEX, buchberger, eliminate, is_member, singular_locus, variables

R, (x, y, z) = variables("x,y,z")
gens = [x**2 + y**2 + z**2 - 1, x - y * z, y - z**2]
gb = buchberger(gens, LEX)
print("lex basis:")
for g in gb:
    print("  ", g)
print("eliminated to Q[z]:", [str(p) for p in eliminate(gens, ["z"])])
print("x*y - z^5 in the ideal:", is_member(x * y - z**5, gens))

s = singular_locus(x**3 + y**3 + z**3)
print("Fermat cubic: isolated singularity", s.isolated, "with Milnor number", s.milnor_dimension)
