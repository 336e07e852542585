"""Hypothesis strategies shared by the property suites."""
from fractions import Fraction

from hypothesis import strategies as st

from poissonalg import Polynomial, Ring, from_potential, skew_quadratic, symplectic, linear_from_lie, tensor, trivial
from poissonalg.bracket import PoissonStructure

NAMES = ("x", "y", "z", "u")

small_rationals = st.builds(
    Fraction,
    st.integers(min_value=-5, max_value=5),
    st.integers(min_value=1, max_value=4),
)

big_rationals = st.builds(
    Fraction,
    st.integers(min_value=-(2**63), max_value=2**63),
    st.integers(min_value=1, max_value=2**63),
)


@st.composite
def exponents(draw, nvars, max_degree):
    e = []
    left = max_degree
    for _ in range(nvars):
        k = draw(st.integers(min_value=0, max_value=left))
        e.append(k)
        left -= k
    return tuple(e)


@st.composite
def polynomials(draw, ring, max_degree=3, max_terms=4, coeffs=small_rationals):
    n = draw(st.integers(min_value=0, max_value=max_terms))
    terms = {}
    for _ in range(n):
        terms[draw(exponents(ring.nvars, max_degree))] = draw(coeffs)
    return Polynomial(ring, terms)


@st.composite
def rings(draw, min_vars=1, max_vars=4):
    n = draw(st.integers(min_value=min_vars, max_value=max_vars))
    return Ring(NAMES[:n])


@st.composite
def bracket_tables(draw, ring, max_degree=2):
    """Arbitrary antisymmetric tables; these need not satisfy Jacobi."""
    table = {}
    for i in range(ring.nvars):
        for j in range(i + 1, ring.nvars):
            table[(i, j)] = draw(polynomials(ring, max_degree, 3))
    return PoissonStructure(ring, table)


# sl2 with x = h, y = e, z = f
SL2 = {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}}
HEISENBERG = {(0, 1): {2: 1}}


@st.composite
def poisson_structures(draw):
    """Structures that satisfy the Jacobi identity by construction."""
    kind = draw(st.sampled_from(["potential", "skew", "symplectic", "lie", "tensor"]))
    if kind == "potential":
        ring = Ring(("x", "y", "z"))
        return from_potential(draw(polynomials(ring, 3, 4)))
    if kind == "skew":
        n = draw(st.integers(min_value=2, max_value=4))
        vals = draw(st.lists(small_rationals, min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
        return skew_quadratic(vals, NAMES[:n])
    if kind == "symplectic":
        return symplectic(draw(st.integers(min_value=1, max_value=2)))
    if kind == "lie":
        return linear_from_lie(draw(st.sampled_from([SL2, HEISENBERG])), ["x", "y", "z"])
    left = symplectic(1, ["x", "y"])
    right = draw(st.sampled_from([trivial(Ring(["t"])), symplectic(1, ["u", "v"])]))
    return tensor(left, right)
