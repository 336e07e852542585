from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from poissonalg import DEGREVLEX, LEX, Polynomial, Ring, RingMismatchError, variables
from poissonalg.polycore import monomials_of_degree, monomials_up_to
from strategies import polynomials, rings

R, (x, y, z) = variables("x,y,z")
f = x**2 - y * z


def to_sympy(p):
    syms = sympy.symbols(p.ring.names)
    return sympy.Add(*[sympy.Rational(c.numerator, c.denominator) * sympy.Mul(*[s**k for s, k in zip(syms, e)]) for e, c in p.items()])


def from_sympy(expr, ring):
    poly = sympy.Poly(sympy.expand(expr), *sympy.symbols(ring.names))
    return Polynomial(ring, {e: Fraction(int(c.p), int(c.q)) for e, c in poly.terms()})


def test_arithmetic_examples():
    assert (x + y) + (x - y) == 2 * x
    assert (x + y) * (x - y) == x**2 - y**2
    assert f * f == x**4 - 2 * x**2 * y * z + y**2 * z**2


def test_partials():
    assert f.partial("x") == 2 * x
    assert f.partial("z") == -y
    assert (y**3).partial("x").is_zero()


def test_substitute():
    nagata = {"x": x + f * z, "y": y + 2 * f * x + f**2 * z, "z": z}
    assert f.substitute(nagata) == f
    assert f.substitute(dict(zip(R.names, R.gens))) == f
    T, (t,) = variables("t")
    S, (a, b) = variables("x,y")
    assert (a + b).substitute({"x": t, "y": t}) == 2 * t


def test_homogeneous_components():
    assert (x**2 + x).homogeneous_components() == {2: x**2, 1: x}
    assert R.zero.homogeneous_components() == {}
    assert f.homogeneous_components() == {2: f}


def test_zero_has_no_degree():
    assert R.zero.is_zero()
    with pytest.raises(ValueError):
        R.zero.degree()
    with pytest.raises(ValueError):
        R.zero.leading()


def test_ring_mismatch():
    S, (u,) = variables("u")
    with pytest.raises(RingMismatchError):
        x + u
    with pytest.raises(RingMismatchError):
        x * u


def test_formatting():
    assert str(f) == "x^2 - y*z"
    assert str(Fraction(-3, 2) * z**2) == "-3/2*z^2"
    assert str(R.zero) == "0"
    assert str(-x + 1) == "-x + 1"
    assert (x + y**2).format(LEX) == "x + y^2"
    assert (x + y**2).format(DEGREVLEX) == "y^2 + x"


def test_monomial_orders():
    # degrevlex: x*z > y^2 in Q[x,y,z]
    assert DEGREVLEX.key((1, 0, 1)) < DEGREVLEX.key((0, 2, 0))
    assert DEGREVLEX.key((1, 1, 0)) > DEGREVLEX.key((1, 0, 1))
    assert LEX.key((1, 0, 0)) > LEX.key((0, 5, 5))


def test_monomial_enumeration():
    assert len(list(monomials_up_to(3, 8))) == 165
    assert len(list(monomials_of_degree(2, 4))) == 5


def test_ring_validation():
    with pytest.raises(ValueError):
        Ring(["x", "x"])
    with pytest.raises(ValueError):
        Ring(["1x"])
    assert Ring(["x", "x1"]).fresh_name("x") == "x2"


@settings(max_examples=150)
@given(st.data())
def test_ring_axioms(data):
    ring = data.draw(rings())
    p, q, r = (data.draw(polynomials(ring)) for _ in range(3))
    assert (p + q) * r == p * r + q * r
    assert p * (q * r) == (p * q) * r
    assert p * q == q * p
    assert p - p == 0


@settings(max_examples=100)
@given(st.data())
def test_product_matches_sympy(data):
    ring = data.draw(rings())
    p, q = data.draw(polynomials(ring)), data.draw(polynomials(ring))
    assert p * q == from_sympy(to_sympy(p) * to_sympy(q), ring)


@settings(max_examples=100)
@given(st.data())
def test_partial_leibniz_and_sympy(data):
    ring = data.draw(rings())
    p, q = data.draw(polynomials(ring)), data.draw(polynomials(ring))
    v = data.draw(st.sampled_from(ring.names))
    assert (p * q).partial(v) == p.partial(v) * q + p * q.partial(v)
    assert p.partial(v) == from_sympy(sympy.diff(to_sympy(p), sympy.Symbol(v)), ring)


@settings(max_examples=100)
@given(st.data())
def test_substitute_is_homomorphism(data):
    ring = data.draw(rings())
    p, q = data.draw(polynomials(ring)), data.draw(polynomials(ring))
    images = {n: data.draw(polynomials(ring, 2, 2)) for n in ring.names}
    assert (p * q).substitute(images) == p.substitute(images) * q.substitute(images)
    assert (p + q).substitute(images) == p.substitute(images) + q.substitute(images)


@settings(max_examples=100)
@given(st.data())
def test_homogeneous_components_reconstruct(data):
    ring = data.draw(rings())
    p = data.draw(polynomials(ring))
    parts = p.homogeneous_components()
    assert sum(parts.values(), ring.zero) == p
    assert all(q.is_homogeneous() and q.degree() == d for d, q in parts.items())
