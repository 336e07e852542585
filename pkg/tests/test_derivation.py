import math

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from poissonalg import (
    Derivation,
    HigherDerivation,
    Ring,
    UncertifiedError,
    automorphism_G,
    center_basis,
    dt_higher_derivation,
    find_poisson_lnds,
    from_potential,
    from_table,
    hamiltonian,
    higher_from_iterative,
    identity_map,
    is_higher_poisson,
    is_poisson_derivation,
    is_poisson_map,
    lnd_status,
    ml_kernel,
    poisson_derivation_space,
    skew_quadratic,
    tensor,
    trivial,
    variables,
    weyl,
)
from poissonalg.center import in_span
from poissonalg.derivation import is_poisson_automorphism_G
from strategies import polynomials, small_rationals

Q2, (x, y) = variables("x,y")
QXY = from_table(Q2, {("x", "y"): 3 * x * y})
YDX = Derivation(Q2, {"x": y})
AT = tensor(weyl(["a", "b"]), trivial(Ring(["t"])))
T = AT.ring.var("t")


def test_apply_examples():
    assert YDX(x**2) == 2 * x * y
    a, b, t = AT.ring.gens
    dt = Derivation.partial(AT.ring, "t")
    assert dt(a * t**4) == 4 * a * t**3
    E = Derivation.euler(AT.ring)
    p = a**2 * t + b**3 - a * b * t
    assert E(p) == 3 * p


def test_poisson_derivation_examples():
    chk = is_poisson_derivation(QXY, YDX)
    assert not chk and chk.witness == ("x", "y")
    assert is_poisson_derivation(AT, Derivation.partial(AT.ring, "t"))
    S = skew_quadratic([1, 2, 3])
    assert is_poisson_derivation(S, Derivation.euler(S.ring))


def test_lnd_status_examples():
    st_t = lnd_status(Derivation.partial(AT.ring, "t"), 4)
    assert st_t.nilpotent and st_t.orders["t"] == 2
    assert lnd_status(YDX, 4).nilpotent
    e = lnd_status(Derivation.euler(Q2), 4)
    assert e.status == "not_nilpotent" and e.witness[0] == "x"
    # a 2-cycle up to scalar: x -> y -> -x
    rot = lnd_status(Derivation(Q2, {"x": y, "y": -x}), 6)
    assert rot.status == "not_nilpotent"
    # x -> x^2 grows forever: undecided within the bound
    assert lnd_status(Derivation(Q2, {"x": x**2}), 5).status == "unknown"
    with pytest.raises(ValueError):
        lnd_status(YDX, 0)


def test_higher_from_iterative_examples():
    D = higher_from_iterative(Derivation.partial(AT.ring, "t"))
    for m in range(6):
        for n in range(m + 2):
            assert D(n, T**m) == math.comb(m, n) * T ** max(m - n, 0) * (1 if n <= m else 0)
    Z = higher_from_iterative(Derivation(Q2, {}))
    assert Z.length == 0 and Z(1, x * y).is_zero()
    Y = higher_from_iterative(YDX)
    assert Y.image("x", 1) == y and Y.image("x", 2).is_zero()
    with pytest.raises(UncertifiedError):
        higher_from_iterative(Derivation.euler(Q2))


def test_higher_poisson_examples():
    D = dt_higher_derivation(AT, "t")
    assert is_higher_poisson(AT, D) and D.check_iterative()
    Y = HigherDerivation(Q2, {"x": [y]})
    assert not is_higher_poisson(QXY, Y)
    h = hamiltonian(AT, AT.ring.var("a"))  # {a, -} = d/db
    assert lnd_status(h, 4).nilpotent
    assert is_higher_poisson(AT, higher_from_iterative(h))


def test_dt_higher_derivation_examples():
    D = dt_higher_derivation(AT, "t")
    a, b, t = AT.ring.gens
    assert D(3, a * t**5) == 10 * a * t**2
    assert D(2, a**3 * b).is_zero()
    assert D(1, D(1, t**5)) == 20 * t**3 == math.comb(2, 1) * D(2, t**5)
    with pytest.raises(ValueError):
        dt_higher_derivation(AT, "a")
    Hr = Ring(["x", "y", "t"])
    Hh = from_table(Hr, {("x", "y"): Hr.var("t") ** 2})
    with pytest.raises(ValueError):
        dt_higher_derivation(Hh, "t")


def test_automorphism_examples():
    D = dt_higher_derivation(AT, "t")
    G = automorphism_G(D, t="s")
    s = G.target.var("s")
    assert G.images["t"] == G.target.var("t") + s
    assert G.images["a"] == G.target.var("a")
    assert automorphism_G(D, c=0).is_identity()
    # d central and killed by the derivation is fixed
    d = AT.ring.var("a") ** 2 + AT.ring.var("b")
    assert automorphism_G(D, c=5)(d) == d
    assert is_poisson_automorphism_G(AT, G)
    with pytest.raises(ValueError):
        automorphism_G(D)
    with pytest.raises(UncertifiedError):
        automorphism_G(HigherDerivation(Q2, {"x": [y]}), c=1)
    with pytest.raises(UncertifiedError):
        automorphism_G(HigherDerivation(Q2, {"x": [y, y]}, iterative=True), c=1)


def test_formal_inverse_up_to_ten():
    D = dt_higher_derivation(AT, "t")
    G = automorphism_G(D, t="s")
    Gi = automorphism_G(D, t="s", sign=-1)
    comp = G.compose(Gi)
    assert comp.is_identity()
    tt = comp.source.var("t")
    assert comp(tt**10) == tt**10
    Y = higher_from_iterative(YDX)
    comp = automorphism_G(Y, t="s").compose(automorphism_G(Y, t="s", sign=-1))
    assert comp.is_identity()
    xx = comp.source.var("x")
    assert comp(xx**10) == xx**10


def test_alternating_binomial_sums():
    for n in range(1, 11):
        assert sum((-1) ** i * math.comb(n, i) for i in range(n + 1)) == 0


def test_vandermonde():
    for p in range(13):
        for q in range(13):
            for n in range(13):
                assert math.comb(p + q, n) == sum(math.comb(p, i) * math.comb(q, n - i) for i in range(n + 1))


def test_poisson_map_examples():
    R, (x3, y3, z3) = variables("x,y,z")
    f = x3**2 - y3 * z3
    J = from_potential(f)
    nagata = {"x": x3 + f * z3, "y": y3 + 2 * f * x3 + f**2 * z3, "z": z3}
    assert is_poisson_map(J, J, nagata)
    assert is_poisson_map(J, J, identity_map(R).images)
    W = weyl()
    wx, wy = W.ring.gens
    assert not is_poisson_map(W, W, {"x": wy, "y": wx})


def test_poisson_map_rejects_ill_defined():
    from poissonalg import quotient

    Hr = Ring(["x", "y", "t"])
    Hh = from_table(Hr, {("x", "y"): Hr.var("t") ** 2})
    H1 = quotient(Hh, [Hr.var("t") - 1])
    with pytest.raises(ValueError):
        is_poisson_map(H1, Hh, dict(zip(Hr.names, Hr.gens)))


def test_find_lnds_examples():
    search = find_poisson_lnds(trivial(Q2), 1)
    found = set(search.certified)
    for d in (Derivation.partial(Q2, "x"), Derivation.partial(Q2, "y"), YDX, Derivation(Q2, {"y": x})):
        assert d in found
    assert find_poisson_lnds(QXY, 2).certified == []
    W = weyl()
    found = set(find_poisson_lnds(W, 0).certified)
    assert Derivation.partial(W.ring, "x") in found and Derivation.partial(W.ring, "y") in found


def test_qxy_solution_dimension_against_sympy():
    # unknown coefficients of delta(x), delta(y) over monomials of degree <= 2
    sx, sy = sympy.symbols("x y")
    mons = [sx**i * sy**j for i in range(3) for j in range(3 - i)]
    a = sympy.symbols(f"a0:{len(mons)}")
    b = sympy.symbols(f"b0:{len(mons)}")
    dx = sum(c * m for c, m in zip(a, mons))
    dy = sum(c * m for c, m in zip(b, mons))
    q = 3

    def br(f, g):
        return q * sx * sy * (sympy.diff(f, sx) * sympy.diff(g, sy) - sympy.diff(f, sy) * sympy.diff(g, sx))

    lam = q * sx * sy
    law = sympy.expand(sympy.diff(lam, sx) * dx + sympy.diff(lam, sy) * dy - br(dx, sy) - br(sx, dy))
    eqs = sympy.Poly(law, sx, sy).coeffs()
    M = sympy.Matrix([[sympy.diff(e, v) for v in a + b] for e in eqs])
    dim = len(a + b) - M.rank()
    assert dim == 4
    assert find_poisson_lnds(QXY, 2).solution_dimension == dim
    assert len(poisson_derivation_space(QXY, 2)) == dim


def test_ml_kernel_examples():
    rep = ml_kernel(trivial(Q2), [Derivation.partial(Q2, "x"), Derivation.partial(Q2, "y")], 3)
    assert rep.kernel_basis == [Q2.one]
    rep = ml_kernel(QXY, find_poisson_lnds(QXY, 2).certified, 4)
    assert len(rep.kernel_basis) == 15
    W = weyl()
    wx, wy = W.ring.gens
    rep = ml_kernel(W, [hamiltonian(W, wx), hamiltonian(W, wy)], 3)
    assert rep.kernel_basis == [W.ring.one]
    with pytest.raises(UncertifiedError):
        ml_kernel(QXY, [YDX], 2)
    with pytest.raises(UncertifiedError):
        ml_kernel(trivial(Q2), [Derivation.euler(Q2)], 2)


def test_ml_kernel_relative():
    a, b, t = AT.ring.gens
    dt = Derivation.partial(AT.ring, "t")
    db = hamiltonian(AT, a)
    rep = ml_kernel(AT, [dt, db], 2, relative_d=t)
    assert rep.rejected == [dt] and rep.family == [db]
    assert all(db(p).is_zero() for p in rep.kernel_basis)
    D = dt_higher_derivation(AT, "t")
    rep = ml_kernel(AT, [D], 2)
    assert all(not any(e[2] for e in p.terms) for p in rep.kernel_basis)


def test_ml_kernel_antitone():
    a, b, t = AT.ring.gens
    fam = [Derivation.partial(AT.ring, "t"), hamiltonian(AT, a), hamiltonian(AT, b)]
    prev = ml_kernel(AT, [], 3).kernel_basis
    for k in range(1, len(fam) + 1):
        cur = ml_kernel(AT, fam[:k], 3).kernel_basis
        assert all(in_span(prev, p) for p in cur)
        assert len(cur) <= len(prev)
        prev = cur


@settings(max_examples=50)
@given(st.data())
def test_poisson_derivation_law_on_random_pairs(data):
    S = skew_quadratic([1, 2, 3])
    E = Derivation.euler(S.ring)
    for _ in range(1):
        p, q = data.draw(polynomials(S.ring, 3, 3)), data.draw(polynomials(S.ring, 3, 3))
        assert E(S.bracket(p, q)) == S.bracket(E(p), q) + S.bracket(p, E(q))


@settings(max_examples=50)
@given(st.data())
def test_apply_leibniz(data):
    R = Ring(["x", "y", "z"])
    d = Derivation(R, {n: data.draw(polynomials(R, 2, 2)) for n in R.names})
    p, q = data.draw(polynomials(R)), data.draw(polynomials(R))
    assert d(p * q) == d(p) * q + p * d(q)


@settings(max_examples=30)
@given(st.data())
def test_hamiltonians_give_higher_poisson_automorphisms(data):
    a, b, t = AT.ring.gens
    c = data.draw(small_rationals)
    gen = data.draw(st.sampled_from([a, b, a + 2 * t, b * t]))
    h = hamiltonian(AT, gen)
    assert is_poisson_derivation(AT, h)
    status = lnd_status(h, 6)
    assert status.nilpotent
    D = higher_from_iterative(h)
    assert is_higher_poisson(AT, D)
    G = automorphism_G(D, c=c)
    assert is_poisson_map(AT, AT, G.images)
    p = data.draw(polynomials(AT.ring, 3, 3))
    q = data.draw(polynomials(AT.ring, 3, 3))
    assert G(p * q) == G(p) * G(q)


@settings(max_examples=30)
@given(st.data())
def test_dt_annihilates_base_and_fixes_center(data):
    a, b, t = AT.ring.gens
    D = dt_higher_derivation(AT, "t")
    p = data.draw(polynomials(AT.ring, 3, 3)).substitute({"a": a, "b": b, "t": AT.ring.zero})
    assert all(D(n, p).is_zero() for n in range(1, 5))
    for z in center_basis(AT, 3).basis:
        if "t" not in z.variables():
            assert automorphism_G(D, c=2)(z) == z
