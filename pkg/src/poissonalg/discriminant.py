"""Discriminants for the property "A/(g - c) has no Poisson rational point".

A point of the quotient A/(g - c) is a Poisson point when every bracket-table
entry vanishes there.  Eliminating the ring variables from
(table entries) + relations + (w - g) leaves a principal ideal (p(w)) of
Q[w] whose roots are exactly the values c for which A/(g - c) has such a
point, over the algebraic closure.  The discriminant is d = p_sf(g) with
p_sf the squarefree part of p, so irrational values never need to be named.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Union

from .bracket import PoissonStructure, poisson_points
from .center import is_central
from .groebner import GroebnerBasis, buchberger, eliminate
from .polycore import DEGREVLEX, Polynomial, Ring

PROPERTY = "poisson-rational-point locus"


# -- univariate helpers on dense coefficient lists (lowest degree first) ---


def _trim(a: List[Fraction]) -> List[Fraction]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _divmod(a: List[Fraction], b: List[Fraction]):
    a = list(a)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b) and a:
        c = a[-1] / lead
        k = len(a) - len(b)
        q[k] = c
        for i, v in enumerate(b):
            a[i + k] -= c * v
        _trim(a)
    return _trim(q), a


def _gcd(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _divmod(a, b)[1]
    if a:
        a = [c / a[-1] for c in a]
    return a


def _to_dense(p: Polynomial) -> List[Fraction]:
    if p.ring.nvars != 1:
        raise ValueError(f"{p} is not univariate")
    if p.is_zero():
        return []
    out = [Fraction(0)] * (p.degree() + 1)
    for (k,), c in p.items():
        out[k] = c
    return out


def _from_dense(ring: Ring, a: Sequence[Fraction]) -> Polynomial:
    return Polynomial(ring, {(k,): c for k, c in enumerate(a) if c})


def univariate_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic gcd of two polynomials in one variable."""
    if p.ring != q.ring:
        raise ValueError("ring mismatch")
    return _from_dense(p.ring, _gcd(_to_dense(p), _to_dense(q)))


def squarefree_part(p: Polynomial) -> Polynomial:
    """Monic p / gcd(p, p')."""
    if p.is_zero():
        raise ValueError("the zero polynomial has no squarefree part")
    a = _to_dense(p)
    g = _gcd(a, _to_dense(p.partial(0)))
    q, r = _divmod(a, g) if g else (a, [])
    assert not r
    return _from_dense(p.ring, q).monic()


# -- discriminant ---------------------------------------------------------


@dataclass(frozen=True)
class DiscriminantReport:
    central_element: Polynomial
    critical_polynomial: Optional[Polynomial]
    discriminant: Optional[Polynomial]
    locus_note: str
    property: str = PROPERTY

    def to_dict(self) -> dict:
        return {
            "property": self.property,
            "central_element": str(self.central_element),
            "critical_polynomial": None if self.critical_polynomial is None else str(self.critical_polynomial),
            "discriminant": None if self.discriminant is None else str(self.discriminant),
            "locus_note": self.locus_note,
        }


def _locus_note(points: GroebnerBasis) -> str:
    if points.is_unit_ideal():
        return "empty: no Poisson rational points over the algebraic closure"
    if points.is_zero_dimensional():
        return f"finite: Poisson points form a zero-dimensional scheme of length {points.quotient_dimension()}"
    return "positive-dimensional: Poisson points form a variety of positive dimension"


def discriminant_poisson_points(P: PoissonStructure, g: Polynomial, slack: str = "w") -> DiscriminantReport:
    """Discriminant of the Poisson-point property over the central subalgebra Q[g]."""
    if not is_central(P, g):
        raise ValueError(f"{g} is not Poisson central")
    ring = P.ring
    w = ring.fresh_name(slack)
    big = ring.extend(w)
    gens = [v.embed(big) for v in P.table.values()]
    gens += [r.embed(big) for r in P._relgens()]
    gens.append(big.var(w) - g.embed(big))
    elim = eliminate(gens, [w], ring=big)
    note = _locus_note(poisson_points(P))
    if not elim:
        return DiscriminantReport(
            g, None, None, note + "; every value of the central element is critical, so no discriminant exists"
        )
    wring = Ring([w])
    p = elim[0].restrict(wring)
    for q in elim[1:]:
        p = univariate_gcd(p, q.restrict(wring))
    if p.is_constant():
        return DiscriminantReport(g, wring.one, ring.one, note)
    p = squarefree_part(p)
    d = p.substitute({w: g})
    return DiscriminantReport(g, p, d, note)


# -- singular loci and effectiveness -------------------------------------


@dataclass(frozen=True)
class SingularLocus:
    basis: GroebnerBasis
    isolated: bool
    milnor_dimension: Optional[int]


def singular_locus(f: Polynomial) -> SingularLocus:
    """Groebner basis of the Jacobian ideal (f_x, f_y, f_z) and its dimension if finite."""
    if f.ring.nvars != 3:
        raise ValueError("singular_locus expects a polynomial in three variables")
    gb = buchberger([f.partial(i) for i in range(3)], DEGREVLEX, ring=f.ring)
    iso = gb.is_zero_dimensional()
    return SingularLocus(gb, iso, gb.quotient_dimension() if iso else None)


@dataclass(frozen=True)
class EffectiveCertified:
    rule: str
    leading: Optional[tuple] = None


@dataclass(frozen=True)
class Unknown:
    reason: str


def _cwlt(b, a) -> bool:
    return all(x <= y for x, y in zip(b, a)) and b != a


def effectiveness_certificate(d: Polynomial, ring_kind: Optional[str] = None) -> Union[EffectiveCertified, Unknown]:
    """Sufficient criteria only; never reports "not effective".

    Univariate: every nonzero element.  Multivariate: d = c*x^a + (terms
    component-wise below x^a) with every a_i > 0.
    """
    if d.is_zero():
        raise ValueError("d must be nonzero")
    kind = ring_kind or ("univariate" if d.ring.nvars == 1 else "multivariate")
    if kind not in ("univariate", "multivariate"):
        raise ValueError(f"unknown ring kind {kind!r}")
    if kind == "univariate":
        if d.ring.nvars != 1:
            raise ValueError("univariate rule needs a one-variable ring")
        return EffectiveCertified("univariate")
    for a in d.terms:
        if all(a) and all(_cwlt(b, a) for b in d.terms if b != a):
            return EffectiveCertified("cwlt", a)
    return Unknown("no monomial with all exponents positive dominates the others component-wise")
