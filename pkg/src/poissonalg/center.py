"""Bounded-degree Poisson centers.

z is central iff {z, x_i} = 0 for every generator, because {z, -} is a
derivation.  The degree <= dmax part of the center is the null space of
z -> ({z, x_1}, ..., {z, x_n}) on coefficient vectors.  That is evidence
about the center, never a description of all of it.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence

from .bracket import PoissonStructure
from .linalg import LinearSystem
from .polycore import DEGREVLEX, Exps, Polynomial, RingMismatchError, monomials_of_degree, monomials_up_to

DEFAULT_MAX_DEGREE = 8


@dataclass(frozen=True)
class CenterReport:
    max_degree: int
    basis: List[Polynomial]
    complete_up_to: int

    def __iter__(self):
        return iter(self.basis)

    def __len__(self) -> int:
        return len(self.basis)


def is_central(P: PoissonStructure, z: Polynomial) -> bool:
    if z.ring != P.ring:
        raise RingMismatchError(f"{z} is not in {P.ring}")
    return all(P.bracket(z, x).is_zero() for x in P.ring.gens)


def _standard(P: PoissonStructure, mons: Sequence[Exps]) -> List[Exps]:
    if P.relations is None:
        return list(mons)
    lms = P.relations.leading_monomials
    return [m for m in mons if not any(all(a <= b for a, b in zip(lm, m)) for lm in lms)]


def _solve(P: PoissonStructure, mons: List[Exps]) -> List[Polynomial]:
    # ascending columns: each null vector gets a distinct leading monomial with coefficient 1
    mons = sorted(mons, key=DEGREVLEX.key)
    ring = P.ring
    sys = LinearSystem(len(mons))
    for col, e in enumerate(mons):
        m = ring.monomial(e)
        for i, x in enumerate(ring.gens):
            for oe, c in P.bracket(m, x).items():
                sys.add((i, oe), col, c)
    out = []
    for vec in sys.nullspace():
        out.append(Polynomial(ring, {mons[c]: v for c, v in vec.items()}))
    return out


def center_basis(P: PoissonStructure, dmax: int = DEFAULT_MAX_DEGREE) -> CenterReport:
    """Basis of the central elements of degree <= dmax.

    Solved one degree at a time when the bracket table is homogeneous of a
    single degree, otherwise on the whole degree <= dmax space.  Basis
    elements are monic with distinct leading monomials, listed in increasing
    order.
    """
    if dmax < 0:
        raise ValueError("dmax must be non-negative")
    n = P.nvars
    if P.is_graded():
        basis: List[Polynomial] = []
        for d in range(dmax + 1):
            basis.extend(_solve(P, _standard(P, list(monomials_of_degree(n, d)))))
    else:
        basis = _solve(P, _standard(P, list(monomials_up_to(n, dmax))))
    basis.sort(key=lambda p: DEGREVLEX.key(p.leading()[0]))
    return CenterReport(dmax, basis, dmax)


def in_span(basis: Sequence[Polynomial], p: Polynomial) -> bool:
    """Whether ``p`` is a Q-linear combination of ``basis``."""
    if p.is_zero():
        return True
    cols = list(basis) + [p]
    sys = LinearSystem(len(cols))
    for col, q in enumerate(cols):
        for e, c in q.items():
            sys.add(e, col, c)
    last = len(basis)
    return any(v.get(last) for v in sys.nullspace())
