"""Buchberger's algorithm and the ideal operations built on it.

Reduced Groebner bases back ideal membership, elimination, and the
zero-dimensionality / quotient-dimension tests.  Pair selection is the normal
strategy (smallest lcm first) with the coprime and chain criteria.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .polycore import (
    DEGREVLEX,
    Exps,
    MonomialOrder,
    Polynomial,
    Ring,
    RingMismatchError,
    elimination,
)

__all__ = [
    "GroebnerBasis",
    "buchberger",
    "normal_form",
    "is_member",
    "eliminate",
    "is_zero_dimensional",
    "quotient_dimension",
    "NotZeroDimensionalError",
]


class NotZeroDimensionalError(ValueError):
    pass


def _divides(a: Exps, b: Exps) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Exps, b: Exps) -> Exps:
    return tuple(max(x, y) for x, y in zip(a, b))


def _coprime(a: Exps, b: Exps) -> bool:
    return not any(x and y for x, y in zip(a, b))


def _reduce(p: Dict[Exps, Fraction], basis: Sequence[Tuple[Exps, Dict[Exps, Fraction]]], key) -> Dict[Exps, Fraction]:
    """Full reduction of ``p`` by monic polynomials given as (lead, terms)."""
    p = dict(p)
    rem: Dict[Exps, Fraction] = {}
    while p:
        lead = max(p, key=key)
        c = p[lead]
        for lm, g in basis:
            if _divides(lm, lead):
                shift = tuple(x - y for x, y in zip(lead, lm))
                for e, v in g.items():
                    ne = tuple(a + b for a, b in zip(e, shift))
                    s = p.get(ne, 0) - c * v
                    if s:
                        p[ne] = s
                    else:
                        p.pop(ne, None)
                break
        else:
            rem[lead] = c
            del p[lead]
    return rem


def _monic(p: Dict[Exps, Fraction], key) -> Tuple[Exps, Dict[Exps, Fraction]]:
    lead = max(p, key=key)
    inv = 1 / p[lead]
    return lead, {e: c * inv for e, c in p.items()}


class GroebnerBasis:
    """A reduced Groebner basis for a fixed ring and monomial order."""

    def __init__(self, ring: Ring, order: MonomialOrder, generators: Sequence[Polynomial], reduced: bool = True):
        self.ring = ring
        self.order = order
        self.generators: Tuple[Polynomial, ...] = tuple(generators)
        self.reduced = reduced
        key = order.key
        self._basis = [(g.leading(order)[0], g.terms) for g in self.generators]
        self._key = key

    def __iter__(self):
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroebnerBasis)
            and self.ring == other.ring
            and self.order == other.order
            and self.generators == other.generators
        )

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators)
        return f"GroebnerBasis({self.ring}, {self.order}, [{gens}])"

    @property
    def leading_monomials(self) -> List[Exps]:
        return [lm for lm, _ in self._basis]

    def is_zero_ideal(self) -> bool:
        return not self.generators

    def is_unit_ideal(self) -> bool:
        return any(not any(lm) for lm in self.leading_monomials)

    def normal_form(self, p: Polynomial) -> Polynomial:
        if p.ring != self.ring:
            raise RingMismatchError(f"ring mismatch: {p.ring} vs {self.ring}")
        if not self._basis or p.is_zero():
            return p
        return Polynomial._make(self.ring, _reduce(p.terms, self._basis, self._key))

    def contains(self, p: Polynomial) -> bool:
        return self.normal_form(p).is_zero()

    __contains__ = contains

    def is_zero_dimensional(self) -> bool:
        if self.is_unit_ideal():
            return True
        found = [False] * self.ring.nvars
        for lm in self.leading_monomials:
            support = [i for i, x in enumerate(lm) if x]
            if len(support) == 1:
                found[support[0]] = True
        return all(found)

    def standard_monomials(self) -> List[Exps]:
        """Monomials outside the leading-term ideal (finite only if zero-dimensional)."""
        if not self.is_zero_dimensional():
            raise NotZeroDimensionalError("the ideal is not zero-dimensional")
        if self.is_unit_ideal():
            return []
        n = self.ring.nvars
        bound = [None] * n
        for lm in self.leading_monomials:
            support = [i for i, x in enumerate(lm) if x]
            if len(support) == 1:
                i = support[0]
                bound[i] = lm[i] if bound[i] is None else min(bound[i], lm[i])
        out: List[Exps] = []

        def walk(prefix: Tuple[int, ...]):
            if len(prefix) == n:
                if not any(_divides(lm, prefix) for lm in self.leading_monomials):
                    out.append(prefix)
                return
            for k in range(bound[len(prefix)]):
                walk(prefix + (k,))

        walk(())
        return sorted(out, key=self._key)

    def quotient_dimension(self) -> int:
        return len(self.standard_monomials())


def buchberger(gens: Iterable[Polynomial], order: MonomialOrder = DEGREVLEX, ring: Optional[Ring] = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``."""
    gens = list(gens)
    if ring is None:
        if not gens:
            raise ValueError("need a ring for an empty generator list")
        ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise RingMismatchError(f"generator {g} not in {ring}")
    key = order.key
    basis: List[Tuple[Exps, Dict[Exps, Fraction]]] = []
    for g in gens:
        if not g.is_zero():
            basis.append(_monic(g.terms, key))
    if not basis:
        return GroebnerBasis(ring, order, [])

    pairs = set()
    for j in range(len(basis)):
        for i in range(j):
            pairs.add((i, j))

    def pair_lcm(pr):
        return _lcm(basis[pr[0]][0], basis[pr[1]][0])

    while pairs:
        pr = min(pairs, key=lambda q: (key(pair_lcm(q)), q))
        pairs.remove(pr)
        i, j = pr
        lmi, fi = basis[i]
        lmj, fj = basis[j]
        if _coprime(lmi, lmj):
            continue
        lcm = _lcm(lmi, lmj)
        if _chain_criterion(i, j, lcm, basis, pairs):
            continue
        s: Dict[Exps, Fraction] = {}
        for lm, f, sign in ((lmi, fi, 1), (lmj, fj, -1)):
            shift = tuple(a - b for a, b in zip(lcm, lm))
            for e, c in f.items():
                ne = tuple(a + b for a, b in zip(e, shift))
                v = s.get(ne, 0) + sign * c
                if v:
                    s[ne] = v
                else:
                    s.pop(ne, None)
        h = _reduce(s, basis, key)
        if h:
            basis.append(_monic(h, key))
            k = len(basis) - 1
            for m in range(k):
                pairs.add((m, k))
    return GroebnerBasis(ring, order, _interreduce(basis, ring, key), reduced=True)


def _chain_criterion(i, j, lcm, basis, pairs) -> bool:
    for k, (lmk, _) in enumerate(basis):
        if k in (i, j) or not _divides(lmk, lcm):
            continue
        if (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs:
            return True
    return False


def _interreduce(basis, ring: Ring, key) -> List[Polynomial]:
    # drop generators whose leading monomial is divisible by another's
    basis = sorted(basis, key=lambda b: key(b[0]))
    minimal = []
    for lm, f in basis:
        if not any(_divides(m, lm) for m, _ in minimal):
            minimal.append((lm, f))
    out = []
    for idx, (lm, f) in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1 :]
        tail = {e: c for e, c in f.items() if e != lm}
        r = _reduce(tail, others, key)
        r[lm] = Fraction(1)
        out.append(Polynomial._make(ring, r))
    return out


def normal_form(p: Polynomial, gb: GroebnerBasis) -> Polynomial:
    return gb.normal_form(p)


def is_member(p: Polynomial, gens: Sequence[Polynomial], order: MonomialOrder = DEGREVLEX) -> bool:
    return buchberger(gens, order, ring=p.ring).contains(p)


def is_zero_dimensional(gb: GroebnerBasis) -> bool:
    return gb.is_zero_dimensional()


def quotient_dimension(gb: GroebnerBasis) -> int:
    return gb.quotient_dimension()


def eliminate(gens: Sequence[Polynomial], keep: Iterable[str], ring: Optional[Ring] = None) -> List[Polynomial]:
    """Generators of the ideal ``(gens)`` intersected with Q[keep].

    The result lives in the original ring and only involves ``keep``.
    """
    gens = list(gens)
    ring = ring or gens[0].ring
    wanted = set(keep)
    for n in sorted(wanted - set(ring.names)):
        raise KeyError(f"unknown variable {n!r}")
    keep = [n for n in ring.names if n in wanted]
    drop = [n for n in ring.names if n not in keep]
    if not drop:
        raise ValueError("eliminate needs at least one variable to remove")
    work = Ring(drop + keep)
    gb = buchberger([g.embed(work) for g in gens], elimination(len(drop)), ring=work)
    nd = len(drop)
    out = []
    for g in gb.generators:
        lm = g.leading(gb.order)[0]
        if not any(lm[:nd]):
            # block order: a drop-free lead forces every term to be drop-free
            out.append(g.embed(ring))
    return out
