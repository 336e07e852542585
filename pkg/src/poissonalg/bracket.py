"""Poisson structures on polynomial rings and their quotients.

A :class:`PoissonStructure` is given by its bracket table on generators; the
bracket of arbitrary polynomials is the biderivation extension

    {f, g} = sum_{i<j} L_ij (df/dx_i dg/dx_j - df/dx_j dg/dx_i).

Quotients carry a reduced Groebner basis of the relation ideal, and every
bracket value is returned as a normal form modulo it.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

from .groebner import GroebnerBasis, buchberger
from .polycore import DEGREVLEX, Polynomial, Ring, RingMismatchError

Pair = Tuple[int, int]


@dataclass(frozen=True)
class Check:
    """Outcome of a verification.  Falsy on failure, with a witness."""

    ok: bool
    witness: Optional[tuple] = None
    value: Optional[Polynomial] = None

    def __bool__(self) -> bool:
        return self.ok


class JacobiError(ValueError):
    def __init__(self, check: Check):
        self.check = check
        a, b, c = check.witness
        super().__init__(f"Jacobi identity fails on ({a}, {b}, {c}): jacobiator = {check.value}")


class NotPoissonIdealError(ValueError):
    def __init__(self, check: Check):
        self.check = check
        g, v = check.witness
        super().__init__(f"not a Poisson ideal: {{{g}, {v}}} = {check.value} is not in the ideal")


class OreExtensionError(ValueError):
    def __init__(self, message: str, check: Check):
        self.check = check
        super().__init__(message)


class PoissonStructure:
    """Polynomial ring (optionally modulo a Poisson ideal) with a bracket table."""

    def __init__(
        self,
        ring: Ring,
        table: Mapping[Pair, Polynomial],
        relations: Optional[GroebnerBasis] = None,
        jacobi_verified: bool = False,
    ):
        clean: Dict[Pair, Polynomial] = {}
        for (i, j), v in table.items():
            if not i < j:
                raise ValueError(f"table keys must satisfy i < j, got {(i, j)}")
            v = _as_poly(ring, v)
            if not v.is_zero():
                clean[(i, j)] = v
        if relations is not None:
            if relations.ring != ring:
                raise RingMismatchError("relations live in a different ring")
            if relations.is_zero_ideal():
                relations = None
        self.ring = ring
        self._table = clean
        self.relations = relations
        self.jacobi_verified = jacobi_verified

    @property
    def table(self) -> Dict[Pair, Polynomial]:
        return dict(self._table)

    @property
    def nvars(self) -> int:
        return self.ring.nvars

    def lam(self, i: Union[int, str], j: Union[int, str]) -> Polynomial:
        """The table entry {x_i, x_j}, with antisymmetry applied."""
        i, j = self.ring.index(i), self.ring.index(j)
        if i == j:
            return self.ring.zero
        if i < j:
            return self._table.get((i, j), self.ring.zero)
        return -self._table.get((j, i), self.ring.zero)

    def reduce(self, p: Polynomial) -> Polynomial:
        if self.relations is None:
            return p
        return self.relations.normal_form(p)

    def bracket(self, f: Polynomial, g: Polynomial) -> Polynomial:
        if f.ring != self.ring or g.ring != self.ring:
            raise RingMismatchError(f"bracket arguments must live in {self.ring}")
        if f.is_constant() or g.is_constant():
            return self.ring.zero
        fd = [f.partial(i) for i in range(self.nvars)]
        gd = [g.partial(i) for i in range(self.nvars)]
        out = self.ring.zero
        for (i, j), lam in self._table.items():
            w = fd[i] * gd[j] - fd[j] * gd[i]
            if not w.is_zero():
                out = out + lam * w
        return self.reduce(out)

    __call__ = bracket

    def is_trivial(self) -> bool:
        return all(self.reduce(v).is_zero() for v in self._table.values())

    def is_graded(self) -> bool:
        """True when all table entries are homogeneous of one common degree.

        Then the bracket shifts total degree uniformly and degree-by-degree
        solves are exact.
        """
        if self.relations is not None:
            return all(g.is_homogeneous() for g in self.relations) and self._uniform_degree()
        return self._uniform_degree()

    def _uniform_degree(self) -> bool:
        degs = set()
        for v in self._table.values():
            if not v.is_homogeneous():
                return False
            degs.add(v.degree())
        return len(degs) <= 1

    def same_table(self, other: "PoissonStructure") -> bool:
        return self.ring == other.ring and self._table == other._table and self._relgens() == other._relgens()

    def _relgens(self):
        return () if self.relations is None else self.relations.generators

    def to_text(self) -> str:
        lines = [f"ring {self.ring}"]
        names = self.ring.names
        for (i, j) in sorted(self._table):
            lines.append(f"bracket {{{names[i]},{names[j]}}} = {self._table[(i, j)]}")
        for r in self._relgens():
            lines.append(f"relation {r}")
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        entries = ", ".join(
            f"{{{self.ring.names[i]},{self.ring.names[j]}}}={v}" for (i, j), v in sorted(self._table.items())
        )
        rel = f" / ({', '.join(map(str, self._relgens()))})" if self.relations is not None else ""
        return f"PoissonStructure({self.ring}{rel}: {entries or 'trivial'})"


def _as_poly(ring: Ring, v) -> Polynomial:
    if isinstance(v, Polynomial):
        if v.ring != ring:
            raise RingMismatchError(f"{v} does not live in {ring}")
        return v
    return ring.const(Fraction(v))


def bracket(P: PoissonStructure, f: Polynomial, g: Polynomial) -> Polynomial:
    return P.bracket(f, g)


def jacobi_check(P: PoissonStructure) -> Check:
    """Evaluate the jacobiator on every generator triple i < j < k.

    The jacobiator of a biderivation bracket is a triderivation, so vanishing
    on generators proves the Jacobi identity everywhere.
    """
    x = P.ring.gens
    for i, j, k in itertools.combinations(range(P.nvars), 3):
        J = P.bracket(x[i], P.lam(j, k)) + P.bracket(x[j], P.lam(k, i)) + P.bracket(x[k], P.lam(i, j))
        J = P.reduce(J)
        if not J.is_zero():
            names = P.ring.names
            return Check(False, (names[i], names[j], names[k]), J)
    return Check(True)


def _verified(P: PoissonStructure) -> PoissonStructure:
    res = jacobi_check(P)
    if not res:
        raise JacobiError(res)
    P.jacobi_verified = True
    return P


def from_table(
    ring: Ring,
    entries: Mapping[Tuple[Union[str, int], Union[str, int]], Union[Polynomial, int, Fraction]],
    relations: Sequence[Polynomial] = (),
    verify: bool = True,
) -> PoissonStructure:
    """Build a structure from ``{(a, b): value}``; unlisted pairs are zero."""
    table: Dict[Pair, Polynomial] = {}
    for (a, b), v in entries.items():
        i, j = ring.index(a), ring.index(b)
        if i == j:
            raise ValueError(f"bracket of {ring.names[i]} with itself must be 0")
        v = _as_poly(ring, v)
        key, v = ((i, j), v) if i < j else ((j, i), -v)
        if key in table:
            raise ValueError(f"duplicate bracket for pair {{{ring.names[key[0]]},{ring.names[key[1]]}}}")
        table[key] = v
    P = PoissonStructure(ring, table)
    if relations:
        P = quotient(P, list(relations))
    return _verified(P) if verify else P


def trivial(ring: Ring) -> PoissonStructure:
    return PoissonStructure(ring, {}, jacobi_verified=True)


def from_potential(f: Polynomial) -> PoissonStructure:
    """Jacobian bracket {x,y} = f_z, {y,z} = f_x, {z,x} = f_y."""
    ring = f.ring
    if ring.nvars != 3:
        raise ValueError(f"a potential needs exactly 3 variables, got {ring.nvars}")
    fx, fy, fz = (f.partial(i) for i in range(3))
    P = PoissonStructure(ring, {(0, 1): fz, (1, 2): fx, (0, 2): -fy})
    return _verified(P)


def skew_quadratic(lam, names: Optional[Sequence[str]] = None) -> PoissonStructure:
    """{x_i, x_j} = lam_ij x_i x_j for a skew-symmetric matrix ``lam``."""
    from .skewiso import SkewMatrix

    lam = SkewMatrix.coerce(lam)
    n = lam.n
    ring = Ring(names or [f"x{i + 1}" for i in range(n)])
    if ring.nvars != n:
        raise ValueError("need one name per matrix row")
    x = ring.gens
    table = {(i, j): x[i] * x[j] * lam[i, j] for i in range(n) for j in range(i + 1, n)}
    return _verified(PoissonStructure(ring, table))


def symplectic(n: int, names: Optional[Sequence[str]] = None) -> PoissonStructure:
    """Q[x1..xn, y1..yn] with {x_i, y_j} = delta_ij, all other pairs zero."""
    if n < 1:
        raise ValueError("n must be positive")
    ring = Ring(names or [f"x{i + 1}" for i in range(n)] + [f"y{i + 1}" for i in range(n)])
    if ring.nvars != 2 * n:
        raise ValueError("need 2n variable names")
    return _verified(PoissonStructure(ring, {(i, n + i): ring.one for i in range(n)}))


def weyl(names: Sequence[str] = ("x", "y")) -> PoissonStructure:
    """The first Poisson Weyl algebra, {x, y} = 1."""
    return symplectic(1, names)


def linear_from_lie(constants, names: Optional[Sequence[str]] = None) -> PoissonStructure:
    """Kirillov-Kostant bracket {x_i, x_j} = sum_k c_ij^k x_k.

    ``constants`` is either an n x n x n nested sequence or a mapping
    ``{(i, j): {k: c}}``.  Raises :class:`JacobiError` when the constants
    violate the Lie Jacobi identity.
    """
    if isinstance(constants, Mapping):
        n = 1 + max(max(i, j, *ks.keys()) for (i, j), ks in constants.items()) if constants else 0
        if names is not None:
            n = len(names)
        c = {(i, j): dict(ks) for (i, j), ks in constants.items()}
    else:
        n = len(constants)
        c = {(i, j): {k: constants[i][j][k] for k in range(n)} for i in range(n) for j in range(n)}
    ring = Ring(names or [f"x{i + 1}" for i in range(n)])
    x = ring.gens

    def entry(i, j):
        return sum((x[k] * Fraction(v) for k, v in c.get((i, j), {}).items()), ring.zero)

    for i in range(n):
        if not entry(i, i).is_zero():
            raise ValueError(f"structure constants c_{i}{i} must vanish")
        for j in range(i + 1, n):
            if (i, j) in c and (j, i) in c and entry(i, j) != -entry(j, i):
                raise ValueError(f"structure constants not antisymmetric at ({i}, {j})")
    table = {}
    for i in range(n):
        for j in range(i + 1, n):
            table[(i, j)] = entry(i, j) if (i, j) in c else -entry(j, i)
    return _verified(PoissonStructure(ring, table))


def tensor(P: PoissonStructure, Q: PoissonStructure) -> PoissonStructure:
    """Tensor product; clashing names from ``Q`` are renamed (x -> x1, ...)."""
    names = list(P.ring.names)
    taken = set(names) | set(Q.ring.names)
    rename = {}
    for n in Q.ring.names:
        new = n
        if new in names:
            k = 1
            while f"{n}{k}" in taken:
                k += 1
            new = f"{n}{k}"
            taken.add(new)
        rename[n] = new
        names.append(new)
    ring = Ring(names)
    qring = Ring([rename[n] for n in Q.ring.names])

    def move(p: Polynomial) -> Polynomial:
        return Polynomial(qring, p.terms).embed(ring)

    table = {}
    for (i, j), v in P.table.items():
        table[(i, j)] = v.embed(ring)
    off = P.nvars
    for (i, j), v in Q.table.items():
        table[(i + off, j + off)] = move(v)
    rels = [r.embed(ring) for r in P._relgens()] + [move(r) for r in Q._relgens()]
    relations = buchberger(rels, DEGREVLEX, ring=ring) if rels else None
    return PoissonStructure(ring, table, relations, jacobi_verified=P.jacobi_verified and Q.jacobi_verified)


def ore_extend(P: PoissonStructure, alpha=None, delta=None, z: str = "z") -> PoissonStructure:
    """Poisson-Ore extension A[z; alpha, delta] with {z, a} = alpha(a) z + delta(a).

    ``alpha`` must be a Poisson derivation and ``delta`` a Poisson
    alpha-derivation; both laws are checked on generator pairs.  ``None``
    stands for the zero derivation.
    """
    from .derivation import Derivation, is_poisson_derivation

    alpha = alpha if alpha is not None else Derivation(P.ring, {})
    delta = delta if delta is not None else Derivation(P.ring, {})
    if z in P.ring:
        raise ValueError(f"variable {z!r} already in {P.ring}")
    chk = is_poisson_derivation(P, alpha)
    if not chk:
        raise OreExtensionError(f"alpha is not a Poisson derivation (fails on {chk.witness})", chk)
    chk = alpha_derivation_check(P, alpha, delta)
    if not chk:
        raise OreExtensionError(f"delta is not a Poisson alpha-derivation (fails on {chk.witness})", chk)
    ring = P.ring.extend(z)
    zv = ring.var(z)
    zi = ring.nvars - 1
    table = {k: v.embed(ring) for k, v in P.table.items()}
    for i in range(P.nvars):
        xi = P.ring.gens[i]
        val = alpha(xi).embed(ring) * zv + delta(xi).embed(ring)
        # stored as {x_i, z} = -{z, x_i}
        table[(i, zi)] = -val
    rels = [r.embed(ring) for r in P._relgens()]
    relations = buchberger(rels, DEGREVLEX, ring=ring) if rels else None
    return _verified(PoissonStructure(ring, table, relations))


def alpha_derivation_check(P: PoissonStructure, alpha, delta) -> Check:
    """delta({a,b}) = {delta a, b} + {a, delta b} + alpha(a) delta(b) - delta(a) alpha(b) on generators."""
    x = P.ring.gens
    names = P.ring.names
    for i, j in itertools.combinations(range(P.nvars), 2):
        lhs = delta(P.lam(i, j))
        rhs = (
            P.bracket(delta(x[i]), x[j])
            + P.bracket(x[i], delta(x[j]))
            + alpha(x[i]) * delta(x[j])
            - delta(x[i]) * alpha(x[j])
        )
        diff = P.reduce(lhs - rhs)
        if not diff.is_zero():
            return Check(False, (names[i], names[j]), diff)
    if P.relations is not None:
        for r in P.relations:
            if not P.reduce(delta(r)).is_zero():
                return Check(False, (str(r),), delta(r))
    return Check(True)


@dataclass(frozen=True)
class PoissonIdeal:
    generators: Tuple[Polynomial, ...]
    gb: GroebnerBasis


def is_poisson_ideal(P: PoissonStructure, gens: Iterable[Polynomial]) -> Check:
    """{g_k, x_i} in the ideal for all generators g_k and variables x_i."""
    gens = list(gens)
    gb = buchberger(gens + list(P._relgens()), DEGREVLEX, ring=P.ring)
    for g in gens:
        for name, x in zip(P.ring.names, P.ring.gens):
            v = P.bracket(g, x)
            r = gb.normal_form(v)
            if not r.is_zero():
                return Check(False, (str(g), name), v)
    return Check(True)


def poisson_ideal(P: PoissonStructure, gens: Iterable[Polynomial]) -> PoissonIdeal:
    gens = tuple(gens)
    chk = is_poisson_ideal(P, gens)
    if not chk:
        raise NotPoissonIdealError(chk)
    return PoissonIdeal(gens, buchberger(list(gens) + list(P._relgens()), DEGREVLEX, ring=P.ring))


def quotient(P: PoissonStructure, ideal: Union[PoissonIdeal, Sequence[Polynomial]]) -> PoissonStructure:
    """A / I with the induced bracket; elements are represented by normal forms."""
    if not isinstance(ideal, PoissonIdeal):
        ideal = poisson_ideal(P, ideal)
    gb = ideal.gb
    if gb.is_zero_ideal():
        return PoissonStructure(P.ring, P.table, P.relations, P.jacobi_verified)
    Q = PoissonStructure(P.ring, P.table, gb)
    if P.jacobi_verified:
        Q.jacobi_verified = True
    return Q


def poisson_points(P: PoissonStructure) -> GroebnerBasis:
    """Groebner basis of (all table entries) + relations.

    Its zero set is the set of points whose maximal ideal is a Poisson ideal.
    """
    gens = list(P.table.values()) + list(P._relgens())
    return buchberger(gens, DEGREVLEX, ring=P.ring)


def relabel(P: PoissonStructure, names: Sequence[str]) -> PoissonStructure:
    """Same structure on renamed variables (positional)."""
    ring = Ring(names)
    if ring.nvars != P.nvars:
        raise ValueError("wrong number of names")
    move = lambda p: Polynomial(ring, p.terms)  # noqa: E731
    rels = [move(r) for r in P._relgens()]
    relations = buchberger(rels, DEGREVLEX, ring=ring) if rels else None
    return PoissonStructure(ring, {k: move(v) for k, v in P.table.items()}, relations, P.jacobi_verified)
