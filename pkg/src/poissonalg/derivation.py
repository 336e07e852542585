"""Derivations and higher derivations of polynomial Poisson algebras.

Derivations are stored by their generator images and extended by the
Leibniz rule.  Higher (Hasse-Schmidt) derivations store finitely many
nonzero images per generator and are extended through the ring map
``x -> sum_n d_n(x) s^n``, which is the product rule in generating-series
form.  Local nilpotency is reported three-valued: certified nilpotent,
certified not nilpotent (with an eigen-cycle witness), or unknown.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from .bracket import Check, PoissonStructure
from .groebner import GroebnerBasis
from .linalg import LinearSystem
from .polycore import DEGREVLEX, Polynomial, Ring, RingMismatchError, monomials_up_to


class UncertifiedError(ValueError):
    pass


def _reducer(relations: Optional[GroebnerBasis]):
    if relations is None:
        return lambda p: p
    return relations.normal_form


class Derivation:
    """A derivation of Q[x_1..x_n] (or of a quotient) given by generator images."""

    def __init__(self, ring: Ring, images: Mapping[Union[str, int], Polynomial], relations: Optional[GroebnerBasis] = None):
        imgs: Dict[int, Polynomial] = {}
        for v, p in images.items():
            i = ring.index(v)
            if not isinstance(p, Polynomial):
                p = ring.const(Fraction(p))
            if p.ring != ring:
                raise RingMismatchError(f"image of {ring.names[i]} not in {ring}")
            if not p.is_zero():
                imgs[i] = p
        self.ring = ring
        self.relations = relations
        self._images = imgs
        self._reduce = _reducer(relations)

    @classmethod
    def partial(cls, ring: Ring, v: Union[str, int]) -> "Derivation":
        return cls(ring, {v: ring.one})

    @classmethod
    def euler(cls, ring: Ring) -> "Derivation":
        return cls(ring, {i: x for i, x in enumerate(ring.gens)})

    def image(self, v: Union[str, int]) -> Polynomial:
        return self._images.get(self.ring.index(v), self.ring.zero)

    @property
    def images(self) -> Dict[str, Polynomial]:
        return {self.ring.names[i]: p for i, p in sorted(self._images.items())}

    def is_zero(self) -> bool:
        return not self._images

    def apply(self, p: Polynomial) -> Polynomial:
        if p.ring != self.ring:
            raise RingMismatchError(f"{p} not in {self.ring}")
        out = self.ring.zero
        for i, img in self._images.items():
            d = p.partial(i)
            if not d.is_zero():
                out = out + img * d
        return self._reduce(out)

    __call__ = apply

    def power(self, p: Polynomial, k: int) -> Polynomial:
        for _ in range(k):
            if p.is_zero():
                break
            p = self.apply(p)
        return p

    def __add__(self, other: "Derivation") -> "Derivation":
        imgs = dict(self.images)
        for n, p in other.images.items():
            imgs[n] = imgs.get(n, self.ring.zero) + p
        return Derivation(self.ring, imgs, self.relations)

    def __mul__(self, c) -> "Derivation":
        return Derivation(self.ring, {n: p * c for n, p in self.images.items()}, self.relations)

    __rmul__ = __mul__

    def __neg__(self) -> "Derivation":
        return self * -1

    def __eq__(self, other) -> bool:
        return isinstance(other, Derivation) and self.ring == other.ring and self._images == other._images

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self._images.items())))

    def __str__(self) -> str:
        if not self._images:
            return "0"
        return ", ".join(f"{n} -> {p}" for n, p in self.images.items())

    def __repr__(self) -> str:
        return f"Derivation({self})"


def apply(delta: Derivation, p: Polynomial) -> Polynomial:
    return delta.apply(p)


def hamiltonian(P: PoissonStructure, f: Polynomial) -> Derivation:
    """The derivation {f, -}."""
    return Derivation(P.ring, {i: P.bracket(f, x) for i, x in enumerate(P.ring.gens)}, P.relations)


def is_poisson_derivation(P: PoissonStructure, delta: Derivation) -> Check:
    """delta({x_i, x_j}) = {delta x_i, x_j} + {x_i, delta x_j} for all i < j.

    Both sides are biderivations once delta is a derivation, so the
    generator check is a proof.  On quotients delta must also preserve the
    relation ideal.
    """
    x = P.ring.gens
    names = P.ring.names
    for i, j in itertools.combinations(range(P.nvars), 2):
        diff = P.reduce(delta(P.lam(i, j)) - P.bracket(delta(x[i]), x[j]) - P.bracket(x[i], delta(x[j])))
        if not diff.is_zero():
            return Check(False, (names[i], names[j]), diff)
    for r in P._relgens():
        v = P.reduce(delta(r))
        if not v.is_zero():
            return Check(False, (str(r),), v)
    return Check(True)


# -- local nilpotency ------------------------------------------------------


@dataclass(frozen=True)
class LNDStatus:
    status: str  # "nilpotent" | "not_nilpotent" | "unknown"
    order: Optional[int] = None
    orders: Dict[str, int] = field(default_factory=dict)
    witness: Optional[tuple] = None

    @property
    def nilpotent(self) -> bool:
        return self.status == "nilpotent"

    def __str__(self) -> str:
        if self.status == "nilpotent":
            return f"nilpotent (order {self.order})"
        if self.status == "not_nilpotent":
            return f"not nilpotent (witness {self.witness})"
        return "unknown"


def _scalar_ratio(p: Polynomial, q: Polynomial) -> Optional[Fraction]:
    """c with p == c*q, or None."""
    if p.is_zero() or q.is_zero() or len(p) != len(q):
        return None
    e, c = q.leading()
    ratio = p.coeff(e) / c
    if ratio and p == q * ratio:
        return ratio
    return None


def lnd_status(delta: Derivation, bound: int) -> LNDStatus:
    """Iterate delta on each generator at most ``bound`` times.

    Nilpotent when every generator is killed (which suffices over Q by the
    Leibniz binomial expansion); not nilpotent when some iterate is a
    nonzero scalar multiple of an earlier nonzero iterate.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    orders: Dict[str, int] = {}
    undecided = False
    for name, x in zip(delta.ring.names, delta.ring.gens):
        seen = [delta._reduce(x)]
        killed = None
        for k in range(1, bound + 1):
            w = delta(seen[-1])
            if w.is_zero():
                killed = k
                break
            for j, prev in enumerate(seen):
                c = _scalar_ratio(w, prev)
                if c is not None:
                    return LNDStatus("not_nilpotent", witness=(name, j, k, c))
            seen.append(w)
        if killed is None:
            undecided = True
        else:
            orders[name] = killed
    if undecided:
        return LNDStatus("unknown", orders=orders)
    return LNDStatus("nilpotent", order=max(orders.values(), default=0), orders=orders)


# -- higher derivations ----------------------------------------------------


class HigherDerivation:
    """A higher derivation d = (d_0 = id, d_1, d_2, ...) given on generators.

    ``images[x]`` lists ``(d_1(x), d_2(x), ..., d_m(x))``; later terms vanish.
    """

    def __init__(
        self,
        ring: Ring,
        images: Mapping[Union[str, int], Sequence[Polynomial]],
        iterative: bool = False,
        relations: Optional[GroebnerBasis] = None,
    ):
        imgs: Dict[int, Tuple[Polynomial, ...]] = {}
        for v, seq in images.items():
            i = ring.index(v)
            seq = [p if isinstance(p, Polynomial) else ring.const(Fraction(p)) for p in seq]
            for p in seq:
                if p.ring != ring:
                    raise RingMismatchError(f"image of {ring.names[i]} not in {ring}")
            while seq and seq[-1].is_zero():
                seq.pop()
            if seq:
                imgs[i] = tuple(seq)
        self.ring = ring
        self.relations = relations
        self.iterative = iterative
        self._images = imgs
        self._reduce = _reducer(relations)

    @property
    def length(self) -> int:
        """Largest n with some d_n(x_i) nonzero."""
        return max((len(s) for s in self._images.values()), default=0)

    def image(self, v: Union[str, int], n: int) -> Polynomial:
        i = self.ring.index(v)
        if n == 0:
            return self.ring.var(i)
        seq = self._images.get(i, ())
        return seq[n - 1] if n <= len(seq) else self.ring.zero

    def series(self, p: Polynomial, nmax: int) -> List[Polynomial]:
        """[d_0 p, d_1 p, ..., d_nmax p]."""
        ring = self.ring
        gens = []
        for i in range(ring.nvars):
            gens.append([self.image(i, n) for n in range(nmax + 1)])
        cache: Dict[Tuple[int, int], List[Polynomial]] = {}

        def gen_power(i: int, k: int) -> List[Polynomial]:
            if k == 0:
                return [ring.one] + [ring.zero] * nmax
            key = (i, k)
            if key not in cache:
                cache[key] = _series_mul(gen_power(i, k - 1), gens[i], nmax)
            return cache[key]

        out = [ring.zero] * (nmax + 1)
        for e, c in p.items():
            s = [ring.one * c] + [ring.zero] * nmax
            for i, k in enumerate(e):
                if k:
                    s = _series_mul(s, gen_power(i, k), nmax)
            out = [a + b for a, b in zip(out, s)]
        return [self._reduce(q) for q in out]

    def apply(self, n: int, p: Polynomial) -> Polynomial:
        if p.ring != self.ring:
            raise RingMismatchError(f"{p} not in {self.ring}")
        if n == 0:
            return self._reduce(p)
        return self.series(p, n)[n]

    __call__ = apply

    def vanishing_index(self, p: Polynomial) -> int:
        """Every d_n with n above this index kills ``p``."""
        if p.is_zero():
            return 0
        return self.length * p.degree()

    def check_iterative(self) -> Check:
        """d_i d_j = C(i+j, i) d_{i+j} on generators, for all i, j >= 1."""
        m = self.length
        for name, x in zip(self.ring.names, self.ring.gens):
            for j in range(1, m + 1):
                w = self.image(name, j)
                top = self.vanishing_index(w)
                ser = self.series(w, max(top, 1))
                for i in range(1, max(top, m) + 1):
                    lhs = ser[i] if i < len(ser) else self.ring.zero
                    rhs = self.image(name, i + j) * math.comb(i + j, i)
                    if self._reduce(lhs - rhs):
                        return Check(False, (name, i, j), lhs - rhs)
        return Check(True)

    def to_derivation(self) -> Derivation:
        return Derivation(self.ring, {i: s[0] for i, s in self._images.items()}, self.relations)

    def __str__(self) -> str:
        parts = []
        for i, seq in sorted(self._images.items()):
            parts.append(f"{self.ring.names[i]} -> [" + ", ".join(str(p) for p in seq) + "]")
        return "; ".join(parts) or "0"

    def __repr__(self) -> str:
        return f"HigherDerivation({self})"


def _series_mul(a: List[Polynomial], b: List[Polynomial], nmax: int) -> List[Polynomial]:
    ring = a[0].ring
    out = []
    for n in range(nmax + 1):
        acc = ring.zero
        for k in range(n + 1):
            if a[k] and b[n - k]:
                acc = acc + a[k] * b[n - k]
        out.append(acc)
    return out


def higher_from_iterative(delta: Derivation, bound: int = 32) -> HigherDerivation:
    """d_i = delta^i / i! for a certified locally nilpotent derivation."""
    status = lnd_status(delta, bound)
    if not status.nilpotent:
        raise UncertifiedError(f"derivation is not certified locally nilpotent: {status}")
    images = {}
    for name, x in zip(delta.ring.names, delta.ring.gens):
        seq = []
        w = x
        for i in range(1, status.orders[name]):
            w = delta(w)
            seq.append(w * Fraction(1, math.factorial(i)))
        images[name] = seq
    return HigherDerivation(delta.ring, images, iterative=True, relations=delta.relations)


def is_higher_poisson(P: PoissonStructure, D: HigherDerivation, nmax: Optional[int] = None) -> Check:
    """d_n({x_i, x_j}) = sum_k {d_k x_i, d_(n-k) x_j} on generator pairs, n <= nmax.

    With the default ``nmax`` every index at which either side can be
    nonzero is covered, so a pass is a proof.
    """
    names = P.ring.names
    m = D.length
    for i, j in itertools.combinations(range(P.nvars), 2):
        lam = P.lam(i, j)
        top = nmax if nmax is not None else max(D.vanishing_index(lam), 2 * m)
        lhs = D.series(lam, top)
        si = [D.image(i, n) for n in range(top + 1)]
        sj = [D.image(j, n) for n in range(top + 1)]
        for n in range(1, top + 1):
            rhs = P.ring.zero
            for k in range(n + 1):
                if si[k] and sj[n - k]:
                    rhs = rhs + P.bracket(si[k], sj[n - k])
            diff = P.reduce(lhs[n] - rhs)
            if not diff.is_zero():
                return Check(False, (names[i], names[j], n), diff)
    for r in P._relgens():
        for n in range(1, D.vanishing_index(r) + 1):
            v = P.reduce(D.apply(n, r))
            if not v.is_zero():
                return Check(False, (str(r), n), v)
    return Check(True)


def dt_higher_derivation(P: PoissonStructure, var: Union[str, int]) -> HigherDerivation:
    """The binomial higher derivation d_n(a t^m) = C(m, n) a t^(m-n) on A[t].

    ``t`` must be central and absent from the bracket table and relations.
    """
    t = P.ring.var(var)
    for x in P.ring.gens:
        if not P.bracket(t, x).is_zero():
            raise ValueError(f"{t} is not Poisson central")
    i = P.ring.index(var)
    for v in list(P.table.values()) + list(P._relgens()):
        if any(e[i] for e in v.terms):
            raise ValueError(f"the bracket table or relations involve {t}; A[t] must be a polynomial extension")
    return HigherDerivation(P.ring, {var: [P.ring.one]}, iterative=True, relations=P.relations)


# -- ring maps and the exponential automorphisms ---------------------------


@dataclass(frozen=True)
class RingMap:
    source: Ring
    target: Ring
    images: Dict[str, Polynomial]

    def __call__(self, p: Polynomial) -> Polynomial:
        if p.ring != self.source:
            raise RingMismatchError(f"{p} not in {self.source}")
        return p.substitute(self.images)

    def compose(self, inner: "RingMap") -> "RingMap":
        """self o inner."""
        if inner.target != self.source:
            raise RingMismatchError("cannot compose: ring mismatch")
        return RingMap(inner.source, self.target, {n: self(p) for n, p in inner.images.items()})

    def is_identity(self) -> bool:
        return self.source == self.target and all(
            p == self.source.var(n) for n, p in self.images.items()
        )

    def __str__(self) -> str:
        return ", ".join(f"{n} -> {p}" for n, p in self.images.items())


def identity_map(ring: Ring) -> RingMap:
    return RingMap(ring, ring, dict(zip(ring.names, ring.gens)))


def automorphism_G(D: HigherDerivation, c=None, t: Optional[str] = None, sign: int = 1) -> RingMap:
    """The map a -> sum_i d_i(a) c^i, or a -> sum_i d_i(a) t^i on A[t].

    Exactly one of ``c`` (specialization) and ``t`` (formal variable name) is
    given.  ``sign=-1`` in formal mode gives the map for -t.
    """
    if (c is None) == (t is None):
        raise ValueError("give exactly one of c or t")
    if not D.iterative:
        raise UncertifiedError("higher derivation is not marked iterative")
    chk = D.check_iterative()
    if not chk:
        raise UncertifiedError(f"higher derivation is not iterative: {chk.witness}")
    ring = D.ring
    m = D.length
    if c is not None:
        c = Fraction(c)
        imgs = {}
        for name in ring.names:
            imgs[name] = sum((D.image(name, i) * c**i for i in range(m + 1)), ring.zero)
        return RingMap(ring, ring, imgs)
    if t in ring:
        raise ValueError(f"{t!r} already names a variable")
    big = ring.extend(t)
    tv = big.var(t) * sign
    imgs = {}
    for name in ring.names:
        imgs[name] = sum((D.image(name, i).embed(big) * tv**i for i in range(m + 1)), big.zero)
    imgs[t] = big.var(t)
    return RingMap(big, big, imgs)


def is_poisson_map(P: PoissonStructure, Q: PoissonStructure, images: Mapping[str, Polynomial]) -> Check:
    """{phi x_i, phi x_j}_Q = phi({x_i, x_j}_P) for all i < j.

    Raises ``ValueError`` when phi does not kill P's relations modulo Q's.
    """
    images = dict(images)
    for p in images.values():
        if p.ring != Q.ring:
            raise RingMismatchError("images must lie in the target ring")
    for r in P._relgens():
        if not Q.reduce(r.substitute(images)).is_zero():
            raise ValueError(f"map is not well defined: relation {r} is not sent to 0")
    names = P.ring.names
    for i, j in itertools.combinations(range(P.nvars), 2):
        lhs = Q.bracket(images[names[i]], images[names[j]])
        rhs = Q.reduce(P.lam(i, j).substitute(images))
        if lhs != rhs:
            return Check(False, (names[i], names[j]), lhs - rhs)
    return Check(True)


def is_poisson_automorphism_G(P: PoissonStructure, G: RingMap) -> Check:
    """Bracket preservation for a map produced by :func:`automorphism_G`."""
    if G.source == P.ring:
        return is_poisson_map(P, P, G.images)
    # formal mode: A[t] with t central
    from .bracket import tensor, trivial

    t = G.source.names[-1]
    Pt = tensor(P, trivial(Ring([t])))
    return is_poisson_map(Pt, Pt, G.images)


# -- searching for Poisson LNDs --------------------------------------------


@dataclass
class LNDSearch:
    image_degree_bound: int
    nilpotency_bound: int
    solution_dimension: int
    basis: List[Derivation]
    certified: List[Derivation]

    def __iter__(self):
        return iter(self.certified)

    def __len__(self) -> int:
        return len(self.certified)


def poisson_derivation_space(P: PoissonStructure, image_degree_bound: int) -> List[Derivation]:
    """Basis of Poisson derivations whose generator images have degree <= bound."""
    ring = P.ring
    mons = list(monomials_up_to(ring.nvars, image_degree_bound))
    if P.relations is not None:
        lms = P.relations.leading_monomials
        mons = [m for m in mons if not any(all(a <= b for a, b in zip(lm, m)) for lm in lms)]
    mons.sort(key=DEGREVLEX.key)
    cols = [(k, m) for k in range(ring.nvars) for m in mons]
    sys = LinearSystem(len(cols))
    x = ring.gens
    pairs = list(itertools.combinations(range(ring.nvars), 2))
    dlam = {(i, j): [P.lam(i, j).partial(k) for k in range(ring.nvars)] for i, j in pairs}
    for col, (k, m) in enumerate(cols):
        mp = ring.monomial(m)
        for i, j in pairs:
            v = mp * dlam[(i, j)][k]
            if k == i:
                v = v - P.bracket(mp, x[j])
            if k == j:
                v = v - P.bracket(x[i], mp)
            for e, c in P.reduce(v).items():
                sys.add(("law", i, j, e), col, c)
        for r_idx, r in enumerate(P._relgens()):
            v = P.reduce(mp * r.partial(k))
            for e, c in v.items():
                sys.add(("rel", r_idx, e), col, c)
    basis = []
    for vec in sys.nullspace():
        imgs: Dict[int, Polynomial] = {}
        for col, c in vec.items():
            k, m = cols[col]
            imgs[k] = imgs.get(k, ring.zero) + ring.monomial(m, c)
        basis.append(Derivation(ring, imgs, P.relations))
    return basis


def find_poisson_lnds(
    P: PoissonStructure,
    image_degree_bound: int,
    nilpotency_bound: int = 16,
    breadth: int = 2,
) -> LNDSearch:
    """Certified locally nilpotent Poisson derivations with bounded image degree.

    The Poisson-derivation space is solved exactly; candidates are its basis
    vectors and their +-1 combinations of up to ``breadth`` members.  Only
    candidates that :func:`lnd_status` certifies as nilpotent are returned.
    """
    if image_degree_bound < 0 or nilpotency_bound < 1:
        raise ValueError("bounds must be non-negative (degree) and positive (nilpotency)")
    basis = poisson_derivation_space(P, image_degree_bound)
    certified: List[Derivation] = []
    seen = set()

    def consider(d: Derivation):
        if d.is_zero() or d in seen:
            return
        seen.add(d)
        if lnd_status(d, nilpotency_bound).nilpotent:
            certified.append(d)

    for d in basis:
        consider(d)
    for size in range(2, breadth + 1):
        for combo in itertools.combinations(range(len(basis)), size):
            for signs in itertools.product((1, -1), repeat=size - 1):
                d = basis[combo[0]]
                for s, idx in zip(signs, combo[1:]):
                    d = d + basis[idx] * s
                consider(d)
    return LNDSearch(image_degree_bound, nilpotency_bound, len(basis), basis, certified)


# -- Makar-Limanov kernels -------------------------------------------------


@dataclass
class MLReport:
    dmax: int
    family: list
    kernel_basis: List[Polynomial]
    rejected: list = field(default_factory=list)
    relative_d: Optional[Polynomial] = None
    note: str = "kernel of an explicit family at bounded degree; evidence, not a proof"


def _certify(P: PoissonStructure, member, bound: int) -> None:
    if isinstance(member, Derivation):
        chk = is_poisson_derivation(P, member)
        if not chk:
            raise UncertifiedError(f"{member} is not a Poisson derivation (fails on {chk.witness})")
        status = lnd_status(member, bound)
        if not status.nilpotent:
            raise UncertifiedError(f"{member} is not certified locally nilpotent: {status}")
    elif isinstance(member, HigherDerivation):
        chk = is_higher_poisson(P, member)
        if not chk:
            raise UncertifiedError(f"{member} is not a higher Poisson derivation (fails on {chk.witness})")
        chk = member.check_iterative()
        if not chk:
            raise UncertifiedError(f"{member} is not iterative (fails on {chk.witness})")
    else:
        raise TypeError(f"unsupported family member {member!r}")


def _kills(member, p: Polynomial) -> bool:
    if isinstance(member, Derivation):
        return member(p).is_zero()
    top = member.vanishing_index(p)
    return all(q.is_zero() for q in member.series(p, top)[1:])


def ml_kernel(
    P: PoissonStructure,
    family: Sequence[Union[Derivation, HigherDerivation]],
    dmax: int,
    relative_d: Optional[Polynomial] = None,
    nilpotency_bound: int = 32,
) -> MLReport:
    """Polynomials of degree <= dmax killed by every certified family member.

    With ``relative_d`` (a central element) only members annihilating it are
    kept; the others are listed in ``rejected``.
    """
    ring = P.ring
    for m in family:
        _certify(P, m, nilpotency_bound)
    kept, rejected = [], []
    if relative_d is not None:
        for x in ring.gens:
            if not P.bracket(relative_d, x).is_zero():
                raise ValueError(f"{relative_d} is not Poisson central")
    for m in family:
        if relative_d is not None and not _kills(m, relative_d):
            rejected.append(m)
        else:
            kept.append(m)
    mons = list(monomials_up_to(ring.nvars, dmax))
    if P.relations is not None:
        lms = P.relations.leading_monomials
        mons = [m for m in mons if not any(all(a <= b for a, b in zip(lm, m)) for lm in lms)]
    mons.sort(key=DEGREVLEX.key)
    sys = LinearSystem(len(mons))
    for col, e in enumerate(mons):
        mp = ring.monomial(e)
        for idx, member in enumerate(kept):
            if isinstance(member, Derivation):
                outs = [(1, member(mp))]
            else:
                top = member.vanishing_index(mp)
                outs = list(enumerate(member.series(mp, top)))[1:]
            for n, v in outs:
                for oe, c in v.items():
                    sys.add((idx, n, oe), col, c)
    basis = [sum((ring.monomial(mons[c], v) for c, v in sorted(vec.items())), ring.zero) for vec in sys.nullspace()]
    return MLReport(dmax, kept, basis, rejected, relative_d)
