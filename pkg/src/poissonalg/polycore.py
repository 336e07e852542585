"""Sparse multivariate polynomials over the rationals.

A :class:`Ring` is an ordered tuple of variable names.  A :class:`Polynomial`
is an immutable map from exponent tuples to nonzero ``Fraction`` coefficients.
Everything downstream (brackets, Groebner bases, derivations) is built from
these two types.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple, Union

Exps = Tuple[int, ...]
Scalar = Union[int, Fraction]


class RingMismatchError(ValueError):
    """Raised when two operands live in different rings."""


def _is_identifier(name: str) -> bool:
    return name.isidentifier() and name != "Q"


class Ring:
    """An ordered list of distinct variable names; the ambient ring Q[names]."""

    __slots__ = ("names", "_index")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        for n in names:
            if not isinstance(n, str) or not _is_identifier(n):
                raise ValueError(f"invalid variable name {n!r}")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        self.names = names
        self._index = {n: i for i, n in enumerate(names)}

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: Union[str, int]) -> int:
        if isinstance(name, int):
            if not 0 <= name < self.nvars:
                raise KeyError(f"variable index {name} out of range")
            return name
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r} in ring {self}") from None

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def var(self, name: Union[str, int]) -> "Polynomial":
        i = self.index(name)
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial._make(self, {tuple(e): Fraction(1)})

    @property
    def gens(self) -> Tuple["Polynomial", ...]:
        return tuple(self.var(i) for i in range(self.nvars))

    def const(self, c: Scalar) -> "Polynomial":
        c = Fraction(c)
        if c == 0:
            return Polynomial._make(self, {})
        return Polynomial._make(self, {(0,) * self.nvars: c})

    @property
    def zero(self) -> "Polynomial":
        return Polynomial._make(self, {})

    @property
    def one(self) -> "Polynomial":
        return self.const(1)

    def monomial(self, exps: Sequence[int], coeff: Scalar = 1) -> "Polynomial":
        return Polynomial(self, {tuple(exps): coeff})

    def parse(self, src: str) -> "Polynomial":
        from .parsing import parse_polynomial

        return parse_polynomial(src, self)

    def extend(self, *names: str) -> "Ring":
        return Ring(self.names + tuple(names))

    def fresh_name(self, base: str) -> str:
        """Return ``base`` or ``base1``, ``base2``... avoiding existing names."""
        if base not in self:
            return base
        k = 1
        while f"{base}{k}" in self:
            k += 1
        return f"{base}{k}"

    def __eq__(self, other) -> bool:
        return isinstance(other, Ring) and self.names == other.names

    def __hash__(self) -> int:
        return hash(("Ring", self.names))

    def __repr__(self) -> str:
        return f"Ring({list(self.names)!r})"

    def __str__(self) -> str:
        return "Q[" + ",".join(self.names) + "]"


def monomials_up_to(nvars: int, dmax: int) -> Iterator[Exps]:
    """All exponent vectors of total degree <= dmax, by increasing degree."""
    for d in range(dmax + 1):
        yield from monomials_of_degree(nvars, d)


def monomials_of_degree(nvars: int, d: int) -> Iterator[Exps]:
    if nvars == 0:
        if d == 0:
            yield ()
        return
    if nvars == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(nvars - 1, d - first):
            yield (first,) + rest


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order on exponent vectors.

    ``kind`` is ``"lex"``, ``"degrevlex"`` or ``"elim"``.  For ``"elim"``
    the first ``block`` variables form a block that is compared first
    (degrevlex inside each block), which eliminates them.
    """

    kind: str = "degrevlex"
    block: int = 0

    def __post_init__(self):
        if self.kind not in ("lex", "degrevlex", "elim"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "elim" and self.block < 1:
            raise ValueError("elimination order needs block >= 1")

    def key(self, e: Exps):
        """Sort key: larger key means larger monomial."""
        if self.kind == "lex":
            return e
        if self.kind == "degrevlex":
            return (sum(e), tuple(-x for x in reversed(e)))
        head, tail = e[: self.block], e[self.block :]
        return (
            sum(head),
            tuple(-x for x in reversed(head)),
            sum(tail),
            tuple(-x for x in reversed(tail)),
        )

    def __str__(self) -> str:
        return f"elim({self.block})" if self.kind == "elim" else self.kind


LEX = MonomialOrder("lex")
DEGREVLEX = MonomialOrder("degrevlex")


def elimination(block: int) -> MonomialOrder:
    return MonomialOrder("elim", block)


def _coerce(ring: Ring, other) -> "Polynomial":
    if isinstance(other, Polynomial):
        if other.ring != ring:
            raise RingMismatchError(f"ring mismatch: {ring} vs {other.ring}")
        return other
    if isinstance(other, (int, Rational)):
        return ring.const(Fraction(other))
    return NotImplemented


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[Sequence[int], Scalar] = ()):
        clean: Dict[Exps, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            e = tuple(int(x) for x in e)
            if len(e) != ring.nvars or any(x < 0 for x in e):
                raise ValueError(f"bad exponent vector {e} for {ring}")
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, Fraction(0)) + c
                if not clean[e]:
                    del clean[e]
        self.ring = ring
        self._terms = clean
        self._hash = None

    @classmethod
    def _make(cls, ring: Ring, terms: Dict[Exps, Fraction]) -> "Polynomial":
        # trusted constructor: terms already normalized
        p = object.__new__(cls)
        p.ring = ring
        p._terms = terms
        p._hash = None
        return p

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> Dict[Exps, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get((0,) * self.ring.nvars, Fraction(0))

    def coeff(self, exps: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def degree(self) -> int:
        """Total degree.  The zero polynomial has no degree."""
        if not self._terms:
            raise ValueError("the zero polynomial has no degree")
        return max(sum(e) for e in self._terms)

    def degree_in(self, v: Union[str, int]) -> int:
        i = self.ring.index(v)
        if not self._terms:
            raise ValueError("the zero polynomial has no degree")
        return max(e[i] for e in self._terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def variables(self) -> Tuple[str, ...]:
        used = [any(e[i] for e in self._terms) for i in range(self.ring.nvars)]
        return tuple(n for n, u in zip(self.ring.names, used) if u)

    def sorted_terms(self, order: MonomialOrder = DEGREVLEX):
        """Terms in descending order."""
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def leading(self, order: MonomialOrder = DEGREVLEX) -> Tuple[Exps, Fraction]:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading term")
        e = max(self._terms, key=order.key)
        return e, self._terms[e]

    def homogeneous_components(self) -> Dict[int, "Polynomial"]:
        parts: Dict[int, Dict[Exps, Fraction]] = {}
        for e, c in self._terms.items():
            parts.setdefault(sum(e), {})[e] = c
        return {d: Polynomial._make(self.ring, parts[d]) for d in sorted(parts)}

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = _coerce(self.ring, other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial._make(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._make(self.ring, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(self.ring, other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(self.ring, other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, Polynomial):
            c = Fraction(other)
            if not c:
                return self.ring.zero
            return Polynomial._make(self.ring, {e: v * c for e, v in self._terms.items()})
        other = _coerce(self.ring, other)
        if other is NotImplemented:
            return other
        out: Dict[Exps, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Polynomial._make(self.ring, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def mul_term(self, exps: Exps, c: Fraction) -> "Polynomial":
        return Polynomial._make(
            self.ring,
            {tuple(a + b for a, b in zip(e, exps)): v * c for e, v in self._terms.items()},
        )

    # -- calculus and substitution ---------------------------------------

    def partial(self, v: Union[str, int]) -> "Polynomial":
        i = self.ring.index(v)
        out = {}
        for e, c in self._terms.items():
            k = e[i]
            if k:
                out[e[:i] + (k - 1,) + e[i + 1 :]] = c * k
        return Polynomial._make(self.ring, out)

    def substitute(self, images: Mapping[str, "Polynomial"]) -> "Polynomial":
        """Simultaneously replace every ring variable by its image.

        All images must share one target ring; every variable needs an image.
        """
        missing = [n for n in self.ring.names if n not in images]
        if missing:
            raise KeyError(f"no image for variables {missing}")
        imgs = [images[n] for n in self.ring.names]
        target = imgs[0].ring if imgs else self.ring
        for im in imgs:
            if not isinstance(im, Polynomial) or im.ring != target:
                raise RingMismatchError("substitution images must share a target ring")
        powers: list = [{0: target.one} for _ in imgs]

        def power(i: int, k: int) -> Polynomial:
            cache = powers[i]
            if k not in cache:
                cache[k] = power(i, k - 1) * imgs[i]
            return cache[k]

        out: Dict[Exps, Fraction] = {}
        for e, c in self._terms.items():
            term = target.const(c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            for te, tc in term._terms.items():
                s = out.get(te, 0) + tc
                if s:
                    out[te] = s
                else:
                    del out[te]
        return Polynomial._make(target, out)

    def embed(self, target: Ring) -> "Polynomial":
        """Reinterpret in a ring that contains all of this ring's variable names."""
        idx = [target.index(n) for n in self.ring.names]
        out = {}
        for e, c in self._terms.items():
            ne = [0] * target.nvars
            for i, k in zip(idx, e):
                ne[i] = k
            out[tuple(ne)] = c
        return Polynomial._make(target, out)

    def restrict(self, target: Ring) -> "Polynomial":
        """Move into a ring on a subset of the variables; used variables must exist there."""
        for n in self.variables():
            target.index(n)
        idx = [target.index(n) if n in target else None for n in self.ring.names]
        out = {}
        for e, c in self._terms.items():
            ne = [0] * target.nvars
            for i, k in zip(idx, e):
                if i is not None:
                    ne[i] = k
            out[tuple(ne)] = c
        return Polynomial._make(target, out)

    def monic(self, order: MonomialOrder = DEGREVLEX) -> "Polynomial":
        if not self._terms:
            return self
        return self * (1 / self.leading(order)[1])

    # -- comparison and printing ------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({self.ring}, {self})"

    def __str__(self) -> str:
        return self.format()

    def format(self, order: MonomialOrder = DEGREVLEX) -> str:
        if not self._terms:
            return "0"
        out = []
        for k, (e, c) in enumerate(self.sorted_terms(order)):
            neg = c < 0
            a = -c if neg else c
            factors = []
            for name, x in zip(self.ring.names, e):
                if x == 1:
                    factors.append(name)
                elif x > 1:
                    factors.append(f"{name}^{x}")
            if not factors:
                body = _fmt_rational(a)
            elif a == 1:
                body = "*".join(factors)
            else:
                body = _fmt_rational(a) + "*" + "*".join(factors)
            if k == 0:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)


def _fmt_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def variables(names: Union[str, Iterable[str]]) -> Tuple[Ring, Tuple[Polynomial, ...]]:
    """``R, (x, y) = variables("x,y")``."""
    if isinstance(names, str):
        names = [n.strip() for n in names.replace(" ", ",").split(",") if n.strip()]
    ring = Ring(names)
    return ring, ring.gens
