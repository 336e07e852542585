"""Recursive-descent parsers for polynomials and algebra files.

Polynomial grammar::

    poly     := ['-'] term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' nat)?
    base     := rational | ident | '(' poly ')'
    rational := '-'? nat ('/' nat)?

A leading ``-`` directly followed by a number is part of the literal, so
``-2^2`` is 4 while ``-x^2`` is the negation of ``x^2``.  Juxtaposition is
not multiplication.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .polycore import Polynomial, Ring


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 1, col: int = 1):
        self.line, self.col, self.message = line, col, message
        super().__init__(f"{line}:{col}: {message}")


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))")


def _tokenize(src: str, line: int = 1, col0: int = 1) -> List[Tuple[str, str, int, int]]:
    toks = []
    pos = 0
    while True:
        m = _TOKEN.match(src, pos)
        if m is None:
            rest = src[pos:]
            stripped = rest.lstrip()
            if not stripped:
                break
            where = pos + len(rest) - len(stripped)
            raise ParseError(f"unexpected character {stripped[0]!r}", line, col0 + where)
        kind = m.lastgroup
        toks.append((kind, m.group(kind), line, col0 + m.start(kind)))
        pos = m.end()
    toks.append(("end", "", line, col0 + len(src)))
    return toks


class _Parser:
    def __init__(self, src: str, ring: Ring, line: int, col0: int):
        self.toks = _tokenize(src, line, col0)
        self.i = 0
        self.ring = ring

    def peek(self, k: int = 0):
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg: str, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, tok[2], tok[3])

    def expect_op(self, op: str):
        t = self.peek()
        if t[0] != "op" or t[1] != op:
            self.error(f"expected {op!r}, found {t[1] or 'end of input'!r}")
        return self.take()

    def poly(self) -> Polynomial:
        t = self.peek()
        nt = self.peek(1)
        if t[:2] == ("op", "-") and nt[0] != "num":
            self.take()
            acc = -self.term()
        else:
            acc = self.term()
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] in "+-":
                self.take()
                rhs = self.term()
                acc = acc + rhs if t[1] == "+" else acc - rhs
            else:
                return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self) -> Polynomial:
        b = self.base()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            t = self.peek()
            if t[0] != "num":
                self.error(f"expected a non-negative integer exponent, found {t[1] or 'end of input'!r}")
            self.take()
            b = b ** int(t[1])
        return b

    def base(self) -> Polynomial:
        t = self.peek()
        if t[0] == "num" or (t[:2] == ("op", "-") and self.peek(1)[0] == "num"):
            neg = t[1] == "-"
            if neg:
                self.take()
            num = int(self.take()[1])
            den = 1
            if self.peek()[:2] == ("op", "/"):
                self.take()
                d = self.peek()
                if d[0] != "num":
                    self.error(f"expected a denominator, found {d[1] or 'end of input'!r}")
                self.take()
                den = int(d[1])
                if den == 0:
                    self.error("zero denominator", d)
            c = Fraction(num, den)
            return self.ring.const(-c if neg else c)
        if t[0] == "ident":
            if t[1] not in self.ring:
                self.error(f"unknown variable {t[1]!r}")
            self.take()
            return self.ring.var(t[1])
        if t[:2] == ("op", "("):
            self.take()
            p = self.poly()
            self.expect_op(")")
            return p
        self.error(f"unexpected {t[1]!r}" if t[1] else "unexpected end of input")

    def parse(self) -> Polynomial:
        p = self.poly()
        t = self.peek()
        if t[0] != "end":
            self.error(f"unexpected {t[1]!r}")
        return p


def parse_polynomial(src: str, ring: Ring, line: int = 1, col: int = 1) -> Polynomial:
    """Parse ``src`` into a polynomial of ``ring``; errors carry line:column."""
    if "\n" in src:
        # keep multi-line input positions honest
        return _parse_multiline(src, ring, line)
    return _Parser(src, ring, line, col).parse()


def _parse_multiline(src: str, ring: Ring, line: int) -> Polynomial:
    toks: List[Tuple[str, str, int, int]] = []
    for k, text in enumerate(src.split("\n")):
        toks.extend(_tokenize(text, line + k)[:-1])
    last = src.split("\n")
    toks.append(("end", "", line + len(last) - 1, len(last[-1]) + 1))
    p = _Parser("", ring, line, 1)
    p.toks = toks
    return p.parse()


# -- algebra files ----------------------------------------------------------


@dataclass
class AlgebraFile:
    structure: "object"
    derivations: Dict[str, "object"] = field(default_factory=dict)
    potential: Optional[Polynomial] = None


_RING = re.compile(r"ring\s+Q\s*\[(?P<vars>[^\]]*)\]\s*$")
_BRACKET = re.compile(r"bracket\s*\{\s*(?P<a>[^,}]*?)\s*,\s*(?P<b>[^}]*?)\s*\}\s*=(?P<rhs>.*)$")
_DERIV = re.compile(r"derivation\s+(?P<name>[A-Za-z_][A-Za-z0-9_]*)\s*:(?P<body>.*)$")


def _indent(raw: str) -> int:
    return len(raw) - len(raw.lstrip())


def parse_algebra(src: str, check_jacobi: bool = True) -> AlgebraFile:
    """Parse an algebra file.

    Recognized lines (``#`` starts a comment)::

        ring Q[x,y,z]
        bracket {x,y} = z
        relation x^2 - y
        potential x^2 - y*z
        derivation d: x -> y, y -> 0

    Unlisted bracket pairs are zero.  The Jacobi identity is checked unless
    ``check_jacobi`` is false.
    """
    from .bracket import from_potential, from_table, _verified, quotient
    from .derivation import Derivation

    ring: Optional[Ring] = None
    entries: Dict[Tuple[str, str], Polynomial] = {}
    seen_pairs: Dict[frozenset, int] = {}
    relations: List[Polynomial] = []
    potential: Optional[Polynomial] = None
    pending_derivs: List[Tuple[str, str, int, int]] = []

    for lineno, raw in enumerate(src.splitlines(), 1):
        text = raw.split("#", 1)[0].rstrip()
        if not text.strip():
            continue
        col = _indent(text) + 1
        body = text.strip()
        keyword = body.split(None, 1)[0].split("{", 1)[0]
        if keyword == "ring":
            if ring is not None:
                raise ParseError("ring declared twice", lineno, col)
            m = _RING.match(body)
            if not m:
                raise ParseError("expected 'ring Q[v1,...,vn]'", lineno, col)
            names = [v.strip() for v in m.group("vars").split(",") if v.strip()]
            try:
                ring = Ring(names)
            except ValueError as e:
                raise ParseError(str(e), lineno, col) from None
            continue
        if ring is None:
            raise ParseError("the ring must be declared first", lineno, col)
        if keyword == "bracket":
            m = _BRACKET.match(body)
            if not m:
                raise ParseError("expected 'bracket {a,b} = poly'", lineno, col)
            a, b = m.group("a"), m.group("b")
            for v in (a, b):
                if v not in ring:
                    raise ParseError(f"undeclared variable {v!r}", lineno, col + body.index(v))
            if a == b:
                raise ParseError(f"bracket {{{a},{a}}} is always 0", lineno, col)
            pair = frozenset((a, b))
            if pair in seen_pairs:
                raise ParseError(f"duplicate bracket for {{{a},{b}}} (first on line {seen_pairs[pair]})", lineno, col)
            seen_pairs[pair] = lineno
            start = col + m.start("rhs")
            entries[(a, b)] = parse_polynomial(m.group("rhs"), ring, lineno, start)
        elif keyword == "relation":
            rest = body[len("relation"):]
            relations.append(parse_polynomial(rest, ring, lineno, col + len("relation")))
        elif keyword == "potential":
            if potential is not None:
                raise ParseError("potential given twice", lineno, col)
            rest = body[len("potential"):]
            potential = parse_polynomial(rest, ring, lineno, col + len("potential"))
        elif keyword == "derivation":
            m = _DERIV.match(body)
            if not m:
                raise ParseError("expected 'derivation name: x -> poly, ...'", lineno, col)
            pending_derivs.append((m.group("name"), m.group("body"), lineno, col + m.start("body")))
        else:
            raise ParseError(f"unknown keyword {keyword!r}", lineno, col)

    if ring is None:
        raise ParseError("no ring declaration", 1, 1)
    if potential is not None and entries:
        raise ParseError("give either a potential or bracket lines, not both", 1, 1)

    if potential is not None:
        if ring.nvars != 3:
            raise ParseError("a potential needs exactly three variables", 1, 1)
        if check_jacobi:
            P = from_potential(potential)
        else:
            from .bracket import PoissonStructure

            fx, fy, fz = (potential.partial(i) for i in range(3))
            P = PoissonStructure(ring, {(0, 1): fz, (1, 2): fx, (0, 2): -fy})
        if relations:
            P = quotient(P, relations)
    else:
        P = from_table(ring, entries, relations, verify=False)
        if check_jacobi:
            P = _verified(P)

    derivs: Dict[str, Derivation] = {}
    for name, body, lineno, col in pending_derivs:
        if name in derivs:
            raise ParseError(f"derivation {name!r} defined twice", lineno, col)
        images: Dict[str, Polynomial] = {}
        offset = 0
        for part in body.split(","):
            here = col + offset
            offset += len(part) + 1
            if not part.strip():
                raise ParseError("empty derivation image", lineno, here)
            if "->" not in part:
                raise ParseError("expected 'var -> poly'", lineno, here)
            var, rhs = part.split("->", 1)
            var = var.strip()
            if var not in ring:
                raise ParseError(f"undeclared variable {var!r}", lineno, here + _indent(part))
            if var in images:
                raise ParseError(f"variable {var!r} given twice", lineno, here)
            images[var] = parse_polynomial(rhs, ring, lineno, here + part.index("->") + 2)
        derivs[name] = Derivation(ring, images, P.relations)
    return AlgebraFile(P, derivs, potential)
