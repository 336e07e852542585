"""Isomorphism of skew quadratic Poisson algebras.

For {x_i, x_j} = l_ij x_i x_j with every off-diagonal l_ij nonzero, two such
algebras are isomorphic exactly when the matrices agree after a simultaneous
permutation of rows and columns.  The search below finds that permutation.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

MAX_SEARCH_DIM = 12


class SkewMatrix:
    """Skew-symmetric n x n rational matrix stored by its strict upper triangle."""

    def __init__(self, n: int, entries: Mapping[Tuple[int, int], Union[int, Fraction]] = ()):
        if n < 0:
            raise ValueError("dimension must be non-negative")
        self.n = n
        self._upper: Dict[Tuple[int, int], Fraction] = {}
        items = entries.items() if isinstance(entries, Mapping) else entries
        for (i, j), v in items:
            if not (0 <= i < n and 0 <= j < n) or i == j:
                raise ValueError(f"bad index ({i}, {j}) for dimension {n}")
            v = Fraction(v)
            if i > j:
                i, j, v = j, i, -v
            self._upper[(i, j)] = v

    @classmethod
    def from_upper(cls, values: Sequence) -> "SkewMatrix":
        """Build from the strict upper triangle read row by row: l_12, l_13, ..., l_(n-1)n."""
        values = list(values)
        n = 0
        while n * (n - 1) // 2 < len(values):
            n += 1
        if n * (n - 1) // 2 != len(values):
            raise ValueError(f"{len(values)} entries is not a triangular count")
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        return cls(n, dict(zip(pairs, values)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "SkewMatrix":
        n = len(rows)
        for i in range(n):
            if len(rows[i]) != n:
                raise ValueError("matrix is not square")
            for j in range(n):
                if Fraction(rows[i][j]) != -Fraction(rows[j][i]):
                    raise ValueError(f"matrix is not skew-symmetric at ({i}, {j})")
        return cls(n, {(i, j): rows[i][j] for i in range(n) for j in range(i + 1, n)})

    @classmethod
    def coerce(cls, obj) -> "SkewMatrix":
        if isinstance(obj, SkewMatrix):
            return obj
        obj = list(obj)
        if obj and isinstance(obj[0], (list, tuple)):
            return cls.from_rows(obj)
        return cls.from_upper(obj)

    def __getitem__(self, ij: Tuple[int, int]) -> Fraction:
        i, j = ij
        if i == j:
            return Fraction(0)
        if i < j:
            return self._upper.get((i, j), Fraction(0))
        return -self._upper.get((j, i), Fraction(0))

    def upper(self) -> List[Fraction]:
        return [self[i, j] for i in range(self.n) for j in range(i + 1, self.n)]

    def rows(self) -> List[List[Fraction]]:
        return [[self[i, j] for j in range(self.n)] for i in range(self.n)]

    @property
    def hypothesis_holds(self) -> bool:
        """All off-diagonal entries nonzero."""
        return all(v != 0 for v in self.upper())

    def permuted(self, sigma: Sequence[int]) -> "SkewMatrix":
        """The matrix M with M[sigma(i), sigma(j)] = self[i, j]."""
        return SkewMatrix(self.n, {(sigma[i], sigma[j]): self[i, j] for i in range(self.n) for j in range(i + 1, self.n)})

    def __eq__(self, other) -> bool:
        return isinstance(other, SkewMatrix) and self.n == other.n and self.upper() == other.upper()

    def __hash__(self) -> int:
        return hash((self.n, tuple(self.upper())))

    def __repr__(self) -> str:
        return f"SkewMatrix({self.n}, {[str(v) for v in self.upper()]})"

    def to_text(self) -> str:
        lines = [str(self.n)]
        for i in range(self.n - 1):
            lines.append(" ".join(_fmt(self[i, j]) for j in range(i + 1, self.n)))
        return "\n".join(lines) + "\n"


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def parse_matrix(src: str) -> SkewMatrix:
    """Matrix file: first line n, then the strict upper triangle row by row.

    Blank lines and ``#`` comments are ignored; row breaks are not
    significant, only the entry count is.
    """
    tokens: List[Tuple[str, int]] = []
    for lineno, line in enumerate(src.splitlines(), 1):
        line = line.split("#", 1)[0]
        tokens.extend((tok, lineno) for tok in line.split())
    if not tokens:
        raise ValueError("empty matrix file")
    head, lineno = tokens[0]
    try:
        n = int(head)
    except ValueError:
        raise ValueError(f"line {lineno}: expected the dimension, got {head!r}") from None
    if n < 1:
        raise ValueError(f"line {lineno}: dimension must be positive")
    want = n * (n - 1) // 2
    vals = []
    for tok, lineno in tokens[1:]:
        try:
            vals.append(Fraction(tok))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"line {lineno}: bad rational {tok!r}") from None
    if len(vals) != want:
        raise ValueError(f"expected {want} upper-triangle entries for n={n}, got {len(vals)}")
    return SkewMatrix(n, dict(zip([(i, j) for i in range(n) for j in range(i + 1, n)], vals)))


def _row_signature(m: SkewMatrix, i: int) -> Tuple:
    return tuple(sorted(Counter(m[i, j] for j in range(m.n) if j != i).items()))


def check_permutation(lam: SkewMatrix, lam2: SkewMatrix, sigma: Sequence[int]) -> bool:
    return lam.n == lam2.n and all(
        lam[i, j] == lam2[sigma[i], sigma[j]] for i in range(lam.n) for j in range(lam.n)
    )


def find_permutation(lam: SkewMatrix, lam2: SkewMatrix) -> Optional[Tuple[int, ...]]:
    """A 0-based sigma with lam[i, j] == lam2[sigma(i), sigma(j)], or None.

    Backtracking over rows, only pairing rows with equal entry multisets and
    trying targets in increasing index order.
    """
    lam, lam2 = SkewMatrix.coerce(lam), SkewMatrix.coerce(lam2)
    if lam.n != lam2.n:
        return None
    n = lam.n
    sig1 = [_row_signature(lam, i) for i in range(n)]
    sig2 = [_row_signature(lam2, i) for i in range(n)]
    if sorted(sig1) != sorted(sig2):
        return None
    sigma: List[int] = []
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        for t in range(n):
            if used[t] or sig2[t] != sig1[i]:
                continue
            if all(lam[i, k] == lam2[t, sigma[k]] for k in range(i)):
                sigma.append(t)
                used[t] = True
                if extend(i + 1):
                    return True
                sigma.pop()
                used[t] = False
        return False

    return tuple(sigma) if extend(0) else None


def brute_force_permutation(lam: SkewMatrix, lam2: SkewMatrix) -> Optional[Tuple[int, ...]]:
    """Exhaustive search over S_n (small n only)."""
    lam, lam2 = SkewMatrix.coerce(lam), SkewMatrix.coerce(lam2)
    if lam.n != lam2.n:
        return None
    for sigma in itertools.permutations(range(lam.n)):
        if check_permutation(lam, lam2, sigma):
            return sigma
    return None


def cycle_notation(sigma: Sequence[int]) -> str:
    """1-based cycle notation, e.g. ``(1 3)``; the identity is ``()``."""
    seen = set()
    parts = []
    for start in range(len(sigma)):
        if start in seen or sigma[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        k = sigma[start]
        while k != start:
            cyc.append(k)
            seen.add(k)
            k = sigma[k]
        parts.append("(" + " ".join(str(c + 1) for c in cyc) + ")")
    return "".join(parts) or "()"


@dataclass
class IsoDecision:
    isomorphic: bool
    sigma: Optional[Tuple[int, ...]] = None
    relabeling: Dict[str, str] = field(default_factory=dict)
    poisson_map_ok: Optional[bool] = None
    warnings: List[str] = field(default_factory=list)

    @property
    def cycles(self) -> Optional[str]:
        return None if self.sigma is None else cycle_notation(self.sigma)

    def __bool__(self) -> bool:
        return self.isomorphic


def iso_decision(lam, lam2, names: Optional[Sequence[str]] = None) -> IsoDecision:
    """Decide isomorphism of the two skew quadratic algebras.

    When a permutation exists the relabeling x_i -> x_sigma(i) is verified as
    a Poisson map between the two brackets.
    """
    from .bracket import skew_quadratic
    from .derivation import is_poisson_map

    lam, lam2 = SkewMatrix.coerce(lam), SkewMatrix.coerce(lam2)
    warnings = []
    if not lam.hypothesis_holds:
        warnings.append("some off-diagonal entry of the source matrix is zero; a missing permutation does not prove non-isomorphism")
    sigma = find_permutation(lam, lam2)
    if sigma is None:
        return IsoDecision(False, warnings=warnings)
    if not check_permutation(lam, lam2, sigma):
        raise AssertionError("permutation search returned an invalid sigma")
    names = list(names) if names is not None else [f"x{i + 1}" for i in range(lam.n)]
    P = skew_quadratic(lam, names)
    Q = skew_quadratic(lam2, names)
    images = {names[i]: Q.ring.var(sigma[i]) for i in range(lam.n)}
    ok = bool(is_poisson_map(P, Q, images))
    return IsoDecision(True, sigma, {names[i]: names[sigma[i]] for i in range(lam.n)}, ok, warnings)


def degree_one_principal_poisson(lam, f) -> bool:
    """Whether the principal ideal (f) of a linear form f is a Poisson ideal.

    Under the nonzero-entry hypothesis this must agree with "f is a scalar
    multiple of one variable"; a disagreement raises ``AssertionError``.
    """
    from .bracket import is_poisson_ideal

    lam = SkewMatrix.coerce(lam)
    if f.is_zero() or not f.is_homogeneous() or f.degree() != 1:
        raise ValueError(f"{f} is not a nonzero linear form")
    if f.ring.nvars != lam.n:
        raise ValueError("ring and matrix dimensions differ")
    from .bracket import skew_quadratic

    P = skew_quadratic(lam, f.ring.names)
    answer = bool(is_poisson_ideal(P, [f]))
    if lam.hypothesis_holds:
        syntactic = len(f) == 1
        if answer != syntactic:
            raise AssertionError(f"Poisson ideal test disagrees with the single-variable criterion on {f}")
    return answer
