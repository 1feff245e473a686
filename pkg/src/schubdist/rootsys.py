"""
Finite root systems generated from Cartan matrices.

Roots are integer tuples in simple-root coordinates and coroots are integer
tuples in simple-coroot coordinates.  Simple roots are numbered 1..rank in
Bourbaki order; the Cartan matrix follows the convention

    a[i][j] = <alpha_j, alpha_i^vee>

so row ``i`` lists the pairings of the simple roots against the simple coroot
``alpha_i^vee``.

>>> rs = build_root_system(CartanType.parse("A2"))
>>> rs.positive_roots
((1, 0), (0, 1), (1, 1))
>>> pairing(rs, (1, 0), rs.simple_coroot(2))
-1
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

__all__ = [
    "WEYL_ORDER_CAP", "Root", "Coroot", "CartanType", "RootSystem",
    "RootSystemError", "build_root_system", "cartan_matrix", "pairing",
    "in_parabolic_span",
]

# largest Weyl group we agree to enumerate
WEYL_ORDER_CAP = 50_000

Root = tuple[int, ...]
Coroot = tuple[int, ...]


class RootSystemError(ValueError):
    pass


_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
_EXCEPTIONAL_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


@dataclass(frozen=True, order=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        f, n = self.family, self.rank
        if f in _MIN_RANK:
            if n < _MIN_RANK[f]:
                raise RootSystemError(f"invalid Cartan type {f}{n}: rank must be >= {_MIN_RANK[f]}")
        elif f in _EXCEPTIONAL_RANKS:
            if n not in _EXCEPTIONAL_RANKS[f]:
                raise RootSystemError(f"invalid Cartan type {f}{n}")
        else:
            raise RootSystemError(f"unknown Cartan family {f!r}")

    @classmethod
    def parse(cls, text: str) -> CartanType:
        """Parse strings such as ``"A3"``, ``"g2"`` or ``"B 4"``."""
        m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", text)
        if not m:
            raise RootSystemError(f"cannot parse Cartan type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    @property
    def weyl_order(self) -> int:
        f, n = self.family, self.rank
        if f == "A":
            return math.factorial(n + 1)
        if f in "BC":
            return 2**n * math.factorial(n)
        if f == "D":
            return 2 ** (n - 1) * math.factorial(n)
        return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
                ("F", 4): 1152, ("G", 2): 12}[f, n]

    def __str__(self):
        return f"{self.family}{self.rank}"


def cartan_matrix(t: CartanType) -> tuple[tuple[int, ...], ...]:
    """The Cartan matrix of ``t`` in Bourbaki numbering (0-based storage)."""
    n = t.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):
        # 1-based node numbers
        a[i - 1][j - 1] = aij
        a[j - 1][i - 1] = aji

    f = t.family
    if f in "ABC":
        for i in range(1, n):
            link(i, i + 1)
        if f == "B":
            # alpha_n short
            link(n - 1, n, -1, -2)
        elif f == "C":
            # alpha_n long
            link(n - 1, n, -2, -1)
    elif f == "D":
        for i in range(1, n - 1):
            link(i, i + 1)
        link(n - 2, n)
    elif f == "E":
        link(1, 3)
        link(2, 4)
        for i in range(3, n):
            link(i, i + 1)
    elif f == "F":
        link(1, 2)
        link(2, 3, -1, -2)
        link(3, 4)
    elif f == "G":
        # alpha_1 short, alpha_2 long
        link(1, 2, -3, -1)
    return tuple(tuple(row) for row in a)


class RootSystem:
    """Positive roots, coroots and pairings of a finite root system.

    Instances are immutable after construction; obtain them through
    :func:`build_root_system`, which caches one instance per Cartan type.
    """

    def __init__(self, cartan_type: CartanType):
        self.cartan_type = cartan_type
        self.rank = cartan_type.rank
        self.cartan_matrix = cartan_matrix(cartan_type)
        self._half_norms = self._symmetrize()
        self.positive_roots = self._close_positive_roots()
        self.roots = self.positive_roots + tuple(_neg(a) for a in self.positive_roots)
        self._root_set = frozenset(self.roots)
        self._positive_index = {a: k for k, a in enumerate(self.positive_roots)}
        self.coroot_map = {a: self._coroot(a) for a in self.roots}

    def __repr__(self):
        return f"RootSystem({self.cartan_type})"

    def _symmetrize(self) -> tuple[Fraction, ...]:
        # (alpha_i, alpha_i)/2 for each simple root, so (alpha_i, alpha_j) = norm_i * a[i][j]
        a = self.cartan_matrix
        n = self.rank
        norms: list[Fraction | None] = [None] * n
        norms[0] = Fraction(1)
        stack = [0]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and a[i][j] != 0 and norms[j] is None:
                    norms[j] = norms[i] * a[i][j] / a[j][i]
                    stack.append(j)
        assert all(x is not None for x in norms), "Dynkin diagram must be connected"
        # normalize so that the short roots have half-norm 1
        smallest = min(norms)
        return tuple(x / smallest for x in norms)

    def _close_positive_roots(self) -> tuple[Root, ...]:
        n = self.rank
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        found = list(simple)
        seen = set(found)
        k = 0
        while k < len(found):
            alpha = found[k]
            k += 1
            for i in range(1, n + 1):
                beta = self.simple_reflect(i, alpha)
                if all(c >= 0 for c in beta) and beta not in seen:
                    seen.add(beta)
                    found.append(beta)
        found.sort(key=lambda r: (sum(r), tuple(-c for c in r)))
        return tuple(found)

    def _coroot(self, alpha: Root) -> Coroot:
        half = self.inner(alpha, alpha) / 2
        coeffs = [c * self._half_norms[j] / half for j, c in enumerate(alpha)]
        assert all(x.denominator == 1 for x in coeffs), alpha
        return tuple(int(x) for x in coeffs)

    def inner(self, lam: Root, mu: Root) -> Fraction:
        """The W-invariant inner product, normalized so short roots have norm 2."""
        a = self.cartan_matrix
        return sum((lam[i] * mu[j] * self._half_norms[i] * a[i][j]
                    for i in range(self.rank) for j in range(self.rank)), Fraction(0))

    def simple_root(self, i: int) -> Root:
        return tuple(int(i - 1 == j) for j in range(self.rank))

    def simple_coroot(self, i: int) -> Coroot:
        return self.simple_root(i)

    def simple_pairing(self, lam: Root, i: int) -> int:
        """<lam, alpha_i^vee>."""
        row = self.cartan_matrix[i - 1]
        return sum(row[j] * lam[j] for j in range(self.rank))

    def simple_reflect(self, i: int, lam: Root) -> Root:
        c = self.simple_pairing(lam, i)
        if c == 0:
            return tuple(lam)
        out = list(lam)
        out[i - 1] -= c
        return tuple(out)

    def is_root(self, lam: Iterable[int]) -> bool:
        return tuple(lam) in self._root_set

    def is_positive(self, alpha: Root) -> bool:
        return alpha in self._positive_index

    def coroot(self, alpha: Root) -> Coroot:
        try:
            return self.coroot_map[tuple(alpha)]
        except KeyError:
            raise RootSystemError(f"{alpha} is not a root of {self.cartan_type}") from None

    def highest_root(self) -> Root:
        return self.positive_roots[-1]


def _neg(v):
    return tuple(-c for c in v)


@lru_cache(maxsize=None)
def build_root_system(t: CartanType | str) -> RootSystem:
    """Return the (cached) root system of type ``t``.

    Raises :class:`RootSystemError` for invalid types and for types whose
    Weyl group is larger than :data:`WEYL_ORDER_CAP`.
    """
    if isinstance(t, str):
        t = CartanType.parse(t)
    if t.weyl_order > WEYL_ORDER_CAP:
        raise RootSystemError(
            f"Weyl group of {t} has order {t.weyl_order}, above the cap {WEYL_ORDER_CAP}")
    return RootSystem(t)


def pairing(rs: RootSystem, lam: Root, c: Coroot) -> int:
    """<lam, c> for ``lam`` in root coordinates and ``c`` in coroot coordinates."""
    n = rs.rank
    if len(lam) != n or len(c) != n:
        raise RootSystemError(f"dimension mismatch: expected vectors of length {n}")
    a = rs.cartan_matrix
    return sum(c[i] * a[i][j] * lam[j] for i in range(n) for j in range(n))


def in_parabolic_span(alpha: Root, parabolic: Iterable[int]) -> bool:
    """True iff ``alpha`` lies in the span of the simple roots indexed by ``parabolic``."""
    p = set(parabolic)
    return all(c == 0 or (j + 1) in p for j, c in enumerate(alpha))
