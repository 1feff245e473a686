"""
Weyl group arithmetic on the root lattice.

An element ``w`` is stored as the tuple of images ``w(alpha_1), ..., w(alpha_n)``
of the simple roots.  Parabolic subsets are sets of 1-based simple-root
indices; the empty set gives the full flag variety G/B.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .rootsys import CartanType, Root, RootSystem, RootSystemError, build_root_system

__all__ = [
    "WeylElement", "WeylGroup", "weyl_group", "parabolic_subset",
    "bruhat_leq_subword", "format_word", "parse_word",
]


def parabolic_subset(indices: Iterable[int] | str | None, rank: int) -> frozenset[int]:
    """Normalize a parabolic subset given as indices or as a ``"1,3"`` string."""
    if indices is None:
        return frozenset()
    if isinstance(indices, str):
        indices = [int(x) for x in indices.replace(" ", "").split(",") if x]
    out = frozenset(int(i) for i in indices)
    bad = [i for i in out if not 1 <= i <= rank]
    if bad:
        raise ValueError(f"parabolic indices {sorted(bad)} outside 1..{rank}")
    return out


def parse_word(text: str) -> tuple[int, ...]:
    """``"e"`` or ``""`` -> ``()``; ``"1,2,1"`` -> ``(1, 2, 1)``."""
    text = text.strip()
    if text in ("", "e"):
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse reduced word {text!r}") from None


def format_word(word: Sequence[int]) -> str:
    return ",".join(map(str, word)) if word else "e"


@dataclass(frozen=True)
class WeylElement:
    images: tuple[Root, ...]
    cartan_type: CartanType
    rs: RootSystem = field(compare=False, repr=False)

    def act(self, lam: Sequence[int]) -> Root:
        out = [0] * len(self.images)
        for c, img in zip(lam, self.images):
            if c:
                for j, x in enumerate(img):
                    out[j] += c * x
        return tuple(out)

    def _check(self, other: WeylElement):
        if self.cartan_type != other.cartan_type:
            raise RootSystemError(
                f"cannot mix elements of {self.cartan_type} and {other.cartan_type}")

    def __mul__(self, other: WeylElement) -> WeylElement:
        self._check(other)
        return WeylElement(tuple(self.act(img) for img in other.images),
                           self.cartan_type, self.rs)

    def is_right_descent(self, i: int) -> bool:
        """``l(w s_i) < l(w)``, i.e. ``w(alpha_i)`` is negative."""
        return any(c < 0 for c in self.images[i - 1])

    def is_left_descent(self, i: int) -> bool:
        return self.inverse().is_right_descent(i)

    def right_multiply_simple(self, i: int) -> WeylElement:
        """``w s_i``; cheaper than building ``s_i`` and composing."""
        alpha_i_image = self.images[i - 1]
        imgs = []
        for j in range(1, len(self.images) + 1):
            # s_i(alpha_j) = alpha_j - a_ij alpha_i
            aij = self.rs.cartan_matrix[i - 1][j - 1]
            img = self.images[j - 1]
            if aij:
                img = tuple(x - aij * y for x, y in zip(img, alpha_i_image))
            imgs.append(img)
        return WeylElement(tuple(imgs), self.cartan_type, self.rs)

    def reduced_word(self) -> tuple[int, ...]:
        """Canonical reduced word: repeatedly strip the smallest right descent."""
        return _reduced_word(self)

    def length(self) -> int:
        return sum(1 for a in self.rs.positive_roots
                   if any(c < 0 for c in self.act(a)))

    def inverse(self) -> WeylElement:
        return _inverse(self)

    def is_identity(self) -> bool:
        return all(img == self.rs.simple_root(i + 1) for i, img in enumerate(self.images))

    def __str__(self):
        return format_word(self.reduced_word())


@lru_cache(maxsize=None)
def _reduced_word(w: WeylElement) -> tuple[int, ...]:
    rank = len(w.images)
    letters = []
    while True:
        for i in range(1, rank + 1):
            if w.is_right_descent(i):
                letters.append(i)
                w = w.right_multiply_simple(i)
                break
        else:
            break
    return tuple(reversed(letters))


@lru_cache(maxsize=None)
def _inverse(w: WeylElement) -> WeylElement:
    out = WeylElement(tuple(w.rs.simple_root(i + 1) for i in range(len(w.images))),
                      w.cartan_type, w.rs)
    for i in reversed(_reduced_word(w)):
        out = out.right_multiply_simple(i)
    return out


class WeylGroup:
    """The finite Weyl group of a root system, with Bruhat order and parabolic quotients."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.cartan_type = rs.cartan_type
        self.rank = rs.rank
        self.identity = WeylElement(tuple(rs.simple_root(i) for i in range(1, self.rank + 1)),
                                    self.cartan_type, rs)
        self._bruhat_memo: dict[tuple[WeylElement, WeylElement], bool] = {}
        self._elements: tuple[WeylElement, ...] | None = None
        self._length: dict[WeylElement, int] = {}

    def __repr__(self):
        return f"WeylGroup({self.cartan_type})"

    def s(self, i: int) -> WeylElement:
        return self.identity.right_multiply_simple(i)

    def from_word(self, word: Iterable[int] | str) -> WeylElement:
        if isinstance(word, str):
            word = parse_word(word)
        w = self.identity
        for i in word:
            if not 1 <= i <= self.rank:
                raise ValueError(f"simple reflection index {i} outside 1..{self.rank}")
            w = w.right_multiply_simple(i)
        return w

    def reflection(self, alpha: Root) -> WeylElement:
        """``s_alpha``, acting by ``lam -> lam - <lam, alpha^vee> alpha``."""
        alpha = tuple(alpha)
        if not self.rs.is_root(alpha):
            raise RootSystemError(f"{alpha} is not a root of {self.cartan_type}")
        cor = self.rs.coroot(alpha)
        a = self.rs.cartan_matrix
        imgs = []
        for j in range(self.rank):
            # <alpha_j, alpha^vee> = sum_i cor_i a[i][j]
            c = sum(cor[i] * a[i][j] for i in range(self.rank))
            imgs.append(tuple(int(j == k) - c * alpha[k] for k in range(self.rank)))
        return WeylElement(tuple(imgs), self.cartan_type, self.rs)

    def length(self, w: WeylElement) -> int:
        try:
            return self._length[w]
        except KeyError:
            n = self._length[w] = w.length()
            return n

    @property
    def elements(self) -> tuple[WeylElement, ...]:
        """All of W, sorted by length and then by canonical reduced word."""
        if self._elements is None:
            seen = {self.identity}
            frontier = [self.identity]
            while frontier:
                nxt = []
                for w in frontier:
                    for i in range(1, self.rank + 1):
                        ws = w.right_multiply_simple(i)
                        if ws not in seen:
                            seen.add(ws)
                            nxt.append(ws)
                frontier = nxt
            self._elements = tuple(sorted(seen, key=self.sort_key))
        return self._elements

    def order(self) -> int:
        return len(self.elements)

    def sort_key(self, w: WeylElement):
        return (self.length(w), w.reduced_word())

    def longest_element(self, parabolic: Iterable[int] = None) -> WeylElement:
        """Longest element of the parabolic subgroup W_P; ``None`` means all of W."""
        p = range(1, self.rank + 1) if parabolic is None else parabolic
        p = parabolic_subset(p, self.rank)
        w = self.identity
        while True:
            for i in sorted(p):
                if not w.is_right_descent(i):
                    w = w.right_multiply_simple(i)
                    break
            else:
                return w

    def bruhat_leq(self, u: WeylElement, v: WeylElement) -> bool:
        """Bruhat order by the lifting property, memoized.

        For a left descent ``s`` of ``v``: ``u <= v`` iff ``min(u, su) <= sv``.
        """
        u._check(v)
        return self._bruhat(u, v)

    def _bruhat(self, u: WeylElement, v: WeylElement) -> bool:
        key = (u, v)
        hit = self._bruhat_memo.get(key)
        if hit is not None:
            return hit
        lu, lv = self.length(u), self.length(v)
        if lu > lv:
            result = False
        elif lu == lv:
            result = u == v
        elif lu == 0:
            result = True
        else:
            vinv = v.inverse()
            s = next(i for i in range(1, self.rank + 1) if vinv.is_right_descent(i))
            sv = self._left_simple(s, v)
            if u.inverse().is_right_descent(s):
                result = self._bruhat(self._left_simple(s, u), sv)
            else:
                result = self._bruhat(u, sv)
        self._bruhat_memo[key] = result
        return result

    def _left_simple(self, i: int, w: WeylElement) -> WeylElement:
        return self.s(i) * w

    def is_min_rep(self, w: WeylElement, parabolic: Iterable[int]) -> bool:
        return not any(w.is_right_descent(i) for i in parabolic)

    def min_rep(self, w: WeylElement, parabolic: Iterable[int]) -> WeylElement:
        """The shortest element of the coset ``w W_P``."""
        p = sorted(parabolic_subset(parabolic, self.rank))
        while True:
            for i in p:
                if w.is_right_descent(i):
                    w = w.right_multiply_simple(i)
                    break
            else:
                return w

    def enumerate_WP(self, parabolic: Iterable[int]) -> tuple[WeylElement, ...]:
        p = parabolic_subset(parabolic, self.rank)
        return _enumerate_wp(self, p)

    def dual(self, v: WeylElement, parabolic: Iterable[int]) -> WeylElement:
        """``min_rep(w0 v)``, the label with ``O_v = O^{dual(v)}`` non-equivariantly."""
        p = parabolic_subset(parabolic, self.rank)
        if not self.is_min_rep(v, p):
            raise ValueError(f"{v} is not a minimal coset representative for parabolic {sorted(p)}")
        return self.min_rep(self.longest_element() * v, p)


@lru_cache(maxsize=None)
def _enumerate_wp(group: WeylGroup, p: frozenset[int]) -> tuple[WeylElement, ...]:
    return tuple(w for w in group.elements if group.is_min_rep(w, p))


@lru_cache(maxsize=None)
def weyl_group(t: CartanType | str) -> WeylGroup:
    return WeylGroup(build_root_system(t))


def bruhat_leq_subword(group: WeylGroup, u: WeylElement, v: WeylElement) -> bool:
    """Brute-force Bruhat comparison: ``u`` is a subword product of a reduced word of ``v``."""
    word = v.reduced_word()
    lu = group.length(u)
    if lu > len(word):
        return False
    # a reduced expression of u inside the word has exactly l(u) letters
    return any(group.from_word(word[p] for p in positions) == u
               for positions in combinations(range(len(word)), lu))
