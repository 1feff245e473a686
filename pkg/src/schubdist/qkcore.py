"""
Non-equivariant K-theory of G/P and its 2-point quantum data.

Coefficients are integers (the torus-equivariant base ring specialized to Z).
A :class:`KClass` is a finite integer combination of Schubert classes in
either the opposite basis ``O^u`` or the Schubert basis ``O_v``; the two are
related by ``O_v = O^{dual(v)}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Iterable, Mapping

import numpy as np

from .distance import Degree, complement, dist
from .weyl import WeylElement, WeylGroup, parabolic_subset

__all__ = [
    "OPPOSITE", "SCHUBERT", "KClass", "QSeries", "euler_char",
    "pairing_classical", "gw_two_point", "metric", "metric_truncated",
    "chi_series", "pairing_matrix", "degrees_up_to",
]

OPPOSITE = "opposite"
SCHUBERT = "schubert"


@dataclass(frozen=True)
class KClass:
    """Finite integer combination of Schubert classes of G/P; zero terms are dropped."""
    group: WeylGroup = field(repr=False)
    parabolic: frozenset[int]
    terms: Mapping[WeylElement, int]
    flavor: str = OPPOSITE

    def __post_init__(self):
        if self.flavor not in (OPPOSITE, SCHUBERT):
            raise ValueError(f"unknown basis flavor {self.flavor!r}")
        p = parabolic_subset(self.parabolic, self.group.rank)
        object.__setattr__(self, "parabolic", p)
        clean = {}
        for w, c in self.terms.items():
            if not self.group.is_min_rep(w, p):
                raise ValueError(f"{w} is not a minimal coset representative")
            if c:
                clean[w] = clean.get(w, 0) + c
        object.__setattr__(self, "terms", {w: c for w, c in clean.items() if c})

    @classmethod
    def opposite(cls, group, parabolic, u: WeylElement, coeff: int = 1) -> KClass:
        return cls(group, parabolic, {u: coeff}, OPPOSITE)

    @classmethod
    def schubert(cls, group, parabolic, v: WeylElement, coeff: int = 1) -> KClass:
        return cls(group, parabolic, {v: coeff}, SCHUBERT)

    def _convert(self, flavor: str) -> KClass:
        if flavor == self.flavor:
            return self
        # dual is an involution, so the same map converts in both directions
        terms = {self.group.dual(w, self.parabolic): c for w, c in self.terms.items()}
        return KClass(self.group, self.parabolic, terms, flavor)

    def to_opposite(self) -> KClass:
        return self._convert(OPPOSITE)

    def to_schubert(self) -> KClass:
        return self._convert(SCHUBERT)

    def __add__(self, other: KClass) -> KClass:
        other = other._convert(self.flavor)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, 0) + c
        return KClass(self.group, self.parabolic, terms, self.flavor)

    def __rmul__(self, k: int) -> KClass:
        return KClass(self.group, self.parabolic,
                      {w: k * c for w, c in self.terms.items()}, self.flavor)

    def __sub__(self, other: KClass) -> KClass:
        return self + (-1) * other

    def __eq__(self, other):
        if not isinstance(other, KClass):
            return NotImplemented
        return (self.parabolic == other.parabolic
                and self.group.cartan_type == other.group.cartan_type
                and dict(self.to_opposite().terms) == dict(other.to_opposite().terms))

    def __hash__(self):
        return hash(frozenset(self.to_opposite().terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self):
        if not self.terms:
            return "0"
        sym = "O^" if self.flavor == OPPOSITE else "O_"
        ordered = sorted(self.terms, key=self.group.sort_key)
        return " + ".join(f"{self.terms[w]}*{sym}{{{w}}}" for w in ordered)


def euler_char(gamma: KClass) -> int:
    """Sheaf Euler characteristic: every Schubert class in either basis maps to 1."""
    return sum(gamma.terms.values())


def pairing_classical(group: WeylGroup, u: WeylElement, v: WeylElement, parabolic) -> int:
    """``chi(O^u . O_v)``: 1 if ``u <= v`` in Bruhat order, else 0."""
    p = parabolic_subset(parabolic, group.rank)
    for w in (u, v):
        if not group.is_min_rep(w, p):
            raise ValueError(f"{w} is not a minimal coset representative")
    return int(group.bruhat_leq(u, v))


def pairing_matrix(group: WeylGroup, parabolic) -> np.ndarray:
    """``[chi(O^u . O_v)]`` with rows and columns in the sorted order of W^P."""
    wp = group.enumerate_WP(parabolic)
    return np.array([[pairing_classical(group, u, v, parabolic) for v in wp] for u in wp],
                    dtype=np.int64)


def gw_two_point(group: WeylGroup, u: WeylElement, v: WeylElement, parabolic, d: Degree) -> int:
    """The 2-point K-theoretic invariant ``<O^u, O_v>_d``: 1 iff ``d >= dist(u, v)``.

    At ``d = 0`` this is the classical pairing ``chi(O^u . O_v)``.
    """
    return int(d >= dist(group, u, v, parabolic))


def degrees_up_to(cap: Degree) -> Iterable[Degree]:
    """All effective degrees componentwise below ``cap``."""
    for vals in cartesian(*(range(c + 1) for c in cap.values)):
        yield Degree(cap.indices, tuple(vals))


@dataclass(frozen=True)
class QSeries:
    """An element of Z[[q]] of one of two shapes.

    closed form:    ``q^numerator / prod_beta (1 - q_beta)`` over the simple
                    roots outside P (only the numerator is stored);
    truncated form: explicit coefficients for every degree ``<= cap``.
    """
    indices: tuple[int, ...]
    numerator: Degree | None = None
    coeffs: Mapping[Degree, int] | None = None
    cap: Degree | None = None

    @classmethod
    def closed(cls, numerator: Degree) -> QSeries:
        return cls(numerator.indices, numerator=numerator)

    @classmethod
    def truncated(cls, coeffs: Mapping[Degree, int], cap: Degree) -> QSeries:
        return cls(cap.indices, coeffs={d: c for d, c in coeffs.items() if c}, cap=cap)

    @property
    def is_closed(self) -> bool:
        return self.numerator is not None

    def coefficient(self, d: Degree) -> int:
        if self.is_closed:
            return int(d >= self.numerator)
        if not d <= self.cap:
            raise ValueError(f"degree {d} beyond truncation cap {self.cap}")
        return self.coeffs.get(d, 0)

    def truncate(self, cap: Degree) -> QSeries:
        if not self.is_closed and not cap <= self.cap:
            raise ValueError(f"cannot extend a series truncated at {self.cap} to {cap}")
        return QSeries.truncated({d: self.coefficient(d) for d in degrees_up_to(cap)}, cap)

    def __str__(self):
        if self.is_closed:
            if not self.indices:
                return "1"
            return f"q^{self.numerator} / prod(1-q_b)"
        return "\n".join(f"{d}\t{c}" for d, c in sorted(self.coeffs.items(),
                                                       key=lambda kv: (kv[0].total(), kv[0].values)))


def metric(group: WeylGroup, u: WeylElement, v: WeylElement, parabolic) -> QSeries:
    """Quantum K-metric ``((O^u, O_v)) = q^dist(u,v) / prod_beta (1 - q_beta)``."""
    return QSeries.closed(dist(group, u, v, parabolic))


def metric_truncated(group: WeylGroup, u: WeylElement, v: WeylElement, parabolic,
                     cap: Degree) -> QSeries:
    """``sum_{d <= cap} q^d <O^u, O_v>_d``, evaluated term by term."""
    idx = complement(group, parabolic)
    if cap.indices != idx:
        raise ValueError(f"cap must be indexed by {idx}")
    return QSeries.truncated({d: gw_two_point(group, u, v, parabolic, d)
                              for d in degrees_up_to(cap)}, cap)


def chi_series(s: QSeries) -> Degree:
    """Multiply a closed-form series by ``prod_beta (1 - q_beta)``.

    The result is the monomial ``q^numerator``, returned as its exponent.
    """
    if not s.is_closed:
        raise ValueError("chi_series needs a closed-form series")
    return s.numerator
