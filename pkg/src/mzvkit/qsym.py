"""Deconcatenation coproduct, the induced action on words, and t-series maps.

Words ending in y form a free algebra on the letters z_i = x^(i-1) y.  The
deconcatenation coproduct on z-letters makes it a Hopf algebra isomorphic to
the quasi-symmetric functions; under that identification z_n is the n-th
power sum p_n, y^n is the elementary e_n, and the sum of all z-monomials of
weight n is the complete h_n.

The action of that algebra on arbitrary words is generated by

    1 . w = w,   u . x = 0,   u . y = x^k y if u = z_k else 0,
    u . (w1 w2) = sum over the coproduct of (u' . w1)(u'' . w2),

and acting by z_n reproduces the derivation with y -> x^n y.  Truncated
power series in a central variable t carry the induced automorphisms: the
h-series action sigma_t, its inverse via the alternating e-series, and the
exponential of the graded antisymmetric derivations.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .derivations import Derivation, derivation_Dn, ihara_kaneko
from .words import (
    DomainError,
    Poly,
    Word,
    X,
    Y,
    composition_of,
    compositions,
    is_h1_word,
    word_of,
)


class TensorPoly:
    """Finite rational combination of word-pair tensors u (x) v."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for pair, c in items:
                c = Fraction(c)
                if not c:
                    continue
                u, v = pair
                if not (is_h1_word(u) and is_h1_word(v)):
                    raise DomainError(f"tensor factor not in the y-ending subalgebra: {pair}")
                s = clean.get(pair, 0) + c
                if s:
                    clean[pair] = s
                else:
                    del clean[pair]
        self._terms = clean

    def items(self):
        return sorted(self._terms.items(), key=lambda t: ((len(t[0][0]), t[0][0]), (len(t[0][1]), t[0][1])))

    def coeff(self, u: Word, v: Word) -> Fraction:
        return self._terms.get((u, v), Fraction(0))

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, TensorPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        out = dict(self._terms)
        for pair, c in other._terms.items():
            s = out.get(pair, 0) + c
            if s:
                out[pair] = s
            else:
                del out[pair]
        t = TensorPoly()
        t._terms = out
        return t

    def __repr__(self):
        body = " + ".join(f"{c} ({u or '1'} (x) {v or '1'})" for (u, v), c in self.items())
        return f"TensorPoly({body or '0'})"


def coproduct(p) -> TensorPoly:
    """Deconcatenation coproduct in z-letters; input must lie in the y-ending subalgebra."""
    p = p if isinstance(p, Poly) else Poly.word(p)
    out = TensorPoly()
    for w, c in p.items():
        zs = composition_of(w)  # raises DomainError outside the domain
        out = out + TensorPoly(
            {(word_of(zs[:j]), word_of(zs[j:])): c for j in range(len(zs) + 1)}
        )
    return out


@lru_cache(maxsize=None)
def _act_word(zs: tuple, w: Word) -> Poly:
    if not zs:
        return Poly.word(w)
    if not w:
        return Poly.zero()
    if w[0] == X:
        return Poly.word(X) * _act_word(zs, w[1:])
    out = Poly.word(Y) * _act_word(zs, w[1:])
    out = out + Poly.word(X * zs[0] + Y) * _act_word(zs[1:], w[1:])
    return out


def act(u, w) -> Poly:
    """Action of an element of the y-ending subalgebra on an arbitrary Poly."""
    u = u if isinstance(u, Poly) else Poly.word(u)
    w = w if isinstance(w, Poly) else Poly.word(w)
    out = Poly.zero()
    for uw, cu in u.items():
        zs = composition_of(uw)
        for ww, cw in w.items():
            out = out + _act_word(zs, ww).scale(cu * cw)
    return out


def power_p(n: int) -> Poly:
    """Power-sum element: the single letter z_n."""
    if n < 1:
        raise DomainError(f"power-sum index must be >= 1: {n}")
    return Poly.word(X * (n - 1) + Y)


def elementary_e(n: int) -> Poly:
    """Elementary element: y^n."""
    if n < 0:
        raise DomainError(f"negative index: {n}")
    return Poly.word(Y * n)


@lru_cache(maxsize=None)
def complete_h(n: int) -> Poly:
    """Complete element: sum of all z-monomials of weight n (2^(n-1) terms)."""
    if n < 0:
        raise DomainError(f"negative index: {n}")
    return Poly({word_of(c): 1 for c in compositions(n)})


class TruncatedSeries:
    """Polynomial in t of bounded degree with Poly coefficients.

    All arithmetic truncates uniformly at the fixed order; two series compare
    equal only at the same order.
    """

    __slots__ = ("_coeffs", "order")

    def __init__(self, coeffs: Mapping, order: int):
        if order < 0:
            raise DomainError(f"negative truncation order: {order}")
        self.order = order
        self._coeffs = {
            k: p for k, p in coeffs.items() if 0 <= k <= order and p
        }

    @classmethod
    def constant(cls, p: Poly, order: int) -> "TruncatedSeries":
        return cls({0: p}, order)

    def coeff(self, k: int) -> Poly:
        return self._coeffs.get(k, Poly.zero())

    def items(self):
        return sorted(self._coeffs.items())

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self._coeffs == other._coeffs

    def __add__(self, other):
        self._check(other)
        out = dict(self._coeffs)
        for k, p in other._coeffs.items():
            out[k] = out.get(k, Poly.zero()) + p
        return TruncatedSeries(out, self.order)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            self._check(other)
            out: dict = {}
            for i, p in self._coeffs.items():
                for j, q in other._coeffs.items():
                    if i + j <= self.order:
                        out[i + j] = out.get(i + j, Poly.zero()) + p * q
            return TruncatedSeries(out, self.order)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def scale(self, c) -> "TruncatedSeries":
        return TruncatedSeries({k: p.scale(c) for k, p in self._coeffs.items()}, self.order)

    def map_coeffs(self, fn) -> "TruncatedSeries":
        return TruncatedSeries({k: fn(p) for k, p in self._coeffs.items()}, self.order)

    def _check(self, other):
        if self.order != other.order:
            raise DomainError(f"truncation orders differ: {self.order} != {other.order}")

    def __repr__(self):
        body = "; ".join(f"t^{k}: {p}" for k, p in self.items())
        return f"TruncatedSeries(order={self.order}, {body or '0'})"


def sigma_t(p, order: int) -> TruncatedSeries:
    """Automorphism whose t^k coefficient is the action of the complete h_k."""
    p = p if isinstance(p, Poly) else Poly.word(p)
    return TruncatedSeries({k: act(complete_h(k), p) for k in range(order + 1)}, order)


def sigma_t_inverse(p, order: int) -> TruncatedSeries:
    """Inverse of sigma_t: t^k coefficient is (-1)^k times the e_k action."""
    p = p if isinstance(p, Poly) else Poly.word(p)
    return TruncatedSeries(
        {k: act(elementary_e(k), p).scale((-1) ** k) for k in range(order + 1)}, order
    )


def sigma_bar_t(series: TruncatedSeries) -> TruncatedSeries:
    """Conjugate of sigma_t by the x/y swap, applied to a whole series."""
    out: dict = {}
    for i, p in series.items():
        for j in range(series.order - i + 1):
            q = act(complete_h(j), p.tau()).tau()
            if q:
                out[i + j] = out.get(i + j, Poly.zero()) + q
    return TruncatedSeries(out, series.order)


def phi_bar_sigma(p, order: int) -> TruncatedSeries:
    """The composite sigma_bar_t . sigma_t^(-1)."""
    return sigma_bar_t(sigma_t_inverse(p, order))


def _exp_graded_derivation(der_of_index, p: Poly, order: int) -> TruncatedSeries:
    """exp of sum_n t^n d_n / n applied to a constant series.

    The operator raises t-degree by at least 1, so at truncation order N only
    N iterated applications contribute and the exponential is a finite sum.
    """

    def step(coeffs: dict) -> dict:
        out: dict = {}
        for k, q in coeffs.items():
            for n in range(1, order - k + 1):
                r = der_of_index(n).apply(q).scale(Fraction(1, n))
                if r:
                    out[k + n] = out.get(k + n, Poly.zero()) + r
        return {k: q for k, q in out.items() if q}

    total = {0: p}
    term = {0: p}
    for m in range(1, order + 1):
        term = step(term)
        if not term:
            break
        for k, q in term.items():
            total[k] = total.get(k, Poly.zero()) + q.scale(Fraction(1, m))
        term = {k: q.scale(Fraction(1, m)) for k, q in term.items()}
    return TruncatedSeries(total, order)


@lru_cache(maxsize=None)
def _dn(n: int) -> Derivation:
    return derivation_Dn(n)


@lru_cache(maxsize=None)
def _partial(n: int) -> Derivation:
    return ihara_kaneko(n)


def sigma_t_exp(p, order: int) -> TruncatedSeries:
    """sigma_t computed as exp of the weighted sum of the y -> x^n y derivations."""
    p = p if isinstance(p, Poly) else Poly.word(p)
    return _exp_graded_derivation(_dn, p, order)


def exp_partial_t(p, order: int) -> TruncatedSeries:
    """exp of the weighted sum of the antisymmetric derivations."""
    p = p if isinstance(p, Poly) else Poly.word(p)
    return _exp_graded_derivation(_partial, p, order)
