"""Derivations and cyclic derivations of the word algebra.

An ordinary derivation is determined by its images of x and y and extends by
the Leibniz rule F(uv) = F(u)v + uF(v).  The basic one here sends x to 0 and
y to xy; raising the x-power gives its higher relatives, and conjugating by
the x/y swap gives the mirrored family.  The antisymmetric combination with
image x (x+y)^(n-1) y on x is exposed as well.

A cyclic derivation is trace-like rather than Leibniz: its defining law is

    (C(f1 f2), f) = (C(f1), f2 f) + (C(f2), f f1),

and everything the relation machinery needs is the canonical element
(C(w), 1) together with the explicit pairing (C(w), f).  The generator C used
throughout sends x to 0 and pairs y as (C(y), f) = x f y.  Its conjugate is
tau . C . tau.  Closed z-letter forms of both are provided as independent
implementations for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .words import (
    DomainError,
    Poly,
    Word,
    X,
    Y,
    all_words,
    composition_of,
    tau_word,
    word_of,
)


@dataclass(frozen=True)
class Derivation:
    """A derivation of the word algebra, given by its images of x and y."""

    image_of_x: Poly
    image_of_y: Poly

    def image_of(self, letter: str) -> Poly:
        return self.image_of_x if letter == X else self.image_of_y

    def apply(self, p) -> Poly:
        """Leibniz extension over each word, linear over terms."""
        p = p if isinstance(p, Poly) else Poly.word(p)
        out = Poly.zero()
        for w, c in p.items():
            out = out + _apply_word(self, w).scale(c)
        return out

    __call__ = apply


@lru_cache(maxsize=None)
def _apply_word(d: Derivation, w: Word) -> Poly:
    out = Poly.zero()
    for i, a in enumerate(w):
        img = d.image_of(a)
        if img:
            out = out + Poly.word(w[:i]) * img * Poly.word(w[i + 1 :])
    return out


def derivation_D() -> Derivation:
    """The derivation with x -> 0 and y -> xy; bumps one z-index by 1."""
    return Derivation(Poly.zero(), Poly.word(X + Y))


def derivation_Dn(n: int) -> Derivation:
    """The derivation with x -> 0 and y -> x^n y."""
    if n < 1:
        raise DomainError(f"index must be >= 1: {n}")
    return Derivation(Poly.zero(), Poly.word(X * n + Y))


def conjugate(d: Derivation) -> Derivation:
    """Conjugate by the x/y swap: an involution on derivations."""
    return Derivation(d.image_of_y.tau(), d.image_of_x.tau())


def sum_of_words(m: int) -> Poly:
    """Sum of all 2^m words of weight m, i.e. (x + y)^m expanded."""
    if m < 0:
        raise DomainError(f"negative weight: {m}")
    return Poly({w: 1 for w in all_words(m)})


def ihara_kaneko(n: int) -> Derivation:
    """Antisymmetric derivation with x -> x (x+y)^(n-1) y and y -> its negative.

    The image of y is forced: antisymmetry plus killing x + y leave a unique
    consistent completion.
    """
    if n < 1:
        raise DomainError(f"index must be >= 1: {n}")
    img = Poly.word(X) * sum_of_words(n - 1) * Poly.word(Y)
    return Derivation(img, -img)


def _as_poly(p) -> Poly:
    return p if isinstance(p, Poly) else Poly.word(p)


def _linear(word_fn, p) -> Poly:
    out = Poly.zero()
    for w, c in _as_poly(p).items():
        out = out + word_fn(w).scale(c)
    return out


def cyclic_C(p) -> Poly:
    """Canonical element (C(w), 1): sum over y positions of the x...y rotation.

    For w = a1 ... ak, each position i with ai = y contributes
    x a_{i+1} ... a_k a_1 ... a_{i-1} y.  Pure x-powers and the unit map to 0.
    Linear in Poly arguments; invariant under rotation of the input word.
    """
    return _linear(_cyclic_word, p)


@lru_cache(maxsize=None)
def _cyclic_word(w: Word) -> Poly:
    out = Poly.zero()
    for i, a in enumerate(w):
        if a == Y:
            out = out + Poly.word(X + w[i + 1 :] + w[:i] + Y)
    return out


def cyclic_C_pair(w: Word, f: Word) -> Poly:
    """Full pairing (C(w), f); reduces to cyclic_C at f = the unit word."""
    out = Poly.zero()
    for i, a in enumerate(w):
        if a == Y:
            out = out + Poly.word(X + w[i + 1 :] + f + w[:i] + Y)
    return out


def cyclic_C_bar(p) -> Poly:
    """Conjugate cyclic derivation: tau . cyclic_C . tau."""
    return cyclic_C(_as_poly(p).tau()).tau()


def cyclic_C_zform(w: Word) -> Poly:
    """Closed form of cyclic_C on z-words: bump each z-index in turn and rotate.

    z_{i1} ... z_{il}  ->  sum over j of  z_{ij + 1} z_{i(j+1)} ... z_{i(j-1)}.
    Defined for words of the y-ending subalgebra only; independent of the
    position-based implementation, for cross-checking.
    """
    c = composition_of(w)
    out = Poly.zero()
    for j in range(len(c)):
        rot = c[j:] + c[:j]
        out = out + Poly.word(word_of((rot[0] + 1,) + rot[1:]))
    return out


def cyclic_C_bar_zform(w: Word) -> Poly:
    """Closed double-sum form of the conjugate on z-words.

    z_{i1} ... z_{il}  ->  sum over positions j with ij >= 2 and q = 0 .. ij-2
    of  z_{ij - q} z_{i(j+1)} ... z_{i(j-1)} z_{q+1}.
    """
    c = composition_of(w)
    out = Poly.zero()
    for j, k in enumerate(c):
        if k < 2:
            continue
        rest = c[j + 1 :] + c[:j]
        for q in range(k - 1):
            out = out + Poly.word(word_of((k - q,) + rest + (q + 1,)))
    return out


def graded_by_length(p: Poly) -> dict:
    """Split a Poly by y-count, viewing each y as carrying one formal t.

    This is the expansion of substituting t*y for y: the coefficient of t^d
    is the part of p whose words contain exactly d letters y.
    """
    parts: dict = {}
    for w, c in p.items():
        parts.setdefault(w.count(Y), []).append((w, c))
    return {d: Poly(terms) for d, terms in sorted(parts.items())}


def apply_graded(word_fn, graded: dict) -> dict:
    """Apply a linear word map degree-by-degree to a t-graded family."""
    out: dict = {}
    for d, poly in graded.items():
        q = _linear(word_fn, poly)
        if q:
            out[d] = out.get(d, Poly.zero()) + q
    return {d: p for d, p in sorted(out.items()) if p}
