"""The two commutative products on the word algebra.

The shuffle product interleaves letters:

    1 sh w = w sh 1 = w
    a w1 sh b w2 = a (w1 sh b w2) + b (a w1 sh w2)      for letters a, b.

The harmonic (stuffle) product models multiplication of nested series:

    1 * w = w * 1 = w
    x^p * w = w x^p
    x^(p-1) y w1 * x^(q-1) y w2 =
        x^(p-1) y (w1 * x^(q-1) y w2)
      + x^(q-1) y (x^(p-1) y w1 * w2)
      + x^(p+q-1) y (w1 * w2).

Both recursions are memoized on word pairs; Poly inputs extend bilinearly.
The word-level caches are only ever filled with immutable values, so
concurrent readers are safe.
"""

from __future__ import annotations

from functools import lru_cache

from .words import DomainError, Poly, Word, X, Y, is_h0_word


@lru_cache(maxsize=None)
def _shuffle_words(u: Word, v: Word) -> Poly:
    if not u:
        return Poly.word(v)
    if not v:
        return Poly.word(u)
    left = Poly.word(u[0]) * _shuffle_words(u[1:], v)
    right = Poly.word(v[0]) * _shuffle_words(u, v[1:])
    return left + right


@lru_cache(maxsize=None)
def _harmonic_words(u: Word, v: Word) -> Poly:
    if not u:
        return Poly.word(v)
    if not v:
        return Poly.word(u)
    if Y not in u:  # pure power of x: x^p * w = w x^p
        return Poly.word(v + u)
    if Y not in v:
        return Poly.word(u + v)
    p = u.index(Y)  # u = x^p y u1
    q = v.index(Y)
    u1 = u[p + 1 :]
    v1 = v[q + 1 :]
    out = Poly.word(u[: p + 1]) * _harmonic_words(u1, v)
    out = out + Poly.word(v[: q + 1]) * _harmonic_words(u, v1)
    out = out + Poly.word(X * (p + q + 1) + Y) * _harmonic_words(u1, v1)
    return out


def _bilinear(word_product, u: Poly, v: Poly) -> Poly:
    out = Poly.zero()
    for wu, cu in u.items():
        for wv, cv in v.items():
            out = out + word_product(wu, wv).scale(cu * cv)
    return out


def _as_poly(p) -> Poly:
    return p if isinstance(p, Poly) else Poly.word(p)


def shuffle(u, v) -> Poly:
    """Shuffle product; accepts Poly or word arguments."""
    return _bilinear(_shuffle_words, _as_poly(u), _as_poly(v))


def harmonic(u, v) -> Poly:
    """Harmonic (stuffle) product; accepts Poly or word arguments."""
    return _bilinear(_harmonic_words, _as_poly(u), _as_poly(v))


def double_shuffle(u, v) -> Poly:
    """Difference u sh v - u * v of the two products.

    Both inputs must be supported on admissible words (or the unit), where
    the zeta evaluation is defined; the result lies in its kernel.
    """
    u = _as_poly(u)
    v = _as_poly(v)
    for p in (u, v):
        for w in p.support():
            if not is_h0_word(w):
                raise DomainError(f"word is not admissible: {w!r}")
    return shuffle(u, v) - harmonic(u, v)
