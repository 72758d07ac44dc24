"""Exact-arithmetic words and polynomials over the two-letter alphabet {x, y}.

A word is a plain string over "xy"; the empty string is the multiplicative
unit.  A Poly is a finite linear combination of words with exact Fraction
coefficients (zero coefficients are never stored).  Compositions -- tuples of
positive integers -- give the exponent view of words ending in y through the
bijection (k1, ..., kl) <-> x^(k1-1) y x^(k2-1) y ... x^(kl-1) y.

Everything here is immutable after construction and safe to share across
threads.  Term order is graded lexicographic with x < y, which fixes all
printed and serialized output.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

X = "x"
Y = "y"

_SWAP_XY = str.maketrans("xy", "yx")
_WORD_RE = re.compile(r"^[xy]*$")
_ZWORD_RE = re.compile(r"^(?:\s*z\d+\s*)+$")
_COMP_RE = re.compile(r"^\(\s*(?:\d+\s*(?:,\s*\d+\s*)*)?\)$")

Word = str
Composition = tuple


class DomainError(ValueError):
    """An operation was applied outside its mathematical domain."""


def check_word(w: Word) -> Word:
    if not _WORD_RE.match(w):
        raise DomainError(f"not a word over {{x,y}}: {w!r}")
    return w


def weight(w: Word) -> int:
    """Total number of letters of the word."""
    return len(w)


def length(w: Word) -> int:
    """Number of y letters (the depth of the nested-series index)."""
    return w.count(Y)


def colength(w: Word) -> int:
    """Number of x letters; weight = length + colength."""
    return w.count(X)


def tau_word(w: Word) -> Word:
    """Reverse the word and swap x with y (anti-automorphism on letters)."""
    return w[::-1].translate(_SWAP_XY)


def tau(p) -> "Poly":
    """The anti-automorphism on polynomials; accepts a Poly or a word."""
    return (p if isinstance(p, Poly) else Poly.word(p)).tau()


def is_h1_word(w: Word) -> bool:
    """True if w is the unit or ends in y."""
    return w == "" or w.endswith(Y)


def is_h0_word(w: Word) -> bool:
    """True if w is the unit or starts with x and ends with y."""
    return w == "" or (w.startswith(X) and w.endswith(Y))


def is_admissible_word(w: Word) -> bool:
    """True if w is nonempty, starts with x and ends with y."""
    return bool(w) and w.startswith(X) and w.endswith(Y)


def word_of(c: Composition) -> Word:
    """Word x^(k1-1) y ... x^(kl-1) y of a composition (k1, ..., kl)."""
    if any(k < 1 for k in c):
        raise DomainError(f"composition parts must be >= 1: {c}")
    return "".join(X * (k - 1) + Y for k in c)


def composition_of(w: Word) -> Composition:
    """Inverse of word_of; defined only for words that are empty or end in y."""
    if not is_h1_word(w):
        raise DomainError(f"word does not end in y: {w!r}")
    if not w:
        return ()
    return tuple(len(seg) + 1 for seg in w.split(Y)[:-1])


def is_admissible_composition(c: Composition) -> bool:
    return bool(c) and c[0] > 1 and all(k >= 1 for k in c)


def dual_composition(c: Composition) -> Composition:
    """Dual of an admissible composition, computed on partial-sum sets.

    Take partial sums, reflect them in {1, ..., n} (a -> n+1-a, reversed),
    complement inside {1, ..., n}, and take successive differences.  An
    involution on admissible compositions; weight is preserved and length
    goes to weight - length.
    """
    if not c:
        raise DomainError("dual of the empty composition is undefined")
    if not is_admissible_composition(c):
        raise DomainError(f"composition is not admissible: {c}")
    n = sum(c)
    sums = list(itertools.accumulate(c))
    reflected = {n + 1 - a for a in sums}
    complement = [a for a in range(1, n + 1) if a not in reflected]
    return tuple(b - a for a, b in zip([0] + complement, complement))


@dataclass(frozen=True)
class CyclicClass:
    """Rotation class of a composition.

    representative is the lexicographically smallest rotation; members lists
    the distinct rotations in sorted order; multiplicity m is the largest m
    with c = u^m, so len(members) * m == len(c).
    """

    representative: Composition
    members: tuple
    multiplicity: int


def rotations(c: Composition) -> Iterator[Composition]:
    for i in range(len(c)):
        yield c[i:] + c[:i]


def cyclic_class(c: Composition) -> CyclicClass:
    if not c:
        raise DomainError("cyclic class of the empty composition is undefined")
    if any(k < 1 for k in c):
        raise DomainError(f"composition parts must be >= 1: {c}")
    members = tuple(sorted(set(rotations(c))))
    m = len(c) // len(members)
    return CyclicClass(min(members), members, m)


def compositions(n: int) -> Iterator[Composition]:
    """All 2^(n-1) compositions of n, in lexicographic order."""
    if n < 0:
        raise DomainError(f"negative weight: {n}")
    if n == 0:
        yield ()
        return
    for head in range(1, n + 1):
        for rest in compositions(n - head):
            yield (head,) + rest


def admissible_compositions(n: int) -> Iterator[Composition]:
    """Compositions of n with first part > 1 (2^(n-2) of them for n >= 2)."""
    for c in compositions(n):
        if c and c[0] > 1:
            yield c


def all_words(n: int) -> Iterator[Word]:
    """All 2^n words of weight n, in lexicographic (x < y) order."""
    for letters in itertools.product(X + Y, repeat=n):
        yield "".join(letters)


def admissible_words(n: int) -> list:
    """Admissible words of weight n in graded-lex order (the H0 basis)."""
    if n < 2:
        return []
    return [X + "".join(mid) + Y for mid in itertools.product(X + Y, repeat=n - 2)]


def _term_key(w: Word):
    return (len(w), w)


class Poly:
    """Finite rational linear combination of words.

    Immutable by convention: no method mutates self, so values can be cached
    and shared freely.  `+`, `-` are linear; `*` is the concatenation product
    of the word algebra when both factors are Poly, and scalar multiplication
    when one factor is an int or Fraction.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable | None = None):
        clean: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for w, c in items:
                check_word(w)
                c = Fraction(c)
                if c:
                    c = clean.get(w, 0) + c
                    if c:
                        clean[w] = c
                    else:
                        del clean[w]
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def one(cls) -> "Poly":
        return cls({"": 1})

    @classmethod
    def word(cls, w: Word, coeff=1) -> "Poly":
        return cls({w: coeff})

    def items(self) -> list:
        """Terms as (word, coefficient) pairs in graded-lex order."""
        return sorted(self._terms.items(), key=lambda t: _term_key(t[0]))

    def coeff(self, w: Word) -> Fraction:
        return self._terms.get(w, Fraction(0))

    def support(self) -> list:
        return sorted(self._terms, key=_term_key)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash(frozenset(self._terms.items()))
            object.__setattr__(self, "_hash", h)
        return h

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        out = dict(self._terms)
        for w, c in other._terms.items():
            s = out.get(w, 0) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return _raw(out)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        return _raw({w: -c for w, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, Poly):
            out: dict = {}
            for u, cu in self._terms.items():
                for v, cv in other._terms.items():
                    w = u + v
                    s = out.get(w, 0) + cu * cv
                    if s:
                        out[w] = s
                    else:
                        del out[w]
            return _raw(out)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise DomainError("negative powers are undefined in the word algebra")
        out = Poly.one()
        for _ in range(n):
            out = out * self
        return out

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        if not c:
            return Poly.zero()
        return _raw({w: cc * c for w, cc in self._terms.items()})

    def tau(self) -> "Poly":
        """Apply the anti-automorphism swapping x and y to every word."""
        return _raw({tau_word(w): c for w, c in self._terms.items()})

    def weight(self):
        """Common weight of the support, or None if zero or mixed-weight."""
        weights = {len(w) for w in self._terms}
        if len(weights) == 1:
            return weights.pop()
        return None

    def graded_parts(self) -> dict:
        """Split into weight-homogeneous parts, keyed by weight."""
        parts: dict = {}
        for w, c in self._terms.items():
            parts.setdefault(len(w), {})[w] = c
        return {k: _raw(v) for k, v in sorted(parts.items())}

    def length_part(self, l: int) -> "Poly":
        """Terms whose words contain exactly l letters y."""
        return _raw({w: c for w, c in self._terms.items() if w.count(Y) == l})

    def supported_in_h0(self) -> bool:
        return all(is_h0_word(w) for w in self._terms)

    def supported_in_h1(self) -> bool:
        return all(is_h1_word(w) for w in self._terms)

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)


def _raw(terms: dict) -> Poly:
    """Wrap an already-clean dict without re-validation (internal)."""
    p = Poly.__new__(Poly)
    object.__setattr__(p, "_terms", terms)
    object.__setattr__(p, "_hash", None)
    return p


# ---------------------------------------------------------------------------
# text and JSON syntax


def format_word(w: Word) -> str:
    return w if w else "1"


def format_composition(c: Composition) -> str:
    return "(" + ",".join(str(k) for k in c) + ")"


def format_poly(p: Poly) -> str:
    """Signed term list in graded-lex order, e.g. '2 xyxy + 4 xxyy'."""
    if not p:
        return "0"
    parts = []
    for i, (w, c) in enumerate(p.items()):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if w and mag == 1:
            body = format_word(w)
        elif w:
            body = f"{mag} {format_word(w)}"
        else:
            body = str(mag)
        if i == 0:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


def parse_word(text: str) -> Word:
    """Parse a word from letters ('xxy'), z-notation ('z2 z1'), '(2,1)', or '1'."""
    s = text.strip()
    if s == "1" or s == "":
        return ""
    if _WORD_RE.match(s):
        return s
    if _ZWORD_RE.match(s):
        parts = tuple(int(d) for d in re.findall(r"z(\d+)", s))
        if any(k < 1 for k in parts):
            raise DomainError(f"z-index must be >= 1: {text!r}")
        return word_of(parts)
    if _COMP_RE.match(s):
        return word_of(parse_composition(s))
    raise DomainError(f"cannot parse word: {text!r}")


def parse_composition(text: str) -> Composition:
    s = text.strip()
    if not _COMP_RE.match(s):
        raise DomainError(f"cannot parse composition: {text!r}")
    inner = s[1:-1].strip()
    if not inner:
        return ()
    parts = tuple(int(p) for p in inner.split(","))
    if any(k < 1 for k in parts):
        raise DomainError(f"composition parts must be >= 1: {text!r}")
    return parts


_TERM_RE = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?:(?P<num>\d+)(?:/(?P<den>\d+))?)?\s*(?P<word>[xy]+|1)?\s*"
)


def parse_poly(text: str) -> Poly:
    """Parse the output of format_poly back into a Poly."""
    s = text.strip()
    if s == "0" or not s:
        return Poly.zero()
    terms: list = []
    pos = 0
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos or (m.group("num") is None and m.group("word") is None):
            raise DomainError(f"cannot parse poly near {s[pos:]!r}")
        c = Fraction(int(m.group("num") or 1), int(m.group("den") or 1))
        if m.group("sign") == "-":
            c = -c
        w = m.group("word") or "1"
        terms.append(("" if w == "1" else w, c))
        pos = m.end()
    return Poly(terms)


def poly_to_obj(p: Poly) -> list:
    """JSON-ready form: list of {word, num, den} in deterministic order."""
    return [
        {"word": format_word(w), "num": c.numerator, "den": c.denominator}
        for w, c in p.items()
    ]


def poly_from_obj(obj: Iterable) -> Poly:
    terms = []
    for t in obj:
        w = t["word"]
        terms.append(("" if w == "1" else w, Fraction(t["num"], t["den"])))
    return Poly(terms)
