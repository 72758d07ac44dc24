"""Generation of kernel-relation families and exact rank computation.

Each generator returns weight-homogeneous Poly elements supported on
admissible words, every one a claimed member of the kernel of the zeta
evaluation.  Elements are normalized (integer coefficients with content 1,
first coefficient positive in graded-lex order) and deduplicated per family.

Ranks of relation spans are computed by Gaussian elimination over exact
rationals in the admissible-word basis, with first-nonzero-column pivoting in
the deterministic word order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from .derivations import (
    conjugate,
    cyclic_C,
    cyclic_C_bar,
    derivation_D,
    ihara_kaneko,
)
from .products import double_shuffle, harmonic, shuffle
from .qsym import act, complete_h
from .words import (
    DomainError,
    Poly,
    admissible_words,
    compositions,
    cyclic_class,
    format_composition,
    is_admissible_word,
    word_of,
)

FAMILIES = (
    "duality",
    "derivation",
    "cyclic",
    "sum",
    "hoffman43",
    "ihara_kaneko",
    "ohno",
    "double_shuffle",
)


@dataclass(frozen=True)
class Relation:
    """A weight-homogeneous kernel element with its provenance."""

    element: Poly
    weight: int
    family: str
    params: tuple  # sorted (key, value) pairs, JSON-friendly

    def label(self) -> str:
        inside = ", ".join(f"{k}={v}" for k, v in self.params)
        return f"{self.family}[w={self.weight}; {inside}]"


def normalize(p: Poly) -> Poly:
    """Scale to integer coefficients with content 1 and positive leading term."""
    if not p:
        return p
    items = p.items()
    den = lcm(*(c.denominator for _, c in items))
    num = gcd(*(abs(c.numerator) for _, c in items))
    scale = Fraction(den, num)
    if items[0][1] < 0:
        scale = -scale
    return p.scale(scale)


def _freeze(p: Poly) -> tuple:
    return tuple((w, c) for w, c in p.items())


def _make(element: Poly, weight: int, family: str, params: dict) -> Relation:
    if element.weight() != weight:
        raise DomainError(f"relation element is not homogeneous of weight {weight}")
    for w in element.support():
        if not is_admissible_word(w):
            raise DomainError(f"relation support leaves the admissible basis: {w!r}")
    return Relation(normalize(element), weight, family, tuple(sorted(params.items())))


def _collect(candidates) -> list:
    out = []
    seen = set()
    for element, weight, family, params in candidates:
        if not element:
            continue
        rel = _make(element, weight, family, params)
        key = _freeze(rel.element)
        if key not in seen:
            seen.add(key)
            out.append(rel)
    return out


def gen_duality(weight: int) -> list:
    """w minus its dual for each admissible word; self-dual words drop out."""
    if weight < 2:
        return []
    return _collect(
        (Poly.word(w) - Poly.word(w).tau(), weight, "duality", {"source": w})
        for w in admissible_words(weight)
    )


def gen_derivation(weight: int) -> list:
    """Difference of the basic derivation and its conjugate on admissible words."""
    d = derivation_D()
    dbar = conjugate(d)
    return _collect(
        (d.apply(w) - dbar.apply(w), weight, "derivation", {"source": w})
        for w in admissible_words(weight - 1)
    )


def gen_cyclic_sum(weight: int) -> list:
    """Cyclic-derivation difference, one representative per rotation class.

    Sources are the y-ending words of weight - 1 that are not powers of y,
    enumerated as compositions up to rotation.
    """
    if weight < 2:
        return []
    seen_classes = set()
    candidates = []
    for c in compositions(weight - 1):
        if not c or set(c) == {1}:  # powers of y are excluded
            continue
        rep = cyclic_class(c).representative
        if rep in seen_classes:
            continue
        seen_classes.add(rep)
        w = word_of(rep)
        candidates.append(
            (
                cyclic_C(w) - cyclic_C_bar(w),
                weight,
                "cyclic",
                {"source": format_composition(rep)},
            )
        )
    return _collect(candidates)


def _fixed_length_sum(weight: int, l: int) -> Poly:
    return Poly({w: 1 for w in admissible_words(weight) if w.count("y") == l})


def gen_sum_theorem(weight: int) -> list:
    """Adjacent-length differences of the fixed-weight admissible sums."""
    return _collect(
        (
            _fixed_length_sum(weight, l) - _fixed_length_sum(weight, l + 1),
            weight,
            "sum",
            {"l": l},
        )
        for l in range(1, weight - 1)
    )


def gen_hoffman43(weight: int) -> list:
    """y sh w - y * w for admissible w; matches the derivation family up to sign."""
    y = Poly.word("y")
    return _collect(
        (
            shuffle(y, Poly.word(w)) - harmonic(y, Poly.word(w)),
            weight,
            "hoffman43",
            {"source": w},
        )
        for w in admissible_words(weight - 1)
    )


def gen_ihara_kaneko(n: int, weight: int) -> list:
    """Images of admissible words under the n-th antisymmetric derivation."""
    if n < 1:
        raise DomainError(f"index must be >= 1: {n}")
    dn = ihara_kaneko(n)
    return _collect(
        (dn.apply(w), weight, "ihara_kaneko", {"n": n, "source": w})
        for w in admissible_words(weight - n)
    )


def gen_ohno(n: int, weight: int) -> list:
    """h_n acting on the dual minus h_n acting on the word, per admissible word."""
    if n < 0:
        raise DomainError(f"negative index: {n}")
    hn = complete_h(n)
    candidates = []
    for w in admissible_words(weight - n):
        p = Poly.word(w)
        candidates.append(
            (act(hn, p.tau()) - act(hn, p), weight, "ohno", {"n": n, "source": w})
        )
    return _collect(candidates)


def gen_double_shuffle(weight: int) -> list:
    """Shuffle-minus-harmonic differences over unordered admissible pairs."""
    candidates = []
    for a in range(2, weight - 1):
        for u in admissible_words(a):
            for v in admissible_words(weight - a):
                if (len(u), u) <= (len(v), v):
                    candidates.append(
                        (
                            double_shuffle(Poly.word(u), Poly.word(v)),
                            weight,
                            "double_shuffle",
                            {"u": u, "v": v},
                        )
                    )
    return _collect(candidates)


def generate(weight: int, families=FAMILIES) -> list:
    """All relations of the requested families at one weight, deduplicated globally."""
    out = []
    seen = set()
    for family in families:
        if family not in FAMILIES:
            raise DomainError(f"unknown family: {family!r}")
        if family == "duality":
            rels = gen_duality(weight)
        elif family == "derivation":
            rels = gen_derivation(weight)
        elif family == "cyclic":
            rels = gen_cyclic_sum(weight)
        elif family == "sum":
            rels = gen_sum_theorem(weight)
        elif family == "hoffman43":
            rels = gen_hoffman43(weight)
        elif family == "ihara_kaneko":
            rels = [r for n in range(1, weight - 1) for r in gen_ihara_kaneko(n, weight)]
        elif family == "ohno":
            rels = [r for n in range(1, weight - 1) for r in gen_ohno(n, weight)]
        else:
            rels = gen_double_shuffle(weight)
        for r in rels:
            key = (r.family, _freeze(r.element))
            if key not in seen:
                seen.add(key)
                out.append(r)
    return out


class RowSpace:
    """Row space over exact rationals, kept in reduced echelon form."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: list = []  # each row normalized to leading coefficient 1
        self.pivots: list = []

    def _reduce(self, vec: list) -> list:
        vec = list(vec)
        for row, piv in zip(self.rows, self.pivots):
            c = vec[piv]
            if c:
                for j in range(piv, self.ncols):
                    vec[j] -= c * row[j]
        return vec

    def add(self, vec) -> bool:
        """Insert a vector; True if it enlarged the span."""
        vec = self._reduce(vec)
        for piv in range(self.ncols):
            if vec[piv]:
                inv = Fraction(1) / vec[piv]
                vec = [c * inv for c in vec]
                for row in self.rows:
                    c = row[piv]
                    if c:
                        for j in range(self.ncols):
                            row[j] -= c * vec[j]
                self.rows.append(vec)
                self.pivots.append(piv)
                order = sorted(range(len(self.pivots)), key=self.pivots.__getitem__)
                self.rows = [self.rows[i] for i in order]
                self.pivots = [self.pivots[i] for i in order]
                return True
        return False

    def contains(self, vec) -> bool:
        return not any(self._reduce(vec))

    @property
    def rank(self) -> int:
        return len(self.rows)


def poly_vector(p: Poly, basis: list) -> list:
    index = {w: i for i, w in enumerate(basis)}
    vec = [Fraction(0)] * len(basis)
    for w, c in p.items():
        if w not in index:
            raise DomainError(f"word outside the basis: {w!r}")
        vec[index[w]] = c
    return vec


@dataclass
class RankReport:
    """Exact ranks of relation spans at one weight over the admissible basis."""

    weight: int
    basis: list
    family_ranks: dict
    cumulative_rank: int
    nullity: int
    relation_counts: dict = field(default_factory=dict)

    def to_obj(self) -> dict:
        return {
            "weight": self.weight,
            "basis": self.basis,
            "family_ranks": self.family_ranks,
            "relation_counts": self.relation_counts,
            "cumulative_rank": self.cumulative_rank,
            "nullity": self.nullity,
        }


def rank_report(weight: int, families=FAMILIES) -> RankReport:
    if weight < 2:
        raise DomainError(f"weight must be >= 2: {weight}")
    basis = admissible_words(weight)
    union = RowSpace(len(basis))
    family_ranks: dict = {}
    counts: dict = {}
    for family in families:
        rels = generate(weight, [family])
        counts[family] = len(rels)
        solo = RowSpace(len(basis))
        for r in rels:
            vec = poly_vector(r.element, basis)
            solo.add(vec)
            union.add(vec)
        family_ranks[family] = solo.rank
    return RankReport(
        weight=weight,
        basis=basis,
        family_ranks=family_ranks,
        cumulative_rank=union.rank,
        nullity=len(basis) - union.rank,
        relation_counts=counts,
    )
