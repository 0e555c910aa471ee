"""The free associative algebra K<x1..xn> and its extension by the letter t."""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Iterable, Mapping
from itertools import groupby

from .coeff import ParamRing, Scalar, param_ring
from .ordering import HOMOGENIZER, Cmp, OrderingSpec

__all__ = ["Word", "FreePoly", "free_compare", "homogenize", "dehomogenize", "format_word"]

Word = tuple  # tuple[str, ...]; the empty tuple is the monomial 1


def free_compare(m: Word, n: Word, spec: OrderingSpec) -> Cmp:
    """Graded comparison of words; right-lex for ``direct`` specs, left-lex for ``reverse``."""
    km = spec.word_key(spec.encode(m))
    kn = spec.word_key(spec.encode(n))
    return Cmp.LESS if km < kn else Cmp.GREATER if km > kn else Cmp.EQUAL


def format_word(w: Word) -> str:
    if not w:
        return "1"
    parts = []
    for a, run in groupby(w):
        k = len(list(run))
        parts.append(a if k == 1 else f"{a}^{k}")
    return "*".join(parts)


class FreePoly:
    """Noncommutative polynomial with terms sorted descending under ``spec``.

    Instances are immutable.  ``terms`` is a tuple of ``(word, coeff)``
    pairs, leading term first; the zero polynomial has no terms.
    """

    __slots__ = ("spec", "ring", "terms")

    def __init__(self, data: Mapping | Iterable, spec: OrderingSpec, ring: ParamRing | None = None):
        ring = ring or param_ring()
        acc: dict = defaultdict(lambda: ring.zero)
        items = data.items() if isinstance(data, Mapping) else data
        for w, c in items:
            w = tuple(w)
            spec.encode(w)  # validates letters
            acc[w] = acc[w] + ring(c)
        terms = [(w, c) for w, c in acc.items() if c]
        terms.sort(key=lambda wc: spec.word_key(spec.encode(wc[0])), reverse=True)
        self.spec = spec
        self.ring = ring
        self.terms = tuple(terms)

    @classmethod
    def _raw(cls, terms, spec, ring) -> FreePoly:
        p = object.__new__(cls)
        p.spec, p.ring, p.terms = spec, ring, tuple(terms)
        return p

    @classmethod
    def parse(cls, text: str, spec: OrderingSpec, ring: ParamRing | None = None) -> FreePoly:
        from .parsing import parse_poly

        return parse_poly(text, spec, ring or param_ring())

    @classmethod
    def word(cls, w: Word, spec: OrderingSpec, ring: ParamRing | None = None) -> FreePoly:
        ring = ring or param_ring()
        return cls({tuple(w): ring.one}, spec, ring)

    # -- accessors --------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    @property
    def lm(self) -> Word:
        return self.terms[0][0]

    @property
    def lc(self) -> Scalar:
        return self.terms[0][1]

    @property
    def lt(self):
        return self.terms[0]

    def degree(self) -> int:
        """Top degree; -1 for the zero polynomial."""
        return max((len(w) for w, _ in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({len(w) for w, _ in self.terms}) <= 1

    def letters(self) -> set:
        return {a for w, _ in self.terms for a in w}

    def homogeneous_components(self) -> dict[int, FreePoly]:
        comps: dict[int, list] = defaultdict(list)
        for w, c in self.terms:
            comps[len(w)].append((w, c))
        return {k: FreePoly._raw(v, self.spec, self.ring) for k, v in comps.items()}

    # -- arithmetic -------------------------------------------------------
    def _combine(self, other: FreePoly, sign: int) -> FreePoly:
        acc = dict(self.terms)
        zero = self.ring.zero
        for w, c in other.terms:
            acc[w] = acc.get(w, zero) + c if sign > 0 else acc.get(w, zero) - c
        return FreePoly(((w, c) for w, c in acc.items() if c), self.spec, self.ring)

    def __add__(self, other):
        if not isinstance(other, FreePoly):
            other = FreePoly({(): other}, self.spec, self.ring)
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, FreePoly):
            other = FreePoly({(): other}, self.spec, self.ring)
        return self._combine(other, -1)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return FreePoly._raw([(w, -c) for w, c in self.terms], self.spec, self.ring)

    def __mul__(self, other):
        if isinstance(other, FreePoly):
            acc: dict = {}
            zero = self.ring.zero
            for u, a in self.terms:
                for v, b in other.terms:
                    w = u + v
                    acc[w] = acc.get(w, zero) + a * b
            return FreePoly(((w, c) for w, c in acc.items() if c), self.spec, self.ring)
        c = self.ring(other)
        if not c:
            return FreePoly._raw((), self.spec, self.ring)
        return FreePoly._raw([(w, a * c) for w, a in self.terms], self.spec, self.ring)

    def __rmul__(self, other):
        c = self.ring(other)
        if not c:
            return FreePoly._raw((), self.spec, self.ring)
        return FreePoly._raw([(w, c * a) for w, a in self.terms], self.spec, self.ring)

    def monic(self) -> FreePoly:
        if not self.terms or self.lc.is_one():
            return self
        inv = self.lc.inverse()
        return FreePoly._raw([(w, c * inv) for w, c in self.terms], self.spec, self.ring)

    def with_spec(self, spec: OrderingSpec) -> FreePoly:
        """Explicit conversion to another ordering (re-sorts the terms)."""
        return FreePoly(self.terms, spec, self.ring)

    # -- comparison / printing -------------------------------------------
    def __eq__(self, other):
        if isinstance(other, FreePoly):
            return self.terms == other.terms
        if not self.terms:
            return other == 0
        return NotImplemented

    def __hash__(self):
        return hash(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for k, (w, c) in enumerate(self.terms):
            neg, body = _coeff_str(c)
            mono = format_word(w)
            if body is None:
                s = mono
            elif w:
                s = f"{body}*{mono}"
            else:
                s = body
            if k == 0:
                out.append(("-" if neg else "") + s)
            else:
                out.append((" - " if neg else " + ") + s)
        return "".join(out)

    def __repr__(self):
        return f"FreePoly({str(self)!r})"


def _coeff_str(c: Scalar):
    """(negative?, printed magnitude or None for unit) for a term coefficient."""
    if c.is_one():
        return False, None
    if (-c).is_one():
        return True, None
    s = str(c)
    if s.startswith("-") and c.needs_parens():
        return True, f"({-c})"
    if c.needs_parens() or "/(" in s:
        return False, f"({s})"
    if s.startswith("-"):
        return True, s[1:]
    return False, s


def homogenize(f: FreePoly) -> FreePoly:
    """Pad every term with t up to the top degree of ``f``.

    The t-block goes on the side that keeps the result in normal form
    modulo the commutators [t, x]: on the right for right-lex orderings,
    on the left for left-lex orderings.
    """
    if not f:
        raise ValueError("homogenization of the zero polynomial is undefined")
    if HOMOGENIZER in f.letters():
        raise ValueError("homogenize expects a polynomial over the base alphabet")
    d = f.degree()
    right = f.spec.direction == "direct"
    terms = []
    for w, c in f.terms:
        pad = (HOMOGENIZER,) * (d - len(w))
        terms.append((w + pad if right else pad + w, c))
    return FreePoly(terms, f.spec, f.ring)


def dehomogenize(f: FreePoly) -> FreePoly:
    """Apply t -> 1 and collect like terms."""
    return FreePoly(
        ((tuple(a for a in w if a != HOMOGENIZER), c) for w, c in f.terms), f.spec, f.ring
    )
