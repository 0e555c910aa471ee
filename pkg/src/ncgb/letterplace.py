"""Multilinear letterplace monomials and polynomials.

A multilinear monomial occupies the consecutive places ``offset+1 ..
offset+d`` with exactly one letter per place, so it is stored as an offset
plus a body word.  General commutative letterplace monomials never arise in
the completion (the multilinearity criterion keeps every stored polynomial
multilinear) and are not modelled.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coeff import ParamRing, Scalar, param_ring
from .errors import InconsistentIdealError, NormalFormError
from .freealg import FreePoly, Word
from .ordering import HOMOGENIZER, OrderingSpec

__all__ = [
    "LPMonomial",
    "LPPoly",
    "shift",
    "embed",
    "unembed",
    "weight",
    "multideg",
    "psi_star",
    "format_body",
]

NEG_INF = float("-inf")


@dataclass(frozen=True)
class LPMonomial:
    offset: int = 0
    body: Word = ()

    @property
    def degree(self) -> int:
        return len(self.body)

    def __str__(self):
        return format_body(self.body, self.offset)


def format_body(body, offset: int = 0) -> str:
    if not body:
        return "1"
    return "*".join(f"{a}({offset + k + 1})" for k, a in enumerate(body))


def shift(i: int, m: LPMonomial) -> LPMonomial:
    if i < 0:
        raise ValueError("shift amount must be natural")
    return LPMonomial(m.offset + i, m.body)


def embed(m: Word, direction: str = "direct") -> LPMonomial:
    """Word -> multilinear monomial at offset 0 (reversed for ``reverse``)."""
    m = tuple(m)
    if direction == "direct":
        return LPMonomial(0, m)
    if direction == "reverse":
        return LPMonomial(0, m[::-1])
    raise ValueError(f"unknown embedding direction {direction!r}")


def unembed(m: LPMonomial, direction: str = "direct") -> Word:
    if direction == "direct":
        return tuple(m.body)
    if direction == "reverse":
        return tuple(m.body)[::-1]
    raise ValueError(f"unknown embedding direction {direction!r}")


def weight(m: LPMonomial):
    """Highest occupied place; -inf for the monomial 1."""
    if not m.body:
        return NEG_INF
    return m.offset + len(m.body)


def multideg(m: LPMonomial) -> tuple[int, ...]:
    """Place occupancy (mu_1, ..., mu_w); the empty tuple for 1."""
    if not m.body:
        return ()
    return (0,) * m.offset + (1,) * len(m.body)


class LPPoly:
    """Multihomogeneous multilinear letterplace polynomial.

    ``terms`` holds ``(code, coeff)`` pairs where ``code`` is the encoded
    body (see :class:`~ncgb.ordering.OrderingSpec`), all of the same length,
    sorted descending under the place ordering.  Every term sits at the same
    ``offset``.
    """

    __slots__ = ("spec", "ring", "offset", "terms")

    def __init__(self, spec: OrderingSpec, terms, offset: int = 0,
                 ring: ParamRing | None = None, presorted: bool = False):
        terms = [(w, c) for w, c in terms if c]
        if not presorted:
            terms.sort(key=lambda wc: wc[0][::-1], reverse=True)
        if len({len(w) for w, _ in terms}) > 1:
            raise ValueError("letterplace polynomial is not multihomogeneous")
        self.spec = spec
        self.ring = ring or (terms[0][1].ring if terms else param_ring())
        self.offset = offset
        self.terms = tuple(terms)

    @classmethod
    def from_words(cls, spec: OrderingSpec, items, offset: int = 0, ring=None) -> LPPoly:
        """Build from ``(body_word, coeff)`` pairs given in place order."""
        ring = ring or param_ring()
        acc: dict = {}
        for body, c in items:
            code = spec.encode(body)
            acc[code] = acc.get(code, ring.zero) + ring(c)
        return cls(spec, acc.items(), offset, ring)

    @classmethod
    def from_free(cls, f: FreePoly) -> LPPoly:
        """Letterplace image of a homogeneous free polynomial (embedding per its spec)."""
        if not f.is_homogeneous():
            raise ValueError("only homogeneous polynomials have multilinear images")
        spec = f.spec
        return cls(spec, [(spec.to_body(spec.encode(w)), c) for w, c in f.terms], 0, f.ring)

    def to_free(self) -> FreePoly:
        spec = self.spec
        return FreePoly([(spec.decode(spec.from_body(w)), c) for w, c in self.terms], spec, self.ring)

    # -- accessors --------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    @property
    def degree(self) -> int:
        return len(self.terms[0][0]) if self.terms else 0

    @property
    def lm(self) -> LPMonomial:
        return LPMonomial(self.offset, self.spec.decode(self.terms[0][0]))

    @property
    def lc(self) -> Scalar:
        return self.terms[0][1]

    def words(self) -> list[tuple[Word, Scalar]]:
        return [(self.spec.decode(w), c) for w, c in self.terms]

    def shifted(self, i: int) -> LPPoly:
        return LPPoly(self.spec, self.terms, self.offset + i, self.ring, presorted=True)

    def at_offset(self, offset: int) -> LPPoly:
        return LPPoly(self.spec, self.terms, offset, self.ring, presorted=True)

    def monic(self) -> LPPoly:
        if not self.terms or self.lc.is_one():
            return self
        inv = self.lc.inverse()
        return LPPoly(self.spec, [(w, c * inv) for w, c in self.terms], self.offset,
                      self.ring, presorted=True)

    def __neg__(self):
        return LPPoly(self.spec, [(w, -c) for w, c in self.terms], self.offset,
                      self.ring, presorted=True)

    def is_normal_mod_commutators(self) -> bool:
        """True when every body is a base-letter block followed by a t-block."""
        t = self.spec.t_char
        return all(t not in w.rstrip(t) for w, _ in self.terms)

    def trailing_t(self) -> int:
        """Minimum number of trailing t's over the terms."""
        t = self.spec.t_char
        return min(len(w) - len(w.rstrip(t)) for w, _ in self.terms)

    # -- comparison / printing -------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, LPPoly):
            return NotImplemented
        return self.offset == other.offset and self.terms == other.terms

    def __hash__(self):
        return hash((self.offset, self.terms))

    def __str__(self):
        return format_lp_terms(self.spec, self.terms, self.offset)

    def __repr__(self):
        return f"LPPoly({str(self)!r})"


def format_lp_terms(spec: OrderingSpec, terms, offset: int = 0) -> str:
    if not terms:
        return "0"
    from .freealg import _coeff_str

    out = []
    for k, (w, c) in enumerate(terms):
        neg, body = _coeff_str(c)
        mono = format_body(spec.decode(w), offset)
        s = mono if body is None else (f"{body}*{mono}" if w else body)
        if k == 0:
            out.append(("-" if neg else "") + s)
        else:
            out.append((" - " if neg else " + ") + s)
    return "".join(out)


def psi_star(p: LPPoly) -> LPPoly:
    """Multilinear saturation: strip the common trailing t-block of all terms.

    ``p`` must be nonzero and in normal form modulo the commutators
    (every body shaped ``w t^k``).
    """
    if not p:
        raise ValueError("psi_star of the zero polynomial")
    if not p.is_normal_mod_commutators():
        raise NormalFormError(f"{p} is not in normal form modulo the commutators [t, x]")
    mu = p.trailing_t()
    if mu == p.degree:
        # a single term t^d: its saturation is a nonzero scalar
        raise InconsistentIdealError()
    if mu == 0:
        return p
    return LPPoly(p.spec, [(w[:-mu], c) for w, c in p.terms], p.offset, p.ring, presorted=True)


def homogenizer_code(spec: OrderingSpec) -> str:
    return spec.encode((HOMOGENIZER,))
