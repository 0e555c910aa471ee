"""Monomial orderings.

Letterplace monomials are ordered by the place ordering induced by a
lexicographic ordering of the letters at a single place: factors are
compared place by place from the highest occupied place downward.  Via the
direct embedding this induces the graded right-lexicographic ordering on
words, via the reversing embedding the graded left-lexicographic one.

Internally a word is encoded as a ``str`` with one character per letter,
``chr(48 + rank)``, where the homogenizing letter ``t`` has rank 0 and the
base letters get ranks 1..n in ascending precedence.  Plain string
comparison on encodings then matches letter precedence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum

__all__ = [
    "HOMOGENIZER",
    "Cmp",
    "OrderingSpec",
    "lp_compare",
    "induced_free_compare_consistency",
]

HOMOGENIZER = "t"
_BASE = 48


class Cmp(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def _cmp(a, b) -> Cmp:
    return Cmp.LESS if a < b else Cmp.GREATER if a > b else Cmp.EQUAL


@dataclass(frozen=True)
class OrderingSpec:
    """Letter precedence plus embedding direction.

    ``letters`` lists the base alphabet in DESCENDING precedence; the
    homogenizer ``t`` is implicitly the smallest letter.  ``direction`` is
    ``"direct"`` (graded right lex on words) or ``"reverse"`` (graded left
    lex on words).
    """

    letters: tuple[str, ...]
    direction: str = "direct"
    rank: dict = field(init=False, repr=False, compare=False, hash=False)
    _dec: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        if self.direction not in ("direct", "reverse"):
            raise ValueError(f"direction must be 'direct' or 'reverse', got {self.direction!r}")
        if len(set(letters)) != len(letters):
            raise ValueError(f"duplicate letters in {letters}")
        if HOMOGENIZER in letters:
            raise ValueError(f"letter name {HOMOGENIZER!r} is reserved for the homogenizer")
        if not letters:
            raise ValueError("empty alphabet")
        n = len(letters)
        rank = {HOMOGENIZER: 0}
        for k, a in enumerate(letters):
            rank[a] = n - k
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "_dec", {chr(_BASE + r): a for a, r in rank.items()})

    @classmethod
    def right(cls, letters) -> OrderingSpec:
        return cls(tuple(letters), "direct")

    @classmethod
    def left(cls, letters) -> OrderingSpec:
        return cls(tuple(letters), "reverse")

    @property
    def order_name(self) -> str:
        return "right" if self.direction == "direct" else "left"

    @property
    def t_char(self) -> str:
        return chr(_BASE)

    def encode(self, word) -> str:
        try:
            return "".join([chr(_BASE + self.rank[a]) for a in word])
        except KeyError as exc:
            raise ValueError(f"letter {exc.args[0]!r} not in alphabet {self.letters}") from None

    def decode(self, code: str) -> tuple[str, ...]:
        return tuple(self._dec[c] for c in code)

    def word_key(self, code: str):
        """Sort key of an encoded word under the induced free ordering."""
        if self.direction == "direct":
            return (len(code), code[::-1])
        return (len(code), code)

    def to_body(self, code: str) -> str:
        """Encoded word -> encoded letterplace body (letter at place j is body[j-1])."""
        return code if self.direction == "direct" else code[::-1]

    from_body = to_body


def lp_compare(m, n, spec: OrderingSpec) -> Cmp:
    """Compare two letterplace monomials (objects with ``offset`` and ``body``).

    Places are scanned from the highest occupied place downward; an absent
    letter is smaller than any present letter.
    """
    pm = _places(m, spec)
    pn = _places(n, spec)
    top = max(max(pm, default=0), max(pn, default=0))
    for j in range(top, 0, -1):
        a = pm.get(j, -1)
        b = pn.get(j, -1)
        if a != b:
            return _cmp(a, b)
    return Cmp.EQUAL


def _places(m, spec: OrderingSpec) -> dict[int, int]:
    return {m.offset + k + 1: spec.rank[a] for k, a in enumerate(m.body)}


def induced_free_compare_consistency(m, n, spec: OrderingSpec) -> Cmp:
    """Compare words through their letterplace images under ``spec``'s embedding."""
    from .letterplace import embed

    return lp_compare(embed(m, spec.direction), embed(n, spec.direction), spec)
