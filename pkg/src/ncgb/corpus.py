"""Test presentations: the Klein four-group and the benchmark corpus.

Corpus runs use graded left lex (reverse embedding) with the letters in the
listed order, first letter largest.  A label such as ``heckeDd15`` names a
presentation plus the weight bound ``15``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .coeff import param_ring
from .freealg import FreePoly
from .ordering import OrderingSpec

__all__ = [
    "Presentation",
    "gen_klein",
    "gen_group",
    "gen_hecke",
    "gen_lie",
    "gen_templieb",
    "example",
    "presentation",
    "CORPUS_LABELS",
    "COXETER",
]


@dataclass(frozen=True)
class Presentation:
    label: str
    letters: tuple
    params: tuple
    generators: tuple
    spec: OrderingSpec
    bound: int | None = None

    def __post_init__(self):
        for g in self.generators:
            if not g:
                raise ValueError(f"{self.label}: zero generator")
            if not g.letters() <= set(self.letters):
                raise ValueError(f"{self.label}: generator {g} uses undeclared letters")

    @property
    def max_degree(self) -> int:
        return max(g.degree() for g in self.generators)

    def gens_summary(self) -> str:
        """Generator count and max degree in the ``<count>d<deg>`` notation."""
        return f"{len(self.generators)}d{self.max_degree}"

    def with_bound(self, bound: int) -> Presentation:
        return Presentation(self.label, self.letters, self.params, self.generators, self.spec, bound)

    def to_input_text(self, variant: str | None = None) -> str:
        lines = [f"% {self.label}", f"name {self.label}", "vars " + " > ".join(self.letters)]
        if self.params:
            lines.append("params " + " ".join(self.params))
        if self.bound is not None:
            lines.append(f"degbound {self.bound}")
        lines.append("order " + ("right" if self.spec.direction == "direct" else "left"))
        if variant:
            lines.append(f"variant {variant}")
        lines.append("gens:")
        lines += [str(g) for g in self.generators]
        return "\n".join(lines) + "\n"


def _build(label, letters, params, texts, direction="reverse", bound=None) -> Presentation:
    spec = OrderingSpec(tuple(letters), direction)
    ring = param_ring(tuple(params))
    gens = tuple(FreePoly.parse(s, spec, ring) for s in texts)
    return Presentation(label, tuple(letters), tuple(params), gens, spec, bound)


def gen_klein() -> Presentation:
    """x^2 = y^2 = (xy)^2 = 1 under graded right lex with x > y."""
    return _build("klein", ("x", "y"), (), ["x^2 - 1", "y^2 - 1", "x*y*x*y - 1"], "direct", 10)


def gen_group(kind: str) -> Presentation:
    if kind == "g444":
        words = ["a^4", "b^4", "c^4", "a*b*a*b", "b*c*b*c", "c*a*c*a", "a*b*c*a*b*c"]
        return _build("g444", ("a", "b", "c"), (), [w + " - 1" for w in words])
    if kind == "g3332":
        # R, S stand for the inverses of r, s
        words = ["r*R", "R*r", "s*S", "S*s", "r^3", "s^3", "(rs)^3", "(RSrs)^2"]
        words[6] = "r*s*r*s*r*s"
        words[7] = "R*S*r*s*R*S*r*s"
        return _build("g3332", ("r", "s", "R", "S"), (), [w + " - 1" for w in words])
    raise ValueError(f"unknown group presentation {kind!r}")


COXETER = {
    "A": ((1, 3, 2, 3), (3, 1, 3, 2), (2, 3, 1, 3), (3, 2, 3, 1)),
    "D": ((1, 3, 2, 2), (3, 1, 3, 3), (2, 3, 1, 2), (2, 3, 2, 1)),
    "E": (
        (1, 2, 3, 2, 2, 2),
        (2, 1, 2, 3, 2, 2),
        (3, 2, 1, 3, 2, 2),
        (2, 3, 3, 1, 3, 2),
        (2, 2, 2, 3, 1, 3),
        (2, 2, 2, 2, 3, 1),
    ),
}


def gen_hecke(matrix, param: str = "q") -> Presentation:
    """Hecke algebra of a Coxeter matrix with entries in {1, 2, 3}.

    ``matrix`` is a key of :data:`COXETER` or an explicit square matrix.
    """
    label = "hecke"
    if isinstance(matrix, str):
        label += matrix
        matrix = COXETER[matrix]
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("Coxeter matrix must be square")
    letters = tuple(f"T{i + 1}" for i in range(n))
    rels = [f"{a}^2 - ({param} - 1)*{a} - {param}" for a in letters]
    for i in range(n):
        if matrix[i][i] != 1:
            raise ValueError("Coxeter matrix must have 1 on the diagonal")
        for j in range(i + 1, n):
            m = matrix[i][j]
            if m != matrix[j][i]:
                raise ValueError("Coxeter matrix must be symmetric")
            a, b = letters[i], letters[j]
            if m == 2:
                rels.append(f"{a}*{b} - {b}*{a}")
            elif m == 3:
                rels.append(f"{a}*{b}*{a} - {b}*{a}*{b}")
            else:
                raise ValueError(f"unsupported Coxeter entry {m}")
    return _build(label, letters, (param,), rels)


def _bracket(i: int, j: int, rest) -> str:
    s = f"x{i}*x{j} - x{j}*x{i}"
    for k, c in rest:
        c = Fraction(c)
        sign = "-" if c > 0 else "+"
        s += f" {sign} {abs(c)}*x{k}"
    return s


_LIE = {
    "lie5": (5, [(1, 2, [(3, 1)]), (1, 3, [(4, 1)]), (2, 5, [(4, 1)])]),
    "lie7": (7, [
        (1, 2, [(3, 1)]),
        (1, 3, [(4, 1)]),
        (1, 4, [(5, 1)]),
        (1, 5, [(6, 1)]),
        (2, 3, [(4, "1/2"), (5, "1/4"), (6, "-1/8"), (7, "-1/2")]),
        (2, 4, [(5, "1/2"), (6, "1/4")]),
        (2, 5, [(6, 1)]),
        (2, 7, [(5, "1/2"), (6, "-1/4")]),
        (3, 4, [(6, "-1/2")]),
        (3, 7, [(6, "1/2")]),
    ]),
}


def gen_lie(kind: str) -> Presentation:
    """Enveloping algebra relations [xi, xj] - (linear part), [a, b] = ab - ba."""
    if kind not in _LIE:
        raise ValueError(f"unknown Lie presentation {kind!r}")
    n, rels = _LIE[kind]
    letters = tuple(f"x{i}" for i in range(1, n + 1))
    return _build(kind, letters, (), [_bracket(i, j, rest) for i, j, rest in rels])


def gen_templieb(n: int, param: str = "delta") -> Presentation:
    """Temperley-Lieb relations on e1..en with loop parameter ``param``."""
    if n < 2:
        raise ValueError("Temperley-Lieb presentations need n >= 2")
    e = [f"e{i}" for i in range(1, n + 1)]
    rels = [f"{a}^2 - {param}*{a}" for a in e]
    for i in range(n):
        for j in range(i + 2, n):
            rels.append(f"{e[i]}*{e[j]} - {e[j]}*{e[i]}")
    for i in range(n - 1):
        a, b = e[i], e[i + 1]
        rels.append(f"{a}*{b}*{a} - {a}")
        rels.append(f"{b}*{a}*{b} - {b}")
    return _build(f"templieb{n + 1}", tuple(e), (param,), rels)


_BUILDERS = {
    "klein": gen_klein,
    "g444": lambda: gen_group("g444"),
    "g3332": lambda: gen_group("g3332"),
    "heckeA": lambda: gen_hecke("A"),
    "heckeD": lambda: gen_hecke("D"),
    "heckeE": lambda: gen_hecke("E"),
    "lie5": lambda: gen_lie("lie5"),
    "lie7": lambda: gen_lie("lie7"),
    "templieb8": lambda: gen_templieb(7),
    "templieb9": lambda: gen_templieb(8),
}

# the benchmark runs with their weight bounds
CORPUS_LABELS = (
    "g3332d10",
    "g444d10",
    "heckeAd15",
    "heckeDd15",
    "heckeEd10",
    "lie5d25",
    "lie7d5",
    "templieb8d8",
    "templieb9d9",
)


def presentation(name: str) -> Presentation:
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise ValueError(f"unknown presentation {name!r}; known: {sorted(_BUILDERS)}") from None


def example(label: str) -> Presentation:
    """Presentation for ``label``; a trailing ``dNN`` sets the weight bound."""
    if label in _BUILDERS:
        return presentation(label)
    m = re.fullmatch(r"(.+?)d(\d+)", label)
    if not m or m.group(1) not in _BUILDERS:
        raise ValueError(f"unknown example {label!r}; known: {sorted(_BUILDERS)} with optional dNN suffix")
    return presentation(m.group(1)).with_bound(int(m.group(2)))
