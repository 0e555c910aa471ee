"""Buchberger completion on multilinear letterplace polynomials.

All stored polynomials are multilinear, so a polynomial is a list of
equal-length encoded bodies with coefficients.  Reduction by a shifted
basis element is a substring match of its leading body inside the current
leading body.  The commutators t(1)x(2) - x(1)t(2) are kept in the basis for
pair generation; reduction modulo them is done in bulk by moving every t to
the end of its body, which is exactly their normal form.
"""

from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass, field

from .coeff import ParamRing, param_ring
from .errors import CriterionError, InconsistentIdealError
from .freealg import FreePoly, dehomogenize, homogenize
from .letterplace import LPPoly, format_lp_terms, psi_star
from .ordering import HOMOGENIZER, OrderingSpec

__all__ = [
    "EngineConfig",
    "GenEntry",
    "Pair",
    "Stats",
    "GBResult",
    "spoly",
    "reduce",
    "pair_schedule",
    "minimalize",
    "certify_complete",
    "hfree_gbasis",
    "free_gbasis",
]

log = logging.getLogger(__name__)

VARIANTS = ("std", "noc", "bas")


@dataclass
class EngineConfig:
    weight_bound: int
    variant: str = "std"
    minimalize: bool = True
    tail_reduce: bool = True
    trace: bool = False

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"variant must be one of {VARIANTS}, got {self.variant!r}")
        if self.weight_bound is None or self.weight_bound < 0:
            raise ValueError("weight_bound must be a natural number")


@dataclass(eq=False)
class GenEntry:
    """A basis element: monic, multilinear, in normal form modulo the commutators."""

    poly: LPPoly
    index: int
    name: str = ""
    commutator: bool = False
    lm: str = field(init=False, repr=False)
    tail: tuple = field(init=False, repr=False)

    def __post_init__(self):
        if not self.poly:
            raise ValueError("basis elements are nonzero")
        self.lm = self.poly.terms[0][0]
        self.tail = self.poly.terms[1:]

    @property
    def degree(self) -> int:
        return self.poly.degree

    @property
    def offset(self) -> int:
        return self.poly.offset


@dataclass(frozen=True)
class Pair:
    """S-pair of ``left`` (at ``base``) and ``right`` shifted by ``shift`` relative to it."""

    left: int
    right: int
    shift: int
    lcm_degree: int
    lcm: str = ""
    base: int = 0

    @property
    def key(self):
        # normal strategy: smallest lcm first (graded, then place ordering)
        return (self.lcm_degree, self.lcm[::-1], self.left, self.right, self.shift, self.base)


@dataclass
class Stats:
    pairs_reduced: int = 0
    zero_reductions: int = 0
    saturations: int = 0
    pairs_over_bound: int = 0
    basis_count: int = 0
    max_degree: int = 0
    stored_count: int = 0  # bas keeps shifted copies; this counts them all
    minimal_count: int = 0
    minimal_max_degree: int = 0


@dataclass
class GBResult:
    basis: list
    minimal_basis: list
    certified_complete: bool
    truncated: bool
    stats: Stats
    spec: OrderingSpec
    weight_bound: int
    variant: str
    trace: list = field(default_factory=list)
    entries: list = field(default_factory=list, repr=False)

    def record(self) -> list[str]:
        """Flat line-oriented machine-readable record."""
        s = self.stats
        lines = [
            f"order={self.spec.order_name}",
            f"letters={','.join(self.spec.letters)}",
            f"variant={self.variant}",
            f"weight_bound={self.weight_bound}",
            f"certified_complete={'true' if self.certified_complete else 'false'}",
            f"truncated={'true' if self.truncated else 'false'}",
            f"basis_count={s.basis_count}",
            f"basis_max_degree={s.max_degree}",
            f"stored_count={s.stored_count}",
            f"minimal_count={s.minimal_count}",
            f"minimal_max_degree={s.minimal_max_degree}",
            f"pairs_reduced={s.pairs_reduced}",
            f"saturations={s.saturations}",
        ]
        lines += [f"basis[{k}]={f}" for k, f in enumerate(self.basis)]
        lines += [f"minimal[{k}]={f}" for k, f in enumerate(self.minimal_basis)]
        return lines


def certify_complete(max_deg: int, bound: int) -> bool:
    """A bounded run is complete when the bound reaches 2*max_deg - 1."""
    return bound >= 2 * max_deg - 1


# ---------------------------------------------------------------------------
# low level helpers on encoded bodies


def _overlap(fl: str, gl: str, i: int):
    """lcm of fl (at place 1) and gl shifted by i, or None.

    None when the supports are disjoint (i >= len(fl)) or the letters on the
    common places differ (the lcm would not be multilinear).
    """
    df = len(fl)
    if i < 0 or i >= df:
        return None
    end = i + len(gl)
    if end <= df:
        return fl if fl[i:end] == gl else None
    if fl[i:] != gl[: df - i]:
        return None
    return fl + gl[df - i:]


def _nf_commutators(w: str, t: str) -> str:
    s = w.replace(t, "")
    return s + t * (len(w) - len(s))


def _spoly_terms(f: GenEntry, g: GenEntry, i: int, lcm: str, zero):
    """(lcm/lm f) f - (lcm/lm i.g) i.g, leading terms cancelled (both monic)."""
    df, dg = len(f.lm), len(g.lm)
    ext = lcm[df:]
    pre, suf = lcm[:i], lcm[i + dg:]
    acc: dict = {}
    for u, c in f.tail:
        w = u + ext
        acc[w] = acc.get(w, zero) + c
    for u, c in g.tail:
        w = pre + u + suf
        acc[w] = acc.get(w, zero) - c
    return {w: c for w, c in acc.items() if c}


_COMP = {chr(48 + r): chr(48 + 1000 - r) for r in range(1000)}
_COMP_TABLE = str.maketrans(_COMP)


def _heap_key(w: str) -> str:
    # min-heap key for the max under the place ordering
    return w[::-1].translate(_COMP_TABLE)


def _reduce_terms(terms: dict, find, t: str | None, tail: bool, trace=None):
    """Reduce ``terms`` (body -> coeff) to normal form; returns descending term list.

    ``find(w)`` returns ``(gen, pos)`` with gen.lm occurring at ``pos`` in w,
    or None.  With ``t`` set, new words are normalized modulo the commutators.
    """
    heap = [(_heap_key(w), w) for w in terms]
    heapq.heapify(heap)
    queued = set(terms)
    out = []
    while heap:
        _, w = heapq.heappop(heap)
        queued.discard(w)
        c = terms.pop(w, None)
        if c is None:
            continue
        hit = find(w)
        if hit is None:
            out.append((w, c))
            if not tail:
                rest = sorted(terms.items(), key=lambda wc: wc[0][::-1], reverse=True)
                out.extend((u, a) for u, a in rest if a)
                break
            continue
        g, pos = hit
        if trace is not None:
            trace(w, g, pos)
        pre, suf = w[:pos], w[pos + len(g.lm):]
        for u, cu in g.tail:
            v = pre + u + suf
            if t is not None and t in v:
                v = _nf_commutators(v, t)
            old = terms.get(v)
            if old is None:
                terms[v] = -(c * cu)
                if v not in queued:
                    queued.add(v)
                    heapq.heappush(heap, (_heap_key(v), v))
            else:
                nv = old - c * cu
                if nv:
                    terms[v] = nv
                else:
                    del terms[v]
    return out


class _ShiftIndex:
    """Divisor search among leading bodies under arbitrary shifts."""

    def __init__(self, t: str | None):
        self.by_lm: dict[str, GenEntry] = {}
        self.lengths: list[int] = []
        self.t = t

    def add(self, g: GenEntry):
        if g.lm not in self.by_lm:
            self.by_lm[g.lm] = g
            if len(g.lm) not in self.lengths:
                self.lengths.append(len(g.lm))
                self.lengths.sort()

    def find(self, w: str):
        if self.t is not None:
            k = w.find(self.t)
            if k >= 0:
                w = w[:k]
        n = len(w)
        by_lm = self.by_lm
        for L in self.lengths:
            if L > n:
                break
            for i in range(n - L + 1):
                g = by_lm.get(w[i:i + L])
                if g is not None:
                    return g, i
        return None


class _PlacedIndex:
    """Divisor search without shifting: a leading body only divides at its own places."""

    def __init__(self, t: str):
        self.by_key: dict[tuple[int, str], GenEntry] = {}
        self.lengths: list[int] = []
        self.t = t
        self.base = 0

    def add(self, g: GenEntry):
        key = (g.offset, g.lm)
        if key not in self.by_key:
            self.by_key[key] = g
            if len(g.lm) not in self.lengths:
                self.lengths.append(len(g.lm))
                self.lengths.sort()

    def find(self, w: str):
        k = w.find(self.t)
        if k >= 0:
            w = w[:k]
        n = len(w)
        base = self.base
        by_key = self.by_key
        for L in self.lengths:
            if L > n:
                break
            for i in range(n - L + 1):
                g = by_key.get((base + i, w[i:i + L]))
                if g is not None:
                    return g, i
        return None


# ---------------------------------------------------------------------------
# public single-step operations


def spoly(f: LPPoly, g: LPPoly, i: int) -> LPPoly:
    """S-polynomial of f and i.g (f at offset 0)."""
    if not f or not g:
        raise CriterionError("S-polynomial of a zero polynomial")
    fe = GenEntry(f.monic().at_offset(0), 0)
    ge = GenEntry(g.monic().at_offset(0), 1)
    if i >= len(fe.lm):
        raise CriterionError(f"gcd(lm(f), lm({i}.g)) = 1: supports are disjoint")
    lcm = _overlap(fe.lm, ge.lm, i)
    if lcm is None:
        raise CriterionError(f"lcm(lm(f), lm({i}.g)) is not multilinear")
    terms = _spoly_terms(fe, ge, i, lcm, f.ring.zero)
    return LPPoly(f.spec, terms.items(), 0, f.ring)


def reduce(p: LPPoly, basis, tail_reduce: bool = True) -> LPPoly:
    """Normal form of ``p`` modulo all shifts of the basis leading terms.

    Commutators in ``basis`` act as ordinary reducers here.
    """
    index = _ShiftIndex(None)
    for g in basis:
        if not isinstance(g, GenEntry):
            g = GenEntry(g.monic().at_offset(0), 0)
        index.add(g)
    out = _reduce_terms(dict(p.terms), index.find, None, tail_reduce)
    return LPPoly(p.spec, out, p.offset, p.ring, presorted=True)


def pair_schedule(basis: list[GenEntry], variant: str = "std", bound: int | None = None) -> list[Pair]:
    """All admissible pairs among ``basis`` under ``variant``, in selection order."""
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    bound = bound if bound is not None else 10**9
    pairs: list[Pair] = []
    for k, h in enumerate(basis):
        pairs.extend(_new_pairs(h, basis[: k + 1], variant, bound)[0])
    pairs.sort(key=lambda p: p.key)
    return pairs


def _relative_pairs(h: GenEntry, others):
    """(left, right, shift, lcm) for h against each of ``others`` (h included)."""
    out = []
    for k in others:
        for i in range(len(h.lm)):
            if k is h and i == 0:
                continue
            lcm = _overlap(h.lm, k.lm, i)
            if lcm is not None:
                # prefix overlap: the element with the longer leading body goes left
                if i == 0 and len(k.lm) > len(h.lm):
                    out.append((k, h, 0, lcm))
                else:
                    out.append((h, k, i, lcm))
        if k is h:
            continue
        for i in range(1, len(k.lm)):
            lcm = _overlap(k.lm, h.lm, i)
            if lcm is not None:
                out.append((k, h, i, lcm))
    return out


def _new_pairs(h: GenEntry, others, variant: str, bound: int):
    """Pairs created by inserting h; returns (pairs, number over the bound)."""
    pairs = []
    over = 0
    if variant == "bas":
        for k in others:
            if k is h:
                continue
            a, b = (h, k) if (h.offset, -len(h.lm)) <= (k.offset, -len(k.lm)) else (k, h)
            i = b.offset - a.offset
            lcm = _overlap(a.lm, b.lm, i)
            if lcm is None:
                continue
            w = a.offset + len(lcm)
            if w > bound:
                over += 1
                continue
            pairs.append(Pair(a.index, b.index, i, w, lcm, a.offset))
        return pairs, over
    for f, g, i, lcm in _relative_pairs(h, others):
        w = len(lcm)
        if w > bound:
            over += 1
            continue
        if variant == "std":
            pairs.append(Pair(f.index, g.index, i, w, lcm, 0))
        else:
            for base in range(bound - w + 1):
                pairs.append(Pair(f.index, g.index, i, w + base, lcm, base))
    return pairs, over


def minimalize(basis: list[GenEntry]) -> list[GenEntry]:
    """Drop elements whose leading monomial is divisible by a shift of another's.

    Lower degree, then lower index, wins; the survivors keep their order.
    """
    kept: list[GenEntry] = []
    for g in sorted(basis, key=lambda e: (e.degree, e.index)):
        if any(h.lm in g.lm for h in kept):
            continue
        kept.append(g)
    keep = {id(g) for g in kept}
    return [g for g in basis if id(g) in keep]


# ---------------------------------------------------------------------------
# the completion loop


class _Completion:
    def __init__(self, spec: OrderingSpec, cfg: EngineConfig, ring: ParamRing, saturate: bool):
        self.spec = spec
        self.cfg = cfg
        self.ring = ring
        self.saturate = saturate
        self.variant = cfg.variant
        self.t = spec.t_char if saturate else None
        self.gens: list[GenEntry] = []
        self.heap: list = []
        self.seq = 0
        self.stats = Stats()
        self.truncated = False
        self.trace: list[str] | None = [] if cfg.trace else None
        if self.variant == "bas":
            self.index = _PlacedIndex(spec.t_char)
        else:
            self.index = _ShiftIndex(self.t)
        self._n_comm = 0
        self._n_gen = 0

    # -- bookkeeping --------------------------------------------------------
    def _fmt(self, terms, offset=0) -> str:
        return format_lp_terms(self.spec, terms, offset)

    def _log(self, line: str):
        if self.trace is not None:
            self.trace.append(line)

    def _push(self, key, item):
        heapq.heappush(self.heap, (key, self.seq, item))
        self.seq += 1

    def _insert(self, poly: LPPoly, commutator: bool = False) -> GenEntry:
        if commutator:
            self._n_comm += 1
            name = f"d{self._n_comm}"
        else:
            self._n_gen += 1
            name = f"g{self._n_gen}"
        g = GenEntry(poly, len(self.gens), name, commutator)
        self.gens.append(g)
        if not commutator:
            self.index.add(g)
        pairs, over = _new_pairs(g, self.gens, self.variant, self.cfg.weight_bound)
        if over:
            self.truncated = True
            self.stats.pairs_over_bound += over
        for p in pairs:
            self._push(p.key, p)
        return g

    def seed_commutators(self):
        t = self.spec.t_char
        offsets = range(self.cfg.weight_bound - 1) if self.variant == "bas" else (0,)
        for a in self.spec.letters:
            x = self.spec.encode((a,))
            for off in offsets:
                d = LPPoly(self.spec, [(t + x, self.ring.one), (x + t, -self.ring.one)], off,
                           self.ring, presorted=True)
                g = self._insert(d, commutator=True)
                self._log(f"seed {g.name} = {self._fmt(d.terms, off)}")

    def add_input(self, p: LPPoly):
        if p.degree > self.cfg.weight_bound:
            raise ValueError(f"generator of degree {p.degree} exceeds weight bound "
                             f"{self.cfg.weight_bound}")
        offsets = range(self.cfg.weight_bound - p.degree + 1) if self.variant == "bas" else (0,)
        # inputs precede the pairs of their weight and keep the given order
        for off in offsets:
            self._push((off + p.degree, "", -1, self.seq, 0, off), ("input", p, off))

    # -- main loop ----------------------------------------------------------
    def run(self):
        while self.heap:
            _, _, item = heapq.heappop(self.heap)
            if isinstance(item, Pair):
                self._process_pair(item)
            else:
                _, p, off = item
                self._process_input(p, off)

    def _process_input(self, p: LPPoly, off: int):
        self.stats.pairs_reduced += 1
        terms = dict(p.terms)
        self._log(f"input {self._fmt(p.terms, off)}")
        self._finish(terms, off)

    def _process_pair(self, pair: Pair):
        f, g = self.gens[pair.left], self.gens[pair.right]
        self.stats.pairs_reduced += 1
        terms = _spoly_terms(f, g, pair.shift, pair.lcm, self.ring.zero)
        if self.trace is not None:
            raw = sorted(terms.items(), key=lambda wc: wc[0][::-1], reverse=True)
            if self.variant == "bas":
                lhs = f"spoly({f.name}@{f.offset}, {g.name}@{g.offset})"
            elif pair.base:
                lhs = f"spoly({pair.base}*{f.name}, {pair.base + pair.shift}*{g.name})"
            elif pair.shift:
                lhs = f"spoly({f.name}, {pair.shift}*{g.name})"
            else:
                lhs = f"spoly({f.name}, {g.name})"
            self._log(f"{lhs} = {self._fmt(raw, pair.base)}")
        self._finish(terms, pair.base)

    def _finish(self, terms: dict, base: int):
        t = self.t
        if t is not None and any(t in w for w in terms):
            nf: dict = {}
            zero = self.ring.zero
            for w, c in terms.items():
                v = _nf_commutators(w, t)
                nf[v] = nf.get(v, zero) + c
            changed = set(nf) != set(terms)
            terms = {w: c for w, c in nf.items() if c}
            if changed and self.trace is not None:
                srt = sorted(terms.items(), key=lambda wc: wc[0][::-1], reverse=True)
                self._log(f"  mod D -> {self._fmt(srt, base)}")
        step_log = None
        if self.trace is not None:
            def step_log(w, g, pos):
                from .letterplace import format_body
                mono = format_body(self.spec.decode(w), base)
                who = g.name if self.variant == "bas" else f"{pos}*{g.name}" if pos else g.name
                self._log(f"  reduce {mono} by {who}")
        if self.variant == "bas":
            self.index.base = base
        rem = _reduce_terms(terms, self.index.find, t, self.cfg.tail_reduce, step_log)
        if not rem:
            self.stats.zero_reductions += 1
            self._log("  -> 0")
            return
        p = LPPoly(self.spec, rem, base, self.ring, presorted=True).monic()
        if not p.terms[0][0]:
            raise InconsistentIdealError()
        if self.saturate:
            mu = p.trailing_t()
            if mu:
                self._log(f"  remainder {self._fmt(p.terms, base)}")
                p = psi_star(p)
                self.stats.saturations += 1
        if self.variant != "bas":
            p = p.at_offset(0)
        if self._duplicate(p):
            self._log("  duplicate dropped")
            return
        g = self._insert(p)
        self._log(f"  new {g.name} = {self._fmt(p.terms, p.offset)}")

    def _duplicate(self, p: LPPoly) -> bool:
        return any(g.offset == p.offset and g.poly.terms == p.terms for g in self.gens
                   if g.lm == p.terms[0][0])


# ---------------------------------------------------------------------------
# drivers


def _interreduce(entries: list[GenEntry], t: str | None) -> list[LPPoly]:
    """Tail-reduce every entry against the others (all at offset 0)."""
    index = _ShiftIndex(t)
    for g in entries:
        index.add(g)
    out = []
    for g in entries:
        tail = _reduce_terms(dict(g.tail), index.find, t, True)
        out.append(LPPoly(g.poly.spec, [g.poly.terms[0], *tail], 0, g.poly.ring, presorted=True))
    return out


def _finalize(run: _Completion, cfg: EngineConfig, dehom: bool) -> GBResult:
    spec = run.spec
    gens = [g for g in run.gens if not g.commutator]
    # normalize to offset 0 and drop duplicates (the bas variant keeps shifted copies)
    seen: dict = {}
    for g in gens:
        p = g.poly.at_offset(0)
        if p.terms not in seen:
            seen[p.terms] = GenEntry(p, g.index, g.name)
    entries = list(seen.values())

    def to_free(p: LPPoly) -> FreePoly:
        f = p.to_free()
        return dehomogenize(f) if dehom else f

    def canon(polys):
        return sorted(polys, key=lambda f: spec.word_key(spec.encode(f.lm)), reverse=True)

    basis: list[FreePoly] = []
    bseen = set()
    for e in entries:
        f = to_free(e.poly)
        if f and f.terms not in bseen:
            bseen.add(f.terms)
            basis.append(f)
    basis = canon(basis)
    mins = minimalize(entries)
    minimal = canon([to_free(p) for p in _interreduce(mins, run.t)])
    st = run.stats
    st.stored_count = len(gens)
    st.basis_count = len(basis)
    st.max_degree = max((f.degree() for f in basis), default=0)
    st.minimal_count = len(minimal)
    st.minimal_max_degree = max((f.degree() for f in minimal), default=0)
    return GBResult(
        basis=basis,
        minimal_basis=minimal if cfg.minimalize else basis,
        certified_complete=certify_complete(st.minimal_max_degree, cfg.weight_bound),
        truncated=run.truncated,
        stats=st,
        spec=spec,
        weight_bound=cfg.weight_bound,
        variant=cfg.variant,
        trace=run.trace or [],
        entries=run.gens,
    )


def _ring_of(H) -> ParamRing:
    for h in H:
        return h.ring
    return param_ring()


def _prepare(H, spec: OrderingSpec):
    out = []
    for h in H:
        if h.spec != spec:
            h = h.with_spec(spec)
        if not h:
            log.warning("dropping zero generator")
            continue
        out.append(h)
    return out


def hfree_gbasis(H, spec: OrderingSpec, cfg: EngineConfig) -> GBResult:
    """Homogeneous Groebner basis of the graded ideal generated by ``H``, truncated at the bound."""
    H = _prepare(H, spec)
    ring = _ring_of(H)
    for h in H:
        if not h.is_homogeneous():
            raise ValueError(f"hfree_gbasis expects homogeneous input, got {h}")
        if HOMOGENIZER in h.letters():
            raise ValueError("input must be over the base alphabet")
        if h.degree() == 0:
            raise InconsistentIdealError()
    run = _Completion(spec, cfg, ring, saturate=False)
    for h in H:
        run.add_input(LPPoly.from_free(h))
    run.run()
    return _finalize(run, cfg, dehom=False)


def free_gbasis(H, spec: OrderingSpec, cfg: EngineConfig) -> GBResult:
    """Groebner basis of the two-sided ideal generated by arbitrary ``H``.

    Generators are homogenized, embedded and completed together with the
    commutators [t, x]; every new remainder is saturated before insertion.
    """
    H = _prepare(H, spec)
    ring = _ring_of(H)
    for h in H:
        if HOMOGENIZER in h.letters():
            raise ValueError("input must be over the base alphabet")
        if h.degree() == 0:
            raise InconsistentIdealError()
    run = _Completion(spec, cfg, ring, saturate=True)
    run.seed_commutators()
    for h in H:
        run.add_input(LPPoly.from_free(homogenize(h)))
    run.run()
    return _finalize(run, cfg, dehom=True)
