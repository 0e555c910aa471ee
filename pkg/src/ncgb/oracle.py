"""Independent reference: classical noncommutative Buchberger on words.

Works directly in K<X> with inhomogeneous polynomials stored as
``{tuple_of_int: coeff}``; shares no code with the letterplace engine apart
from the coefficient field.  Used by the tests to cross-check results.
"""

from __future__ import annotations

from .errors import InconsistentIdealError
from .freealg import FreePoly
from .ordering import OrderingSpec

__all__ = ["nc_buchberger", "nf_member"]


class _Words:
    def __init__(self, spec: OrderingSpec):
        self.spec = spec
        # letter -> integer, larger letter = larger integer
        n = len(spec.letters)
        self.num = {a: n - k for k, a in enumerate(spec.letters)}
        self.name = {v: k for k, v in self.num.items()}
        self.right = spec.direction == "direct"

    def key(self, w):
        return (len(w), w[::-1] if self.right else w)

    def load(self, f: FreePoly) -> dict:
        return {tuple(self.num[a] for a in w): c for w, c in f.terms}

    def store(self, p: dict, ring) -> FreePoly:
        return FreePoly({tuple(self.name[a] for a in w): c for w, c in p.items()}, self.spec, ring)


def _lead(W: _Words, p: dict):
    return max(p, key=W.key)


def _find(w, rules):
    for lw, tail in rules:
        L = len(lw)
        for i in range(len(w) - L + 1):
            if w[i:i + L] == lw:
                return i, lw, tail
    return None


def _normal_form(W: _Words, p: dict, rules, zero) -> dict:
    p = dict(p)
    out = {}
    while p:
        w = _lead(W, p)
        c = p.pop(w)
        hit = _find(w, rules)
        if hit is None:
            out[w] = c
            continue
        i, lw, tail = hit
        a, b = w[:i], w[i + len(lw):]
        for u, cu in tail.items():
            v = a + u + b
            nv = p.get(v, zero) - c * cu
            if nv:
                p[v] = nv
            else:
                p.pop(v, None)
    return out


def _rule(W: _Words, p: dict):
    lw = _lead(W, p)
    inv = p[lw].inverse()
    return lw, {w: c * inv for w, c in p.items() if w != lw}


def _interreduce(W: _Words, polys: list, zero) -> list:
    """Reduced basis: drop lm-redundant elements and fully reduce the rest."""
    polys = [p for p in polys if p]
    changed = True
    while changed:
        changed = False
        polys.sort(key=lambda p: W.key(_lead(W, p)))
        out = []
        for k, p in enumerate(polys):
            others = [_rule(W, q) for q in out + polys[k + 1:]]
            r = _normal_form(W, p, others, zero)
            if r != p:
                changed = True
            if r:
                out.append(r)
        polys = out
    result = []
    for p in polys:
        lw, tail = _rule(W, p)
        result.append({lw: p[lw].ring.one, **tail})
    return result


def _overlaps(u, v):
    """Proper overlaps: k with suffix of u of length k equal to prefix of v."""
    for k in range(1, min(len(u), len(v))):
        if u[len(u) - k:] == v[:k]:
            yield k


def nc_buchberger(gens, spec: OrderingSpec, max_deg: int | None = None, with_status: bool = False):
    """Reduced Groebner basis of the two-sided ideal generated by ``gens``.

    With ``max_deg`` only overlap words of length <= max_deg are resolved,
    giving a truncated basis.  With ``with_status`` returns ``(basis,
    complete)`` where ``complete`` says no overlap of the result was skipped.
    """
    gens = [g for g in gens if g]
    if not gens:
        return ([], True) if with_status else []
    ring = gens[0].ring
    zero = ring.zero
    W = _Words(spec)
    G = _interreduce(W, [W.load(g) for g in gens], zero)
    done = set()
    while True:
        if any(_lead(W, p) == () for p in G):
            raise InconsistentIdealError()
        rules = [_rule(W, p) for p in G]
        # completeness refers to the overlaps of the current basis only
        complete = True
        crit = []
        for a, (u, _) in enumerate(rules):
            for b, (v, _) in enumerate(rules):
                for k in _overlaps(u, v):
                    word = u + v[k:]
                    key = (u, v, k)
                    if key in done:
                        continue
                    if max_deg is not None and len(word) > max_deg:
                        complete = False
                        continue
                    crit.append((len(word), key, a, b))
        if not crit:
            break
        crit.sort(key=lambda c: c[0])
        new = []
        for _, key, a, b in crit:
            done.add(key)
            (u, tu), (v, tv) = rules[a], rules[b]
            k = key[2]
            # u*v[k:] - u[:-k]*v
            s: dict = {}
            for w, c in tu.items():
                x = w + v[k:]
                s[x] = s.get(x, zero) + c
            for w, c in tv.items():
                x = u[: len(u) - k] + w
                s[x] = s.get(x, zero) - c
            s = {w: c for w, c in s.items() if c}
            r = _normal_form(W, s, rules + [_rule(W, q) for q in new], zero)
            if r:
                if _lead(W, r) == ():
                    raise InconsistentIdealError()
                new.append(r)
        if not new:
            break
        G = _interreduce(W, G + new, zero)
    basis = [W.store(p, ring) for p in G]
    basis.sort(key=lambda f: W.key(tuple(W.num[a] for a in f.lm)), reverse=True)
    return (basis, complete) if with_status else basis


def nf_member(f: FreePoly, basis, spec: OrderingSpec | None = None) -> FreePoly:
    """Two-sided normal form of ``f`` modulo ``basis``; zero iff f lies in the ideal of a GB."""
    spec = spec or f.spec
    if f.spec != spec:
        f = f.with_spec(spec)
    if not f:
        return f
    W = _Words(spec)
    rules = [_rule(W, W.load(g.with_spec(spec))) for g in basis if g]
    return W.store(_normal_form(W, W.load(f), rules, f.ring.zero), f.ring)
