"""Brute-force reference implementations over tiny ambient spaces.

Everything here works on dense codes: a codeword is a length-n tuple of
ring elements, a code is a frozenset of codewords.  Used only to validate
the structural machinery (canonical forms, duals, self-dual enumeration)
at parameters where the full ambient space GR(p^2,s)^n fits in memory;
guarded by (p^2)^(s*n) <= cap (default 2^24).
"""

from __future__ import annotations

import itertools

from . import cyclic, gring
from .gring import DomainError


def vec_add(ring, v, w):
    return tuple(ring.add(x, y) for x, y in zip(v, w))


def vec_shift(v):
    """Multiplication by u on coefficient vectors."""
    return (v[-1],) + v[:-1]


def ambient(ring, n, cap=1 << 24):
    if cap is not None and ring.size ** n > cap:
        raise DomainError("ambient of size %d exceeds cap %d" % (ring.size ** n, cap))
    return itertools.product(ring.elements(), repeat=n)


def dense_span(ring, n, gens):
    """The ideal generated by the given vectors, as a frozenset.

    Additive closure of {xi^k * u^j * g}: the span over Z_{p^2} of all
    scalar-basis multiples of all cyclic shifts.
    """
    module_gens = []
    for g in gens:
        g = tuple(g)
        for k in range(ring.s):
            scaled = tuple(ring.mul(ring.pow(ring.xi, k), c) for c in g)
            v = scaled
            for _ in range(n):
                module_gens.append(v)
                v = vec_shift(v)
    span = {(ring.zero,) * n}
    for g in module_gens:
        if g in span:
            continue
        cur = set(span)
        step = g
        for _ in range(ring.pp - 1):
            cur.update(vec_add(ring, v, step) for v in span)
            step = vec_add(ring, step, g)
        span = cur
    return frozenset(span)


def _join(ring, big, small):
    # I + J as a union of cosets of the subgroup `big`
    out = set(big)
    for w in small:
        if w not in out:
            out.update(vec_add(ring, w, x) for x in big)
    return frozenset(out)


def brute_ideals(p, s, n, cap=1 << 24):
    """All ideals of GR(p^2,s)[u]/(u^n - 1) as dense sets, by exhaustion.

    Principal spans of every ambient vector, then pairwise joins to the
    fixpoint (every ideal is a finite join of principal ones).
    """
    ring = gring.make_ring(p, s)
    ideals = set()
    for v in ambient(ring, n, cap):
        ideals.add(dense_span(ring, n, [v]))
    while True:
        fresh = set()
        pool = sorted(ideals, key=len)
        for i, a in enumerate(pool):
            for b in pool[i + 1:]:
                if a <= b or b <= a:
                    continue
                big, small = (a, b) if len(a) >= len(b) else (b, a)
                j = _join(ring, big, small)
                if j not in ideals:
                    fresh.add(j)
        if not fresh:
            return ideals
        ideals |= fresh


def brute_dual(ring, n, words, kind, cap=1 << 24):
    """The dual code by exhaustive scan of the ambient space.

    kind: "euclidean" uses sum x_i y_i; "hermitian" uses sum x_i conj(y_i).
    """
    if kind not in ("euclidean", "hermitian"):
        raise DomainError("unknown duality kind %r" % kind)
    words = list(words)
    if kind == "hermitian":
        words = [tuple(ring.conjugate(c) for c in w) for w in words]
    out = set()
    zero = ring.zero
    for v in ambient(ring, n, cap):
        for w in words:
            acc = zero
            for x, y in zip(v, w):
                acc = ring.add(acc, ring.mul(x, y))
            if acc != zero:
                break
        else:
            out.add(v)
    return frozenset(out)


def dense_code(code, cap=1 << 24):
    """The codeword set of a canonical code as a frozenset of vectors."""
    return frozenset(w.coeffs for w in cyclic.codewords(code, cap=cap))
