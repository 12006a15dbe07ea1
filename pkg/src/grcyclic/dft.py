"""Transform decomposition of cyclic codes of length n = m p^a, p coprime m.

A length-n vector c over GR(p^2,s) is regarded as c(X) = sum c_{i,j} X^(i+jm)
and mapped to m transform components

    c^_h = sum_{i,j} c_{i,j} u^((m' i + j) mod p^a) zeta^(h i),

polynomials in GR(p^2, s M)[u]/(u^(p^a) - 1), where zeta is a fixed
primitive m-th root of unity in GR(p^2, sM), M the multiplicative order of
p^s mod m, and m m' = 1 mod p^a.  Slot h depends only on the coset of h
(c^_{h p^s} is the coefficientwise p^s-power Frobenius of c^_h), and the
component at a representative of an m_h-element coset lands in the subring
GR(p^2, s m_h); this makes the map onto the product of the slot rings a
ring isomorphism, carrying cyclic codes to tuples of length-p^a ideals.
The inverse is Mattson-Solomon evaluation: with c^(Z) = sum_h
c^_{(m-h) mod m} Z^h, component i of the preimage is
u^(-i m') (1/m) c^(zeta^i).

Euclidean duality acts slotwise: Euclidean duals on the J0 slots, Hermitian
duals on the J1 slots, and the Euclidean dual of the partner slot at the
paired labels k <-> (m-k) mod m.
"""

from __future__ import annotations

import dataclasses
import functools
import itertools

from .gring import DomainError, get_embedding, make_ring, prime_factors
from .cyclic import (CanonicalCode, QuotPoly, as_qpoly, enumerate_ideals,
                     format_code, make_params, normalize, parse_code, qp_add,
                     qp_make, qp_mul, qp_scale, qp_shift, qp_smul, qp_zero,
                     _split_top)
from .cyclic import generators as code_generators
from .cosets import partition
from .duality import enumerate_self_dual, euclidean_dual, hermitian_dual


@dataclasses.dataclass(frozen=True)
class CompositeParams:
    """Length bookkeeping for n = m p^a over GR(p^2,s)."""
    p: int
    s: int
    m: int
    a: int

    @property
    def n(self):
        return self.m * self.p ** self.a

    @property
    def pa(self):
        return self.p ** self.a

    @property
    def ring(self):
        return make_ring(self.p, self.s)

    @property
    def part(self):
        return partition(self.m, self.p, self.s)

    @property
    def ext_degree(self):
        return self.s * _mult_order(pow(self.p, self.s, self.m) if self.m > 1 else 0,
                                     self.m)

    @property
    def ext(self):
        return make_ring(self.p, self.ext_degree)

    @property
    def mprime(self):
        return pow(self.m, -1, self.pa) if self.pa > 1 else 0

    def slot_params(self, h):
        """CodeParams of the length-p^a slot at (the coset of) label h."""
        return make_params(self.p, self.s * self.part.size_of(h), self.a)


def _mult_order(q, m):
    if m == 1:
        return 1
    order = 1
    x = q % m
    while x != 1:
        x = (x * q) % m
        order += 1
    return order


def make_composite(p, s, n):
    """Split n = m p^a and build CompositeParams (validates p, s via the ring)."""
    make_ring(p, s)
    if n < 1:
        raise DomainError("length n=%d must be positive" % n)
    a = 0
    m = n
    while m % p == 0:
        m //= p
        a += 1
    return CompositeParams(p, s, m, a)


@functools.lru_cache(maxsize=None)
def _zeta_powers(p, s, m):
    """(ext ring, tuple of zeta^0..zeta^(m-1)) for a primitive m-th root zeta."""
    cp = CompositeParams(p, s, m, 0)
    ext = cp.ext
    e, r = divmod(p ** ext.s - 1, m)  # (p^(sM) - 1)/m
    assert r == 0
    zeta = ext.pow(ext.xi, e)
    assert ext.pow(zeta, m) == ext.one
    for l in prime_factors(m):
        assert ext.pow(zeta, m // l) != ext.one
    out = [ext.one]
    for _ in range(m - 1):
        out.append(ext.mul(out[-1], zeta))
    return ext, tuple(out)


def _as_vector(cp, c):
    ring = cp.ring
    if isinstance(c, QuotPoly):
        c = c.coeffs
    c = tuple(c)
    if len(c) != cp.n:
        raise DomainError("expected a length-%d vector, got %d entries" % (cp.n, len(c)))
    for x in c:
        if not (isinstance(x, tuple) and len(x) == ring.s):
            raise DomainError("entry %r is not an element of %r" % (x, ring))
    return c


def dft_all(cp, c):
    """All m transform components of a base vector, over the big extension."""
    c = _as_vector(cp, c)
    ext, zpow = _zeta_powers(cp.p, cp.s, cp.m)
    emb = get_embedding(cp.ring, ext)
    lifted = [emb.map(x) for x in c]
    pa, m, mp = cp.pa, cp.m, cp.mprime
    out = []
    for h in range(m):
        acc = [ext.zero] * pa
        for i in range(m):
            zhi = zpow[(h * i) % m]
            for j in range(pa):
                x = lifted[i + j * m]
                if x != ext.zero:
                    acc[(mp * i + j) % pa] = ext.add(acc[(mp * i + j) % pa],
                                                     ext.mul(x, zhi))
        out.append(qp_make(ext, acc))
    return tuple(out)


def dft_forward(cp, c):
    """dict {representative: component}, each projected into its slot ring."""
    hat = dft_all(cp, c)
    ext = cp.ext
    out = {}
    for r in cp.part.reps:
        sub = cp.slot_params(r).ring
        emb = get_embedding(sub, ext)
        out[r] = qp_make(sub, [emb.project(x) for x in hat[r].coeffs])
    return out


def _expand_components(cp, comps):
    """Grow rep-indexed slot components to all m slots over the extension."""
    ext = cp.ext
    part = cp.part
    q = pow(cp.p, cp.s, cp.m) if cp.m > 1 else 0
    out = [None] * cp.m
    if set(comps) != set(part.reps):
        raise DomainError("components must be indexed by the representatives %r"
                          % (part.reps,))
    for r, poly in comps.items():
        sub = cp.slot_params(r).ring
        poly = as_qpoly(cp.slot_params(r), poly)
        emb = get_embedding(sub, ext)
        cur = qp_make(ext, [emb.map(x) for x in poly.coeffs])
        h = r
        for _ in range(part.size_of(r)):
            assert out[h] is None
            out[h] = cur
            h = (h * q) % cp.m
            cur = qp_make(ext, [ext.frobenius(x, cp.s) for x in cur.coeffs])
        assert h == r
    return tuple(out)


def dft_inverse_all(cp, hat):
    """Invert a full m-tuple of extension components back to a base vector."""
    ext, zpow = _zeta_powers(cp.p, cp.s, cp.m)
    if len(hat) != cp.m:
        raise DomainError("expected %d components, got %d" % (cp.m, len(hat)))
    emb = get_embedding(cp.ring, ext)
    pa, m, mp = cp.pa, cp.m, cp.mprime
    minv = pow(m, -1, cp.p ** 2)
    out = [None] * cp.n
    for i in range(m):
        acc = qp_zero(ext, pa)
        for h in range(m):
            comp = hat[(m - h) % m]
            acc = qp_add(acc, qp_scale(zpow[(i * h) % m], comp))
        d = qp_smul(minv, qp_shift(acc, -i * mp))
        for j in range(pa):
            out[i + j * m] = emb.project(d.coeffs[j])
    return tuple(out)


def dft_inverse(cp, comps):
    """Invert rep-indexed slot components (dict) back to a base vector."""
    return dft_inverse_all(cp, _expand_components(cp, comps))


# ---------------------------------------------------------------------------
# The module isomorphism Phi between m-tuples of length-p^a polynomials and
# length-n vectors: c_{i + jm} = [u^j] d_i.


def phi(cp, dvec):
    ring = cp.ring
    dvec = tuple(dvec)
    if len(dvec) != cp.m:
        raise DomainError("expected %d coordinates, got %d" % (cp.m, len(dvec)))
    out = [ring.zero] * cp.n
    for i, d in enumerate(dvec):
        if len(d.coeffs) != cp.pa or d.ring is not ring:
            raise DomainError("coordinate %d is not a length-%d polynomial over %r"
                              % (i, cp.pa, ring))
        for j, x in enumerate(d.coeffs):
            out[i + j * cp.m] = x
    return tuple(out)


def phi_inverse(cp, c):
    c = _as_vector(cp, c)
    ring = cp.ring
    return tuple(qp_make(ring, [c[i + j * cp.m] for j in range(cp.pa)])
                 for i in range(cp.m))


# ---------------------------------------------------------------------------
# Codes.


@dataclasses.dataclass(frozen=True)
class DecomposedCode:
    """A cyclic code of composite length as its tuple of slot ideals."""
    cparams: CompositeParams
    components: tuple  # ((rep, CanonicalCode), ...) in representative order

    def component(self, h):
        for r, code in self.components:
            if r == h:
                return code
        raise DomainError("no component at representative %d" % h)


def make_decomposed(cp, comps):
    """Assemble a DecomposedCode from a dict {rep: CanonicalCode}."""
    if set(comps) != set(cp.part.reps):
        raise DomainError("components must be indexed by the representatives %r"
                          % (cp.part.reps,))
    for r, code in comps.items():
        if code.params != cp.slot_params(r):
            raise DomainError("component at %d has parameters %r, expected %r"
                              % (r, code.params, cp.slot_params(r)))
    return DecomposedCode(cp, tuple((r, comps[r]) for r in cp.part.reps))


def decompose_code(cp, gens):
    """The decomposition of the cyclic code generated by base vectors."""
    slots = {r: [] for r in cp.part.reps}
    for g in gens:
        for r, comp in dft_forward(cp, g).items():
            slots[r].append(comp)
    return make_decomposed(
        cp, {r: normalize(cp.slot_params(r), polys) for r, polys in slots.items()})


def compose_code(dc):
    """Generating vectors (over the base ring) of the composed cyclic code."""
    cp = dc.cparams
    out = []
    for r, code in dc.components:
        zero_comps = {r2: qp_zero(cp.slot_params(r2).ring, cp.pa)
                      for r2 in cp.part.reps}
        for g in code_generators(code):
            comps = dict(zero_comps)
            comps[r] = g
            out.append(dft_inverse(cp, comps))
    return tuple(out)


def dual_decomposition(dc):
    """Slotwise Euclidean dual: E-duals at J0, H-duals at J1, paired J2."""
    cp = dc.cparams
    part = cp.part
    comps = dict(dc.components)
    out = {}
    for r in part.J0:
        out[r] = euclidean_dual(comps[r])
    for r in part.J1:
        out[r] = hermitian_dual(comps[r])
    for r in part.J2p + part.J2pp:
        out[r] = euclidean_dual(comps[(cp.m - r) % cp.m])
    return make_decomposed(cp, out)


def is_self_dual_decomposed(dc):
    return dual_decomposition(dc) == dc


def enumerate_self_dual_composite(cp):
    """All Euclidean self-dual cyclic codes of length n, as decompositions.

    Deterministic order: the Cartesian product of Euclidean self-dual slot
    codes at J0, Hermitian self-dual ones at J1, and all ideals at J2',
    with each J2'' partner forced to the Euclidean dual of its mate.
    """
    part = cp.part
    pools = []
    for r in part.J0:
        pools.append([(r, c) for c in enumerate_self_dual(cp.slot_params(r), "euclidean")])
    for r in part.J1:
        pools.append([(r, c) for c in enumerate_self_dual(cp.slot_params(r), "hermitian")])
    for r in part.J2p:
        pools.append([(r, c) for c in enumerate_ideals(cp.slot_params(r))])
    for combo in itertools.product(*pools):
        comps = dict(combo)
        for r in part.J2p:
            comps[(cp.m - r) % cp.m] = euclidean_dual(comps[r])
        yield make_decomposed(cp, comps)


# ---------------------------------------------------------------------------
# Literals: n;[rep:code,rep:code,...]


def format_decomposed(dc):
    body = ",".join("%d:%s" % (r, format_code(code)) for r, code in dc.components)
    return "%d;[%s]" % (dc.cparams.n, body)


def parse_decomposed(text):
    text = text.replace(" ", "")
    head, _, body = text.partition(";")
    if not head.isdigit() or not (body.startswith("[") and body.endswith("]")):
        raise DomainError("malformed decomposition literal %r" % text)
    n = int(head)
    comps = {}
    for item in _split_top(body[1:-1]):
        label, _, lit = item.partition(":")
        if not label.isdigit():
            raise DomainError("malformed component label in %r" % item)
        comps[int(label)] = parse_code(lit)
    if 0 not in comps:
        raise DomainError("decomposition literal lacks the slot at 0")
    base = comps[0].params
    if base.n == 0 or n % base.n:
        raise DomainError("total length %d incompatible with slot length %d"
                          % (n, base.n))
    cp = make_composite(base.p, base.s, n)
    if cp.a != base.a:
        raise DomainError("slot length %d is not the p-power part of %d" % (base.n, n))
    return make_decomposed(cp, comps)
