"""Cyclic codes of length p^a over GR(p^2, s) in canonical two-generator form.

A cyclic code is an ideal of S = GR(p^2, s)[u]/(u^n - 1) with n = p^a.  In
the local coordinate Y = u - 1 the quotient relation becomes

    Y^n = -p*q(Y),    (Y+1)^n - 1 = Y^n + p*q(Y),

and q mod p is supported exactly on degrees t*p^(a-1), t = 1..p-1, with
lowest degree p^(a-1) (for a = 0, q = 0).  Every ideal is exactly one of

    tors(i1)        = <p*Y^i1>,                    0 <= i1 <= n
    full(i0,i1,h)   = <Y^i0 + p*h(Y), p*Y^i1>,     0 <= i1 <= i0 <= n-1

where h(Y) = h_0 + h_1 Y + ... + h_{i1-1} Y^{i1-1} has Teichmuller
coefficients and satisfies the compatibility constraint

    val( Ybar^(n-i0) * hbar(Y) - qbar(Y) ) >= i1          (*)

which pins digit h_j to qbar_{j+n-i0} for j < i1-(n-i0) and leaves the top
min(i1, n-i0) digits free; a pair (i0, i1) admits any h at all iff
min(n-i0, i1) <= val(qbar) = p^(a-1).  Distinct parameter triples give
distinct ideals, so CanonicalCode values compare by ==.

|full(i0,i1,h)| = p^(s*(2n-i0-i1)) and |tors(i1)| = p^(s*(n-i1)); the number
of ideals of p-adic parameter d (|C| = p^(s*(2n-d))) is

    c(d) = (p^(s*(l+1)) - 1) / (p^s - 1),   l = min(floor(d/2), p^(a-1)),

symmetric under d <-> 2n-d, giving sum 2*sum_{d<n} c(d) + c(n) in total.

Polynomials in u are QuotPoly values (coefficient tuples over a ring
context); the Y coordinates are obtained by Taylor expansion at u = 1.
"""

from __future__ import annotations

import dataclasses
import functools
import itertools
import math
import re

from . import gring
from .gring import DomainError


@dataclasses.dataclass(frozen=True)
class CodeParams:
    """Length parameters: cyclic codes of length n = p^a over GR(p^2, s)."""
    p: int
    s: int
    a: int

    @property
    def n(self):
        return self.p ** self.a

    @property
    def ring(self):
        return gring.make_ring(self.p, self.s)

    @property
    def field(self):
        return gring.make_ring(self.p, self.s).residue_field


def make_params(p, s, a):
    if not gring.is_prime(p):
        raise DomainError("p must be prime, got %d" % p)
    if s < 1:
        raise DomainError("s must be >= 1, got %d" % s)
    if a < 0:
        raise DomainError("a must be >= 0, got %d" % a)
    return CodeParams(p, s, a)


# ---------------------------------------------------------------------------
# Polynomials modulo u^n - 1 (any length n; cyclic convolution product).


@dataclasses.dataclass(frozen=True)
class QuotPoly:
    """An element of ring[u]/(u^len - 1), coeffs ascending in u."""
    ring: object
    coeffs: tuple


def qp_make(ring, coeffs):
    return QuotPoly(ring, tuple(tuple(c % ring.pp for c in v) for v in coeffs))


def qp_zero(ring, n):
    return QuotPoly(ring, (ring.zero,) * n)


def qp_one(ring, n):
    return QuotPoly(ring, (ring.one,) + (ring.zero,) * (n - 1))


def qp_from_ints(ring, ints):
    return QuotPoly(ring, tuple(ring.smul(c, ring.one) for c in ints))


def qp_add(f, g):
    r = f.ring
    return QuotPoly(r, tuple(r.add(x, y) for x, y in zip(f.coeffs, g.coeffs)))


def qp_sub(f, g):
    r = f.ring
    return QuotPoly(r, tuple(r.sub(x, y) for x, y in zip(f.coeffs, g.coeffs)))


def qp_neg(f):
    r = f.ring
    return QuotPoly(r, tuple(r.neg(x) for x in f.coeffs))


def qp_scale(c, f):
    """Multiply by a ring element c."""
    r = f.ring
    return QuotPoly(r, tuple(r.mul(c, x) for x in f.coeffs))


def qp_smul(k, f):
    """Multiply by an integer scalar k."""
    r = f.ring
    return QuotPoly(r, tuple(r.smul(k, x) for x in f.coeffs))


def qp_mul(f, g):
    r = f.ring
    n = len(f.coeffs)
    out = [r.zero] * n
    for i, x in enumerate(f.coeffs):
        if x != r.zero:
            for j, y in enumerate(g.coeffs):
                if y != r.zero:
                    k = i + j if i + j < n else i + j - n
                    out[k] = r.add(out[k], r.mul(x, y))
    return QuotPoly(r, tuple(out))


def qp_pow(f, e):
    result = qp_one(f.ring, len(f.coeffs))
    base = f
    while e:
        if e & 1:
            result = qp_mul(result, base)
        base = qp_mul(base, base)
        e >>= 1
    return result


def qp_shift(f, k):
    """Multiply by u^k (cyclic rotation)."""
    n = len(f.coeffs)
    k %= n
    return QuotPoly(f.ring, f.coeffs[n - k:] + f.coeffs[:n - k])


def qp_reverse(f):
    """The reciprocal v(u) |-> v(u^-1), a ring automorphism."""
    c = f.coeffs
    n = len(c)
    return QuotPoly(f.ring, (c[0],) + tuple(c[n - i] for i in range(1, n)))


def as_qpoly(params, g):
    """Coerce a QuotPoly or raw coefficient sequence to length-n QuotPoly."""
    ring = params.ring
    if isinstance(g, QuotPoly):
        if g.ring is not ring or len(g.coeffs) != params.n:
            raise DomainError("polynomial does not live in GR(%d^2,%d)[u]/(u^%d-1)"
                              % (params.p, params.s, params.n))
        return g
    coeffs = list(g)
    if len(coeffs) != params.n:
        raise DomainError("expected %d coefficients, got %d" % (params.n, len(coeffs)))
    return qp_make(ring, coeffs)


# -- Y = u - 1 coordinates (length n = p^a only)


def to_y(params, f):
    """Coefficients of f in powers of Y = u - 1 (Taylor expansion at 1)."""
    ring = params.ring
    work = list(f.coeffs)
    ys = []
    while work:
        if len(work) == 1:
            ys.append(work[0])
            break
        # synthetic division by u - 1: remainder first, quotient continues
        q = [ring.zero] * (len(work) - 1)
        q[-1] = work[-1]
        for i in range(len(work) - 2, 0, -1):
            q[i - 1] = ring.add(work[i], q[i])
        ys.append(ring.add(work[0], q[0]))
        work = q
    return tuple(ys)


def from_y(params, ys):
    """Rebuild the u-coordinate QuotPoly from Y coefficients (len <= n)."""
    ring = params.ring
    acc = []
    for d in reversed(list(ys)):
        nxt = [ring.zero] * (len(acc) + 1)
        for i, c in enumerate(acc):
            nxt[i + 1] = ring.add(nxt[i + 1], c)
            nxt[i] = ring.sub(nxt[i], c)
        nxt[0] = ring.add(nxt[0], d)
        acc = nxt
    acc += [ring.zero] * (params.n - len(acc))
    return QuotPoly(ring, tuple(acc[:params.n]))


# -- residue polynomials: fixed-length tuples of field elements


def _fval(poly, zero):
    for i, c in enumerate(poly):
        if c != zero:
            return i
    return None


def _series_inv(field, u, prec):
    # inverse of the power series u (u[0] != 0) to the given precision
    inv0 = field.inv(u[0])
    out = [inv0]
    for k in range(1, prec):
        acc = field.zero
        for j in range(1, k + 1):
            uj = u[j] if j < len(u) else field.zero
            acc = field.add(acc, field.mul(uj, out[k - j]))
        out.append(field.neg(field.mul(inv0, acc)))
    return tuple(out)


@functools.lru_cache(maxsize=None)
def qbar(params):
    """q mod p, where (Y+1)^n - 1 = Y^n + p*q(Y); tuple of field elements."""
    field = params.field
    n = params.n
    out = []
    for k in range(n):
        c = math.comb(n, k) if k else 0
        assert c % params.p == 0
        out.append(field.element(c // params.p))
    return tuple(out)


def qbar_val(params):
    """val(qbar) = p^(a-1) for a >= 1; None (infinity) for a = 0."""
    v = _fval(qbar(params), params.field.zero)
    assert v is None or v == params.p ** (params.a - 1)
    return v


# ---------------------------------------------------------------------------
# Canonical codes.


@dataclasses.dataclass(frozen=True)
class CanonicalCode:
    """Canonical ideal data; i0 is None for the torsion-only family."""
    params: CodeParams
    i0: object
    i1: int
    h: tuple

    @property
    def torsion_only(self):
        return self.i0 is None


def _star_ok(params, i0, i1, hbar):
    field = params.field
    n = params.n
    qb = qbar(params)
    for k in range(i1):
        j = k - (n - i0)
        hk = hbar[j] if 0 <= j < len(hbar) else field.zero
        if hk != qb[k]:
            return False
    return True


def make_canonical(params, i0, i1, h=()):
    """Validate (and if needed canonicalize) ideal data.

    Structural violations raise DomainError; structurally valid but
    non-canonical data (i0 = n, or h breaking the compatibility constraint)
    is routed through normalize() so equal values always mean equal ideals.
    """
    n = params.n
    ring = params.ring
    if i0 is None:
        if not 0 <= i1 <= n:
            raise DomainError("torsion exponent i1=%d outside [0, %d]" % (i1, n))
        if h:
            raise DomainError("torsion-only codes carry no digit vector")
        return CanonicalCode(params, None, i1, ())
    if not 0 <= i1 <= i0 <= n:
        raise DomainError("need 0 <= i1 <= i0 <= %d, got i0=%d i1=%d" % (n, i0, i1))
    h = tuple(h)
    if len(h) != i1:
        raise DomainError("digit vector has length %d, expected i1=%d" % (len(h), i1))
    for d in h:
        if not (isinstance(d, tuple) and len(d) == ring.s):
            raise DomainError("digit %r is not an element of %r" % (d, ring))
        if not ring.is_teich(d):
            raise DomainError("digit %r is not Teichmuller in %r" % (d, ring))
    hbar = tuple(ring.residue(d) for d in h)
    if i0 == n or not _star_ok(params, i0, i1, hbar):
        return normalize(params, generators(CanonicalCode(params, i0, i1, h)))
    return CanonicalCode(params, i0, i1, h)


def full_code(params, i0, i1, h):
    return make_canonical(params, i0, i1, h)


def torsion_code(params, i1):
    return make_canonical(params, None, i1)


def generators(code):
    """Defining generators as QuotPoly values: (f, p*Y^i1) or (p*Y^i1,)."""
    params = code.params
    ring = params.ring
    yy = qp_from_ints(ring, [-1, 1] + [0] * (params.n - 2)) if params.n > 1 \
        else qp_zero(ring, 1)  # u - 1 = 0 when n = 1
    g2 = qp_smul(params.p, qp_pow(yy, code.i1))
    if code.torsion_only:
        return (g2,)
    f = qp_pow(yy, code.i0)
    for j, d in enumerate(code.h):
        f = qp_add(f, qp_scale(ring.smul(params.p, d), qp_pow(yy, j)))
    return (f, g2)


def cardinality(code):
    params = code.params
    if code.torsion_only:
        return params.p ** (params.s * (params.n - code.i1))
    return params.p ** (params.s * (2 * params.n - code.i0 - code.i1))


def normalize(params, gens):
    """The canonical form of the ideal generated by arbitrary polynomials."""
    ring = params.ring
    field = params.field
    n = params.n
    polys = [as_qpoly(params, g) for g in gens]
    if not polys:
        return CanonicalCode(params, None, n, ())
    ys_list = [to_y(params, g) for g in polys]
    res_list = [tuple(ring.residue(c) for c in ys) for ys in ys_list]
    vals = [_fval(r, field.zero) for r in res_list]
    live = [v for v in vals if v is not None]
    if not live:
        i1 = n
        for ys in ys_list:
            rho = tuple(ring.p_mult_residue(c) for c in ys)
            v = _fval(rho, field.zero)
            if v is not None:
                i1 = min(i1, v)
        return CanonicalCode(params, None, i1, ())
    i0 = min(live)
    idx = vals.index(i0)
    # unit-normalize the witness: V * g = Y^i0 + p*w with V a lifted series inverse
    ubar = res_list[idx][i0:]
    vbar = _series_inv(field, ubar, n - i0)
    v_poly = from_y(params, [ring.lift(c) for c in vbar])
    f_u = qp_mul(v_poly, polys[idx])
    f_y = to_y(params, f_u)
    fbar = tuple(ring.residue(c) for c in f_y)
    assert all(c == field.zero for k, c in enumerate(fbar) if k != i0) and \
        fbar[i0] == field.one
    w_y = list(f_y)
    w_y[i0] = ring.sub(w_y[i0], ring.one)
    wbar = tuple(ring.p_mult_residue(c) for c in w_y)
    # torsion part: p*Y^i0 = p*f, Y^(n-i0)*f = p*(Y^(n-i0)*w - q), plus the
    # reductions of every other generator modulo f
    tor = [tuple(field.one if k == i0 else field.zero for k in range(n))]
    tor.append(tuple(
        field.sub(wbar[k - (n - i0)] if k >= n - i0 else field.zero, qbar(params)[k])
        for k in range(n)))
    for t, g in enumerate(polys):
        if t == idx:
            continue
        if vals[t] is None:
            tor.append(tuple(ring.p_mult_residue(c) for c in ys_list[t]))
            continue
        alpha = res_list[t][i0:] + (field.zero,) * i0
        a_poly = from_y(params, [ring.lift(c) for c in alpha])
        r = qp_sub(g, qp_mul(a_poly, f_u))
        r_y = to_y(params, r)
        assert all(c % params.p == 0 for v in r_y for c in v)
        tor.append(tuple(ring.p_mult_residue(c) for c in r_y))
    i1 = i0
    for rho in tor:
        v = _fval(rho, field.zero)
        if v is not None:
            i1 = min(i1, v)
    h = tuple(ring.teich_lift(wbar[j]) for j in range(i1))
    code = CanonicalCode(params, i0, i1, h)
    assert _star_ok(params, i0, i1, tuple(ring.residue(d) for d in h))
    return code


def contains(code, poly):
    """Membership test for a QuotPoly (or raw coefficients)."""
    params = code.params
    ring = params.ring
    field = params.field
    n = params.n
    poly = as_qpoly(params, poly)
    ys = to_y(params, poly)
    res = tuple(ring.residue(c) for c in ys)
    v = _fval(res, field.zero)
    if code.torsion_only:
        if v is not None:
            return False
        rho = tuple(ring.p_mult_residue(c) for c in ys)
        rv = _fval(rho, field.zero)
        return rv is None or rv >= code.i1
    if v is not None and v < code.i0:
        return False
    if v is None:
        # element of pR; C intersect pR = p * (Ybar^i1)
        r = poly
    else:
        f_u, _ = generators(code)
        alpha = res[code.i0:] + (field.zero,) * code.i0
        a_poly = from_y(params, [ring.lift(c) for c in alpha])
        r = qp_sub(poly, qp_mul(a_poly, f_u))
    r_y = to_y(params, r)
    if any(c % params.p for vec in r_y for c in vec):
        return False
    rho = tuple(ring.p_mult_residue(c) for c in r_y)
    rv = _fval(rho, field.zero)
    return rv is None or rv >= code.i1


def codewords(code, cap=1 << 20):
    """Iterate all codewords as QuotPoly values (unique, deterministic order).

    Raises DomainError when |C| exceeds cap (pass cap=None to disable).
    """
    size = cardinality(code)
    if cap is not None and size > cap:
        raise DomainError("code has %d codewords, exceeding cap %d" % (size, cap))
    params = code.params
    ring = params.ring
    field = params.field
    n = params.n
    ymon = []  # p * Y^j in u coordinates
    for j in range(n):
        ys = [ring.zero] * n
        ys[j] = ring.smul(params.p, ring.one)
        ymon.append(from_y(params, ys))
    free_t = list(range(code.i1, n))
    if code.torsion_only:
        for combo in itertools.product(field.elements(), repeat=len(free_t)):
            acc = qp_zero(ring, n)
            for c, j in zip(combo, free_t):
                if c != field.zero:
                    acc = qp_add(acc, qp_scale(ring.lift(c), ymon[j]))
            yield acc
        return
    f_u, _ = generators(code)
    yf = []  # Y^t * f in u coordinates
    cur = f_u
    ymul = qp_from_ints(ring, [-1, 1] + [0] * (n - 2)) if n > 1 else None
    for t in range(n - code.i0):
        yf.append(cur)
        if ymul is not None:
            cur = qp_mul(cur, ymul)
    for acombo in itertools.product(field.elements(), repeat=n - code.i0):
        base = qp_zero(ring, n)
        for c, poly in zip(acombo, yf):
            if c != field.zero:
                base = qp_add(base, qp_scale(ring.lift(c), poly))
        for combo in itertools.product(field.elements(), repeat=len(free_t)):
            acc = base
            for c, j in zip(combo, free_t):
                if c != field.zero:
                    acc = qp_add(acc, qp_scale(ring.lift(c), ymon[j]))
            yield acc


def enumerate_ideals(params, limit=1 << 24):
    """All cyclic codes of length p^a in canonical form, deterministic order.

    Guarded by p^(s*n) <= limit (pass limit=None to disable).
    """
    n = params.n
    if limit is not None and params.p ** (params.s * n) > limit:
        raise DomainError("enumeration at p^(s*n) = %d exceeds limit %d"
                          % (params.p ** (params.s * n), limit))
    ring = params.ring
    field = params.field
    qb = qbar(params)
    vq = qbar_val(params)
    vq_eff = n + 1 if vq is None else vq
    for i0 in range(n):
        for i1 in range(i0 + 1):
            if min(n - i0, i1) > vq_eff:
                continue
            npin = max(0, i1 - (n - i0))
            pinned = [ring.teich_lift(qb[j + (n - i0)]) for j in range(npin)]
            nfree = i1 - npin
            for combo in itertools.product(field.elements(), repeat=nfree):
                h = tuple(pinned) + tuple(ring.teich_lift(c) for c in combo)
                yield CanonicalCode(params, i0, i1, h)
    for i1 in range(n + 1):
        yield CanonicalCode(params, None, i1, ())


def count_ideals_by_size(params):
    """dict {cardinality: number of ideals}, from the canonical enumeration
    parameters only (no closed formula; used as an independent cross-check)."""
    out = {}
    n = params.n
    vq = qbar_val(params)
    vq_eff = n + 1 if vq is None else vq
    for i0 in range(n):
        for i1 in range(i0 + 1):
            if min(n - i0, i1) > vq_eff:
                continue
            cnt = params.p ** (params.s * min(i1, n - i0))
            size = params.p ** (params.s * (2 * n - i0 - i1))
            out[size] = out.get(size, 0) + cnt
    for i1 in range(n + 1):
        size = params.p ** (params.s * (n - i1))
        out[size] = out.get(size, 0) + 1
    return out


# ---------------------------------------------------------------------------
# Literals.


def _split_top(text, sep=","):
    parts = []
    depth = 0
    cur = []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def format_code(code):
    p, s, a = code.params.p, code.params.s, code.params.a
    if code.torsion_only:
        return "tors(%d,%d,%d;%d)" % (p, s, a, code.i1)
    ring = code.params.ring
    digits = ",".join(gring.format_teich(ring, d) for d in code.h)
    return "full(%d,%d,%d;%d,%d;[%s])" % (p, s, a, code.i0, code.i1, digits)


_TORS_RE = re.compile(r"tors\((\d+),(\d+),(\d+);(\d+)\)")
_FULL_RE = re.compile(r"full\((\d+),(\d+),(\d+);(\d+),(\d+);\[(.*)\]\)", re.DOTALL)


def parse_code(text):
    text = text.replace(" ", "")
    m = _TORS_RE.fullmatch(text)
    if m:
        params = make_params(int(m.group(1)), int(m.group(2)), int(m.group(3)))
        return make_canonical(params, None, int(m.group(4)))
    m = _FULL_RE.fullmatch(text)
    if m:
        params = make_params(int(m.group(1)), int(m.group(2)), int(m.group(3)))
        i0, i1 = int(m.group(4)), int(m.group(5))
        body = m.group(6)
        digits = []
        if body:
            for part in _split_top(body):
                digits.append(gring.parse_elem(params.ring, part))
        return make_canonical(params, i0, i1, tuple(digits))
    raise DomainError("malformed code literal %r" % text)


def format_qpoly(f):
    ring = f.ring
    if all(c == ring.zero for c in f.coeffs):
        return "0"
    parts = []
    for k in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[k]
        if c == ring.zero:
            continue
        if all(v == 0 for v in c[1:]):
            cs = str(c[0])
        else:
            cs = "(" + gring.format_elem(ring, c) + ")"
        if k == 0:
            parts.append(cs)
        else:
            parts.append("%s*u^%d" % (cs, k))
    return "+".join(parts)


def parse_qpoly(ring, n, text):
    """Parse a polynomial in u with scalar, T(e) or (element) coefficients."""
    text = text.replace(" ", "")
    coeffs = [ring.zero] * n
    for sign, term in gring._split_terms(text):
        # locate the u-part at top level, if any
        depth = 0
        upos = None
        for i, ch in enumerate(term):
            if ch in "([":
                depth += 1
            elif ch in ")]":
                depth -= 1
            elif ch == "u" and depth == 0:
                upos = i
                break
        if upos is None:
            coef_str, deg = term, 0
        else:
            coef_str = term[:upos].rstrip("*")
            rest = term[upos + 1:]
            if rest == "":
                deg = 1
            elif rest.startswith("^") and rest[1:].isdigit():
                deg = int(rest[1:])
            else:
                raise DomainError("malformed term %r in polynomial literal" % term)
        if coef_str == "":
            c = ring.one
        elif re.fullmatch(r"\d+", coef_str):
            c = ring.smul(int(coef_str), ring.one)
        else:
            c = gring.parse_elem(ring, coef_str)
        if sign < 0:
            c = ring.neg(c)
        k = deg % n
        coeffs[k] = ring.add(coeffs[k], c)
    return QuotPoly(ring, tuple(coeffs))
