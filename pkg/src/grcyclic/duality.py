"""Duals and self-dual codes for cyclic codes of length p^a over GR(p^2,s).

The Euclidean dual of C is taken under <x,y> = sum x_t y_t, the Hermitian
dual under sum x_t conj(y_t) (s even).  Both duals of a canonical ideal are
computed symbolically:

  * torsion-only <p Y^i1>            -> normalize(<Y^(n-i1), p>)
  * full with i1 = 0 (contains pR)   -> <p Y^(n-i0)>
  * full with i0 + i1 <= n           -> explicit generator pair built from
    binomial sums in Y = u - 1 (see euclidean_dual below), then normalized
  * full with i0 + i1 > n            -> annihilator-reversal route: the dual
    is <Y^(n-i1) + p w*, p Y^(n-i0)> where w* is the unique solution of an
    exact residue congruence against the reciprocal of f (_dual_reversal)

Self-dual codes force i0 + i1 = n, so they are the full codes
<Y^(n-i1) + p h(Y), p Y^i1> whose digit vector h solves a small linear
system M x = b over the residue field (Euclidean), respectively the
twisted system M x + x^sigma - x = b with sigma the conjugation
(Hermitian).  M is lower triangular with

    m_ij = (-1)^(i0+j-1) C(i0-j+1, i-j)   (j < i),
    m_ii = (-1)^(i0+i-1) + 1,

indices 1-based, entries mod p, and b is the 0/1 vector with its single 1
(if any) at row p^(a-1) - i1 + 1.  The Hermitian system always has exactly
p^(s*i1/2) solutions; the Euclidean one has none or a coset of the kernel.
"""

from __future__ import annotations

import itertools
import math

from .gring import DomainError
from .linalg import solve_mod_p
from .cyclic import (CanonicalCode, _fval, _series_inv, as_qpoly, cardinality,
                     generators, make_canonical, normalize, qp_add, qp_from_ints,
                     qp_mul, qp_one, qp_pow, qp_reverse, qp_scale, qp_smul,
                     qp_sub, qp_zero, to_y, torsion_code)


def _ypoly(params):
    ring = params.ring
    if params.n == 1:
        return qp_zero(ring, 1)  # u - 1 = 0 when n = 1
    return qp_from_ints(ring, [-1, 1] + [0] * (params.n - 2))


def conjugate_code(code):
    """The coefficientwise conjugate code; same (i0, i1), conjugated digits."""
    ring = code.params.ring
    if ring.s % 2:
        raise DomainError("conjugation needs even s, got s=%d" % ring.s)
    if code.torsion_only:
        return code
    return make_canonical(code.params, code.i0, code.i1,
                          tuple(ring.conjugate(d) for d in code.h))


def euclidean_dual(code):
    """The canonical form of the Euclidean dual."""
    params = code.params
    n = params.n
    p = params.p
    yy = _ypoly(params)
    if code.torsion_only:
        gens = [qp_pow(yy, n - code.i1), qp_smul(p, qp_one(params.ring, n))]
        return normalize(params, gens)
    if code.i1 == 0:
        return torsion_code(params, n - code.i0)
    if code.i0 + code.i1 <= n:
        return _dual_binomial(code)
    return _dual_reversal(code)


def hermitian_dual(code):
    """The canonical form of the Hermitian dual (s even)."""
    return conjugate_code(euclidean_dual(code))


def is_self_dual(code, kind):
    if kind == "euclidean":
        return euclidean_dual(code) == code
    if kind == "hermitian":
        return hermitian_dual(code) == code
    raise DomainError("unknown duality kind %r" % kind)


def _dual_binomial(code):
    """Dual of <Y^i0 + p h(Y), p Y^i1> with 1 <= i1, i0 + i1 <= n = p^a.

    The first dual generator is

        Y^(n-i1) - p Y^(n-i0-i1) sum_t A_t Y^t + sum_t B_t Y^(t p^(a-1) - i1)

    with A_t = sum_{j<=t} (-1)^(i0+j) C(i0-j, t-j) h_j for 0 <= t < i1 and
    B_t = sum_{1<=j<=min(t,p-1)} (-1)^(j+1) C(p-j, t-j) C(p, j) for
    1 <= t <= K = floor((n-i0+i1-1)/p^(a-1)); the second is p Y^(n-i0).
    Every C(p,j) above is divisible by p, so the B terms live in pR and the
    residue valuation stays n - i1; the exact integer binomials matter mod
    p^2 and are not reducible mod p.
    """
    params = code.params
    ring = params.ring
    n, p = params.n, params.p
    i0, i1, h = code.i0, code.i1, code.h
    pa1 = p ** (params.a - 1)
    yy = _ypoly(params)
    g1 = qp_pow(yy, n - i1)
    for t in range(i1):
        at = ring.zero
        for j in range(t + 1):
            c = math.comb(i0 - j, t - j)
            if (i0 + j) % 2:
                c = -c
            at = ring.add(at, ring.smul(c, h[j]))
        if at != ring.zero:
            g1 = qp_sub(g1, qp_scale(ring.smul(p, at), qp_pow(yy, n - i0 - i1 + t)))
    kmax = (n - i0 + i1 - 1) // pa1
    for t in range(1, kmax + 1):
        bt = 0
        for j in range(1, min(t, p - 1) + 1):
            term = math.comb(p - j, t - j) * math.comb(p, j)
            bt += -term if j % 2 == 0 else term
        if bt % ring.pp:
            g1 = qp_add(g1, qp_smul(bt, qp_pow(yy, t * pa1 - i1)))
    g2 = qp_smul(p, qp_pow(yy, n - i0))
    return normalize(params, [g1, g2])


def _poly_mul_trunc(field, f, g, prec):
    out = [field.zero] * prec
    for i, a in enumerate(f[:prec]):
        if a == field.zero:
            continue
        for j, b in enumerate(g[:prec - i]):
            if b != field.zero:
                out[i + j] = field.add(out[i + j], field.mul(a, b))
    return tuple(out)


def _dual_reversal(code):
    """Dual of a full code via the reciprocal annihilator (any 1 <= i1).

    With f~ the reciprocal of f, the dual is <g, p Y^(n-i0)> where
    g = Y^(n-i1) + p w*(Y) and w* is the unique mod Y^(n-i0) solution of
    gamma + w* rho = 0 in F[Y]/(Y^n); here rho = residue(f~) (valuation
    exactly i0) and p gamma = Y^(n-i1) f~, which lies in pR because
    (n-i1) + i0 >= n.  Used where the binomial route needs i0 + i1 <= n.
    """
    params = code.params
    ring = params.ring
    field = params.field
    n, p = params.n, params.p
    i0, i1 = code.i0, code.i1
    i0s, i1s = n - i1, n - i0
    f_u = generators(code)[0]
    ft = qp_reverse(f_u)
    ft_y = to_y(params, ft)
    rho = tuple(ring.residue(c) for c in ft_y)
    assert _fval(rho, field.zero) == i0
    g0_y = to_y(params, qp_mul(qp_pow(_ypoly(params), i0s), ft))
    gamma = tuple(ring.p_mult_residue(c) for c in g0_y)
    assert all(c == field.zero for c in gamma[:i0])
    vinv = _series_inv(field, rho[i0:], i1s)
    w = tuple(field.neg(c) for c in _poly_mul_trunc(field, gamma[i0:], vinv, i1s))
    yy = _ypoly(params)
    g1 = qp_pow(yy, i0s)
    for j, c in enumerate(w):
        if c != field.zero:
            g1 = qp_add(g1, qp_scale(ring.smul(p, ring.teich_lift(c)), qp_pow(yy, j)))
    g2 = qp_smul(p, qp_pow(yy, i1s))
    return normalize(params, [g1, g2])


# ---------------------------------------------------------------------------
# Self-dual codes: the digit-vector linear systems.


def selfdual_system(params, i1):
    """(M, b) over F_p for self-dual digit vectors at torsion exponent i1.

    A self-dual code has |C| = p^(s n), forcing i0 = n - i1; its digits
    x_1..x_i1 (h_j = x_{j+1} as Teichmuller lifts) must satisfy M x = b
    (Euclidean) or M x + x^sigma - x = b (Hermitian).  Requires
    1 <= i1 <= p^(a-1) (larger i1 admits no code with i0 = n - i1).
    """
    n, p = params.n, params.p
    pa1 = p ** (params.a - 1)
    if not 1 <= i1 <= pa1:
        raise DomainError("self-dual systems need 1 <= i1 <= p^(a-1) = %d, got %d"
                          % (pa1, i1))
    i0 = n - i1
    mat = [[0] * i1 for _ in range(i1)]
    for i in range(1, i1 + 1):
        for j in range(1, i + 1):
            if j == i:
                v = (1 if (i0 + i - 1) % 2 == 0 else -1) + 1
            else:
                v = math.comb(i0 - j + 1, i - j)
                if (i0 + j - 1) % 2:
                    v = -v
            mat[i - 1][j - 1] = v % p
    b = [0] * i1
    k = pa1 - i1 + 1
    if 1 <= k <= i1:
        b[k - 1] = 1
    return mat, b


def system_residual(params, mat, b, x, kind):
    """Row values of the self-dual system at x minus b; all-zero iff x solves."""
    field = params.field
    out = []
    for i in range(len(mat)):
        acc = field.zero
        for j in range(i + 1):
            acc = field.add(acc, field.smul(mat[i][j], x[j]))
        if kind == "hermitian":
            acc = field.add(acc, field.psi(x[i]))
        out.append(field.sub(acc, field.element(b[i])))
    return tuple(out)


def solve_selfdual_system(params, mat, b, kind):
    """All residue-field solution vectors, sorted; [] when inconsistent.

    Euclidean: M has prime-field entries, so the F_{p^s}-solutions are the
    F_p particular solution plus the F_p kernel basis with coefficients
    ranging over the whole field.  Hermitian: x |-> x^sigma - x is only
    F_p-linear, so each of the i1 field unknowns is split into s prime-field
    coordinates (the conjugation acting as an s x s block) and the enlarged
    system is solved over F_p directly.
    """
    p = params.p
    s = params.s
    field = params.field
    i1 = len(mat)
    if kind == "euclidean":
        sol = solve_mod_p([list(r) for r in mat], b, p)
        if sol is None:
            return []
        part, basis = sol
        out = []
        for combo in itertools.product(field.elements(), repeat=len(basis)):
            x = [field.element(part[j]) for j in range(i1)]
            for lam, vec in zip(combo, basis):
                for j in range(i1):
                    if vec[j]:
                        x[j] = field.add(x[j], field.smul(vec[j], lam))
            out.append(tuple(x))
    elif kind == "hermitian":
        if s % 2:
            raise DomainError("Hermitian systems need even s, got s=%d" % s)
        sig = []  # column images of the conjugation on the power basis
        for k in range(s):
            e = tuple(1 if t == k else 0 for t in range(s))
            sig.append(field.frobenius(e, s // 2))
        rows = []
        rhs = []
        for i in range(i1):
            for t in range(s):
                row = [0] * (s * i1)
                for j in range(i1):
                    if mat[i][j]:
                        row[s * j + t] = mat[i][j]
                for k in range(s):
                    row[s * i + k] = (row[s * i + k] + sig[k][t] - (1 if k == t else 0)) % p
                rows.append(row)
                rhs.append(b[i] if t == 0 else 0)
        sol = solve_mod_p(rows, rhs, p)
        if sol is None:
            return []
        part, basis = sol
        out = []
        for coeffs in itertools.product(range(p), repeat=len(basis)):
            vec = list(part)
            for lam, base in zip(coeffs, basis):
                if lam:
                    for j in range(len(vec)):
                        vec[j] = (vec[j] + lam * base[j]) % p
            out.append(tuple(tuple(vec[s * j:s * (j + 1)]) for j in range(i1)))
        assert len(out) == p ** (s * i1 // 2)
    else:
        raise DomainError("unknown duality kind %r" % kind)
    out.sort()
    for x in out:
        assert all(v == field.zero for v in system_residual(params, mat, b, x, kind))
    return out


def solve_selfdual_sequential(params, mat, b, kind):
    """The same solution set row by row, each row solved by a fiber scan.

    Row i reads sum_{j<i} m_ij x_j + (m_ii x_i [+ x_i^sigma - x_i]) = b_i,
    so x_i ranges over the preimage of a known right-hand side under a fixed
    one-variable map (a relative trace or its companion when m_ii = 2 or 0).
    Exhaustive over the field per row: use only at tiny sizes.
    """
    field = params.field
    partial = [()]
    for i in range(len(mat)):
        if kind == "hermitian":
            def fun(x, i=i):
                return field.add(field.smul(mat[i][i], x), field.psi(x))
        else:
            def fun(x, i=i):
                return field.smul(mat[i][i], x)
        grown = []
        for xs in partial:
            rhs = field.element(b[i])
            for j in range(i):
                rhs = field.sub(rhs, field.smul(mat[i][j], xs[j]))
            for x in field.preimages(fun, rhs):
                grown.append(xs + (x,))
        partial = grown
    return sorted(partial)


def enumerate_self_dual(params, kind):
    """All self-dual cyclic codes of length p^a in canonical form.

    Deterministic order: pR first (always self-dual), then i1 ascending
    with digit vectors in lexicographic residue order.
    """
    if kind not in ("euclidean", "hermitian"):
        raise DomainError("unknown duality kind %r" % kind)
    if kind == "hermitian" and params.s % 2:
        raise DomainError("Hermitian self-duality needs even s, got s=%d" % params.s)
    ring = params.ring
    out = [torsion_code(params, 0)]
    if params.a == 0:
        return tuple(out)
    for i1 in range(1, params.p ** (params.a - 1) + 1):
        mat, b = selfdual_system(params, i1)
        for x in solve_selfdual_system(params, mat, b, kind):
            h = tuple(ring.teich_lift(c) for c in x)
            out.append(make_canonical(params, params.n - i1, i1, h))
    return tuple(out)
