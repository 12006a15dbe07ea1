"""Closed-form counts of cyclic and self-dual cyclic codes over GR(p^2,s).

All results are exact integers; every division in a closed form is asserted
exact.  Prime-power length n = p^a:

  count_all        -- N, the number of cyclic codes: with
                      c(d) = (p^(s(l+1)) - 1)/(p^s - 1), l = min(d//2, p^(a-1)),
                      N = 2 (c(0) + ... + c(n-1)) + c(n).
  count_E_prime_power, count_H_prime_power -- Euclidean / Hermitian self-dual.

Arbitrary length n = m p^a with p not dividing m: the transform splits a
code into slots indexed by the coset partition of Z_m, so

  count_E_composite = N_E(GR(p^2,s), p^a)^delta(m)
                      * prod over J1 of N_H(GR(p^2, s m_h), p^a)
                      * prod over J2' of N(GR(p^2, s m_k), p^a)

since J0 slots need Euclidean self-dual components, J1 slots Hermitian
self-dual ones, J2' slots are free, and J2'' slots are forced by duality.
"""

from __future__ import annotations

from .gring import DomainError, make_ring
from .cosets import delta, partition


def _exact_div(num, den):
    q, r = divmod(num, den)
    assert r == 0
    return q


def count_by_d(params, d):
    """The number of ideals with i0 + i1 = d (d = i1 doubled counts torsion).

    c(d) = (p^(s(l+1)) - 1)/(p^s - 1) with l = min(floor(d/2), p^(a-1)),
    for 0 <= d <= n; c(d) counts canonical pairs (i0, i1) with i0 + i1 = d
    together with their digit vectors, torsion-only forms included.
    """
    p, s, a = params.p, params.s, params.a
    n = params.n
    if not 0 <= d <= n:
        raise DomainError("need 0 <= d <= %d, got %d" % (n, d))
    l = min(d // 2, p ** (a - 1)) if a >= 1 else 0
    return _exact_div(p ** (s * (l + 1)) - 1, p ** s - 1)


def count_all(params):
    """N: the total number of cyclic codes of length p^a over GR(p^2,s)."""
    if params.a == 0:
        return 3
    n = params.n
    return 2 * sum(count_by_d(params, d) for d in range(n)) + count_by_d(params, n)


def count_E_prime_power(params):
    """N_E: Euclidean self-dual cyclic codes of length p^a."""
    p, s, a = params.p, params.s, params.a
    if a == 0:
        return 1
    if p == 2:
        if a == 1:
            return 1
        if a == 2:
            return 1 + 2 ** s
        q = 2 ** s
        return 1 + q + 2 * q * q * _exact_div(q ** (2 ** (a - 2) - 1) - 1, q - 1)
    q = p ** s
    return 2 * _exact_div(q ** ((p ** (a - 1) + 1) // 2) - 1, q - 1)


def count_H_prime_power(params):
    """N_H: Hermitian self-dual cyclic codes of length p^a (s even)."""
    p, s, a = params.p, params.s, params.a
    if s % 2:
        raise DomainError("Hermitian counts need even s, got s=%d" % s)
    if a == 0:
        return 1
    return _exact_div(p ** (s * (p ** (a - 1) + 1) // 2) - 1, p ** (s // 2) - 1)


def _split_length(p, n):
    """n = m * p^a with p not dividing m."""
    if n < 1:
        raise DomainError("length n=%d must be positive" % n)
    a = 0
    m = n
    while m % p == 0:
        m //= p
        a += 1
    return m, a


def count_E_composite(p, s, n):
    """Euclidean self-dual cyclic codes of any length n over GR(p^2,s)."""
    from .cyclic import make_params  # local import: cyclic pulls in no counting
    make_ring(p, s)  # validate p prime, s >= 1 before coset arithmetic
    m, a = _split_length(p, n)
    part = partition(m, p, s)
    total = count_E_prime_power(make_params(p, s, a)) ** delta(m)
    for h in part.J1:
        total *= count_H_prime_power(make_params(p, s * part.size_of(h), a))
    for k in part.J2p:
        total *= count_all(make_params(p, s * part.size_of(k), a))
    return total


def is_unique_self_dual(p, s, m):
    """Whether length m*p admits exactly one Euclidean self-dual cyclic code.

    True precisely for m = 1, p = 2 (the code pR of length 2).
    """
    if m < 1:
        raise DomainError("m=%d must be positive" % m)
    if m % p == 0:
        raise DomainError("p=%d divides m=%d; the length must be m p with p coprime to m"
                          % (p, m))
    return m == 1 and p == 2


def emit_table(p, s, n_max):
    """[(n, count_E_composite(p, s, n)) for n = 1..n_max]."""
    if n_max < 1:
        raise DomainError("table needs n_max >= 1, got %d" % n_max)
    return [(n, count_E_composite(p, s, n)) for n in range(1, n_max + 1)]
