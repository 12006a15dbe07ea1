"""Small dense linear algebra over F_p and over explicit finite fields.

Two solvers, both returning the complete solution set of A x = b as a
particular solution plus a kernel basis:

  * solve_mod_p        -- entries are plain ints mod p
  * solve_in_field     -- entries are elements of a field object exposing
                          zero/one/add/sub/mul/inv (e.g. ResidueField)

Matrices are lists of rows.  Everything here is O(rows * cols^2) Gaussian
elimination; the systems in this package are tiny (dimension <= a few
dozen), so no pivoting strategy beyond first-nonzero is needed.
"""

from __future__ import annotations

import itertools


def solve_mod_p(rows, rhs, p):
    """Solve A x = b over F_p.

    rows: list of equal-length lists of ints; rhs: list of ints.
    Returns (particular, basis) where particular is a tuple of ints and
    basis is a tuple of tuples spanning the kernel, or None if the system
    is inconsistent.  All values reduced to [0, p).
    """
    m = len(rows)
    ncols = len(rows[0]) if m else len(rhs) * 0
    aug = [[v % p for v in row] + [rhs[i] % p] for i, row in enumerate(rows)]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, m) if aug[i][c]), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = pow(aug[r][c], -1, p)
        aug[r] = [(v * inv) % p for v in aug[r]]
        for i in range(m):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [(v - f * w) % p for v, w in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][ncols]:
            return None
    particular = [0] * ncols
    for i, c in enumerate(pivots):
        particular[c] = aug[i][ncols]
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for c in free:
        vec = [0] * ncols
        vec[c] = 1
        for i, pc in enumerate(pivots):
            vec[pc] = (-aug[i][c]) % p
        basis.append(tuple(vec))
    return tuple(particular), tuple(basis)


def all_solutions_mod_p(rows, rhs, p, cap=None):
    """All solutions of A x = b over F_p, in a deterministic order.

    Yields tuples of ints.  cap bounds the number of solutions (p^#free);
    exceeding it raises ValueError before any work is done.
    """
    sol = solve_mod_p(rows, rhs, p)
    if sol is None:
        return
    particular, basis = sol
    if cap is not None and p ** len(basis) > cap:
        raise ValueError("solution space larger than cap %d" % cap)
    n = len(particular)
    for coeffs in itertools.product(range(p), repeat=len(basis)):
        vec = list(particular)
        for lam, base in zip(coeffs, basis):
            if lam:
                for j in range(n):
                    vec[j] = (vec[j] + lam * base[j]) % p
        yield tuple(vec)


def solve_in_field(field, rows, rhs):
    """Solve A x = b over an explicit field; same contract as solve_mod_p.

    rows entries and rhs entries are field elements (whatever the field
    object uses as its element type, typically tuples).
    """
    m = len(rows)
    ncols = len(rows[0]) if m else 0
    zero = field.zero
    aug = [list(row) + [rhs[i]] for i, row in enumerate(rows)]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, m) if aug[i][c] != zero), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = field.inv(aug[r][c])
        aug[r] = [field.mul(v, inv) for v in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != zero:
                f = aug[i][c]
                aug[i] = [field.sub(v, field.mul(f, w)) for v, w in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][ncols] != zero:
            return None
    particular = [zero] * ncols
    for i, c in enumerate(pivots):
        particular[c] = aug[i][ncols]
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for c in free:
        vec = [zero] * ncols
        vec[c] = field.one
        for i, pc in enumerate(pivots):
            vec[pc] = field.neg(aug[i][c])
        basis.append(tuple(vec))
    return tuple(particular), tuple(basis)
