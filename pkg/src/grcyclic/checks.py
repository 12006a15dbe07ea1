"""Self-check suite behind the CLI verify subcommand.

Each check is a named function that raises AssertionError (or DomainError)
on failure.  The quick level runs the fast structural checks; the full
level adds the brute-force oracle cross-checks and the frozen 40-row count
tables.  All randomness is seeded, so a run is deterministic.
"""

from __future__ import annotations

import random
import sys

from .gring import make_ring
from .cyclic import (cardinality, enumerate_ideals, format_code, format_qpoly,
                     from_y, make_params, parse_code, parse_qpoly, qbar,
                     qp_from_ints, qp_make, qp_mul, qp_pow, qp_smul)
from .duality import (enumerate_self_dual, euclidean_dual, hermitian_dual,
                      is_self_dual, selfdual_system, solve_selfdual_sequential,
                      solve_selfdual_system, _dual_binomial, _dual_reversal)
from .counting import (count_all, count_E_composite, count_E_prime_power,
                       count_H_prime_power, emit_table, is_unique_self_dual)
from .dft import (compose_code, decompose_code, dft_all, dft_forward,
                  dft_inverse, dft_inverse_all, enumerate_self_dual_composite,
                  format_decomposed, make_composite, parse_decomposed)
from .oracle import brute_dual, brute_ideals, dense_code, dense_span

# Corrected 40-row tables: the counting formula's output, frozen.  At lengths
# n = m p^a whose coset partition has inverse pairs (J2' nonempty) and a = 0,
# the originally published rows print 1; the count is 3^|J2'| (each paired
# slot carries {0}xR, pRxpR, Rx{0} freely).  Those rows appear here corrected;
# see the n=7 entry of TABLE_2_1, verified against an exhaustive dual scan.

TABLE_2_1 = (1, 1, 1, 3, 1, 3, 3, 11, 1, 5, 1, 21, 1, 13, 3, 59, 1, 27, 1, 63,
             9, 33, 3, 341, 1, 65, 1, 339, 1, 315, 27, 1019, 1, 289, 9, 1533,
             1, 513, 3, 3751)
TABLE_3_1 = (1, 1, 2, 1, 1, 4, 1, 3, 8, 1, 3, 16, 9, 1, 20, 9, 1, 64, 1, 3,
             56, 9, 3, 544, 1, 81, 242, 1, 1, 400, 1, 27, 1472, 1, 3, 2560,
             1, 1, 15488, 81)
TABLE_2_2 = (1, 1, 3, 5, 1, 9, 3, 37, 9, 25, 3, 225, 1, 69, 27, 677, 1, 621,
             3, 2205, 81, 1029, 3, 29193, 1, 4225, 27, 22125, 1, 99225, 27,
             174757, 81, 83521, 27, 995625, 1, 262149, 27, 4302397)

_FROZEN_TEICH = {
    (3, 1): ((0,), (1,), (8,)),
    (2, 2): ((0, 0), (1, 0), (0, 1), (3, 3)),
}


def check_ring_construction():
    for (p, s), expect in _FROZEN_TEICH.items():
        assert make_ring(p, s).teichmuller_set() == expect
    for (p, s) in ((2, 1), (3, 1), (5, 1), (2, 2), (3, 2), (2, 4)):
        ring = make_ring(p, s)
        tset = ring.teichmuller_set()
        assert len(tset) == p ** s
        for t in tset:
            assert ring.pow(t, p ** s) == t
        rng = random.Random(101 * p + s)
        for _ in range(12):
            x = tuple(rng.randrange(p * p) for _ in range(s))
            a, b = ring.teich_decompose(x)
            assert a in tset and b in tset
            assert ring.add(a, ring.smul(p, b)) == x
            assert ring.frobenius(x, s) == x
            if s % 2 == 0:
                assert ring.conjugate(ring.conjugate(x)) == x


def check_quotient_torsion_series():
    for (p, s, a) in ((2, 1, 1), (2, 1, 2), (2, 1, 3), (3, 1, 1), (3, 1, 2),
                      (2, 2, 1), (5, 1, 1)):
        params = make_params(p, s, a)
        ring, n = params.ring, params.n
        yy = qp_from_ints(ring, [-1, 1] + [0] * (n - 2))
        lhs = qp_pow(yy, n)
        qb = qbar(params)
        rhs = qp_smul(-p, from_y(params, [ring.lift(c) for c in qb]))
        assert lhs == rhs
        lead = [k for k, c in enumerate(qb) if c != params.field.zero]
        assert min(lead) == p ** (a - 1)


def check_canonical_counts():
    for (p, s, a) in ((2, 1, 1), (2, 1, 2), (3, 1, 1), (2, 2, 1)):
        params = make_params(p, s, a)
        codes = list(enumerate_ideals(params))
        assert len(codes) == len(set(codes)) == count_all(params)


def check_duality_involution():
    for (p, s, a) in ((2, 1, 2), (3, 1, 1), (2, 2, 1)):
        params = make_params(p, s, a)
        total = params.ring.size ** params.n
        for code in enumerate_ideals(params):
            dual = euclidean_dual(code)
            assert euclidean_dual(dual) == code
            assert cardinality(code) * cardinality(dual) == total
            if s % 2 == 0:
                hdual = hermitian_dual(code)
                assert hermitian_dual(hdual) == code
                assert cardinality(code) * cardinality(hdual) == total


def check_selfdual_euclidean_counts():
    expect = {(2, 1, 1): 1, (2, 1, 2): 3, (2, 1, 3): 11, (2, 2, 1): 1,
              (2, 2, 2): 5, (3, 1, 1): 2, (3, 1, 2): 8}
    for key, want in expect.items():
        params = make_params(*key)
        codes = list(enumerate_self_dual(params, "euclidean"))
        assert len(codes) == len(set(codes)) == want == count_E_prime_power(params)
        for code in codes:
            assert is_self_dual(code, "euclidean")


def check_selfdual_hermitian_counts():
    for (p, s, a) in ((2, 2, 1), (2, 2, 2), (3, 2, 1)):
        params = make_params(p, s, a)
        codes = list(enumerate_self_dual(params, "hermitian"))
        assert len(codes) == count_H_prime_power(params)
        for code in codes:
            assert is_self_dual(code, "hermitian")
    assert count_H_prime_power(make_params(2, 2, 1)) == 3
    assert count_H_prime_power(make_params(2, 4, 1)) == 5


def check_hermitian_solution_law(bound=1 << 10):
    for p in (2, 3):
        for s in (2, 4):
            for a in (1, 2):
                params = make_params(p, s, a)
                for i1 in range(1, p ** (a - 1) + 1):
                    if p ** (s * i1) > bound:
                        continue
                    mat, rhs = selfdual_system(params, i1)
                    sols = solve_selfdual_system(params, mat, rhs, "hermitian")
                    assert len(sols) == p ** (s * i1 // 2)


def check_table_anchors():
    anchors = {(2, 1): {8: 11, 24: 341, 32: 1019, 40: 3751},
               (3, 1): {9: 8, 27: 242, 39: 15488},
               (2, 2): {12: 225, 36: 995625, 40: 4302397}}
    for (p, s), spots in anchors.items():
        rows = dict(emit_table(p, s, 40))
        for n, want in spots.items():
            assert rows[n] == want, (p, s, n, rows[n], want)


def check_tables_full():
    for (p, s), table in (((2, 1), TABLE_2_1), ((3, 1), TABLE_3_1),
                          ((2, 2), TABLE_2_2)):
        rows = emit_table(p, s, 40)
        assert tuple(c for _, c in rows) == table, (p, s)


def _rand_vec(rng, ring, n):
    return tuple(tuple(rng.randrange(ring.pp) for _ in range(ring.s))
                 for _ in range(n))


def check_dft_round_trip(reps=25):
    rng = random.Random(77)
    for (p, s, n) in ((2, 1, 6), (2, 1, 12), (3, 1, 6)):
        cp = make_composite(p, s, n)
        ring, ext = cp.ring, cp.ext
        q = pow(p, s, cp.m)
        for t in range(reps):
            c = _rand_vec(rng, ring, n)
            hat = dft_all(cp, c)
            assert dft_inverse_all(cp, hat) == c
            assert dft_inverse(cp, dft_forward(cp, c)) == c
            for h in range(cp.m):
                sig = qp_make(ext, [ext.frobenius(x, s) for x in hat[h].coeffs])
                assert hat[(h * q) % cp.m] == sig
            if t < 8:
                c2 = _rand_vec(rng, ring, n)
                prod = qp_mul(qp_make(ring, c), qp_make(ring, c2)).coeffs
                hat2, hat12 = dft_all(cp, c2), dft_all(cp, prod)
                for h in range(cp.m):
                    assert hat12[h] == qp_mul(hat[h], hat2[h])


def check_composite_worked_examples():
    cp = make_composite(2, 1, 6)
    found = list(enumerate_self_dual_composite(cp))
    assert len(found) == 3 == count_E_composite(2, 1, 6)
    slot1 = {format_code(dc.component(1)) for dc in found}
    assert slot1 == {"tors(2,2,1;0)", "full(2,2,1;1,1;[T(1)])",
                     "full(2,2,1;1,1;[T(2)])"}
    for dc in found:
        assert format_code(dc.component(0)) == "tors(2,1,1;0)"
    assert sum(1 for _ in enumerate_self_dual_composite(make_composite(2, 1, 10))) \
        == 5 == count_E_composite(2, 1, 10)
    assert count_E_composite(2, 1, 2) == 1
    assert is_unique_self_dual(2, 1, 1) and not is_unique_self_dual(2, 1, 3)


def check_literal_round_trips():
    rng = random.Random(31)
    for (p, s, a) in ((2, 1, 2), (2, 2, 1), (3, 1, 1)):
        params = make_params(p, s, a)
        for code in enumerate_ideals(params):
            assert parse_code(format_code(code)) == code
        ring = params.ring
        for _ in range(10):
            f = qp_make(ring, _rand_vec(rng, ring, params.n))
            assert parse_qpoly(ring, params.n, format_qpoly(f)) == f
    for (p, s, n) in ((2, 1, 6), (3, 1, 6), (2, 2, 3)):
        cp = make_composite(p, s, n)
        ring = cp.ring
        for _ in range(6):
            gens = [_rand_vec(rng, ring, n)]
            dc = decompose_code(cp, gens)
            assert parse_decomposed(format_decomposed(dc)) == dc


_ORACLE_SCALE = ((2, 1, 1), (2, 1, 2), (2, 1, 4), (2, 2, 2), (3, 1, 3))


def _length_params(p, s, n):
    a = 0
    while n % p == 0:
        n //= p
        a += 1
    assert n == 1, "oracle scale lengths are prime powers"
    return make_params(p, s, a)


def check_oracle_ideal_census():
    for (p, s, n) in _ORACLE_SCALE:
        params = _length_params(p, s, n)
        ideals = brute_ideals(p, s, n)
        codes = list(enumerate_ideals(params))
        assert len(codes) == len(ideals) == count_all(params)
        assert {dense_code(c) for c in codes} == ideals


def check_oracle_dual_agreement():
    for (p, s, n) in _ORACLE_SCALE:
        params = _length_params(p, s, n)
        ring = params.ring
        total = ring.size ** n
        for code in enumerate_ideals(params):
            words = dense_code(code)
            bd = brute_dual(ring, n, words, "euclidean")
            assert dense_code(euclidean_dual(code)) == bd
            assert len(words) * len(bd) == total
            if s % 2 == 0:
                bh = brute_dual(ring, n, words, "hermitian")
                assert dense_code(hermitian_dual(code)) == bh


def check_dual_formula_routes():
    for (p, s, a) in ((2, 1, 2), (2, 1, 3), (3, 1, 1), (2, 2, 1)):
        params = make_params(p, s, a)
        for code in enumerate_ideals(params):
            if code.torsion_only or code.i1 == 0:
                continue
            dual = euclidean_dual(code)
            assert _dual_reversal(code) == dual
            if code.i0 + code.i1 <= params.n:
                assert _dual_binomial(code) == dual


def check_composite_selfdual_brute():
    for n in (6, 7):
        cp = make_composite(2, 1, n)
        ring = cp.ring
        found = list(enumerate_self_dual_composite(cp))
        assert len(found) == count_E_composite(2, 1, n) == 3
        for dc in found:
            words = dense_span(ring, n, compose_code(dc))
            assert brute_dual(ring, n, words, "euclidean") == words


def check_solver_cross_check(bound=1 << 12):
    for p in (2, 3, 5):
        for s in (1, 2):
            for a in (1, 2, 3):
                params = make_params(p, s, a)
                for i1 in range(1, p ** (a - 1) + 1):
                    if p ** (s * i1) > bound:
                        continue
                    mat, rhs = selfdual_system(params, i1)
                    for kind in ("euclidean",) + (("hermitian",) if s % 2 == 0 else ()):
                        fast = solve_selfdual_system(params, mat, rhs, kind)
                        slow = solve_selfdual_sequential(params, mat, rhs, kind)
                        assert fast == slow


CHECKS = (
    ("ring-construction", "quick", check_ring_construction),
    ("quotient-torsion-series", "quick", check_quotient_torsion_series),
    ("canonical-counts", "quick", check_canonical_counts),
    ("duality-involution", "quick", check_duality_involution),
    ("selfdual-euclidean-counts", "quick", check_selfdual_euclidean_counts),
    ("selfdual-hermitian-counts", "quick", check_selfdual_hermitian_counts),
    ("hermitian-solution-law", "quick", check_hermitian_solution_law),
    ("table-anchors", "quick", check_table_anchors),
    ("dft-round-trip", "quick", check_dft_round_trip),
    ("composite-worked-examples", "quick", check_composite_worked_examples),
    ("literal-round-trips", "quick", check_literal_round_trips),
    ("tables-full", "full", check_tables_full),
    ("oracle-ideal-census", "full", check_oracle_ideal_census),
    ("oracle-dual-agreement", "full", check_oracle_dual_agreement),
    ("dual-formula-routes", "full", check_dual_formula_routes),
    ("composite-selfdual-brute", "full", check_composite_selfdual_brute),
    ("solver-cross-check", "full", check_solver_cross_check),
)


def run(level="quick", out=None, structured=False):
    """Run the suite; print one line per check; True iff everything passed."""
    if level not in ("quick", "full"):
        raise ValueError("level must be quick or full")
    if out is None:
        out = sys.stdout  # bind late so redirected streams are honored
    ok = True
    for name, lvl, fn in CHECKS:
        if lvl == "full" and level != "full":
            continue
        try:
            fn()
        except Exception as exc:  # noqa: BLE001 - any failure means check fail
            ok = False
            detail = "%s: %s" % (type(exc).__name__, exc)
            if structured:
                print("op=verify\tcheck=%s\tresult=fail\tdetail=%r"
                      % (name, detail), file=out)
            else:
                print("%s: FAIL (%s)" % (name, detail), file=out)
        else:
            if structured:
                print("op=verify\tcheck=%s\tresult=pass" % name, file=out)
            else:
                print("%s: pass" % name, file=out)
    return ok
