"""Canonical two-generator forms in GR(p^2,s)[u]/(u^(p^a) - 1)."""

import random

import pytest

from grcyclic.gring import DomainError, make_ring
from grcyclic.cyclic import (cardinality, codewords, contains,
                             enumerate_ideals, format_code, format_qpoly,
                             from_y, full_code, generators, make_canonical,
                             make_params, normalize, parse_code, parse_qpoly,
                             qbar, qp_add, qp_from_ints, qp_make, qp_mul,
                             qp_pow, qp_reverse, qp_scale, qp_shift, qp_smul,
                             to_y, torsion_code)

SMALL = ((2, 1, 1), (2, 1, 2), (3, 1, 1), (2, 2, 1))


def _rand_poly(rng, params):
    ring = params.ring
    return qp_make(ring, [tuple(rng.randrange(ring.pp) for _ in range(ring.s))
                          for _ in range(params.n)])


def test_make_params_validation():
    with pytest.raises(DomainError):
        make_params(2, 1, -1)
    with pytest.raises(DomainError):
        make_params(6, 1, 1)
    p = make_params(2, 1, 0)
    assert p.n == 1


def test_quotient_relation():
    # (u-1)^(p^a) = -p * q(u-1), and q has Y-valuation p^(a-1)
    for (p, s, a) in ((2, 1, 1), (2, 1, 2), (2, 1, 3), (3, 1, 1), (3, 1, 2),
                      (2, 2, 1), (5, 1, 1)):
        params = make_params(p, s, a)
        ring, n = params.ring, params.n
        yy = qp_from_ints(ring, [-1, 1] + [0] * (n - 2))
        qb = qbar(params)
        rhs = qp_smul(-p, from_y(params, [ring.lift(c) for c in qb]))
        assert qp_pow(yy, n) == rhs
        lead = min(k for k, c in enumerate(qb) if c != params.field.zero)
        assert lead == p ** (a - 1)


def test_qp_algebra():
    rng = random.Random(21)
    for key in SMALL:
        params = make_params(*key)
        ring = params.ring
        for _ in range(15):
            f, g, h = (_rand_poly(rng, params) for _ in range(3))
            assert qp_mul(f, g) == qp_mul(g, f)
            assert qp_mul(qp_mul(f, g), h) == qp_mul(f, qp_mul(g, h))
            assert qp_mul(f, qp_add(g, h)) == qp_add(qp_mul(f, g), qp_mul(f, h))
            u = qp_from_ints(ring, [0, 1] + [0] * (params.n - 2)) \
                if params.n > 1 else qp_from_ints(ring, [1])
            assert qp_shift(f, 1) == qp_mul(u, f)
            assert qp_shift(qp_shift(f, 3), -3) == f
            # reciprocal map is a ring automorphism
            assert qp_reverse(qp_reverse(f)) == f
            assert qp_reverse(qp_mul(f, g)) == qp_mul(qp_reverse(f), qp_reverse(g))


def test_y_coordinates_invert():
    rng = random.Random(22)
    for key in SMALL + ((2, 1, 3),):
        params = make_params(*key)
        for _ in range(10):
            f = _rand_poly(rng, params)
            ys = to_y(params, f)
            assert from_y(params, ys) == f


def test_make_canonical_validation():
    params = make_params(2, 2, 1)
    ring = params.ring
    with pytest.raises(DomainError):
        make_canonical(params, None, 3)  # i1 > n
    with pytest.raises(DomainError):
        make_canonical(params, 1, 2)  # i1 > i0
    with pytest.raises(DomainError):
        make_canonical(params, None, 1, (ring.one,))  # torsion with digits
    with pytest.raises(DomainError):
        make_canonical(params, 1, 1, ())  # digit count != i1
    with pytest.raises(DomainError):
        make_canonical(params, 1, 1, (ring.smul(2, ring.one),))  # not Teichmuller


def test_canonical_data_is_normalized():
    # i0 = n and star-violating digits are rerouted through normalize
    params = make_params(2, 1, 2)
    ring = params.ring
    # i0 = n: <Y^4 + 0, pY> collapses to <pY> since Y^4 = -p q(Y), val(q) = 2
    assert make_canonical(params, params.n, 1, (ring.zero,)) \
        == torsion_code(params, 1)
    full = full_code(params, 3, 2, (ring.zero, ring.one))
    assert full == normalize(params, generators(full))


def test_normalize_hand_ideals():
    params = make_params(2, 1, 1)
    ring = params.ring
    # <u+1, 2> = <Y, 2> since u+1 = Y+2
    code = normalize(params, [qp_from_ints(ring, [1, 1]), qp_from_ints(ring, [2, 0])])
    assert format_code(code) == "full(2,1,1;1,0;[])"
    # unit ideal, zero ideal, pR
    assert format_code(normalize(params, [qp_from_ints(ring, [1, 0])])) \
        == "full(2,1,1;0,0;[])"
    assert format_code(normalize(params, [])) == "tors(2,1,1;2)"
    assert format_code(normalize(params, [qp_from_ints(ring, [2, 0])])) \
        == "tors(2,1,1;0)"
    # <2(u-1)> = torsion at 1
    assert format_code(normalize(params, [qp_from_ints(ring, [-2, 2])])) \
        == "tors(2,1,1;1)"


def test_normalize_idempotent_and_generator_stable():
    rng = random.Random(23)
    for key in SMALL:
        params = make_params(*key)
        ring = params.ring
        for code in enumerate_ideals(params):
            gens = generators(code)
            assert normalize(params, gens) == code
            # the ideal is insensitive to generator presentation
            f = list(gens)
            rng.shuffle(f)
            f.append(qp_mul(gens[0], _rand_poly(rng, params)))
            f[0] = qp_scale(ring.xi, f[0])
            assert normalize(params, f) == code


def test_enumerate_counts_and_star_constraint():
    # (p, s, a) -> total ideal count
    expected = {(2, 1, 0): 3, (2, 1, 1): 7, (2, 1, 2): 23, (3, 1, 1): 16,
                (2, 2, 1): 9}
    for key, want in expected.items():
        params = make_params(*key)
        codes = list(enumerate_ideals(params))
        assert len(codes) == len(set(codes)) == want
        for code in codes:
            assert parse_code(format_code(code)) == code
            if not code.torsion_only:
                assert 0 <= code.i1 <= code.i0 <= params.n - 1
                assert len(code.h) == code.i1


def test_cardinality_against_codewords():
    for key in ((2, 1, 1), (3, 1, 1), (2, 2, 1)):
        params = make_params(*key)
        for code in enumerate_ideals(params):
            words = list(codewords(code))
            assert len(words) == len(set(words)) == cardinality(code)
            for w in words:
                assert contains(code, w)


def test_contains_rejects_non_members():
    params = make_params(2, 1, 2)
    for code in enumerate_ideals(params):
        inside = {w.coeffs for w in codewords(code)}
        ring = params.ring
        total = 0
        import itertools
        for v in itertools.product(ring.elements(), repeat=params.n):
            if contains(code, qp_make(ring, v)):
                total += 1
                assert v in inside
        assert total == cardinality(code)


def test_codewords_cap():
    params = make_params(2, 1, 3)
    big = normalize(params, [qp_from_ints(params.ring, [1] + [0] * 7)])
    with pytest.raises(DomainError):
        list(codewords(big, cap=100))


def test_code_literals_reject_malformed():
    for bad in ("tors(2,1,1)", "full(2,1,1;1;[])", "blob", "tors(2,1,1;x)",
                "full(2,2,1;1,1;[Q(1)])"):
        with pytest.raises(DomainError):
            parse_code(bad)


def test_qpoly_literals():
    rng = random.Random(24)
    for key in ((2, 1, 2), (2, 2, 1), (3, 1, 1)):
        params = make_params(*key)
        ring = params.ring
        for _ in range(12):
            f = _rand_poly(rng, params)
            assert parse_qpoly(ring, params.n, format_qpoly(f)) == f
    ring = make_ring(2, 2)
    f = parse_qpoly(ring, 2, "T(1)*u + 3")
    assert f.coeffs == (ring.smul(3, ring.one), ring.xi)
    assert parse_qpoly(ring, 2, "u^5") .coeffs == (ring.zero, ring.one)  # u^5 = u
    with pytest.raises(DomainError):
        parse_qpoly(ring, 2, "u^x")
