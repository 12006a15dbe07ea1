"""Transform layer: round-trips, the inner-product identity, slotwise duals."""

import random

import pytest

from grcyclic.gring import DomainError, make_ring, get_embedding
from grcyclic.cyclic import (make_params, qp_make, qp_mul, qp_reverse, qp_zero,
                             qp_add, qp_smul, format_code, torsion_code,
                             full_code, cardinality, normalize)
from grcyclic.dft import (make_composite, dft_all, dft_forward, dft_inverse,
                          dft_inverse_all, phi, phi_inverse, decompose_code,
                          compose_code, dual_decomposition,
                          is_self_dual_decomposed,
                          enumerate_self_dual_composite, format_decomposed,
                          parse_decomposed, make_decomposed)
from grcyclic.counting import count_E_composite
from grcyclic.oracle import dense_span, brute_dual

rng = random.Random(20260814)


def rand_vec(ring, n):
    return tuple(tuple(rng.randrange(ring.pp) for _ in range(ring.s))
                 for _ in range(n))


def conv(ring, v, w):
    return qp_mul(qp_make(ring, v), qp_make(ring, w)).coeffs


def pairing(cp, c, c2):
    # sum_i d_i * reverse(d'_i) over the base quotient ring; zero iff the
    # words are orthogonal under every shift by a multiple of m
    ring = cp.ring
    dv, dv2 = phi_inverse(cp, c), phi_inverse(cp, c2)
    acc = qp_zero(ring, cp.pa)
    for f, g in zip(dv, dv2):
        acc = qp_add(acc, qp_mul(f, qp_reverse(g)))
    return acc


def card_decomposed(dc):
    out = 1
    for _, code in dc.components:
        out *= cardinality(code)
    return out


def rand_gens(cp):
    ring = cp.ring
    gens = [rand_vec(ring, cp.n) for _ in range(rng.randrange(1, 3))]
    if rng.randrange(2):
        gens[0] = tuple(ring.smul(cp.p, x) for x in gens[0])
    return gens


def test_make_composite_validation():
    with pytest.raises(DomainError):
        make_composite(4, 1, 3)
    with pytest.raises(DomainError):
        make_composite(2, 0, 3)
    with pytest.raises(DomainError):
        make_composite(2, 1, 0)
    cp = make_composite(2, 1, 12)
    assert (cp.m, cp.pa) == (3, 4)
    assert cp.slot_params(1).ring.s == 2 * cp.s  # coset {1,2} has size 2


def test_round_trip_and_multiplicativity():
    for (p, s, n) in [(2, 1, 6), (2, 1, 12), (3, 1, 6), (2, 2, 6), (2, 1, 7),
                      (5, 1, 10)]:
        cp = make_composite(p, s, n)
        ring, ext = cp.ring, cp.ext
        q = pow(p, s, cp.m) if cp.m > 1 else 0
        for t in range(25):
            c = rand_vec(ring, n)
            hat = dft_all(cp, c)
            assert dft_inverse_all(cp, hat) == c
            assert dft_inverse(cp, dft_forward(cp, c)) == c
            # components along a p^s-coset are frobenius twists of the rep
            for h in range(cp.m):
                sig = qp_make(ext, [ext.frobenius(x, s) for x in hat[h].coeffs])
                assert hat[(h * q) % cp.m] == sig
            if t < 8:
                c2 = rand_vec(ring, n)
                hat2 = dft_all(cp, c2)
                hat12 = dft_all(cp, conv(ring, c, c2))
                for h in range(cp.m):
                    assert hat12[h] == qp_mul(hat[h], hat2[h])


def test_phi_coordinates():
    # component i of the inverse image holds coefficients c_{i + j*m}
    cp = make_composite(2, 1, 6)
    r = cp.ring
    d = [qp_make(r, [r.zero, r.one]), qp_zero(r, 2), qp_zero(r, 2)]
    assert phi(cp, d) == ((0,), (0,), (0,), (1,), (0,), (0,))
    d = [qp_zero(r, 2), qp_make(r, [r.one, r.zero]), qp_zero(r, 2)]
    assert phi(cp, d) == ((0,), (1,), (0,), (0,), (0,), (0,))
    for _ in range(10):
        c = rand_vec(r, 6)
        assert phi(cp, phi_inverse(cp, c)) == c


def test_transform_inner_product_identity():
    # m * pairing, pushed into the extension, equals the component sum with
    # conjugation on self-inverse cosets and label reflection on paired ones
    for (p, s, n) in [(2, 1, 6), (3, 1, 6), (2, 2, 6), (2, 1, 7)]:
        cp = make_composite(p, s, n)
        ring, ext, part = cp.ring, cp.ext, cp.part
        emb = get_embedding(ring, ext)
        for _ in range(15):
            c, c2 = rand_vec(ring, n), rand_vec(ring, n)
            lhs = qp_smul(cp.m, qp_make(
                ext, [emb.map(x) for x in pairing(cp, c, c2).coeffs]))
            hat, hat2 = dft_all(cp, c), dft_all(cp, c2)
            acc = qp_zero(ext, cp.pa)
            for r in part.J0:
                for h in part.coset_of(r):
                    acc = qp_add(acc, qp_mul(hat[h], qp_reverse(hat2[h])))
            for r in part.J1:
                e = part.size_of(r) // 2
                for h in part.coset_of(r):
                    bar = qp_make(ext, [ext.frobenius(x, cp.s * e)
                                        for x in hat2[h].coeffs])
                    acc = qp_add(acc, qp_mul(hat[h], qp_reverse(bar)))
            for r in part.J2p + part.J2pp:
                for h in part.coset_of(r):
                    acc = qp_add(acc, qp_mul(
                        hat[h], qp_reverse(hat2[(cp.m - h) % cp.m])))
            assert lhs == acc


def test_pairing_detects_strided_orthogonality():
    for (p, s, n) in [(2, 1, 6), (3, 1, 6)]:
        cp = make_composite(p, s, n)
        ring = cp.ring
        pairs = [(rand_vec(ring, n), rand_vec(ring, n)) for _ in range(60)]
        # p*(anything) pairs always vanish, forcing both branches to occur
        pairs += [(tuple(ring.smul(p, x) for x in rand_vec(ring, n)),
                   tuple(ring.smul(p, x) for x in rand_vec(ring, n)))
                  for _ in range(60)]
        hit = 0
        for c, c2 in pairs:
            lhs = pairing(cp, c, c2).coeffs == (ring.zero,) * cp.pa
            rhs = all(_strided_zero(ring, c, c2, cp.m * i, n)
                      for i in range(cp.pa))
            assert lhs == rhs, (c, c2)
            hit += lhs
        assert hit > 0


def _strided_zero(ring, c, c2, shift, n):
    acc = ring.zero
    for t in range(n):
        acc = ring.add(acc, ring.mul(c[(t - shift) % n], c2[t]))
    return acc == ring.zero


def test_decompose_compose_round_trip():
    for (p, s, n, dense) in [(2, 1, 6, True), (2, 2, 3, True), (3, 1, 3, True),
                             (3, 1, 6, False), (2, 1, 12, False)]:
        cp = make_composite(p, s, n)
        ring = cp.ring
        for _ in range(6):
            gens = rand_gens(cp)
            dc = decompose_code(cp, gens)
            back = compose_code(dc)
            if dense:
                assert dense_span(ring, n, back) == dense_span(ring, n, gens)
            assert decompose_code(cp, back) == dc
            assert parse_decomposed(format_decomposed(dc)) == dc


def test_dual_decomposition_vs_brute():
    for (p, s, n, iters) in [(2, 1, 6, 5), (2, 2, 3, 4), (2, 1, 7, 3)]:
        cp = make_composite(p, s, n)
        ring = cp.ring
        for _ in range(iters):
            gens = rand_gens(cp)
            dc = decompose_code(cp, gens)
            dual_dc = dual_decomposition(dc)
            words = dense_span(ring, n, gens)
            bd = brute_dual(ring, n, words, "euclidean")
            assert dense_span(ring, n, compose_code(dual_dc)) == bd
            assert dual_decomposition(dual_dc) == dc
            assert card_decomposed(dc) * card_decomposed(dual_dc) \
                == ring.size ** n


def test_dual_decomposition_large():
    # ambient too big to brute force: involution, cardinality product, and
    # generator-vs-generator pairing orthogonality stand in
    for (p, s, n) in [(3, 1, 6), (2, 1, 12)]:
        cp = make_composite(p, s, n)
        ring = cp.ring
        for _ in range(4):
            gens = rand_gens(cp)
            gens[0] = tuple(ring.smul(p, x) for x in gens[0])
            dc = decompose_code(cp, gens)
            dual_dc = dual_decomposition(dc)
            assert dual_decomposition(dual_dc) == dc
            assert card_decomposed(dc) * card_decomposed(dual_dc) \
                == ring.size ** n
            for c in compose_code(dc):
                for c2 in compose_code(dual_dc):
                    assert pairing(cp, c, c2).coeffs == (ring.zero,) * cp.pa


def test_self_dual_enumeration_n6():
    cp = make_composite(2, 1, 6)
    ring = cp.ring
    found = list(enumerate_self_dual_composite(cp))
    assert len(found) == 3 == count_E_composite(2, 1, 6)
    for dc in found:
        assert is_self_dual_decomposed(dc)
        words = dense_span(ring, 6, compose_code(dc))
        assert brute_dual(ring, 6, words, "euclidean") == words
    # slot 0 is 2R over Z4; slot 1 over GR(4,2) is 2R or <1 + u + 2 xi^k>
    g42 = make_ring(2, 2)
    sp1 = cp.slot_params(1)
    expect = {format_decomposed(make_decomposed(cp, {
        0: torsion_code(cp.slot_params(0), 0),
        1: torsion_code(sp1, 0)}))}
    for k in (1, 2):
        expect.add(format_decomposed(make_decomposed(cp, {
            0: torsion_code(cp.slot_params(0), 0),
            1: full_code(sp1, 1, 1, (g42.pow(g42.xi, k),))})))
    lits = {format_decomposed(dc) for dc in found}
    assert lits == expect
    slot1 = {format_code(dc.component(1)) for dc in found}
    for k in (1, 2):
        v = qp_make(g42, [g42.add(g42.one, g42.smul(2, g42.pow(g42.xi, k))),
                          g42.one])
        assert format_code(normalize(sp1, [v])) in slot1


def test_self_dual_enumeration_n10():
    cp = make_composite(2, 1, 10)
    found = list(enumerate_self_dual_composite(cp))
    assert len(found) == 5 == count_E_composite(2, 1, 10)
    for dc in found:
        assert is_self_dual_decomposed(dc)
        assert card_decomposed(dc) == 2 ** 10


def test_self_dual_enumeration_n7():
    # free length with paired cosets: 3 codes, not the single trivial one
    cp = make_composite(2, 1, 7)
    ring = cp.ring
    found = list(enumerate_self_dual_composite(cp))
    assert len(found) == 3 == count_E_composite(2, 1, 7)
    for dc in found:
        assert is_self_dual_decomposed(dc)
        words = dense_span(ring, 7, compose_code(dc))
        assert brute_dual(ring, 7, words, "euclidean") == words


def test_enumeration_count_matches_formula():
    for (p, s, n) in [(2, 1, 2), (2, 1, 4), (2, 1, 8), (2, 1, 12), (2, 1, 14),
                      (3, 1, 3), (3, 1, 6), (2, 2, 2), (2, 2, 6), (5, 1, 2)]:
        cp = make_composite(p, s, n)
        cnt = sum(1 for _ in enumerate_self_dual_composite(cp))
        assert cnt == count_E_composite(p, s, n), (p, s, n, cnt)


def test_decomposed_literals():
    cp = make_composite(2, 1, 6)
    dc = decompose_code(cp, [rand_vec(cp.ring, 6)])
    lit = format_decomposed(dc)
    assert parse_decomposed(lit) == dc
    with pytest.raises(DomainError):
        parse_decomposed("6;[1:tors(2,2,1;0)]")  # slot 0 required
    with pytest.raises(DomainError):
        parse_decomposed("6;[0:tors(2,1,1;0),5:tors(2,2,1;0)]")  # not a rep
    with pytest.raises(DomainError):
        parse_decomposed("6;0:tors(2,1,1;0)")
    with pytest.raises(DomainError):
        parse_decomposed("6;[0:tors(2,1,1;0)]")  # missing rep 1
    with pytest.raises(DomainError):
        make_decomposed(cp, {0: torsion_code(make_params(2, 1, 1), 0),
                             1: torsion_code(make_params(2, 1, 1), 0)})
