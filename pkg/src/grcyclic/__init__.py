"""Cyclic codes over the Galois ring GR(p^2, s).

Canonical two-generator forms < (u-1)^i0 + p*h(u-1), p*(u-1)^i1 > for length
p^a, Euclidean and Hermitian duals in closed form, self-dual enumeration and
counting, and the coset-transform decomposition that extends everything to
arbitrary length n with p not dividing the free part.
"""

from .gring import (DomainError, GaloisRing, ResidueField, RingEmbedding,
                    format_elem, format_teich, get_embedding, make_ring,
                    parse_elem)
from .cyclic import (CanonicalCode, CodeParams, QuotPoly, cardinality,
                     codewords, contains, enumerate_ideals, format_code,
                     format_qpoly, full_code, generators, make_canonical,
                     make_params, normalize, parse_code, parse_qpoly,
                     torsion_code)
from .duality import (conjugate_code, enumerate_self_dual, euclidean_dual,
                      hermitian_dual, is_self_dual, selfdual_system,
                      solve_selfdual_system)
from .counting import (count_all, count_by_d, count_E_composite,
                       count_E_prime_power, count_H_prime_power, emit_table,
                       is_unique_self_dual)
from .cosets import CosetPartition, coset, delta, partition
from .dft import (CompositeParams, DecomposedCode, compose_code,
                  decompose_code, dft_all, dft_forward, dft_inverse,
                  dual_decomposition, enumerate_self_dual_composite,
                  format_decomposed, is_self_dual_decomposed, make_composite,
                  make_decomposed, parse_decomposed, phi, phi_inverse)

__version__ = "1.0.0"

__all__ = [
    "DomainError", "GaloisRing", "ResidueField", "RingEmbedding",
    "format_elem", "format_teich", "get_embedding", "make_ring", "parse_elem",
    "CanonicalCode", "CodeParams", "QuotPoly", "cardinality", "codewords",
    "contains", "enumerate_ideals", "format_code", "format_qpoly", "full_code",
    "generators", "make_canonical", "make_params", "normalize", "parse_code",
    "parse_qpoly", "torsion_code",
    "conjugate_code", "enumerate_self_dual", "euclidean_dual",
    "hermitian_dual", "is_self_dual", "selfdual_system",
    "solve_selfdual_system",
    "count_all", "count_by_d", "count_E_composite", "count_E_prime_power",
    "count_H_prime_power", "emit_table", "is_unique_self_dual",
    "CosetPartition", "coset", "delta", "partition",
    "CompositeParams", "DecomposedCode", "compose_code", "decompose_code",
    "dft_all", "dft_forward", "dft_inverse", "dual_decomposition",
    "enumerate_self_dual_composite", "format_decomposed",
    "is_self_dual_decomposed", "make_composite", "make_decomposed",
    "parse_decomposed", "phi", "phi_inverse",
    "__version__",
]
