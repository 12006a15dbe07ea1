"""q-cyclotomic cosets modulo m and their inverse-pairing partition.

For q = p^s with p not dividing m, the orbits of h |-> q h mod m partition
Z_m.  A coset is self-inverse when it contains -h along with h; its size is
then 1 or even.  The partition splits the labels 0..m-1 into

  J0   -- {0}, plus {m/2} when m is even (always singleton self-inverse)
  J1   -- one minimal representative per remaining self-inverse coset
  J2'  -- per inverse-pair of non-self-inverse cosets, the representative
          of the coset with the smaller minimum
  J2'' -- the labels {-h mod m : h in J2'}; each lies in the partner coset
          of its J2' mate (not necessarily that coset's minimum)

so that slot k of a transform pairs with slot (m - k) mod m literally,
with no Frobenius bookkeeping on top.
"""

from __future__ import annotations

import dataclasses

from .gring import DomainError


def coset(h, m, q):
    """The q-cyclotomic coset of h modulo m, as a sorted tuple."""
    out = set()
    x = h % m
    while x not in out:
        out.add(x)
        x = (x * q) % m
    return tuple(sorted(out))


def delta(m):
    """The number of singleton self-inverse slots forced by 0 and m/2."""
    return 1 if m % 2 else 2


@dataclasses.dataclass(frozen=True)
class CosetPartition:
    m: int
    q: int
    cosets: tuple      # all distinct cosets, sorted by minimum element
    J0: tuple
    J1: tuple
    J2p: tuple
    J2pp: tuple

    @property
    def reps(self):
        """All transform slot labels, in emission order."""
        return self.J0 + self.J1 + self.J2p + self.J2pp

    def coset_of(self, h):
        for c in self.cosets:
            if h % self.m in c:
                return c
        raise DomainError("no coset contains %d" % h)

    def size_of(self, h):
        return len(self.coset_of(h))


def partition(m, p, s):
    """The inverse-pairing partition of Z_m under multiplication by p^s."""
    if m < 1:
        raise DomainError("modulus m=%d must be positive" % m)
    if m % p == 0:
        raise DomainError("p=%d divides m=%d; cosets need gcd(p, m) = 1" % (p, m))
    q = pow(p, s, m) if m > 1 else 0
    seen = set()
    cosets = []
    for h in range(m):
        if h not in seen:
            c = coset(h, m, q)
            seen.update(c)
            cosets.append(c)
    j0 = (0,) if m % 2 else (0, m // 2)
    j1 = []
    j2p = []
    j2pp = []
    paired = set()
    for c in cosets:
        rep = c[0]
        if rep in j0:
            assert len(c) == 1
            continue
        if (-rep) % m in c:
            assert len(c) in (1, 2) or len(c) % 2 == 0
            j1.append(rep)
            continue
        if rep in paired:
            continue
        partner = coset((-rep) % m, m, q)
        rep2 = partner[0]
        lo = min(rep, rep2)
        j2p.append(lo)
        j2pp.append((m - lo) % m)
        paired.update(c)
        paired.update(partner)
    return CosetPartition(m, q, tuple(cosets), j0, tuple(sorted(j1)),
                          tuple(sorted(j2p)), tuple((m - h) % m for h in sorted(j2p)))
