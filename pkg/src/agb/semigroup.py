"""Exact arithmetic for numerical semigroups.

A numerical semigroup is an additive submonoid of the nonnegative integers
whose complement (the set of gaps) is finite.  Membership below the conductor
is stored as a bitmap, so queries are O(1); everything at or above the
conductor is a member.
"""

import heapq
from functools import reduce
from math import gcd

import numpy as np

from .errors import EmptyGenerators, GcdNotOne


def _apery_distances(gens: tuple[int, ...]) -> list[int]:
    """Smallest member in each residue class modulo the least generator.

    Dijkstra over the residue graph (round-robin sieve): from a member v,
    v + g is a member for every generator g.
    """
    a = gens[0]
    dist = [None] * a
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        d, r = heapq.heappop(heap)
        if dist[r] is not None and d > dist[r]:
            continue
        for g in gens:
            nd = d + g
            nr = nd % a
            if dist[nr] is None or nd < dist[nr]:
                dist[nr] = nd
                heapq.heappush(heap, (nd, nr))
    return dist


class NumericalSemigroup:
    """Numerical semigroup with precomputed gaps, genus and Frobenius number.

    Instances are immutable after construction and safe to share across
    threads.  Use :meth:`from_generators` to build one.
    """

    __slots__ = ("generators", "gaps", "genus", "frobenius", "conductor",
                 "_bitmap", "_small_members", "_mask", "_hash")

    def __init__(self, generators, gaps):
        self.generators = tuple(generators)
        self.gaps = tuple(gaps)
        self.genus = len(self.gaps)
        self.frobenius = self.gaps[-1] if self.gaps else -1
        self.conductor = self.frobenius + 1
        gapset = set(self.gaps)
        self._bitmap = [i not in gapset for i in range(self.conductor)]
        self._small_members = tuple(
            i for i in range(self.conductor) if self._bitmap[i]
        )
        self._mask = None
        self._hash = hash(self.gaps)

    @classmethod
    def from_generators(cls, gens) -> "NumericalSemigroup":
        """Semigroup generated by ``gens``; requires gcd 1 and all gens >= 1."""
        gens = sorted(set(int(g) for g in gens))
        if not gens:
            raise EmptyGenerators("at least one generator is required")
        if gens[0] < 1:
            raise ValueError("generators must be positive integers")
        if reduce(gcd, gens) != 1:
            raise GcdNotOne(f"gcd of {gens} is {reduce(gcd, gens)}, not 1")
        dist = _apery_distances(tuple(gens))
        a = gens[0]
        frobenius = max(dist) - a
        if frobenius >= 10 ** 7:
            raise ValueError(
                f"conductor {frobenius + 1} is beyond desk scale; "
                "membership tables would need hundreds of megabytes"
            )
        gaps = sorted(
            v for r in range(a) for v in range(dist[r] - a, 0, -a)
        )
        return cls(gens, gaps)

    # -- queries --------------------------------------------------------

    def contains(self, m: int) -> bool:
        """True iff m is a member; False for negative m."""
        if m < 0:
            return False
        if m >= self.conductor:
            return True
        return self._bitmap[m]

    __contains__ = contains

    def nth_element(self, i: int) -> int:
        """The i-th member in increasing order, 1-based (element 1 is 0)."""
        if i < 1:
            raise ValueError("index is 1-based and must be >= 1")
        small = self._small_members
        if i <= len(small):
            return small[i - 1]
        return self.conductor + (i - len(small) - 1)

    def is_symmetric(self) -> bool:
        """True iff the largest gap equals 2g-1 (genus 0 counts as symmetric)."""
        return self.genus == 0 or self.frobenius == 2 * self.genus - 1

    def elements_up_to(self, limit: int) -> list[int]:
        """All members m with 0 <= m <= limit."""
        out = [m for m in self._small_members if m <= limit]
        out.extend(range(max(self.conductor, 0), limit + 1))
        return out

    def membership_mask(self, limit: int) -> np.ndarray:
        """Boolean membership array over [0, limit]; cached and grown on demand.

        The returned array is a read-only view into the cache.
        """
        if self._mask is None or len(self._mask) <= limit:
            size = max(limit + 1, self.conductor, 1)
            mask = np.ones(size, dtype=bool)
            if self.gaps:
                mask[list(self.gaps)] = False
            mask.setflags(write=False)
            self._mask = mask
        return self._mask[: limit + 1]

    # -- plumbing -------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.gaps == other.gaps

    def __hash__(self):
        return self._hash

    def __repr__(self):
        gens = ",".join(str(g) for g in self.generators)
        return f"NumericalSemigroup(<{gens}>, genus={self.genus})"


def from_generators(gens) -> NumericalSemigroup:
    """Module-level alias for :meth:`NumericalSemigroup.from_generators`."""
    return NumericalSemigroup.from_generators(gens)
