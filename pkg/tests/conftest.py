from functools import reduce
from itertools import combinations
from math import gcd

import pytest

from agb import HStar, NumericalSemigroup, hermitian_table


def sieve_membership(gens, bound):
    """Independent reachability sieve; the reference oracle for semigroups."""
    mem = [False] * (bound + 1)
    mem[0] = True
    for i in range(1, bound + 1):
        mem[i] = any(i >= g and mem[i - g] for g in gens)
    return mem


@pytest.fixture(scope="session")
def suzuki():
    return NumericalSemigroup.from_generators([8, 10, 12, 13])


@pytest.fixture(scope="session")
def suzuki_hstar(suzuki):
    return HStar.from_equiv_divisor(suzuki, 64)


@pytest.fixture(scope="session")
def klein_hstar():
    S = NumericalSemigroup.from_generators([3, 5, 7])
    return HStar.from_isometry_dual(S, 23)


@pytest.fixture(scope="session")
def f16_hstar():
    """Length-212 jump set over <14,15,22> with the shortened-divisor tail."""
    S = NumericalSemigroup.from_generators([14, 15, 22])
    members = [m for m in range(212) if S.contains(m)]
    members += [210 + l for l in S.gaps if l >= 2]
    members.append(225)
    return HStar.from_explicit(S, 212, members)


@pytest.fixture(scope="session")
def herm2_table():
    return hermitian_table(2)


@pytest.fixture(scope="session")
def herm3_table():
    return hermitian_table(3)


@pytest.fixture(scope="session")
def small_family():
    """Every distinct semigroup generated by a subset of {2..15} with genus <= 10."""
    seen = {}
    base = range(2, 16)
    for size in range(1, len(list(base)) + 1):
        for combo in combinations(range(2, 16), size):
            if reduce(gcd, combo) != 1:
                continue
            S = NumericalSemigroup.from_generators(combo)
            if S.genus <= 10 and S.gaps not in seen:
                seen[S.gaps] = S
    return sorted(seen.values(), key=lambda s: (s.genus, s.gaps))
