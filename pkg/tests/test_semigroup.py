import random

import pytest

from agb import NumericalSemigroup
from agb.errors import EmptyGenerators, GcdNotOne

from conftest import sieve_membership


def test_whole_naturals():
    S = NumericalSemigroup.from_generators([1])
    assert S.genus == 0
    assert S.gaps == ()
    assert S.frobenius == -1
    assert S.is_symmetric()
    assert S.nth_element(1) == 0
    assert S.nth_element(7) == 6


def test_suzuki_semigroup(suzuki):
    assert suzuki.genus == 14
    assert not suzuki.contains(27)
    assert suzuki.frobenius == 27
    assert suzuki.is_symmetric()
    assert suzuki.nth_element(3) == 10


def test_f16_semigroup():
    S = NumericalSemigroup.from_generators([14, 15, 22])
    assert S.genus == 49
    assert S.contains(97)
    assert S.contains(44) and S.contains(45)
    assert not S.is_symmetric()


def test_two_three():
    S = NumericalSemigroup.from_generators([2, 3])
    assert S.gaps == (1,)
    assert S.is_symmetric()
    assert S.nth_element(2) == 2
    assert not S.contains(-1)
    assert S.contains(0)


def test_generator_order_and_duplicates_do_not_matter():
    a = NumericalSemigroup.from_generators([13, 8, 10, 12, 8])
    b = NumericalSemigroup.from_generators([8, 10, 12, 13])
    assert a == b
    assert hash(a) == hash(b)


def test_empty_generators_rejected():
    with pytest.raises(EmptyGenerators):
        NumericalSemigroup.from_generators([])


def test_gcd_not_one_rejected():
    with pytest.raises(GcdNotOne):
        NumericalSemigroup.from_generators([4, 6])


def test_nonpositive_generator_rejected():
    with pytest.raises(ValueError):
        NumericalSemigroup.from_generators([0, 3])


def test_membership_matches_sieve_on_random_generator_sets():
    rng = random.Random(20240817)
    for _ in range(60):
        size = rng.randint(1, 5)
        gens = sorted(rng.sample(range(2, 31), size))
        gens.append(gens[-1] + 1)  # force gcd 1
        S = NumericalSemigroup.from_generators(gens)
        bound = 2 * max(gens) ** 2
        mem = sieve_membership(gens, bound)
        gaps = tuple(i for i, m in enumerate(mem) if not m)
        assert gaps == S.gaps
        assert len(gaps) == S.genus
        assert all(S.contains(m) for m in range(S.frobenius + 1, bound))
        assert [m for m in range(bound + 1) if S.contains(m)] == \
            [m for m in range(bound + 1) if mem[m]]


def test_closure_under_addition(suzuki):
    members = suzuki.elements_up_to(suzuki.conductor)
    for a in members:
        for b in members:
            assert suzuki.contains(a + b)


def test_gap_minus_member_is_never_a_member(suzuki):
    for S in (suzuki, NumericalSemigroup.from_generators([3, 5, 7])):
        members = S.elements_up_to(S.conductor)
        for h in members:
            for l in S.gaps:
                assert not S.contains(l - h)


def test_complement_of_shifted_copy_has_size_m(suzuki):
    for S in (suzuki, NumericalSemigroup.from_generators([3, 5, 7]),
              NumericalSemigroup.from_generators([2, 3])):
        for m in S.elements_up_to(S.conductor + 5):
            outside = [h for h in S.elements_up_to(S.conductor + m)
                       if not S.contains(h - m)]
            assert len(outside) == m


def test_nth_element_enumerates_members(suzuki):
    members = suzuki.elements_up_to(100)
    for i, m in enumerate(members, start=1):
        assert suzuki.nth_element(i) == m


def test_membership_mask_agrees_with_contains(suzuki):
    mask = suzuki.membership_mask(80)
    assert [bool(x) for x in mask] == [suzuki.contains(m) for m in range(81)]


def test_membership_mask_is_read_only(suzuki):
    mask = suzuki.membership_mask(40)
    with pytest.raises(ValueError):
        mask[3] = True


def test_desk_scale_guard():
    # frobenius of <10007, 10009> is about 10^8, past the table cap
    with pytest.raises(ValueError):
        NumericalSemigroup.from_generators([10007, 10009])
