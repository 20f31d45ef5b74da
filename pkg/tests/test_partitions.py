import pytest
from hypothesis import given

from strategies import partitions
from tspp.partitions import (
    FrobeniusCoords,
    NegativeLeg,
    Partition,
    conjugate,
    durfee,
    frobenius,
    from_frobenius,
    hook,
    is_k_asymmetric,
    k_asymmetric_in_box,
    partitions_in_box,
    partitions_of_size_at_most,
)

SMALL = list(partitions_of_size_at_most(12))


def test_partition_validation():
    assert Partition([3, 1, 0, 0]) == (3, 1)
    with pytest.raises(ValueError):
        Partition([1, 2])
    with pytest.raises(ValueError):
        Partition([2, -1])


def test_partition_count_up_to_twelve():
    # p(0) + ... + p(12)
    assert len(SMALL) == sum([1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77])


def test_conjugate_examples():
    assert conjugate((4, 2, 1)) == (3, 2, 1, 1)
    assert conjugate(()) == ()
    assert conjugate((1, 1, 1)) == (3,)


def test_frobenius_examples():
    assert frobenius((4, 2, 1)) == FrobeniusCoords((3, 0), (2, 0))
    assert frobenius(()) == FrobeniusCoords((), ())
    assert frobenius(()).d == 0
    assert frobenius((3, 3, 2, 2, 2)) == FrobeniusCoords((2, 1), (4, 3))
    assert str(frobenius((4, 2, 1))) == "(3,0|2,0)"


def test_from_frobenius_examples():
    assert from_frobenius((0,), (2,)) == (1, 1, 1)
    assert from_frobenius((), ()) == ()
    assert from_frobenius(FrobeniusCoords((3, 0), (2, 0))) == (4, 2, 1)


def test_from_frobenius_rejects_bad_input():
    with pytest.raises(NegativeLeg):
        from_frobenius((1,), (-1,))
    with pytest.raises(ValueError):
        from_frobenius((0, 1), (1, 0))
    with pytest.raises(ValueError):
        from_frobenius((1,), ())


def test_hook():
    assert hook(2, 1) == (3, 1)
    assert hook(0, 0) == (1,)
    with pytest.raises(NegativeLeg):
        hook(1, -1)


def test_durfee():
    assert durfee((4, 2, 1)) == 2
    assert durfee(()) == 0
    assert Partition((3, 3, 3)).durfee == 3


def test_is_k_asymmetric_examples():
    assert is_k_asymmetric((3, 3, 2, 2, 2), 2)
    assert is_k_asymmetric((4, 3, 1), -1)
    assert not is_k_asymmetric((1,), 1)
    for k in range(-1, 4):
        assert is_k_asymmetric((), k)


def test_k_asymmetric_in_box_examples():
    assert k_asymmetric_in_box(1, 1) == [(), (1, 1)]
    assert k_asymmetric_in_box(2, -1) == [(), (2,)]
    assert k_asymmetric_in_box(1, -1) == [()]


def test_k_asymmetric_in_box_matches_filter():
    for n in range(1, 5):
        for k in range(-1, 3):
            expected = [lam for lam in partitions_in_box(n, n + k) if is_k_asymmetric(lam, k)]
            got = k_asymmetric_in_box(n, k)
            assert sorted(got) == sorted(expected)
            assert [(lam.size, tuple(lam)) for lam in got] == sorted((lam.size, tuple(lam)) for lam in got)


def test_partitions_in_box():
    assert len(list(partitions_in_box(2, 2))) == 6
    assert list(partitions_in_box(0, 3)) == [()]


def test_conjugate_involution():
    for lam in SMALL:
        assert conjugate(conjugate(lam)) == lam


def test_frobenius_roundtrip():
    for lam in SMALL:
        f = frobenius(lam)
        assert from_frobenius(f) == lam
        assert frobenius(from_frobenius(f)) == f
        assert f.d == durfee(lam)


@pytest.mark.parametrize("k", range(0, 5))
def test_asymmetry_flips_under_conjugation(k):
    for lam in SMALL:
        assert is_k_asymmetric(lam, k) == is_k_asymmetric(conjugate(lam), -k)


@given(partitions)
def test_random_partitions_roundtrip(lam):
    assert conjugate(conjugate(lam)) == lam
    assert from_frobenius(frobenius(lam)) == lam
    assert Partition(lam).size == conjugate(lam).size
    assert durfee(lam) == durfee(conjugate(lam))
