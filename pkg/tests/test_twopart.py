import pytest

from modrep.partitions import partition, is_p_regular
from modrep.twopart import (NOT_COVERED, TwoPartLabel, decomposition_number, mbr_restrict,
                            p_kostka_number, predicted_complexity, simple_dim,
                            specht_decomposition, specht_dim)


def test_psi_examples():
    for n, k, p in [(6, 2, 2), (9, 4, 3), (10, 5, 5)]:
        assert decomposition_number(n, k, k, p) == 1
    assert decomposition_number(6, 2, 1, 2) == 1
    assert decomposition_number(5, 2, 1, 2) == 0
    with pytest.raises(ValueError):
        decomposition_number(6, 3, 3, 2)  # (3,3) is not 2-regular


def test_phi_examples():
    assert p_kostka_number(6, 1, 1, 3) == 1
    assert p_kostka_number(6, 1, 0, 3) == 0
    assert p_kostka_number(7, 1, 0, 3) == 1


def test_specht_dim():
    assert specht_dim(5, 2) == 5
    assert specht_dim(6, 2) == 9
    assert specht_dim(7, 0) == 1
    with pytest.raises(ValueError):
        specht_dim(4, 3)


def test_simple_dim_examples():
    assert simple_dim(9, 0, 3) == 1
    assert simple_dim(6, 2, 2) == 4
    assert simple_dim(5, 2, 2) == 4


def test_dimension_consistency():
    for p in (2, 3):
        for n in range(1, 13):
            for k in range(0, n // 2 + 1):
                total = sum(
                    decomposition_number(n, k, s, p) * simple_dim(n, s, p)
                    for s in range(k + 1)
                    if is_p_regular(partition(n - s, s), p)
                )
                assert total == specht_dim(n, k), (n, k, p)


def test_specht_decomposition_examples():
    def labels(n, s, p):
        return {x.partition.parts for x in specht_decomposition(n, s, p)}

    assert labels(6, 2, 2) == {(4, 2), (5, 1), (6,)}
    assert labels(7, 2, 3) == {(5, 2), (7,)}
    assert labels(9, 0, 5) == {(9,)}


def test_mbr_examples():
    assert mbr_restrict(4, 2, 5) == [(3, 2), (4, 1)]
    assert mbr_restrict(5, 2, 3) == [(4, 2), (5, 1)]
    with pytest.raises(ValueError, match="branch not covered"):
        mbr_restrict(4, 2, 3)
    with pytest.raises(ValueError):
        mbr_restrict(4, 2, 2)


def test_mbr_single_branch():
    # b-2 = a (mod p) keeps only the first summand
    a, b, p = 5, 4, 3
    assert (b - 2) % p == a % p
    assert mbr_restrict(a, b, p) == [(4, 4)]


def test_mbr_preserves_dimension():
    for p in (3, 5):
        for n in range(4, 13):
            for b in range(1, n // 2 + 1):
                a = n - b
                if not 0 < b < a:
                    continue
                try:
                    out = mbr_restrict(a, b, p)
                except ValueError:
                    continue
                lhs = simple_dim(n, b, p)
                rhs = sum(simple_dim(a2 + b2, b2, p) for a2, b2 in out)
                assert lhs == rhs, (a, b, p, out)


@pytest.mark.parametrize("n,second,p,value,rule", [
    (6, 1, 2, 2, "ThmA_i"),
    (6, 2, 2, 2, "ThmA_ii"),
    (5, 2, 2, 1, "ThmA_ii"),
    (7, 2, 3, 2, "ThmA_ii"),
    (7, 3, 3, 2, "ThmC_i"),
    (10, 4, 3, 2, "ThmC_i"),
])
def test_predicted_examples(n, second, p, value, rule):
    pred = predicted_complexity(n, second, p)
    assert pred.value == value
    assert pred.rule == rule


def test_predicted_thm_c_ii():
    pred = predicted_complexity(22, 10, 5)  # second = 2p for p=5
    assert pred.rule == "ThmC_ii"
    assert pred.value == pred.weight


def test_predicted_shortcut_and_not_covered():
    # outside both theorems: p=2, second=3
    for n in range(7, 13):
        pred = predicted_complexity(n, 3, 2)
        if simple_dim(n, 3, 2) % 2 != 0:
            assert pred.rule == "dim_shortcut" and pred.value == pred.weight
        else:
            assert pred.value == NOT_COVERED
    # value never exceeds the weight
    for p in (2, 3, 5):
        for n in range(2, 13):
            for second in range(0, n // 2 + 1):
                if not is_p_regular(partition(n - second, second), p):
                    continue
                pred = predicted_complexity(n, second, p)
                if pred.value != NOT_COVERED:
                    assert pred.value <= pred.weight
                if simple_dim(n, second, p) % p != 0:
                    assert pred.value == pred.weight


def test_two_part_label_validation():
    with pytest.raises(ValueError):
        TwoPartLabel(5, 3, 2)
    assert TwoPartLabel(6, 2, 2).partition.parts == (4, 2)
