import pytest
from hypothesis import given, settings, strategies as st

from modrep.partitions import (EMPTY, CoreWeight, Partition, classify, dominates, o_lambda,
                               p_adic_expansion, p_core, p_core_two_part, partition)


def all_partitions(n):
    if n == 0:
        yield ()
        return

    def rec(remaining, largest, acc):
        if remaining == 0:
            yield tuple(acc)
            return
        for part in range(min(largest, remaining), 0, -1):
            yield from rec(remaining - part, part, acc + [part])

    yield from rec(n, n, [])


def remove_rim_hooks_all_orders(parts, p):
    """All terminal partitions after greedily removing rim p-hooks in every order.

    Rim hooks are removed on first-column hook lengths (beta numbers): a
    removable p-hook subtracts p from one beta number.
    """
    ell = len(parts)
    beta = tuple(parts[i] + (ell - 1 - i) for i in range(ell))
    results = set()

    def rec(bset):
        moves = [b for b in bset if b - p >= 0 and (b - p) not in bset]
        if not moves:
            srt = sorted(bset, reverse=True)
            final = tuple(x for x in (srt[i] - (len(srt) - 1 - i) for i in range(len(srt))) if x > 0)
            results.add(final)
            return
        for b in moves:
            rec(frozenset(bset) - {b} | {b - p})

    rec(frozenset(beta))
    return results


@pytest.mark.parametrize("parts,p,core,weight", [
    ((4, 2), 2, (), 3),
    ((4, 2), 3, (4, 2), 0),
    ((), 2, (), 0),
    ((), 7, (), 0),
    ((3, 1), 2, (), 2),
    ((2, 1), 2, (2, 1), 0),
])
def test_p_core_examples(parts, p, core, weight):
    cw = p_core(Partition(parts), p)
    assert cw == CoreWeight(Partition(core), weight)


def test_p_core_order_independent_vs_exhaustive_removal():
    for n in range(0, 9):
        for parts in all_partitions(n):
            for p in (2, 3, 5):
                terminal = remove_rim_hooks_all_orders(parts, p)
                assert len(terminal) == 1, (parts, p, terminal)
                cw = p_core(Partition(parts), p)
                assert cw.core.parts == next(iter(terminal))
                assert cw.weight == (n - cw.core.n) // p


def test_core_has_no_p_hooks():
    for n in range(0, 13):
        for parts in all_partitions(n):
            for p in (2, 3):
                core = p_core(Partition(parts), p).core
                assert all(h % p != 0 for h in core.hook_lengths())


@pytest.mark.parametrize("n,second,p,core,weight", [
    (6, 2, 2, (), 3),
    (15, 7, 5, (3, 2), 2),
    (7, 2, 3, (1,), 2),
])
def test_two_part_core_examples(n, second, p, core, weight):
    cw = p_core_two_part(n, second, p)
    assert cw.core.parts == core
    assert cw.weight == weight


def test_two_part_core_agrees_with_abacus_spread():
    for p in (2, 3, 5, 7):
        for n in range(0, 31):
            for second in range(0, n // 2 + 1):
                lam = partition(n - second, second)
                assert p_core_two_part(n, second, p) == p_core(lam, p), (n, second, p)


def test_p_core_idempotent_on_two_part_cores():
    for p in (2, 3, 5, 7):
        for n in range(0, 61):
            for second in range(0, n // 2 + 1):
                core = p_core_two_part(n, second, p).core
                assert p_core(core, p) == CoreWeight(core, 0)


def test_restricted_two_part_weight_dichotomy():
    # p-restricted (a,b) has weight 0 or 1; weight 1 iff a-b < p-1 <= a
    for p in (2, 3, 5):
        for a in range(0, 20):
            for b in range(0, a + 1):
                lam = partition(a, b)
                if not classify(lam, p)["p_restricted"]:
                    continue
                w = p_core(lam, p).weight
                assert w in (0, 1)
                assert (w == 1) == (a - b < p - 1 <= a)


@pytest.mark.parametrize("parts,p,regular,restricted", [
    ((2, 2, 2), 3, False, True),
    ((4, 2), 2, True, False),
    ((1, 1), 2, False, True),
    ((2,), 2, True, False),
    ((), 2, True, True),
])
def test_classify(parts, p, regular, restricted):
    flags = classify(Partition(parts), p)
    assert flags == {"p_regular": regular, "p_restricted": restricted}


@pytest.mark.parametrize("parts,p,layers", [
    ((3,), 3, [(), (1,)]),
    ((1,), 5, [(1,)]),
    ((4, 2), 2, [(), (2, 1)]),
    ((1, 1, 1), 2, [(1, 1, 1)]),
])
def test_p_adic_examples(parts, p, layers):
    out = p_adic_expansion(Partition(parts), p)
    assert [mu.parts for mu in out] == layers


def test_p_adic_reassembly_and_restrictedness():
    for n in range(0, 13):
        for parts in all_partitions(n):
            for p in (2, 3, 5):
                layers = p_adic_expansion(Partition(parts), p)
                for mu in layers:
                    assert classify(mu, p)["p_restricted"], (parts, p, mu)
                width = max([len(parts)] + [len(mu.parts) for mu in layers])
                for j in range(width):
                    total = sum(p**i * (mu.parts[j] if j < len(mu.parts) else 0)
                                for i, mu in enumerate(layers))
                    assert total == (parts[j] if j < len(parts) else 0)


@pytest.mark.parametrize("parts,p,olam", [
    ((1,), 3, (1,)),
    ((3,), 3, (3,)),
    ((2,), 2, (2,)),
    ((1, 1, 1), 2, (1, 1, 1)),
    ((4, 2), 2, (2, 2, 2)),
])
def test_o_lambda(parts, p, olam):
    assert o_lambda(Partition(parts), p).parts == olam


def test_dominates_examples():
    assert dominates(partition(5, 1), partition(4, 2))
    assert not dominates(partition(4, 1, 1), partition(3, 3))
    for parts in all_partitions(6):
        assert dominates(partition(6), Partition(parts))
    with pytest.raises(ValueError):
        dominates(partition(2), partition(1))


def test_dominates_partial_order_exhaustive():
    for n in (5, 8, 12):
        parts = [Partition(x) for x in all_partitions(n)]
        for a in parts:
            assert dominates(a, a)
        for a in parts:
            for b in parts:
                if dominates(a, b) and dominates(b, a):
                    assert a == b
        import random
        rng = random.Random(0)
        triples = [(rng.choice(parts), rng.choice(parts), rng.choice(parts)) for _ in range(300)]
        for a, b, c in triples:
            if dominates(a, b) and dominates(b, c):
                assert dominates(a, c)


@given(st.lists(st.integers(min_value=1, max_value=12), min_size=0, max_size=6),
       st.sampled_from([2, 3, 5]))
@settings(max_examples=200, deadline=None)
def test_weight_identity_property(parts, p):
    lam = Partition(tuple(sorted(parts, reverse=True)))
    cw = p_core(lam, p)
    assert lam.n == cw.core.n + p * cw.weight


def test_parse_and_str():
    assert Partition.parse("4,2").parts == (4, 2)
    assert Partition.parse("-") == EMPTY
    assert str(EMPTY) == "-"
    assert str(partition(4, 2)) == "4,2"
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((0,))
