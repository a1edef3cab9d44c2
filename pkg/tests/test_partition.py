import pytest
from hypothesis import given
from hypothesis import strategies as st

from bncells.errors import InvalidInputError
from bncells.partition import OUTSIDE, GroupPartition, UnionFind, canonical_ids


def random_partitions(size):
    return st.lists(
        st.integers(0, 3), min_size=size, max_size=size
    ).map(lambda keys: GroupPartition.from_keys(0, keys))


class TestGroupPartition:
    def test_from_keys_canonical_order(self):
        p = GroupPartition.from_keys(2, ["b", "a", "b", "c", "a"])
        assert list(p.class_id) == [0, 1, 0, 2, 1]
        assert p.num_classes == 3
        assert p.classes() == [[0, 2], [1, 4], [3]]
        assert p.class_sizes() == [2, 2, 1]

    def test_labels(self):
        p = GroupPartition.from_keys(2, ["b", "a", "b"], label_fn=str.upper)
        assert p.labels == ("B", "A")
        assert p.label_of(0) == "B"

    def test_partial_domain(self):
        p = GroupPartition.from_keys(2, ["x", None, "x", "y"])
        assert list(p.class_id) == [0, OUTSIDE, 0, 1]
        assert not p.is_total()
        assert p.num_classes == 2
        assert p.classes() == [[0, 2], [3]]

    def test_non_canonical_ids_rejected(self):
        with pytest.raises(InvalidInputError):
            GroupPartition(n=1, class_id=[1, 0])
        with pytest.raises(InvalidInputError):
            GroupPartition(n=1, class_id=[0, 2])
        with pytest.raises(InvalidInputError):
            GroupPartition(n=1, class_id=[0, 1], labels=("only-one",))

    def test_refines(self):
        fine = GroupPartition.from_keys(1, [0, 1, 2, 3])
        coarse = GroupPartition.from_keys(1, [0, 0, 1, 1])
        assert fine.refines(coarse)
        assert not coarse.refines(fine)
        assert coarse.refines(coarse)

    def test_meet(self):
        p = GroupPartition.from_keys(1, [0, 0, 1, 1])
        q = GroupPartition.from_keys(1, [0, 1, 0, 1])
        m = p.meet(q)
        assert m.num_classes == 4
        assert m.refines(p) and m.refines(q)

    def test_restrict(self):
        p = GroupPartition.from_keys(1, [0, 0, 1, 1])
        r = p.restrict([True, False, True, True])
        assert list(r.class_id) == [0, OUTSIDE, 1, 1]

    @given(random_partitions(6), random_partitions(6))
    def test_meet_refines_both(self, p, q):
        m = p.meet(q)
        assert m.refines(p) and m.refines(q)

    @given(random_partitions(6))
    def test_same_blocks_reflexive(self, p):
        assert p.same_blocks(GroupPartition.from_keys(0, list(p.class_id)))


class TestUnionFind:
    def test_components(self):
        uf = UnionFind(6)
        uf.union(0, 3)
        uf.union(3, 5)
        uf.union(1, 2)
        p = uf.to_partition(n=0)
        assert p.classes() == [[0, 3, 5], [1, 2], [4]]

    @given(st.lists(st.tuples(st.integers(0, 9), st.integers(0, 9)), max_size=20))
    def test_matches_naive_closure(self, pairs):
        uf = UnionFind(10)
        naive = {i: {i} for i in range(10)}
        for x, y in pairs:
            uf.union(x, y)
            merged = naive[x] | naive[y]
            for z in merged:
                naive[z] = merged
        for x in range(10):
            for y in range(10):
                assert (uf.find(x) == uf.find(y)) == (y in naive[x])

    def test_canonical_ids_none(self):
        assert list(canonical_ids(["a", None, "a"])) == [0, -1, 0]
