import pytest
from hypothesis import given

from strategies import weak
from wpqsym import compositions as wc


@pytest.mark.parametrize(
    "alpha,want",
    [((), (0, 0, 0, 0)), ((0, 0, 4, 0, 0, 2, 0, 0, 1, 0, 1), (8, 11, 7, 15)), ((2, 0, 0, 1, 1, 2), (6, 6, 2, 8))],
)
def test_stats(alpha, want):
    assert wc.stats(alpha) == want


@pytest.mark.parametrize(
    "alpha,want",
    [((0, 0, 1, 3, 0, 0, 2, 0), {3, 6, 10}), ((5,), {5}), ((2, 1, 0, 1), {2, 3, 5})],
)
def test_descent_set(alpha, want):
    assert wc.descent_set(alpha) == want


@pytest.mark.parametrize(
    "alpha,want", [((1, 0, 2), set()), ((1, 0, 1, 1), {3}), ((2, 1, 0, 1), {2}), ((2, 0, 0, 1, 1, 2), {2, 5})]
)
def test_peak_set(alpha, want):
    assert wc.peak_set(alpha) == want


def test_transpose_and_bar():
    assert wc.transpose((2, 0, 0, 0, 1, 0)) == (0, 1, 0, 0, 0, 1, 1)
    assert wc.bar((0, 2, 0, 1, 0)) == (2, 1)


def test_refines():
    assert wc.refines((1, 1), (2,))
    assert not wc.refines((2,), (1, 1))
    assert wc.refines((0, 1), (0, 0, 1))
    assert wc.refines((0, 2, 1), (0, 2, 1))


def test_mutation_decompositions():
    assert wc.mutation_decompositions((0, 1)) == {(1,): 1, (0, 1): 1}
    assert wc.mutation_decompositions((2,)) == {(2,): 1, (1, 1): 1}
    # three segmentations give the same mutation
    assert wc.mutation_decompositions((0, 0, 4, 0, 0, 2, 0, 0, 1, 0, 1))[(2, 1, 3, 0, 1, 1)] == 3


def test_canonical_form():
    assert wc.canonical_form((1, 2)) == (3,)
    assert wc.canonical_form((1, 1, 1)) == (3,)
    assert wc.canonical_form((2, 1, 0, 1)) == (2, 1, 0, 1)
    assert wc.canonical_form(()) == ()


def test_enumeration_counts():
    assert wc.enumerate_weak(0, 2) == [(), (0,), (0, 0)]
    assert len(wc.compositions(4)) == 8
    assert sorted(wc.enumerate_weak(1, 1)) == sorted([(1,), (0, 1), (1, 0)])
    # a zero and a part 1 both cost one cell: a_t = 2 a_{t-1} + a_{t-2} + ... + a_0
    counts = [1]
    for t in range(1, 8):
        counts.append(2 * counts[t - 1] + sum(counts[: t - 1]))
    assert [len(wc.by_total_weight(t)) for t in range(8)] == counts
    assert counts[:5] == [1, 2, 5, 13, 34]


def test_parse_and_format():
    assert wc.parse_composition("0,2, 1") == (0, 2, 1)
    assert wc.parse_composition("e") == ()
    assert wc.format_composition(()) == "e"
    with pytest.raises(wc.ParseError) as exc:
        wc.parse_composition("1,x,2")
    assert "position 2" in str(exc.value)


def test_sort_key_orders_by_weight_then_total_weight():
    items = [(0, 1), (2,), (1,), (0,), (1, 1)]
    assert sorted(items, key=wc.sort_key) == [(0,), (1,), (0, 1), (2,), (1, 1)]


@given(weak(6))
def test_reverse_and_complement_are_involutions(a):
    assert wc.reverse(wc.reverse(a)) == a
    if a:
        assert wc.complement(wc.complement(a)) == a


@given(weak(6))
def test_transpose_preserves_total_weight(a):
    assert wc.total_weight(wc.transpose(a)) == wc.total_weight(a)


@given(weak(6))
def test_refinement_is_reflexive_and_mutation_contains_identity(a):
    assert wc.refines(a, a)
    assert all(wc.refines(b, a) for b, _ in wc.lower_interval(a))
    if a:
        assert wc.mutates_to(a, a)


@given(weak(6))
def test_canonical_form_is_idempotent_and_keeps_statistics(a):
    t = wc.canonical_form(a)
    assert wc.canonical_form(t) == t
    assert wc.weight(t) == wc.weight(a)
    assert wc.class_key(t) == wc.class_key(a)


@given(weak(6))
def test_parse_format_round_trip(a):
    assert wc.parse_composition(wc.format_composition(a)) == a


@given(weak(5))
def test_descents_determine_positive_part_layout(a):
    d = wc.descent_set(a)
    assert all(1 <= i <= wc.total_weight(a) for i in d)
    assert len(d) == wc.length(a) - wc.zero_length(a)
