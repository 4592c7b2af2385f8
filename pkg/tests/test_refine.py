from hypothesis import given, strategies as st

from mealygroups.refine import minimize, product, refine_partition


def moore_classes(trans, labels):
    """Naive fixed-point refinement by signatures."""
    n = len(trans)
    cls = [labels[q] for q in range(n)]
    while True:
        sig = [(cls[q],) + tuple(cls[t] for t in trans[q]) for q in range(n)]
        ids = {}
        new = [ids.setdefault(s, len(ids)) for s in sig]
        if len(set(new)) == len(set(cls)):
            return new
        cls = new


def same_partition(p, q):
    return all((p[i] == p[j]) == (q[i] == q[j]) for i in range(len(p)) for j in range(len(p)))


@st.composite
def tables(draw):
    n = draw(st.integers(1, 12))
    d = draw(st.integers(1, 3))
    trans = [tuple(draw(st.integers(0, n - 1)) for _ in range(d)) for _ in range(n)]
    labels = [draw(st.integers(0, 2)) for _ in range(n)]
    return trans, labels


@given(tables())
def test_hopcroft_matches_moore(data):
    trans, labels = data
    assert same_partition(refine_partition(trans, labels), moore_classes(trans, labels))


def test_minimize_collapses_identity_cycle():
    trans = [(1, 1), (2, 2), (0, 0)]
    out = [(0, 1)] * 3
    M = minimize(trans, out)
    assert M.size == 1 and M.is_trivial


def test_product_with_inverse_is_trivial():
    swap = minimize([(0, 0)], [(1, 0)])
    assert product(swap, swap).is_trivial
