from hypothesis import strategies as st

from zdmd.graph import from_edge_list


@st.composite
def connected_graphs(draw, min_n=1, max_n=9):
    """Random spanning tree (parent pointers) plus arbitrary extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = {(draw(st.integers(0, v - 1)), v) for v in range(1, n)}
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if pairs:
        edges |= set(draw(st.lists(st.sampled_from(pairs), max_size=2 * n)))
    return from_edge_list(n, edges)


@st.composite
def trees(draw, min_n=2, max_n=14):
    n = draw(st.integers(min_n, max_n))
    return from_edge_list(n, [(draw(st.integers(0, v - 1)), v) for v in range(1, n)])
