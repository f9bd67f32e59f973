from hypothesis import strategies as st

from circiso.circulant import ConnectionSet

# orders with at least one admissible theta modulus m (m^3 | n)
THETA_ORDERS = {16: [2], 24: [2], 27: [3], 32: [2], 48: [2], 54: [3], 64: [2, 4]}


@st.composite
def connection_sets(draw, min_n=3, max_n=40, min_size=0):
    n = draw(st.integers(min_value=max(min_n, 2 * min_size), max_value=max_n))
    jumps = draw(st.sets(st.integers(min_value=1, max_value=n // 2), min_size=min_size))
    return ConnectionSet(n, tuple(sorted(jumps)))


@st.composite
def theta_cases(draw, min_size=0):
    """(n, m, t, connection set of order n)"""
    n = draw(st.sampled_from(sorted(THETA_ORDERS)))
    m = draw(st.sampled_from(THETA_ORDERS[n]))
    t = draw(st.integers(min_value=0, max_value=n // m - 1))
    jumps = draw(st.sets(st.integers(min_value=1, max_value=n // 2), min_size=min_size))
    return n, m, t, ConnectionSet(n, tuple(sorted(jumps)))
