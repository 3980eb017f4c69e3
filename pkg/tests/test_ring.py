import pytest
from hypothesis import given, strategies as st

from zdmd.ring import (factor, is_prime, split_semiprime, validate_kpq_structure, zero_divisor_graph,
                       zero_divisors)


def test_zero_divisor_examples():
    assert zero_divisors(6) == [2, 3, 4]
    assert zero_divisors(15) == [3, 5, 6, 9, 10, 12]
    assert zero_divisors(7) == []
    with pytest.raises(ValueError):
        zero_divisors(1)


def test_zdg_z6_is_path():
    g = zero_divisor_graph(6)
    assert [tuple(g.name(x) for x in e) for e in g.edges()] == [("2", "3"), ("3", "4")]


def test_zdg_prime_is_empty():
    assert zero_divisor_graph(13).n == 0


def test_no_loops_for_nilpotents():
    # 3*3 = 0 mod 9 but 3 has no loop
    g = zero_divisor_graph(9)
    assert [g.name(v) for v in range(g.n)] == ["3", "6"]
    assert g.edges() == [(0, 1)]


@pytest.mark.parametrize("p,q", [(2, 3), (2, 7), (3, 5), (5, 7), (7, 11)])
def test_complete_bipartite(p, q):
    g = zero_divisor_graph(p * q)
    assert g.n == p + q - 2
    assert g.edge_count == (p - 1) * (q - 1)
    assert validate_kpq_structure(g, p, q)


def test_validate_kpq_rejects():
    with pytest.raises(ValueError):
        validate_kpq_structure(zero_divisor_graph(15), 3, 3)
    assert not validate_kpq_structure(zero_divisor_graph(21), 3, 5)


@given(st.integers(2, 3000))
def test_factor_multiplies_back(n):
    fs = factor(n)
    prod = 1
    for f in fs:
        prod *= f
        assert is_prime(f)
    assert prod == n


def test_split_semiprime():
    assert split_semiprime(77) == (7, 11)
    assert split_semiprime(4) is None
    assert split_semiprime(30) is None
    assert split_semiprime(13) is None


def test_small_cases():
    g = zero_divisor_graph(4)
    assert g.n == 1 and g.edge_count == 0 and g.name(0) == "2"
    assert validate_kpq_structure(zero_divisor_graph(6), 2, 3)
    assert validate_kpq_structure(zero_divisor_graph(15), 3, 5)


def test_zero_divisors_match_brute_force_up_to_300():
    from zdmd.graph import is_connected
    for n in range(2, 301):
        brute = [a for a in range(1, n) if any(a * b % n == 0 for b in range(1, n))]
        assert zero_divisors(n) == brute
        if len(brute) >= 2:
            assert is_connected(zero_divisor_graph(n)), n
