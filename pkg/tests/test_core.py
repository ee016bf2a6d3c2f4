import math
from collections import Counter
from itertools import product

import pytest
from hypothesis import given, strategies as st

from graphprod.core import (
    INFINITE,
    AbelianLabel,
    factorize,
    invariant_factors,
    is_indecomposable,
    primary_decompose,
)
from graphprod.errors import LabelError, ParseError


def order_statistics(orders):
    """Number of elements of each order in Z/n1 x Z/n2 x ... (brute force)."""
    counts = Counter()
    for elem in product(*(range(n) for n in orders)):
        counts[math.lcm(*(n // math.gcd(n, x) for n, x in zip(orders, elem))) if elem else 1] += 1
    return counts


def L(text):
    return AbelianLabel.parse(text)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("Z/6", (2, 3)),
        ("Z", (INFINITE,)),
        ("ZxZ/12", (4, 3, INFINITE)),
        ("Z/2xZ/2xZ/4", (2, 2, 4)),
        ("Z/9xZ/4xZ/3", (4, 3, 9)),
    ],
)
def test_primary_decompose(text, expected):
    assert primary_decompose(L(text)) == expected


@pytest.mark.parametrize(
    "text, expected",
    [
        ("Z/2xZ/3", (6,)),
        ("Z/2xZ/2xZ/4", (2, 2, 4)),
        ("Z", (INFINITE,)),
        ("Z^2xZ/4xZ/6", (2, 12, INFINITE, INFINITE)),
    ],
)
def test_invariant_factors(text, expected):
    assert invariant_factors(L(text)) == expected


def test_invariant_factors_2_2_4_by_element_orders():
    # finite abelian groups are isomorphic iff they have the same number of
    # elements of each order
    assert order_statistics((2, 2, 4)) == order_statistics(invariant_factors(L("Z/2xZ/2xZ/4")))
    assert order_statistics((2, 2, 4)) != order_statistics((4, 4))
    assert order_statistics((2, 2, 4)) != order_statistics((2, 8))


@pytest.mark.parametrize("text, expected", [("Z/8", True), ("Z/6", False), ("Z^2", False), ("Z", True), ("Z/2xZ/2", False)])
def test_is_indecomposable(text, expected):
    assert is_indecomposable(L(text)) is expected


def test_parse_and_format_round_trip():
    assert str(L("Z^2xZ/4")) == "Z/4xZ^2"
    assert str(L("Z/2xZ/3")) == "Z/6"
    assert str(L("ZxZ")) == "Z^2"
    assert L(str(L("Z^3xZ/4xZ/6xZ/9"))).key() == L("Z^3xZ/4xZ/6xZ/9").key()


@pytest.mark.parametrize(
    "text, column",
    [("", 1), ("Q", 1), ("Z/6xY", 5), ("Z/1", 1), ("Z^0", 1), ("Zx", 3), ("Z /2", 1)],
)
def test_parse_errors_report_column(text, column):
    with pytest.raises(ParseError) as info:
        L(text)
    assert info.value.column == column


def test_label_invariants():
    with pytest.raises(LabelError):
        AbelianLabel(0, ())
    with pytest.raises(LabelError):
        AbelianLabel(0, (1,))
    with pytest.raises(LabelError):
        AbelianLabel(-1, (2,))


def test_cyclic_queries():
    assert L("Z/2xZ/3").is_cyclic and L("Z/2xZ/3").cyclic_order == 6
    assert L("Z").cyclic_order == INFINITE
    assert not L("Z/2xZ/2").is_cyclic
    with pytest.raises(LabelError):
        L("Z^2").cyclic_order


def test_factorize():
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert factorize(97) == {97: 1}
    assert factorize(1) == {}


labels = st.tuples(st.integers(0, 3), st.lists(st.integers(2, 60), max_size=4)).filter(
    lambda t: t[0] or t[1]
).map(lambda t: AbelianLabel(t[0], tuple(t[1])))


@given(labels)
def test_primary_factors_multiply_back(lab):
    factors = primary_decompose(lab)
    assert factors.count(INFINITE) == lab.free_rank
    assert math.prod(f for f in factors if f != INFINITE) == math.prod(lab.torsion_orders)
    assert all(is_indecomposable(AbelianLabel.cyclic(f)) for f in factors)


@given(labels)
def test_invariant_chain_divides_and_preserves_primary_factors(lab):
    chain = [d for d in invariant_factors(lab) if d != INFINITE]
    assert all(b % a == 0 for a, b in zip(chain, chain[1:]))
    assert sorted(primary_decompose(AbelianLabel.from_factors(invariant_factors(lab)))) == sorted(primary_decompose(lab))


@given(st.lists(st.integers(2, 12), min_size=1, max_size=3))
def test_invariant_factors_match_element_order_statistics(orders):
    lab = AbelianLabel(0, tuple(orders))
    assert order_statistics(tuple(orders)) == order_statistics(invariant_factors(lab))
