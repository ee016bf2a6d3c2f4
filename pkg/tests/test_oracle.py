import random
from itertools import combinations

import pytest

from graphprod.errors import RadiusCapError
from graphprod.graphs import LabeledGraph, star_of
from graphprod.oracle import commutation_table, conjugacy_min_length, enumerate_ball
from graphprod.words import Word, cyclically_reduce, geodesic_length, support

from helpers import all_graphs, growth_ball_sizes

G = LabeledGraph.from_spec
W = Word.parse

DIHEDRAL = G({"a": "Z/2", "b": "Z/2"})
PATH = G({"a": "Z", "b": "Z", "c": "Z"}, ["a b", "b c"])


def test_ball_examples():
    assert enumerate_ball(DIHEDRAL, 3).sizes == [1, 3, 5, 7]
    assert enumerate_ball(G({"u": "Z/3"}), 2).sizes == [1, 3, 3]
    assert enumerate_ball(G({"a": "Z", "b": "Z"}, ["a b"]), 1).sizes == [1, 5]


def test_ball_elements_and_distances():
    ball = enumerate_ball(DIHEDRAL, 2)
    assert ball.elements == {"1", "a", "b", "a b", "b a"}
    assert ball.distance(W(DIHEDRAL, "b a")) == 2
    assert W(DIHEDRAL, "a a") in ball
    assert W(DIHEDRAL, "a b a") not in ball
    assert all(geodesic_length(w) == ball.distance(w) for w in ball.words())


def test_radius_cap():
    with pytest.raises(RadiusCapError, match="6"):
        enumerate_ball(DIHEDRAL, 7)
    assert enumerate_ball(DIHEDRAL, 7, cap=7).sizes[-1] == 15
    with pytest.raises(ValueError):
        enumerate_ball(DIHEDRAL, -1)


def test_ball_sizes_match_growth_series_on_cographs():
    checked = skipped = 0
    for g in all_graphs(4, ["Z", "Z/2", "Z/3"]):
        expected = growth_ball_sizes(g, 3)
        if expected is None:  # induced P4, no product decomposition
            skipped += 1
            continue
        assert enumerate_ball(g, 3).sizes == expected, g.to_text()
        checked += 1
    assert checked == 4449 and skipped == 972


def test_ball_sizes_invariant_under_relabeling():
    rng = random.Random(4)
    for _ in range(30):
        n = rng.randint(1, 4)
        names = [f"v{i}" for i in range(n)]
        g = G({v: rng.choice(["Z", "Z/2", "Z/3"]) for v in names}, [p for p in combinations(names, 2) if rng.random() < 0.5])
        new = [f"w{i}" for i in range(n)]
        rng.shuffle(new)
        h = g.relabel(dict(zip(names, new)))
        assert enumerate_ball(g, 3).sizes == enumerate_ball(h, 3).sizes


def test_conjugacy_min_length_examples():
    g = G({"a": "Z", "u": "Z/2"})
    assert conjugacy_min_length(g, W(g, "a u a^-1"), 2) == 1
    assert conjugacy_min_length(g, W(g, "a u"), 2) == 2


def test_conjugacy_min_length_agrees_with_cyclic_core():
    rng = random.Random(8)
    for _ in range(40):
        n = rng.randint(1, 3)
        names = "abc"[:n]
        g = G({v: rng.choice(["Z", "Z/2", "Z/3"]) for v in names}, [p for p in combinations(names, 2) if rng.random() < 0.5])
        ball = enumerate_ball(g, 3)
        w = Word(g, [(rng.choice(names), rng.choice([1, -1, 2])) for _ in range(rng.randint(0, 4))])
        _, core = cyclically_reduce(w)
        assert conjugacy_min_length(g, w, 3, ball=ball) <= geodesic_length(core)


def test_commutation_table_examples():
    ball = enumerate_ball(PATH, 2)
    assert commutation_table(PATH, W(PATH, "b"), 2, ball=ball) == set(ball.words())
    assert {str(x) for x in commutation_table(DIHEDRAL, W(DIHEDRAL, "a"), 2)} == {"1", "a"}
    assert commutation_table(PATH, Word.identity(PATH), 2) == set(ball.words())


def test_commutation_table_matches_star_on_path():
    ball = enumerate_ball(PATH, 3)
    table = commutation_table(PATH, W(PATH, "a"), 3, ball=ball)
    star = star_of(PATH, {"a"})
    assert table == {x for x in ball.words() if support(x) <= star}
