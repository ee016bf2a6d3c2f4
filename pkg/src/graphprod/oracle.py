"""Brute-force ground truth by breadth-first search in the Cayley graph.

Elements are deduplicated by their normal form, generators are the letters
``v^{+1}`` and ``v^{-1}``.  Growth is exponential, so radii are capped.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .errors import RadiusCapError
from .graphs import LabeledGraph
from .words import Word, _ctx, _foata, _inverse, _length, _push, _reduce, _same_context

__all__ = [
    "DEFAULT_RADIUS_CAP",
    "Ball",
    "enumerate_ball",
    "conjugacy_min_length",
    "commutation_table",
]

DEFAULT_RADIUS_CAP = 6


@dataclass
class Ball:
    """All elements within ``radius`` of the identity.

    ``distances`` maps each element's normal-form syllable tuple to its word
    length; ``sizes[r]`` is the number of elements of length at most ``r``.
    """

    context: LabeledGraph
    radius: int
    distances: dict[tuple, int] = field(repr=False)
    sizes: list[int]
    _inverses: dict | None = field(default=None, init=False, repr=False, compare=False)

    def __len__(self):
        return len(self.distances)

    def __contains__(self, w: Word) -> bool:
        return self.key(w) in self.distances

    def key(self, w: Word) -> tuple:
        return _foata(w._ctx, _reduce(w._ctx, w.syl))

    def distance(self, w: Word) -> int:
        """Word length of ``w``; ``KeyError`` if it lies outside the ball."""
        return self.distances[self.key(w)]

    def words(self, max_radius: int | None = None) -> Iterator[Word]:
        ctx = _ctx(self.context)
        for key, d in self.distances.items():
            if max_radius is None or d <= max_radius:
                yield Word._from(ctx, key)

    def inverses(self) -> dict[tuple, list]:
        """Reduced inverse of every element, keyed like ``distances``."""
        if self._inverses is None:
            ctx = _ctx(self.context)
            self._inverses = {key: _inverse(ctx, key) for key in self.distances}
        return self._inverses

    @property
    def elements(self) -> frozenset[str]:
        """Normal-form serializations of the elements."""
        return frozenset(str(w) for w in self.words())


def _check_radius(r: int, cap: int) -> None:
    if r < 0:
        raise ValueError(f"radius must be non-negative, got {r}")
    if r > cap:
        raise RadiusCapError(r, cap)


def enumerate_ball(g: LabeledGraph, r: int, cap: int = DEFAULT_RADIUS_CAP) -> Ball:
    _check_radius(r, cap)
    ctx = _ctx(g)
    letters = ctx.letters()
    distances: dict[tuple, int] = {(): 0}
    frontier: list[tuple] = [()]
    sizes = [1]
    for d in range(1, r + 1):
        fresh = []
        for key in frontier:
            for s in letters:
                st = list(key)
                _push(ctx, st, s)
                nk = _foata(ctx, st)
                if nk not in distances:
                    distances[nk] = d
                    fresh.append(nk)
        frontier = fresh
        sizes.append(sizes[-1] + len(fresh))
    return Ball(g, r, distances, sizes)


def _ball_for(g: LabeledGraph, r: int, cap: int, ball: Ball | None) -> Ball:
    if ball is not None and ball.radius >= r and (ball.context is g or ball.context == g):
        _check_radius(r, cap)
        return ball
    return enumerate_ball(g, r, cap)


def conjugacy_min_length(g: LabeledGraph, w: Word, r: int, cap: int = DEFAULT_RADIUS_CAP, ball: Ball | None = None) -> int:
    """Least word length of ``x^-1 w x`` over ``x`` in the radius-``r`` ball.

    An upper bound for the shortest conjugate; exact whenever some shortest
    conjugate is reached by a conjugator of length at most ``r``.
    """
    ball = _ball_for(g, r, cap, ball)
    ctx = _same_context(w, Word.identity(g))
    body = list(w.syl)
    best = _length(ctx, _reduce(ctx, body))
    inverses = ball.inverses()
    for x, d in ball.distances.items():
        if d > r:
            continue
        st = list(inverses[x])  # already reduced
        for s in body:
            _push(ctx, st, s)
        for s in x:
            _push(ctx, st, s)
        n = _length(ctx, st)
        if n < best:
            best = n
    return best


def commutation_table(g: LabeledGraph, u: Word, r: int, cap: int = DEFAULT_RADIUS_CAP, ball: Ball | None = None) -> set[Word]:
    """Elements ``x`` of the radius-``r`` ball with ``x u == u x``."""
    ball = _ball_for(g, r, cap, ball)
    ctx = _same_context(u, Word.identity(g))
    us = list(u.syl)
    u_inv = _inverse(ctx, us)
    inverses = ball.inverses()
    out = set()
    for x, d in ball.distances.items():
        if d > r:
            continue
        st = list(x)  # already reduced
        for s in us:
            _push(ctx, st, s)
        # each push shortens the stack by at most one syllable, so stop as
        # soon as x u x^-1 u^-1 can no longer cancel completely
        tail = inverses[x] + u_inv
        left = len(tail)
        for s in tail:
            if len(st) > left:
                break
            _push(ctx, st, s)
            left -= 1
        if not st and not left:
            out.add(Word._from(ctx, x))
    return out
