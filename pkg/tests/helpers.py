"""Test-only enumerators and brute-force oracles, independent of the library algorithms."""
from itertools import combinations, permutations, product

from graphprod import AbelianLabel, LabeledGraph

NAMES = "abcd"


def all_graphs(max_vertices, label_texts, min_vertices=1):
    """Every labeled graph on vertices a, b, c, ... with every edge subset and labeling."""
    labels = [AbelianLabel.parse(t) for t in label_texts]
    for n in range(min_vertices, max_vertices + 1):
        names = NAMES[:n]
        pairs = list(combinations(names, 2))
        for mask in range(1 << len(pairs)):
            edges = [p for k, p in enumerate(pairs) if mask >> k & 1]
            for labs in product(labels, repeat=n):
                yield LabeledGraph(names, dict(zip(names, labs)), edges)


def brute_force_iso(g1, g2):
    """Try every bijection; return a mapping dict or None."""
    if len(g1) != len(g2):
        return None
    v1 = list(g1.vertices)
    for image in permutations(g2.vertices):
        m = dict(zip(v1, image))
        if all(g1.labels[v].isomorphic(g2.labels[m[v]]) for v in v1) and all(
            g1.adjacent(u, v) == g2.adjacent(m[u], m[v]) for u, v in combinations(v1, 2)
        ):
            return m
    return None


def brute_force_canonical_key(g):
    """Least (labels, adjacency) key over all vertex orders."""
    best = None
    for order in permutations(g.vertices):
        key = (
            tuple(g.labels[v].key() for v in order),
            tuple(g.adjacent(order[i], order[j]) for i, j in combinations(range(len(order)), 2)),
        )
        if best is None or key < best:
            best = key
    return best


def brute_force_cliques(g):
    vs = list(g.vertices)
    cliques = [
        frozenset(s)
        for r in range(1, len(vs) + 1)
        for s in combinations(vs, r)
        if all(g.adjacent(u, v) for u, v in combinations(s, 2))
    ]
    return {c for c in cliques if not any(c < d for d in cliques)}


# -- growth series of graph products of cographs ----------------------------
#
# A graph product over a disconnected graph is the free product of the
# components' products; over a graph whose complement is disconnected it is
# the direct product.  Spherical growth series (generators v^{+-1}) satisfy
#   direct:  S = S1 * S2
#   free:    1/S = 1/S1 + 1/S2 - 1
# which gives ball sizes with no reference to normal forms.


def _mul(a, b, n):
    out = [0] * n
    for i, x in enumerate(a[:n]):
        if x:
            for j, y in enumerate(b[: n - i]):
                out[i + j] += x * y
    return out


def _recip(a, n):
    assert a[0] == 1
    out = [0] * n
    out[0] = 1
    for k in range(1, n):
        out[k] = -sum(a[j] * out[k - j] for j in range(1, min(k, len(a) - 1) + 1))
    return out


def _cyclic_sphere(order, n):
    out = [1] + [0] * (n - 1)
    for k in range(1, n):
        if order == 0:
            out[k] = 2
        elif 2 * k < order:
            out[k] = 2
        elif 2 * k == order:
            out[k] = 1
    return out


def _components(vs, adjacent):
    vs = set(vs)
    comps = []
    while vs:
        stack = [vs.pop()]
        comp = set(stack)
        while stack:
            u = stack.pop()
            for w in list(vs):
                if adjacent(u, w):
                    vs.remove(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(comp)
    return comps


def growth_sphere_sizes(g, radius):
    """Sphere sizes 0..radius, or None if the graph is not a cograph."""
    n = radius + 1

    def series(vs):
        if len(vs) == 1:
            (v,) = vs
            return _cyclic_sphere(g.labels[v].cyclic_order, n)
        comps = _components(vs, g.adjacent)
        if len(comps) > 1:
            total = [0] * n
            for c in comps:
                s = series(c)
                if s is None:
                    return None
                r = _recip(s, n)
                total = [x + y for x, y in zip(total, r)]
            total[0] -= len(comps) - 1
            return _recip(total, n)
        co = _components(vs, lambda u, w: not g.adjacent(u, w))
        if len(co) > 1:
            acc = [1] + [0] * (n - 1)
            for c in co:
                s = series(c)
                if s is None:
                    return None
                acc = _mul(acc, s, n)
            return acc
        return None

    return series(set(g.vertices))


def growth_ball_sizes(g, radius):
    s = growth_sphere_sizes(g, radius)
    if s is None:
        return None
    out, tot = [], 0
    for x in s:
        tot += x
        out.append(tot)
    return out
