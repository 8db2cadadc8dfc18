import random

from combx.data.formula import BOT, TOP, And, Coimp, Imp, Or, Var
from combx.data.poset import from_edges


def random_formula(rng, variables=("p", "q", "r"), max_depth=4, leaf_prob=0.3):
    r"""
    Samples a formula over the given variables whose tree depth is at most :python:`max_depth`.

    Args:
        rng (:python:`random.Random`): Source of randomness.
        variables (:python:`Sequence[str]`, *optional*):
            Variable names to draw atoms from (default: :python:`("p", "q", "r")`).
        max_depth (:python:`int`, *optional*):
            Maximal tree depth, a single atom having depth 1 (default: :python:`4`).
        leaf_prob (:python:`float`, *optional*):
            Probability of stopping early at an inner position (default: :python:`0.3`).

    Returns:
        :class:`~combx.data.formula.Formula`: The sampled formula.
    """
    if max_depth <= 1 or rng.random() < leaf_prob:
        roll = rng.random()
        if roll < 0.08:
            return BOT
        if roll < 0.16:
            return TOP
        return Var(rng.choice(list(variables)))
    constructor = rng.choice([And, Or, Imp, Coimp])
    return constructor(
        random_formula(rng, variables, max_depth - 1, leaf_prob),
        random_formula(rng, variables, max_depth - 1, leaf_prob),
    )


def random_formula_by_connectives(rng, variables=("p", "q", "r"), max_connectives=10):
    r"""
    Samples a formula with at most :python:`max_connectives` binary connectives
    by splitting the connective count randomly between the two subtrees.
    """
    count = rng.randint(0, max_connectives)

    def build(k):
        if k == 0:
            roll = rng.random()
            if roll < 0.06:
                return BOT
            if roll < 0.12:
                return TOP
            return Var(rng.choice(list(variables)))
        left = rng.randint(0, k - 1)
        constructor = rng.choice([And, Or, Imp, Coimp])
        return constructor(build(left), build(k - 1 - left))

    return build(count)


def random_poset_edges(rng, num_points, edge_prob=0.3):
    """
    Samples a random acyclic edge list on :python:`num_points` points.
    Edges only go from a smaller to a larger index of a random permutation,
    so the reflexive-transitive closure is always a partial order.

    Returns:
        :python:`List[Tuple[int, int]]`: Pairs :python:`(x, y)` meaning :python:`x <= y`.
    """
    order = list(range(num_points))
    rng.shuffle(order)
    edges = []
    for i in range(num_points):
        for j in range(i + 1, num_points):
            if rng.random() < edge_prob:
                edges.append((order[i], order[j]))
    return edges


def random_cotree_edges(rng, num_points):
    """
    Samples a random co-tree on :python:`num_points` points: point :python:`0` is the
    co-root and every other point is covered by one uniformly chosen earlier point.

    Returns:
        :python:`List[Tuple[int, int]]`: Cover pairs :python:`(child, parent)`.
    """
    return [(i, rng.randrange(i)) for i in range(1, num_points)]


def make_rng(seed=0):
    return random.Random(seed)


def random_poset(rng, max_points=8, edge_prob=0.3):
    """
    Samples a poset with between :python:`1` and :python:`max_points` points.
    """
    n = rng.randint(1, max_points)
    return from_edges(n, random_poset_edges(rng, n, edge_prob))


def random_cotree(rng, max_points=6):
    n = rng.randint(1, max_points)
    return from_edges(n, random_cotree_edges(rng, n))


def random_upset(rng, X):
    r"""
    Samples an upset of :python:`X` as $\uparrow S$ for a random point set $S$.

    Returns:
        :python:`int`: The upset mask.
    """
    seeds = 0
    for i in X.points:
        if rng.random() < 0.3:
            seeds |= 1 << i
    return X.up(seeds)


def random_assignment(rng, X, variables):
    """
    Samples a map from every variable name to a random upset of :python:`X`.
    """
    return {v: random_upset(rng, X) for v in variables}


def random_point(rng, X):
    return rng.choice(list(X.points))
