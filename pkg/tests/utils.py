from itertools import product

from combx.data.poset import from_edges


def natural_posets(num_points):
    """
    Yields every partial order on :python:`num_points` points that extends the natural order
    of the indices, once each. Every finite poset is isomorphic to one of them.
    """
    pairs = [(i, j) for i in range(num_points) for j in range(i + 1, num_points)]
    seen = set()
    for bits in range(2 ** len(pairs)):
        X = from_edges(num_points, [pairs[k] for k in range(len(pairs)) if bits >> k & 1])
        key = X.leq.tobytes()
        if key not in seen:
            seen.add(key)
            yield X


def brute_force_upsets(X):
    return sorted(m for m in range(1 << X.num_points) if X.is_upset(m))


def brute_force_surjection(X, Y, is_bipmorphism):
    for f in product(range(Y.num_points), repeat=X.num_points):
        if set(f) == set(Y.points) and is_bipmorphism(X, Y, f):
            return f
    return None
