import networkx as nx

from combx.data.conversion import from_graph, to_hasse_graph
from combx.errors import DomainError


def disjoint_union(X_list):
    r"""
    Batch a list of posets into a single co-forest-style disjoint union.
    The points of the $i$-th poset are shifted past those of the earlier ones,
    and every label is prefixed with the index of its poset when labels would collide.

    Args:
        X_list (:python:`List[FinitePoset]`): A list of posets to batch.

    Returns:
        :class:`~combx.data.poset.FinitePoset`: A single poset whose components are the inputs
        (each input may itself be disconnected).
    """
    if len(X_list) == 0:
        raise DomainError("Cannot batch an empty list of posets.")
    all_labels = [label for X in X_list for label in X.labels]
    prefix = len(set(all_labels)) != len(all_labels)

    counter = 0
    new_G_list = []
    for i, X in enumerate(X_list):
        G = to_hasse_graph(X)
        if prefix:
            for node in G.nodes:
                G.nodes[node]["label"] = f"{i}:{G.nodes[node]['label']}"
        relabel_mapping = {j: f"{j + counter:08d}" for j in X.points}
        new_G_list.append(nx.relabel_nodes(G, relabel_mapping))
        counter += X.num_points

    return from_graph(nx.union_all(new_G_list))
