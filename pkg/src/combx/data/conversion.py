import json

import networkx as nx

from combx.data.poset import from_edges
from combx.errors import DomainError
from combx.data.bits import iter_bits


def to_hasse_graph(X):
    r"""
    Converts a poset into its Hasse diagram, a :python:`networkx.DiGraph` whose edges are the
    covers $x \prec y$ (directed from $x$ to $y$). Each node stores its :python:`label`.

    Args:
        X (:class:`~combx.data.poset.FinitePoset`): The poset.

    Returns:
        :python:`DiGraph`: The Hasse diagram.
    """
    G = nx.DiGraph()
    for i in X.points:
        G.add_node(i, label=X.labels[i])
    G.add_edges_from(X.covers())
    return G


def from_graph(G):
    r"""
    Converts any acyclic :python:`networkx.DiGraph` (an edge $u \to v$ meaning $u \leq v$)
    into a poset. Nodes are renumbered consecutively in sorted order and labelled by their
    :python:`label` attribute when present, by their name otherwise.

    Args:
        G (:python:`DiGraph`): The graph.

    Returns:
        :class:`~combx.data.poset.FinitePoset`: The closed poset.
    """
    nodes = sorted(G.nodes, key=str)
    index = {node: i for i, node in enumerate(nodes)}
    labels = [str(G.nodes[node].get("label", node)) for node in nodes]
    edges = [(index[u], index[v]) for u, v in G.edges]
    return from_edges(len(nodes), edges, labels)


def to_closure_graph(X):
    r"""
    Converts a poset into the :python:`networkx.DiGraph` of its strict order $<$.
    Order embeddings of posets are exactly the node-induced subgraph isomorphisms of these graphs.
    """
    G = nx.DiGraph()
    G.add_nodes_from(X.points)
    G.add_edges_from((x, y) for x in X.points for y in iter_bits(X.upc(1 << x)))
    return G


def frame_to_dict(X):
    """
    Returns the frame JSON object :python:`{"points": [...], "covers": [[x, y], ...]}` (labels are used).
    """
    return {
        "points": list(X.labels),
        "covers": [[X.labels[x], X.labels[y]] for x, y in X.covers()],
    }


def frame_from_dict(data):
    r"""
    Reads a frame JSON object. :python:`"covers"` may be any edge list; it is closed reflexively and
    transitively.

    Args:
        data (:python:`dict`): An object with keys :python:`"points"` and :python:`"covers"`.

    Returns:
        :class:`~combx.data.poset.FinitePoset`: The frame.
    """
    if not isinstance(data, dict) or not isinstance(data.get("points"), list):
        raise DomainError("A frame needs a 'points' list and a 'covers' list.")
    covers = data.get("covers", [])
    if not isinstance(covers, list):
        raise DomainError("A frame needs a 'points' list and a 'covers' list.")
    points = [str(p) for p in data["points"]]
    index = {p: i for i, p in enumerate(points)}
    if len(index) != len(points):
        raise DomainError("Frame point labels must be distinct.")
    edges = []
    for edge in covers:
        well_formed = isinstance(edge, list) and len(edge) == 2
        if not well_formed or str(edge[0]) not in index or str(edge[1]) not in index:
            raise DomainError(f"Invalid cover {edge!r}: endpoints must be listed points.")
        edges.append((index[str(edge[0])], index[str(edge[1])]))
    return from_edges(len(points), edges, points)


def load_frame(path):
    with open(path) as f:
        return frame_from_dict(json.load(f))


def save_frame(X, path):
    with open(path, "w") as f:
        json.dump(frame_to_dict(X), f, indent=2)


def to_dot(X, name="frame"):
    r"""
    Exports the Hasse diagram in Graphviz DOT. Edges are drawn from $y$ down to $x$ for
    every cover $x \prec y$ so that the co-root is ranked on top; points of equal height
    share a rank.

    Args:
        X (:class:`~combx.data.poset.FinitePoset`): The poset.
        name (:python:`str`, *optional*): Graph name (default: :python:`"frame"`).

    Returns:
        :python:`str`: The DOT source.
    """
    lines = [f"digraph {json.dumps(name)} {{", "  rankdir=TB;", "  node [shape=circle];"]
    for i in X.points:
        lines.append(f"  {json.dumps(X.labels[i])};")
    ranks = {}
    for i in X.points:
        ranks.setdefault(X.height(i), []).append(i)
    for height in sorted(ranks):
        members = " ".join(json.dumps(X.labels[i]) + ";" for i in ranks[height])
        lines.append(f"  {{ rank=same; {members} }}")
    for x, y in X.covers():
        lines.append(f"  {json.dumps(X.labels[y])} -> {json.dumps(X.labels[x])} [dir=back];")
    lines.append("}")
    return "\n".join(lines)


def mask_to_labels(X, mask):
    return X.label_set(mask)


def labels_to_mask(X, labels):
    mask = 0
    for label in labels:
        mask |= 1 << X.index(str(label))
    return mask
