import networkx as nx


def compute_point_position(G, point_spacing=(0.8, 0.8)):
    r"""
    Calculates and assigns $x$ and $y$ coordinates to the points of a Hasse diagram.
    The $y$ coordinate is the height of a point (the number of points above it),
    so the co-root of a co-tree is on top.
    The $x$ coordinates are assigned walking down from the maximal points: minimal points
    take consecutive slots and every other point is centered over the points it covers.

    Args:
        G (:python:`networkx.DiGraph`):
            The Hasse diagram, see :func:`~combx.data.conversion.to_hasse_graph`.
            Positions are stored as node attributes :python:`x0` and :python:`y0`.
        point_spacing (:python:`Tuple[float]`, *optional*):
            The horizontal and vertical distance between points
            (default: :python:`(0.8, 0.8)`).

    Returns:
        :python:`None`
    """
    for node in G.nodes:
        G.nodes[node]["rank"] = len(nx.descendants(G, node))

    placed, slot = {}, 0

    def place(node):
        nonlocal slot
        if node not in placed:
            xs = [place(child) for child in sorted(G.predecessors(node))]
            if xs:
                placed[node] = sum(xs) / len(xs)
            else:
                placed[node] = slot
                slot += 1
        return placed[node]

    tops = sorted(node for node in G.nodes if G.out_degree(node) == 0)
    for top in tops:
        place(top)

    for node in G.nodes:
        G.nodes[node]["x0"] = placed[node] * point_spacing[0]
        G.nodes[node]["y0"] = G.nodes[node]["rank"] * point_spacing[1]
