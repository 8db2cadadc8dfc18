def draw_cover(ax, G, edge, linewidth=0.6, radius=0.2):
    """
    Draws a cover $x \\prec y$ as a straight segment between the two circles.

    Args:
        ax (:python:`matplotlib.axes.Axes`):
            Pre-existing axes for the plot.
        G (:python:`networkx.DiGraph`):
            The Hasse diagram being drawn.
        edge (:python:`Tuple[int, int, dict]`):
            The cover, as an item of :python:`G.edges(data=True)`.
        linewidth (:python:`float`, *optional*):
            The line width of the edge
            (default: :python:`0.6`).
        radius (:python:`float`, *optional*):
            Radius of the circles, so that segments stop at their border
            (default: :python:`0.2`).

    Returns:
        :python:`None`
    """
    lower, upper, _ = edge
    x0, y0 = G.nodes[lower]["x0"], G.nodes[lower]["y0"]
    x1, y1 = G.nodes[upper]["x0"], G.nodes[upper]["y0"]
    length = ((x1 - x0) ** 2 + (y1 - y0) ** 2) ** 0.5
    dx, dy = (x1 - x0) / length * radius, (y1 - y0) / length * radius
    ax.plot([x0 + dx, x1 - dx], [y0 + dy, y1 - dy], c="k", zorder=-1, linewidth=linewidth)
