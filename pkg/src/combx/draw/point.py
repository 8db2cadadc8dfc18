from matplotlib.patches import Circle


def plot_points(ax, p0, radius):
    # invisible corners so that autoscaling sees the circle
    ax.plot(p0[0] - radius, p0[1] - radius, alpha=0)
    ax.plot(p0[0] + radius, p0[1] + radius, alpha=0)


def draw_point(ax, G, node, color_config, radius=0.2, linewidth=0.6, fontsize=5.6):
    """
    Draws a point as a labelled circle on the provided axes.

    Args:
        ax (:python:`matplotlib.pyplot.Axes`):
            Pre-existing axes for the plot.
        G (:python:`networkx.DiGraph`):
            The Hasse diagram being drawn.
        node (:python:`Tuple[int, dict]`):
            An item of :python:`G.nodes(data=True)`; it must contain
            :python:`x0`, :python:`y0`, :python:`label` and :python:`color`.
        color_config (:class:`~combx.draw.style.PointColorHandler`):
            Face and edge colors.
        radius (:python:`float`, *optional*):
            Radius of the circle (default: :python:`0.2`).
        linewidth (:python:`float`, *optional*):
            Thickness of the border of the circle (default: :python:`0.6`).
        fontsize (:python:`float`, *optional*):
            Size of the label (default: :python:`5.6`).

    Returns:
        :python:`None`
    """
    _, node = node
    p0 = (node["x0"], node["y0"])
    plot_points(ax, p0, radius)
    colors = color_config.get_colors(node["color"], node.get("refuting", False))
    ax.add_patch(Circle(p0, radius, linewidth=linewidth, **colors))
    ax.text(p0[0], p0[1], node["label"], fontsize=fontsize, ha="center", va="center")
