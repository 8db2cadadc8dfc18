import matplotlib.pyplot as plt

from combx.data.conversion import to_hasse_graph
from combx.draw.edge import draw_cover
from combx.draw.point import draw_point
from combx.draw.position import compute_point_position
from combx.draw.style import PointColorHandler


def draw_poset(
    X,
    valuation=None,
    refuting_point=None,
    compute_point_position_fn=compute_point_position,
    draw_point_fn=draw_point,
    draw_cover_fn=draw_cover,
    colors=None,
    **kwargs,
):
    r"""
    Draw the Hasse diagram of a finite poset, optionally as a model.
    It first computes the point positions, then draws each point and cover.
    These functions,
    :func:`~combx.draw.position.compute_point_position`,
    :func:`~combx.draw.point.draw_point`, and
    :func:`~combx.draw.edge.draw_cover`, respectively,
    can be customized by passing custom functions to the arguments.

    Args:
        X (:class:`~combx.data.poset.FinitePoset`):
            The poset to draw.
        valuation (:class:`~combx.logic.semantics.Valuation` or :python:`None`, *optional*):
            If given, each point is filled according to its color, the tuple of the variables
            (in sorted order) it belongs to
            (default: :python:`None`).
        refuting_point (:python:`int` or :python:`None`, *optional*):
            A point drawn with a red border, e.g., the point of a countermodel
            (default: :python:`None`).
        compute_point_position_fn (:python:`Callable`, *optional*):
            Any function that stores point positions into the Hasse diagram as :python:`x0` and :python:`y0`
            (default: :func:`~combx.draw.position.compute_point_position`).
        draw_point_fn (:python:`Callable`, *optional*):
            Any function that draws each point
            (default: :func:`~combx.draw.point.draw_point`).
        draw_cover_fn (:python:`Callable`, *optional*):
            Any function that draws each cover
            (default: :func:`~combx.draw.edge.draw_cover`).
        colors (:python:`List`, :python:`Dict`, or :python:`None`, *optional*):
            Face colors, handled with :class:`~combx.draw.style.PointColorHandler`.
            A :python:`Dict` maps point colors to face colors exactly
            (default: :python:`None`).
        **kwargs (*optional*):
            Additional keyword arguments, each starting with
            :python:`"position_"`, :python:`"point_"`, or :python:`"edge_"`
            and passed, without the prefix, to the corresponding function.

    Returns:
        :python:`Tuple[Figure, Axes]`:
            A :python:`matplotlib` plot that the poset is visualized on.
    """
    point_kwargs, edge_kwargs, position_kwargs = {}, {}, {}
    for k, v in kwargs.items():
        k_split = k.split("_", maxsplit=1)
        if len(k_split) != 2:
            raise ValueError(f"Wrong argument: {k}")
        k1, k2 = k_split
        match k1:
            case "point":
                point_kwargs[k2] = v
            case "edge":
                edge_kwargs[k2] = v
            case "position":
                position_kwargs[k2] = v
            case _:
                raise ValueError(f"Wrong prefix: {k1}")

    names = [] if valuation is None else sorted(valuation.assignment)
    if isinstance(colors, dict):
        color_config = PointColorHandler(facecolor_map=colors)
    else:
        color_config = PointColorHandler(num_variables=len(names), colors=colors)

    G = to_hasse_graph(X)
    for x in X.points:
        G.nodes[x]["color"] = tuple(valuation[name] >> x & 1 for name in names)
        G.nodes[x]["refuting"] = x == refuting_point

    compute_point_position_fn(G, **position_kwargs)

    fig, ax = plt.subplots()
    for node in G.nodes(data=True):
        draw_point_fn(ax, G, node, color_config, **point_kwargs)
    for edge in G.edges(data=True):
        draw_cover_fn(ax, G, edge, **edge_kwargs)

    postprocess_figure(fig, ax)
    return fig, ax


def postprocess_figure(fig, ax, xscale=0.6, yscale=0.6):
    ax.axis("off")
    ax.set_aspect("equal")
    xlim, ylim = ax.get_xlim(), ax.get_ylim()
    xlen, ylen = xlim[1] - xlim[0], ylim[1] - ylim[0]
    fig.set_size_inches(max(xlen * xscale, 1.0), max(ylen * yscale, 1.0))
    ax.invert_yaxis()
