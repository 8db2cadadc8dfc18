import matplotlib.pyplot as plt
from matplotlib.colors import to_hex

# points forcing no variable stay white
DEFAULT_COLORS = ["#FFFFFF"] + [to_hex(c) for c in plt.get_cmap("Pastel1").colors]
FALLBACK_CMAP = plt.get_cmap("tab20")


class PointColorHandler:
    r"""
    Assigns a face color to every point color of a valuation, i.e., to every tuple of truth
    values of the variables (in sorted order) at a point.
    Color $(b_1, \cdots, b_k)$ takes the palette entry whose index is the binary number
    $b_1 \cdots b_k$, so the white entry is reserved for points that force no variable.

    Args:
        facecolor_map (:python:`Dict[Tuple[int, ...], COLORTYPE]` or :python:`None`, *optional*):
            Explicit face color of each point color. Other arguments are ignored when it is given
            (default: :python:`None`).
        num_variables (:python:`int`, *optional*):
            Length of the point colors (default: :python:`0`).
        colors (:python:`List[COLORTYPE]` or :python:`None`, *optional*):
            The palette, in any format :python:`matplotlib` accepts. Point colors beyond its
            length cycle through :python:`tab20`
            (default: :python:`None`).
    """

    def __init__(self, facecolor_map=None, num_variables=0, colors=None):
        if facecolor_map is not None:
            self.facecolor_map = facecolor_map
            return
        palette = DEFAULT_COLORS if colors is None else colors
        self.facecolor_map = {}
        for idx in range(2**num_variables):
            key = tuple(idx >> (num_variables - 1 - j) & 1 for j in range(num_variables))
            if idx < len(palette):
                self.facecolor_map[key] = palette[idx]
            else:
                self.facecolor_map[key] = FALLBACK_CMAP(idx % FALLBACK_CMAP.N)

    def get_facecolor(self, key):
        return self.facecolor_map[tuple(key)]

    def get_edgecolor(self, refuting):
        return "r" if refuting else "k"

    def get_colors(self, key, refuting=False):
        """
        Returns the :python:`facecolor` and :python:`edgecolor` of a point, the latter red for
        a refuting point.
        """
        return {
            "facecolor": self.get_facecolor(key),
            "edgecolor": self.get_edgecolor(refuting),
        }
