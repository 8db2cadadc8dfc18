from .graph import draw_poset
