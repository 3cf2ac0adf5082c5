from .svg import color_for, render, render_arcs, render_tiling, render_walk

__all__ = [
    "render",
    "render_walk",
    "render_arcs",
    "render_tiling",
    "color_for",
]
