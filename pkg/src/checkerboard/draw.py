"""SVG rendering of a checkerboard d-dissection.

The polygon has ``V = (d-1)n + 2`` vertices on the unit circle, vertex 0 at
angle ``-pi/2`` and the rest counterclockwise.  The marked edge joins
vertices 0 and 1.  A node of the tree owns a run of consecutive boundary
edges; the root owns the run from vertex 1 to vertex ``V`` (= vertex 0) and
each node cuts its run between its children according to their leaf counts.
"""

import math

from .enumeration import tree_at

FILL = {0: "#1a1a1a", 1: "#ffffff"}


def vertex_positions(V, size=400, margin=20):
    r = size / 2 - margin
    c = size / 2
    pts = []
    for k in range(V):
        a = -math.pi / 2 + 2 * math.pi * k / V
        # SVG y grows downwards; flip so the vertex order reads counterclockwise
        pts.append((c + r * math.cos(a), c - r * math.sin(a)))
    return pts


def polygons(tree):
    """``[(vertex indices, depth)]`` for every polygon, in preorder."""
    d = tree.d
    code = tree.code
    out = []
    pos = 0

    def walk(start, depth):
        # returns the number of boundary edges (leaves) below the node at ``pos``
        nonlocal pos
        c = code[pos]
        pos += 1
        if not c:
            return 1
        corners = [start]
        slot = len(out)
        out.append(None)
        v = start
        for _ in range(d):
            v += walk(v, depth + 1)
            corners.append(v)
        out[slot] = (corners, depth)
        return v - start

    if tree.n:
        walk(1, 0)
    return out


def render_svg(tree, size=400):
    V = (tree.d - 1) * tree.n + 2
    pts = vertex_positions(V, size)

    def fmt(i):
        x, y = pts[i % V]
        return f"{x:.4f},{y:.4f}"

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f"<!-- d={tree.d} n={tree.n} tree={tree.bracket()} -->",
    ]
    for corners, depth in polygons(tree):
        pts_attr = " ".join(fmt(i) for i in corners)
        lines.append(f'<polygon points="{pts_attr}" fill="{FILL[depth % 2]}" stroke="#808080" stroke-width="2"/>')
    outline = " ".join(fmt(i) for i in range(V))
    lines.append(f'<polygon points="{outline}" fill="none" stroke="#000000" stroke-width="2"/>')
    (x0, y0), (x1, y1) = pts[0], pts[1]
    lines.append(f'<line x1="{x0:.4f}" y1="{y0:.4f}" x2="{x1:.4f}" y2="{y1:.4f}" '
                 f'stroke="#d62728" stroke-width="6" stroke-linecap="round"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def draw(d, n, index, path=None, size=400, guard=None):
    """Render the ``index``-th dissection of :func:`enum_trees` order; write it when ``path`` is given."""
    kwargs = {} if guard is None else {"guard": guard}
    svg = render_svg(tree_at(d, n, index, **kwargs), size)
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(svg)
    return svg
