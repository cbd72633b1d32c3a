"""Brute-force enumeration of checkerboard d-dissections through plane d-ary trees.

A d-dissection of a polygon with a marked edge is stored as the rooted plane
tree whose internal nodes are its polygons (root = the polygon on the marked
edge) and whose leaves are the unmarked boundary edges, in counterclockwise
order after the marked edge.  Trees are encoded by their preorder code: ``1``
for an internal node, ``0`` for a leaf.

The canonical text form is the bracket string: an internal node is written
``(`` + children + ``)`` and a leaf ``.``.  Enumeration order is lexicographic
on this string, i.e. internal-before-leaf at the first difference.
"""

from collections import Counter
from dataclasses import dataclass
from functools import cached_property

from .exactalg import FreeWordSeries, LaurentPoly
from .genfun import t_dn

DEFAULT_GUARD = 5 * 10**7


class GuardExceeded(RuntimeError):
    """The requested enumeration is larger than the configured guard."""


def _check_guard(d, n, guard):
    if d < 2:
        raise ValueError("d must be >= 2")
    if n < 0:
        raise ValueError("n must be >= 0")
    if guard is not None and t_dn(d, n) > guard:
        raise GuardExceeded(f"t_{{{d},{n}}} = {t_dn(d, n)} exceeds guard {guard}")


@dataclass(frozen=True)
class ColourStats:
    n_b: int
    n_w: int
    e_b: int
    e_w: int


@dataclass(frozen=True)
class DissectionTree:
    d: int
    code: tuple

    def __post_init__(self):
        slots = 1
        for i, c in enumerate(self.code):
            if slots <= 0:
                raise ValueError("code closes before its end")
            slots += self.d - 1 if c else -1
        if slots != 0:
            raise ValueError("code is not a complete plane tree")

    @property
    def n(self):
        return sum(self.code)

    @property
    def n_leaves(self):
        return len(self.code) - self.n

    @cached_property
    def depths(self):
        """Depth of every preorder position."""
        out = []
        stack = [0]
        for c in self.code:
            depth = stack.pop()
            out.append(depth)
            if c:
                stack.extend([depth + 1] * self.d)
        return tuple(out)

    @cached_property
    def parents(self):
        """Preorder index of each node's parent (``-1`` for the root)."""
        out = []
        stack = [-1]
        for i, c in enumerate(self.code):
            out.append(stack.pop())
            if c:
                stack.extend([i] * self.d)
        return tuple(out)

    def children(self):
        """Map internal preorder index -> tuple of child indices, in plane order."""
        kids = {i: [] for i, c in enumerate(self.code) if c}
        for i, p in enumerate(self.parents):
            if p >= 0:
                kids[p].append(i)
        return {i: tuple(v) for i, v in kids.items()}

    def bracket(self):
        out = []
        stack = []
        for c in self.code:
            if c:
                out.append("(")
                stack.append(self.d)
            else:
                out.append(".")
                while stack:
                    stack[-1] -= 1
                    if stack[-1]:
                        break
                    stack.pop()
                    out.append(")")
        return "".join(out)

    @classmethod
    def from_bracket(cls, d, text):
        code = tuple(1 if ch == "(" else 0 for ch in text if ch in "(.")
        tree = cls(d, code)
        if tree.bracket() != text:
            raise ValueError(f"malformed bracket string for d={d}: {text!r}")
        return tree

    def __str__(self):
        return self.bracket()


def _first_code(d, n):
    return [1] * n + [0] * ((d - 1) * n + 1)


def _next_code(code, d, n):
    """Advance ``code`` in place to its lexicographic successor; False at the end."""
    L = len(code)
    # prefix counts before each position
    internal = [0] * (L + 1)
    for i, c in enumerate(code):
        internal[i + 1] = internal[i] + c
    for i in range(L - 1, -1, -1):
        if code[i] != 1:
            continue
        I = internal[i]
        leaves = i - I
        slots = 1 + (d - 1) * I - (leaves + 1)
        if slots >= 1:
            r = n - I
            code[i] = 0
            code[i + 1:i + 1 + r] = [1] * r
            code[i + 1 + r:] = [0] * (L - i - 1 - r)
            return True
    return False


def enum_trees(d, n, guard=DEFAULT_GUARD):
    """Yield every plane d-ary tree with ``n`` internal nodes once, in bracket-lex order."""
    _check_guard(d, n, guard)
    code = _first_code(d, n)
    while True:
        yield DissectionTree(d, tuple(code))
        if not _next_code(code, d, n):
            return


def tree_at(d, n, index, guard=DEFAULT_GUARD):
    """The ``index``-th tree of :func:`enum_trees`."""
    total = t_dn(d, n)
    if not 0 <= index < total:
        raise IndexError(f"index {index} out of range for t_{{{d},{n}}} = {total}")
    for i, tree in enumerate(enum_trees(d, n, guard)):
        if i == index:
            return tree


def colour_stats(tree):
    """Black/white polygon counts and boundary-edge counts of a checkerboard dissection.

    Polygons at even depth are black.  A leaf (unmarked boundary edge) takes
    the colour of its parent polygon and the marked edge is black.  For
    ``n = 0`` the polygon degenerates to a black marked edge plus one white edge.
    """
    n_b = n_w = 0
    e_b, e_w = 1, 0
    for c, depth in zip(tree.code, tree.depths):
        if c:
            if depth % 2 == 0:
                n_b += 1
            else:
                n_w += 1
        elif depth == 0:
            e_w += 1
        elif depth % 2 == 1:
            e_b += 1
        else:
            e_w += 1
    return ColourStats(n_b, n_w, e_b, e_w)


def _balance_histogram(d, n):
    """Counter of ``n_b - n_w`` over all trees, by depth-first walk of preorder codes."""
    hist = Counter()
    stack = [0]

    def walk(remaining, balance):
        if remaining == 0:
            hist[balance] += 1
            return
        depth = stack.pop()
        stack.extend([depth + 1] * d)
        walk(remaining - 1, balance + (-1 if depth & 1 else 1))
        del stack[-d:]
        if stack:
            walk(remaining, balance)
        stack.append(depth)

    walk(n, 0)
    return hist


def w_enum(d, n, guard=DEFAULT_GUARD):
    """Weight polynomial ``sum t**(n_b - n_w)`` over all checkerboard d-dissections."""
    _check_guard(d, n, guard)
    return LaurentPoly(dict(_balance_histogram(d, n)))


def w_enum_trees(d, n, guard=DEFAULT_GUARD):
    """Same as :func:`w_enum` but through :func:`colour_stats` on tree objects."""
    hist = Counter()
    for tree in enum_trees(d, n, guard):
        s = colour_stats(tree)
        hist[s.n_b - s.n_w] += 1
    return LaurentPoly(dict(hist))


def boundary_word(tree):
    """Colours of the boundary edges read counterclockwise from the marked edge.

    ``U`` marks a black edge and ``V`` a white one; only triangulations.
    """
    if tree.d != 2:
        raise ValueError("boundary words are defined for triangulations (d = 2)")
    if tree.n == 0:
        return "UV"
    letters = ["U"]
    for c, depth in zip(tree.code, tree.depths):
        if not c:
            letters.append("U" if depth % 2 == 1 else "V")
    return "".join(letters)


def noncomm_N(L, guard=DEFAULT_GUARD):
    """Sum of boundary words of all triangulations with at most ``L`` boundary edges."""
    if L < 2:
        raise ValueError("L must be >= 2")
    out = Counter()
    for n in range(L - 1):
        for tree in enum_trees(2, n, guard):
            out[boundary_word(tree)] += 1
    return FreeWordSeries(dict(out), L)


class _Budget:
    def __init__(self, guard):
        self.left = guard

    def tick(self):
        if self.left is not None:
            self.left -= 1
            if self.left < 0:
                raise GuardExceeded("search-node budget exhausted")


def eulerian_count_enum(d, n, guard=DEFAULT_GUARD):
    """Checkerboard d-dissections into ``(d+1)n+1`` polygons with an all-black boundary.

    Every leaf must hang from an even-depth (black) polygon.  Branches that
    already contain a white boundary edge, or that have more even-depth open
    slots than internal nodes left to fill them, are cut; ``guard`` bounds the
    number of visited search nodes.
    """
    if d < 2 or n < 0:
        raise ValueError("need d >= 2 and n >= 0")
    m = (d + 1) * n + 1
    budget = _Budget(guard)
    stack = [0]
    count = 0

    def walk(remaining, even_open):
        nonlocal count
        budget.tick()
        if remaining == 0:
            if even_open == 0:
                count += 1
            return
        if even_open > remaining:
            return
        depth = stack.pop()
        here_even = depth % 2 == 0
        even_after_pop = even_open - here_even
        child_even = d if not here_even else 0
        stack.extend([depth + 1] * d)
        walk(remaining - 1, even_after_pop + child_even)
        del stack[-d:]
        if not here_even and stack:
            walk(remaining, even_after_pop)
        stack.append(depth)

    walk(m, 1)
    return count


def fair_count_enum(d, n, guard=DEFAULT_GUARD):
    """Checkerboard d-dissections into ``2n`` polygons, ``n`` black and ``n`` white."""
    if d < 2 or n < 0:
        raise ValueError("need d >= 2 and n >= 0")
    budget = _Budget(guard)
    stack = [0]
    count = 0

    def walk(remaining, nb, nw):
        nonlocal count
        budget.tick()
        if remaining == 0:
            count += nb == nw
            return
        depth = stack.pop()
        if depth % 2 == 0:
            if nb < n:
                stack.extend([depth + 1] * d)
                walk(remaining - 1, nb + 1, nw)
                del stack[-d:]
        elif nw < n:
            stack.extend([depth + 1] * d)
            walk(remaining - 1, nb, nw + 1)
            del stack[-d:]
        if stack:
            walk(remaining, nb, nw)
        stack.append(depth)

    walk(2 * n, 0, 0)
    return count


def lattice_path_count(n, guard=DEFAULT_GUARD):
    """Walks of ``2n`` unit steps from the origin that stay in ``-x <= y <= x`` and end on ``x = y``.

    Counted exhaustively by propagating the number of admissible prefixes
    ending at each lattice point.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if guard is not None and 4 ** (2 * n) > guard * 10**6:
        raise GuardExceeded("lattice walk too long")
    frontier = {(0, 0): 1}
    for _ in range(2 * n):
        nxt = Counter()
        for (x, y), c in frontier.items():
            for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1)):
                a, b = x + dx, y + dy
                if -a <= b <= a:
                    nxt[(a, b)] += c
        frontier = nxt
    return sum(c for (x, y), c in frontier.items() if x == y)
