"""Plain-text pictures of friezes, ancestor triangles and folded triangles."""

from __future__ import annotations

from .frieze import Frieze
from .recipe import FoldedTriangle, ReductionStep, signed_paths
from .yamada import AncestorTriangle


def render_frieze(f: Frieze, periods: int = 2) -> str:
    """Staggered rows, ``periods`` periods wide, framed by the rows of 1s."""
    h, n = f.height, f.period
    cell = len(str(f.max_entry)) + 1
    x0 = h + 2
    width = 2 * n * periods
    lines = []
    for r in range(0, h + 2):
        chars = []
        for x in range(x0, x0 + width):
            if (x - r - 1) % 2:
                chars.append(" " * cell)
            else:
                chars.append(str(f.entry(r, (x - r - 1) // 2)).rjust(cell))
        lines.append("".join(chars).rstrip())
        if r in (0, h):
            lines.append("-" * (cell * width))
    return "\n".join(lines)


def render_quiddity(f: Frieze, periods: int = 2) -> str:
    return " ".join(str(v) for v in f.quiddity * periods)


def render_ancestor_triangle(tri: AncestorTriangle) -> str:
    lines = [
        f"ancestor triangle of {tri.x}: r={tri.r} l={tri.l}",
        "left side:  " + " - ".join(map(str, tri.left_side)),
        "right side: " + " - ".join(map(str, tri.right_side)),
        "fundamental triangles:",
    ]
    width = max(len(str(v)) for v in tri.vertices)
    for k, t in enumerate(tri.triangles, 1):
        lines.append(f"  {k:>3}  {str(t.left):>{width}}  {str(t.right):>{width}}  -> {t.mediant}")
    return "\n".join(lines)


def render_folded_triangle(tri: FoldedTriangle, show_paths: bool = True) -> str:
    """The bent curve (left flank going down-left, right flank down-right), then its edges."""
    left, right = tri.left_flank, tri.right_flank
    depth = max(len(left), len(right))
    cell = len(str(tri.diamond.M)) + 2
    lines = [" " * (cell * depth) + str(tri.diamond.M).center(cell)]
    for k in range(1, depth):
        row = [" " * cell] * (2 * depth + 1)
        if k < len(left):
            label = "(1)" if k == len(left) - 1 else str(left[k])
            row[depth - k] = label.center(cell)
        if k < len(right):
            label = "[1]" if k == len(right) - 1 else str(right[k])
            row[depth + k] = label.center(cell)
        lines.append("".join(row).rstrip())
    lines.append("edges (- to the left child, + to the right child):")
    for node, (lc, rc) in tri.children.items():
        lines.append(f"  {node.value} -> -{lc.value} +{rc.value}")
    if show_paths:
        lines.append("paths:")
        for path in signed_paths(tri):
            lines.append(f"  {path}   {path.monomial()}")
    return "\n".join(lines)


def render_reduction(word_text: str, start: str, steps: list[ReductionStep]) -> str:
    lines = [f"{word_text}  {start}"]
    for st in steps:
        flag = "" if st.parent_ok else "   (not a parent of the previous fraction)"
        lines.append(f"-> {st.word.compact() if len(st.word) else '∅'}  {st.fraction}{flag}")
    return "\n".join(lines)
