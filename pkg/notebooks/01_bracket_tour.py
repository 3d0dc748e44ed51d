"""
From a fraction to its bracket, four ways
=========================================

Walk 7/19 through continued fractions, the Stern-Brocot word, the
mediant recursion and the folded frieze, and watch the answers agree.
Run with ``python3 notebooks/01_bracket_tour.py``.
"""

# %%
from friezeknot.frieze import frieze_from_word
from friezeknot.lrword import word_of
from friezeknot.rational import Fraction, continued_fraction_even, parents
from friezeknot.recipe import bracket_num, bracket_via_paths, denominator_link_bracket, fold_triangle
from friezeknot.render import render_ancestor_triangle, render_folded_triangle, render_frieze
from friezeknot.tangle import denominator_closure, tangle_of_fraction, v_map
from friezeknot.yamada import build_triangle, phi_direct, phi_recursive

x = Fraction(7, 19)
print("expansion:", continued_fraction_even(x))
print("parents:  ", *parents(x))
print("word:     ", word_of(x).compact())

# %%
# The ancestor triangle and the two routes to phi
print(render_ancestor_triangle(build_triangle(x)))
assert phi_direct(x) == phi_recursive(x)
print("v(phi):", v_map(phi_recursive(x)))

# %%
# The frieze, its maximum 19 and the fold at it
f = frieze_from_word(word_of(x))
print(render_frieze(f))
print(render_folded_triangle(fold_triangle(f), show_paths=False))
print("paths:     ", bracket_via_paths(f))
print("floor only:", bracket_num(f))

# %%
# The denominator closure, once from the frieze and once from the tangle
print(denominator_link_bracket(x))
print(denominator_closure(tangle_of_fraction(x)))
