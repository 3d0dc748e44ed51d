"""
Symmetries of zigzag friezes
============================

Mirror, glide and the four words ``w, i(w), r(w), ir(w)``.
"""

# %%
from friezeknot.frieze import compare_friezes, flip_rows, frieze_from_word, mirror
from friezeknot.lrword import i_word, ir_word, parse_word, r_word
from friezeknot.render import render_frieze

w = parse_word("L^3R")
f = frieze_from_word(w)
print(render_frieze(f))

# %%
# The left-right mirror is the frieze of i(w); the top-bottom flip is a glide
for name, g in (("mirror", mirror(f)), ("flip", flip_rows(f))):
    print(name, compare_friezes(g, frieze_from_word(i_word(w))), compare_friezes(g, f))

# %%
# w and ir(w) give the same frieze up to translation; r(w) only up to mirror
for name, u in (("i", i_word(w)), ("r", r_word(w)), ("ir", ir_word(w))):
    print(name, u.compact(), compare_friezes(f, frieze_from_word(u)))
