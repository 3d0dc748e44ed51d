"""Kauffman brackets of rational tangles and zigzag Conway-Coxeter friezes."""

from .laurent import LaurentPoly, bar, canonical_up_to_bar, eval_at_A4_minus1, format_poly, parse_poly
from .lrword import LRWord, fraction_of, i_word, ir_word, parse_word, r_word, word_of
from .rational import ContinuedFraction, Fraction, continued_fraction_even, parents, parse_fraction
from .tangle import BracketVector, tangle_of_fraction
from .yamada import build_triangle, phi_direct, phi_recursive

__version__ = "0.1.0"
