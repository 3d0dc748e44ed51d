"""
Which relation does the four-fraction invariant detect?
=======================================================

Group all words up to length 10 by ``C_w`` and by frieze class, then
count how pairs inside a class are related.
"""

# %%
import json

from friezeknot.verify import suite_completeness

res = suite_completeness(1, 10)
print(res.line())
print(json.dumps(res.report, indent=2))
