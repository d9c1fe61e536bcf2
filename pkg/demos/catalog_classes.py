"""
Classes of the canonical structure on every Bianchi row
=======================================================

Each row of the catalog is a bracket table on (e1, e2, e3).  The canonical
B-metric structure is fixed, so the class of F depends only on the brackets.
"""

from bianchi_acb import analyze, catalog_ids
from bianchi_acb.f_tensor import class_label_text

# the parametric families are treated with h symbolic; the class can only
# shrink where one of the class parameters vanishes
for bid in catalog_ids():
    a = analyze(bid)
    line = f"{bid.label:<14} {a.label.text()}"
    for root, members in a.label.exceptional:
        line += f"   at h = {root}: {class_label_text(members)}"
    print(line)
