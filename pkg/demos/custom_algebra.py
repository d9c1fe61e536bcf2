"""
Feeding in a bracket table by hand
==================================

Any antisymmetric table that satisfies the Jacobi identity can be analysed.
Here the Heisenberg algebra [e2,e3] = e1 is typed in directly and then with
its basis rotated, giving two of the three Bia(II) rows.
"""

from bianchi_acb import JacobiError, StructureConstants, analyze, check_jacobi
from bianchi_acb.lie_algebra import cyclic_relabel

heis = StructureConstants.from_brackets((0, 0, 0), (1, 0, 0), (0, 0, 0), name="heisenberg")
a = analyze(heis)
print(heis.bracket_lines(), "->", a.label.text())
print("F:", {k: str(v) for k, v in a.F.nonzero().items()})

# relabelling e1 -> e2 -> e3 -> e1 moves the bracket and changes the sign of nu
moved = cyclic_relabel(heis)
print(moved.bracket_lines(), "->", analyze(moved).label.text(), " nu =", analyze(moved).parameters.nu)

# tables that are not Lie algebras are refused before any geometry is done
bad = StructureConstants.from_brackets((1, 0, 0), (0, 1, 0), (0, 0, 0), name="not a Lie algebra")
print("Jacobi holds:", check_jacobi(bad))
try:
    analyze(bad)
except JacobiError as exc:
    print("refused:", exc)
