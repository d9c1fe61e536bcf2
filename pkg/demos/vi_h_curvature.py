"""
Curvature of the VI_h family as polynomials in h
================================================

The whole pipeline runs with h kept symbolic, so the statements about flatness
or the vanishing of the norm of nabla phi come out as exact root conditions.
"""

from fractions import Fraction

from bianchi_acb import BianchiId, analyze

a = analyze(BianchiId("VI_h", 1))
print("norm of nabla phi:", a.norm_nabla_phi, " =", a.norm_nabla_phi.factored())
print("scalar curvature: ", a.tau)
print("sectional k12:    ", a.k["12"])

# h <= 0 on this family, so only the negative root of 8 - 4h^2 survives
print("isotropic-cosymplectic:", a.condition("isotropic_cosymplectic"))
print("flat:                  ", a.condition("flat"))
print("Einstein:              ", a.condition("einstein"))

# a concrete member: the same polynomials evaluated, and the same pipeline rerun
b = analyze(BianchiId("VI_h", 1, Fraction(-1, 2)))
assert b.tau == a.tau.specialize(Fraction(-1, 2))
print("at h = -1/2: tau =", b.tau, ", flat:", b.condition("flat").holds)
