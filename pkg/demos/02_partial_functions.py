"""
The algebra of partial functions
================================

Partial functions from a finite domain to a finite codomain form a skew
lattice under restriction and override.  The meet restricts the left
argument to the agreement region; the join lets the right argument win
on overlaps, which is exactly where commutativity dies.
"""

from skewlat import (
    PartialFunction,
    build_pfn_algebra,
    check_identity,
    is_boolean_lattice,
    quotient,
)

f = PartialFunction.of({0: 0, 1: 0})
g = PartialFunction.of({1: 1})

print("f =", f.label(), " g =", g.label())
print("f meet g =", f.meet(g).label(), "   g meet f =", g.meet(f).label())
print("f join g =", f.join(g).label(), "   g join f =", g.join(f).label())

# the full algebra on two points with two values: 3^2 = 9 elements
S = build_pfn_algebra(2, 2)
print("order of P(2,2):", S.order)
print("elements:", ", ".join(S.labels))

print("left-handed:", check_identity(S, "left_handed").ok)
print("strongly distributive:", check_identity(S, "strongly_distributive").ok)
print("zero element:", S.labels[S.zero])

# collapsing each D-class leaves only the domains, ordered by inclusion:
# the Boolean lattice of subsets of {0, 1}
shadow = quotient(S).lattice
print("shadow order:", shadow.order, " boolean:", is_boolean_lattice(shadow))
for lab in shadow.labels:
    print("  class", lab)
