"""
Axioms, certificates and the commutative shadow
===============================================

A skew lattice is two idempotent associative operations glued by four
absorption laws.  Nothing here assumes commutativity; instead every
claim comes back as a certificate naming either the law that holds or
the exact cell where it breaks.
"""

from skewlat import FiniteSkewLattice, green_d, quotient, validate_skew_axioms

# the left-handed flat pair: both elements absorb each other on the left
flat = FiniteSkewLattice(2, ((0, 0), (1, 1)), ((0, 1), (0, 1)))
cert = validate_skew_axioms(flat)
print("flat pair valid:", cert.ok)

# break one join cell and the scan points at the first dead law
broken = FiniteSkewLattice(2, ((0, 0), (0, 1)), ((0, 0), (0, 1)))
cert = validate_skew_axioms(broken)
print("tampered table valid:", cert.ok)
print("  first failure:", cert.checked, "at", cert.witness)

# Green's relation D collapses each rectangular class to a point;
# the quotient is the largest lattice the structure can see of itself.
classes = green_d(flat)
print("D-classes of the flat pair:", classes.classes)
q = quotient(flat)
print("shadow order:", q.lattice.order)

chain = FiniteSkewLattice(3, ((0, 0, 0), (0, 1, 1), (0, 1, 2)), ((0, 1, 2), (1, 1, 2), (2, 2, 2)))
print("a chain is already its own shadow:", quotient(chain).lattice.order == chain.order)
