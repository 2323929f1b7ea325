"""
Frames and their noncommutative counterparts
============================================

A frame distributes finite meets over arbitrary joins.  The
noncommutative analogue asks the same over commuting subsets, on a
join complete strongly distributive skew lattice with zero.  The two
notions are equivalent across the D-quotient, and that equivalence is
checkable structure by structure.
"""

from skewlat import (
    CensusFilter,
    build_pfn_algebra,
    check_theorem_ncframes,
    diamond_m3,
    enumerate_skew_lattices,
    is_frame,
    is_ncframe,
)

# the five-element diamond is the classic non-distributive lattice
m3 = diamond_m3()
verdict = is_frame(m3)
print("M3 is a frame:", verdict.is_frame, " failing instance:", verdict.failing_instance)

S = build_pfn_algebra(2, 2)
print("P(2,2) is a noncommutative frame:", is_ncframe(S).ok)

res = check_theorem_ncframes(S)
print("equivalence with the shadow:", res.ok)
for key, value in res.witness:
    print("  ", key, "=", value)

# every strongly distributive structure with zero at small order agrees
filt = CensusFilter(strongly_distributive=True, has_zero=True)
checked = 0
for n in (1, 2, 3, 4):
    for T in enumerate_skew_lattices(n, filt):
        assert check_theorem_ncframes(T).ok
        checked += 1
print("equivalence verified on", checked, "census structures")
