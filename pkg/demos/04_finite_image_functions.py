"""
Partial maps with finite image
==============================

Partial maps on the naturals whose image is finite, encoded by their
fibers (finite or cofinite preimages).  Joining one-point maps one at a
time grows the image by exactly one value per step; an upper bound of
the whole family would need infinite image, so the commuting chain has
no join inside the structure.
"""

from skewlat import FinCofinSet, FiniteImageFunction, fi_join, fi_meet, fi_one_point_chain

# fiber bookkeeping: finite and cofinite sets close under the usual ops
evens_missing = FinCofinSet.cofin([1, 3, 5])
small = FinCofinSet.fin([0, 1, 2, 3])
print("cofinite & finite:", evens_missing & small)
print("union is cofinite:", (evens_missing | small).finite is False)

f = FiniteImageFunction.one_point(0)   # the map defined only at 0, sending it to 0
g = FiniteImageFunction.one_point(7)
print("f:", f, " image size", f.image_size)
print("f join g:", fi_join(f, g), " image size", fi_join(f, g).image_size)
print("f meet g image size:", fi_meet(f, g).image_size)   # disjoint domains: empty map

print("\njoining one-point functions, fifteen steps:")
for step, size in fi_one_point_chain(15):
    print(f"  after step {step}: image has {size} values")
