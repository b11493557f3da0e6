"""Tour of the permutation operad: composition, faces, boundary, coproduct, braces.

Run with: python3 demos/permutation_walkthrough.py
"""

from operad_lab import (
    AssocOperad,
    Element,
    aw_coproduct,
    boundary,
    brace,
    coboundary,
    compose,
    dot_product,
    face,
    get_field,
    odot_product,
)
from operad_lab.assoc import compose_blocks, compose_formula, standardize

field = get_field("q")
assoc = AssocOperad(field)


def show(title, value):
    print(f"{title:<42} {value}")


print("== composition of permutations ==")
tau, sigma = (4, 3, 1, 2), (2, 3, 1)
for slot in (1, 2):
    blocks = compose_blocks(tau, slot, sigma)
    formula = compose_formula(tau, slot, sigma)
    assert blocks == formula
    show(f"(4312) o_{slot} (231)", "".join(map(str, blocks)))

print()
print("== standardization ==")
show("standardize 2,9,1,8,4,7", standardize((2, 9, 1, 8, 4, 7)))
show("standardize 3,7,4,5", standardize((3, 7, 4, 5)))

print()
print("== faces and the boundary ==")
x = Element.basis(assoc, tau)
for i in range(1, 5):
    show(f"face {i} of (4312)", face(x, i).format())
show("boundary of (4312)", boundary(x).format())
show("boundary of (21)", boundary(Element.basis(assoc, (2, 1))).format())

print()
print("== coboundary (Hochschild-style differential) ==")
show("coboundary of the unit (1)", coboundary(assoc.unit_one()).format())
show("coboundary of (21)", coboundary(Element.basis(assoc, (2, 1))).format())

print()
print("== prefix/suffix coproduct of (3124) ==")
for left, right in aw_coproduct(Element.basis(assoc, (3, 1, 2, 4))):
    print(f"  {left.format():>10}  (x)  {right.format()}")

print()
print("== braces and the two products ==")
m = assoc.multiplication()
f = Element.basis(assoc, (2, 1, 3))
show("m{(213)}", brace(m, [f]).format())
p = Element.basis(assoc, (1, 2))
q = Element.basis(assoc, (2, 1))
show("dot product (12).(21)", dot_product(p, q).format())
show("odot product (12)(o)(21)", odot_product(p, q).format())
print("the odot product of basis words is plain concatenation.")
