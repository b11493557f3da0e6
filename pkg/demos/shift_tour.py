"""Tour of the shift operad on strictly increasing tuples, including the one
identity that genuinely fails there.

Run with: python3 demos/shift_tour.py
"""

from operad_lab import (
    Element,
    ShiftOperad,
    boundary,
    coboundary,
    compose,
    degeneracy,
    face,
    gamma,
    get_field,
)
from operad_lab.shift import compose_shift, gamma_shift

field = get_field("q")
shift = ShiftOperad(field, max_entry=12)


def show(title, value):
    print(f"{title:<46} {value}")


print("== basic composition ==")
show("(1,2) o_1 (1,2)", compose_shift((1, 2), 1, (1, 2)))
show("(1,2) o_2 (1,2)", compose_shift((1, 2), 2, (1, 2)))
show("(2,5) o_1 the point", compose_shift((2, 5), 1, ()))
show("(1,3,4) o_2 (2,3)", compose_shift((1, 3, 4), 2, (2, 3)))

print()
print("== total composition has a closed form ==")
x = (2, 4, 5)
blocks = [(1, 3), (), (2,)]
direct = gamma_shift(x, blocks)
iterated = gamma(Element.basis(shift, x), [Element.basis(shift, b) for b in blocks])
show(f"gamma({x}; {blocks})", direct)
assert iterated == Element.basis(shift, direct)
print("closed form agrees with iterated partial composition.")

print()
print("== faces, degeneracies, differentials ==")
show("face 2 of (2,5,7)", face(Element.basis(shift, (2, 5, 7)), 2).format())
show("degeneracy 1 of (1,3)", degeneracy(Element.basis(shift, (1, 3)), 1).format())
show("coboundary of (2)", coboundary(Element.basis(shift, (2,))).format())
show("coboundary of (1,3)", coboundary(Element.basis(shift, (1, 3))).format())
show("boundary of (1,3,4)", boundary(Element.basis(shift, (1, 3, 4))).format())

print()
print("== the boundary/coboundary anticommutation fails here ==")
x = Element.basis(shift, (2,))
lhs = boundary(coboundary(x))
rhs = coboundary(boundary(x)).scale(field.from_int(-1))
show("boundary(coboundary (2))", lhs.format())
show("-coboundary(boundary (2))", rhs.format())
print()
print("the two differentials anticommute in the permutation and endomorphism")
print("operads, but not here: composing with the point at slot i and then")
print("with the product at another slot is order-sensitive for shifted tuples,")
print("so the mixed compatibility behind the identity breaks down.")
assert lhs != rhs
