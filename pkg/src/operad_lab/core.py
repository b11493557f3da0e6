"""Generic simplicial calculus over any connected multiplicative operad.

Every function here works uniformly over the concrete operads (permutations,
increasing sequences, endomorphisms): partial and total composition, faces and
degeneracies, the boundary and coboundary operators, right braces, the two m-
products, the prefix/suffix coproduct, and multi-index face/degeneracy maps.

Conventions fixed here (and exercised by the test suites):
- total composition plugs arguments right to left, so earlier slots keep
  their indices while later blocks are already in place;
- the brace sign exponent counts, for each inserted argument, the inputs of
  the composite strictly to the left of that argument's block;
- the coproduct's extreme terms are the canonical point tensor factors, the
  interior terms are top-face and first-face chains;
- the boundary of a point is zero, and the coboundary of a point is zero.
"""

from .elements import Element, OperadError
from .scalars import power_sign


def compose(x, i, y):
    """Partial composition x o_i y, bilinear in both arguments."""
    if x.operad.signature() != y.operad.signature():
        raise OperadError(f"mixed operads: {x.operad.label} vs {y.operad.label}")
    if x.arity < 1:
        raise OperadError("arity-0 element has no composition slots")
    if not 1 <= i <= x.arity:
        raise OperadError(f"slot {i} out of range for arity {x.arity}")
    operad = x.operad
    field = operad.field
    out = {}
    for bx, cx in x.terms.items():
        for by, cy in y.terms.items():
            coeff = field.mul(cx, cy)
            for key, c in operad.compose_basis(bx, i, by):
                v = field.mul(coeff, c)
                out[key] = field.add(out[key], v) if key in out else v
    return Element(operad, x.arity + y.arity - 1, out)


def gamma(x, ys):
    """Total composition: plug ys into the slots of x, rightmost slot first."""
    if len(ys) != x.arity:
        raise OperadError(f"gamma needs {x.arity} arguments, got {len(ys)}")
    result = x
    for i in range(x.arity, 0, -1):
        result = compose(result, i, ys[i - 1])
    return result


def face(x, i):
    """Plug the point into slot i; arity drops by one."""
    return compose(x, i, x.operad.unit_zero())


def degeneracy(x, i=None):
    """Plug the product into slot i; arity rises by one.  On a point the
    slot is ignored and the result is the operadic unit."""
    if x.arity == 0:
        return x.operad.unit_one().scale(x.coefficient(()))
    if i is None:
        raise OperadError("degeneracy needs a slot for arity >= 1")
    return compose(x, i, x.operad.multiplication())


def subset_restriction(x, keep):
    """Restrict to the slots in ``keep``: unit there, point elsewhere."""
    keep = set(keep)
    if not keep <= set(range(1, x.arity + 1)):
        raise OperadError(f"subset {sorted(keep)} not within 1..{x.arity}")
    one = x.operad.unit_one()
    point = x.operad.unit_zero()
    return gamma(x, [one if i in keep else point for i in range(1, x.arity + 1)])


def boundary(x):
    """Alternating sum of faces; zero on points."""
    if x.arity == 0:
        return Element.zero(x.operad, 0)
    out = Element.zero(x.operad, x.arity - 1)
    for i in range(1, x.arity + 1):
        term = face(x, i)
        out = out + (term if i % 2 == 0 else -term)
    return out


def coboundary(x):
    """Degree +1 operator driven by the product m; zero on points."""
    operad = x.operad
    if x.arity == 0:
        return Element.zero(operad, 1)
    m = operad.multiplication()
    n = x.arity
    field = operad.field
    out = compose(m, 1, x).scale(power_sign(field, n - 1)) + compose(m, 2, x)
    for i in range(1, n + 1):
        term = compose(x, i, m)
        out = out + (term if i % 2 == 0 else -term)
    return out


def brace(p, qs):
    """Right brace p{q_1..q_n}: signed sum over order-preserving insertions.

    Each summand plugs q_1..q_n into n chosen slots of p (units elsewhere)
    and carries the sign (-1)^e with e the sum over j of |q_j| times the
    number of inputs of the composite strictly left of q_j's block.
    """
    from itertools import combinations

    n = len(qs)
    if n == 0:
        return p
    r = p.arity
    if n > r:
        raise OperadError(f"brace needs at most deg(p)={r} arguments, got {n}")
    operad = p.operad
    for q in qs:
        if q.operad.signature() != operad.signature():
            raise OperadError("brace arguments from mixed operads")
    field = operad.field
    arities = [q.arity for q in qs]
    result_arity = r - n + sum(arities)
    out = Element.zero(operad, result_arity)
    for slots in combinations(range(1, r + 1), n):
        exponent = 0
        left_inputs = 0
        prev_slot = 0
        for j, c in enumerate(slots):
            left_inputs += c - prev_slot - 1
            exponent += (arities[j] - 1) * (result_arity - left_inputs)
            left_inputs += arities[j]
            prev_slot = c
        term = p
        for j in range(n - 1, -1, -1):
            term = compose(term, slots[j], qs[j])
        out = out + term.scale(power_sign(field, exponent))
    return out


def dot_product(p, q):
    """p.q = (-1)^(deg p * deg q) gamma(m; p, q)."""
    m = p.operad.multiplication()
    sign = power_sign(p.operad.field, p.arity * q.arity)
    return gamma(m, [p, q]).scale(sign)


def odot_product(p, q):
    """The associative product (-1)^(deg q (deg p - 1)) m{p, q}; it equals
    the plain total composition gamma(m; p, q)."""
    m = p.operad.multiplication()
    sign = power_sign(p.operad.field, q.arity * (p.arity - 1))
    return brace(m, [p, q]).scale(sign)


def aw_coproduct(x):
    """Prefix/suffix coproduct as a list of simple tensors (left, right).

    For each basis term of x there are n+1 summands: the j-th left factor is
    the chain of top faces down to arity j, the right factor the j-fold first
    face, and the extreme terms are point tensor factors.  Scalar weights
    ride on the left factors; summing left (x) right over the list gives the
    full coproduct.
    """
    operad = x.operad
    point = operad.unit_zero()
    n = x.arity
    if n == 0:
        return [(x, point)]
    pairs = []
    for key, coeff in x.sorted_terms():
        weighted = Element.basis(operad, key, coeff)
        plain = Element.basis(operad, key)
        pairs.append((point.scale(coeff), plain))
        for j in range(1, n):
            left = weighted
            for a in range(n, j, -1):
                left = face(left, a)
            right = plain
            for _ in range(j):
                right = face(right, 1)
            pairs.append((left, right))
        pairs.append((weighted, point))
    return pairs


def counit(x):
    """Coefficient of the point in arity 0; zero in higher arity."""
    if x.arity != 0:
        return x.operad.field.zero
    return x.coefficient(())


def multi_face(x, slots, arities):
    """Composite face map: one face inside each block of the stated arities,
    taken at global positions slots[r] + (sum of earlier block arities),
    applied from the rightmost position inward."""
    return _multi(x, slots, arities, face)


def multi_degeneracy(x, slots, arities):
    """Composite degeneracy map, same position bookkeeping as multi_face."""
    return _multi(x, slots, arities, lambda e, i: degeneracy(e, i))


def _multi(x, slots, arities, op):
    if len(slots) != len(arities):
        raise OperadError("slots and arities must have equal length")
    if sum(arities) != x.arity:
        raise OperadError(
            f"block arities sum to {sum(arities)}, element arity is {x.arity}"
        )
    positions = []
    offset = 0
    for j, t in zip(slots, arities):
        if t < 1:
            raise OperadError("block arities must be >= 1")
        if not 1 <= j <= t:
            raise OperadError(f"slot {j} outside its block of arity {t}")
        positions.append(j + offset)
        offset += t
    out = x
    for g in sorted(positions, reverse=True):
        out = op(out, g)
    return out


def block_sign_exponent(arities):
    """Reported exponent for the tensor-level block maps: sum of t_r (s-r)."""
    s = len(arities)
    return sum(t * (s - r) for r, t in enumerate(arities, start=1))


def random_element(operad, arity, rng, max_terms=2, max_coeff=3):
    """Small random linear combination of basis keys, for property tests."""
    field = operad.field
    n_terms = rng.randint(1, max_terms)
    terms = {}
    for _ in range(n_terms):
        key = operad.random_basis(arity, rng)
        c = field.from_int(rng.randint(1, max_coeff) * rng.choice((1, -1)))
        terms[key] = field.add(terms[key], c) if key in terms else c
    return Element(operad, arity, terms)
