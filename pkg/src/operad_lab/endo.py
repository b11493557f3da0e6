"""Endomorphism operads of finite-dimensional unital associative algebras.

For an algebra A with basis e_0..e_{d-1}, arity n >= 1 has the elementary
basis E[i1..in -> j] (the multilinear map sending e_{i1} x..x e_{in} to e_j
and every other basis tuple to 0), stored as the flat tuple (i1..in, j).
Arity 0 is one-dimensional with basis key (); composing an arity-1 map f with
that point evaluates f on the algebra unit and projects back to the line via
a fixed normalized functional.

Keys of length 1, (j,), encode algebra elements e_j themselves; they form the
degree-0 term of the classical Hochschild complex and carry no operadic slots.
"""

import json

from .elements import Element, OperadError
from .scalars import power_sign


class FinAlgebra:
    """Finite-dimensional unital associative algebra given by structure
    constants: mul[i][j][k] is the e_k coefficient of e_i * e_j."""

    def __init__(self, name, field, dim, unit, mul, check=True):
        if dim < 1:
            raise OperadError("algebra dimension must be >= 1")
        self.name = name
        self.field = field
        self.dim = dim
        self.unit = tuple(unit)
        self.mul = tuple(tuple(tuple(row) for row in plane) for plane in mul)
        if len(self.unit) != dim or any(
            len(p) != dim or any(len(r) != dim for r in p) for p in self.mul
        ):
            raise OperadError("structure constant shapes do not match dim")
        # normalized functional used to close the bottom of the complex:
        # the coordinate at the first basis index where the unit is nonzero
        self.theta_index = next(
            (k for k in range(dim) if not field.is_zero(self.unit[k])), None
        )
        if self.theta_index is None:
            raise OperadError("unit vector is zero")
        self.theta_scale = field.inv(self.unit[self.theta_index])
        if check:
            self._check_axioms()

    def _check_axioms(self):
        f = self.field
        d = self.dim
        for i in range(d):
            for j in range(d):
                left = self.multiply(self.basis_vector(i), self.basis_vector(j))
                for k in range(d):
                    lhs = self.multiply(left, self.basis_vector(k))
                    rhs = self.multiply(
                        self.basis_vector(i),
                        self.multiply(self.basis_vector(j), self.basis_vector(k)),
                    )
                    if lhs != rhs:
                        raise OperadError(
                            f"algebra {self.name!r} is not associative at ({i},{j},{k})"
                        )
            ei = self.basis_vector(i)
            if self.multiply(self.unit, ei) != ei or self.multiply(ei, self.unit) != ei:
                raise OperadError(f"unit axiom fails at basis index {i}")

    def basis_vector(self, i):
        return tuple(
            self.field.one if k == i else self.field.zero for k in range(self.dim)
        )

    def multiply(self, a, b):
        f = self.field
        out = [f.zero] * self.dim
        for i, ai in enumerate(a):
            if f.is_zero(ai):
                continue
            for j, bj in enumerate(b):
                if f.is_zero(bj):
                    continue
                coeff = f.mul(ai, bj)
                for k in range(self.dim):
                    c = self.mul[i][j][k]
                    if not f.is_zero(c):
                        out[k] = f.add(out[k], f.mul(coeff, c))
        return tuple(out)

    def theta(self, vec):
        """Normalized linear functional with theta(unit) = 1."""
        return self.field.mul(vec[self.theta_index], self.theta_scale)

    def signature(self):
        return ("algebra", self.name, self.field.signature(), self.dim, self.unit, self.mul)


def ground_field_algebra(field):
    return FinAlgebra("k", field, 1, (field.one,), (((field.one,),),))


def dual_numbers(field):
    """K[x]/(x^2): basis 1, x."""
    one, zero = field.one, field.zero
    mul = (
        ((one, zero), (zero, one)),
        ((zero, one), (zero, zero)),
    )
    return FinAlgebra("dual", field, 2, (one, zero), mul)


def matrix2(field):
    """2x2 matrices: basis e11, e12, e21, e22 (indices 0..3)."""
    one, zero = field.one, field.zero

    def unit_product(a, b, c, d):
        # e_{ab} e_{cd} = delta_{bc} e_{ad}
        out = [zero] * 4
        if b == c:
            out[2 * a + d] = one
        return tuple(out)

    mul = tuple(
        tuple(unit_product(i // 2, i % 2, j // 2, j % 2) for j in range(4))
        for i in range(4)
    )
    return FinAlgebra("m2", field, 4, (one, zero, zero, one), mul)


def algebra_from_json(data, field, name="custom"):
    dim = int(data["dim"])
    unit = tuple(_scalar(field, v) for v in data["unit"])
    mul = tuple(
        tuple(tuple(_scalar(field, v) for v in row) for row in plane)
        for plane in data["mul"]
    )
    return FinAlgebra(name, field, dim, unit, mul)


def algebra_to_json(alg):
    f = alg.field
    return {
        "dim": alg.dim,
        "unit": [f.format(v) for v in alg.unit],
        "mul": [[[f.format(v) for v in row] for row in plane] for plane in alg.mul],
    }


def _scalar(field, v):
    if isinstance(v, int):
        return field.from_int(v)
    return field.parse(str(v))


def load_algebra(spec_text, field):
    """Resolve an algebra from a preset name or an @file.json reference."""
    s = spec_text.strip()
    if s == "k":
        return ground_field_algebra(field)
    if s == "dual":
        return dual_numbers(field)
    if s == "m2":
        return matrix2(field)
    if s.startswith("@"):
        with open(s[1:], "r", encoding="utf-8") as fh:
            data = json.load(fh)
        return algebra_from_json(data, field, name=s[1:])
    raise OperadError(f"unknown algebra {spec_text!r} (want k, dual, m2, or @file.json)")


class EndoOperad:
    """Operad of multilinear maps A^(x)n -> A in the elementary basis."""

    def __init__(self, algebra):
        self.algebra = algebra
        self.field = algebra.field
        self.label = f"endo:{algebra.name}"

    def signature(self):
        return ("endo", self.algebra.signature())

    def arity_of(self, key):
        return max(len(key) - 1, 0)

    def validate_basis(self, key, arity):
        key = tuple(key)
        d = self.algebra.dim
        if arity == 0:
            if key != () and not (len(key) == 1 and 0 <= key[0] < d):
                raise OperadError(f"bad arity-0 key {key!r}")
            return key
        if len(key) != arity + 1 or any(not 0 <= v < d for v in key):
            raise OperadError(f"bad map key {key!r} for arity {arity}")
        return key

    def unit_one(self):
        return Element(self, 1, {(a, a): self.field.one for a in range(self.algebra.dim)})

    def unit_zero(self):
        return Element.basis(self, ())

    def multiplication(self):
        alg, f = self.algebra, self.field
        terms = {}
        for a in range(alg.dim):
            for b in range(alg.dim):
                for m in range(alg.dim):
                    c = alg.mul[a][b][m]
                    if not f.is_zero(c):
                        terms[(a, b, m)] = c
        return Element(self, 2, terms)

    def compose_basis(self, key, i, other):
        n = len(key) - 1
        if n < 1:
            raise OperadError("arity-0 element has no composition slots")
        if not 1 <= i <= n:
            raise OperadError(f"slot {i} out of range for arity {n}")
        if other == ():
            return self.compose_with_point(key, i)
        if len(other) == 1:
            raise OperadError(f"degree-0 key {other!r} carries no operadic slot data")
        inputs, out = key[:-1], key[-1]
        g_inputs, g_out = other[:-1], other[-1]
        if g_out != inputs[i - 1]:
            return []
        new_key = inputs[: i - 1] + g_inputs + inputs[i:] + (out,)
        return [(new_key, self.field.one)]

    def compose_with_point(self, key, i):
        """Plug the algebra unit into slot i of an elementary map."""
        n = len(key) - 1
        if n < 1:
            raise OperadError("arity-0 element has no composition slots")
        if not 1 <= i <= n:
            raise OperadError(f"slot {i} out of range for arity {n}")
        f = self.field
        alg = self.algebra
        inputs, out = key[:-1], key[-1]
        u = alg.unit[inputs[i - 1]]
        if f.is_zero(u):
            return []
        if n == 1:
            # evaluate on the unit and project to the arity-0 line
            coeff = f.mul(u, alg.theta(alg.basis_vector(out)))
            return [((), coeff)] if not f.is_zero(coeff) else []
        new_key = inputs[: i - 1] + inputs[i:] + (out,)
        return [(new_key, u)]

    def basis_keys(self, arity):
        if arity == 0:
            yield ()
            return
        d = self.algebra.dim
        from itertools import product

        for combo in product(range(d), repeat=arity + 1):
            yield combo

    def dimension(self, arity):
        return 1 if arity == 0 else self.algebra.dim ** (arity + 1)

    def random_basis(self, arity, rng):
        if arity == 0:
            return ()
        d = self.algebra.dim
        return tuple(rng.randrange(d) for _ in range(arity + 1))

    def format_basis(self, key):
        if key == ():
            return "()"
        if len(key) == 1:
            return f"A[{key[0]}]"
        ins = ",".join(str(v) for v in key[:-1])
        return f"E[{ins}->{key[-1]}]"

    def parse_basis(self, text):
        s = text.strip()
        if s == "()":
            return ()
        if s.startswith("A[") and s.endswith("]"):
            return (int(s[2:-1]),)
        if s.startswith("E[") and s.endswith("]") and "->" in s:
            ins, _, out = s[2:-1].partition("->")
            key = tuple(int(t) for t in ins.split(",")) + (int(out),)
            return key
        raise OperadError(f"bad map key {text!r}")

    def basis_to_json(self, key):
        return list(key)

    def basis_from_json(self, data):
        return tuple(int(v) for v in data)


def classical_keys(operad, degree):
    """Basis of the classical complex: degree 0 is the algebra itself."""
    if degree == 0:
        for j in range(operad.algebra.dim):
            yield (j,)
        return
    yield from operad.basis_keys(degree)


def classical_coboundary(x):
    """Degree +1 differential of the classical complex of the algebra.

    Degree 0 sends an algebra element to its commutator map; degree n >= 1
    alternates outer multiplications and the n adjacent input merges.
    """
    operad = x.operad
    if not isinstance(operad, EndoOperad):
        raise OperadError("classical coboundary needs an endomorphism operad")
    alg, f = operad.algebra, operad.field
    d = alg.dim
    out = {}

    def bump(key, coeff):
        if f.is_zero(coeff):
            return
        out[key] = f.add(out[key], coeff) if key in out else coeff

    if x.arity == 0:
        for key, coeff in x.terms.items():
            vec = alg.unit if key == () else alg.basis_vector(key[0])
            for u in range(d):
                for m in range(d):
                    for t in range(d):
                        if f.is_zero(vec[t]):
                            continue
                        c = f.sub(alg.mul[u][t][m], alg.mul[t][u][m])
                        bump((u, m), f.mul(vec[t], f.mul(coeff, c)))
        return Element(operad, 1, out)

    n = x.arity
    for key, coeff in x.terms.items():
        inputs, j = key[:-1], key[-1]
        for u in range(d):
            for m in range(d):
                c = alg.mul[u][j][m]
                bump(((u,) + inputs + (m,)), f.mul(coeff, c))
        for p in range(1, n + 1):
            sign = power_sign(f, p)
            target = inputs[p - 1]
            for u in range(d):
                for v in range(d):
                    c = alg.mul[u][v][target]
                    if f.is_zero(c):
                        continue
                    new_key = inputs[: p - 1] + (u, v) + inputs[p:] + (j,)
                    bump(new_key, f.mul(sign, f.mul(coeff, c)))
        sign = power_sign(f, n + 1)
        for u in range(d):
            for m in range(d):
                c = alg.mul[j][u][m]
                bump((inputs + (u, m)), f.mul(sign, f.mul(coeff, c)))
    return Element(operad, n + 1, out)


def cup_product(x, y):
    """Classical cup product: multiply the outputs, concatenate the inputs."""
    operad = x.operad
    if not isinstance(operad, EndoOperad) or operad.signature() != y.operad.signature():
        raise OperadError("cup product needs two maps over one endomorphism operad")
    if x.arity < 1 or y.arity < 1:
        raise OperadError("cup product defined here for arities >= 1")
    alg, f = operad.algebra, operad.field
    out = {}
    for kx, cx in x.terms.items():
        for ky, cy in y.terms.items():
            base = f.mul(cx, cy)
            for m in range(alg.dim):
                c = alg.mul[kx[-1]][ky[-1]][m]
                if f.is_zero(c):
                    continue
                key = kx[:-1] + ky[:-1] + (m,)
                coeff = f.mul(base, c)
                out[key] = f.add(out[key], coeff) if key in out else coeff
    return Element(operad, x.arity + y.arity, out)


def multimap_to_element(operad, arity, coeffs):
    """Dense coefficient list -> Element; index order is input indices from
    the first (slowest) to the last, then the output index (fastest)."""
    d = operad.algebra.dim
    f = operad.field
    if arity == 0:
        if len(coeffs) != d:
            raise OperadError(f"arity-0 dense map needs {d} coefficients")
        return Element(
            operad, 0, {(j,): _scalar(f, coeffs[j]) for j in range(d)}
        )
    expected = d ** (arity + 1)
    if len(coeffs) != expected:
        raise OperadError(f"arity-{arity} dense map needs {expected} coefficients")
    terms = {}
    from itertools import product

    for flat, key in enumerate(product(range(d), repeat=arity + 1)):
        c = _scalar(f, coeffs[flat])
        if not f.is_zero(c):
            terms[key] = c
    return Element(operad, arity, terms)


def element_to_multimap(elem):
    operad = elem.operad
    d = operad.algebra.dim
    f = operad.field
    if elem.arity == 0:
        vec = [f.zero] * d
        for key, coeff in elem.terms.items():
            if key == ():
                for t in range(d):
                    vec[t] = f.add(vec[t], f.mul(coeff, operad.algebra.unit[t]))
            else:
                vec[key[0]] = f.add(vec[key[0]], coeff)
        return {"arity": 0, "coeffs": [f.format(v) for v in vec]}
    out = []
    from itertools import product

    for key in product(range(d), repeat=elem.arity + 1):
        out.append(f.format(elem.terms.get(key, f.zero)))
    return {"arity": elem.arity, "coeffs": out}
