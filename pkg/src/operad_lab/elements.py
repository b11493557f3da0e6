"""Linear combinations of operad basis elements with exact coefficients.

An Element is a finite sum ``sum c_b * b`` of basis keys of a single arity,
attached to one operad instance (which owns the field).  Arithmetic is plain
linear algebra; all operadic structure lives in :mod:`operad_lab.core` and in
the per-operad modules.
"""


class OperadError(ValueError):
    """Domain error: bad arity, bad slot, malformed basis key, mixed operads."""


class Element:
    __slots__ = ("operad", "arity", "terms")

    def __init__(self, operad, arity, terms):
        if arity < 0:
            raise OperadError(f"negative arity {arity}")
        field = operad.field
        clean = {}
        for basis, coeff in terms.items() if isinstance(terms, dict) else terms:
            if field.is_zero(coeff):
                continue
            key = operad.validate_basis(basis, arity)
            clean[key] = field.add(clean[key], coeff) if key in clean else coeff
        self.operad = operad
        self.arity = arity
        self.terms = {k: v for k, v in clean.items() if not field.is_zero(v)}

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, operad, arity):
        return cls(operad, arity, {})

    @classmethod
    def basis(cls, operad, key, coeff=None):
        c = operad.field.one if coeff is None else coeff
        return cls(operad, operad.arity_of(key), {key: c})

    # -- linear structure --------------------------------------------------

    def _check_mate(self, other):
        if not isinstance(other, Element):
            raise OperadError(f"expected Element, got {type(other).__name__}")
        if self.operad.signature() != other.operad.signature():
            raise OperadError(
                f"mixed operads: {self.operad.label} vs {other.operad.label}"
            )
        if self.arity != other.arity:
            raise OperadError(f"mixed arities: {self.arity} vs {other.arity}")

    def __add__(self, other):
        self._check_mate(other)
        field = self.operad.field
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = field.add(out[k], v) if k in out else v
        return Element(self.operad, self.arity, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        field = self.operad.field
        return Element(
            self.operad, self.arity, {k: field.neg(v) for k, v in self.terms.items()}
        )

    def scale(self, coeff):
        field = self.operad.field
        return Element(
            self.operad, self.arity, {k: field.mul(coeff, v) for k, v in self.terms.items()}
        )

    def is_zero(self):
        return not self.terms

    def coefficient(self, key):
        return self.terms.get(key, self.operad.field.zero)

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return (
            self.operad.signature() == other.operad.signature()
            and self.arity == other.arity
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash(
            (self.operad.signature(), self.arity, tuple(self.sorted_terms()))
        )

    def __repr__(self):
        return f"Element({self.operad.label}, arity={self.arity}, {self.format()})"

    def format(self):
        """Human-readable sum, deterministic term order."""
        if self.is_zero():
            return "0"
        field = self.operad.field
        parts = []
        for key, coeff in self.sorted_terms():
            word = self.operad.format_basis(key)
            c = field.format(coeff)
            parts.append(word if c == "1" else f"{c}*{word}")
        return " + ".join(parts)


def equal_up_to_sign(x, y):
    """Return +1 if x == y, -1 if x == -y, else None (zero pair gives +1)."""
    if x == y:
        return 1
    if x == -y:
        return -1
    return None
