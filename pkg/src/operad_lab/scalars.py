"""Exact coefficient arithmetic over the rationals and over prime fields.

Every scalar that flows through the library is either a ``fractions.Fraction``
(rational field) or a plain int in ``[0, p)`` (prime field).  No floats, ever.
Field objects own all arithmetic so the rest of the code never branches on the
coefficient kind.
"""

from fractions import Fraction

MAX_PRIME = 2**31


class ScalarError(ValueError):
    """Bad coefficient, bad field label, or mixed-field arithmetic."""


def _is_prime(n):
    """Deterministic Miller-Rabin, valid for n < 3,215,031,751 (so all n < 2^31)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class RationalField:
    """The field of rational numbers; scalars are Fraction instances."""

    kind = "rational"
    label = "q"

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ScalarError("division by zero")
        return 1 / Fraction(a)

    def is_zero(self, a):
        return a == 0

    def format(self, a):
        return str(a)

    def parse(self, text):
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ScalarError(f"bad rational scalar {text!r}") from exc

    def signature(self):
        return ("rational",)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash(self.signature())


class PrimeField:
    """The field with p elements; scalars are ints reduced to [0, p)."""

    kind = "prime"

    def __init__(self, p):
        if not isinstance(p, int) or not (2 <= p < MAX_PRIME) or not _is_prime(p):
            raise ScalarError(f"modulus must be a prime below 2^31, got {p!r}")
        self.p = p
        self.zero = 0
        self.one = 1 % p
        self.label = f"gfp:{p}"

    def from_int(self, n):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ScalarError("division by zero")
        return pow(a, -1, self.p)

    def is_zero(self, a):
        return a % self.p == 0

    def format(self, a):
        return f"{a % self.p} mod {self.p}"

    def parse(self, text):
        s = text.strip()
        if "mod" in s:
            left, _, right = s.partition("mod")
            if right.strip() != str(self.p):
                raise ScalarError(f"scalar {text!r} names a different modulus")
            s = left.strip()
        try:
            if "/" in s:
                num, _, den = s.partition("/")
                return self.mul(self.from_int(int(num)), self.inv(self.from_int(int(den))))
            return self.from_int(int(s))
        except (ValueError, ScalarError) as exc:
            raise ScalarError(f"bad scalar {text!r} for {self.label}") from exc

    def signature(self):
        return ("prime", self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(self.signature())


def get_field(label):
    """Build a field from a label: 'q' or 'gfp:<p>'."""
    s = label.strip().lower()
    if s in ("q", "qq", "rational"):
        return RationalField()
    if s.startswith("gfp:"):
        try:
            p = int(s.split(":", 1)[1])
        except ValueError as exc:
            raise ScalarError(f"bad field label {label!r}") from exc
        return PrimeField(p)
    raise ScalarError(f"unknown field label {label!r} (want 'q' or 'gfp:<p>')")


def same_field(a, b):
    return a.signature() == b.signature()


def power_sign(field, exponent):
    """(-1)^exponent as a scalar of the field."""
    return field.one if exponent % 2 == 0 else field.neg(field.one)
