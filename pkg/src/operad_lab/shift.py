"""The shift operad on strictly increasing integer sequences.

Basis of arity n: strictly increasing n-tuples of positive integers.  Arity 0
is the empty tuple, the operadic unit is (1,), and the distinguished product
is (1, 2).  Composition splices a translated copy of the inner sequence into
one slot of the outer one and pushes the tail up.
"""

from .elements import Element, OperadError


def is_increasing(key):
    return all(a < b for a, b in zip(key, key[1:])) and all(a >= 1 for a in key)


def shift_add(key, offset):
    """Entrywise translation; returns the key unchanged if any entry would
    drop below 1."""
    if any(a + offset <= 0 for a in key):
        return tuple(key)
    return tuple(a + offset for a in key)


def compose_shift(x, i, y):
    """Splice y (translated to start at x[i-1]) into slot i of x."""
    n = len(x)
    if not 1 <= i <= n:
        raise OperadError(f"slot {i} out of range for arity {n}")
    prefix = x[: i - 1]
    if len(y) == 0:
        body = ()
        tail_offset = -1
    else:
        body = shift_add(y, x[i - 1] - 1)
        assert body != tuple(y) or x[i - 1] == 1, "translation guard fired inside compose"
        tail_offset = y[-1] - 1
    tail = tuple(a + tail_offset for a in x[i:])
    out = prefix + body + tail
    assert is_increasing(out), f"non-increasing result {out!r}"
    return out


def gamma_shift(x, blocks):
    """Total composition in closed form: block i is translated by
    x[i-1] - i + sum of the last entries of the earlier blocks."""
    n = len(x)
    if len(blocks) != n:
        raise OperadError(f"gamma needs {n} blocks, got {len(blocks)}")
    out = []
    acc = 0
    for i in range(1, n + 1):
        block = blocks[i - 1]
        offset = x[i - 1] - i + acc
        out.extend(a + offset for a in block)
        acc += block[-1] if block else 0
    key = tuple(out)
    assert is_increasing(key), f"non-increasing result {key!r}"
    return key


def face_shift(x, i):
    """Delete entry i and pull the tail down by one."""
    n = len(x)
    if not 1 <= i <= n:
        raise OperadError(f"slot {i} out of range for arity {n}")
    return x[: i - 1] + tuple(a - 1 for a in x[i:])


def degeneracy_shift(x, i):
    """Duplicate entry i (shifted copy) and push the tail up by one."""
    n = len(x)
    if not 1 <= i <= n:
        raise OperadError(f"slot {i} out of range for arity {n}")
    return x[:i] + (x[i - 1] + 1,) + tuple(a + 1 for a in x[i:])


class ShiftOperad:
    """Operad instance on strictly increasing positive integer tuples.

    ``max_entry`` only bounds basis enumeration and random sampling; the
    operations themselves are unbounded.
    """

    def __init__(self, field, max_entry=8):
        if max_entry < 2:
            raise OperadError("max_entry must be at least 2")
        self.field = field
        self.max_entry = max_entry
        self.label = "shift"

    def signature(self):
        return ("shift", self.field.signature())

    def arity_of(self, key):
        return len(key)

    def validate_basis(self, key, arity):
        key = tuple(key)
        if len(key) != arity or not is_increasing(key):
            raise OperadError(f"bad increasing-sequence key {key!r} for arity {arity}")
        return key

    def unit_one(self):
        return Element.basis(self, (1,))

    def unit_zero(self):
        return Element.basis(self, ())

    def multiplication(self):
        return Element.basis(self, (1, 2))

    def compose_basis(self, key, i, other):
        if len(key) == 0:
            raise OperadError("arity-0 element has no composition slots")
        return [(compose_shift(key, i, other), self.field.one)]

    def basis_keys(self, arity):
        from itertools import combinations

        if arity == 0:
            yield ()
            return
        for combo in combinations(range(1, self.max_entry + 1), arity):
            yield combo

    def dimension(self, arity):
        from math import comb

        return comb(self.max_entry, arity)

    def random_basis(self, arity, rng):
        if arity == 0:
            return ()
        top = max(self.max_entry, arity)
        return tuple(sorted(rng.sample(range(1, top + 1), arity)))

    def format_basis(self, key):
        return "(" + ",".join(str(v) for v in key) + ")"

    def parse_basis(self, text):
        s = text.strip().strip("()")
        if not s:
            return ()
        key = tuple(int(t) for t in s.split(","))
        if not is_increasing(key):
            raise OperadError(f"{text!r} is not strictly increasing and positive")
        return key

    def basis_to_json(self, key):
        return list(key)

    def basis_from_json(self, data):
        return tuple(int(v) for v in data)
