"""The permutation (associative) operad.

Basis of arity n: permutations of {1..n} in one-line notation, stored as
tuples.  Arity 0 has the single basis key () (the augmentation point), arity 1
the identity (1,), and the distinguished product is (1,2).

Partial composition of permutations is implemented twice on purpose:
``compose_blocks`` subdivides [n+l-1] into blocks, permutes blocks by the
inverse of the outer permutation and the inner block by the inverse of the
inner one, then inverts the resulting word; ``compose_formula`` is a direct
three-case closed formula.  The two are checked against each other.
"""

from .elements import Element, OperadError


def is_permutation(word):
    return sorted(word) == list(range(1, len(word) + 1))


def invert(word):
    """Inverse of a permutation in one-line notation."""
    out = [0] * len(word)
    for pos, val in enumerate(word, start=1):
        out[val - 1] = pos
    return tuple(out)


def standardize(word):
    """The permutation order-isomorphic to a repetition-free integer word."""
    if len(set(word)) != len(word):
        raise OperadError(f"word {word!r} has repeated letters")
    rank = {v: r for r, v in enumerate(sorted(word), start=1)}
    return tuple(rank[v] for v in word)


def compose_blocks(tau, i, sigma):
    """Block-subdivision composition: permute blocks by tau^-1, the inner
    block by sigma^-1, and invert the concatenated word."""
    n, l = len(tau), len(sigma)
    if not 1 <= i <= n:
        raise OperadError(f"slot {i} out of range for arity {n}")
    sigma_inv = invert(sigma)
    blocks = []
    for k in range(1, n + 1):
        if k < i:
            blocks.append((k,))
        elif k == i:
            blocks.append(tuple(i - 1 + sigma_inv[r] for r in range(l)))
        else:
            blocks.append((k + l - 1,))
    tau_inv = invert(tau)
    word = []
    for j in range(n):
        word.extend(blocks[tau_inv[j] - 1])
    return invert(tuple(word))


def compose_formula(tau, i, sigma):
    """Closed-formula composition: values above tau(i) shift by l-1 and the
    inner word lands at positions i..i+l-1 on values tau(i)..tau(i)+l-1."""
    n, l = len(tau), len(sigma)
    if not 1 <= i <= n:
        raise OperadError(f"slot {i} out of range for arity {n}")
    anchor = tau[i - 1]

    def shifted(v):
        return v if v < anchor else v + l - 1

    out = []
    for j in range(1, n + l):
        if j < i:
            out.append(shifted(tau[j - 1]))
        elif j <= i + l - 1:
            out.append(anchor - 1 + sigma[j - i])
        else:
            out.append(shifted(tau[j - l]))
    return tuple(out)


def delete_and_standardize(word, i):
    """Drop the letter at position i (1-based) and standardize."""
    if not 1 <= i <= len(word):
        raise OperadError(f"position {i} out of range for arity {len(word)}")
    return standardize(word[: i - 1] + word[i:])


def concat(tau, sigma):
    """Shifted concatenation: tau followed by sigma raised above tau."""
    n = len(tau)
    return tuple(tau) + tuple(v + n for v in sigma)


def deconcat_coproduct(word):
    """All splits of the word into standardized prefix and suffix.

    Returns the (n+1)-term list [(left, right)] with left length j for
    j = 0..n; the empty factor is the arity-0 key ().
    """
    n = len(word)
    out = []
    for j in range(n + 1):
        left = standardize(word[:j]) if j else ()
        right = standardize(word[j:]) if j < n else ()
        out.append((left, right))
    return out


class AssocOperad:
    """Operad instance whose arity-n basis is the n! permutations."""

    label = "assoc"

    def __init__(self, field):
        self.field = field

    def signature(self):
        return ("assoc", self.field.signature())

    def arity_of(self, key):
        return len(key)

    def validate_basis(self, key, arity):
        key = tuple(key)
        if len(key) != arity or (key and not is_permutation(key)):
            raise OperadError(f"bad permutation key {key!r} for arity {arity}")
        return key

    def unit_one(self):
        return Element.basis(self, (1,))

    def unit_zero(self):
        return Element.basis(self, ())

    def multiplication(self):
        return Element.basis(self, (1, 2))

    def compose_basis(self, key, i, other):
        n = len(key)
        if n == 0:
            raise OperadError("arity-0 element has no composition slots")
        if not 1 <= i <= n:
            raise OperadError(f"slot {i} out of range for arity {n}")
        if len(other) == 0:
            if n == 1:
                return [((), self.field.one)]
            return [(delete_and_standardize(key, i), self.field.one)]
        return [(compose_formula(key, i, other), self.field.one)]

    def basis_keys(self, arity):
        if arity == 0:
            yield ()
            return
        from itertools import permutations

        for p in permutations(range(1, arity + 1)):
            yield p

    def dimension(self, arity):
        from math import factorial

        return 1 if arity == 0 else factorial(arity)

    def random_basis(self, arity, rng):
        if arity == 0:
            return ()
        word = list(range(1, arity + 1))
        rng.shuffle(word)
        return tuple(word)

    def format_basis(self, key):
        if not key:
            return "()"
        if len(key) <= 9:
            return "(" + "".join(str(v) for v in key) + ")"
        return "(" + ",".join(str(v) for v in key) + ")"

    def parse_basis(self, text):
        s = text.strip().strip("()")
        if not s:
            return ()
        vals = [int(t) for t in s.split(",")] if "," in s else [int(ch) for ch in s]
        key = tuple(vals)
        if not is_permutation(key):
            raise OperadError(f"{text!r} is not a permutation")
        return key

    def basis_to_json(self, key):
        return list(key)

    def basis_from_json(self, data):
        return tuple(int(v) for v in data)
