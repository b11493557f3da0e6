"""Randomized and exhaustive identity checks with a deterministic JSON report.

Every check draws its randomness from a seed string built out of
(seed, suite, check, operad, trial), so reports are byte-identical for a
fixed seed no matter how many worker threads run the trials.
"""

import itertools
import os
import random
from concurrent.futures import ThreadPoolExecutor

from .assoc import AssocOperad, concat, deconcat_coproduct
from .cohomology import ComplexSpec, betti, differential_matrix
from .core import (
    aw_coproduct,
    boundary,
    brace,
    coboundary,
    counit,
    degeneracy,
    dot_product,
    face,
    gamma,
    multi_degeneracy,
    multi_face,
    odot_product,
    random_element,
)
from .elements import Element
from .endo import EndoOperad, cup_product, dual_numbers, ground_field_algebra, matrix2
from .linalg import equal_up_to_global_sign
from .scalars import get_field, power_sign
from .shift import ShiftOperad, gamma_shift
from .serialize import dumps

SUITES = ("simplicial", "chain", "coalgebra", "brace", "coincidence", "cohomology")

DEFAULT_TRIALS = 200
DEFAULT_SEED = 0
DEFAULT_FIELD = "gfp:32003"

# sampling caps: assoc words, shift tuple lengths, endo input counts
MAX_ARITY = {"assoc": 7, "shift": 6, "endo:dual": 4}
SHIFT_MAX_ENTRY = 12


def thread_count():
    raw = os.environ.get("OPERAD_LAB_THREADS", "1")
    try:
        k = int(raw)
    except ValueError:
        k = 1
    return max(k, 1)


def make_operads(field):
    return {
        "assoc": AssocOperad(field),
        "shift": ShiftOperad(field, max_entry=SHIFT_MAX_ENTRY),
        "endo:dual": EndoOperad(dual_numbers(field)),
    }


def _sample(operads, label, arity, rng, max_terms=2):
    return random_element(operads[label], arity, rng, max_terms=max_terms)


def _arity(label, rng, lo, hi_cap=None):
    hi = MAX_ARITY[label]
    if hi_cap is not None:
        hi = min(hi, hi_cap)
    return rng.randint(lo, hi)


def _fail(rng_inputs, lhs, rhs):
    return {"inputs": rng_inputs, "lhs": lhs.format(), "rhs": rhs.format()}


# ---------------------------------------------------------------------------
# per-trial checks: return None on success, a counterexample dict on failure


def check_face_face_low(ops, label, rng):
    n = _arity(label, rng, 2)
    x = _sample(ops, label, n, rng)
    j = rng.randint(2, n)
    i = rng.randint(1, j - 1)
    lhs = face(face(x, j), i)
    rhs = face(face(x, i), j - 1)
    if lhs != rhs:
        return _fail({"x": x.format(), "i": i, "j": j}, lhs, rhs)
    return None


def check_face_face_high(ops, label, rng):
    n = _arity(label, rng, 2)
    x = _sample(ops, label, n, rng)
    i = rng.randint(1, n - 1)
    j = rng.randint(1, i)
    lhs = face(face(x, j), i)
    rhs = face(face(x, i + 1), j)
    if lhs != rhs:
        return _fail({"x": x.format(), "i": i, "j": j}, lhs, rhs)
    return None


def check_degen_degen_low(ops, label, rng):
    n = _arity(label, rng, 1, MAX_ARITY[label] - 1)
    x = _sample(ops, label, n, rng)
    j = rng.randint(1, n)
    i = rng.randint(1, j)
    lhs = degeneracy(degeneracy(x, j), i)
    rhs = degeneracy(degeneracy(x, i), j + 1)
    if lhs != rhs:
        return _fail({"x": x.format(), "i": i, "j": j}, lhs, rhs)
    return None


def check_degen_degen_high(ops, label, rng):
    n = _arity(label, rng, 1, MAX_ARITY[label] - 1)
    x = _sample(ops, label, n, rng)
    i = rng.randint(2, n + 1)
    j = rng.randint(1, min(i - 1, n))
    lhs = degeneracy(degeneracy(x, j), i)
    rhs = degeneracy(degeneracy(x, i - 1), j)
    if lhs != rhs:
        return _fail({"x": x.format(), "i": i, "j": j}, lhs, rhs)
    return None


def check_face_degen_low(ops, label, rng):
    n = _arity(label, rng, 2)
    x = _sample(ops, label, n, rng)
    j = rng.randint(2, n)
    i = rng.randint(1, j - 1)
    lhs = face(degeneracy(x, j), i)
    rhs = degeneracy(face(x, i), j - 1)
    if lhs != rhs:
        return _fail({"x": x.format(), "i": i, "j": j}, lhs, rhs)
    return None


def check_face_degen_mid(ops, label, rng):
    n = _arity(label, rng, 1)
    x = _sample(ops, label, n, rng)
    j = rng.randint(1, n)
    i = rng.choice((j, j + 1))
    lhs = face(degeneracy(x, j), i)
    if lhs != x:
        return _fail({"x": x.format(), "i": i, "j": j}, lhs, x)
    return None


def check_face_degen_high(ops, label, rng):
    n = _arity(label, rng, 2)
    x = _sample(ops, label, n, rng)
    j = rng.randint(1, n - 1)
    i = rng.randint(j + 2, n + 1)
    lhs = face(degeneracy(x, j), i)
    rhs = degeneracy(face(x, i - 1), j)
    if lhs != rhs:
        return _fail({"x": x.format(), "i": i, "j": j}, lhs, rhs)
    return None


def _compat_shapes(label, rng):
    if label == "endo:dual":
        s = rng.randint(1, 2)
        ts = [rng.randint(1, 2) for _ in range(s)]
    else:
        s = rng.randint(1, 3)
        ts = [rng.randint(1, 3) for _ in range(s)]
    return s, ts


def check_face_gamma_compat(ops, label, rng):
    s, ts = _compat_shapes(label, rng)
    x = _sample(ops, label, s, rng, max_terms=1)
    blocks = [_sample(ops, label, t, rng, max_terms=1) for t in ts]
    slots = [rng.randint(1, t) for t in ts]
    lhs = multi_face(gamma(x, blocks), slots, ts)
    rhs = gamma(x, [face(b, j) for b, j in zip(blocks, slots)])
    if lhs != rhs:
        return _fail(
            {
                "x": x.format(),
                "blocks": [b.format() for b in blocks],
                "slots": slots,
            },
            lhs,
            rhs,
        )
    return None


def check_degen_gamma_compat(ops, label, rng):
    s, ts = _compat_shapes(label, rng)
    x = _sample(ops, label, s, rng, max_terms=1)
    blocks = [_sample(ops, label, t, rng, max_terms=1) for t in ts]
    slots = [rng.randint(1, t) for t in ts]
    lhs = multi_degeneracy(gamma(x, blocks), slots, ts)
    rhs = gamma(x, [degeneracy(b, j) for b, j in zip(blocks, slots)])
    if lhs != rhs:
        return _fail(
            {
                "x": x.format(),
                "blocks": [b.format() for b in blocks],
                "slots": slots,
            },
            lhs,
            rhs,
        )
    return None


def check_boundary_squared(ops, label, rng):
    n = _arity(label, rng, 0)
    x = _sample(ops, label, n, rng)
    lhs = boundary(boundary(x))
    if not lhs.is_zero():
        return _fail({"x": x.format()}, lhs, Element.zero(x.operad, lhs.arity))
    return None


def check_coboundary_squared(ops, label, rng):
    n = _arity(label, rng, 0)
    x = _sample(ops, label, n, rng)
    lhs = coboundary(coboundary(x))
    if not lhs.is_zero():
        return _fail({"x": x.format()}, lhs, Element.zero(x.operad, lhs.arity))
    return None


def check_anticommutation(ops, label, rng):
    n = _arity(label, rng, 1)
    x = _sample(ops, label, n, rng)
    lhs = boundary(coboundary(x))
    rhs = coboundary(boundary(x)).scale(power_sign(x.operad.field, 1))
    if lhs != rhs:
        return _fail({"x": x.format()}, lhs, rhs)
    return None


def _tensor2(pairs, field):
    acc = {}
    for a, b in pairs:
        for ka, ca in a.terms.items():
            for kb, cb in b.terms.items():
                k = ((a.arity, ka), (b.arity, kb))
                v = field.mul(ca, cb)
                acc[k] = field.add(acc[k], v) if k in acc else v
    return {k: v for k, v in acc.items() if not field.is_zero(v)}


def _tensor3(pairs, field, expand_left):
    acc = {}
    for a, b in pairs:
        inner = aw_coproduct(a) if expand_left else aw_coproduct(b)
        outer = b if expand_left else a
        for u, v in inner:
            for ku, cu in u.terms.items():
                for kv, cv in v.terms.items():
                    for ko, co in outer.terms.items():
                        if expand_left:
                            key = ((u.arity, ku), (v.arity, kv), (outer.arity, ko))
                        else:
                            key = ((outer.arity, ko), (u.arity, ku), (v.arity, kv))
                        w = field.mul(field.mul(cu, cv), co)
                        acc[key] = field.add(acc[key], w) if key in acc else w
    return {k: v for k, v in acc.items() if not field.is_zero(v)}


def check_coassociativity(ops, label, rng):
    field = ops[label].field
    n = _arity(label, rng, 0)
    x = _sample(ops, label, n, rng)
    pairs = aw_coproduct(x)
    lhs = _tensor3(pairs, field, expand_left=True)
    rhs = _tensor3(pairs, field, expand_left=False)
    if lhs != rhs:
        return {"inputs": {"x": x.format()}, "lhs": repr(sorted(lhs)), "rhs": repr(sorted(rhs))}
    return None


def check_counit_left(ops, label, rng):
    field = ops[label].field
    n = _arity(label, rng, 0)
    x = _sample(ops, label, n, rng)
    out = Element.zero(x.operad, n)
    for a, b in aw_coproduct(x):
        c = counit(a)
        if not field.is_zero(c):
            out = out + b.scale(c)
    if out != x:
        return _fail({"x": x.format()}, out, x)
    return None


def check_counit_right(ops, label, rng):
    field = ops[label].field
    n = _arity(label, rng, 0)
    x = _sample(ops, label, n, rng)
    out = Element.zero(x.operad, n)
    for a, b in aw_coproduct(x):
        c = counit(b)
        if not field.is_zero(c):
            out = out + a.scale(c)
    if out != x:
        return _fail({"x": x.format()}, out, x)
    return None


# ---------------------------------------------------------------------------
# brace suite (assoc only)


def brace_or_zero(x, args):
    """brace with the overflow convention: more arguments than inputs gives 0."""
    if len(args) > x.arity:
        total = x.arity - len(args) + sum(a.arity for a in args)
        return Element.zero(x.operad, max(total, 0))
    return brace(x, args)


def check_dot_vs_odot(ops, label, rng):
    field = ops[label].field
    r = rng.randint(1, 3)
    s = rng.randint(1, 3)
    p = _sample(ops, label, r, rng)
    q = _sample(ops, label, s, rng)
    lhs = dot_product(p, q)
    rhs = odot_product(p, q).scale(power_sign(field, r * s))
    if lhs != rhs:
        return _fail({"p": p.format(), "q": q.format()}, lhs, rhs)
    return None


def check_coboundary_derivation(ops, label, rng):
    field = ops[label].field
    r = rng.randint(1, 3)
    s = rng.randint(1, 3)
    p = _sample(ops, label, r, rng)
    q = _sample(ops, label, s, rng)
    lhs = coboundary(odot_product(p, q))
    rhs = odot_product(coboundary(p), q) + odot_product(p, coboundary(q)).scale(
        power_sign(field, r)
    )
    if lhs != rhs:
        return _fail({"p": p.format(), "q": q.format()}, lhs, rhs)
    return None


def check_boundary_derivation(ops, label, rng):
    field = ops[label].field
    r = rng.randint(1, 3)
    s = rng.randint(1, 3)
    p = _sample(ops, label, r, rng)
    q = _sample(ops, label, s, rng)
    lhs = boundary(odot_product(p, q))
    rhs = odot_product(boundary(p), q) + odot_product(p, boundary(q)).scale(
        power_sign(field, r)
    )
    if lhs != rhs:
        return _fail({"p": p.format(), "q": q.format()}, lhs, rhs)
    return None


def prejacobi_rhs(x, xs, ys):
    """Right side of the iterated-brace expansion for x{xs}{ys}."""
    field = x.operad.field
    s = len(xs)
    r = len(ys)
    total_arity = (
        x.arity - s + sum(a.arity for a in xs) - r + sum(a.arity for a in ys)
    )
    total = Element.zero(x.operad, total_arity)
    for bounds in itertools.product(range(r + 1), repeat=2 * s):
        cuts_lo = bounds[0::2]
        cuts_hi = bounds[1::2]
        ok = True
        prev = 0
        for a in range(s):
            if not (prev <= cuts_lo[a] <= cuts_hi[a]):
                ok = False
                break
            prev = cuts_hi[a]
        if not ok:
            continue
        exponent = 0
        for a in range(s):
            tail = sum(ys[q].arity - 1 for q in range(cuts_hi[a], r))
            exponent += (xs[a].arity - 1) * tail
        args = []
        cursor = 0
        dead = False
        for a in range(s):
            lo, hi = cuts_lo[a], cuts_hi[a]
            args.extend(ys[cursor:lo])
            inner = brace_or_zero(xs[a], ys[lo:hi])
            if inner.is_zero() and (hi - lo) > xs[a].arity:
                dead = True
                break
            args.append(inner)
            cursor = hi
        if dead:
            continue
        args.extend(ys[cursor:])
        total = total + brace_or_zero(x, args).scale(power_sign(field, exponent))
    return total


def check_pre_jacobi(ops, label, rng):
    s = rng.randint(1, 2)
    r = rng.randint(1, 2)
    x = _sample(ops, label, rng.randint(s, 3), rng, max_terms=1)
    xs = [_sample(ops, label, rng.randint(1, 2), rng, max_terms=1) for _ in range(s)]
    ys = [_sample(ops, label, rng.randint(1, 2), rng, max_terms=1) for _ in range(r)]
    mid = brace_or_zero(x, xs)
    lhs = brace_or_zero(mid, ys)
    rhs = prejacobi_rhs(x, xs, ys)
    if lhs != rhs:
        return _fail(
            {
                "x": x.format(),
                "inner": [a.format() for a in xs],
                "outer": [a.format() for a in ys],
            },
            lhs,
            rhs,
        )
    return None


def _boundary_brace_sides(ops, label, rng):
    field = ops[label].field
    n_args = rng.randint(1, 3)
    arity = rng.randint(n_args + 1, min(n_args + 3, MAX_ARITY[label]))
    p = _sample(ops, label, arity, rng, max_terms=1)
    zs = [_sample(ops, label, rng.randint(1, 2), rng, max_terms=1) for _ in range(n_args)]
    braced = brace(p, zs)
    lhs = boundary(braced)
    degs = [z.arity for z in zs]
    inner_sum = Element.zero(p.operad, braced.arity - 1)
    for s_idx in range(n_args):
        dz = boundary(zs[s_idx])
        if dz.is_zero():
            continue
        args = list(zs)
        args[s_idx] = dz
        delta = (
            braced.arity
            - zs[s_idx].arity
            + sum(degs[i] - 1 for i in range(s_idx))
        )
        inner_sum = inner_sum + brace(p, args).scale(power_sign(field, delta))
    return p, zs, lhs, inner_sum


def check_boundary_brace_literal(ops, label, rng):
    """Collapse claim: the (boundary p){zs} part is 0 or a single top-face term."""
    p, zs, lhs, inner_sum = _boundary_brace_sides(ops, label, rng)
    if p.arity % 2 == 0:
        rhs = inner_sum
    else:
        rhs = inner_sum - brace(face(p, p.arity), zs)
    if lhs != rhs:
        return _fail(
            {"p": p.format(), "args": [z.format() for z in zs]}, lhs, rhs
        )
    return None


def check_boundary_brace_termwise(ops, label, rng):
    """Leibniz form: boundary(p{zs}) = (boundary p){zs} + signed inner boundaries."""
    p, zs, lhs, inner_sum = _boundary_brace_sides(ops, label, rng)
    rhs = brace(boundary(p), zs) + inner_sum
    if lhs != rhs:
        return _fail(
            {"p": p.format(), "args": [z.format() for z in zs]}, lhs, rhs
        )
    return None


# ---------------------------------------------------------------------------
# coincidence suite


def check_coproduct_vs_deconcat(ops, label, rng):
    field = ops[label].field
    n = rng.randint(1, MAX_ARITY[label])
    x = _sample(ops, label, n, rng, max_terms=1)
    lhs = _tensor2(aw_coproduct(x), field)
    rhs = {}
    for key, coeff in x.terms.items():
        for left, right in deconcat_coproduct(key):
            k = ((len(left), left), (len(right), right))
            rhs[k] = field.add(rhs.get(k, field.zero), coeff)
    rhs = {k: v for k, v in rhs.items() if not field.is_zero(v)}
    if lhs != rhs:
        return {
            "inputs": {"x": x.format()},
            "lhs": repr(sorted(lhs)),
            "rhs": repr(sorted(rhs)),
        }
    return None


def check_odot_vs_concat(ops, label, rng):
    field = ops[label].field
    r = rng.randint(1, 3)
    s = rng.randint(1, 3)
    p = _sample(ops, label, r, rng)
    q = _sample(ops, label, s, rng)
    lhs = odot_product(p, q)
    rhs = Element.zero(ops[label], r + s)
    for kp, cp in p.terms.items():
        for kq, cq in q.terms.items():
            rhs = rhs + Element.basis(ops[label], concat(kp, kq)).scale(
                field.mul(cp, cq)
            )
    if lhs != rhs:
        return _fail({"p": p.format(), "q": q.format()}, lhs, rhs)
    return None


def _preset_ops(ambient_field):
    return (
        ("endo:k", EndoOperad(ground_field_algebra(ambient_field))),
        ("endo:dual@gfp:3", EndoOperad(dual_numbers(get_field("gfp:3")))),
        ("endo:m2@gfp:5", EndoOperad(matrix2(get_field("gfp:5")))),
    )


def make_cup_check(op):
    def check(ops, label, rng):
        r = rng.randint(1, 3)
        s = rng.randint(1, max(1, 3 - r))
        p = random_element(op, r, rng)
        q = random_element(op, s, rng)
        lhs = cup_product(p, q)
        rhs = odot_product(p, q)
        if lhs != rhs:
            return _fail({"p": p.format(), "q": q.format()}, lhs, rhs)
        return None

    return check


# ---------------------------------------------------------------------------
# batch checks: run once, return (status, failures, details, counterexample)


def batch_coderivation(ops, label, rng, trials):
    field = ops[label].field
    sign_values = (1, -1)
    viable = {}
    counterexample = None
    cap = min(MAX_ARITY[label], 5)
    for t in range(trials):
        n = rng.randint(1, cap)
        x = _sample(ops, label, n, rng)
        pairs = aw_coproduct(x)
        lhs = _tensor2(aw_coproduct(boundary(x)), field)
        left = _tensor2([(boundary(a), b) for a, b in pairs], field)
        right = _tensor2([(a, boundary(b)) for a, b in pairs], field)
        bidegrees = set()
        for tensor in (lhs, left, right):
            for (ka, kb) in tensor:
                bidegrees.add((ka[0], kb[0]))
        for bd in bidegrees:
            l_part = {k: v for k, v in lhs.items() if (k[0][0], k[1][0]) == bd}
            a_part = {k: v for k, v in left.items() if (k[0][0], k[1][0]) == bd}
            b_part = {k: v for k, v in right.items() if (k[0][0], k[1][0]) == bd}
            good = set()
            for s1, s2 in itertools.product(sign_values, repeat=2):
                comb = {}
                for k, v in a_part.items():
                    comb[k] = field.mul(field.from_int(s1), v)
                for k, v in b_part.items():
                    w = field.mul(field.from_int(s2), v)
                    comb[k] = field.add(comb[k], w) if k in comb else w
                comb = {k: v for k, v in comb.items() if not field.is_zero(v)}
                if comb == l_part:
                    good.add((s1, s2))
            if bd in viable:
                viable[bd] &= good
            else:
                viable[bd] = good
            if not viable[bd] and counterexample is None:
                counterexample = {
                    "inputs": {"x": x.format(), "bidegree": list(bd)},
                    "lhs": repr(sorted(l_part)),
                    "rhs": repr(sorted(a_part) + sorted(b_part)),
                }
    dead = sorted(bd for bd, signs in viable.items() if not signs)
    details = {
        "sign_patterns": {
            f"{bd[0]},{bd[1]}": sorted(list(s) for s in signs)
            for bd, signs in sorted(viable.items())
        },
        "elements_checked": trials,
    }
    failures = len(dead)
    status = "pass" if failures == 0 else "fail"
    return status, failures, details, counterexample


def batch_coproduct_exhaustive(ops, label, rng, trials):
    field = ops[label].field
    operad = ops[label]
    checked = 0
    for n in range(1, 6):
        for key in operad.basis_keys(n):
            x = Element.basis(operad, key)
            lhs = _tensor2(aw_coproduct(x), field)
            rhs = {}
            for left, right in deconcat_coproduct(key):
                k = ((len(left), left), (len(right), right))
                rhs[k] = field.add(rhs.get(k, field.zero), field.one)
            if lhs != rhs:
                return (
                    "fail",
                    1,
                    {"cases": checked},
                    {"inputs": {"x": x.format()}, "lhs": repr(sorted(lhs)), "rhs": repr(sorted(rhs))},
                )
            checked += 1
    return "pass", 0, {"cases": checked}, None


def batch_gamma_shift_closed_form(ops, label, rng, trials):
    operad = ops[label]
    field = operad.field
    block_keys = [()]
    for t in (1, 2):
        block_keys.extend(itertools.combinations(range(1, 5), t))
    checked = 0
    for n in (1, 2, 3):
        for key in itertools.combinations(range(1, 6), n):
            for blocks in itertools.product(block_keys, repeat=n):
                direct = gamma_shift(key, list(blocks))
                x = Element.basis(operad, key)
                args = [Element.basis(operad, b) for b in blocks]
                via_gamma = gamma(x, args)
                expect = Element.basis(operad, direct)
                if via_gamma != expect:
                    return (
                        "fail",
                        1,
                        {"cases": checked},
                        {
                            "inputs": {"x": x.format(), "blocks": [repr(b) for b in blocks]},
                            "lhs": via_gamma.format(),
                            "rhs": expect.format(),
                        },
                    )
                checked += 1
    return "pass", 0, {"cases": checked}, None


def make_batch_rank_comparison(op):
    def run(ops, label, rng, trials):
        degrees = []
        for n in (1, 2, 3):
            operadic = ComplexSpec(op, "coboundary", n, n, allow_large=True)
            classical = ComplexSpec(op, "hochschild", n, n, allow_large=True)
            mat_o = differential_matrix(operadic, n)
            mat_c = differential_matrix(classical, n)
            sign = equal_up_to_global_sign(mat_o, mat_c)
            if sign is None:
                return (
                    "fail",
                    1,
                    {"degrees": degrees},
                    {
                        "inputs": {"degree": n},
                        "lhs": f"operadic rank {mat_o.rank()}",
                        "rhs": f"classical rank {mat_c.rank()}",
                    },
                )
            degrees.append({"degree": n, "sign": sign, "rank": mat_o.rank()})
        return "pass", 0, {"degrees": degrees}, None

    return run


def make_batch_betti(op, lo, hi, expected):
    def run(ops, label, rng, trials):
        spec = ComplexSpec(op, "hochschild", lo, hi, allow_large=True)
        report = betti(spec)
        got = report["dims"]
        if got != list(expected):
            return (
                "fail",
                1,
                {"dims": got, "expected": list(expected)},
                {"inputs": {"degrees": report["degrees"]}, "lhs": repr(got), "rhs": repr(list(expected))},
            )
        return "pass", 0, {"dims": got, "ranks": report["ranks"]}, None

    return run


def batch_field_independence(ops, label, rng, trials):
    dims = {}
    for field_label in ("q", "gfp:32003"):
        op = EndoOperad(dual_numbers(get_field(field_label)))
        spec = ComplexSpec(op, "hochschild", 0, 3, allow_large=True)
        dims[field_label] = betti(spec)["dims"]
    if dims["q"] != dims["gfp:32003"]:
        return (
            "fail",
            1,
            {"dims": dims},
            {"inputs": {}, "lhs": repr(dims["q"]), "rhs": repr(dims["gfp:32003"])},
        )
    return "pass", 0, {"dims": dims["q"]}, None


# ---------------------------------------------------------------------------
# catalog and runner

TRIAL_CHECKS = {
    "simplicial": [
        ("face_face_low", check_face_face_low, "all", "assert"),
        ("face_face_high", check_face_face_high, "all", "assert"),
        ("degen_degen_low", check_degen_degen_low, "all", "assert"),
        ("degen_degen_high", check_degen_degen_high, "all", "assert"),
        ("face_degen_low", check_face_degen_low, "all", "assert"),
        ("face_degen_mid", check_face_degen_mid, "all", "assert"),
        ("face_degen_high", check_face_degen_high, "all", "assert"),
        ("face_gamma_compat", check_face_gamma_compat, "all", "report"),
        ("degen_gamma_compat", check_degen_gamma_compat, "all", "report"),
    ],
    "chain": [
        ("boundary_squared", check_boundary_squared, "all", "assert"),
        ("coboundary_squared", check_coboundary_squared, "all", "assert"),
        ("anticommutation", check_anticommutation, "all", "assert"),
    ],
    "coalgebra": [
        ("coassociativity", check_coassociativity, "all", "assert"),
        ("counit_left", check_counit_left, "all", "assert"),
        ("counit_right", check_counit_right, "all", "assert"),
    ],
    "brace": [
        ("dot_vs_odot", check_dot_vs_odot, "assoc", "assert"),
        ("coboundary_derivation", check_coboundary_derivation, "assoc", "assert"),
        ("boundary_derivation", check_boundary_derivation, "assoc", "assert"),
        ("pre_jacobi", check_pre_jacobi, "assoc", "assert"),
        ("boundary_brace_literal", check_boundary_brace_literal, "assoc", "assert"),
        ("boundary_brace_termwise", check_boundary_brace_termwise, "assoc", "assert"),
    ],
    "coincidence": [
        ("coproduct_vs_deconcat", check_coproduct_vs_deconcat, "assoc", "assert"),
        ("odot_vs_concat", check_odot_vs_concat, "assoc", "assert"),
    ],
    "cohomology": [],
}

ALL_OPERADS = ("assoc", "shift", "endo:dual")


def _batch_catalog(field):
    presets = _preset_ops(field)
    catalog = {
        "coalgebra": [
            ("coderivation_sign_pattern", batch_coderivation, label)
            for label in ALL_OPERADS
        ],
        "coincidence": [
            ("coproduct_vs_deconcat_exhaustive", batch_coproduct_exhaustive, "assoc"),
            ("gamma_closed_form", batch_gamma_shift_closed_form, "shift"),
        ],
        "cohomology": [],
    }
    for preset_label, op in presets:
        catalog["coincidence"].append(
            ("cup_vs_odot", make_cup_check(op), preset_label, "trial")
        )
        catalog["coincidence"].append(
            ("coboundary_vs_classical", make_batch_rank_comparison(op), preset_label)
        )
    k_op = EndoOperad(ground_field_algebra(field))
    dual3 = EndoOperad(dual_numbers(get_field("gfp:3")))
    m25 = EndoOperad(matrix2(get_field("gfp:5")))
    catalog["cohomology"] = [
        ("betti_ground_field", make_batch_betti(k_op, 1, 3, (0, 0, 0)), "endo:k"),
        ("betti_dual_numbers", make_batch_betti(dual3, 0, 3, (2, 1, 1, 1)), "endo:dual@gfp:3"),
        ("betti_matrix_algebra", make_batch_betti(m25, 0, 2, (1, 0, 0)), "endo:m2@gfp:5"),
        ("field_independence", batch_field_independence, "endo:dual"),
    ]
    return catalog


def _run_trials(fn, ops, operad_label, suite, name, seed, trials):
    def one(t):
        rng = random.Random(f"{seed}:{suite}:{name}:{operad_label}:{t}")
        return fn(ops, operad_label, rng)

    workers = thread_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(one, range(trials)))
    else:
        results = [one(t) for t in range(trials)]
    failures = 0
    first = None
    for t, res in enumerate(results):
        if res is not None:
            failures += 1
            if first is None:
                first = dict(res)
                first["trial"] = t
    return failures, first


def run_verify(seed=DEFAULT_SEED, trials=DEFAULT_TRIALS, field_label=DEFAULT_FIELD,
               suites=None, operads=None):
    """Run the identity suites and return the report dict."""
    field = get_field(field_label)
    ops = make_operads(field)
    wanted_suites = list(suites) if suites else list(SUITES)
    for s in wanted_suites:
        if s not in SUITES:
            raise ValueError(f"unknown suite {s!r}")
    wanted_operads = set(operads) if operads else None
    batches = _batch_catalog(field)

    def skipped(label):
        return wanted_operads is not None and label not in wanted_operads

    checks = []
    total_failures = 0
    for suite in SUITES:
        if suite not in wanted_suites:
            continue
        for name, fn, scope, kind in TRIAL_CHECKS[suite]:
            labels = list(ALL_OPERADS) if scope == "all" else [scope]
            for label in labels:
                if skipped(label):
                    continue
                failures, first = _run_trials(fn, ops, label, suite, name, seed, trials)
                row = {
                    "suite": suite,
                    "check": name,
                    "operad": label,
                    "trials": trials,
                    "failures": failures if kind == "assert" else 0,
                    "status": "pass" if failures == 0 else ("fail" if kind == "assert" else "reported"),
                }
                if kind == "report":
                    row["details"] = {"discrepancies": failures}
                if first is not None:
                    row["counterexample"] = first
                if kind == "assert":
                    total_failures += failures
                checks.append(row)
        for entry in batches.get(suite, ()):
            if len(entry) == 4 and entry[3] == "trial":
                name, fn, label, _ = entry
                if skipped(label):
                    continue
                failures, first = _run_trials(fn, ops, label, suite, name, seed, trials)
                row = {
                    "suite": suite,
                    "check": name,
                    "operad": label,
                    "trials": trials,
                    "failures": failures,
                    "status": "pass" if failures == 0 else "fail",
                }
                if first is not None:
                    row["counterexample"] = first
                total_failures += failures
                checks.append(row)
                continue
            name, fn, label = entry
            if skipped(label):
                continue
            rng = random.Random(f"{seed}:{suite}:{name}:{label}:batch")
            status, failures, details, counterexample = fn(ops, label, rng, trials)
            row = {
                "suite": suite,
                "check": name,
                "operad": label,
                "trials": trials,
                "failures": failures,
                "status": status,
                "details": details,
            }
            if counterexample is not None:
                row["counterexample"] = counterexample
            total_failures += failures
            checks.append(row)

    return {
        "seed": seed,
        "trials": trials,
        "field": field_label,
        "suites": wanted_suites,
        "checks": checks,
        "failures": total_failures,
        "status": "ok" if total_failures == 0 else "fail",
    }


def report_to_json(report):
    return dumps(report)
