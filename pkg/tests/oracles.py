"""Independent oracles the tests compare the library against.

Everything here is computed by a different route than the library code:
multiplicities by weight counting instead of closed-form ranges, group
closures by brute-force tuple arithmetic instead of homomorphism
criteria, character fusion by summing over group elements instead of
classes, and sign rules from phase bookkeeping of the diagonal
generator.  Expected values quoted in tests were frozen from these
oracles by hand before the library existed.
"""

from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction


# ---------------------------------------------------------------------------
# ladder tensor multiplicities by weight counting


def su2_multiplicity(n: int, m: int, k: int) -> int:
    """Multiplicity of the (k+1)-dim irreducible inside (n+1) (x) (m+1).

    Counts weights of the product and peels: mult(k) = #weights equal to
    k minus #weights equal to k + 2.
    """
    weights = Counter(
        (n - 2 * i) + (m - 2 * j) for i in range(n + 1) for j in range(m + 1)
    )
    return max(0, weights.get(k, 0) - weights.get(k + 2, 0))


def so3_multiplicity(j: int, k: int, l: int) -> int:
    """Same weight-counting argument for odd-dimensional labels only."""
    weights = Counter(
        (2 * j - 2 * i) + (2 * k - 2 * jj) for i in range(2 * j + 1) for jj in range(2 * k + 1)
    )
    return max(0, weights.get(2 * l, 0) - weights.get(2 * l + 2, 0))


# ---------------------------------------------------------------------------
# sign rule for the double ladder from diagonal-generator phases


def double_ladder_phase(sign: int, n: int) -> complex:
    """Twist of the (sign, n) model: sign when n is even, sign*i when odd."""
    return sign * (1j if n % 2 else 1)


def double_ladder_sign(eps: int, n: int, delta: int, m: int) -> int:
    """Output sign of every constituent of (eps,n) (x) (delta,m).

    The diagonal generator of the product carries the phase product, and
    a constituent at the forced parity (n + m mod 2) must match it; the
    resulting sign is constant along the whole range.
    """
    target = double_ladder_phase(eps, n) * double_ladder_phase(delta, m)
    parity = (n + m) % 2
    for sigma in (1, -1):
        if abs(double_ladder_phase(sigma, parity) - target) < 1e-12:
            return sigma
    raise AssertionError("phase bookkeeping failed")


# ---------------------------------------------------------------------------
# brute-force word group arithmetic (tuples of (factor, exponent))


def _reduce(word, orders):
    out = []
    for factor, exp in word:
        m = orders[factor]
        if m is not None:
            exp %= m
        if exp == 0:
            continue
        if out and out[-1][0] == factor:
            prev_f, prev_e = out.pop()
            e = prev_e + exp
            if m is not None:
                e %= m
            if e:
                out.append((prev_f, e))
        else:
            out.append((factor, exp))
    # merging can create fresh adjacencies; iterate until stable
    tup = tuple(out)
    return tup if tup == tuple(word) else _reduce(tup, orders)


def bf_mul(a, b, orders):
    return _reduce(tuple(a) + tuple(b), orders)


def bf_inv(a, orders):
    return _reduce(tuple((f, -e) for f, e in reversed(a)), orders)


def word_length(a, orders) -> int:
    total = 0
    for f, e in a:
        m = orders[f]
        total += abs(e) if m is None else min(e % m, (-e) % m)
    return total


def bf_ball(orders, radius: int):
    """All elements of length <= radius by breadth-first products."""
    letters = []
    for f, m in enumerate(orders):
        exps = range(1, m) if m is not None else range(-radius, radius + 1)
        for e in exps:
            if e == 0:
                continue
            w = _reduce(((f, e),), orders)
            if w and word_length(w, orders) <= radius:
                letters.append(w)
    seen = {(): 0}
    frontier = [()]
    while frontier:
        nxt = []
        for w in frontier:
            for l in letters:
                prod = bf_mul(w, l, orders)
                if prod not in seen and word_length(prod, orders) <= radius:
                    seen[prod] = 0
                    nxt.append(prod)
        frontier = nxt
    return set(seen)


def bf_normal_closure_in_ball(orders, generators, radius: int, slack: int = 2):
    """Normal closure of the generators intersected with the ball.

    Works inside the ball of radius + slack so products that leave and
    come back are not lost, then intersects down.
    """
    big = radius + slack
    ball = bf_ball(orders, big)
    gens = {_reduce(tuple(g), orders) for g in generators}
    conjugators = bf_ball(orders, slack + 1)
    closure = {()}
    closure |= {g for g in gens if g in ball}
    changed = True
    while changed:
        changed = False
        additions = set()
        for x in closure:
            for t in conjugators:
                c = bf_mul(bf_mul(t, x, orders), bf_inv(t, orders), orders)
                if c in ball and c not in closure:
                    additions.add(c)
            for y in closure:
                p = bf_mul(x, y, orders)
                if p in ball and p not in closure:
                    additions.add(p)
            inv = bf_inv(x, orders)
            if inv in ball and inv not in closure:
                additions.add(inv)
        if additions:
            closure |= additions
            changed = True
    return {w for w in closure if word_length(w, orders) <= radius}


def bf_order(word, orders, bound: int = 64):
    """Order by honest powering, None when it exceeds the bound."""
    w = _reduce(tuple(word), orders)
    acc = ()
    for k in range(1, bound + 1):
        acc = bf_mul(acc, w, orders)
        if not acc:
            return k
    return None


# ---------------------------------------------------------------------------
# S3 fusion by summing characters over the 6 permutations


S3_ELEMENTS = list(itertools.permutations(range(3)))


def _perm_compose(p, q):
    return tuple(p[q[i]] for i in range(3))


def s3_character_value(name: str, perm) -> int:
    fixed = sum(1 for i in range(3) if perm[i] == i)
    parity = 1
    seen = set()
    for start in range(3):
        if start in seen:
            continue
        length = 0
        cur = start
        while cur not in seen:
            seen.add(cur)
            cur = perm[cur]
            length += 1
        if length % 2 == 0:
            parity = -parity
    if name == "triv":
        return 1
    if name == "sgn":
        return parity
    if name == "std":
        return fixed - 1
    raise KeyError(name)


def s3_fusion_mult(a: str, b: str, c: str) -> int:
    total = Fraction(0)
    for g in S3_ELEMENTS:
        total += Fraction(
            s3_character_value(a, g) * s3_character_value(b, g) * s3_character_value(c, g)
        )
    val = total / len(S3_ELEMENTS)
    assert val.denominator == 1 and val >= 0
    return int(val)


# ---------------------------------------------------------------------------
# frozen q-integers at q = -1/2 (worked by hand from the defining ratio)


QINT_AT_MINUS_HALF = {
    0: Fraction(0),
    1: Fraction(1),
    2: Fraction(-5, 2),
    3: Fraction(21, 4),
    4: Fraction(-85, 8),
}
