"""Independent reference computations used only by the tests."""
import itertools
from fractions import Fraction
from math import comb, factorial


def aperiodic_necklaces(n, length):
    """Count primitive words of the given length, divided by the length."""
    primitive = 0
    for w in itertools.product(range(n), repeat=length):
        if all(w != w[d:] + w[:d] for d in range(1, length)):
            primitive += 1
    assert primitive % length == 0
    return primitive // length


def fraction_rank(rows):
    m = [[Fraction(v) for v in r] for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        p = next((r for r in range(rank, len(m)) if m[r][c]), None)
        if p is None:
            continue
        m[rank], m[p] = m[p], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c]:
                f = m[r][c] / m[rank][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def multinomial(exps):
    out = factorial(sum(exps))
    for e in exps:
        out //= factorial(e)
    return out


def binomial(a, b):
    return comb(a + b, a)


def expand_word(w):
    """Tensor image of a bracket tree by explicit recursion on word lists."""
    from lieshadow.hall_words import Leaf

    if isinstance(w, Leaf):
        return {(w.index,): 1}
    a, b = expand_word(w.left), expand_word(w.right)
    out = {}
    for u, cu in a.items():
        for v, cv in b.items():
            out[u + v] = out.get(u + v, 0) + cu * cv
            out[v + u] = out.get(v + u, 0) - cu * cv
    return {k: c for k, c in out.items() if c}
