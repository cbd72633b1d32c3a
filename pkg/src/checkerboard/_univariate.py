"""Exact univariate polynomial helpers for Sturm sequences.

Polynomials are lists of Fractions, constant term first, with no trailing
zeros; the zero polynomial is ``[]``.
"""

from fractions import Fraction


def trim(p):
    p = [Fraction(c) for c in p]
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p):
    return len(p) - 1


def derivative(p):
    return trim([i * c for i, c in enumerate(p)][1:])


def evaluate(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def divmod_poly(a, b):
    a = trim(a)
    b = trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    lead = b[-1]
    while len(r) >= len(b) and r:
        k = len(r) - len(b)
        c = r[-1] / lead
        q[k] = c
        for i, bc in enumerate(b):
            r[i + k] -= c * bc
        r = trim(r)
    return trim(q), r


def gcd_poly(a, b):
    a, b = trim(a), trim(b)
    while b:
        a, b = b, divmod_poly(a, b)[1]
    if not a:
        return a
    return [c / a[-1] for c in a]


def sturm_chain(p):
    p = trim(p)
    chain = [p, derivative(p)]
    while chain[-1]:
        r = divmod_poly(chain[-2], chain[-1])[1]
        chain.append([-c for c in r])
    chain.pop()
    return chain


def _sign(v):
    return (v > 0) - (v < 0)


def sign_changes_at(chain, x):
    signs = [_sign(evaluate(p, x)) for p in chain]
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sign_changes_at_inf(chain, positive=True):
    signs = []
    for p in chain:
        s = _sign(p[-1])
        if not positive and degree(p) % 2:
            s = -s
        signs.append(s)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p, lo=None, hi=None):
    """Distinct real roots of ``p`` in ``(lo, hi]`` (whole line when omitted)."""
    chain = sturm_chain(p)
    a = sign_changes_at_inf(chain, positive=False) if lo is None else sign_changes_at(chain, lo)
    b = sign_changes_at_inf(chain, positive=True) if hi is None else sign_changes_at(chain, hi)
    return a - b


def squarefree_degree(p):
    p = trim(p)
    g = gcd_poly(p, derivative(p))
    return degree(p) - degree(g)


def root_bound(p):
    """Cauchy bound: every root has absolute value below it."""
    lead = abs(p[-1])
    return 1 + max((abs(c) / lead for c in p[:-1]), default=Fraction(0))


def isolate_roots(p):
    """Disjoint intervals ``(a, b]`` each holding exactly one distinct real root, left to right."""
    p = trim(p)
    chain = sturm_chain(p)
    B = root_bound(p)
    out = []

    def count(a, b):
        return sign_changes_at(chain, a) - sign_changes_at(chain, b)

    def split(a, b, k):
        if k == 0:
            return
        if k == 1:
            out.append((a, b))
            return
        mid = (a + b) / 2
        split(a, mid, count(a, mid))
        split(mid, b, count(mid, b))

    split(-B, B, count(-B, B))
    return out


def refine(p, interval, avoid=None):
    """Shrink an isolating interval of ``p`` until ``avoid`` has no root in it."""
    a, b = interval
    chain = sturm_chain(p)
    avoid_chain = sturm_chain(avoid) if avoid is not None else None
    while True:
        if avoid_chain is None:
            return a, b
        if (evaluate(avoid, a) != 0 and evaluate(avoid, b) != 0
                and sign_changes_at(avoid_chain, a) == sign_changes_at(avoid_chain, b)):
            return a, b
        mid = (a + b) / 2
        if sign_changes_at(chain, a) - sign_changes_at(chain, mid) == 1:
            b = mid
        else:
            a = mid
