"""Ideal-membership certificates ``K^N Q`` and ``K^N Qt`` in the differential ideal of ``P``.

Polynomials live in ``Q[t, x, F, F_t, F_x, F_tt, ...]``: one indeterminate per
partial derivative of the unknown ``F`` up to order ``d`` (listed by order,
then by decreasing number of ``t``).  For ``d = 2`` these are the eight
indeterminates ``t, x, F, F_t, F_x, F_tt, F_tx, F_xx``.

``P = -t^(d-1) F + t^(d-1) + x (t + x F^d)^d`` and the generators are its
total derivatives ``P_v`` up to order ``d``.  Each ``P_v`` with ``|v| = h >= 1``
equals ``K F_v`` plus terms in derivatives of order below ``h``, where
``K = dP/dF``.  Eliminating derivatives from the top order down, with the
substitution ``F_v -> K F_v - P_v`` applied to homogeneous parts, turns
``K^N Q`` into a polynomial ``Q_0`` in ``t, x, F`` alone; membership then
reduces to divisibility of ``Q_0`` by ``P``.

Cofactors are collected along the way so the result is a checkable identity
``K^N Q + sum_v c_v P_v = 0``.
"""

import time
from dataclasses import dataclass, field

from .diffops import OperatorId, operator_factors
from .enumeration import GuardExceeded
from .exactalg import MultiPoly
from .exactalg.multipoly import BITS, MASK


def jet_indices(d):
    """Derivative multi-indices ``(a, b)`` (``a`` t-derivatives, ``b`` x-derivatives) up to order ``d``."""
    return [(h - b, b) for h in range(d + 1) for b in range(h + 1)]


def jet_name(v):
    a, b = v
    return "F" if a + b == 0 else "F_" + "t" * a + "x" * b


def ring_names(d):
    return ("t", "x") + tuple(jet_name(v) for v in jet_indices(d))


def order_names(d, h):
    return [jet_name((h - b, b)) for b in range(h + 1)]


def total_derivative(G, var, d):
    """``D_t`` or ``D_x`` of ``G`` treating each ``F_v`` as a function of ``t`` and ``x``."""
    names = G.names
    out = G.diff(var)
    for a, b in jet_indices(d):
        name = jet_name((a, b))
        if name not in names or not G.uses([name]):
            continue
        nxt = (a + 1, b) if var == "t" else (a, b + 1)
        if sum(nxt) > d:
            raise ValueError(f"derivative of {name} leaves the order-{d} jet ring")
        out = out + G.diff(name) * MultiPoly.var(names, jet_name(nxt))
    return out


@dataclass
class IdealSystem:
    d: int
    names: tuple
    P: MultiPoly
    generators: dict
    K: MultiPoly
    Q: MultiPoly
    Qt: MultiPoly

    def __getattr__(self, item):
        # P_t, P_x, P_tt, ... as attributes
        if item.startswith("P_"):
            gens = self.__dict__.get("generators", {})
            key = "F_" + item[2:]
            if key in gens:
                return gens[key]
        raise AttributeError(item)

    @property
    def N(self):
        return sum(self.d // j for j in range(1, self.d + 1))


def _apply_formal(op, F, d):
    """``op F`` with ``theta_t = t D_t`` and ``theta_x = x D_x`` acting on jet polynomials."""
    names = F.names
    t = MultiPoly.var(names, "t")
    x = MultiPoly.var(names, "x")
    pre, dt, dx, factors = operator_factors(op)
    G = F
    for a, alpha, beta in factors:
        nxt = G.scale(a) if a else MultiPoly.constant(names, 0)
        if alpha:
            nxt = nxt + (t * total_derivative(G, "t", d)).scale(alpha)
        if beta:
            nxt = nxt + (x * total_derivative(G, "x", d)).scale(beta)
        G = nxt
    return G.mul_monomial(tuple([dt, dx] + [0] * (len(names) - 2)), pre)


def build_system(d):
    """``P``, its total derivatives up to order ``d``, ``K``, ``Q = (DL - DR) F`` and ``Qt = (DLt - DRt) F``."""
    if d < 2:
        raise ValueError("d must be >= 2")
    names = ring_names(d)
    t, x, F = (MultiPoly.var(names, n) for n in ("t", "x", "F"))
    P = -(t ** (d - 1)) * F + t ** (d - 1) + x * (t + x * F**d) ** d
    gens = {"F": P}
    for a, b in jet_indices(d)[1:]:
        if a:
            gens[jet_name((a, b))] = total_derivative(gens[jet_name((a - 1, b))], "t", d)
        else:
            gens[jet_name((a, b))] = total_derivative(gens[jet_name((a, b - 1))], "x", d)
    K = P.diff("F")
    ops = {tag: _apply_formal(OperatorId(tag, d), F, d) for tag in ("DL", "DR", "DLt", "DRt")}
    return IdealSystem(d, names, P, gens, K, ops["DL"] - ops["DR"], ops["DLt"] - ops["DRt"])


# -- ring changes --------------------------------------------------------------------------


def _remap(p, names):
    """Re-express ``p`` in the ring ``names`` (every used variable must be present)."""
    if p.names == names:
        return p
    pos = []
    for i, n in enumerate(p.names):
        pos.append((i, names.index(n) if n in names else None))
    c = {}
    for k, v in p._c.items():
        nk = 0
        for i, j in pos:
            e = (k >> (BITS * i)) & MASK
            if e:
                if j is None:
                    raise ValueError(f"variable {p.names[i]} missing from target ring")
                nk |= e << (BITS * j)
        c[nk] = v
    return MultiPoly._raw(tuple(names), c)


def _placeholder(name):
    return "p" + name[1:]


@dataclass
class Elimination:
    Q0: MultiPoly
    cofactors: dict
    steps: list = field(default_factory=list)


def _eliminate_one(sys, R, track, max_terms):
    d = sys.d
    ext = sys.names + tuple(_placeholder(n) for n in sys.names[3:])
    K = _remap(sys.K, ext)
    gens_ext = {}
    cur = _remap(R, ext)
    step_cofs = {}
    steps = []
    for h in range(d, 0, -1):
        vars_h = order_names(d, h)
        d_h = d // h
        deg = cur.degree_in(vars_h)
        if deg > d_h:
            raise ArithmeticError(f"degree {deg} in order-{h} derivatives exceeds {d_h}")
        u = {}
        for name in vars_h:
            g = gens_ext.setdefault(name, _remap(sys.generators[name], ext))
            u[name] = K * MultiPoly.var(ext, name) - g
            if u[name].uses([name]):
                raise ArithmeticError(f"{name} survives the substitution")
            if track:
                u[name] = u[name] + MultiPoly.var(ext, _placeholder(name))
        parts = cur.homogeneous_parts(vars_h)
        Kpow = [MultiPoly.constant(ext, 1)]
        for _ in range(d_h):
            Kpow.append(Kpow[-1] * K)
        nxt = MultiPoly.constant(ext, 0)
        for j, part in parts.items():
            nxt = nxt + Kpow[d_h - j] * part.substitute(u)
        if track:
            nxt, step_cofs[h] = _split_placeholders(nxt, vars_h, ext, gens_ext, sys)
        cur = nxt
        steps.append({"h": h, "d_h": d_h, "terms": len(cur)})
        if max_terms is not None and len(cur) > max_terms:
            raise GuardExceeded(f"intermediate polynomial at order {h} has {len(cur)} terms (> {max_terms}); "
                                f"completed steps: {steps}")
    # Q_{h-1} = K^{d_h} Q_h - sum_v c_v P_v, and later steps multiply by K^{d_j}, j < h
    base = sys.names
    cof = {}
    for h, step_cof in step_cofs.items():
        e_h = sum(d // j for j in range(1, h))
        Kpow = K**e_h
        for name, c in step_cof.items():
            cof[name] = cof.get(name, MultiPoly.constant(ext, 0)) - Kpow * c
    return Elimination(_remap(cur, base), {k: _remap(v, base) for k, v in cof.items()}, steps)


def _split_placeholders(poly, vars_h, ext, gens_ext, sys):
    """Split ``poly(p)`` into ``poly(0)`` and cofactors ``c_v`` with ``poly(P) - poly(0) = sum c_v P_v``."""
    pnames = [_placeholder(n) for n in vars_h]
    idx = [ext.index(n) for n in pnames]
    base = {}
    buckets = {n: {} for n in vars_h}
    for k, v in poly._c.items():
        for name, i in zip(vars_h, idx):
            if (k >> (BITS * i)) & MASK:
                buckets[name][k - (1 << (BITS * i))] = v
                break
        else:
            base[k] = v
    subst = {p: gens_ext[n] for p, n in zip(pnames, vars_h)}
    cof = {}
    for name, c in buckets.items():
        if c:
            cp = MultiPoly._raw(ext, c)
            if cp.uses(pnames):
                cp = cp.substitute(subst)
            cof[name] = cp
    return MultiPoly._raw(ext, base), cof


def eliminate(sys, track_cofactors=False, max_terms=None):
    """``(Q0, Qt0)`` in ``Q[t, x, F]`` with ``Q0 = K^N Q`` and ``Qt0 = K^N Qt`` modulo the ideal.

    With ``track_cofactors`` returns the two :class:`Elimination` records
    instead, each carrying ``Q0`` and the cofactors ``c_v`` of the
    generators with ``K^N Q + sum_v c_v P_v = Q0``.
    """
    a = _eliminate_one(sys, sys.Q, track_cofactors, max_terms)
    b = _eliminate_one(sys, sys.Qt, track_cofactors, max_terms)
    if track_cofactors:
        return a, b
    return a.Q0, b.Q0


# -- division by P ---------------------------------------------------------------------------


def divide_by_P(Q0, P):
    """Exact quotient ``S`` with ``Q0 = S P`` or ``None``.

    Long division in ``F`` over ``Q[t, x]``.  The leading ``F``-coefficient of
    ``P`` is the monomial ``x^(d+1)``; dividing by it is exact or fails, so a
    polynomial quotient exists exactly when every step divides and the
    remainder vanishes.
    """
    names = P.names
    iF = names.index("F")
    sh = BITS * iF
    degP = P.degree_in(["F"])
    lead = P.coefficient_in("F", degP)
    if len(lead) != 1:
        raise ValueError("leading F-coefficient of P is not a monomial")
    (lk, lv), = lead._c.items()
    lead_exps = [(lk >> (BITS * i)) & MASK for i in range(len(names))]
    R = Q0
    S = {}
    while R:
        degR = R.degree_in(["F"])
        if degR < degP:
            return None
        top = R.coefficient_in("F", degR)
        q = {}
        for k, v in top._c.items():
            exps = [(k >> (BITS * i)) & MASK for i in range(len(names))]
            if any(e < le for e, le in zip(exps, lead_exps)):
                return None
            nk = k - lk + ((degR - degP) << sh)
            q[nk] = v / lv if v % lv else v // lv
        qp = MultiPoly._raw(names, q)
        for k, v in q.items():
            S[k] = S.get(k, 0) + v
        R = R - qp * P
    return MultiPoly._raw(names, {k: v for k, v in S.items() if v})


def divisibility_check(Q0, P):
    """True when ``P`` divides ``Q0``; the quotient is confirmed by remultiplication."""
    S = divide_by_P(Q0, P)
    return S is not None and S * P == Q0


# -- certificate ---------------------------------------------------------------------------------

MAX_D_DEFAULT = 4
MAX_D_LONG = 6


@dataclass
class Certificate:
    d: int
    N: int
    names: tuple
    quotient: MultiPoly
    quotient_t: MultiPoly
    cofactors: dict
    cofactors_t: dict

    def to_json(self):
        def block(S, cof):
            return {
                "quotient": S.to_json(),
                "cofactors": {("P" + k[1:] if k != "F" else "P"): v.to_json() for k, v in sorted(cof.items())},
            }
        return {"d": self.d, "N": self.N, "variables": list(self.names),
                "Q": block(self.quotient, self.cofactors), "Qt": block(self.quotient_t, self.cofactors_t)}


def witness_residual(sys, Q, N, cofactors):
    """``K^N Q + sum_v c_v P_v``; zero for a valid certificate."""
    total = sys.K**N * Q
    for name, c in cofactors.items():
        total = total + c * sys.generators[name]
    return total


def ideal_certificate(d, long_run=False, check_witness=True, max_terms=None):
    """Run build, elimination, division and (optionally) the witness re-expansion.

    Returns ``(CheckResult, Certificate or None)``.  ``d`` above 4 requires
    ``long_run``; nothing above 6 is attempted.
    """
    from .genfun import CheckResult

    limit = MAX_D_LONG if long_run else MAX_D_DEFAULT
    if d > limit:
        raise GuardExceeded(f"ideal certificate for d={d} needs the long-run flag (limit {limit})")
    start = time.perf_counter()
    sys = build_system(d)
    ea, eb = eliminate(sys, track_cofactors=True, max_terms=max_terms)
    Sa = divide_by_P(ea.Q0, sys.P)
    Sb = divide_by_P(eb.Q0, sys.P)
    detail = {
        "N": sys.N,
        "terms": {"P": len(sys.P), "K": len(sys.K), "Q": len(sys.Q), "Qt": len(sys.Qt),
                  "Q0": len(ea.Q0), "Qt0": len(eb.Q0)},
        "divides_Q0": Sa is not None and Sa * sys.P == ea.Q0,
        "divides_Qt0": Sb is not None and Sb * sys.P == eb.Q0,
    }
    cert = None
    ok = detail["divides_Q0"] and detail["divides_Qt0"]
    if ok:
        cof_a = dict(ea.cofactors)
        cof_a["F"] = cof_a.get("F", MultiPoly.constant(sys.names, 0)) - Sa
        cof_b = dict(eb.cofactors)
        cof_b["F"] = cof_b.get("F", MultiPoly.constant(sys.names, 0)) - Sb
        cert = Certificate(d, sys.N, sys.names, Sa, Sb, cof_a, cof_b)
        if check_witness:
            wa = witness_residual(sys, sys.Q, sys.N, cof_a).is_zero()
            wb = witness_residual(sys, sys.Qt, sys.N, cof_b).is_zero()
            detail["witness_Q"] = wa
            detail["witness_Qt"] = wb
            ok = wa and wb
    return CheckResult("ideal", "pass" if ok else "fail", {"d": d}, detail, time.perf_counter() - start), cert
