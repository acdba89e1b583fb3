"""The three-variable invariant H(t, y, z) of a knotoid Gauss diagram.

Every chord c gets a degree d(c): the signed count of chords crossing it,
counted +1 from the right part r(c) and -1 from the left part l(c).  The
crossing chords split further by n = gcd(|d(c)|, |d(e)|), and each class
contributes an index polynomial

    Ind_c^n(z) = sum_{e in r^n} sgn(e) z^{phi(d(e))}
               - sum_{e in l^n} sgn(e) z^{phi(-d(e))}

with exponents reduced mod |d(c)| under the chosen policy.  The invariant
collects, over all chords and all n >= 1,

    H = sum sgn(c) (t^{Ind_c^n(z)} - 1) y^n,

stored sparsely as coefficients on t-exponent polynomials plus a constant
per y-stratum.  Pairs with gcd 0 (both degrees zero) are skipped unless
include_n0 is set.
"""

from __future__ import annotations

import json
import math
import re
from collections import defaultdict, namedtuple

from .gauss import SINGULAR, GaussCodeError, GaussDiagram
from .zpoly import ReductionPolicy, ZPoly, reduce_exponent, reduce_poly

__all__ = [
    "TermKey",
    "Invariant",
    "degree",
    "crossing_partition",
    "n_partition",
    "index_function",
    "compute_H",
    "invariant_equal",
    "invariant_sub",
    "invariant_neg",
    "subst_t_inverse",
    "subst_z_inverse",
    "nonzero_height_certificate",
    "render",
    "invariant_to_json",
    "invariant_from_json",
]

# (y-exponent, modulus, exponent polynomial); m is 0 whenever P is constant.
TermKey = namedtuple("TermKey", ["n", "m", "P"])


class Invariant:
    """Sparse value of H for one diagram under one reduction policy.

    exp_terms maps TermKey -> nonzero coefficient of t^P y^n, const_terms
    maps n -> the nonzero constant coefficient of y^n.  Values are treated
    as immutable; all arithmetic returns new instances.  Comparing or
    combining invariants computed under different policies is an error.
    """

    __slots__ = ("policy", "exp_terms", "const_terms")

    def __init__(self, policy, exp_terms=None, const_terms=None):
        self.policy = policy
        self.exp_terms = {k: v for k, v in (exp_terms or {}).items() if v}
        self.const_terms = {n: v for n, v in (const_terms or {}).items() if v}

    def is_zero(self) -> bool:
        return not self.exp_terms and not self.const_terms

    def __eq__(self, other):
        if not isinstance(other, Invariant):
            return NotImplemented
        return invariant_equal(self, other)

    def __hash__(self):
        return hash((self.policy,
                     frozenset(self.exp_terms.items()),
                     frozenset(self.const_terms.items())))

    def __sub__(self, other):
        return invariant_sub(self, other)

    def __neg__(self):
        return invariant_neg(self)

    def __repr__(self):
        return "Invariant(%s, %s)" % (self.policy.value, render(self))


def _check_policies(a: Invariant, b: Invariant):
    if a.policy is not b.policy:
        raise ValueError("cannot mix reduction policies %s and %s"
                         % (a.policy.value, b.policy.value))


def invariant_equal(a: Invariant, b: Invariant) -> bool:
    _check_policies(a, b)
    return a.exp_terms == b.exp_terms and a.const_terms == b.const_terms


def invariant_sub(a: Invariant, b: Invariant) -> Invariant:
    _check_policies(a, b)
    exp = dict(a.exp_terms)
    for key, c in b.exp_terms.items():
        exp[key] = exp.get(key, 0) - c
    const = dict(a.const_terms)
    for n, c in b.const_terms.items():
        const[n] = const.get(n, 0) - c
    return Invariant(a.policy, exp, const)


def invariant_neg(a: Invariant) -> Invariant:
    return Invariant(a.policy,
                     {k: -c for k, c in a.exp_terms.items()},
                     {n: -c for n, c in a.const_terms.items()})


def nonzero_height_certificate(inv: Invariant) -> bool:
    """True certifies the knotoid has nonzero height; False is silent."""
    return not inv.is_zero()


def _chord_arrays(d: GaussDiagram):
    views = sorted(d.chords().values())
    ids = [v.id for v in views]
    over = [v.over_pos for v in views]
    under = [v.under_pos for v in views]
    sign = [v.sign for v in views]
    return ids, over, under, sign


def _crossings(d: GaussDiagram):
    """Adjacency lists: adj[i] holds (j, side) with side True for r."""
    _, over, under, sign = _chord_arrays(d)
    k = len(over)
    adj = [[] for _ in range(k)]
    for i in range(k):
        oi = over[i]
        ui = under[i]
        lo, hi = (ui, oi) if oi > ui else (oi, ui)
        up = oi > ui
        for j in range(i + 1, k):
            oin = lo < over[j] < hi
            if oin == (lo < under[j] < hi):
                continue
            adj[i].append((j, oin == up))
            oj = over[j]
            uj = under[j]
            jlo, jhi = (uj, oj) if oj > uj else (oj, uj)
            adj[j].append((i, (jlo < oi < jhi) == (oj > uj)))
    return adj, sign


def _degrees(adj, sign):
    deg = []
    for entries in adj:
        t = 0
        for j, side in entries:
            s = sign[j]
            if s == SINGULAR:
                raise GaussCodeError("degree undefined: crossing chord %d is singular" % (j + 1))
            t += s if side else -s
        deg.append(t)
    return deg


def degree(d: GaussDiagram, cid: int) -> int:
    """d(c): signed crossing count, r(c) positive, l(c) negative."""
    ids, _, _, sign = _chord_arrays(d)
    adj, _ = _crossings(d)
    i = ids.index(d.chord(cid).id)
    t = 0
    for j, side in adj[i]:
        if sign[j] == SINGULAR:
            raise GaussCodeError("degree undefined: crossing chord %d is singular" % ids[j])
        t += sign[j] if side else -sign[j]
    return t


def crossing_partition(d: GaussDiagram, cid: int):
    """Ids of chords crossing cid, split as (right, left), each sorted."""
    ids, _, _, _ = _chord_arrays(d)
    adj, _ = _crossings(d)
    i = ids.index(d.chord(cid).id)
    right = sorted(ids[j] for j, side in adj[i] if side)
    left = sorted(ids[j] for j, side in adj[i] if not side)
    return tuple(right), tuple(left)


def n_partition(d: GaussDiagram, cid: int, n: int):
    """Restrict the crossing partition of cid to gcd(|d(c)|,|d(e)|) == n."""
    if n < 0:
        raise ValueError("n must be non-negative")
    ids, _, _, sign = _chord_arrays(d)
    adj, _ = _crossings(d)
    deg = _degrees(adj, sign)
    i = ids.index(d.chord(cid).id)
    right, left = [], []
    for j, side in adj[i]:
        if math.gcd(deg[i], deg[j]) == n:
            (right if side else left).append(ids[j])
    return tuple(sorted(right)), tuple(sorted(left))


def index_function(d: GaussDiagram, cid: int, n: int, policy: ReductionPolicy) -> ZPoly:
    """Ind_c^n(z) with exponents reduced mod |d(c)| under the policy."""
    ids, _, _, sign = _chord_arrays(d)
    adj, _ = _crossings(d)
    deg = _degrees(adj, sign)
    i = ids.index(d.chord(cid).id)
    m = abs(deg[i])
    acc = defaultdict(int)
    for j, side in adj[i]:
        if math.gcd(deg[i], deg[j]) != n:
            continue
        if side:
            acc[reduce_exponent(deg[j], m, policy)] += sign[j]
        else:
            acc[reduce_exponent(-deg[j], m, policy)] -= sign[j]
    return ZPoly(acc)


def compute_H(d: GaussDiagram,
              policy: ReductionPolicy = ReductionPolicy.QUOTIENT,
              include_n0: bool = False) -> Invariant:
    """Evaluate H over all chords and all gcd classes of the diagram."""
    if d.singular_ids():
        raise GaussCodeError("diagram has singular chords; resolve them first")
    adj, sign = _crossings(d)
    deg = _degrees(adj, sign)
    gcd = math.gcd
    red = reduce_exponent
    exp_terms = {}
    const_terms = defaultdict(int)
    for i, entries in enumerate(adj):
        m = abs(deg[i])
        di = deg[i]
        buckets = defaultdict(lambda: defaultdict(int))
        for j, side in entries:
            n = gcd(di, deg[j])
            if n == 0 and not include_n0:
                continue
            if side:
                buckets[n][red(deg[j], m, policy)] += sign[j]
            else:
                buckets[n][red(-deg[j], m, policy)] -= sign[j]
        sc = sign[i]
        for n, terms in buckets.items():
            P = ZPoly(terms)
            if not P:
                continue
            key = TermKey(n, 0 if P.is_constant() else m, P)
            exp_terms[key] = exp_terms.get(key, 0) + sc
            const_terms[n] -= sc
    return Invariant(policy, exp_terms, const_terms)


def subst_t_inverse(inv: Invariant) -> Invariant:
    """t -> t^-1: every t-exponent polynomial P becomes -P, re-reduced."""
    exp = defaultdict(int)
    for (n, m, P), c in inv.exp_terms.items():
        exp[TermKey(n, m, reduce_poly(-P, m, inv.policy))] += c
    return Invariant(inv.policy, exp, dict(inv.const_terms))


def subst_z_inverse(inv: Invariant) -> Invariant:
    """z -> z^-1 inside every t-exponent polynomial, re-reduced."""
    exp = defaultdict(int)
    for (n, m, P), c in inv.exp_terms.items():
        exp[TermKey(n, m, reduce_poly(P.subst_z_inverse(), m, inv.policy))] += c
    return Invariant(inv.policy, exp, dict(inv.const_terms))


def _sorted_keys(inv: Invariant):
    return sorted(inv.exp_terms, key=lambda k: (k.n, k.m, k.P.terms))


_PLAIN_INT = re.compile(r"-?[0-9]+\Z")


def _t_power(P: ZPoly) -> str:
    s = str(P)
    if s == "1":
        return "t"
    if s == "z" or _PLAIN_INT.match(s):
        return "t^" + s
    return "t^(" + s + ")"


def _t_power_latex(P: ZPoly) -> str:
    if P.is_constant() and P.constant_value() == 1:
        return "t"
    return "t^{%s}" % P.latex()


def _y_power(n: int, latex: bool) -> str:
    if n == 0:
        return ""
    if latex:
        return "y" if n == 1 else "y^{%d}" % n
    return "*y" if n == 1 else "*y^%d" % n


def _render_terms(inv: Invariant, latex: bool) -> str:
    strata = sorted(set(k.n for k in inv.exp_terms) | set(inv.const_terms))
    if not strata:
        return "0"
    keys_by_n = defaultdict(list)
    for key in _sorted_keys(inv):
        keys_by_n[key.n].append(key)
    out = []
    for n in strata:
        pieces = []
        for key in keys_by_n[n]:
            c = inv.exp_terms[key]
            tp = _t_power_latex(key.P) if latex else _t_power(key.P)
            if abs(c) != 1:
                tp = ("%d%s" if latex else "%d*%s") % (abs(c), tp)
            if not pieces:
                pieces.append(tp if c > 0 else "-" + tp)
            else:
                pieces.append(("+ " if c > 0 else "- ") + tp)
        c = inv.const_terms.get(n, 0)
        if c:
            body = str(abs(c))
            if not pieces:
                pieces.append(body if c > 0 else "-" + body)
            else:
                pieces.append(("+ " if c > 0 else "- ") + body)
        body = " ".join(pieces)
        if latex:
            out.append("\\left(%s\\right)%s" % (body, _y_power(n, True)))
        else:
            out.append("(%s)%s" % (body, _y_power(n, False)))
    return " + ".join(out)


def invariant_to_json(inv: Invariant) -> str:
    terms = [{"n": k.n, "m": k.m, "P": [[e, c] for e, c in k.P.terms],
              "coeff": inv.exp_terms[k]} for k in _sorted_keys(inv)]
    consts = [{"n": n, "coeff": inv.const_terms[n]} for n in sorted(inv.const_terms)]
    return json.dumps({"policy": inv.policy.value, "terms": terms, "consts": consts})


def invariant_from_json(text: str) -> Invariant:
    data = json.loads(text)
    policy = ReductionPolicy(data["policy"])
    exp = {}
    for t in data["terms"]:
        key = TermKey(int(t["n"]), int(t["m"]), ZPoly([(e, c) for e, c in t["P"]]))
        if not key.P:
            raise ValueError("zero exponent polynomial in term %r" % (t,))
        exp[key] = exp.get(key, 0) + int(t["coeff"])
    const = {int(t["n"]): int(t["coeff"]) for t in data["consts"]}
    return Invariant(policy, exp, const)


def render(inv: Invariant, fmt: str = "text") -> str:
    """Render to `text`, `latex` or `json`; strata ascend in n, terms in (m, P)."""
    if fmt == "text":
        return _render_terms(inv, latex=False)
    if fmt == "latex":
        return _render_terms(inv, latex=True)
    if fmt == "json":
        return invariant_to_json(inv)
    raise ValueError("unknown format %r" % fmt)
