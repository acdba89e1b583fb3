"""Gordian distance lower bounds from crossing-change deltas.

One crossing change at a chord c with sign eps shifts H by

    eps * (t^{Ind_c^n(z)} + t^{-Ind_c^n(z^-1)} - 2) * y^n

summed over the gcd classes n of c.  Any difference H(K) - H(K') of
homotopic knotoids is therefore a sum of such deltas; decompose() writes
a difference in that shape or proves it impossible, and the per-stratum
coefficient sums bound the Gordian distance from below.
"""

from __future__ import annotations

import math
from collections import defaultdict, namedtuple
from dataclasses import dataclass

from .gauss import SINGULAR, GaussCodeError, GaussDiagram
from .invariant import (Invariant, TermKey, _chord_arrays, _crossings, _degrees,
                        compute_H, index_function, invariant_sub)
from .zpoly import ReductionPolicy, reduce_poly

__all__ = [
    "NotHomotopyForm",
    "DeltaPair",
    "GordianDecomposition",
    "crossing_change_delta",
    "decompose",
    "reconstruct",
    "gordian_lower_bound",
    "decomposition_json",
]


class NotHomotopyForm(Exception):
    """The difference cannot be a sum of crossing-change deltas."""


# One delta summand: a * (t^P + t^{partner(P)} - 2) y^n with modulus m.
DeltaPair = namedtuple("DeltaPair", ["n", "m", "P", "a"])


@dataclass(frozen=True)
class GordianDecomposition:
    policy: ReductionPolicy
    pairs: tuple
    bound_per_n: dict
    bound: int


def _partner(P, m, policy):
    return reduce_poly(-P.subst_z_inverse(), m, policy)


def crossing_change_delta(d: GaussDiagram, cid: int,
                          policy: ReductionPolicy = ReductionPolicy.QUOTIENT) -> Invariant:
    """Predicted H(d) - H(crossing_change(d, cid)), no recomputation."""
    view = d.chord(cid)
    if view.sign == SINGULAR:
        raise GaussCodeError("chord %d is singular; resolve it first" % cid)
    eps = view.sign
    ids, _, _, sign = _chord_arrays(d)
    adj, _ = _crossings(d)
    deg = _degrees(adj, sign)
    i = ids.index(cid)
    m = abs(deg[i])
    ns = sorted({math.gcd(deg[i], deg[j]) for j, _ in adj[i]} - {0})
    exp = defaultdict(int)
    const = {}
    for n in ns:
        ind = index_function(d, cid, n, policy)
        if not ind:
            continue
        for P in (ind, _partner(ind, m, policy)):
            exp[TermKey(n, 0 if P.is_constant() else m, P)] += eps
        const[n] = const.get(n, 0) - 2 * eps
    return Invariant(policy, exp, const)


def decompose(delta: Invariant) -> GordianDecomposition:
    """Write delta as a sum of crossing-change summands, or fail.

    Terms pair up under P <-> partner(P) with equal coefficients (even
    when self-paired); each pair contributes |a| to its stratum's bound
    and -2a to its constant, which must account for the stored constant
    exactly.  Raises NotHomotopyForm otherwise.
    """
    groups = defaultdict(dict)
    for (n, m, P), c in delta.exp_terms.items():
        groups[n][(m, P)] = c
    pairs = []
    bound_per_n = {}
    for n in sorted(set(groups) | set(delta.const_terms)):
        group = groups.get(n, {})
        order = sorted(group, key=lambda key: (key[0], key[1].terms))
        consumed = set()
        acc_const = 0
        bound = 0
        for key in order:
            if key in consumed:
                continue
            consumed.add(key)
            m, P = key
            coeff = group[key]
            Q = _partner(P, m, delta.policy)
            if Q == P:
                if coeff % 2:
                    raise NotHomotopyForm(
                        "self-paired term t^(%s) y^%d has odd coefficient %d" % (P, n, coeff))
                a = coeff // 2
            else:
                qkey = (m, Q)
                if qkey not in group or qkey in consumed:
                    raise NotHomotopyForm(
                        "term t^(%s) y^%d lacks its partner t^(%s)" % (P, n, Q))
                consumed.add(qkey)
                if group[qkey] != coeff:
                    raise NotHomotopyForm(
                        "partner coefficients differ at y^%d: %d vs %d"
                        % (n, coeff, group[qkey]))
                a = coeff
            pairs.append(DeltaPair(n, m, P, a))
            bound += abs(a)
            acc_const -= 2 * a
        if acc_const != delta.const_terms.get(n, 0):
            raise NotHomotopyForm(
                "constant at y^%d is %d, expected %d from the pairing"
                % (n, delta.const_terms.get(n, 0), acc_const))
        bound_per_n[n] = bound
    return GordianDecomposition(delta.policy, tuple(pairs), bound_per_n,
                                max(bound_per_n.values(), default=0))


def reconstruct(dec: GordianDecomposition) -> Invariant:
    """Invariant equal to the decomposed difference, bit for bit."""
    exp = defaultdict(int)
    const = {}
    for n, m, P, a in dec.pairs:
        exp[TermKey(n, m, P)] += a
        exp[TermKey(n, m, _partner(P, m, dec.policy))] += a
        const[n] = const.get(n, 0) - 2 * a
    return Invariant(dec.policy, exp, const)


def gordian_lower_bound(d1: GaussDiagram, d2: GaussDiagram,
                        policy: ReductionPolicy = ReductionPolicy.QUOTIENT) -> int:
    """Max per-stratum bound for d_G(d1, d2); raises NotHomotopyForm."""
    delta = invariant_sub(compute_H(d1, policy), compute_H(d2, policy))
    return decompose(delta).bound


def decomposition_json(dec: GordianDecomposition) -> dict:
    return {
        "bound": dec.bound,
        "per_n": {str(n): v for n, v in sorted(dec.bound_per_n.items())},
        "pairs": [{"n": p.n, "m": p.m, "P": [[e, c] for e, c in p.P.terms], "a": p.a}
                  for p in dec.pairs],
        "status": "ok",
    }
