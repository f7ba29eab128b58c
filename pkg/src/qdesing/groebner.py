"""Reduced Groebner bases over Q[q, x] with cofactor tracking.

Plain Buchberger with the product and chain criteria, for the lexicographic
order in which x dominates q.  Every basis element carries an explicit
representation as a Q[q, x]-combination of the input generators, so results
can be traced back ("cofactors"); inputs here are tiny bivariate ideals and
the exact representation matters more than speed.
"""

from __future__ import annotations

from typing import List, Sequence, Tuple

from .bipoly import BIPOLY_ZERO, BiPoly

Mono = Tuple[int, int]  # (e_q, e_x)


def _mono_key(m: Mono):
    return (m[1], m[0])  # x first, then q


def _divides(a: Mono, b: Mono) -> bool:
    return a[0] <= b[0] and a[1] <= b[1]


def _lcm(a: Mono, b: Mono) -> Mono:
    return (max(a[0], b[0]), max(a[1], b[1]))


def _reduce_full(f: BiPoly, rep: List[BiPoly], basis: List[BiPoly], breps: List[List[BiPoly]]):
    """Full normal form of f modulo basis, updating the representation."""
    rep = list(rep)
    tail = {}
    work = f
    while not work.is_zero():
        key, c = work.lead_term()
        hit = -1
        for idx, g in enumerate(basis):
            if _divides(g.lead_term()[0], key):
                hit = idx
                break
        if hit < 0:
            tail[key] = c
            work = work - BiPoly({key: c})
            continue
        g = basis[hit]
        gk, gc = g.lead_term()
        mono = BiPoly.monomial(key[0] - gk[0], key[1] - gk[1], c / gc)
        work = work - mono * g
        grep = breps[hit]
        for j, r in enumerate(grep):
            if not r.is_zero():
                rep[j] = rep[j] - mono * r
    return BiPoly(tail), rep


def groebner_reduced_with_cofactors(
    gens: Sequence[BiPoly],
) -> Tuple[List[BiPoly], List[List[BiPoly]]]:
    """Reduced Groebner basis G of <gens> plus cofactors.

    Returns (G, C) where C[i] expresses G[i] as sum(C[i][j] * gens[j]).
    G is sorted by ascending leading monomial and each element is monic
    (leading rational coefficient 1).
    """
    n = len(gens)
    unit = [BiPoly.const(0)] * n

    basis: List[BiPoly] = []
    reps: List[List[BiPoly]] = []
    for j, g in enumerate(gens):
        if g.is_zero():
            continue
        r = list(unit)
        r[j] = BiPoly.const(1)
        basis.append(g)
        reps.append(r)

    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    done = set()

    while pairs:
        i, j = min(
            pairs,
            key=lambda p: (
                _mono_key(_lcm(basis[p[0]].lead_term()[0], basis[p[1]].lead_term()[0])),
                p,
            ),
        )
        pairs.discard((i, j))
        done.add((i, j))
        ki, ci = basis[i].lead_term()
        kj, cj = basis[j].lead_term()
        lcm = _lcm(ki, kj)
        if lcm == (ki[0] + kj[0], ki[1] + kj[1]):
            continue  # coprime leading monomials
        chain = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if _divides(basis[k].lead_term()[0], lcm):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik in done and pjk in done:
                    chain = True
                    break
        if chain:
            continue
        mi = BiPoly.monomial(lcm[0] - ki[0], lcm[1] - ki[1], 1 / ci)
        mj = BiPoly.monomial(lcm[0] - kj[0], lcm[1] - kj[1], 1 / cj)
        spoly = mi * basis[i] - mj * basis[j]
        srep = list(unit)
        for t, r in enumerate(reps[i]):
            if not r.is_zero():
                srep[t] = srep[t] + mi * r
        for t, r in enumerate(reps[j]):
            if not r.is_zero():
                srep[t] = srep[t] - mj * r
        nf, nrep = _reduce_full(spoly, srep, basis, reps)
        if nf.is_zero():
            continue
        new_idx = len(basis)
        basis.append(nf)
        reps.append(nrep)
        for k in range(new_idx):
            pairs.add((k, new_idx))

    # minimalize: drop elements whose lead is divisible by another's lead
    keep = []
    for i in range(len(basis)):
        lt_i = basis[i].lead_term()[0]
        dominated = False
        for j in range(len(basis)):
            if j == i:
                continue
            lt_j = basis[j].lead_term()[0]
            if _divides(lt_j, lt_i) and (lt_j != lt_i or j < i):
                dominated = True
                break
        if not dominated:
            keep.append(i)
    basis = [basis[i] for i in keep]
    reps = [reps[i] for i in keep]

    # inter-reduce tails and make monic
    changed = True
    while changed:
        changed = False
        for i in range(len(basis)):
            others = basis[:i] + basis[i + 1 :]
            oreps = reps[:i] + reps[i + 1 :]
            nf, nrep = _reduce_full(basis[i], reps[i], others, oreps)
            if nf != basis[i]:
                basis[i], reps[i] = nf, nrep
                changed = True

    order = sorted(range(len(basis)), key=lambda i: _mono_key(basis[i].lead_term()[0]))
    G, C = [], []
    for i in order:
        g = basis[i]
        _, lc = g.lead_term()
        inv = 1 / lc
        G.append(g.scale(inv))
        C.append([r.scale(inv) for r in reps[i]])
    return G, C


def expand_cofactors(cof: Sequence[BiPoly], gens: Sequence[BiPoly]) -> BiPoly:
    acc = BIPOLY_ZERO
    for c, g in zip(cof, gens):
        if not c.is_zero() and not g.is_zero():
            acc = acc + c * g
    return acc


def reduce_modulo(f: BiPoly, G: Sequence[BiPoly]) -> BiPoly:
    """Normal form of f modulo a (Groebner) basis, no cofactors."""
    basis = [g for g in G if not g.is_zero()]
    reps = [[] for _ in basis]
    nf, _ = _reduce_full(f, [], basis, reps)
    return nf
