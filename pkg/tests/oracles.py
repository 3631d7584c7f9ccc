"""Independent oracles shared by the unit suites and the acceptance gate.

Everything here deliberately avoids the package's own arithmetic: mutation
runs on sympy rational functions at v = 1, and the thin-module character
rule counts arrow-closed subsets with no linear algebra at all.
"""

from __future__ import annotations

import sympy as sp


def cmut_matrix(b, k):
    """Classical matrix mutation, written directly from the sign rule."""
    m, n = len(b), len(b[0])
    out = [[0] * n for _ in range(m)]
    for i in range(m):
        for j in range(n):
            if i == k or j == k:
                out[i][j] = -b[i][j]
            elif b[i][k] > 0 and b[k][j] > 0:
                out[i][j] = b[i][j] + b[i][k] * b[k][j]
            elif b[i][k] < 0 and b[k][j] < 0:
                out[i][j] = b[i][j] - b[i][k] * b[k][j]
            else:
                out[i][j] = b[i][j]
    return out


def laurent_dict(expr, xs):
    """Exponent-to-coefficient dict of a sympy expression that must be a
    Laurent polynomial with integer coefficients."""
    num, den = sp.fraction(sp.cancel(sp.together(expr)))
    pden = sp.Poly(den, *xs)
    assert len(pden.monoms()) == 1, "classical variable is not Laurent"
    dmon = pden.monoms()[0]
    dcoef = pden.coeffs()[0]
    out = {}
    pnum = sp.Poly(sp.expand(num), *xs)
    for mon, coef in zip(pnum.monoms(), pnum.coeffs()):
        ratio = sp.Rational(coef, dcoef)
        assert ratio.is_Integer
        out[tuple(a - b for a, b in zip(mon, dmon))] = int(ratio)
    return out


def classical_variable_set(btilde, n, budget=10_000):
    """Commutative mutation closure on sympy rational functions."""
    m = len(btilde)
    xs = sp.symbols(f"x1:{m + 1}", positive=True)
    start = tuple(xs)

    def var_key(e):
        return frozenset(laurent_dict(e, xs).items())

    def seed_key(state):
        return tuple(sorted(str(sorted(var_key(v))) for v in state))

    queue = [(start, [list(r) for r in btilde])]
    seen = {seed_key(start)}
    found = {}
    while queue:
        state, b = queue.pop(0)
        for v in state[:n]:
            found[var_key(v)] = laurent_dict(v, xs)
        for k in range(n):
            plus = sp.Integer(1)
            minus = sp.Integer(1)
            for i in range(m):
                if b[i][k] > 0:
                    plus *= state[i] ** b[i][k]
                elif b[i][k] < 0:
                    minus *= state[i] ** (-b[i][k])
            new_state = list(state)
            new_state[k] = sp.cancel((plus + minus) / state[k])
            new_state = tuple(new_state)
            key = seed_key(new_state)
            if key in seen:
                continue
            assert len(seen) < budget
            seen.add(key)
            queue.append((new_state, cmut_matrix(b, k)))
    return set(frozenset(d.items()) for d in found.values())


def closed_subsets(arrows, support):
    subsets = [frozenset()]
    for keep in range(1, 1 << len(support)):
        chosen = frozenset(s for b, s in enumerate(support) if keep >> b & 1)
        if all(t in chosen for s, t in arrows if s in chosen and t in support):
            subsets.append(chosen)
    return subsets


def classical_character(fd, support):
    """Commutative rule for a thin module: one term per arrow-closed subset.

    Thin modules have 0/1-dimensional vertex spaces, so submodules are
    exactly the arrow-closed subsets of the support; no linear algebra and
    no field appear, which makes this a fully independent oracle.
    """
    imr = fd.it_minus_rtr()
    m_pr = [1 if v in support else 0 for v in range(fd.n)]
    out: dict[tuple[int, ...], int] = {}
    for subset in closed_subsets(fd.quiver.arrows, frozenset(support)):
        e_pr = [1 if v in subset else 0 for v in range(fd.n)]
        exp = tuple(
            -sum(fd.btilde[i][j] * e_pr[j] for j in range(fd.n))
            - sum(imr[i][j] * m_pr[j] for j in range(fd.n))
            for i in range(fd.m)
        )
        out[exp] = out.get(exp, 0) + 1
    return out
