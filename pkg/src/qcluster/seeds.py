"""Quantum seeds: compatible pairs, toric-frame mutation, variable enumeration.

A seed is an m x n exchange matrix B (rows may include frozen directions), a
skew form Lambda compatible with it (B^T Lambda = (D|0), D positive diagonal),
and the m current variables expressed inside the fixed initial torus.  The
first n positions are mutable.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

from .errors import BudgetExceededError, IncompatiblePairError
from .scalars import LaurentScalar, qbinomial
from .torus import SkewForm, TorusElement, torus_exact_div, torus_mul, torus_pow

log = logging.getLogger(__name__)

ExchangeMatrix = tuple[tuple[int, ...], ...]


def _as_matrix(rows: Sequence[Sequence[int]]) -> ExchangeMatrix:
    return tuple(tuple(int(x) for x in r) for r in rows)


def check_compatible(form: SkewForm, b: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Verify B^T Lambda = (D | 0) and return the positive diagonal D.

    Raises IncompatiblePairError otherwise.  No permutations are allowed: the
    mutable directions must line up with the first n coordinates.
    """
    bm = _as_matrix(b)
    m = form.rank
    if len(bm) != m:
        raise IncompatiblePairError("exchange matrix row count != form rank")
    n = len(bm[0]) if bm else 0
    diag = []
    for k in range(n):
        for j in range(m):
            entry = sum(bm[i][k] * form.rows[i][j] for i in range(m))
            if j == k:
                if entry <= 0:
                    raise IncompatiblePairError(
                        f"diagonal entry d_{k + 1} = {entry} is not positive"
                    )
                diag.append(entry)
            elif entry != 0:
                raise IncompatiblePairError(
                    f"(B^T Lambda)[{k + 1}][{j + 1}] = {entry} != 0"
                )
    return tuple(diag)


def e_matrix(b: Sequence[Sequence[int]], k: int) -> ExchangeMatrix:
    """Identity except in column k: E_kk = -1, E_ik = max(0, -b_ik)."""
    bm = _as_matrix(b)
    m = len(bm)
    rows = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    for i in range(m):
        rows[i][k] = -1 if i == k else max(0, -bm[i][k])
    return _as_matrix(rows)


def mutate_matrix(b: Sequence[Sequence[int]], k: int) -> ExchangeMatrix:
    """Matrix mutation in direction k."""
    bm = _as_matrix(b)
    m, n = len(bm), len(bm[0])
    out = [[0] * n for _ in range(m)]
    for i in range(m):
        for j in range(n):
            if i == k or j == k:
                out[i][j] = -bm[i][j]
            else:
                out[i][j] = bm[i][j] + (
                    abs(bm[i][k]) * bm[k][j] + bm[i][k] * abs(bm[k][j])
                ) // 2
    return _as_matrix(out)


def mutate_lambda(form: SkewForm, b: Sequence[Sequence[int]], k: int) -> SkewForm:
    """Lambda' = E^T Lambda E for the direction-k mutation matrix E."""
    e = e_matrix(b, k)
    m = form.rank
    lam_e = [
        [sum(form.rows[i][t] * e[t][j] for t in range(m)) for j in range(m)]
        for i in range(m)
    ]
    out = [
        [sum(e[t][i] * lam_e[t][j] for t in range(m)) for j in range(m)]
        for i in range(m)
    ]
    return SkewForm(out)


@dataclass(frozen=True)
class QuantumSeed:
    """A quantum seed whose variables live in a fixed initial torus.

    ambient: skew form of the initial torus (where all arithmetic happens);
    form:    this seed's own skew form (the toric frame's Lambda);
    b:       m x n exchange matrix;
    vars:    the m current variables as initial-torus elements.
    """

    ambient: SkewForm
    form: SkewForm
    b: ExchangeMatrix
    vars: tuple[TorusElement, ...]

    @classmethod
    def initial(cls, form: SkewForm, b: Sequence[Sequence[int]]) -> QuantumSeed:
        bm = _as_matrix(b)
        check_compatible(form, bm)
        m = form.rank
        basis = tuple(
            TorusElement.monomial(tuple(1 if j == i else 0 for j in range(m)))
            for i in range(m)
        )
        return cls(ambient=form, form=form, b=bm, vars=basis)

    @property
    def m(self) -> int:
        return self.form.rank

    @property
    def n(self) -> int:
        return len(self.b[0]) if self.b else 0

    def key(self) -> tuple:
        """Deduplication key: the sorted multiset of current variables."""
        return tuple(sorted(x.key() for x in self.vars))

    def frame_image(self, c: Sequence[int]) -> TorusElement:
        """This seed's frame monomial M(c), c >= 0 componentwise, in the initial torus.

        Computes v^{sum_{i<j} c_i c_j l_ji} X_1^{c_1} ... X_m^{c_m} with the
        seed's own form in the twist and the seed's variables as factors.
        """
        c = tuple(int(x) for x in c)
        if len(c) != self.m:
            raise ValueError("vector length does not match seed rank")
        if any(x < 0 for x in c):
            raise ValueError("frame_image needs a componentwise nonnegative vector")
        twist = 0
        for i in range(self.m):
            if not c[i]:
                continue
            for j in range(i + 1, self.m):
                twist += c[i] * c[j] * self.form.rows[j][i]
        acc = TorusElement.one(self.m)
        for i, ci in enumerate(c):
            if ci:
                acc = torus_mul(self.ambient, acc, torus_pow(self.ambient, self.vars[i], ci))
        return acc.scale(LaurentScalar.v_power(twist))

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "lambda": self.form.to_lists(),
            "b": [list(r) for r in self.b],
            "vars": [x.to_json() for x in self.vars],
        }


def frame_mutation_image(seed: QuantumSeed, k: int, c: Sequence[int]) -> TorusElement:
    """Image M'(c) of the direction-k mutated frame, evaluated in the initial torus.

    M'(c) = sum_p [c_k choose p]_v M(E c + p b^k), where E is the mutation
    matrix and b^k the k-th exchange column.  Each summand has exponent -c_k in
    position k; multiplying the whole sum by X_k^{c_k} on the right clears the
    inversions (all exponents become nonnegative), and one exact division
    recovers the sum.  Requires c >= 0 componentwise.
    """
    c = tuple(int(x) for x in c)
    if len(c) != seed.m:
        raise ValueError("vector length does not match seed rank")
    if any(x < 0 for x in c):
        raise ValueError("frame_mutation_image needs c >= 0")
    ck = c[k]
    e = e_matrix(seed.b, k)
    ec = [sum(e[i][j] * c[j] for j in range(seed.m)) for i in range(seed.m)]
    bk = [seed.b[i][k] for i in range(seed.m)]
    shift = [0] * seed.m
    shift[k] = ck
    total = TorusElement.zero(seed.m)
    for p in range(ck + 1):
        d = [ec[i] + p * bk[i] for i in range(seed.m)]
        lifted = [d[i] + shift[i] for i in range(seed.m)]
        if any(x < 0 for x in lifted):
            raise ArithmeticError("mutation summand failed to clear inversions")
        coeff = qbinomial(ck, p).shift(seed.form.eval(d, shift))
        total = total + seed.frame_image(lifted).scale(coeff)
    divisor = torus_pow(seed.ambient, seed.vars[k], ck)
    return torus_exact_div(seed.ambient, total, divisor)


def mutate_seed(seed: QuantumSeed, k: int) -> QuantumSeed:
    """Mutate in direction k (0-based, k < n)."""
    if not 0 <= k < seed.n:
        raise ValueError(f"mutation direction {k} out of range")
    unit = [0] * seed.m
    unit[k] = 1
    new_var = frame_mutation_image(seed, k, unit)
    new_form = mutate_lambda(seed.form, seed.b, k)
    new_b = mutate_matrix(seed.b, k)
    check_compatible(new_form, new_b)
    new_vars = list(seed.vars)
    new_vars[k] = new_var
    return QuantumSeed(ambient=seed.ambient, form=new_form, b=new_b, vars=tuple(new_vars))


def enumerate_cluster_variables(
    seed: QuantumSeed, budget_seeds: int = 10_000
) -> tuple[list[TorusElement], int]:
    """Breadth-first closure under mutation in all mutable directions.

    Returns (sorted list of distinct mutable variables, number of seeds seen).
    Seeds are deduplicated by their variable multiset.  Coefficient negativity
    is logged as a red flag, never asserted.
    """
    start = seed
    queue = [start]
    seen = {start.key()}
    variables: dict[tuple, TorusElement] = {}
    while queue:
        current = queue.pop(0)
        for x in current.vars[: current.n]:
            variables.setdefault(x.key(), x)
        for k in range(current.n):
            nxt = mutate_seed(current, k)
            key = nxt.key()
            if key in seen:
                continue
            if len(seen) >= budget_seeds:
                raise BudgetExceededError(
                    f"seed closure exceeded budget of {budget_seeds}"
                )
            seen.add(key)
            queue.append(nxt)
    out = [variables[k] for k in sorted(variables)]
    for x in out:
        for _, scalar in x.terms():
            if any(coef < 0 for _, coef in scalar.items()):
                log.warning("negative coefficient observed in cluster variable %r", x)
    return out, len(seen)
