"""Acceptance gate: ten desk-scale criteria, one pass/fail line each.

Every comparison is exact — Laurent-ring equality or integer equality —
never a floating-point tolerance.  Run ``pytest tests/test_acceptance.py -s``
to watch the lines print; the slow A3 generation check can be skipped with
``-m "not slow"``.
"""

from __future__ import annotations

import math
import random
from contextlib import contextmanager

import pytest

from oracles import classical_character, classical_variable_set
from qcluster.characters import (
    CCObject,
    cc_character,
    framed_linear,
    principal_indecomposables,
)
from qcluster.quiverrep import (
    FingerprintTable,
    IsoClass,
    Rep,
    aut_order,
    direct_sum,
    ext_classes,
    ext_dim,
    grassmannian_tally,
    hall_tally,
    hom_strata,
    indecomposables,
    injective,
)
from qcluster.scalars import LaurentScalar, qbinomial
from qcluster.seeds import check_compatible, enumerate_cluster_variables, mutate_seed
from qcluster.torus import SkewForm, TorusElement, torus_mul
from qcluster.verify import (
    ExpressionEngine,
    verify_extension_drop,
    verify_generation,
    verify_injective_shift_expansion,
    verify_product_expansion,
)

V = LaurentScalar.v_power
X = TorusElement.monomial


@contextmanager
def criterion(number: str, label: str):
    try:
        yield
    except BaseException:
        print(f"criterion {number:>3}: FAIL — {label}")
        raise
    print(f"criterion {number:>3}: PASS — {label}")


def _principal_table(fd, p):
    return FingerprintTable(fd.quiver, p, support=tuple(range(fd.n)))


def test_criterion_01_quantum_binomials():
    with criterion("1", "quantum binomials match the Pascal oracle, bar-symmetric, v=1 classical"):
        table: dict[tuple[int, int], LaurentScalar] = {}
        for n in range(13):
            for k in range(n + 1):
                if k == 0 or k == n:
                    expected = LaurentScalar.one()
                else:
                    expected = table[(n - 1, k - 1)] * V(-(n - k)) + table[
                        (n - 1, k)
                    ] * V(k)
                table[(n, k)] = expected
                got = qbinomial(n, k)
                assert got == expected
                assert got.bar() == got
                assert got.at_one() == math.comb(n, k)


def test_criterion_02_frame_monomial_relations():
    with criterion("2", "1,000 random frame-monomial products obey the twisted relation"):
        rng = random.Random(98)
        for _ in range(1000):
            m = rng.randint(1, 4)
            rows = [[0] * m for _ in range(m)]
            for i in range(m):
                for j in range(i + 1, m):
                    rows[i][j] = rng.randint(-3, 3)
                    rows[j][i] = -rows[i][j]
            form = SkewForm(rows)
            c = tuple(rng.randint(-3, 3) for _ in range(m))
            d = tuple(rng.randint(-3, 3) for _ in range(m))
            total = tuple(a + b for a, b in zip(c, d))
            assert torus_mul(form, X(c), X(d)) == X(total).scale(V(form.eval(c, d)))
        seed = framed_linear(2).initial_seed()
        for s in (seed, mutate_seed(seed, 0), mutate_seed(mutate_seed(seed, 0), 1)):
            for _ in range(50):
                c = tuple(rng.randint(0, 3) for _ in range(s.m))
                d = tuple(rng.randint(0, 3) for _ in range(s.m))
                total = tuple(a + b for a, b in zip(c, d))
                lhs = torus_mul(s.ambient, s.frame_image(c), s.frame_image(d))
                assert lhs == s.frame_image(total).scale(V(s.form.eval(c, d)))


def test_criterion_03_laurent_closure_counts():
    with criterion("3", "mutation closures reach exactly 2/5/9 variables, matching the commutative oracle"):
        for n, count in ((1, 2), (2, 5), (3, 9)):
            fd = framed_linear(n)
            variables, _ = enumerate_cluster_variables(fd.initial_seed())
            assert len(variables) == count
            quantum = {
                frozenset(x.specialize_commutative().items()) for x in variables
            }
            classical = classical_variable_set([list(r) for r in fd.btilde], n)
            assert quantum == classical


def test_criterion_04_compatibility_everywhere():
    with criterion("4", "compatibility stays diag(1,..,1) at every reachable A2/A3 seed"):
        for n in (2, 3):
            seed = framed_linear(n).initial_seed()
            queue, seen, visited = [seed], {seed.key()}, 0
            while queue:
                s = queue.pop(0)
                assert check_compatible(s.form, s.b) == (1,) * n
                visited += 1
                for k in range(n):
                    nxt = mutate_seed(s, k)
                    if nxt.key() not in seen:
                        seen.add(nxt.key())
                        queue.append(nxt)
            assert visited >= 2


def test_criterion_05_character_map_against_mutation_and_classical_rule():
    with criterion("5", "characters of simples equal one-step mutations; all characters match the thin-module rule"):
        for n in (2, 3):
            fd = framed_linear(n)
            for p in (2, 3):
                seed = fd.initial_seed()
                for i in range(fd.n):
                    simple = Rep.simple(fd.quiver, p, i)
                    assert cc_character(fd, CCObject(simple)) == mutate_seed(seed, i).vars[i]
                for rep in principal_indecomposables(fd, p):
                    support = tuple(v for v in range(fd.n) if rep.dims[v])
                    got = cc_character(fd, CCObject(rep)).specialize_commutative()
                    assert got == classical_character(fd, support)


def test_criterion_06_product_expansion_harness():
    with criterion("6", "product expansion exact for all ordered indecomposable pairs (A2/A3, p in {2,3})"):
        for n, pair_count in ((2, 9), (3, 36)):
            fd = framed_linear(n)
            for p in (2, 3):
                table = _principal_table(fd, p)
                pairs = 0
                for m_rep in table.catalog:
                    for n_rep in table.catalog:
                        report = verify_product_expansion(fd, p, m_rep, n_rep, table)
                        assert report["status"] == "ok", report
                        pairs += 1
                assert pairs == pair_count


def test_criterion_07_injective_shift_harness():
    with criterion("7", "injective-shift expansion exact for all (module, injective) pairs (A2/A3, p in {2,3})"):
        for n in (2, 3):
            fd = framed_linear(n)
            for p in (2, 3):
                engine = ExpressionEngine(fd, p)
                for m_rep in engine.table.catalog:
                    for i in range(fd.m):
                        report = verify_injective_shift_expansion(
                            fd, p, m_rep, (i,), engine
                        )
                        assert report["status"] == "ok", report
                        assert report["hom_dim"] <= 6


def test_criterion_08_extension_drop_harness():
    with criterion("8", "every non-split middle term strictly drops the self-extension measure"):
        checked = 0
        for n, extending in ((2, 1), (3, 5)):
            fd = framed_linear(n)
            for p in (2, 3):
                table = _principal_table(fd, p)
                found = 0
                for m_rep in table.catalog:
                    for n_rep in table.catalog:
                        if ext_dim(m_rep, n_rep) == 0:
                            continue
                        report = verify_extension_drop(m_rep, n_rep, table)
                        assert report["status"] == "ok", report
                        assert report["middles"]
                        found += 1
                assert found == extending
                checked += found
        assert checked == 2 * (1 + 5)


def test_criterion_09_generation_a2():
    with criterion("9", "generation both ways on A2 at p=2 (255 objects, 5 cluster variables)"):
        report = verify_generation(framed_linear(2), 2)
        assert report["status"] == "ok", report
        assert report["objects_checked"] == 255
        assert report["object_failures"] == []
        assert report["cluster_variables"] == 5
        assert report["unmatched_variables"] == []


@pytest.mark.slow
def test_criterion_09_generation_a3_slow():
    with criterion("9+", "generation both ways on A3 at p=2 (2184 objects, 9 cluster variables)"):
        report = verify_generation(framed_linear(3), 2)
        assert report["status"] == "ok", report
        assert report["objects_checked"] == 2184
        assert report["object_failures"] == []
        assert report["cluster_variables"] == 9
        assert report["unmatched_variables"] == []


def test_criterion_10_counting_identities():
    with criterion("10", "extension totals, Hall-number sums, and the stratum factorization agree"):
        fd = framed_linear(2)
        for p in (2, 3):
            full = FingerprintTable(fd.quiver, p)
            prin = _principal_table(fd, p)
            principal = list(prin.catalog)

            for m_rep in principal:
                for n_rep in principal:
                    tally = ext_classes(m_rep, n_rep, prin)
                    assert sum(tally.values()) == p ** ext_dim(m_rep, n_rep)

            modules = list(principal)
            for i, a in enumerate(principal):
                for b in principal[i:]:
                    modules.append(direct_sum(a, b))
            for m_rep in modules:
                f = hall_tally(m_rep, full.classify, full.classify)
                by_dim: dict[tuple[int, ...], int] = {}
                for (_, b_cls), cnt in f.items():
                    e = b_cls.dims(fd.m)
                    by_dim[e] = by_dim.get(e, 0) + cnt
                assert by_dim == grassmannian_tally(m_rep)

            injectives = [injective(fd.quiver, p, i) for i in range(fd.m)]
            aut_cache: dict[tuple[int, IsoClass], int] = {}
            for m_rep in principal:
                f_m = hall_tally(m_rep, full.classify, full.classify)
                for target in injectives:
                    strata = hom_strata(m_rep, target, full.classify, full.classify)
                    f_i = hall_tally(target, full.classify, full.classify)
                    for (b_cls, i_cls), count in strata.items():
                        total = 0
                        for (a_cls, b2), fm in f_m.items():
                            if b2 != b_cls:
                                continue
                            fi = f_i.get((i_cls, a_cls), 0)
                            if not fi:
                                continue
                            if (p, a_cls) not in aut_cache:
                                aut_cache[(p, a_cls)] = aut_order(full.rep_of(a_cls))
                            total += aut_cache[(p, a_cls)] * fm * fi
                        assert total == count, (m_rep.dims, target.dims, b_cls, i_cls)
