"""Mechanical verification of the character multiplication identities and
of generation: every cluster-category object's character rewrites into a
Laurent combination of cluster variables, and every enumerated cluster
variable is a character.

Identities mixing submodule counts with v-powers hold after the exact
evaluation v = sqrt(p) (coefficients live in Z[sqrt(p)^{+-1}]); the
comparisons below use that specialization and nothing weaker.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations_with_replacement

from .characters import CCObject, FramedData, cc_character
from .errors import VerificationError
from .quiverrep import (
    FingerprintTable,
    IsoClass,
    Rep,
    direct_sum,
    ext_classes,
    ext_dim,
    hom_basis,
    hom_strata,
    injective,
    socle,
)
from .scalars import LaurentScalar
from .seeds import enumerate_cluster_variables
from .torus import TorusElement, torus_equal_specialized, torus_mul

log = logging.getLogger(__name__)

Atom = tuple  # ("var", IsoClass with one summand) | ("mono", exponent tuple)


def _atom_key(atom: Atom) -> tuple:
    kind, payload = atom
    return (kind, payload.summands if kind == "var" else payload)


def _mismatch(a: TorusElement, b: TorusElement, p: int) -> dict | None:
    sa, sb = a.specialize_sqrt(p), b.specialize_sqrt(p)
    for e in sorted(set(sa) | set(sb)):
        if sa.get(e) != sb.get(e):
            return {
                "exp": list(e),
                "lhs": [str(x) for x in sa.get(e, (0, 0))],
                "rhs": [str(x) for x in sb.get(e, (0, 0))],
            }
    return None


@dataclass
class ClusterExpression:
    """Laurent combination of ordered products of cluster variables and
    frozen monomials; evaluation reproduces a character exactly."""

    rank: int
    terms: list[tuple[LaurentScalar, tuple[Atom, ...]]]

    def _normalized(self) -> "ClusterExpression":
        merged: dict[tuple[Atom, ...], LaurentScalar] = {}
        for coeff, atoms in self.terms:
            merged[atoms] = merged.get(atoms, LaurentScalar.zero()) + coeff
        terms = [(c, a) for a, c in merged.items() if c != LaurentScalar.zero()]
        terms.sort(key=lambda t: tuple(_atom_key(a) for a in t[1]))
        return ClusterExpression(self.rank, terms)

    def scale(self, s: LaurentScalar | int) -> "ClusterExpression":
        if isinstance(s, int):
            s = LaurentScalar(s)
        return ClusterExpression(self.rank, [(c * s, a) for c, a in self.terms])

    def __add__(self, other: "ClusterExpression") -> "ClusterExpression":
        return ClusterExpression(self.rank, self.terms + other.terms)._normalized()

    def __sub__(self, other: "ClusterExpression") -> "ClusterExpression":
        return self + other.scale(-1)

    def product(self, other: "ClusterExpression") -> "ClusterExpression":
        terms = [
            (ca * cb, aa + ab) for ca, aa in self.terms for cb, ab in other.terms
        ]
        return ClusterExpression(self.rank, terms)._normalized()

    def evaluate(self, form, resolve) -> TorusElement:
        total = TorusElement.zero(self.rank)
        for coeff, atoms in self.terms:
            value = TorusElement.one(self.rank).scale(coeff)
            for atom in atoms:
                value = torus_mul(form, value, resolve(atom))
            total = total + value
        return total

    def to_json(self) -> list[dict]:
        out = []
        for coeff, atoms in self.terms:
            factors = []
            for kind, payload in atoms:
                if kind == "var":
                    factors.append({"kind": "variable", "dims": list(payload.summands[0])})
                else:
                    factors.append({"kind": "monomial", "exp": list(payload)})
            out.append({"coeff": str(coeff), "factors": factors})
        return out


class ExpressionEngine:
    """Executable form of the generation argument: rewrite characters of
    arbitrary objects into cluster variables, identity by identity, with
    every recursion step guarded by its well-founded measure."""

    def __init__(
        self,
        fd: FramedData,
        p: int,
        *,
        budget_subspaces: int = 200_000,
        budget_hom: int = 200_000,
        budget_ext: int = 100_000,
    ) -> None:
        self.fd = fd
        self.p = p
        self.budget_subspaces = budget_subspaces
        self.budget_hom = budget_hom
        self.budget_ext = budget_ext
        self.table = FingerprintTable(fd.quiver, p, support=tuple(range(fd.n)))
        self.injectives = tuple(injective(fd.quiver, p, i) for i in range(fd.m))
        self.socles = tuple(socle(r) for r in self.injectives)
        self._char: dict[tuple, TorusElement] = {}
        self._expr: dict[tuple, ClusterExpression] = {}
        self._strata: dict[tuple, dict] = {}
        self._ext: dict[tuple, dict] = {}
        self._extc: dict[IsoClass, int] = {}

    # ------------------------------------------------------------ plumbing

    def indec_classes(self) -> list[IsoClass]:
        return [IsoClass.of([x.dims]) for x in self.table.catalog]

    def rep_of(self, cls: IsoClass) -> Rep:
        return self.table.rep_of(cls)

    def soc_vector(self, injs: tuple[int, ...]) -> tuple[int, ...]:
        out = [0] * self.fd.m
        for i in injs:
            for v, d in enumerate(self.socles[i]):
                out[v] += d
        return tuple(out)

    def injective_indices(self, rep: Rep) -> tuple[int, ...]:
        """Identify an injective module by its socle (injective envelopes)."""
        soc = socle(rep)
        indices = []
        recon = [0] * self.fd.m
        for i, mult in enumerate(soc):
            indices.extend([i] * mult)
            for v, d in enumerate(self.injectives[i].dims):
                recon[v] += mult * d
        if tuple(recon) != rep.dims:
            raise VerificationError(
                f"cokernel with dims {rep.dims} is not injective (socle {soc})"
            )
        return tuple(indices)

    def character(self, cls: IsoClass, injs: tuple[int, ...]) -> TorusElement:
        key = (cls, injs)
        if key not in self._char:
            obj = CCObject(self.rep_of(cls), injs)
            self._char[key] = cc_character(self.fd, obj, self.budget_subspaces)
        return self._char[key]

    def strata(self, cls: IsoClass, injs: tuple[int, ...]) -> dict:
        key = (cls, injs)
        if key not in self._strata:
            target = Rep.zero(self.fd.quiver, self.p)
            for i in injs:
                target = direct_sum(target, self.injectives[i])
            self._strata[key] = hom_strata(
                self.rep_of(cls),
                target,
                self.table.classify,
                self.injective_indices,
                self.budget_hom,
            )
        return self._strata[key]

    def ext_tally(self, mcls: IsoClass, ncls: IsoClass) -> dict:
        key = (mcls, ncls)
        if key not in self._ext:
            self._ext[key] = ext_classes(
                self.rep_of(mcls), self.rep_of(ncls), self.table, self.budget_ext
            )
        return self._ext[key]

    def extc_self(self, cls: IsoClass) -> int:
        """Symmetrized self-extension count, the phase-two measure."""
        if cls not in self._extc:
            rep = self.rep_of(cls)
            self._extc[cls] = 2 * ext_dim(rep, rep)
        return self._extc[cls]

    def resolve(self, atom: Atom) -> TorusElement:
        kind, payload = atom
        if kind == "var":
            return self.character(payload, ())
        return TorusElement.monomial(payload)

    # ---------------------------------------------------------- rewriting

    def express(self, cls: IsoClass, injs: tuple[int, ...]) -> ClusterExpression:
        """Rewrite the character of (module class, shifted injectives) as a
        Laurent combination of indecomposable characters and monomials."""
        key = (cls, tuple(sorted(injs)))
        if key in self._expr:
            return self._expr[key]
        cls_dim = sum(sum(d) for d in cls.summands)
        if key[1]:
            expr = self._express_mixed(cls, key[1], cls_dim)
        else:
            expr = self._express_module(cls, cls_dim)
        value = expr.evaluate(self.fd.lam, self.resolve)
        target = self.character(cls, key[1])
        if not torus_equal_specialized(value, target, self.p):
            raise VerificationError(
                f"expression for {key} does not evaluate back to its character: "
                f"{_mismatch(value, target, self.p)}"
            )
        self._expr[key] = expr
        return expr

    def _express_mixed(
        self, cls: IsoClass, injs: tuple[int, ...], cls_dim: int
    ) -> ClusterExpression:
        rank = self.fd.m
        soc = self.soc_vector(injs)
        if cls.count == 0:
            return ClusterExpression(rank, [(LaurentScalar(1), (("mono", soc),))])
        m_rep = self.rep_of(cls)
        hom = len(hom_basis(m_rep, self.injective_sum(injs)))
        twist = self.fd.lam.eval(
            self.fd.coefficient_vector(m_rep.dims[: self.fd.n]),
            tuple(-x for x in soc),
        )
        strata = dict(self.strata(cls, injs))
        zero_stratum = (cls, injs)
        if strata.pop(zero_stratum, None) != 1:
            raise VerificationError(
                f"zero homomorphism stratum of {(cls, injs)} is not unital"
            )
        head = self.express(cls, ()).product(
            ClusterExpression(rank, [(LaurentScalar(1), (("mono", soc),))])
        )
        expr = head.scale(LaurentScalar.v_power(2 * hom - twist))
        for (b_cls, i_idx), count in sorted(
            strata.items(), key=lambda kv: (kv[0][0].summands, kv[0][1])
        ):
            b_dim = sum(sum(d) for d in b_cls.summands)
            if b_dim >= cls_dim:
                raise VerificationError(
                    f"kernel stratum {b_cls} does not shrink below {cls}"
                )
            log.debug("mixed step %s -> %s | %s", (cls, injs), b_cls, i_idx)
            expr = expr - self.express(b_cls, i_idx).scale(count)
        return expr

    def _express_module(self, cls: IsoClass, cls_dim: int) -> ClusterExpression:
        rank = self.fd.m
        if cls.count == 0:
            return ClusterExpression(rank, [(LaurentScalar(1), ())])
        if cls.count == 1:
            return ClusterExpression(rank, [(LaurentScalar(1), (("var", cls),))])
        # Split off the lex-smallest summand: for the orientations in scope
        # it sits sink-most, which keeps the extension term genuinely active.
        n_cls = IsoClass.of([cls.summands[0]])
        m_cls = IsoClass.of(cls.summands[1:])
        m_rep, n_rep = self.rep_of(m_cls), self.rep_of(n_cls)
        ext = ext_dim(m_rep, n_rep)
        twist = self.fd.lam.eval(
            self.fd.coefficient_vector(m_rep.dims[: self.fd.n]),
            self.fd.coefficient_vector(n_rep.dims[: self.fd.n]),
        )
        tally = dict(self.ext_tally(m_cls, n_cls))
        if tally.pop(cls, None) != 1:
            raise VerificationError(
                f"split extension of {(m_cls, n_cls)} is not counted once"
            )
        measure = self.extc_self(cls)
        for part in (m_cls, n_cls):
            assert self.extc_self(part) <= measure
            assert sum(sum(d) for d in part.summands) < cls_dim
        expr = (
            self.express(m_cls, ())
            .product(self.express(n_cls, ()))
            .scale(LaurentScalar.v_power(2 * ext - twist))
        )
        for mid_cls, count in sorted(tally.items(), key=lambda kv: kv[0].summands):
            if self.extc_self(mid_cls) >= measure:
                raise VerificationError(
                    f"middle term {mid_cls} does not drop the extension measure "
                    f"of {cls}"
                )
            log.debug("module step %s -> %s", cls, mid_cls)
            expr = expr - self.express(mid_cls, ()).scale(count)
        return expr

    def injective_sum(self, injs: tuple[int, ...]) -> Rep:
        target = Rep.zero(self.fd.quiver, self.p)
        for i in injs:
            target = direct_sum(target, self.injectives[i])
        return target

    # --------------------------------------------------------- reporting

    def check_object(self, cls: IsoClass, injs: tuple[int, ...]) -> dict:
        instance = {
            "module": [list(d) for d in cls.summands],
            "shifted_injectives": [i + 1 for i in injs],
        }
        try:
            expr = self.express(cls, injs)
        except VerificationError as exc:
            return {**instance, "status": "fail", "reason": str(exc)}
        return {**instance, "status": "ok", "expression_terms": len(expr.terms)}


def verify_product_expansion(
    fd: FramedData,
    p: int,
    m_rep: Rep,
    n_rep: Rep,
    table: FingerprintTable,
    *,
    budget_subspaces: int = 200_000,
    budget_ext: int = 100_000,
) -> dict:
    """v^{2[M,N]^1} X_M X_N against the extension-weighted sum of X_E."""
    xm = cc_character(fd, CCObject(m_rep), budget_subspaces)
    xn = cc_character(fd, CCObject(n_rep), budget_subspaces)
    ext = ext_dim(m_rep, n_rep)
    lhs = torus_mul(fd.lam, xm, xn).scale(LaurentScalar.v_power(2 * ext))
    twist = fd.lam.eval(
        fd.coefficient_vector(m_rep.dims[: fd.n]),
        fd.coefficient_vector(n_rep.dims[: fd.n]),
    )
    tally = ext_classes(m_rep, n_rep, table, budget_ext)
    rhs = TorusElement.zero(fd.m)
    for cls, count in tally.items():
        term = cc_character(fd, CCObject(table.rep_of(cls)), budget_subspaces)
        rhs = rhs + term.scale(count)
    rhs = rhs.scale(LaurentScalar.v_power(twist))
    split = table.classify(direct_sum(m_rep, n_rep))
    report = {
        "identity": "product-expansion",
        "p": p,
        "m": list(m_rep.dims[: fd.n]),
        "n": list(n_rep.dims[: fd.n]),
        "ext_dim": ext,
        "middle_terms": len(tally),
        "split_count": tally.get(split, 0),
        "status": "ok" if torus_equal_specialized(lhs, rhs, p) else "fail",
    }
    if report["status"] == "fail":
        report["first_mismatch"] = _mismatch(lhs, rhs, p)
        report["lhs"] = lhs.to_json()
        report["rhs"] = rhs.to_json()
    return report


def verify_injective_shift_expansion(
    fd: FramedData,
    p: int,
    m_rep: Rep,
    inj_indices: tuple[int, ...],
    engine: ExpressionEngine,
) -> dict:
    """v^{2[M,I]} X_M X_{I[-1]} against the Hom-strata expansion."""
    mcls = engine.table.classify(m_rep)
    injs = tuple(sorted(inj_indices))
    xm = engine.character(mcls, ())
    xi = engine.character(IsoClass.of([]), injs)
    hom = len(hom_basis(m_rep, engine.injective_sum(injs)))
    lhs = torus_mul(fd.lam, xm, xi).scale(LaurentScalar.v_power(2 * hom))
    soc = engine.soc_vector(injs)
    twist = fd.lam.eval(
        fd.coefficient_vector(m_rep.dims[: fd.n]), tuple(-x for x in soc)
    )
    strata = engine.strata(mcls, injs)
    rhs = TorusElement.zero(fd.m)
    for (b_cls, i_idx), count in strata.items():
        rhs = rhs + engine.character(b_cls, i_idx).scale(count)
    rhs = rhs.scale(LaurentScalar.v_power(twist))
    report = {
        "identity": "injective-shift-expansion",
        "p": p,
        "m": list(m_rep.dims[: fd.n]),
        "injectives": [i + 1 for i in injs],
        "hom_dim": hom,
        "strata": len(strata),
        "zero_stratum_count": strata.get((mcls, injs), 0),
        "status": "ok" if torus_equal_specialized(lhs, rhs, p) else "fail",
    }
    if report["status"] == "fail":
        report["first_mismatch"] = _mismatch(lhs, rhs, p)
        report["lhs"] = lhs.to_json()
        report["rhs"] = rhs.to_json()
    return report


def verify_extension_drop(
    m_rep: Rep,
    n_rep: Rep,
    table: FingerprintTable,
    budget_ext: int = 100_000,
) -> dict:
    """Every non-split middle term must strictly drop the symmetrized
    self-extension count of M + N."""
    split = table.classify(direct_sum(m_rep, n_rep))
    whole = table.rep_of(split)
    bound = 2 * ext_dim(whole, whole)
    middles = []
    ok = True
    for cls, count in ext_classes(m_rep, n_rep, table, budget_ext).items():
        if cls == split:
            continue
        rep = table.rep_of(cls)
        extc = 2 * ext_dim(rep, rep)
        drops = extc < bound
        ok = ok and drops
        middles.append(
            {
                "middle": [list(d) for d in cls.summands],
                "count": count,
                "extc": extc,
                "drops": drops,
            }
        )
    return {
        "identity": "extension-drop",
        "m": list(m_rep.dims),
        "n": list(n_rep.dims),
        "ext_dim": ext_dim(m_rep, n_rep),
        "bound": bound,
        "middles": sorted(middles, key=lambda d: d["middle"]),
        "status": "ok" if ok else "fail",
    }


def module_multisets(count: int, max_summands: int, max_mult: int):
    """Index multisets of bounded size and per-index multiplicity."""
    for k in range(max_summands + 1):
        for picks in combinations_with_replacement(range(count), k):
            if all(picks.count(i) <= max_mult for i in set(picks)):
                yield picks


def verify_generation(
    fd: FramedData,
    p: int,
    *,
    max_summands: int = 3,
    max_mult: int = 2,
    max_shifts: int = 2,
    budget_seeds: int = 10_000,
    budget_subspaces: int = 200_000,
    budget_hom: int = 200_000,
    budget_ext: int = 100_000,
) -> dict:
    """Both inclusions at desk scale: every bounded object's character is a
    Laurent combination of cluster variables (forward), and every cluster
    variable is an indecomposable character or an initial monomial (reverse)."""
    engine = ExpressionEngine(
        fd,
        p,
        budget_subspaces=budget_subspaces,
        budget_hom=budget_hom,
        budget_ext=budget_ext,
    )
    classes = engine.indec_classes()
    objects = []
    for picks in module_multisets(len(classes), max_summands, max_mult):
        cls = IsoClass.of(
            [d for i in picks for d in classes[i].summands]
        )
        for k in range(max_shifts + 1):
            for injs in combinations_with_replacement(range(fd.m), k):
                objects.append((cls, injs))
    instances = [engine.check_object(cls, injs) for cls, injs in objects]
    failures = [r for r in instances if r["status"] != "ok"]

    variables, seeds_seen = enumerate_cluster_variables(
        fd.initial_seed(), budget_seeds=budget_seeds
    )
    targets: list[TorusElement] = [
        engine.character(cls, ()) for cls in classes
    ]
    for i in range(fd.m):
        exp = [0] * fd.m
        exp[i] = 1
        targets.append(TorusElement.monomial(tuple(exp)))
    target_keys = {t.key() for t in targets}
    unmatched = [v.to_json() for v in variables if v.key() not in target_keys]

    return {
        "identity": "generation",
        "p": p,
        "objects_checked": len(objects),
        "object_failures": failures,
        "cluster_variables": len(variables),
        "seeds_visited": seeds_seen,
        "unmatched_variables": unmatched,
        "status": "ok" if not failures and not unmatched else "fail",
    }
