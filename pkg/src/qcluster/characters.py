"""Framed quivers, the compatible skew form, and quantum cluster characters.

A principal quiver on n vertices is framed by one frozen vertex per
mutable vertex with an arrow i' -> i, which realizes principal
coefficients: btilde stacks the exchange matrix on an identity block and
lam = [[0, -I], [I, -B]] is the minimal skew form compatible with it.

The character of an object M + I[-1] is the Grassmannian-weighted Laurent
sum; submodule counts are taken over F_p while v stays formal.
"""

from __future__ import annotations

from dataclasses import dataclass

from .quiverrep import (
    Quiver,
    Rep,
    euler_form,
    grassmannian_tally,
    indecomposables,
    injective,
    socle,
)
from .scalars import LaurentScalar
from .seeds import QuantumSeed
from .torus import SkewForm, TorusElement


def _matvec(rows, vec) -> tuple[int, ...]:
    return tuple(sum(r * v for r, v in zip(row, vec)) for row in rows)


def _vadd(*vs) -> tuple[int, ...]:
    return tuple(sum(parts) for parts in zip(*vs))


def _vneg(v) -> tuple[int, ...]:
    return tuple(-x for x in v)


@dataclass(frozen=True)
class FramedData:
    """A framed quiver together with every matrix the character map needs."""

    quiver: Quiver
    btilde: tuple[tuple[int, ...], ...]
    rtilde: tuple[tuple[int, ...], ...]
    rtilde_tr: tuple[tuple[int, ...], ...]
    itilde: tuple[tuple[int, ...], ...]
    lam: SkewForm

    @property
    def n(self) -> int:
        return self.quiver.principal

    @property
    def m(self) -> int:
        return self.quiver.vertices

    def __post_init__(self) -> None:
        n, m = self.n, self.m
        for i in range(m):
            for j in range(n):
                assert self.btilde[i][j] == self.rtilde_tr[i][j] - self.rtilde[i][j]
        # lam composed with -btilde must be the left identity block
        for j in range(n):
            col = [-self.btilde[i][j] for i in range(m)]
            image = [
                sum(self.lam.rows[i][k] * col[k] for k in range(m)) for i in range(m)
            ]
            want = [1 if i == j else 0 for i in range(m)]
            assert image == want, "skew form is not compatible with btilde"

    def it_minus_rtr(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(self.itilde[i][j] - self.rtilde_tr[i][j] for j in range(self.n))
            for i in range(self.m)
        )

    def coefficient_vector(self, principal_dims) -> tuple[int, ...]:
        """(itilde - rtilde_tr) applied to a principal dimension vector."""
        return _matvec(self.it_minus_rtr(), principal_dims)

    def initial_seed(self) -> QuantumSeed:
        return QuantumSeed.initial(self.lam, [list(r) for r in self.btilde])

    def to_json(self) -> dict:
        return {
            "quiver": self.quiver.to_json(),
            "btilde": [list(r) for r in self.btilde],
            "lambda": self.lam.to_lists(),
        }


def frame_quiver(q: Quiver) -> FramedData:
    """Frame a principal quiver and solve for the compatible skew form."""
    if q.principal != q.vertices:
        raise ValueError("input quiver must be entirely principal")
    n = q.vertices
    m = 2 * n
    arrows = tuple(q.arrows) + tuple((n + i, i) for i in range(n))
    framed = Quiver(m, arrows, principal=n)
    rtilde = [[0] * n for _ in range(m)]
    rtilde_tr = [[0] * n for _ in range(m)]
    for s, t in arrows:
        if s < n:
            rtilde[t][s] += 1
        if t < n:
            rtilde_tr[s][t] += 1
    btilde = [
        [rtilde_tr[i][j] - rtilde[i][j] for j in range(n)] for i in range(m)
    ]
    itilde = [[1 if i == j else 0 for j in range(n)] for i in range(m)]
    lam = [[0] * m for _ in range(m)]
    for i in range(n):
        lam[i][n + i] = -1
        lam[n + i][i] = 1
        for j in range(n):
            lam[n + i][n + j] = -btilde[i][j]
    return FramedData(
        quiver=framed,
        btilde=tuple(tuple(r) for r in btilde),
        rtilde=tuple(tuple(r) for r in rtilde),
        rtilde_tr=tuple(tuple(r) for r in rtilde_tr),
        itilde=tuple(tuple(r) for r in itilde),
        lam=SkewForm(lam),
    )


def framed_linear(n: int) -> FramedData:
    """Framed equioriented A_n."""
    from .quiverrep import linear_quiver

    return frame_quiver(linear_quiver(n))


@dataclass(frozen=True)
class CCObject:
    """An object of the cluster category: a module supported on the
    principal vertices plus a multiset of shifted injectives."""

    module: Rep
    injectives: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        n = self.module.quiver.principal
        assert all(d == 0 for d in self.module.dims[n:]), (
            "module part must be supported on principal vertices"
        )
        object.__setattr__(self, "injectives", tuple(sorted(self.injectives)))

    def key(self):
        return (self.module.key(), self.injectives)


def cc_character(
    fd: FramedData, obj: CCObject, budget_subspaces: int = 200_000
) -> TorusElement:
    """Character of M + I[-1]: submodule counts against torus monomials.

    Each submodule dimension vector e contributes
    |Gr_e M| v^{-<e, m - e - dim I>} X^{-btilde e - (itilde - rtilde_tr) m + dim soc I}.
    """
    quiver = fd.quiver
    p = obj.module.p
    n, m = fd.n, fd.m
    inj_reps = [injective(quiver, p, i) for i in obj.injectives]
    i_dims = _vadd((0,) * m, *(r.dims for r in inj_reps)) if inj_reps else (0,) * m
    soc_sum = _vadd((0,) * m, *(socle(r) for r in inj_reps)) if inj_reps else (0,) * m
    m_full = obj.module.dims
    base_exp = _vadd(_vneg(fd.coefficient_vector(m_full[:n])), soc_sum)
    terms: dict[tuple[int, ...], LaurentScalar] = {}
    for e_full, count in grassmannian_tally(obj.module, budget_subspaces).items():
        btilde_e = _matvec(fd.btilde, e_full[:n])
        exp = _vadd(base_exp, _vneg(btilde_e))
        diff = tuple(a - b - c for a, b, c in zip(m_full, e_full, i_dims))
        twist = -euler_form(quiver, e_full, diff)
        term = LaurentScalar({twist: count})
        terms[exp] = terms.get(exp, LaurentScalar.zero()) + term
    return TorusElement(m, terms)


def principal_indecomposables(fd: FramedData, p: int) -> list[Rep]:
    return indecomposables(fd.quiver, p, support=tuple(range(fd.n)))


def shifted_injective_character(fd: FramedData, p: int, indices) -> TorusElement:
    """X_{I[-1]} is the single monomial on the socle dimension vector."""
    obj = CCObject(Rep.zero(fd.quiver, p), tuple(indices))
    return cc_character(fd, obj)


def character_of_indec_catalog(
    fd: FramedData, p: int, budget_subspaces: int = 200_000
) -> list[dict]:
    """Characters of every indecomposable object: the principal
    indecomposable modules and the principal shifted injectives."""
    entries: list[dict] = []
    for rep in principal_indecomposables(fd, p):
        x = cc_character(fd, CCObject(rep), budget_subspaces)
        entries.append({"kind": "module", "dims": list(rep.dims[: fd.n]), "character": x})
    for i in range(fd.n):
        x = shifted_injective_character(fd, p, (i,))
        entries.append({"kind": "shifted-injective", "vertex": i + 1, "character": x})
    return entries
