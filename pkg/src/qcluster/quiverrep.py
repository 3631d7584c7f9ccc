"""Quiver representations over F_p.

Hom spaces by intertwiner solving, Euler-form Ext dimensions, submodule
and Grassmannian enumeration, Hom-count isomorphism fingerprints,
extension middle terms, Hom strata, automorphism counts, and the
subquotient tallies that feed the multiplication identities.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import product as iproduct

import numpy as np

from . import gfp
from .errors import BudgetExceededError, UnsupportedQuiverError

log = logging.getLogger(__name__)

Vec = tuple[int, ...]


@dataclass(frozen=True)
class Quiver:
    """Finite acyclic quiver; vertices 0..vertices-1, the first
    ``principal`` of them forming the mutable (non-frozen) part."""

    vertices: int
    arrows: tuple[tuple[int, int], ...]
    principal: int = -1

    def __post_init__(self) -> None:
        if self.principal < 0:
            object.__setattr__(self, "principal", self.vertices)
        for s, t in self.arrows:
            if not (0 <= s < self.vertices and 0 <= t < self.vertices):
                raise ValueError(f"arrow ({s},{t}) out of range")
            if s == t:
                raise ValueError("loops are not allowed")
        self.topological_order()  # raises on a cycle

    def topological_order(self) -> tuple[int, ...]:
        indeg = [0] * self.vertices
        for _, t in self.arrows:
            indeg[t] += 1
        queue = [v for v in range(self.vertices) if indeg[v] == 0]
        order: list[int] = []
        while queue:
            v = queue.pop()
            order.append(v)
            for s, t in self.arrows:
                if s == v:
                    indeg[t] -= 1
                    if indeg[t] == 0:
                        queue.append(t)
        if len(order) != self.vertices:
            raise ValueError("quiver has an oriented cycle")
        return tuple(order)

    def arrows_from(self, v: int) -> list[int]:
        return [a for a, (s, _) in enumerate(self.arrows) if s == v]

    def arrows_into(self, v: int) -> list[int]:
        return [a for a, (_, t) in enumerate(self.arrows) if t == v]

    def spine(self, support: tuple[int, ...] | None = None) -> tuple[int, ...]:
        """Vertex order along the underlying path of the (sub)graph.

        Raises UnsupportedQuiverError when the underlying graph induced on
        ``support`` is not a simple path — branching vertices make the
        interval-module catalog meaningless.
        """
        verts = list(range(self.vertices)) if support is None else list(support)
        vset = set(verts)
        adj: dict[int, list[int]] = {v: [] for v in verts}
        seen: set[tuple[int, int]] = set()
        for s, t in self.arrows:
            if s in vset and t in vset:
                if (s, t) in seen or (t, s) in seen:
                    raise UnsupportedQuiverError("parallel edges between vertices")
                seen.add((s, t))
                adj[s].append(t)
                adj[t].append(s)
        if len(verts) == 1:
            return (verts[0],)
        ends = [v for v in verts if len(adj[v]) == 1]
        if any(len(adj[v]) > 2 for v in verts) or len(ends) != 2:
            raise UnsupportedQuiverError("underlying graph is not a simple path")
        order = [min(ends)]
        prev = -1
        while len(order) < len(verts):
            nxts = [w for w in adj[order[-1]] if w != prev]
            if len(nxts) != 1:
                raise UnsupportedQuiverError("underlying graph is disconnected")
            prev = order[-1]
            order.append(nxts[0])
        return tuple(order)

    def to_json(self) -> dict:
        return {
            "vertices": self.vertices,
            "principal": self.principal,
            "arrows": [[s + 1, t + 1] for s, t in self.arrows],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Quiver":
        return cls(
            vertices=int(data["vertices"]),
            arrows=tuple((int(s) - 1, int(t) - 1) for s, t in data["arrows"]),
            principal=int(data.get("principal", data["vertices"])),
        )


def linear_quiver(n: int) -> Quiver:
    """The equioriented path 0 -> 1 -> ... -> n-1."""
    return Quiver(n, tuple((i, i + 1) for i in range(n - 1)))


class Rep:
    """A representation: one F_p space per vertex, one matrix per arrow.

    maps[a] has shape (dims[target], dims[source]); instances are treated
    as immutable and hash by their presenting matrices.
    """

    __slots__ = ("quiver", "p", "dims", "maps", "_key")

    def __init__(self, quiver: Quiver, p: int, dims, maps) -> None:
        self.quiver = quiver
        self.p = p
        self.dims: Vec = tuple(int(d) for d in dims)
        mats = []
        for a, (s, t) in enumerate(quiver.arrows):
            m = np.array(maps[a], dtype=np.int64).reshape(self.dims[t], self.dims[s]) % p
            m.setflags(write=False)
            mats.append(m)
        self.maps: tuple[np.ndarray, ...] = tuple(mats)
        self._key = (self.dims, tuple(m.tobytes() for m in self.maps))

    @classmethod
    def zero(cls, quiver: Quiver, p: int) -> "Rep":
        return cls.interval(quiver, p, ())

    @classmethod
    def simple(cls, quiver: Quiver, p: int, i: int) -> "Rep":
        return cls.interval(quiver, p, (i,))

    @classmethod
    def interval(cls, quiver: Quiver, p: int, support) -> "Rep":
        """Thin module: dimension one on ``support``, identity on arrows
        joining two support vertices."""
        sup = set(support)
        dims = [1 if v in sup else 0 for v in range(quiver.vertices)]
        maps = []
        for s, t in quiver.arrows:
            if s in sup and t in sup:
                maps.append([[1]])
            else:
                maps.append(np.zeros((dims[t], dims[s]), dtype=np.int64))
        return cls(quiver, p, dims, maps)

    def key(self):
        return self._key

    def __eq__(self, other) -> bool:
        return isinstance(other, Rep) and self._key == other._key and self.p == other.p

    def __hash__(self) -> int:
        return hash((self._key, self.p))

    def __repr__(self) -> str:
        return f"Rep(dims={self.dims}, p={self.p})"

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "dims": list(self.dims),
            "maps": [
                {"arrow": [s + 1, t + 1], "matrix": self.maps[a].tolist()}
                for a, (s, t) in enumerate(self.quiver.arrows)
            ],
        }

    @classmethod
    def from_json(cls, quiver: Quiver, data: dict) -> "Rep":
        return cls(quiver, int(data["p"]), data["dims"], [m["matrix"] for m in data["maps"]])


def direct_sum(a: Rep, b: Rep) -> Rep:
    assert a.quiver == b.quiver and a.p == b.p
    dims = [da + db for da, db in zip(a.dims, b.dims)]
    maps = []
    for k, (s, t) in enumerate(a.quiver.arrows):
        blk = np.zeros((dims[t], dims[s]), dtype=np.int64)
        blk[: a.dims[t], : a.dims[s]] = a.maps[k]
        blk[a.dims[t] :, a.dims[s] :] = b.maps[k]
        maps.append(blk)
    return Rep(a.quiver, a.p, dims, maps)


def indecomposables(quiver: Quiver, p: int, support=None) -> list[Rep]:
    """Interval modules along the path underlying the (sub)quiver,
    sorted by dimension vector.  On a type-A path every indecomposable is an
    interval module, so this list is exhaustive."""
    spine = quiver.spine(support)
    out = []
    for i in range(len(spine)):
        for j in range(i, len(spine)):
            rep = Rep.interval(quiver, p, spine[i : j + 1])
            assert hom_dim(rep, rep) == 1 and ext_dim(rep, rep) == 0
            out.append(rep)
    out.sort(key=lambda r: r.dims)
    return out


def _paths_between(quiver: Quiver, start: int) -> dict[int, list[tuple[int, ...]]]:
    """All directed paths out of ``start``, grouped by endpoint; each path
    is its arrow-index sequence (empty tuple = lazy path at start)."""
    buckets: dict[int, list[tuple[int, ...]]] = {v: [] for v in range(quiver.vertices)}
    stack: list[tuple[int, tuple[int, ...]]] = [(start, ())]
    while stack:
        v, path = stack.pop()
        buckets[v].append(path)
        for a in quiver.arrows_from(v):
            stack.append((quiver.arrows[a][1], path + (a,)))
    for v in buckets:
        buckets[v].sort()
    return buckets


def projective(quiver: Quiver, p: int, i: int) -> Rep:
    """P_i on the basis of paths starting at i; arrows postcompose."""
    paths = _paths_between(quiver, i)
    dims = [len(paths[v]) for v in range(quiver.vertices)]
    maps = []
    for a, (s, t) in enumerate(quiver.arrows):
        mat = np.zeros((dims[t], dims[s]), dtype=np.int64)
        for col, path in enumerate(paths[s]):
            mat[paths[t].index(path + (a,)), col] = 1
        maps.append(mat)
    return Rep(quiver, p, dims, maps)


def injective(quiver: Quiver, p: int, i: int) -> Rep:
    """I_i on the basis of paths ending at i; arrows delete a leading step."""
    rev = Quiver(quiver.vertices, tuple((t, s) for s, t in quiver.arrows))
    rpaths = _paths_between(rev, i)  # reversed arrow sequences j -> i
    dims = [len(rpaths[v]) for v in range(quiver.vertices)]
    maps = []
    for a, (s, t) in enumerate(quiver.arrows):
        mat = np.zeros((dims[t], dims[s]), dtype=np.int64)
        for col, rpath in enumerate(rpaths[s]):
            # rpath lists arrows from i backwards; a path j -> i starts
            # with arrow a exactly when its reversed form ends with a.
            if rpath and rpath[-1] == a:
                mat[rpaths[t].index(rpath[:-1]), col] = 1
        maps.append(mat)
    return Rep(quiver, p, dims, maps)


def socle(m: Rep) -> Vec:
    """Dimension vector of the largest semisimple submodule."""
    out = []
    for v in range(m.quiver.vertices):
        outgoing = [m.maps[a] for a in m.quiver.arrows_from(v)]
        if not outgoing or m.dims[v] == 0:
            out.append(m.dims[v])
        else:
            stacked = np.vstack(outgoing)
            out.append(m.dims[v] - gfp.rank(stacked, m.p))
    return tuple(out)


def top(m: Rep) -> Vec:
    """Dimension vector of the largest semisimple quotient."""
    out = []
    for v in range(m.quiver.vertices):
        incoming = [m.maps[a] for a in m.quiver.arrows_into(v)]
        if not incoming or m.dims[v] == 0:
            out.append(m.dims[v])
        else:
            stacked = np.hstack(incoming)
            out.append(m.dims[v] - gfp.rank(stacked, m.p))
    return tuple(out)


def hom_basis(m: Rep, n: Rep) -> list[tuple[np.ndarray, ...]]:
    """Basis of the intertwiner space {f : f_t M_a = N_a f_s for all a}."""
    assert m.quiver == n.quiver and m.p == n.p
    p = m.p
    nv = m.quiver.vertices
    sizes = [n.dims[v] * m.dims[v] for v in range(nv)]
    offs = np.concatenate([[0], np.cumsum(sizes)])
    total = int(offs[-1])
    blocks = []
    for a, (s, t) in enumerate(m.quiver.arrows):
        neq = n.dims[t] * m.dims[s]
        if neq == 0:
            continue
        eq = np.zeros((neq, total), dtype=np.int64)
        if sizes[s]:
            eq[:, offs[s] : offs[s] + sizes[s]] += np.kron(
                n.maps[a], np.eye(m.dims[s], dtype=np.int64)
            )
        if sizes[t]:
            eq[:, offs[t] : offs[t] + sizes[t]] -= np.kron(
                np.eye(n.dims[t], dtype=np.int64), m.maps[a].T
            )
        blocks.append(eq % p)
    if total == 0:
        return []
    system = np.vstack(blocks) if blocks else np.zeros((0, total), dtype=np.int64)
    basis = []
    for row in gfp.nullspace(system, p):
        f = tuple(
            row[offs[v] : offs[v] + sizes[v]].reshape(n.dims[v], m.dims[v])
            for v in range(nv)
        )
        basis.append(f)
    return basis


def hom_dim(m: Rep, n: Rep) -> int:
    return len(hom_basis(m, n))


def euler_form(quiver: Quiver, e, f) -> int:
    val = sum(int(a) * int(b) for a, b in zip(e, f))
    for s, t in quiver.arrows:
        val -= int(e[s]) * int(f[t])
    return val


def ext_dim(m: Rep, n: Rep) -> int:
    """dim Ext^1 via hereditarity: hom minus the Euler form."""
    val = hom_dim(m, n) - euler_form(m.quiver, m.dims, n.dims)
    assert val >= 0
    return val


def _vertex_subspaces(dim: int, p: int):
    out = []
    for k in range(dim + 1):
        for basis in gfp.subspaces(dim, k, p):
            red, piv = gfp.rref(basis, p) if k else (basis, ())
            out.append((red, piv))
    return out


def submodule_tuples(m: Rep, budget: int = 200_000):
    """Yield one (bases, pivots) per submodule: a subspace at each vertex,
    closed under every arrow map."""
    estimate = 1
    for d in m.dims:
        estimate *= sum(gfp.count_subspaces(d, k, m.p) for k in range(d + 1))
        if estimate > budget:
            raise BudgetExceededError(
                f"submodule enumeration needs {estimate} > {budget} subspace tuples"
            )
    choices = [_vertex_subspaces(d, m.p) for d in m.dims]
    for combo in iproduct(*choices):
        ok = True
        for a, (s, t) in enumerate(m.quiver.arrows):
            basis_s = combo[s][0]
            for u in basis_s:
                if not gfp.in_span(combo[t][0], combo[t][1], (m.maps[a] @ u) % m.p, m.p):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield combo


def _coords_in_rref(basis: np.ndarray, pivots, w: np.ndarray, p: int) -> np.ndarray:
    coeffs = np.array([w[c] for c in pivots], dtype=np.int64)
    assert not ((w - coeffs @ basis) % p).any(), "vector outside subspace"
    return coeffs % p


def sub_quotient(m: Rep, combo) -> tuple[Rep, Rep]:
    """Materialize the submodule on the given subspaces and its quotient."""
    p = m.p
    sub_dims = [len(c[0]) for c in combo]
    comp = [gfp.extend_to_basis(c[0], p, d) for c, d in zip(combo, m.dims)]
    sub_maps = []
    quot_maps = []
    for a, (s, t) in enumerate(m.quiver.arrows):
        smat = np.zeros((sub_dims[t], sub_dims[s]), dtype=np.int64)
        for col, u in enumerate(combo[s][0]):
            smat[:, col] = _coords_in_rref(combo[t][0], combo[t][1], (m.maps[a] @ u) % p, p)
        sub_maps.append(smat)
        full_t = np.vstack([combo[t][0], comp[t]]) if m.dims[t] else comp[t]
        qmat = np.zeros((m.dims[t] - sub_dims[t], m.dims[s] - sub_dims[s]), dtype=np.int64)
        for col, u in enumerate(comp[s]):
            y = gfp.solve(full_t.T, (m.maps[a] @ u) % p, p)
            qmat[:, col] = y[sub_dims[t] :]
        quot_maps.append(qmat)
    sub = Rep(m.quiver, p, sub_dims, sub_maps)
    quot = Rep(m.quiver, p, [d - k for d, k in zip(m.dims, sub_dims)], quot_maps)
    return sub, quot


def submodules(m: Rep, budget: int = 200_000) -> list[tuple[Rep, Rep]]:
    return [sub_quotient(m, combo) for combo in submodule_tuples(m, budget)]


def grassmannian_tally(m: Rep, budget: int = 200_000) -> dict[Vec, int]:
    """Number of submodules per dimension vector."""
    tally: dict[Vec, int] = {}
    for combo in submodule_tuples(m, budget):
        e = tuple(len(c[0]) for c in combo)
        tally[e] = tally.get(e, 0) + 1
    return tally


def grassmannian_count(m: Rep, e, budget: int = 200_000) -> int:
    return grassmannian_tally(m, budget).get(tuple(int(x) for x in e), 0)


@dataclass(frozen=True)
class IsoClass:
    """Isomorphism class as the sorted multiset of indecomposable-summand
    dimension vectors (a complete invariant for the quivers in scope)."""

    summands: tuple[Vec, ...]

    @classmethod
    def of(cls, dim_vectors) -> "IsoClass":
        return cls(tuple(sorted(tuple(int(x) for x in d) for d in dim_vectors)))

    def __add__(self, other: "IsoClass") -> "IsoClass":
        return IsoClass.of(self.summands + other.summands)

    @property
    def count(self) -> int:
        return len(self.summands)

    def dims(self, vertices: int) -> Vec:
        out = [0] * vertices
        for d in self.summands:
            for i, x in enumerate(d):
                out[i] += x
        return tuple(out)

    def multiplicities(self) -> dict[Vec, int]:
        out: dict[Vec, int] = {}
        for d in self.summands:
            out[d] = out.get(d, 0) + 1
        return out


class FingerprintTable:
    """Krull–Schmidt decomposition by Hom counts.

    hom_dim(X, -) against the interval catalog is unitriangular in a
    suitable order (finite-type path algebras are representation-directed),
    so multiplicities fall out of one back-substitution.
    """

    def __init__(self, quiver: Quiver, p: int, support=None) -> None:
        self.quiver = quiver
        self.p = p
        catalog = indecomposables(quiver, p, support)
        order: list[Rep] = []
        remaining = list(catalog)
        while remaining:  # peel off sinks of the Hom relation
            for idx, x in enumerate(remaining):
                if all(
                    hom_dim(x, y) == 0 for y in remaining if y is not x
                ):
                    order.append(remaining.pop(idx))
                    break
            else:
                raise AssertionError("Hom relation has a cycle; not finite type?")
        order.reverse()
        self.catalog: tuple[Rep, ...] = tuple(order)
        self.gram = [
            [hom_dim(x, y) for y in self.catalog] for x in self.catalog
        ]
        for i, row in enumerate(self.gram):
            assert row[i] == 1
            assert all(row[j] == 0 for j in range(i))

    def classify(self, m: Rep) -> IsoClass:
        counts = [hom_dim(x, m) for x in self.catalog]
        r = len(self.catalog)
        mults = [0] * r
        for i in range(r - 1, -1, -1):
            mults[i] = counts[i] - sum(
                self.gram[i][j] * mults[j] for j in range(i + 1, r)
            )
            assert mults[i] >= 0, "module outside the catalog's additive hull"
        recon = [0] * m.quiver.vertices
        for mult, x in zip(mults, self.catalog):
            for v, d in enumerate(x.dims):
                recon[v] += mult * d
        assert tuple(recon) == m.dims, "fingerprint failed to account for all of M"
        out: list[Vec] = []
        for mult, x in zip(mults, self.catalog):
            out.extend([x.dims] * mult)
        return IsoClass.of(out)

    def rep_of(self, iso: IsoClass) -> Rep:
        by_dims = {x.dims: x for x in self.catalog}
        rep = Rep.zero(self.quiver, self.p)
        for d in iso.summands:
            rep = direct_sum(rep, by_dims[d])
        return rep


def ext_classes(
    m: Rep, n: Rep, table: FingerprintTable, budget: int = 100_000
) -> dict[IsoClass, int]:
    """Count Ext^1(M, N) classes by the iso class of the middle term.

    Classes are cosets of coboundaries inside the full cocycle space
    ⊕_a Hom(M_{s(a)}, N_{t(a)}); a complement meets each coset once.
    """
    p = m.p
    quiver = m.quiver
    asizes = [n.dims[t] * m.dims[s] for s, t in quiver.arrows]
    aoffs = np.concatenate([[0], np.cumsum(asizes)])
    total = int(aoffs[-1])
    vsizes = [n.dims[v] * m.dims[v] for v in range(quiver.vertices)]
    voffs = np.concatenate([[0], np.cumsum(vsizes)])
    cob = np.zeros((total, int(voffs[-1])), dtype=np.int64)
    for a, (s, t) in enumerate(quiver.arrows):
        if not asizes[a]:
            continue
        rows = slice(int(aoffs[a]), int(aoffs[a + 1]))
        if vsizes[s]:
            cob[rows, voffs[s] : voffs[s] + vsizes[s]] += np.kron(
                n.maps[a], np.eye(m.dims[s], dtype=np.int64)
            )
        if vsizes[t]:
            cob[rows, voffs[t] : voffs[t] + vsizes[t]] -= np.kron(
                np.eye(n.dims[t], dtype=np.int64), m.maps[a].T
            )
    red, piv = gfp.rref(cob.T % p, p)
    image_basis = red[: len(piv)]
    complement = gfp.extend_to_basis(image_basis, p, total)
    e_dim = ext_dim(m, n)
    assert len(complement) == e_dim
    if p**e_dim > budget:
        raise BudgetExceededError(f"{p}^{e_dim} extension classes exceed {budget}")
    tally: dict[IsoClass, int] = {}
    dims = [n.dims[v] + m.dims[v] for v in range(quiver.vertices)]
    for coeffs in iproduct(range(p), repeat=e_dim):
        vec = np.zeros(total, dtype=np.int64)
        for c, row in zip(coeffs, complement):
            vec = (vec + c * row) % p
        maps = []
        for a, (s, t) in enumerate(quiver.arrows):
            blk = np.zeros((dims[t], dims[s]), dtype=np.int64)
            blk[: n.dims[t], : n.dims[s]] = n.maps[a]
            blk[n.dims[t] :, n.dims[s] :] = m.maps[a]
            blk[: n.dims[t], n.dims[s] :] = vec[aoffs[a] : aoffs[a + 1]].reshape(
                n.dims[t], m.dims[s]
            )
            maps.append(blk)
        mid = table.classify(Rep(quiver, p, dims, maps))
        tally[mid] = tally.get(mid, 0) + 1
    return tally


def _image_subspace(fmat: np.ndarray, p: int):
    red, piv = gfp.rref(fmat.T % p, p)
    r = len(piv)
    return red[:r], piv


def _kernel_subspace(fmat: np.ndarray, p: int):
    if fmat.shape[1] == 0:
        return np.zeros((0, 0), dtype=np.int64), ()
    basis = gfp.nullspace(fmat, p)
    return gfp.rref(basis, p) if len(basis) else (basis, ())


def hom_strata(
    m: Rep,
    target: Rep,
    classify_kernel,
    classify_cokernel,
    budget: int = 100_000,
) -> dict[tuple, int]:
    """Tally every f in Hom(M, target) by (class of ker f, class of coker f).

    The classifiers are injected because kernels land in the module part
    of the category while cokernels of maps into injectives stay injective.
    """
    basis = hom_basis(m, target)
    h = len(basis)
    if m.p**h > budget:
        raise BudgetExceededError(f"{m.p}^{h} homomorphisms exceed {budget}")
    tally: dict[tuple, int] = {}
    nv = m.quiver.vertices
    for coeffs in iproduct(range(m.p), repeat=h):
        fs = []
        for v in range(nv):
            f = np.zeros((target.dims[v], m.dims[v]), dtype=np.int64)
            for c, b in zip(coeffs, basis):
                f = (f + c * b[v]) % m.p
            fs.append(f)
        ker_combo = [_kernel_subspace(fs[v], m.p) for v in range(nv)]
        ker_rep, _ = sub_quotient(m, ker_combo)
        im_combo = [_image_subspace(fs[v], m.p) for v in range(nv)]
        _, coker_rep = sub_quotient(target, im_combo)
        key = (classify_kernel(ker_rep), classify_cokernel(coker_rep))
        tally[key] = tally.get(key, 0) + 1
    return tally


def aut_order(m: Rep, budget: int = 200_000) -> int:
    """|Aut M| by enumerating the endomorphism space."""
    basis = hom_basis(m, m)
    if m.p ** len(basis) > budget:
        raise BudgetExceededError(f"{m.p}^{len(basis)} endomorphisms exceed {budget}")
    count = 0
    for coeffs in iproduct(range(m.p), repeat=len(basis)):
        invertible = True
        for v in range(m.quiver.vertices):
            f = np.zeros((m.dims[v], m.dims[v]), dtype=np.int64)
            for c, b in zip(coeffs, basis):
                f = (f + c * b[v]) % m.p
            if gfp.rank(f, m.p) < m.dims[v]:
                invertible = False
                break
        count += invertible
    return count


def hall_tally(
    m: Rep, classify_sub, classify_quot, budget: int = 200_000
) -> dict[tuple, int]:
    """Hall numbers F^M_{A,B}: tally submodules by (quotient class A, sub class B)."""
    tally: dict[tuple, int] = {}
    for combo in submodule_tuples(m, budget):
        sub, quot = sub_quotient(m, combo)
        key = (classify_quot(quot), classify_sub(sub))
        tally[key] = tally.get(key, 0) + 1
    return tally
