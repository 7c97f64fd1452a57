"""Representations of bound quiver algebras and the basic functors.

A representation of ``A = KQ/I`` is a right A-module: a space ``M_x`` per
vertex and a matrix ``M_a`` of shape ``(dim M_t, dim M_s)`` per arrow
``a: s -> t``.  A path ``a1*a2*...*ak`` acts as ``M_ak @ ... @ M_a1``.
Morphisms are tuples of per-vertex matrices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from . import linalg as la
from .algebra import BoundQuiverAlgebra, gabriel_presentation
from .errors import NonSplitEndo, RadicalFailure

_OPPOSITES: dict = {}


def opposite_algebra(A: BoundQuiverAlgebra) -> BoundQuiverAlgebra:
    """Cached opposite so that double duals land on the original algebra."""
    key = id(A)
    hit = _OPPOSITES.get(key)
    if hit is not None and hit[0] is A:
        return hit[1]
    op = A.opposite()
    _OPPOSITES[key] = (A, op)
    _OPPOSITES[id(op)] = (op, A)
    return op


class Representation:
    def __init__(self, algebra: BoundQuiverAlgebra, dims, maps, check: bool = False):
        self.algebra = algebra
        self.field = algebra.field
        q = algebra.quiver
        if isinstance(dims, dict):
            dims = [int(dims.get(v, 0)) for v in q.vertices]
        self.dims = tuple(int(d) for d in dims)
        if isinstance(maps, dict):
            ms = []
            for i, a in enumerate(q.arrows):
                m = maps.get(a.name)
                shape = (self.dims[q.atgt[i]], self.dims[q.asrc[i]])
                if m is None:
                    m = self.field.zeros(shape)
                elif not isinstance(m, np.ndarray) or m.dtype != np.dtype(self.field.dtype):
                    m = self.field.array(m).reshape(shape) if shape[0] * shape[1] else self.field.zeros(shape)
                ms.append(m)
            maps = ms
        self.maps = tuple(maps)
        for i, m in enumerate(self.maps):
            shape = (self.dims[q.atgt[i]], self.dims[q.asrc[i]])
            if m.shape != shape:
                raise ValueError(f"arrow {q.arrows[i].name}: matrix shape {m.shape}, expected {shape}")
        self._cache: dict = {}
        if check and not self.check_relations():
            raise ValueError("representation violates a relation")

    # -- basic data ------------------------------------------------------
    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def dimension_vector(self) -> tuple:
        return self.dims

    def dim_at(self, v) -> int:
        return self.dims[self.algebra.vertex_index(v)]

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def __repr__(self):
        dv = ",".join(str(d) for d in self.dims)
        return f"Representation([{dv}])"

    def path_matrix(self, arrows, source: int):
        f = self.field
        m = f.eye(self.dims[source])
        for a in arrows:
            m = f.matmul(self.maps[a], m)
        return m

    def basis_action(self, b: int):
        """Matrix of basis element ``b`` of the algebra (zero-sized if out of block)."""
        hit = self._cache.get(b)
        if hit is None:
            s, p = self.algebra.paths[b]
            hit = self.path_matrix(p, s)
            self._cache[b] = hit
        return hit

    def element_action(self, elem: dict, x: int, y: int):
        """Matrix M_x -> M_y of an element (sparse dict) of e_x A e_y."""
        f = self.field
        out = f.zeros((self.dims[y], self.dims[x]))
        A = self.algebra
        for b, c in elem.items():
            if A.src[b] == x and A.tgt[b] == y:
                out = out + c * self.basis_action(b)
        return f.normalize(out)

    def check_relations(self) -> bool:
        A = self.algebra
        q = A.quiver
        for r in A.relations:
            s, t = q.vindex[r.source], q.vindex[r.target]
            acc = self.field.zeros((self.dims[t], self.dims[s]))
            for c, names in r.terms:
                acc = acc + c * self.path_matrix([q.aindex[n] for n in names], s)
            if not self.field.is_zero_matrix(self.field.normalize(acc)):
                return False
        return True

    def to_json(self) -> dict:
        f = self.field
        q = self.algebra.quiver
        return {
            "dims": {v: d for v, d in zip(q.vertices, self.dims)},
            "maps": {a.name: [[f.to_json(x) for x in row] for row in m] for a, m in zip(q.arrows, self.maps)},
        }

    def same_as(self, other) -> bool:
        return self.dims == other.dims and all(np.array_equal(a, b) for a, b in zip(self.maps, other.maps))


def representation_from_json(A: BoundQuiverAlgebra, d) -> Representation:
    if isinstance(d, str):
        d = json.loads(d)
    return Representation(A, d["dims"], {k: v for k, v in d.get("maps", {}).items()}, check=True)


# ---------------------------------------------------------------------------
# standard modules


def zero_rep(A) -> Representation:
    return Representation(A, [0] * A.nvertices, {})


def simple(A, x) -> Representation:
    xi = A.vertex_index(x) if not isinstance(x, int) else x
    dims = [1 if v == xi else 0 for v in range(A.nvertices)]
    return Representation(A, dims, {})


def projective(A, x) -> Representation:
    """P(x) = e_x A; at y it has the basis of e_x A e_y, arrows act on the right."""
    xi = A.vertex_index(x) if not isinstance(x, int) else x
    f = A.field
    q = A.quiver
    blocks = [A.block(xi, y) for y in range(A.nvertices)]
    pos = [{b: i for i, b in enumerate(bl)} for bl in blocks]
    maps = []
    for a in range(len(q.arrows)):
        s, t = q.asrc[a], q.atgt[a]
        m = f.zeros((len(blocks[t]), len(blocks[s])))
        ab = A.arrow_basis[a]
        for j, b in enumerate(blocks[s]):
            for k, c in A.structure(b, ab).items():
                m[pos[t][k], j] = c
        maps.append(m)
    return Representation(A, [len(b) for b in blocks], maps)


def injective(A, x) -> Representation:
    """I(x) = D(A e_x); at y it has the dual basis of e_y A e_x."""
    xi = A.vertex_index(x) if not isinstance(x, int) else x
    f = A.field
    q = A.quiver
    blocks = [A.block(y, xi) for y in range(A.nvertices)]
    pos = [{b: i for i, b in enumerate(bl)} for bl in blocks]
    maps = []
    for a in range(len(q.arrows)):
        s, t = q.asrc[a], q.atgt[a]
        m = f.zeros((len(blocks[t]), len(blocks[s])))
        ab = A.arrow_basis[a]
        # (f_b . a)(c) = f_b(a c) for c in e_t A e_x
        for i, c in enumerate(blocks[t]):
            for k, v in A.structure(ab, c).items():
                m[i, pos[s][k]] = v
        maps.append(m)
    return Representation(A, [len(b) for b in blocks], maps)


def direct_sum(mods) -> Representation:
    mods = list(mods)
    A = mods[0].algebra
    f = A.field
    q = A.quiver
    dims = [sum(M.dims[v] for M in mods) for v in range(A.nvertices)]
    maps = []
    for a in range(len(q.arrows)):
        s, t = q.asrc[a], q.atgt[a]
        m = f.zeros((dims[t], dims[s]))
        r = c = 0
        for M in mods:
            m[r:r + M.dims[t], c:c + M.dims[s]] = M.maps[a]
            r += M.dims[t]
            c += M.dims[s]
        maps.append(m)
    return Representation(A, dims, maps)


def check_relations(M: Representation) -> bool:
    return M.check_relations()


# ---------------------------------------------------------------------------
# morphisms


def identity_morphism(M):
    return tuple(M.field.eye(d) for d in M.dims)


def zero_morphism(M, N):
    return tuple(M.field.zeros((N.dims[v], M.dims[v])) for v in range(len(M.dims)))


def compose(g, f, field):
    """g after f."""
    return tuple(field.matmul(gv, fv) for gv, fv in zip(g, f))


def add_morphisms(f, g, field, c=1):
    return tuple(field.normalize(a + c * b) for a, b in zip(f, g))


def scale_morphism(f, c, field):
    return tuple(field.normalize(c * a) for a in f)


def is_morphism(f, M, N) -> bool:
    q = M.algebra.quiver
    F = M.field
    for a in range(len(q.arrows)):
        s, t = q.asrc[a], q.atgt[a]
        lhs = F.matmul(f[t], M.maps[a])
        rhs = F.matmul(N.maps[a], f[s])
        if not np.array_equal(lhs, rhs):
            return False
    return True


def is_zero_morphism(f) -> bool:
    return all(not np.any(m != 0) for m in f)


def is_iso_morphism(f, field) -> bool:
    return all(m.shape[0] == m.shape[1] and la.rank(m, field) == m.shape[0] for m in f)


def morphism_vector(f, field):
    parts = [m.reshape(-1) for m in f if m.size]
    if not parts:
        return field.zeros(0)
    return np.concatenate(parts)


def morphism_from_vector(vec, M, N):
    out, off = [], 0
    for v in range(len(M.dims)):
        n = N.dims[v] * M.dims[v]
        out.append(vec[off:off + n].reshape(N.dims[v], M.dims[v]).copy())
        off += n
    return tuple(out)


@dataclass
class HomSpace:
    domain: Representation
    codomain: Representation
    basis: list

    @property
    def dim(self) -> int:
        return len(self.basis)

    def matrix(self):
        """Columns = flattened basis morphisms."""
        F = self.domain.field
        n = sum(a * b for a, b in zip(self.domain.dims, self.codomain.dims))
        if not self.basis:
            return F.zeros((n, 0))
        return np.stack([morphism_vector(b, F) for b in self.basis], axis=1)

    def combination(self, coeffs):
        F = self.domain.field
        acc = zero_morphism(self.domain, self.codomain)
        for c, b in zip(coeffs, self.basis):
            if c:
                acc = add_morphisms(acc, b, F, c)
        return acc

    def coordinates(self, f):
        F = self.domain.field
        return la.solve(self.matrix(), morphism_vector(f, F), F)


def hom(M: Representation, N: Representation) -> HomSpace:
    """Basis of Hom_A(M, N) from one sparse intertwiner system."""
    A = M.algebra
    F = M.field
    q = A.quiver
    n = A.nvertices
    offs, total = [], 0
    for x in range(n):
        offs.append(total)
        total += N.dims[x] * M.dims[x]
    rows = []
    for a in range(len(q.arrows)):
        s, t = q.asrc[a], q.atgt[a]
        Ma, Na = M.maps[a], N.maps[a]
        dMs, dMt, dNt = M.dims[s], M.dims[t], N.dims[t]
        if dNt * dMs == 0:
            continue
        ma_cols = [[(k, Ma[k, j]) for k in np.nonzero(Ma[:, j] != 0)[0]] for j in range(dMs)]
        na_rows = [[(k, Na[i, k]) for k in np.nonzero(Na[i, :] != 0)[0]] for i in range(dNt)]
        ot, os_ = offs[t], offs[s]
        for i in range(dNt):
            for j in range(dMs):
                row: dict = {}
                for k, v in ma_cols[j]:
                    idx = ot + i * dMt + int(k)
                    row[idx] = row.get(idx, 0) + v
                for k, v in na_rows[i]:
                    idx = os_ + int(k) * dMs + j
                    row[idx] = row.get(idx, 0) - v
                if F.characteristic:
                    row = {k2: v2 % F.p for k2, v2 in row.items() if v2 % F.p}
                else:
                    row = {k2: v2 for k2, v2 in row.items() if v2}
                if row:
                    rows.append(row)
    ker = la.sparse_kernel(rows, total, F)
    basis = [morphism_from_vector(ker[:, k], M, N) for k in range(ker.shape[1])]
    return HomSpace(M, N, basis)


def hom_dim(M, N) -> int:
    return hom(M, N).dim


def is_brick(M) -> bool:
    return M.total_dim > 0 and hom_dim(M, M) == 1


def are_orthogonal(M, N) -> bool:
    return hom_dim(M, N) == 0 and hom_dim(N, M) == 0


# ---------------------------------------------------------------------------
# sub- and quotient representations


def subrep(M: Representation, bases):
    """Subrepresentation spanned per vertex by the columns of ``bases``.

    Returns (S, inclusion morphism); raises ValueError if not arrow-stable.
    """
    F = M.field
    q = M.algebra.quiver
    bases = [F.zeros((M.dims[v], 0)) if b is None else b for v, b in enumerate(bases)]
    bases = [la.image(b, F) if b.shape[1] else b for b in bases]
    maps = []
    for a in range(len(q.arrows)):
        s, t = q.asrc[a], q.atgt[a]
        img = F.matmul(M.maps[a], bases[s])
        if bases[t].shape[1] == 0:
            if np.any(img != 0):
                raise ValueError("subspace family is not a subrepresentation")
            maps.append(F.zeros((0, bases[s].shape[1])))
            continue
        x = la.solve(bases[t], img, F)
        if x is None:
            raise ValueError("subspace family is not a subrepresentation")
        maps.append(x)
    S = Representation(M.algebra, [b.shape[1] for b in bases], maps)
    return S, tuple(bases)


def quotient(M: Representation, bases):
    """M / (subrepresentation spanned by ``bases``); returns (Q, projection)."""
    Q, proj, _ = quotient_with_section(M, bases)
    return Q, proj


def quotient_with_section(M: Representation, bases):
    """Like :func:`quotient` but also returns a vertexwise linear section."""
    F = M.field
    q = M.algebra.quiver
    proj, lift = [], []
    for v in range(len(M.dims)):
        b = bases[v] if bases[v] is not None else F.zeros((M.dims[v], 0))
        p, l_ = la.complement_columns(b, M.dims[v], F)
        proj.append(p)
        lift.append(l_)
    maps = []
    for a in range(len(q.arrows)):
        s, t = q.asrc[a], q.atgt[a]
        maps.append(F.matmul(proj[t], F.matmul(M.maps[a], lift[s])))
    Q = Representation(M.algebra, [p.shape[0] for p in proj], maps)
    return Q, tuple(proj), tuple(lift)


def generated_subspaces(M: Representation, gens):
    """Per-vertex bases of the submodule generated by ``gens`` = [(vertex, vector)]."""
    F = M.field
    q = M.algebra.quiver
    n = len(M.dims)
    ebs = [la.EchelonBasis(F) for _ in range(n)]
    vecs = [[] for _ in range(n)]
    queue = []
    for v, vec in gens:
        queue.append((v, vec))
    while queue:
        v, vec = queue.pop()
        sp = {int(i): vec[i] for i in np.nonzero(vec != 0)[0]}
        if not sp or ebs[v].add(sp) is None:
            continue
        vecs[v].append(vec)
        for a in q.out[v]:
            w = F.matmul(M.maps[a], vec.reshape(-1, 1)).reshape(-1)
            queue.append((q.atgt[a], w))
    out = []
    for v in range(n):
        if vecs[v]:
            out.append(np.stack(vecs[v], axis=1))
        else:
            out.append(F.zeros((M.dims[v], 0)))
    return out


def kernel_rep(f, M, N):
    F = M.field
    return subrep(M, [la.kernel(fv, F) if fv.size else F.eye(M.dims[v]) for v, fv in enumerate(f)])


def image_bases(f, M, N):
    F = M.field
    return [la.image(fv, F) if fv.size else F.zeros((N.dims[v], 0)) for v, fv in enumerate(f)]


def cokernel_rep(f, M, N):
    return quotient(N, image_bases(f, M, N))


def radical_bases(M):
    F = M.field
    q = M.algebra.quiver
    out = []
    for y in range(len(M.dims)):
        mats = [M.maps[a] for a in q.inn[y] if M.maps[a].size]
        if mats:
            out.append(la.image(np.concatenate(mats, axis=1), F))
        else:
            out.append(F.zeros((M.dims[y], 0)))
    return out


def radical(M):
    """rad M with its inclusion."""
    return subrep(M, radical_bases(M))


def top(M):
    """top M = M / rad M with the projection."""
    return quotient(M, radical_bases(M))


def socle_bases(M):
    F = M.field
    q = M.algebra.quiver
    out = []
    for x in range(len(M.dims)):
        mats = [M.maps[a] for a in q.out[x] if M.maps[a].shape[0]]
        if mats and M.dims[x]:
            out.append(la.kernel(np.concatenate(mats, axis=0), F))
        else:
            out.append(F.eye(M.dims[x]))
    return out


def socle(M):
    return subrep(M, socle_bases(M))


def top_dims(M):
    return tuple(d - b.shape[1] for d, b in zip(M.dims, radical_bases(M)))


def socle_dims(M):
    return tuple(b.shape[1] for b in socle_bases(M))


def is_semisimple(M) -> bool:
    return all(not np.any(m != 0) for m in M.maps)


def is_simple(M) -> bool:
    return M.total_dim == 1


# ---------------------------------------------------------------------------
# duality, restriction, extension


def dual(M: Representation) -> Representation:
    Aop = opposite_algebra(M.algebra)
    return Representation(Aop, M.dims, [m.T.copy() for m in M.maps])


def dual_morphism(f):
    return tuple(m.T.copy() for m in f)


_CORNERS: dict = {}


def corner_presentation(A: BoundQuiverAlgebra, vertices):
    """Gabriel presentation of eAe (cached); arrow lifts expressed in A."""
    vertices = tuple(str(v) for v in vertices)
    key = (id(A), vertices)
    hit = _CORNERS.get(key)
    if hit is not None and hit[0] is A:
        return hit[1], hit[2]
    sub, keep = A.corner(vertices)
    pres = gabriel_presentation(sub)
    _CORNERS[key] = (A, pres, keep)
    return pres, keep


def restrict(M: Representation, vertices) -> Representation:
    """res_e(M) = Me as a representation of the presentation of eAe."""
    A = M.algebra
    pres, keep = corner_presentation(A, vertices)
    P = pres.algebra
    vidx = [A.vertex_index(v) for v in vertices]
    q = P.quiver
    maps = []
    for a in range(len(q.arrows)):
        elem_sub = pres.arrow_elements[q.arrows[a].name]
        elem = {keep[i]: c for i, c in enumerate(elem_sub) if c}
        maps.append(M.element_action(elem, vidx[q.asrc[a]], vidx[q.atgt[a]]))
    return Representation(P, [M.dims[v] for v in vidx], maps)


def _corner_module_of_row(A, pres, keep, vidx, y):
    """e_y A e as a right eAe-module over the corner presentation."""
    F = A.field
    P = pres.algebra
    q = P.quiver
    blocks = [A.block(y, x) for x in vidx]
    pos = [{b: i for i, b in enumerate(bl)} for bl in blocks]
    maps = []
    for a in range(len(q.arrows)):
        s, t = q.asrc[a], q.atgt[a]
        elem_sub = pres.arrow_elements[q.arrows[a].name]
        elem = {keep[i]: c for i, c in enumerate(elem_sub) if c}
        m = F.zeros((len(blocks[t]), len(blocks[s])))
        for j, b in enumerate(blocks[s]):
            for k, c in A.product_sparse({b: F.one}, elem).items():
                m[pos[t][k], j] = c
        maps.append(m)
    return Representation(P, [len(b) for b in blocks], maps), blocks


def extend(N: Representation, A: BoundQuiverAlgebra, vertices) -> Representation:
    """L_e(N) = Hom_{eAe}(Ae, N), the right adjoint of restriction."""
    F = A.field
    pres, keep = corner_presentation(A, vertices)
    vidx = [A.vertex_index(v) for v in vertices]
    rows, blocks, homs = [], [], []
    for y in range(A.nvertices):
        R, bl = _corner_module_of_row(A, pres, keep, vidx, y)
        rows.append(R)
        blocks.append(bl)
        homs.append(hom(R, N))
    q = A.quiver
    maps = []
    for a in range(len(q.arrows)):
        y, z = q.asrc[a], q.atgt[a]
        ab = A.arrow_basis[a]
        # lambda: e_z A e -> e_y A e, c -> a c
        lam = []
        for si in range(len(vidx)):
            m = F.zeros((len(blocks[y][si]), len(blocks[z][si])))
            pos = {b: i for i, b in enumerate(blocks[y][si])}
            for j, c in enumerate(blocks[z][si]):
                for k, v in A.structure(ab, c).items():
                    m[pos[k], j] = v
            lam.append(m)
        target = homs[z]
        tm = target.matrix()
        cols = []
        for g in homs[y].basis:
            comp = tuple(F.matmul(g[si], lam[si]) for si in range(len(vidx)))
            vec = morphism_vector(comp, F)
            if tm.shape[1] == 0:
                cols.append(F.zeros(0))
                continue
            x = la.solve(tm, vec, F)
            cols.append(x)
        if homs[y].dim and homs[z].dim:
            maps.append(np.stack(cols, axis=1))
        else:
            maps.append(F.zeros((homs[z].dim, homs[y].dim)))
    return Representation(A, [h.dim for h in homs], maps)


# ---------------------------------------------------------------------------
# endomorphisms, decomposition, isomorphism


def _flat_matrix(M, maps):
    """Block-diagonal total matrix of a vertexwise map family."""
    F = M.field
    n = M.total_dim
    out = F.zeros((n, n))
    off = 0
    for v, d in enumerate(M.dims):
        if d:
            out[off:off + d, off:off + d] = maps[v]
        off += d
    return out


def endo_radical(M, H: HomSpace | None = None):
    """(End basis, columns spanning the coefficient vectors of rad End(M))."""
    F = M.field
    H = H or hom(M, M)
    d = H.dim
    if F.characteristic and F.characteristic <= M.total_dim:
        raise RadicalFailure(f"endomorphism radical needs p > dim M = {M.total_dim}")
    gram = F.zeros((d, d))
    for i in range(d):
        for j in range(i, d):
            tr = 0
            for v in range(len(M.dims)):
                if M.dims[v]:
                    prod = F.matmul(H.basis[i][v], H.basis[j][v])
                    tr = tr + sum(prod[k, k] for k in range(M.dims[v]))
            gram[i, j] = gram[j, i] = F.normalize(np.array([tr], dtype=gram.dtype))[0] if F.characteristic else tr
    return H, la.kernel(gram, F)


def _poly_roots_factors(coeffs, F):
    """Irreducible factors (as coefficient lists, low degree first) of a monic polynomial."""
    import sympy

    x = sympy.Symbol("x")
    if F.characteristic:
        poly = sympy.Poly([int(c) for c in reversed(coeffs)], x, modulus=F.p)
    else:
        poly = sympy.Poly([sympy.Rational(int(c.numerator), int(c.denominator)) for c in reversed(coeffs)], x, domain="QQ")
    _, facs = poly.factor_list()
    out = []
    for fac, mult in facs:
        cs = [F(int(c) if F.characteristic else str(sympy.Rational(c))) for c in reversed(fac.all_coeffs())]
        out.append((cs, mult))
    return out


def _eval_poly_endo(coeffs, f_total, F):
    n = f_total.shape[0]
    acc = F.zeros((n, n))
    power = F.eye(n)
    for c in coeffs:
        if c:
            acc = F.normalize(acc + c * power)
        power = F.matmul(power, f_total)
    return acc


def _split_by_endo(M, H, cand, rad_cols, F):
    """Try to split M with endomorphism ``cand``; return two subspace families or None."""
    dE = H.dim
    coords_of = H.matrix()
    # min poly of cand modulo rad End(M)
    proj, _ = la.complement_columns(rad_cols, dE, F)
    total_basis = [_flat_matrix(M, b) for b in H.basis]
    ft = _flat_matrix(M, cand)
    n = M.total_dim
    powers = [F.eye(n)]
    vecs = []
    eb = la.EchelonBasis(F, track=True)
    mu = None
    for k in range(proj.shape[0] + 2):
        p_k = powers[-1]
        endo = []
        off = 0
        for v, d in enumerate(M.dims):
            endo.append(p_k[off:off + d, off:off + d])
            off += d
        c = la.solve(coords_of, morphism_vector(tuple(endo), F), F)
        red = F.matmul(proj, c.reshape(-1, 1)).reshape(-1)
        sp = {int(i): red[i] for i in np.nonzero(red != 0)[0]}
        piv, combo = eb.add(sp, tag=k)
        if piv is None:
            mu = [F.zeros(1)[0] - combo.get(i, 0) for i in range(k)] + [F.one]
            mu = [F.normalize(np.array([c], dtype=F.dtype))[0] if F.characteristic else c for c in mu]
            break
        powers.append(F.matmul(p_k, ft))
    del total_basis, vecs
    if mu is None or len(mu) <= 2:
        return None
    factors = _poly_roots_factors(mu, F)
    if len(factors) < 2:
        return None
    qcoef, _ = factors[0]
    g = _eval_poly_endo(qcoef, ft, F)
    gN = F.eye(n)
    for _ in range(n):
        gN = F.matmul(gN, g)
    ker_cols = la.kernel(gN, F)
    img_cols = la.image(gN, F)
    if ker_cols.shape[1] in (0, n):
        return None

    def split(cols):
        off = 0
        sel = []
        for v, d in enumerate(M.dims):
            block = cols[off:off + d, :]
            sel.append(la.image(block, F) if block.size else F.zeros((d, 0)))
            off += d
        return sel

    return split(ker_cols), split(img_cols)


def decompose(M: Representation, seed: int = 0):
    """Indecomposable summands of M (Fitting splitting by endomorphisms)."""
    if M.total_dim == 0:
        return []
    F = M.field
    H, rad_cols = endo_radical(M)
    if H.dim - rad_cols.shape[1] == 1:
        return [M]
    rng = np.random.default_rng(seed)
    cands = list(H.basis)
    for _ in range(24):
        coeffs = [F.random(rng) for _ in range(H.dim)]
        cands.append(H.combination(coeffs))
    for cand in cands:
        parts = _split_by_endo(M, H, cand, rad_cols, F)
        if parts is None:
            continue
        out = []
        for fam in parts:
            S, _ = subrep(M, fam)
            out.extend(decompose(S, seed))
        return out
    raise NonSplitEndo(f"End(M)/rad has dimension {H.dim - rad_cols.shape[1]} but no split idempotent was found")


def decompose_with_embeddings(M: Representation, seed: int = 0):
    """Summands together with their embeddings into M (per-vertex column bases)."""
    if M.total_dim == 0:
        return []
    F = M.field
    H, rad_cols = endo_radical(M)
    if H.dim - rad_cols.shape[1] == 1:
        return [(M, identity_morphism(M))]
    rng = np.random.default_rng(seed)
    cands = list(H.basis)
    for _ in range(24):
        cands.append(H.combination([F.random(rng) for _ in range(H.dim)]))
    for cand in cands:
        parts = _split_by_endo(M, H, cand, rad_cols, F)
        if parts is None:
            continue
        out = []
        for fam in parts:
            S, emb = subrep(M, fam)
            for T, e2 in decompose_with_embeddings(S, seed):
                out.append((T, compose(emb, e2, F)))
        return out
    raise NonSplitEndo("no split idempotent found")


def is_indecomposable(M) -> bool:
    if M.total_dim == 0:
        return False
    H, rad_cols = endo_radical(M)
    if H.dim - rad_cols.shape[1] == 1:
        return True
    return len(decompose(M)) == 1


def find_isomorphism(M, N, seed: int = 0, indecomposable: bool = False):
    """An invertible intertwiner M -> N, or None."""
    if M.dims != N.dims:
        return None
    if M.total_dim == 0:
        return zero_morphism(M, N)
    F = M.field
    H = hom(M, N)
    if H.dim == 0:
        return None
    for b in H.basis:
        if is_iso_morphism(b, F):
            return b
    if indecomposable:
        return None
    rng = np.random.default_rng(seed)
    for _ in range(8):
        f = H.combination([F.random(rng) for _ in range(H.dim)])
        if is_iso_morphism(f, F):
            return f
    return None


def is_isomorphic(M, N, seed: int = 0) -> bool:
    if M.dims != N.dims:
        return False
    if find_isomorphism(M, N, seed) is not None:
        return True
    dm, dn = decompose(M, seed), decompose(N, seed)
    if len(dm) == 1 and len(dn) == 1:
        return False
    if len(dm) != len(dn):
        return False
    used = [False] * len(dn)
    for X in dm:
        for j, Y in enumerate(dn):
            if not used[j] and find_isomorphism(X, Y, seed, indecomposable=True) is not None:
                used[j] = True
                break
        else:
            return False
    return True


def random_combination_endo(M, seed=0):
    F = M.field
    H = hom(M, M)
    rng = np.random.default_rng(seed)
    return H.combination([F.random(rng) for _ in range(H.dim)])


def transport(M: Representation, B, vertex_map=None, arrow_map=None) -> Representation:
    """Move M to an algebra B sharing vertex and arrow labels (after renaming); new data is zero."""
    A = M.algebra
    q = B.quiver
    vm = {v: (vertex_map or {}).get(v, v) for v in A.quiver.vertices}
    am = {a.name: (arrow_map or {}).get(a.name, a.name) for a in A.quiver.arrows}
    vpos = {vm[v]: i for i, v in enumerate(A.quiver.vertices)}
    apos = {am[a.name]: i for i, a in enumerate(A.quiver.arrows)}
    dims = {v: M.dims[vpos[v]] if v in vpos else 0 for v in q.vertices}
    maps = {}
    for a in q.arrows:
        i = apos.get(a.name)
        if i is not None and vm[A.quiver.arrows[i].source] == a.source and vm[A.quiver.arrows[i].target] == a.target:
            maps[a.name] = M.maps[i]
    out = Representation(B, dims, maps)
    if not out.check_relations():
        raise ValueError("module does not satisfy the relations of the target algebra")
    return out
