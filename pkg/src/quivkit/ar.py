"""Auslander-Reiten theory: presentations, tau, Ext, almost split sequences, tubes."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from . import linalg as la
from . import rep as R
from .errors import MouthNotPeriodic, NonSplitEndo, NotIndecomposable, ProjectiveInput


# ---------------------------------------------------------------------------
# projective covers and presentations


def top_generators(M):
    """Lifts of a basis of top M: list of (vertex, vector in M_x)."""
    F = M.field
    gens = []
    for x, rb in enumerate(R.radical_bases(M)):
        if M.dims[x] == 0:
            continue
        _, lift = la.complement_columns(rb, M.dims[x], F)
        for k in range(lift.shape[1]):
            gens.append((x, lift[:, k].copy()))
    return gens


def cover_map(M, gens):
    """(P, morphism P -> M) for P = sum of P(x) sending e_x to each generator."""
    A = M.algebra
    F = M.field
    if not gens:
        return R.zero_rep(A), R.zero_morphism(R.zero_rep(A), M)
    P = R.direct_sum([R.projective(A, x) for x, _ in gens])
    mats = []
    for y in range(A.nvertices):
        cols = []
        for x, v in gens:
            for b in A.block(x, y):
                cols.append(F.matmul(M.basis_action(b), v.reshape(-1, 1)))
        mats.append(np.concatenate(cols, axis=1) if cols else F.zeros((M.dims[y], 0)))
    return P, tuple(mats)


def _vector_components(A, vertices, y, vec):
    """Split a vector of (sum P(x_i))_y into sparse elements of e_{x_i} A e_y."""
    out, off = [], 0
    for x in vertices:
        blk = A.block(x, y)
        part = {b: vec[off + k] for k, b in enumerate(blk) if vec[off + k] != 0}
        out.append(part)
        off += len(blk)
    return out


@dataclass
class ProjectivePresentation:
    module: object
    p0: list
    p1: list
    P0: object
    P1: object
    d0: tuple
    d1: tuple
    gens1: list
    syzygy: object
    syzygy_incl: tuple

    def p0_labels(self):
        return [self.module.algebra.vertices[x] for x in self.p0]

    def p1_labels(self):
        return [self.module.algebra.vertices[x] for x in self.p1]

    def components(self):
        """w[j][i] in e_{x_i} A e_{y_j}: the matrix of P1 -> P0."""
        A = self.module.algebra
        return [_vector_components(A, self.p0, y, v) for y, v in self.gens1]


def minimal_projective_presentation(M) -> ProjectivePresentation:
    F = M.field
    g0 = top_generators(M)
    P0, d0 = cover_map(M, g0)
    omega, incl = R.kernel_rep(d0, P0, M)
    g1_local = top_generators(omega)
    g1 = [(y, F.matmul(incl[y], v.reshape(-1, 1)).reshape(-1)) for y, v in g1_local]
    P1, d1 = cover_map(P0, g1)
    return ProjectivePresentation(M, [x for x, _ in g0], [y for y, _ in g1], P0, P1, d0, d1, g1, omega, incl)


def projective_cover(M):
    P, d0 = cover_map(M, top_generators(M))
    return P, d0


def injective_envelope(M):
    """(I, monomorphism M -> I) by duality."""
    D = R.dual(M)
    P, d0 = projective_cover(D)
    return R.dual(P), R.dual_morphism(d0)


# ---------------------------------------------------------------------------
# tau


def _nakayama_image(A, pres: ProjectivePresentation):
    """The morphism nu(d1): sum I(y_j) -> sum I(x_i)."""
    F = A.field
    src = R.direct_sum([R.injective(A, y) for y in pres.p1]) if pres.p1 else R.zero_rep(A)
    tgt = R.direct_sum([R.injective(A, x) for x in pres.p0]) if pres.p0 else R.zero_rep(A)
    comps = pres.components()
    mats = []
    for z in range(A.nvertices):
        m = F.zeros((tgt.dims[z], src.dims[z]))
        roff = 0
        for i, x in enumerate(pres.p0):
            rows = A.block(z, x)
            coff = 0
            for j, y in enumerate(pres.p1):
                cols = A.block(z, y)
                w = comps[j][i]
                if w and rows and cols:
                    cpos = {c: k for k, c in enumerate(cols)}
                    for r, u in enumerate(rows):
                        for c, v in A.product_sparse({u: F.one}, w).items():
                            m[roff + r, coff + cpos[c]] = v
                coff += len(cols)
            roff += len(rows)
        mats.append(m)
    return src, tgt, tuple(mats)


def tau(M):
    """Auslander-Reiten translate D Tr M; projective summands of M vanish."""
    A = M.algebra
    if M.total_dim == 0:
        return M
    pres = minimal_projective_presentation(M)
    src, tgt, nu = _nakayama_image(A, pres)
    T, _ = R.kernel_rep(nu, src, tgt)
    if T.total_dim == 0:
        raise ProjectiveInput("module is projective; its translate is zero")
    return T


def tau_inverse(M):
    if M.total_dim == 0:
        return M
    try:
        return R.dual(tau(R.dual(M)))
    except ProjectiveInput:
        raise ProjectiveInput("module is injective; its inverse translate is zero") from None


def transpose(M):
    """Tr M over the opposite algebra (cokernel of the dual presentation)."""
    return R.dual(tau(M))


# ---------------------------------------------------------------------------
# Ext and stable Hom


def ext1_dim(X, Y) -> int:
    if X.total_dim == 0 or Y.total_dim == 0:
        return 0
    pres = minimal_projective_presentation(X)
    h_omega = R.hom_dim(pres.syzygy, Y)
    h_p0 = sum(Y.dims[x] for x in pres.p0)
    return h_omega - h_p0 + R.hom_dim(X, Y)


def _span_rank(vectors, F) -> int:
    eb = la.EchelonBasis(F)
    for v in vectors:
        sp = {int(i): v[i] for i in np.nonzero(v != 0)[0]}
        if sp:
            eb.add(sp)
    return len(eb)


def factor_through_projectives_dim(M, N) -> int:
    """dim of the maps M -> N factoring through a projective module."""
    F = M.field
    if M.total_dim == 0 or N.total_dim == 0:
        return 0
    P, pi = projective_cover(N)
    H = R.hom(M, P)
    vecs = [R.morphism_vector(R.compose(pi, g, F), F) for g in H.basis]
    return _span_rank(vecs, F)


def stable_hom_dims(M, N):
    """(dim Hom modulo projectives, dim Hom modulo injectives)."""
    h = R.hom_dim(M, N)
    proj = factor_through_projectives_dim(M, N)
    inj = factor_through_projectives_dim(R.dual(N), R.dual(M))
    return h - proj, h - inj


# ---------------------------------------------------------------------------
# almost split sequences


def is_projective_indecomposable(M) -> bool:
    A = M.algebra
    td = R.top_dims(M)
    if sum(td) != 1:
        return False
    x = td.index(1)
    return M.dims == tuple(len(A.block(x, y)) for y in range(A.nvertices))


def is_injective_indecomposable(M) -> bool:
    A = M.algebra
    sd = R.socle_dims(M)
    if sum(sd) != 1:
        return False
    x = sd.index(1)
    return M.dims == tuple(len(A.block(y, x)) for y in range(A.nvertices))


@dataclass
class AlmostSplitSequence:
    left: object
    middle: object
    right: object
    f: tuple
    g: tuple
    summands: list

    def dims_additive(self) -> bool:
        return tuple(a + b for a, b in zip(self.left.dims, self.right.dims)) == self.middle.dims


def almost_split_sequence(X, check_indecomposable: bool = True) -> AlmostSplitSequence:
    A = X.algebra
    F = X.field
    if check_indecomposable and not R.is_indecomposable(X):
        raise NotIndecomposable("almost split sequences end in indecomposable modules")
    if is_projective_indecomposable(X):
        raise ProjectiveInput("no almost split sequence ends in a projective module")
    pres = minimal_projective_presentation(X)
    T = tau(X)
    omega, incl = pres.syzygy, pres.syzygy_incl
    P0 = pres.P0
    H = R.hom(omega, T)
    Hm = H.matrix()
    # coboundaries: maps P0 -> tau X restricted to the syzygy
    cob = []
    for g in R.hom(P0, T).basis:
        r = tuple(F.matmul(g[v], incl[v]) for v in range(A.nvertices))
        c = la.solve(Hm, R.morphism_vector(r, F), F)
        cob.append(c)
    n = H.dim
    cobm = np.stack(cob, axis=1) if cob else F.zeros((n, 0))
    cobm = la.image(cobm, F) if cobm.shape[1] else cobm
    proj, lift = la.complement_columns(cobm, n, F)
    e = proj.shape[0]
    if e == 0:
        raise ProjectiveInput("Ext^1(X, tau X) vanishes")
    # socle of Ext^1 as a module over End(tau X)
    Hend, rad_cols = R.endo_radical(T)
    rad_elems = [Hend.combination(rad_cols[:, k]) for k in range(rad_cols.shape[1])]
    blocks = []
    for r in rad_elems:
        m = F.zeros((e, e))
        for k in range(e):
            h = H.combination(lift[:, k])
            rh = R.compose(r, h, F)
            c = la.solve(Hm, R.morphism_vector(rh, F), F)
            m[:, k] = F.matmul(proj, c.reshape(-1, 1)).reshape(-1)
        blocks.append(m)
    soc = la.kernel(np.concatenate(blocks, axis=0), F) if blocks else F.eye(e)
    if soc.shape[1] != 1:
        raise NonSplitEndo(f"socle of Ext^1(X, tau X) has dimension {soc.shape[1]}")
    h = H.combination(F.matmul(lift, soc).reshape(-1))
    # pushout of 0 -> Omega -> P0 -> X -> 0 along h
    D = R.direct_sum([T, P0])
    bases = []
    for v in range(A.nvertices):
        bases.append(np.concatenate([h[v], F.normalize(-incl[v]) if F.characteristic else -incl[v]], axis=0)
                     if omega.dims[v] else F.zeros((D.dims[v], 0)))
    E, proj_e, lift_e = R.quotient_with_section(D, bases)
    f_map, g_map = [], []
    for v in range(A.nvertices):
        tv, pv = T.dims[v], P0.dims[v]
        emb = F.zeros((tv + pv, tv))
        for k in range(tv):
            emb[k, k] = F.one
        f_map.append(F.matmul(proj_e[v], emb))
        zero_pi = np.concatenate([F.zeros((X.dims[v], tv)), pres.d0[v]], axis=1)
        g_map.append(F.matmul(zero_pi, lift_e[v]))
    summands = R.decompose(E)
    return AlmostSplitSequence(T, E, X, tuple(f_map), tuple(g_map), summands)


def right_almost_split_defect(seq: AlmostSplitSequence, Y) -> int:
    """Number of independent maps Y -> X that do not factor through the middle term.

    Zero for every indecomposable Y not isomorphic to X; one for Y = X.
    """
    F = Y.field
    h = R.hom(Y, seq.right)
    vecs = [R.morphism_vector(R.compose(seq.g, u, F), F) for u in R.hom(Y, seq.middle).basis]
    return h.dim - _span_rank(vecs, F)


# ---------------------------------------------------------------------------
# tubes


def tau_orbit(X, limit: int = 24):
    """[X, tau X, tau^2 X, ...] until the orbit closes (up to isomorphism)."""
    orbit = [X]
    cur = X
    for _ in range(limit):
        cur = tau(cur)
        if R.find_isomorphism(cur, X, indecomposable=True) is not None:
            return orbit
        orbit.append(cur)
    raise MouthNotPeriodic(f"tau-orbit did not close within {limit} steps")


@dataclass
class TubeFragment:
    layers: list
    tau_perm: list
    projectives: list = dc_field(default_factory=list)
    sequences: list = dc_field(default_factory=list)
    anomalies: list = dc_field(default_factory=list)

    @property
    def rank(self) -> int:
        return len(self.layers[0]) if self.layers else 0

    @property
    def depth(self) -> int:
        return len(self.layers)

    def stable_modules(self):
        return [M for layer in self.layers for M in layer]

    @property
    def simples(self):
        return [M for M in self.stable_modules() if M.total_dim == 1] + [
            P for P in self.projectives if P.total_dim == 1
        ]

    @property
    def s(self) -> int:
        return len(self.simples)

    @property
    def p(self) -> int:
        return len(self.projectives)

    @property
    def mouth(self):
        return self.layers[0]

    def to_dot(self, name="tube") -> str:
        lines = [f'digraph "{name}" {{', "  rankdir=BT;"]

        def label(M):
            return "".join(str(d) for d in M.dims) if max(M.dims, default=0) < 10 else ",".join(map(str, M.dims))

        for k, layer in enumerate(self.layers):
            for i, M in enumerate(layer):
                shape = "box" if M.total_dim == 1 else "ellipse"
                lines.append(f'  "L{k}_{i}" [label="{label(M)}", shape={shape}];')
        for j, P in enumerate(self.projectives):
            lines.append(f'  "P{j}" [label="{label(P)}", peripheries=2];')
        r = self.rank
        for k, layer in enumerate(self.layers):
            for i in range(len(layer)):
                t = self.tau_perm[i]
                lines.append(f'  "L{k}_{i}" -> "L{k}_{t}" [style=dashed, constraint=false];')
                if k + 1 < len(self.layers):
                    lines.append(f'  "L{k}_{i}" -> "L{k + 1}_{i}";')
                    lines.append(f'  "L{k + 1}_{i}" -> "L{k}_{(i + 1) % r if r else 0}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def mouth_permutation(mouth):
    """tau(M_i) = M_perm[i]; raises MouthNotPeriodic otherwise."""
    perm = []
    for i, M in enumerate(mouth):
        T = tau(M)
        hit = None
        for j, N in enumerate(mouth):
            if R.find_isomorphism(T, N, indecomposable=True) is not None:
                hit = j
                break
        if hit is None:
            raise MouthNotPeriodic(f"tau of mouth module {i} is not on the mouth")
        perm.append(hit)
    if sorted(perm) != list(range(len(mouth))):
        raise MouthNotPeriodic("tau does not permute the mouth")
    seen, cur = 0, 0
    while True:
        cur = perm[cur]
        seen += 1
        if cur == 0:
            break
    if seen != len(mouth):
        raise MouthNotPeriodic("tau permutes the mouth in more than one cycle")
    return perm


def order_mouth(mouth):
    """Reorder a mouth so that tau(M_i) = M_{i-1} (indices mod r)."""
    perm = mouth_permutation(mouth)
    r = len(mouth)
    order = [0]
    inv = {perm[i]: i for i in range(r)}
    while len(order) < r:
        order.append(inv[order[-1]])
    return [mouth[i] for i in order]


def knit_tube(mouth, depth: int) -> TubeFragment:
    """Knit ``depth`` layers of the tube whose mouth is ``mouth``.

    Layer k+1 at position i is the summand of the middle term of the almost
    split sequence ending at layer k, position i, that is neither projective
    nor a layer k-1 module.
    """
    mouth = order_mouth(list(mouth))
    r = len(mouth)
    perm = [(i - 1) % r for i in range(r)]
    layers = [mouth]
    projectives = []
    sequences = []
    anomalies = []
    for k in range(1, depth):
        prev = layers[k - 1]
        prevprev = layers[k - 2] if k >= 2 else []
        new = []
        for i, Z in enumerate(prev):
            seq = almost_split_sequence(Z, check_indecomposable=False)
            sequences.append((k, i, seq))
            stable = []
            for S in seq.summands:
                if is_projective_indecomposable(S):
                    if not any(R.find_isomorphism(S, P, indecomposable=True) is not None for P in projectives):
                        projectives.append(S)
                else:
                    stable.append(S)
            used = [False] * len(prevprev)
            remaining = []
            for S in stable:
                for j, Y in enumerate(prevprev):
                    if not used[j] and R.find_isomorphism(S, Y, indecomposable=True) is not None:
                        used[j] = True
                        break
                else:
                    remaining.append(S)
            if len(remaining) != 1:
                anomalies.append((k, i, [S.dims for S in remaining]))
                return TubeFragment(layers, perm, projectives, sequences, anomalies)
            new.append(remaining[0])
        layers.append(new)
    return TubeFragment(layers, perm, projectives, sequences, anomalies)


def find_mouth(X, limit: int = 32):
    """Walk down a tube from X to a mouth module along the irreducible monomorphisms."""
    F = X.field
    cur = X
    for _ in range(limit):
        seq = almost_split_sequence(cur, check_indecomposable=False)
        stable = [S for S in seq.summands if not is_projective_indecomposable(S)]
        if len(stable) <= 1:
            return cur
        # the summand mapping injectively into cur sits one layer lower
        emb = R.decompose_with_embeddings(seq.middle)
        step = None
        for S, e in emb:
            if is_projective_indecomposable(S):
                continue
            comp = R.compose(seq.g, e, F)
            if all(la.rank(m, F) == m.shape[1] for m in comp if m.shape[1]):
                step = S
                break
        if step is None:
            return cur
        cur = step
    raise MouthNotPeriodic("no mouth reached")
