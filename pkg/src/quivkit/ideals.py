"""Subspaces and ideals of a basic algebra, annihilators and trace ideals.

All subspaces are spanned by sparse coordinate vectors in the algebra's own
basis, which for a bound quiver algebra is a basis of paths, so that the
idempotents e_x act by keeping or dropping coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from . import rep as R
from .algebra import _clean
from .linalg import EchelonBasis, sparse_kernel
from .quiver import is_acyclic


class Subspace:
    """A subspace of an algebra given by spanning sparse vectors."""

    def __init__(self, algebra, rows=(), name: str = "U"):
        self.algebra = algebra
        self.name = name
        self._eb = EchelonBasis(algebra.field)
        for r in rows:
            if r:
                self._eb.add(dict(r))

    @property
    def rows(self) -> list:
        return [dict(r) for _, r in sorted(self._eb.rows.items())]

    @property
    def dim(self) -> int:
        return len(self._eb)

    def contains(self, vec: dict) -> bool:
        return self._eb.contains(dict(vec))

    def __le__(self, other: "Subspace") -> bool:
        return all(other.contains(r) for r in self.rows)

    def __eq__(self, other) -> bool:
        return isinstance(other, Subspace) and self.dim == other.dim and self <= other

    __hash__ = None

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(self.algebra, self.rows + other.rows, f"{self.name}+{other.name}")

    def intersection(self, other: "Subspace") -> "Subspace":
        """Kernel of the difference map from the direct sum."""
        A = self.algebra
        a, b = self.rows, other.rows
        if not a or not b:
            return Subspace(A, (), f"{self.name}∩{other.name}")
        # solve sum x_i a_i - sum y_j b_j = 0
        cols: dict = {}
        for i, r in enumerate(a):
            for k, v in r.items():
                cols.setdefault(k, {})[i] = v
        for j, r in enumerate(b):
            for k, v in r.items():
                cols.setdefault(k, {})[len(a) + j] = cols.get(k, {}).get(len(a) + j, 0) - v
        K = sparse_kernel(list(cols.values()), len(a) + len(b), A.field)
        out = []
        for c in range(K.shape[1]):
            acc: dict = {}
            for i, r in enumerate(a):
                if K[i, c] != 0:
                    for k, v in r.items():
                        acc[k] = acc.get(k, 0) + K[i, c] * v
            out.append(_clean(acc, A.field.characteristic))
        return Subspace(A, out, f"{self.name}∩{other.name}")

    def is_zero(self) -> bool:
        return self.dim == 0

    def left_closed(self) -> bool:
        A = self.algebra
        one = A.field.one
        return all(self.contains(A.product_sparse({b: one}, r)) for r in self.rows for b in range(A.dim))

    def right_closed(self) -> bool:
        A = self.algebra
        one = A.field.one
        return all(self.contains(A.product_sparse(r, {b: one})) for r in self.rows for b in range(A.dim))

    def labels(self):
        """Basis in readable form: lists of (coefficient, basis label)."""
        A = self.algebra
        return [[(str(v), A.labels[k]) for k, v in sorted(r.items())] for r in self.rows]

    def __repr__(self):
        return f"{type(self).__name__}({self.name}, dim={self.dim})"


class Ideal(Subspace):
    """A two-sided ideal; closure under basis multiplication is verified."""

    def __init__(self, algebra, rows=(), name: str = "I", check: bool = True):
        super().__init__(algebra, rows, name)
        if check and not (self.left_closed() and self.right_closed()):
            raise ValueError(f"{name} is not a two-sided ideal")


def generated_ideal(A, gens, name="I") -> Ideal:
    """Two-sided ideal generated by sparse elements."""
    one = A.field.one
    basis = [{b: one} for b in range(A.dim)]
    eb = EchelonBasis(A.field)
    todo = [dict(g) for g in gens if g]
    while todo:
        g = todo.pop()
        if eb.add(g) is None:
            continue
        for b in basis:
            for h in (A.product_sparse(b, g), A.product_sparse(g, b)):
                if h and not eb.contains(h):
                    todo.append(h)
    return Ideal(A, list(eb.rows.values()), name)


def radical_ideal(A) -> Ideal:
    idem = set(A.idem)
    return Ideal(A, [{b: A.field.one} for b in range(A.dim) if b not in idem], "rad")


def annihilator(A, family, name="ann") -> Ideal:
    """{a : X a = 0 for all X in the family}."""
    rows = []
    for X in family:
        mats = {b: X.basis_action(b) for b in range(A.dim) if X.dims[A.src[b]] and X.dims[A.tgt[b]]}
        entries: dict = {}
        for b, m in mats.items():
            nz = m.nonzero()
            for r, c in zip(*nz):
                entries.setdefault((A.src[b], A.tgt[b], int(r), int(c)), {})[b] = m[r, c]
        rows.extend(entries.values())
    K = sparse_kernel(rows, A.dim, A.field)
    return Ideal(A, [A.to_sparse(K[:, k]) for k in range(K.shape[1])], name)


def trace_ideal(A, family, name="J") -> Subspace:
    """Sum of images of all homomorphisms from family members into A_A."""
    rows = []
    for x in range(A.nvertices):
        P = R.projective(A, x)
        for Y in family:
            for h in R.hom(Y, P).basis:
                for y in range(A.nvertices):
                    m = h[y]
                    blk = A.block(x, y)
                    for c in range(m.shape[1]):
                        vec = {blk[r]: m[r, c] for r in range(m.shape[0]) if m[r, c] != 0}
                        if vec:
                            rows.append(vec)
    return Subspace(A, rows, name)


def dual_trace_ideal(A, family, name="J'") -> Subspace:
    """Trace of the duals D(X) in the left regular module, via the opposite algebra."""
    Aop = R.opposite_algebra(A)
    T = trace_ideal(Aop, [R.dual(X) for X in family], name)
    return Subspace(A, T.rows, name)


def left_annihilator(A, U: Subspace, name=None) -> Subspace:
    """l_A(U) = {a : a u = 0 for all u in U}."""
    one = A.field.one
    eqs: dict = {}
    for i, u in enumerate(U.rows):
        for b in range(A.dim):
            for k, v in A.product_sparse({b: one}, u).items():
                eqs.setdefault((i, k), {})[b] = v
    K = sparse_kernel(list(eqs.values()), A.dim, A.field)
    return Subspace(A, [A.to_sparse(K[:, k]) for k in range(K.shape[1])], name or f"l({U.name})")


def right_annihilator(A, U: Subspace, name=None) -> Subspace:
    one = A.field.one
    eqs: dict = {}
    for i, u in enumerate(U.rows):
        for b in range(A.dim):
            for k, v in A.product_sparse(u, {b: one}).items():
                eqs.setdefault((i, k), {})[b] = v
    K = sparse_kernel(list(eqs.values()), A.dim, A.field)
    return Subspace(A, [A.to_sparse(K[:, k]) for k in range(K.shape[1])], name or f"r({U.name})")


def residual_identity(A, I: Subspace) -> list:
    """Vertices whose idempotent is not in I; their sum e satisfies e + I = 1 in A/I."""
    one = A.field.one
    return [x for x in range(A.nvertices) if not I.contains({A.idem[x]: one})]


def cut(A, U: Subspace, left=None, right=None, name=None) -> Subspace:
    """e_L U e_R for vertex sets L, R (None = all vertices)."""
    L = set(range(A.nvertices)) if left is None else set(left)
    Rt = set(range(A.nvertices)) if right is None else set(right)
    rows = [{k: v for k, v in r.items() if A.src[k] in L and A.tgt[k] in Rt} for r in U.rows]
    return Subspace(A, rows, name or U.name)


def products(A, U: Subspace, V: Subspace, name=None) -> Subspace:
    rows = [A.product_sparse(u, v) for u in U.rows for v in V.rows]
    return Subspace(A, rows, name or f"{U.name}{V.name}")


def quotient_algebra(A, I: Subspace):
    """A/I as a structure-constant algebra (kept basis indices returned too)."""
    Q, keep, _, _ = A.quotient(I.rows)
    return Q, keep


@dataclass
class IdentityReport:
    """Named pass/fail results of the ideal identities with dimensions."""

    checks: dict = dc_field(default_factory=dict)
    dims: dict = dc_field(default_factory=dict)
    residual_vertices: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_json(self):
        return {"checks": dict(self.checks), "dims": dict(self.dims),
                "residual_vertices": list(self.residual_vertices), "ok": self.ok}


def ideal_identities(A, family, I: Subspace | None = None) -> IdentityReport:
    """Check the annihilator/trace identities for I = ann(family) (or the given I)."""
    rep = IdentityReport()
    I = I if I is not None else annihilator(A, family, "I")
    E = residual_identity(A, I)
    rep.residual_vertices = [A.vertices[x] for x in E]
    J = trace_ideal(A, family, "J")
    Jp = dual_trace_ideal(A, family, "J'")
    lI, rI = left_annihilator(A, I), right_annihilator(A, I)
    eI, Ie, eIe = cut(A, I, left=E), cut(A, I, right=E), cut(A, I, left=E, right=E)
    c = rep.checks
    c["r(I) = eI"] = rI == eI
    c["l(I) = Ie"] = lI == Ie
    c["l(I) = J"] = lI == J
    c["r(I) = J'"] = rI == Jp
    c["Ie = J"] = Ie == J
    c["eI = J'"] = eI == Jp
    c["eIe = J ∩ J'"] = eIe == J.intersection(Jp)
    c["(eIe)^2 = 0"] = products(A, eIe, eIe).is_zero()
    IeI = products(A, products(A, I, Subspace(A, [{A.idem[x]: A.field.one} for x in E], "e")), I)
    c["IeI = 0"] = IeI.is_zero()
    c["I = r(J)"] = right_annihilator(A, J) == I
    c["I = l(J')"] = left_annihilator(A, Jp) == I
    rep.dims = {"A": A.dim, "I": I.dim, "J": J.dim, "J'": Jp.dim, "eI": eI.dim, "Ie": Ie.dim, "eIe": eIe.dim}
    return rep


def is_deforming(A, I: Subspace) -> dict:
    """eIe equals both annihilators of eIe inside eAe, and A/I is triangular."""
    from .algebra import gabriel_presentation

    E = residual_identity(A, I)
    eIe = cut(A, I, left=E, right=E, name="eIe")
    eAe = [b for b in range(A.dim) if A.src[b] in E and A.tgt[b] in E]
    one = A.field.one
    full = Subspace(A, [{b: one} for b in eAe], "eAe")

    def inside(U):
        return U.intersection(full)

    lt = inside(left_annihilator(A, eIe))
    rt = inside(right_annihilator(A, eIe))
    Q, _ = quotient_algebra(A, I)
    tri = is_acyclic(gabriel_presentation(Q).algebra.quiver)
    return {"eIe = l_eAe(eIe)": lt == eIe, "eIe = r_eAe(eIe)": rt == eIe, "A/I triangular": tri}


def theorem45_check(A, I: Subspace) -> dict:
    """The two conditions: r_A(I) = eI and Q_{A/I} acyclic, plus the A/I presentation."""
    from .algebra import gabriel_presentation

    E = residual_identity(A, I)
    cond1 = right_annihilator(A, I) == cut(A, I, left=E)
    Q, _ = quotient_algebra(A, I)
    pres = gabriel_presentation(Q)
    return {"r(I) = eI": cond1, "acyclic": is_acyclic(pres.algebra.quiver), "presentation": pres.algebra}
