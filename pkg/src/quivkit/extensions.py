"""One-point extensions and coextensions, (ad 1), and branch (co)extensions."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from . import rep as R
from .algebra import build_bound_quiver_algebra
from .ar import minimal_projective_presentation
from .errors import BadSpec, MouthMismatch, NotBrick
from .quiver import Arrow, PathElement, Quiver


def _fresh(name, taken):
    if name not in taken:
        return name
    k = 1
    while f"{name}_{k}" in taken:
        k += 1
    return f"{name}_{k}"


def one_point_extension(A, X, vertex: str | None = None, arrow_names=None):
    """A[X]: a new source ``vertex`` whose projective has radical X.

    ``arrow_names`` (optional) names the new arrows in top-generator order.
    """
    F = A.field
    q = A.quiver
    vertex = vertex or _fresh("v", set(q.vertices))
    if vertex in q.vindex:
        raise BadSpec(f"vertex {vertex!r} already exists")
    pres = minimal_projective_presentation(X) if X.total_dim else None
    tops = pres.p0 if pres else []
    names = list(arrow_names) if arrow_names else []
    taken = {a.name for a in q.arrows}
    new_arrows = []
    for k, x in enumerate(tops):
        nm = names[k] if k < len(names) else _fresh(f"{vertex}>{q.vertices[x]}", taken)
        taken.add(nm)
        new_arrows.append(Arrow(nm, vertex, q.vertices[x]))
    Q2 = Quiver(list(q.vertices) + [vertex], list(q.arrows) + new_arrows)
    rels = list(A.relations)
    if pres:
        for (y, _), comps in zip(pres.gens1, pres.components()):
            terms = []
            for i, w in enumerate(comps):
                for b, c in w.items():
                    s, path = A.paths[b]
                    terms.append((c, (new_arrows[i].name,) + tuple(q.arrows[a].name for a in path)))
            rels.append(PathElement.build(Q2, terms, F))
    B = build_bound_quiver_algebra(Q2, rels, F)
    expected = A.dim + X.total_dim + 1
    if B.dim != expected:
        raise BadSpec(f"one-point extension has dimension {B.dim}, expected {expected}")
    return B


def one_point_coextension(A, X, vertex: str | None = None, arrow_names=None):
    """[X]A: a new sink whose injective has I(v)/soc = X (via the opposite algebra)."""
    Aop = R.opposite_algebra(A)
    Xd = R.dual(X) if X.algebra is A else X
    return one_point_extension(Aop, Xd, vertex, arrow_names).opposite()


def product_algebra(A, H):
    """A x H on the disjoint union of quivers (labels must not clash)."""
    qa, qh = A.quiver, H.quiver
    if set(qa.vertices) & set(qh.vertices) or {a.name for a in qa.arrows} & {a.name for a in qh.arrows}:
        raise BadSpec("labels clash in product algebra")
    q = Quiver(list(qa.vertices) + list(qh.vertices), list(qa.arrows) + list(qh.arrows))
    return build_bound_quiver_algebra(q, list(A.relations) + list(H.relations), A.field)


def line_algebra(t: int, field, prefix="h"):
    """Path algebra of h1 -> h2 -> ... -> ht (the full upper triangular t x t matrices)."""
    vs = [f"{prefix}{k}" for k in range(1, t + 1)]
    arrows = [Arrow(f"{prefix}{k}>{k + 1}", vs[k - 1], vs[k]) for k in range(1, t)]
    return build_bound_quiver_algebra(Quiver(vs, arrows), [], field)


def ad1(A, X, t: int, vertex: str | None = None, prefix: str = "h"):
    """(A x H)[X + Y] with H the t x t triangular algebra and Y its projective-injective."""
    if not R.is_brick(X):
        raise NotBrick("the pivot of (ad 1) must be a brick")
    if t == 0:
        return one_point_extension(A, X, vertex)
    H = line_algebra(t, A.field, prefix)
    AH = product_algebra(A, H)
    Y = R.projective(H, f"{prefix}1")
    XY = R.direct_sum([R.transport(X, AH), R.transport(Y, AH)])
    return one_point_extension(AH, XY, vertex)


# ---------------------------------------------------------------------------
# branches


@dataclass
class Branch:
    """A tree quiver attached through ``root``; arrows given as (name, source, target)."""

    vertices: list
    arrows: list = dc_field(default_factory=list)
    root: str | None = None

    def __post_init__(self):
        self.vertices = [str(v) for v in self.vertices]
        self.arrows = [tuple(map(str, a)) for a in self.arrows]
        if self.root is None:
            self.root = self.vertices[0]
        if len(self.arrows) != len(self.vertices) - 1:
            raise BadSpec("a branch must be a tree")
        for _, s, t in self.arrows:
            if s not in self.vertices or t not in self.vertices:
                raise BadSpec("branch arrow references an unknown vertex")

    def attach_order(self):
        """Root first, then breadth-first along the arrow list order."""
        order = [(self.root, None)]
        seen = {self.root}
        frontier = [self.root]
        while frontier:
            nxt = []
            for v in frontier:
                for a in self.arrows:
                    name, s, t = a
                    other = t if s == v else s if t == v else None
                    if other is not None and other not in seen:
                        seen.add(other)
                        order.append((other, a))
                        nxt.append(other)
            frontier = nxt
        if len(seen) != len(self.vertices):
            raise BadSpec("branch is not connected")
        return order


@dataclass
class BranchExtensionSpec:
    base: object
    attachments: list  # (module E_i, Branch, connecting arrow name or None)
    direction: str = "coextension"
    prefix: bool = True


def _on_mouth(C, E) -> bool:
    from .canonical import mouth_modules

    spec = getattr(C, "canonical_spec", None)
    if spec is None:
        return True
    for t in list(spec.params):
        for M in mouth_modules(C, t):
            if R.find_isomorphism(E, M, indecomposable=True) is not None:
                return True
    # generic tubes: a brick E^(t) with all spaces one-dimensional
    return all(d == 1 for d in E.dims) and R.is_brick(E)


def branch_extension(spec: BranchExtensionSpec):
    """Attach each branch at its module by iterated one-point (co)extensions.

    Returns (algebra, metadata) where metadata lists the attachment steps.
    """
    A = spec.base
    C = spec.base
    co = spec.direction == "coextension"
    if spec.direction not in ("extension", "coextension"):
        raise BadSpec("direction must be 'extension' or 'coextension'")
    steps = []
    for idx, (E, br, conn) in enumerate(spec.attachments, start=1):
        if not _on_mouth(C, E):
            raise MouthMismatch(f"module {idx} is not on a tube mouth")
        pre = f"L{idx}." if spec.prefix else ""
        vname = {v: pre + v for v in br.vertices}
        Em = R.transport(E, A)
        op = one_point_coextension if co else one_point_extension
        names = [conn] if conn else None
        A = op(A, Em, vname[br.root], names)
        steps.append({"vertex": vname[br.root], "module": "E", "dims": list(E.dims)})
        for v, arrow in br.attach_order()[1:]:
            name, s, t = arrow
            u = s if t == v else t
            into_new = t == v
            if into_new:
                # new sink below u: coextension by I(u)
                X = R.injective(A, vname[u])
                A = one_point_coextension(A, X, vname[v], [pre + name])
                kind = "coextension"
            else:
                X = R.projective(A, vname[u])
                A = one_point_extension(A, X, vname[v], [pre + name])
                kind = "extension"
            steps.append({"vertex": vname[v], "module": f"{'I' if into_new else 'P'}({vname[u]})", "step": kind})
    A.branch_metadata = steps
    return A, steps
