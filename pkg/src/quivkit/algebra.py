"""Finite-dimensional algebras: structure constants, bound quiver algebras and
Gabriel presentations.

Conventions: a basis element ``b`` with ``src[b] = x`` and ``tgt[b] = y`` lies
in ``e_x A e_y``; for a bound quiver algebra it is the coset of a path from
``x`` to ``y``.  Products are path concatenation in traversal order, so
``e_x A e_y * e_y A e_z`` lands in ``e_x A e_z``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field

import numpy as np

from .errors import MalformedRelation, NonAdmissible, NotBasic, RadicalFailure
from .field import QQ, Field, field_from_json
from .linalg import EchelonBasis
from .quiver import Arrow, PathElement, Quiver, is_acyclic, quiver_to_dot

__all__ = [
    "StructureConstantAlgebra",
    "BoundQuiverAlgebra",
    "Presentation",
    "build_bound_quiver_algebra",
    "gabriel_presentation",
    "opposite",
    "is_acyclic",
    "radical_basis",
    "algebra_from_json",
    "algebra_to_json",
]


def _clean(d: dict, p: int) -> dict:
    if p:
        return {k: v % p for k, v in d.items() if v % p}
    return {k: v for k, v in d.items() if v}


class StructureConstantAlgebra:
    """Basic algebra given by a graded basis and its multiplication table."""

    def __init__(self, field: Field, vertices, labels, src, tgt, idempotents, mult):
        self.field = field
        self.vertices = tuple(vertices)
        self.labels = tuple(labels)
        self.src = tuple(int(s) for s in src)
        self.tgt = tuple(int(t) for t in tgt)
        self.idem = tuple(int(i) for i in idempotents)
        self.dim = len(self.labels)
        self._m = {i: {j: dict(c) for j, c in row.items() if c} for i, row in mult.items() if row}
        n = len(self.vertices)
        self.by_src = [[] for _ in range(n)]
        self.by_tgt = [[] for _ in range(n)]
        self._blocks: dict = {}
        for b in range(self.dim):
            self.by_src[self.src[b]].append(b)
            self.by_tgt[self.tgt[b]].append(b)
            self._blocks.setdefault((self.src[b], self.tgt[b]), []).append(b)

    # -- basics ----------------------------------------------------------
    @property
    def nvertices(self):
        return len(self.vertices)

    def vertex_index(self, v) -> int:
        return self.vertices.index(str(v))

    def block(self, x: int, y: int):
        return self._blocks.get((x, y), [])

    def cartan(self) -> np.ndarray:
        n = self.nvertices
        c = np.zeros((n, n), dtype=np.int64)
        for b in range(self.dim):
            c[self.src[b], self.tgt[b]] += 1
        return c

    def structure(self, i: int, j: int) -> dict:
        return self._m.get(i, {}).get(j, {})

    def zero(self):
        return self.field.zeros(self.dim)

    def basis_vector(self, i: int):
        v = self.zero()
        v[i] = self.field.one
        return v

    def unit(self):
        v = self.zero()
        for i in self.idem:
            v[i] = self.field.one
        return v

    def to_sparse(self, vec) -> dict:
        return {int(i): vec[i] for i in np.nonzero(vec != 0)[0]}

    def to_dense(self, d: dict):
        v = self.zero()
        for k, c in d.items():
            v[k] = c
        return v

    def product_sparse(self, u: dict, v: dict) -> dict:
        out: dict = {}
        m = self._m
        for i, a in u.items():
            row = m.get(i)
            if not row:
                continue
            for j, b in v.items():
                cell = row.get(j)
                if cell:
                    ab = a * b
                    for k, c in cell.items():
                        out[k] = out.get(k, 0) + ab * c
        return _clean(out, self.field.characteristic)

    def multiply(self, x, y):
        return self.to_dense(self.product_sparse(self.to_sparse(x), self.to_sparse(y)))

    def left_matrix(self, a):
        """Matrix of y -> a*y on the basis."""
        f = self.field
        out = f.zeros((self.dim, self.dim))
        sa = self.to_sparse(a) if not isinstance(a, dict) else a
        for j in range(self.dim):
            for k, c in self.product_sparse(sa, {j: f.one}).items():
                out[k, j] = c
        return out

    def right_matrix(self, a):
        f = self.field
        out = f.zeros((self.dim, self.dim))
        sa = self.to_sparse(a) if not isinstance(a, dict) else a
        for j in range(self.dim):
            for k, c in self.product_sparse({j: f.one}, sa).items():
                out[k, j] = c
        return out

    # -- checks ----------------------------------------------------------
    def is_unital(self) -> bool:
        one = {i: self.field.one for i in self.idem}
        for b in range(self.dim):
            e = {b: self.field.one}
            if self.product_sparse(one, e) != e or self.product_sparse(e, one) != e:
                return False
        return True

    def is_associative(self) -> bool:
        f = self.field.one
        for a in range(self.dim):
            for b in self.by_src[self.tgt[a]]:
                ab = self.structure(a, b)
                if not ab:
                    continue
                for c in self.by_src[self.tgt[b]]:
                    left = self.product_sparse(ab, {c: f})
                    right = self.product_sparse({a: f}, self.structure(b, c))
                    if left != right:
                        return False
        return True

    def is_graded(self) -> bool:
        """Each basis element lies in its recorded block e_x A e_y."""
        for (i, row) in self._m.items():
            for j, cell in row.items():
                if self.tgt[i] != self.src[j]:
                    return False
                for k in cell:
                    if (self.src[k], self.tgt[k]) != (self.src[i], self.tgt[j]):
                        return False
        return True

    # -- constructions ---------------------------------------------------
    def opposite(self) -> "StructureConstantAlgebra":
        mult: dict = {}
        for i, row in self._m.items():
            for j, cell in row.items():
                mult.setdefault(j, {})[i] = cell
        return StructureConstantAlgebra(
            self.field, self.vertices, self.labels, self.tgt, self.src, self.idem, mult
        )

    def corner(self, vertices) -> tuple["StructureConstantAlgebra", list]:
        """The algebra eAe for e the sum of the given vertex idempotents."""
        keep_v = [self.vertex_index(v) for v in vertices]
        vpos = {v: i for i, v in enumerate(keep_v)}
        keep = [b for b in range(self.dim) if self.src[b] in vpos and self.tgt[b] in vpos]
        pos = {b: i for i, b in enumerate(keep)}
        mult: dict = {}
        for b in keep:
            for c in keep:
                cell = self.structure(b, c)
                if cell:
                    mult.setdefault(pos[b], {})[pos[c]] = {pos[k]: v for k, v in cell.items()}
        sub = StructureConstantAlgebra(
            self.field,
            [self.vertices[v] for v in keep_v],
            [self.labels[b] for b in keep],
            [vpos[self.src[b]] for b in keep],
            [vpos[self.tgt[b]] for b in keep],
            [pos[self.idem[v]] for v in keep_v],
            mult,
        )
        return sub, keep

    def ideal_echelon(self, rows) -> tuple[EchelonBasis, list]:
        """RREF of a subspace with idempotent columns ordered first."""
        order = list(self.idem) + [b for b in range(self.dim) if b not in set(self.idem)]
        col = {b: i for i, b in enumerate(order)}
        eb = EchelonBasis(self.field)
        for r in rows:
            eb.add({col[k]: v for k, v in r.items()})
        return eb, order

    def quotient(self, rows) -> tuple["StructureConstantAlgebra", list, EchelonBasis, list]:
        """A/I for the two-sided ideal spanned by ``rows`` (sparse dicts).

        Returns (A/I, kept basis indices, echelon data, column order).
        """
        eb, order = self.ideal_echelon(rows)
        col = {b: i for i, b in enumerate(order)}
        keep = [b for b in range(self.dim) if col[b] not in eb.rows]
        pos = {b: i for i, b in enumerate(keep)}
        keep_v = [v for v in range(self.nvertices) if self.idem[v] in pos]
        vpos = {v: i for i, v in enumerate(keep_v)}
        mult: dict = {}
        for b in keep:
            for c in keep:
                cell = self.structure(b, c)
                if not cell:
                    continue
                res = eb.reduce({col[k]: v for k, v in cell.items()})
                if res:
                    mult.setdefault(pos[b], {})[pos[c]] = {pos[order[k]]: v for k, v in res.items()}
        q = StructureConstantAlgebra(
            self.field,
            [self.vertices[v] for v in keep_v],
            [self.labels[b] for b in keep],
            [vpos[self.src[b]] for b in keep],
            [vpos[self.tgt[b]] for b in keep],
            [pos[self.idem[v]] for v in keep_v],
            mult,
        )
        return q, keep, eb, order

    def __repr__(self):
        return f"{type(self).__name__}(dim={self.dim}, vertices={self.nvertices}, field={self.field!r})"


class BoundQuiverAlgebra(StructureConstantAlgebra):
    """KQ/I with a basis of path cosets.

    ``paths[b]`` is ``(source vertex index, arrow index tuple)`` of the basis
    path ``b``; ``arrow_basis[a]`` is the basis index of arrow ``a``.
    """

    def __init__(self, field, quiver: Quiver, relations, paths, mult, degree: int):
        self.quiver = quiver
        self.relations = tuple(relations)
        self.paths = tuple((int(s), tuple(int(a) for a in p)) for s, p in paths)
        self.degree = degree
        labels, src, tgt = [], [], []
        for s, p in self.paths:
            labels.append(self._label(s, p))
            src.append(s)
            tgt.append(quiver.atgt[p[-1]] if p else s)
        idem = [None] * len(quiver.vertices)
        self.arrow_basis = [None] * len(quiver.arrows)
        for b, (s, p) in enumerate(self.paths):
            if not p:
                idem[s] = b
            elif len(p) == 1:
                self.arrow_basis[p[0]] = b
        if any(i is None for i in idem):
            raise NonAdmissible("some trivial path is not a basis element")
        if any(a is None for a in self.arrow_basis):
            raise NonAdmissible("some arrow is not a basis element (relation not in rad^2)")
        super().__init__(field, quiver.vertices, labels, src, tgt, idem, mult)
        self._path_index = {p: b for b, p in enumerate(self.paths)}

    def _label(self, s, p):
        if not p:
            return f"e[{self.quiver.vertices[s]}]"
        return "*".join(self.quiver.arrows[a].name for a in p)

    def path_sparse(self, arrows, source: int | None = None) -> dict:
        """Coordinates of a path (arrow index tuple) in the basis."""
        arrows = tuple(arrows)
        if not arrows:
            return {self.idem[source]: self.field.one}
        key = (self.quiver.asrc[arrows[0]], arrows)
        if key in self._path_index:
            return {self._path_index[key]: self.field.one}
        vec = {self.arrow_basis[arrows[0]]: self.field.one}
        for a in arrows[1:]:
            vec = self.product_sparse(vec, {self.arrow_basis[a]: self.field.one})
            if not vec:
                break
        return vec

    def names_to_indices(self, names):
        return tuple(self.quiver.aindex[n] for n in names)

    def element_sparse(self, pe: PathElement) -> dict:
        out: dict = {}
        src = self.quiver.vindex[pe.source]
        for c, names in pe.terms:
            for k, v in self.path_sparse(self.names_to_indices(names), src).items():
                out[k] = out.get(k, 0) + c * v
        return _clean(out, self.field.characteristic)

    def element(self, pe: PathElement):
        return self.to_dense(self.element_sparse(pe))

    def arrow_vector(self, name: str):
        return self.basis_vector(self.arrow_basis[self.quiver.aindex[name]])

    def vertex_vector(self, v):
        return self.basis_vector(self.idem[self.vertex_index(v)])

    def check_relations(self) -> bool:
        return all(not self.element_sparse(r) for r in self.relations)

    def opposite(self) -> "BoundQuiverAlgebra":
        q = self.quiver.opposite()
        paths = []
        for s, p in self.paths:
            if p:
                paths.append((self.quiver.atgt[p[-1]], tuple(reversed(p))))
            else:
                paths.append((s, ()))
        mult: dict = {}
        for i, row in self._m.items():
            for j, cell in row.items():
                mult.setdefault(j, {})[i] = cell
        return BoundQuiverAlgebra(self.field, q, [r.reversed() for r in self.relations], paths, mult, self.degree)

    def relabel(self, vertex_map: dict | None = None, arrow_map: dict | None = None) -> "BoundQuiverAlgebra":
        vm = {v: str(vertex_map.get(v, v)) for v in self.quiver.vertices} if vertex_map else {v: v for v in self.quiver.vertices}
        am = {a.name: str(arrow_map.get(a.name, a.name)) for a in self.quiver.arrows} if arrow_map else {a.name: a.name for a in self.quiver.arrows}
        q = Quiver([vm[v] for v in self.quiver.vertices],
                   [Arrow(am[a.name], vm[a.source], vm[a.target]) for a in self.quiver.arrows])
        rels = [PathElement(vm[r.source], vm[r.target], tuple((c, tuple(am[n] for n in p)) for c, p in r.terms))
                for r in self.relations]
        return BoundQuiverAlgebra(self.field, q, rels, self.paths, self._m, self.degree)

    def to_json(self):
        return algebra_to_json(self)

    def to_dot(self, name="A"):
        return quiver_to_dot(self.quiver, self.relations, name)


def opposite(A):
    return A.opposite()


# ---------------------------------------------------------------------------
# Building KQ/I from a presentation


def _normalize_relations(quiver: Quiver, relations, field: Field):
    out = []
    for r in relations:
        if not isinstance(r, PathElement):
            r = PathElement.build(quiver, r, field)
        for _, p in r.terms:
            if len(p) < 2:
                raise MalformedRelation(f"relation {r.format()} is not inside rad^2")
        quiver.path_endpoints(r.terms[0][1] if r.terms else (), r.source)
        terms = {}
        src = quiver.vindex[r.source]
        for c, names in r.terms:
            key = (src, tuple(quiver.aindex[n] for n in names))
            terms[key] = terms.get(key, 0) + field(c)
        terms = _clean(terms, field.characteristic)
        out.append((r, terms))
    return out


class _ZeroPaths:
    """Membership test for paths containing a monomial (one-term) relation."""

    def __init__(self, monos):
        self.monos = set(monos)
        self.lengths = sorted({len(m) for m in self.monos})

    def contains_suffix(self, arrows) -> bool:
        n = len(arrows)
        return any(L <= n and arrows[n - L:] in self.monos for L in self.lengths)

    def contains_prefix(self, arrows) -> bool:
        return any(L <= len(arrows) and arrows[:L] in self.monos for L in self.lengths)

    def contains(self, arrows) -> bool:
        n = len(arrows)
        for L in self.lengths:
            for i in range(n - L + 1):
                if arrows[i:i + L] in self.monos:
                    return True
        return False


def _enumerate_paths(quiver: Quiver, L: int, zero: _ZeroPaths, cap: int):
    n = len(quiver.vertices)
    level = [(v, ()) for v in range(n)]
    allp = list(level)
    for _ in range(L):
        nxt = []
        for s, p in level:
            t = quiver.atgt[p[-1]] if p else s
            for a in quiver.out[t]:
                q = p + (a,)
                if not zero.contains_suffix(q):
                    nxt.append((s, q))
        allp.extend(nxt)
        level = nxt
        if len(allp) > cap:
            raise NonAdmissible(f"more than {cap} paths of length <= {L}; ideal likely not admissible")
    return allp


def _path_key(path):
    s, p = path
    return (len(p), p, s)


def _truncated_quotient(quiver, rels, zero, L, field, cap):
    paths = _enumerate_paths(quiver, L, zero, cap)
    paths.sort(key=_path_key, reverse=True)
    col = {p: i for i, p in enumerate(paths)}
    eb = EchelonBasis(field)

    def trunc(vec):
        out = {}
        for (s, path), c in vec.items():
            if len(path) <= L and (s, path) in col:
                out[(s, path)] = c
        return out

    queue = []
    for _, terms in rels:
        v = trunc({k: c for k, c in terms.items() if not zero.contains(k[1])})
        if v:
            queue.append(v)
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        piv = eb.add({col[k]: c for k, c in v.items()})
        if piv is None:
            continue
        (s, p0) = next(iter(v))
        t = quiver.atgt[p0[-1]] if p0 else s
        for a in quiver.inn[s]:
            w = {}
            for (ss, path), c in v.items():
                q = (a,) + path
                if len(q) <= L and not zero.contains_prefix(q):
                    w[(quiver.asrc[a], q)] = c
            if w:
                queue.append(w)
        for a in quiver.out[t]:
            w = {}
            for (ss, path), c in v.items():
                q = path + (a,)
                if len(q) <= L and not zero.contains_suffix(q):
                    w[(ss, q)] = c
            if w:
                queue.append(w)
    return paths, col, eb


def build_bound_quiver_algebra(quiver: Quiver, relations=(), field: Field = QQ, length_cap: int = 40,
                               path_cap: int = 400000) -> BoundQuiverAlgebra:
    """Compute a path-coset basis of KQ/I and its multiplication table."""
    if length_cap < 1:
        raise ValueError("length_cap must be >= 1")
    rels = _normalize_relations(quiver, relations, field)
    monos = [next(iter(t))[1] for _, t in rels if len(t) == 1]
    zero = _ZeroPaths(monos)
    start = max([1] + [len(k[1]) for _, t in rels for k in t])
    prev = None
    for L in range(start, length_cap + 1):
        paths, col, eb = _truncated_quotient(quiver, rels, zero, L, field, path_cap)
        dim = len(paths) - len(eb)
        if prev is not None and dim == prev:
            break
        prev = dim
    else:
        raise NonAdmissible(f"dimensions did not stabilise up to length {length_cap}")

    basis = [p for p in paths if col[p] not in eb.rows]
    basis.sort(key=lambda sp: (sp[0], quiver.atgt[sp[1][-1]] if sp[1] else sp[0], len(sp[1]), sp[1]))
    bidx = {p: i for i, p in enumerate(basis)}
    by_col = {col[p]: bidx[p] for p in basis}
    if any(len(p) >= L for _, p in basis):
        raise NonAdmissible("basis contains a path of the stabilisation length")

    def reduce_path(s, arrows):
        if len(arrows) > L or zero.contains(arrows):
            return {}
        key = (s, arrows)
        if key in bidx:
            return {bidx[key]: field.one}
        c = col.get(key)
        if c is None or c not in eb.rows:
            return {}
        out = {}
        for k, v in eb.rows[c].items():
            if k != c:
                out[by_col[k]] = (-v) % field.characteristic if field.characteristic else -v
        return out

    mult: dict = {}
    by_src: dict = {}
    for j, (s, p) in enumerate(basis):
        by_src.setdefault(s, []).append(j)
    for i, (s, p) in enumerate(basis):
        t = quiver.atgt[p[-1]] if p else s
        for j in by_src.get(t, []):
            cell = reduce_path(s, p + basis[j][1])
            if cell:
                mult.setdefault(i, {})[j] = cell
    rel_objs = [r for r, _ in rels]
    A = BoundQuiverAlgebra(field, quiver, rel_objs, basis, mult, L)
    return A


# ---------------------------------------------------------------------------
# Radical and Gabriel presentation


def radical_basis(A: StructureConstantAlgebra) -> list:
    """Sparse basis of rad A.

    First tries the span of the non-idempotent basis elements (valid when it is
    a nilpotent two-sided ideal, since then the quotient is spanned by
    orthogonal idempotents).  Otherwise uses the trace-form criterion, which
    needs characteristic 0 or a prime larger than dim A.
    """
    f = A.field
    idem = set(A.idem)
    cand = [b for b in range(A.dim) if b not in idem]
    ok = True
    for i in cand:
        for j in A.by_src[A.tgt[i]]:
            if any(k in idem for k in A.structure(i, j)):
                ok = False
                break
        for j in A.by_tgt[A.src[i]]:
            if any(k in idem for k in A.structure(j, i)):
                ok = False
                break
        if not ok:
            break
    if ok:
        power = [{b: f.one} for b in cand]
        for _ in range(A.dim + 1):
            if not power:
                return [{b: f.one} for b in cand]
            eb = EchelonBasis(f)
            for r in power:
                for b in cand:
                    prod = A.product_sparse(r, {b: f.one})
                    if prod:
                        eb.add(prod)
            power = list(eb.rows.values())
        ok = False
    p = f.characteristic
    if p and p <= A.dim:
        raise RadicalFailure(f"trace-form radical needs characteristic 0 or p > dim A = {A.dim}")
    t = [sum(A.structure(m, k).get(k, 0) for k in range(A.dim)) for m in range(A.dim)]
    gram = f.zeros((A.dim, A.dim))
    for i in range(A.dim):
        for j in range(A.dim):
            cell = A.structure(i, j)
            if cell:
                v = sum(c * t[m] for m, c in cell.items())
                gram[i, j] = f.normalize(v) if p else v
    from .linalg import kernel

    ker = kernel(gram, f)
    rows = [A.to_sparse(ker[:, k]) for k in range(ker.shape[1])]
    if A.dim - len(rows) != A.nvertices:
        raise NotBasic("A/rad A is not a product of copies of the field over the given idempotents")
    return rows


@dataclass
class Presentation:
    """Bound quiver presentation of a structure-constant algebra.

    ``to_source`` has as column b the source coordinates of presentation basis
    element b; ``from_source`` is its inverse.
    """

    algebra: BoundQuiverAlgebra
    source: StructureConstantAlgebra
    arrow_elements: dict
    to_source: np.ndarray
    from_source: np.ndarray
    meta: dict = dc_field(default_factory=dict)

    def image(self, vec):
        return self.source.field.matmul(self.to_source, vec.reshape(-1, 1)).reshape(-1)

    def preimage(self, vec):
        return self.source.field.matmul(self.from_source, vec.reshape(-1, 1)).reshape(-1)


def _block_project(rows, A, x, y):
    cols = set(A.block(x, y))
    out = []
    for r in rows:
        pr = {k: v for k, v in r.items() if k in cols}
        if pr:
            out.append(pr)
    return out


def gabriel_presentation(A: StructureConstantAlgebra, arrow_names=None, path_cap: int = 500000) -> Presentation:
    """Present a basic algebra as KQ/I with reproducible arrows and relations."""
    f = A.field
    p_ = f.characteristic
    rad = radical_basis(A)
    rad_eb = EchelonBasis(f)
    for r in rad:
        rad_eb.add(r)
    rad_rows = [dict(r) for r in rad_eb.rows.values()]
    sq = EchelonBasis(f)
    for r in rad_rows:
        for s in rad_rows:
            if A.src[next(iter(s))] != A.tgt[next(iter(r))]:
                continue
            prod = A.product_sparse(r, s)
            if prod:
                sq.add(prod)
    sq_rows = list(sq.rows.values())
    arrows, arrow_vecs = [], []
    n = A.nvertices
    counter = 0
    for x in range(n):
        for y in range(n):
            rb = _block_project(rad_rows, A, x, y)
            if not rb:
                continue
            eb = EchelonBasis(f)
            for r in _block_project(sq_rows, A, x, y):
                eb.add(r)
            # prefer single basis elements as arrow lifts
            cands = [{b: f.one} for b in A.block(x, y)]
            rspan = EchelonBasis(f)
            for r in rb:
                rspan.add(r)
            for c in cands + rb:
                if not rspan.contains(c):
                    continue
                if eb.add(c) is not None:
                    if len(c) == 1:
                        k = next(iter(c))
                        name = A.labels[k]
                    else:
                        name = f"x{counter}"
                    counter += 1
                    arrows.append((name, x, y))
                    arrow_vecs.append(c)
    names = []
    used = set()
    for i, (name, x, y) in enumerate(arrows):
        if arrow_names and i < len(arrow_names):
            name = arrow_names[i]
        base, k = name, 1
        while name in used or name in A.vertices:
            k += 1
            name = f"{base}_{k}"
        used.add(name)
        names.append(name)
    quiver = Quiver(A.vertices, [Arrow(nm, A.vertices[x], A.vertices[y]) for nm, (_, x, y) in zip(names, arrows)])

    # enumerate paths that have a nonzero proper prefix, track dependencies
    track = EchelonBasis(f, track=True)
    values: dict = {}
    indep: list = []
    kernel_vecs: dict = {}
    order: list = []
    level = []
    for v in range(n):
        key = (v, ())
        val = {A.idem[v]: f.one}
        values[key] = val
        level.append(key)
    total = 0
    while level:
        level.sort(key=_path_key)
        nxt = []
        for key in level:
            val = values[key]
            order.append(key)
            piv, combo = track.add(val, tag=key)
            if piv is not None:
                indep.append(key)
            else:
                kvec = {key: f.one}
                for t, c in combo.items():
                    kvec[t] = kvec.get(t, 0) - c
                kernel_vecs[key] = _clean(kvec, p_)
            if not val:
                continue
            s, pth = key
            t = quiver.atgt[pth[-1]] if pth else s
            for a in quiver.out[t]:
                k2 = (s, pth + (a,))
                values[k2] = A.product_sparse(val, arrow_vecs[a])
                nxt.append(k2)
                total += 1
                if total > path_cap:
                    raise RadicalFailure("path enumeration exceeded cap; radical not nilpotent?")
        level = nxt

    # minimal generators: complement of R*K + K*R inside K
    dep = [k for k in order if k in kernel_vecs]
    dpos = {k: i for i, k in enumerate(dep)}
    M = EchelonBasis(f)

    def coords(vec):
        out = {}
        for k, c in vec.items():
            i = dpos.get(k)
            if i is not None:
                out[i] = c
        return out

    for key in dep:
        kv = kernel_vecs[key]
        s, pth = key
        t = quiver.atgt[pth[-1]] if pth else s
        for a in quiver.inn[s]:
            w = {(quiver.asrc[a], (a,) + pp): c for (ss, pp), c in kv.items()}
            cw = coords(w)
            if cw:
                M.add(cw)
        for a in quiver.out[t]:
            w = {(ss, pp + (a,)): c for (ss, pp), c in kv.items()}
            cw = coords(w)
            if cw:
                M.add(cw)
    relations = []
    for key in dep:
        unit = {dpos[key]: f.one}
        if M.contains(unit):
            continue
        M.add(unit)
        kv = kernel_vecs[key]
        terms = sorted(kv.items(), key=lambda kc: _path_key(kc[0]), reverse=True)
        s = key[0]
        pe = PathElement(
            quiver.vertices[s],
            quiver.vertices[quiver.atgt[key[1][-1]] if key[1] else s],
            tuple((c, tuple(quiver.arrows[a].name for a in pp)) for (ss, pp), c in terms),
        )
        relations.append(pe)

    # presentation algebra on the independent paths
    basis = sorted(indep, key=lambda sp: (sp[0], quiver.atgt[sp[1][-1]] if sp[1] else sp[0], len(sp[1]), sp[1]))
    if len(basis) != A.dim:
        raise NotBasic(f"paths span {len(basis)} dimensions, algebra has {A.dim}")
    bidx = {k: i for i, k in enumerate(basis)}

    def reduce_key(key):
        if key in bidx:
            return {bidx[key]: f.one}
        kv = kernel_vecs.get(key)
        if kv is None:
            return {}
        out = {}
        for k2, c in kv.items():
            if k2 != key:
                out[bidx[k2]] = -c
        return _clean(out, p_)

    mult: dict = {}
    for i, (s, pi) in enumerate(basis):
        t = quiver.atgt[pi[-1]] if pi else s
        for j, (s2, pj) in enumerate(basis):
            if s2 != t:
                continue
            cell = reduce_key((s, pi + pj))
            if cell:
                mult.setdefault(i, {})[j] = cell
    depth = max((len(pp) for _, pp in order), default=0)
    P = BoundQuiverAlgebra(f, quiver, relations, basis, mult, depth + 1)
    to_src = f.zeros((A.dim, A.dim))
    for i, key in enumerate(basis):
        for k, c in values[key].items():
            to_src[k, i] = c
    from .linalg import inverse

    from_src = inverse(to_src, f)
    if from_src is None:
        raise RadicalFailure("path images do not form a basis")
    arrow_elements = {names[i]: A.to_dense(arrow_vecs[i]) for i in range(len(names))}
    return Presentation(P, A, arrow_elements, to_src, from_src)


# ---------------------------------------------------------------------------
# JSON


def algebra_to_json(A: BoundQuiverAlgebra) -> dict:
    d = {"field": A.field.tag()}
    d.update(A.quiver.to_json())
    d["relations"] = [r.to_json(A.field) for r in A.relations]
    return d


def algebra_from_json(d, length_cap: int = 40) -> BoundQuiverAlgebra:
    if isinstance(d, str):
        d = json.loads(d)
    f = field_from_json(d.get("field", "Q"))
    q = Quiver(d["vertices"], [Arrow(a["name"], str(a["from"]), str(a["to"])) for a in d["arrows"]])
    rels = []
    for r in d.get("relations", []):
        rels.append(PathElement.build(q, [(t["coef"], t["path"]) for t in r], f))
    return build_bound_quiver_algebra(q, rels, f, length_cap)
