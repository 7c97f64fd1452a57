"""Repetitive algebras, their automorphisms, orbit algebras and push-down.

The repetitive category of B has objects ``(m, x)`` for ``m`` an integer and
``x`` a vertex of B.  Morphisms come in two kinds:

* ``('b', m, i)``: basis element ``i`` of B, from ``(m, src i)`` to ``(m, tgt i)``;
* ``('f', m, c)``: the dual basis functional of ``c``, from ``(m+1, tgt c)``
  to ``(m, src c)``.

Everything is computed lazily from the multiplication table of B, so no
window has to be chosen in advance.  The Nakayama automorphism raises every
level by one.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .algebra import StructureConstantAlgebra, _clean, gabriel_presentation
from .errors import InvalidAutomorphism, NotAdmissible, SupportOverflow, WindowTooSmall
from . import rep as R


# ---------------------------------------------------------------------------
# element arithmetic on dicts keyed by morphism keys


def _axpy(out: dict, c, d: dict):
    for k, v in d.items():
        out[k] = out.get(k, 0) + c * v


def _shift(elem: dict, m: int) -> dict:
    if not m:
        return dict(elem)
    return {(k, lv + m, i): v for (k, lv, i), v in elem.items()}


class DualTables:
    """Coefficients needed to multiply B against its dual bimodule DB."""

    def __init__(self, B: StructureConstantAlgebra):
        self.B = B
        left = defaultdict(list)   # (b, c) -> [(z, coef of c in z*b)]
        right = defaultdict(list)  # (b, c) -> [(z, coef of c in b*z)]
        for z, row in B._m.items():
            for b, cell in row.items():
                for c, v in cell.items():
                    left[(b, c)].append((z, v))
                    right[(z, c)].append((b, v))
        self.left = dict(left)
        self.right = dict(right)


def trivial_extension(B: StructureConstantAlgebra) -> StructureConstantAlgebra:
    """T(B) = B with DB as a square-zero ideal, as a structure-constant algebra."""
    n = B.dim
    tab = DualTables(B)
    labels = list(B.labels) + [f"D({l})" for l in B.labels]
    src = list(B.src) + [B.tgt[c] for c in range(n)]
    tgt = list(B.tgt) + [B.src[c] for c in range(n)]
    mult: dict = {}
    for i, row in B._m.items():
        for j, cell in row.items():
            mult.setdefault(i, {})[j] = dict(cell)
    for (b, c), lst in tab.left.items():
        mult.setdefault(b, {})[n + c] = {n + z: v for z, v in lst}
    for (b, c), lst in tab.right.items():
        mult.setdefault(n + c, {})[b] = {n + z: v for z, v in lst}
    T = StructureConstantAlgebra(B.field, B.vertices, labels, src, tgt, B.idem, mult)
    T.degree = [0] * n + [1] * n
    return T


class RepetitiveAlgebra:
    """The repetitive category of B, evaluated on demand."""

    def __init__(self, B: StructureConstantAlgebra):
        self.B = B
        self.field = B.field
        self.tables = DualTables(B)
        self._pres = None
        self._T = None

    # -- objects and morphisms --------------------------------------------
    @property
    def nvertices(self):
        return self.B.nvertices

    def start(self, key):
        kind, m, i = key
        return (m, self.B.src[i]) if kind == "b" else (m + 1, self.B.tgt[i])

    def end(self, key):
        kind, m, i = key
        return (m, self.B.tgt[i]) if kind == "b" else (m, self.B.src[i])

    def identity(self, obj) -> dict:
        m, x = obj
        return {("b", m, self.B.idem[x]): self.field.one}

    def keys_between(self, o1, o2):
        """Basis of the morphism space from object o1 to object o2."""
        (m1, x), (m2, y) = o1, o2
        if m1 == m2:
            return [("b", m1, i) for i in self.B.block(x, y)]
        if m1 == m2 + 1:
            return [("f", m2, c) for c in self.B.block(y, x)]
        return []

    def key_product(self, x, y) -> dict:
        kx, mx, i = x
        ky, my, j = y
        if kx == "b" and ky == "b":
            if mx != my:
                return {}
            return {("b", mx, k): v for k, v in self.B.structure(i, j).items()}
        if kx == "b" and ky == "f":
            if mx != my + 1:
                return {}
            return {("f", my, z): v for z, v in self.tables.left.get((i, j), ())}
        if kx == "f" and ky == "b":
            if mx != my:
                return {}
            return {("f", mx, z): v for z, v in self.tables.right.get((j, i), ())}
        return {}

    def product(self, u: dict, v: dict) -> dict:
        out: dict = {}
        for x, a in u.items():
            for y, b in v.items():
                prod = self.key_product(x, y)
                if prod:
                    _axpy(out, a * b, prod)
        return _clean(out, self.field.characteristic)

    def label(self, key) -> str:
        kind, m, i = key
        lab = self.B.labels[i]
        return f"{lab}@{m}" if kind == "b" else f"D({lab})@{m}"

    def object_label(self, obj) -> str:
        return f"({obj[0]},{self.B.vertices[obj[1]]})"

    # -- presentation by lifted arrows ----------------------------------------
    @property
    def trivial_extension(self):
        if self._T is None:
            self._T = trivial_extension(self.B)
        return self._T

    @property
    def presentation(self):
        """Gabriel presentation of T(B); its arrows are homogeneous of degree 0 or 1."""
        if self._pres is None:
            T = self.trivial_extension
            pres = gabriel_presentation(T)
            n = self.B.dim
            degrees = {}
            for name, vec in pres.arrow_elements.items():
                nz = [k for k in range(T.dim) if vec[k] != 0]
                degs = {0 if k < n else 1 for k in nz}
                if len(degs) != 1:
                    raise NotAdmissible(f"arrow {name} of T(B) is not homogeneous")
                degrees[name] = degs.pop()
            pres.meta["degrees"] = degrees
            self._pres = pres
        return self._pres

    def lift_vector(self, vec, start_level: int) -> dict:
        """Lift a homogeneous T(B) element to the morphism starting at level ``start_level``."""
        n = self.B.dim
        out = {}
        for k in range(2 * n):
            v = vec[k]
            if v != 0:
                out[("b", start_level, k) if k < n else ("f", start_level - 1, k - n)] = v
        return out

    def arrow_lift(self, a: int, start_level: int) -> dict:
        pres = self.presentation
        name = pres.algebra.quiver.arrows[a].name
        return self.lift_vector(pres.arrow_elements[name], start_level)

    def arrow_degree(self, a: int) -> int:
        pres = self.presentation
        return pres.meta["degrees"][pres.algebra.quiver.arrows[a].name]

    def key_paths(self, key):
        """The basis key as a combination of lifted presentation paths.

        Returns (start level, [(coefficient, arrow index tuple)]).
        """
        kind, m, i = key
        T = self.trivial_extension
        idx = i if kind == "b" else self.B.dim + i
        col = self.presentation.from_source[:, idx]
        paths = self.presentation.algebra.paths
        terms = [(col[k], paths[k][1]) for k in range(T.dim) if col[k] != 0]
        return (m if kind == "b" else m + 1), terms


@dataclass
class RepetitiveWindow:
    """The full subcategory on levels lo..hi, materialized as an algebra."""

    algebra: StructureConstantAlgebra
    objects: list
    keys: list
    lo: int
    hi: int

    def level_objects(self, m):
        """Vertex indices of the copy of B at level m."""
        return [i for i, o in enumerate(self.objects) if o[0] == m]

    def hom_dim(self, o1, o2) -> int:
        a = self.algebra
        return len(a.block(self.objects.index(o1), self.objects.index(o2)))


def repetitive_window(B, lo: int, hi: int) -> RepetitiveWindow:
    if hi < lo:
        raise ValueError("window needs hi >= lo")
    Bh = B if isinstance(B, RepetitiveAlgebra) else RepetitiveAlgebra(B)
    B = Bh.B
    objects = [(m, x) for m in range(lo, hi + 1) for x in range(B.nvertices)]
    opos = {o: i for i, o in enumerate(objects)}
    keys = [("b", m, i) for m in range(lo, hi + 1) for i in range(B.dim)]
    keys += [("f", m, c) for m in range(lo, hi) for c in range(B.dim)]
    kpos = {k: i for i, k in enumerate(keys)}
    by_start = defaultdict(list)
    for k in keys:
        by_start[Bh.start(k)].append(k)
    mult: dict = {}
    for x in keys:
        for y in by_start[Bh.end(x)]:
            prod = Bh.key_product(x, y)
            if prod:
                mult.setdefault(kpos[x], {})[kpos[y]] = {kpos[k]: v for k, v in prod.items()}
    A = StructureConstantAlgebra(
        Bh.field,
        [f"{B.vertices[x]}@{m}" for m, x in objects],
        [Bh.label(k) for k in keys],
        [opos[Bh.start(k)] for k in keys],
        [opos[Bh.end(k)] for k in keys],
        [kpos[("b", m, B.idem[x])] for m, x in objects],
        mult,
    )
    return RepetitiveWindow(A, objects, keys, lo, hi)


# ---------------------------------------------------------------------------
# automorphisms


@dataclass
class AutomorphismSpec:
    """Vertex data of an automorphism: ``vertex_map[x] = (level shift, image vertex)``.

    ``scalars`` (optional) fixes the sign of each lifted arrow image, keyed by
    arrow name of the trivial-extension presentation.  ``arrow_map`` (optional)
    picks the image arrow where several candidates exist.
    """

    vertex_map: dict
    scalars: dict | None = None
    arrow_map: dict | None = None
    name: str = "g"

    @classmethod
    def from_labels(cls, B, mapping: dict, **kw):
        vm = {}
        for x, (s, y) in mapping.items():
            vm[B.vertex_index(str(x))] = (int(s), B.vertex_index(str(y)))
        return cls(vm, **kw)

    def to_json(self, B):
        return {
            "name": self.name,
            "vertex_map": {B.vertices[x]: [s, B.vertices[y]] for x, (s, y) in sorted(self.vertex_map.items())},
        }


def nakayama_spec(B) -> AutomorphismSpec:
    return AutomorphismSpec({x: (1, x) for x in range(B.nvertices)}, name="nu")


def identity_spec(B) -> AutomorphismSpec:
    return AutomorphismSpec({x: (0, x) for x in range(B.nvertices)}, name="id")


def classify(spec: AutomorphismSpec, B=None) -> str:
    """``rigid``, ``strictly_positive``, ``non_positive`` or ``invalid``.

    Positive automorphisms never lower a level; rigid ones fix every level.
    With ``B`` given, the vertex data must also preserve composition on a window.
    """
    vm = spec.vertex_map
    n = len(vm)
    if sorted(y for _, y in vm.values()) != list(range(n)):
        return "invalid"
    if B is not None:
        try:
            RepetitiveAutomorphism(RepetitiveAlgebra(B), spec, window=(-1, 0, 1))
        except InvalidAutomorphism:
            return "invalid"
    shifts = [s for s, _ in vm.values()]
    if all(s == 0 for s in shifts):
        return "rigid"
    if all(s >= 0 for s in shifts):
        return "strictly_positive"
    return "non_positive"


class RepetitiveAutomorphism:
    """An automorphism of the repetitive category commuting with the Nakayama shift."""

    def __init__(self, Bhat: RepetitiveAlgebra, spec: AutomorphismSpec, window=(0, 1)):
        self.Bhat = Bhat
        self.spec = spec
        B = Bhat.B
        self.n = B.nvertices
        vm = spec.vertex_map
        if sorted(y for _, y in vm.values()) != list(range(self.n)) or len(vm) != self.n:
            raise InvalidAutomorphism("vertex map is not a bijection")
        self.shift = [vm[x][0] for x in range(self.n)]
        self.perm = [vm[x][1] for x in range(self.n)]
        self.inv_perm = [0] * self.n
        for x, y in enumerate(self.perm):
            self.inv_perm[y] = x
        self._arrow_images = None
        self.signs = None
        self._cache: dict = {}
        self._build_arrow_images()
        if window:
            self.check_window(window)

    # -- objects -----------------------------------------------------------
    def obj(self, o):
        m, x = o
        return (m + self.shift[x], self.perm[x])

    def obj_inv(self, o):
        m, y = o
        x = self.inv_perm[y]
        return (m - self.shift[x], x)

    # -- arrows ------------------------------------------------------------
    def _candidates(self, a: int):
        """Presentation arrows that can carry the image of arrow ``a`` lifted at level 0."""
        Bh = self.Bhat
        q = Bh.presentation.algebra.quiver
        s, t = q.asrc[a], q.atgt[a]
        d = Bh.arrow_degree(a)
        ps, pt = self.obj((0, s)), self.obj((-d, t))
        drop = ps[0] - pt[0]
        out = []
        for b in range(len(q.arrows)):
            if q.asrc[b] == ps[1] and q.atgt[b] == pt[1] and Bh.arrow_degree(b) == drop:
                out.append(b)
        return ps[0], out

    def _build_arrow_images(self):
        Bh = self.Bhat
        q = Bh.presentation.algebra.quiver
        names = [a.name for a in q.arrows]
        chosen = {}
        for a in range(len(q.arrows)):
            lvl, cands = self._candidates(a)
            if self.spec.arrow_map and names[a] in self.spec.arrow_map:
                b = q.aindex[self.spec.arrow_map[names[a]]]
                if b not in cands:
                    raise InvalidAutomorphism(f"arrow {names[a]} cannot map to {names[b]}")
            elif len(cands) == 1:
                b = cands[0]
            elif a in cands and all(s == self.shift[0] for s in self.shift) and self.perm == list(range(self.n)):
                b = a
            elif not cands:
                raise InvalidAutomorphism(f"no arrow available for the image of {names[a]}")
            else:
                raise InvalidAutomorphism(f"arrow {names[a]} has parallel candidates; give arrow_map")
            chosen[a] = (b, lvl)
        if len({b for b, _ in chosen.values()}) != len(chosen):
            raise InvalidAutomorphism("arrow images are not distinct")
        self._unsigned = {a: Bh.arrow_lift(b, lvl) for a, (b, lvl) in chosen.items()}
        self.arrow_targets = {names[a]: names[b] for a, (b, _) in chosen.items()}
        if self.spec.scalars is not None:
            signs = {a: Bh.field(self.spec.scalars.get(names[a], 1)) for a in chosen}
            if not self._relations_hold(signs):
                raise InvalidAutomorphism("given scalars do not preserve the relations")
        else:
            signs = self._search_signs()
        self.signs = signs
        self._arrow_images = {a: {k: signs[a] * v for k, v in self._unsigned[a].items()} for a in chosen}

    def _relation_terms(self):
        """For every relation, the unsigned image of each lifted term."""
        Bh = self.Bhat
        P = Bh.presentation.algebra
        q = P.quiver
        out = []
        for rel in P.relations:
            s = q.vindex[rel.source]
            terms = []
            for c, names in rel.terms:
                arrows = tuple(q.aindex[nm] for nm in names)
                terms.append((Bh.field(c), arrows, self._unsigned_path(s, arrows, 0)))
            out.append(terms)
        return out

    def _unsigned_path(self, s, arrows, level, images=None):
        Bh = self.Bhat
        images = images or self._unsigned
        val = self.Bhat.identity(self.obj((level, s)))
        lv = level
        for a in arrows:
            val = Bh.product(val, _shift(images[a], lv))
            lv -= Bh.arrow_degree(a)
        return val

    def _relations_hold(self, signs, rel_terms=None) -> bool:
        rel_terms = rel_terms if rel_terms is not None else self._relation_terms()
        p = self.Bhat.field.characteristic
        for terms in rel_terms:
            tot: dict = {}
            for c, arrows, vec in terms:
                sg = c
                for a in arrows:
                    sg = sg * signs[a]
                _axpy(tot, sg, vec)
            if _clean(tot, p):
                return False
        return True

    def _search_signs(self):
        """Backtrack over +-1 scalars on arrow images, trying all +1 first."""
        F = self.Bhat.field
        rel_terms = self._relation_terms()
        narrows = len(self._unsigned)
        order = []
        for terms in rel_terms:
            for _, arrows, _ in terms:
                for a in arrows:
                    if a not in order:
                        order.append(a)
        order += [a for a in range(narrows) if a not in order]
        pos = {a: i for i, a in enumerate(order)}
        ready = defaultdict(list)
        for r, terms in enumerate(rel_terms):
            last = max((pos[a] for _, arrows, _ in terms for a in arrows), default=-1)
            ready[last].append(terms)
        signs: dict = {}

        def rec(i):
            if i == len(order):
                return True
            a = order[i]
            for s in (F.one, -F.one):
                signs[a] = F(s)
                if self._relations_hold(signs, ready.get(i, [])) and rec(i + 1):
                    return True
            del signs[a]
            return False

        if not self._relations_hold({}, ready.get(-1, [])) or not rec(0):
            raise InvalidAutomorphism("no choice of signs preserves the relations")
        return {a: signs[a] for a in range(narrows)}

    # -- morphisms -----------------------------------------------------------
    def apply_key(self, key) -> dict:
        kind, m, i = key
        base = (kind, 0, i)
        if base not in self._cache:
            lvl, terms = self.Bhat.key_paths(base)
            out: dict = {}
            Bh = self.Bhat
            s = Bh.start(base)[1]
            for c, arrows in terms:
                _axpy(out, c, self._unsigned_path(s, arrows, lvl, self._arrow_images))
            self._cache[base] = _clean(out, Bh.field.characteristic)
        return _shift(self._cache[base], m)

    def apply(self, elem: dict, times: int = 1) -> dict:
        for _ in range(times):
            out: dict = {}
            for k, v in elem.items():
                _axpy(out, v, self.apply_key(k))
            elem = _clean(out, self.Bhat.field.characteristic)
        return elem

    def check_window(self, levels=(0, 1)):
        """Check multiplicativity on all composable basis pairs starting in ``levels``."""
        Bh = self.Bhat
        B = Bh.B
        keys = []
        for m in levels:
            keys += [("b", m, i) for i in range(B.dim)] + [("f", m, c) for c in range(B.dim)]
        by_start = defaultdict(list)
        for k in keys + [("b", m - 1, i) for m in levels for i in range(B.dim)]:
            by_start[Bh.start(k)].append(k)
        for x in keys:
            fx = self.apply_key(x)
            for y in by_start.get(Bh.end(x), ()):
                lhs = self.apply(Bh.product({x: Bh.field.one}, {y: Bh.field.one}))
                rhs = Bh.product(fx, self.apply_key(y))
                if lhs != rhs:
                    raise InvalidAutomorphism(f"composition not preserved at {Bh.label(x)} * {Bh.label(y)}")
        for x in range(B.nvertices):
            e = ("b", 0, B.idem[x])
            if self.apply_key(e) != Bh.identity(self.obj((0, x))):
                raise InvalidAutomorphism("identity morphisms are not preserved")

    def period(self, cap: int = 64):
        """Smallest N with g^N = nu^M on objects, returned as (N, M)."""
        for N in range(1, cap + 1):
            o = [(0, x) for x in range(self.n)]
            for _ in range(N):
                o = [self.obj(p) for p in o]
            if all(p[1] == x for x, p in enumerate(o)) and len({p[0] for p in o}) == 1:
                M = o[0][0]
                if M > 0:
                    return N, M
                if M == 0:
                    raise NotAdmissible("a power of the automorphism fixes every object")
        raise NotAdmissible("no power of the automorphism is a power of the Nakayama shift")


class AutomorphismPower:
    """g^k for a verified automorphism g, evaluated by repeated application."""

    def __init__(self, g: RepetitiveAutomorphism, k: int):
        if k < 1:
            raise ValueError("power must be positive")
        self.base, self.k = g, k
        self.Bhat = g.Bhat
        self.n = g.n
        self.spec = power_spec(g.spec, k)

    def obj(self, o):
        for _ in range(self.k):
            o = self.base.obj(o)
        return o

    def obj_inv(self, o):
        for _ in range(self.k):
            o = self.base.obj_inv(o)
        return o

    def apply(self, elem: dict, times: int = 1) -> dict:
        return self.base.apply(elem, times * self.k)

    def apply_key(self, key) -> dict:
        return self.base.apply({key: self.Bhat.field.one}, self.k)

    period = RepetitiveAutomorphism.period


def compose_specs(g: AutomorphismSpec, h: AutomorphismSpec, name=None) -> AutomorphismSpec:
    """Vertex data of g after h."""
    vm = {}
    for x, (s, y) in h.vertex_map.items():
        s2, z = g.vertex_map[y]
        vm[x] = (s + s2, z)
    return AutomorphismSpec(vm, name=name or f"{g.name}{h.name}")


def power_spec(g: AutomorphismSpec, k: int) -> AutomorphismSpec:
    out = AutomorphismSpec({x: (0, x) for x in g.vertex_map}, name=f"{g.name}^{k}")
    for _ in range(k):
        out = compose_specs(g, out, name=f"{g.name}^{k}")
    return out


# ---------------------------------------------------------------------------
# orbit algebras


class OrbitAlgebra:
    """The orbit algebra of the repetitive category under an admissible automorphism.

    Objects of the fundamental domain are the first member at level >= 0 of
    each orbit; the basis is every morphism ending in the domain.
    """

    def __init__(self, g: RepetitiveAutomorphism):
        self.g = g
        self.Bhat = Bh = g.Bhat
        B = Bh.B
        self.N, self.M = g.period()
        domain = set()
        for m in range(0, self.M):
            for x in range(B.nvertices):
                domain.add(self.reduce((m, x))[1])
        self.domain = sorted(domain)
        self.dindex = {o: i for i, o in enumerate(self.domain)}
        keys = []
        for o in self.domain:
            m, x = o
            keys += [("b", m, i) for i in B.by_tgt[x]]
            keys += [("f", m, c) for c in B.by_src[x]]
        self.keys = keys
        self.kindex = {k: i for i, k in enumerate(keys)}
        self._pow_cache: dict = {}
        self.algebra = self._build()
        self._pres = None

    def reduce(self, o):
        """(k, f) with o = g^k(f), k >= 0, f in the fundamental domain."""
        m, x = o
        if m < 0:
            raise SupportOverflow("object below level 0")
        q, r = divmod(m, self.M)
        k = q * self.N
        cur = (r, x)
        while True:
            prev = self.g.obj_inv(cur)
            if prev[0] < 0:
                return k, cur
            cur = prev
            k += 1

    def g_power_key(self, key, k: int) -> dict:
        ck = (key, k)
        if ck not in self._pow_cache:
            self._pow_cache[ck] = self.g.apply({key: self.Bhat.field.one}, k)
        return self._pow_cache[ck]

    def _build(self) -> StructureConstantAlgebra:
        Bh = self.Bhat
        B = Bh.B
        labels, src, tgt = [], [], []
        start_red = []
        for key in self.keys:
            k, f = self.reduce(Bh.start(key))
            start_red.append((k, f))
            labels.append(Bh.label(key))
            src.append(self.dindex[f])
            tgt.append(self.dindex[Bh.end(key)])
        by_src = defaultdict(list)
        for j, s in enumerate(src):
            by_src[s].append(j)
        mult: dict = {}
        for i, x in enumerate(self.keys):
            for j in by_src[tgt[i]]:
                k, _ = start_red[j]
                gx = self.g_power_key(x, k)
                prod = Bh.product(gx, {self.keys[j]: Bh.field.one})
                if prod:
                    cell = {}
                    for kk, v in prod.items():
                        if kk not in self.kindex:
                            raise WindowTooSmall(f"product left the fundamental domain at {Bh.label(kk)}")
                        cell[self.kindex[kk]] = v
                    mult.setdefault(i, {})[j] = cell
        vlabels = self._vertex_labels()
        idem = [self.kindex[("b", m, B.idem[x])] for (m, x) in self.domain]
        return StructureConstantAlgebra(Bh.field, vlabels, labels, src, tgt, idem, mult)

    def _vertex_labels(self):
        B = self.Bhat.B
        if all(m == 0 for m, _ in self.domain):
            return [B.vertices[x] for _, x in self.domain]
        return [f"{B.vertices[x]}@{m}" for m, x in self.domain]

    @property
    def presentation(self):
        if self._pres is None:
            self._pres = gabriel_presentation(self.algebra)
        return self._pres


def orbit_algebra(B, spec: AutomorphismSpec | None = None) -> OrbitAlgebra:
    """B-hat / (g) for the automorphism with vertex data ``spec`` (default: Nakayama)."""
    Bh = RepetitiveAlgebra(B)
    g = RepetitiveAutomorphism(Bh, spec or nakayama_spec(B))
    return OrbitAlgebra(g)


# ---------------------------------------------------------------------------
# modules over the repetitive category and push-down


@dataclass
class HatModule:
    """A finite-dimensional module over the repetitive category.

    ``dims`` maps objects to dimensions; ``action(key)`` returns the matrix of a
    basis morphism (target space x source space) or None when it acts as zero.
    """

    Bhat: RepetitiveAlgebra
    dims: dict
    action: object
    name: str = "M"

    def support(self):
        return sorted(o for o, d in self.dims.items() if d)


def hat_module_from(M: R.Representation, Bhat: RepetitiveAlgebra, level: int = 0, name="M") -> HatModule:
    """A module over B placed at one level of the repetitive category."""
    B = Bhat.B
    if M.algebra is not B:
        M = R.transport(M, B)
    dims = {(level, x): M.dims[x] for x in range(B.nvertices) if M.dims[x]}

    def action(key):
        kind, m, i = key
        if kind != "b" or m != level:
            return None
        return M.basis_action(i)

    return HatModule(Bhat, dims, action, name)


def push_down(H: HatModule, orb: OrbitAlgebra) -> R.Representation:
    """The push-down of a module supported at levels >= 0 to the orbit algebra."""
    Bh = orb.Bhat
    F = Bh.field
    if any(o[0] < 0 for o in H.support()):
        raise SupportOverflow("push-down needs support at levels >= 0")
    comps = defaultdict(list)  # domain object -> [(k, object)]
    for o in H.support():
        k, f = orb.reduce(o)
        comps[f].append((k, o))
    for f in comps:
        comps[f].sort()
    offsets = {}
    dims = []
    for f in orb.domain:
        off = 0
        for k, o in comps.get(f, ()):
            offsets[(f, o)] = off
            off += H.dims[o]
        dims.append(off)
    A = orb.algebra
    pres = orb.presentation

    def act_key(idx):
        key = orb.keys[idx]
        fs = orb.domain[A.src[idx]]
        ft = orb.domain[A.tgt[idx]]
        ks, _ = orb.reduce(Bh.start(key))
        mat = F.zeros((dims[A.tgt[idx]], dims[A.src[idx]]))
        for k, o in comps.get(fs, ()):
            j = k - ks
            if j < 0:
                continue
            img = orb.g_power_key(key, j)
            for kk, v in img.items():
                a = H.action(kk)
                if a is None:
                    continue
                e = Bh.end(kk)
                if (ft, e) not in offsets:
                    continue
                r0, c0 = offsets[(ft, e)], offsets[(fs, o)]
                mat[r0:r0 + a.shape[0], c0:c0 + a.shape[1]] += v * a
        return F.normalize(mat)

    maps = {}
    P = pres.algebra
    for a in P.quiver.arrows:
        vec = pres.arrow_elements[a.name]
        s, t = P.quiver.vindex[a.source], P.quiver.vindex[a.target]
        mat = F.zeros((dims[t], dims[s]))
        for idx in range(A.dim):
            if vec[idx] != 0:
                mat = mat + vec[idx] * act_key(idx)
        maps[a.name] = F.normalize(mat)
    return R.Representation(P, dims, maps, check=True)


# ---------------------------------------------------------------------------
# selfinjectivity and symmetry


def _as_bound(A):
    return A if hasattr(A, "quiver") else gabriel_presentation(A).algebra


def nakayama_permutation(A):
    """Vertex permutation x -> y with P(x) isomorphic to I(y), or None."""
    A = _as_bound(A)
    perm = {}
    for x in range(A.nvertices):
        P = R.projective(A, x)
        soc = R.socle_dims(P)
        if sum(soc) != 1:
            return None
        y = soc.index(1)
        I = R.injective(A, y)
        if list(I.dims) != list(P.dims) or R.find_isomorphism(P, I, indecomposable=True) is None:
            return None
        perm[A.quiver.vertices[x]] = A.quiver.vertices[y]
    return perm


def is_selfinjective(A) -> bool:
    return nakayama_permutation(A) is not None


def is_symmetric(A, tries: int = 4, seed: int = 0) -> bool:
    """Look for a trace form: a functional vanishing on commutators with nondegenerate pairing."""
    import numpy as np
    from .linalg import rank, sparse_kernel

    F = A.field
    rows = []
    for i, row in A._m.items():
        for j in row:
            d = dict(A.structure(i, j))
            _axpy(d, -1, A.structure(j, i))
            d = _clean(d, F.characteristic)
            if d:
                rows.append(d)
    K = sparse_kernel(rows, A.dim, F)
    if K.shape[1] == 0:
        return False
    rng = np.random.default_rng(seed)
    for _ in range(tries):
        coeffs = [F.random(rng) for _ in range(K.shape[1])]
        f = F.zeros(A.dim)
        for c, k in zip(coeffs, range(K.shape[1])):
            f = f + c * K[:, k]
        f = F.normalize(f)
        G = F.zeros((A.dim, A.dim))
        for i, row in A._m.items():
            for j, cell in row.items():
                G[i, j] = sum((v * f[k] for k, v in cell.items()), F(0))
        if rank(F.normalize(G), F) == A.dim:
            return True
    return False
