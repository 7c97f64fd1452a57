"""Matching two bound quiver presentations of basic algebras.

A match is a vertex bijection together with images of the target's arrows
as combinations of our parallel arrows such that every target relation maps
to zero.  With equal dimensions this yields an isomorphism: the induced map
from the target path algebra is onto and kills the target ideal.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product as iproduct

from .algebra import _clean
from .linalg import rank

ISOMORPHIC = "isomorphic"
NOT_ISOMORPHIC = "not_isomorphic"
INCONCLUSIVE = "inconclusive"


@dataclass
class PresentationMatch:
    status: str
    vertex_map: dict = dc_field(default_factory=dict)
    arrow_map: dict = dc_field(default_factory=dict)
    reason: str = ""

    @property
    def ok(self) -> bool:
        return self.status == ISOMORPHIC

    def to_json(self, field=None):
        conv = (lambda v: field.to_json(v)) if field is not None else str
        return {
            "status": self.status,
            "vertex_map": dict(self.vertex_map),
            "arrow_map": {a: {b: conv(c) for b, c in img.items()} for a, img in self.arrow_map.items()},
            "reason": self.reason,
        }


def _counts(q):
    n = len(q.vertices)
    c = [[0] * n for _ in range(n)]
    for a in range(len(q.arrows)):
        c[q.asrc[a]][q.atgt[a]] += 1
    return c


def _vertex_bijections(T, A, limit):
    """Bijections target vertex -> our vertex preserving arrow counts and Cartan entries."""
    ct, ca = _counts(T.quiver), _counts(A.quiver)
    Ct, Ca = T.cartan(), A.cartan()
    n = T.nvertices

    def sig(c, C, v):
        return (c[v][v], sum(c[v]), sum(r[v] for r in c), int(C[v, v]),
                tuple(sorted(int(x) for x in C[v])), tuple(sorted(int(x) for x in C[:, v])))

    st = [sig(ct, Ct, v) for v in range(n)]
    sa = [sig(ca, Ca, v) for v in range(n)]
    order = sorted(range(n), key=lambda v: (sum(1 for w in range(n) if sa[w] == st[v]), v))
    pi: dict = {}
    used = set()
    found = 0

    def rec(i):
        nonlocal found
        if found >= limit:
            return
        if i == n:
            found += 1
            yield dict(pi)
            return
        v = order[i]
        for w in range(n):
            if w in used or sa[w] != st[v]:
                continue
            if any(ct[v][u] != ca[w][pu] or ct[u][v] != ca[pu][w] or Ct[v, u] != Ca[w, pu] or Ct[u, v] != Ca[pu, w]
                   for u, pu in pi.items()):
                continue
            pi[v] = w
            used.add(w)
            yield from rec(i + 1)
            del pi[v]
            used.discard(w)

    yield from rec(0)


class _ArrowSearch:
    def __init__(self, T, A, pi, domain):
        self.T, self.A, self.pi = T, A, pi
        F = A.field
        self.F = F
        qt, qa = T.quiver, A.quiver
        self.groups = {}
        for a in range(len(qt.arrows)):
            key = (qt.asrc[a], qt.atgt[a])
            self.groups.setdefault(key, []).append(a)
        self.cands = {}
        self.group_of = {}
        for (u, v), arrows in self.groups.items():
            ours = [b for b in range(len(qa.arrows)) if qa.asrc[b] == pi[u] and qa.atgt[b] == pi[v]]
            if len(ours) != len(arrows):
                self.cands = None
                return
            if len(ours) == 1:
                opts = [{ours[0]: F(s)} for s in domain]
            else:
                opts = []
                for coeffs in iproduct((0, 1, -1), repeat=len(ours)):
                    if any(coeffs):
                        opts.append({b: F(c) for b, c in zip(ours, coeffs) if c})
            for a in arrows:
                self.cands[a] = opts
                self.group_of[a] = (u, v)
        self.arrow_vec = {b: A.to_sparse(A.arrow_vector(qa.arrows[b].name)) for b in range(len(qa.arrows))}
        self.rels = []
        for rel in T.relations:
            s = qt.vindex[rel.source]
            terms = [(F(c), tuple(qt.aindex[nm] for nm in names)) for c, names in rel.terms]
            self.rels.append((s, terms))

    def image(self, combo):
        out: dict = {}
        for b, c in combo.items():
            for k, v in self.arrow_vec[b].items():
                out[k] = out.get(k, 0) + c * v
        return _clean(out, self.F.characteristic)

    def rel_value(self, s, terms, assign):
        A = self.A
        tot: dict = {}
        for c, path in terms:
            val = {A.idem[self.pi[s]]: self.F.one}
            for a in path:
                val = A.product_sparse(val, assign[a])
                if not val:
                    break
            for k, v in val.items():
                tot[k] = tot.get(k, 0) + c * v
        return _clean(tot, self.F.characteristic)

    def group_independent(self, g, chosen):
        arrows = [a for a in self.groups[g] if a in chosen]
        if len(arrows) < 2:
            return True
        ours = sorted({b for a in arrows for b in chosen[a]})
        M = self.F.zeros((len(arrows), len(ours)))
        for i, a in enumerate(arrows):
            for j, b in enumerate(ours):
                M[i, j] = chosen[a].get(b, 0)
        return rank(M, self.F) == len(arrows)

    def run(self, budget):
        if self.cands is None:
            return None
        nt = len(self.T.quiver.arrows)
        order = []
        pending = [set(a for _, p in terms for a in p) for _, terms in self.rels]
        while len(order) < nt:
            best = min((r for r in range(len(pending)) if pending[r] - set(order)),
                       key=lambda r: len(pending[r] - set(order)), default=None)
            if best is None:
                order += [a for a in range(nt) if a not in order]
                break
            order += sorted(pending[best] - set(order))
        pos = {a: i for i, a in enumerate(order)}
        ready: dict = {}
        for r, (s, terms) in enumerate(self.rels):
            last = max((pos[a] for _, p in terms for a in p), default=-1)
            ready.setdefault(last, []).append(r)
        for r in ready.get(-1, []):
            if self.rel_value(*self.rels[r], {}):
                return None
        chosen: dict = {}
        assign: dict = {}
        steps = [0]

        def rec(i):
            if i == len(order):
                return True
            steps[0] += 1
            if steps[0] > budget:
                raise TimeoutError
            a = order[i]
            for opt in self.cands[a]:
                chosen[a] = opt
                if not self.group_independent(self.group_of[a], chosen):
                    continue
                assign[a] = self.image(opt)
                if all(not self.rel_value(*self.rels[r], assign) for r in ready.get(i, [])) and rec(i + 1):
                    return True
            chosen.pop(a, None)
            assign.pop(a, None)
            return False

        return dict(chosen) if rec(0) else None


def match_presentations(A, target, max_vertex_maps: int = 500, budget: int = 200000) -> PresentationMatch:
    """Search for an isomorphism from ``target`` onto ``A`` sending arrows to combinations of arrows."""
    T = target
    if T.field != A.field:
        return PresentationMatch(INCONCLUSIVE, reason="different fields")
    if T.dim != A.dim:
        return PresentationMatch(NOT_ISOMORPHIC, reason=f"dimensions differ ({T.dim} vs {A.dim})")
    if T.nvertices != A.nvertices or len(T.quiver.arrows) != len(A.quiver.arrows):
        return PresentationMatch(NOT_ISOMORPHIC, reason="quivers have different sizes")
    F = A.field
    domains = [(1, -1)]
    if not F.characteristic or F.characteristic > 3:
        half = F.inv(F(2))
        domains.append((1, -1, 2, -2, half, F(-half)))
    any_bij = False
    exhausted = True
    for domain in domains:
        for pi in _vertex_bijections(T, A, max_vertex_maps):
            any_bij = True
            try:
                sol = _ArrowSearch(T, A, pi, domain).run(budget)
            except TimeoutError:
                exhausted = False
                continue
            if sol is not None:
                qt, qa = T.quiver, A.quiver
                return PresentationMatch(
                    ISOMORPHIC,
                    {qt.vertices[v]: qa.vertices[w] for v, w in sorted(pi.items())},
                    {qt.arrows[a].name: {qa.arrows[b].name: c for b, c in img.items()} for a, img in sorted(sol.items())},
                    "all target relations vanish and dimensions agree",
                )
        if not any_bij:
            return PresentationMatch(NOT_ISOMORPHIC, reason="no vertex bijection preserves arrow counts and Cartan data")
    why = "no arrow assignment found" + ("" if exhausted else " within the search budget")
    return PresentationMatch(INCONCLUSIVE, reason=why + " (only diagonal and small parallel changes are searched)")
