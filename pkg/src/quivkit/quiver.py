"""Quivers and linear combinations of paths.

Paths are written in traversal order: the path ``(a, b)`` runs along ``a``
first and then ``b``; it is displayed as ``a*b``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MalformedRelation


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


class Quiver:
    def __init__(self, vertices, arrows):
        self.vertices = tuple(str(v) for v in vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise MalformedRelation("duplicate vertex labels")
        self.arrows = tuple(a if isinstance(a, Arrow) else Arrow(*map(str, a)) for a in arrows)
        if len({a.name for a in self.arrows}) != len(self.arrows):
            raise MalformedRelation("duplicate arrow labels")
        self.vindex = {v: i for i, v in enumerate(self.vertices)}
        self.aindex = {a.name: i for i, a in enumerate(self.arrows)}
        for a in self.arrows:
            if a.source not in self.vindex or a.target not in self.vindex:
                raise MalformedRelation(f"arrow {a.name} references an unknown vertex")
        n = len(self.vertices)
        self.asrc = tuple(self.vindex[a.source] for a in self.arrows)
        self.atgt = tuple(self.vindex[a.target] for a in self.arrows)
        self.out = [[] for _ in range(n)]
        self.inn = [[] for _ in range(n)]
        for i in range(len(self.arrows)):
            self.out[self.asrc[i]].append(i)
            self.inn[self.atgt[i]].append(i)

    def __repr__(self):
        return f"Quiver({len(self.vertices)} vertices, {len(self.arrows)} arrows)"

    def __eq__(self, other):
        return isinstance(other, Quiver) and self.vertices == other.vertices and self.arrows == other.arrows

    def __hash__(self):
        return hash((self.vertices, self.arrows))

    def opposite(self) -> "Quiver":
        return Quiver(self.vertices, [Arrow(a.name, a.target, a.source) for a in self.arrows])

    def arrow_count(self, x: str, y: str) -> int:
        return sum(1 for a in self.arrows if a.source == x and a.target == y)

    def path_endpoints(self, names, source=None):
        """(source, target) vertex labels of a path given by arrow names."""
        if not names:
            if source is None:
                raise MalformedRelation("a trivial path needs an explicit vertex")
            return source, source
        idx = []
        for n in names:
            if n not in self.aindex:
                raise MalformedRelation(f"unknown arrow {n!r}")
            idx.append(self.aindex[n])
        for a, b in zip(idx, idx[1:]):
            if self.atgt[a] != self.asrc[b]:
                raise MalformedRelation(f"path {'*'.join(names)} is not composable")
        return self.arrows[idx[0]].source, self.arrows[idx[-1]].target

    def to_json(self):
        return {
            "vertices": list(self.vertices),
            "arrows": [{"name": a.name, "from": a.source, "to": a.target} for a in self.arrows],
        }


def is_acyclic(q: Quiver) -> bool:
    """True iff ``q`` has no oriented cycle (a loop counts as a cycle)."""
    n = len(q.vertices)
    indeg = [0] * n
    for t in q.atgt:
        indeg[t] += 1
    stack = [v for v in range(n) if indeg[v] == 0]
    seen = 0
    while stack:
        v = stack.pop()
        seen += 1
        for a in q.out[v]:
            w = q.atgt[a]
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    return seen == n


@dataclass(frozen=True)
class PathElement:
    """A linear combination of parallel paths; ``terms`` holds (coefficient, arrow names)."""

    source: str
    target: str
    terms: tuple

    @classmethod
    def build(cls, quiver: Quiver, terms, field, source=None):
        clean = []
        ends = set()
        for coef, names in terms:
            names = tuple(names)
            ends.add(quiver.path_endpoints(names, source))
            c = field(coef)
            if c != 0:
                clean.append((c, names))
        if len(ends) > 1:
            raise MalformedRelation(f"relation mixes endpoints {sorted(ends)}")
        if not ends:
            raise MalformedRelation("empty relation needs endpoints")
        s, t = ends.pop()
        return cls(s, t, tuple(clean))

    def is_zero(self):
        return not self.terms

    def min_length(self):
        return min((len(p) for _, p in self.terms), default=0)

    def reversed(self) -> "PathElement":
        return PathElement(self.target, self.source, tuple((c, tuple(reversed(p))) for c, p in self.terms))

    def format(self, field=None) -> str:
        if not self.terms:
            return "0"
        out = []
        for c, p in self.terms:
            word = "*".join(p) if p else f"e[{self.source}]"
            if c == 1:
                s = word
            elif c == -1 and not (field and field.characteristic):
                s = "-" + word
            else:
                s = f"{c}{word}" if str(c).lstrip("-").isdigit() else f"({c}){word}"
            out.append(s)
        text = " + ".join(out)
        return text.replace("+ -", "- ")

    def to_json(self, field):
        return [{"coef": field.to_json(c), "path": list(p)} for c, p in self.terms]


def quiver_to_dot(q: Quiver, relations=(), name="Q") -> str:
    lines = [f"// quiver {name}: {len(q.vertices)} vertices, {len(q.arrows)} arrows"]
    for r in relations:
        lines.append(f"// relation: {r.format()}")
    lines.append(f'digraph "{name}" {{')
    for v in q.vertices:
        lines.append(f'  "{v}";')
    for a in q.arrows:
        lines.append(f'  "{a.source}" -> "{a.target}" [label="{a.name}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
