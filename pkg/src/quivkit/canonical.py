"""Canonical algebras C(p, lambda) and the mouths of their stable tubes.

Vertices are ``"0"`` (the sink), ``"w"`` (the source) and ``"i,k"`` for the
interior of arm ``i``.  Arm ``i`` runs ``w -> i,p_i-1 -> ... -> i,1 -> 0`` with
arrows ``a{i}_{p_i}, ..., a{i}_1``; ``a{i}_1`` is the arrow ending at ``0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from gmpy2 import mpq

from . import rep as R
from .algebra import build_bound_quiver_algebra
from .errors import BadIndex, BadSpec
from .field import QQ
from .quiver import Arrow, PathElement, Quiver

INF = "inf"


def parse_tube_index(t):
    """``inf``/``∞`` or a rational number."""
    if isinstance(t, str):
        s = t.strip().lower()
        if s in ("inf", "infinity", "∞", "oo"):
            return INF
        return mpq(s)
    if t is None:
        raise BadIndex("tube index missing")
    return mpq(t)


def format_tube_index(t) -> str:
    return "inf" if t == INF else str(t)


@dataclass(frozen=True)
class CanonicalSpec:
    weights: tuple
    params: tuple
    flags: tuple = ()

    @classmethod
    def make(cls, weights, params=None):
        weights = tuple(int(p) for p in weights)
        m = len(weights)
        if m < 2:
            raise BadSpec("a canonical algebra needs at least two arms")
        if any(p < 1 for p in weights):
            raise BadSpec("weights must be positive")
        if params is None:
            if m > 2:
                raise BadSpec("parameters are required for three or more arms")
            params = (INF, 0)
        params = tuple(parse_tube_index(t) for t in params)
        if len(params) != m:
            raise BadSpec(f"{m} weights but {len(params)} parameters")
        if params[0] != INF or params[1] != 0:
            raise BadSpec("parameters must be normalised to (inf, 0, ...)")
        if len(set(format_tube_index(t) for t in params)) != m:
            raise BadSpec("parameters must be pairwise distinct")
        if INF in params[2:]:
            raise BadSpec("only the first parameter may be infinite")
        flags = ("m3-case-c",) if m == 3 else ()
        return cls(weights, params, flags)

    @property
    def m(self) -> int:
        return len(self.weights)

    def vertices(self):
        vs = ["0", "w"]
        for i, p in enumerate(self.weights, start=1):
            vs.extend(f"{i},{k}" for k in range(1, p))
        return vs

    def arm(self, i):
        """Vertices of arm i from the sink side: [0, (i,1), ..., (i,p_i-1), w]."""
        p = self.weights[i - 1]
        return ["0"] + [f"{i},{k}" for k in range(1, p)] + ["w"]

    def arrows(self):
        out = []
        for i in range(1, self.m + 1):
            arm = self.arm(i)
            for k in range(1, len(arm)):
                out.append(Arrow(f"a{i}_{k}", arm[k], arm[k - 1]))
        return out

    def arm_path(self, i):
        """Arrow names of the path w -> 0 along arm i, in traversal order."""
        return [f"a{i}_{k}" for k in range(self.weights[i - 1], 0, -1)]

    def tube_of(self, t):
        """Arm number i with lambda_i = t, or None for a generic index."""
        key = format_tube_index(t)
        for i, lam in enumerate(self.params, start=1):
            if format_tube_index(lam) == key:
                return i
        return None

    def to_json(self):
        return {"weights": list(self.weights), "params": [format_tube_index(t) for t in self.params]}


def canonical_algebra(spec: CanonicalSpec, field=QQ):
    if not isinstance(spec, CanonicalSpec):
        spec = CanonicalSpec.make(*spec)
    q = Quiver(spec.vertices(), spec.arrows())
    rels = []
    for j in range(3, spec.m + 1):
        lam = field(spec.params[j - 1])
        terms = [(1, spec.arm_path(j)), (1, spec.arm_path(1)), (lam, spec.arm_path(2))]
        rels.append(PathElement.build(q, terms, field))
    C = build_bound_quiver_algebra(q, rels, field)
    C.canonical_spec = spec
    return C


def _spec_of(C) -> CanonicalSpec:
    spec = getattr(C, "canonical_spec", None)
    if spec is None:
        raise BadSpec("algebra was not built by canonical_algebra")
    return spec


def _line_module(C, first_arrow_scalars: dict, zero_arms=()):
    """Module with K on every vertex outside ``zero_arms``; arrows are 1 except a{i}_1."""
    spec = _spec_of(C)
    F = C.field
    dims = {v: 1 for v in spec.vertices()}
    for i in zero_arms:
        for k in range(1, spec.weights[i - 1]):
            dims[f"{i},{k}"] = 0
    maps = {}
    for i in range(1, spec.m + 1):
        for k in range(1, spec.weights[i - 1] + 1):
            name = f"a{i}_{k}"
            if i in zero_arms:
                val = 0
            elif k == 1:
                val = first_arrow_scalars[i]
            else:
                val = 1
            maps[name] = [[F(val)]]
    return R.Representation(C, dims, maps)


def mouth_module_E(C, t):
    """The non-simple mouth module E^(t) with the displayed scalars."""
    spec = _spec_of(C)
    F = C.field
    t = parse_tube_index(t)
    lam = [None] + [None if x == INF else F(x) for x in spec.params]
    i0 = spec.tube_of(t)
    m = spec.m
    if i0 == 1:
        sc = {2: 1}
        sc.update({j: -lam[j] for j in range(3, m + 1)})
        return _line_module(C, sc, zero_arms=(1,))
    if i0 == 2:
        sc = {1: 1}
        sc.update({j: -1 for j in range(3, m + 1)})
        return _line_module(C, sc, zero_arms=(2,))
    if i0 is not None:
        j = i0
        sc = {1: -lam[j], 2: 1}
        sc.update({i: lam[j] - lam[i] for i in range(3, m + 1) if i != j})
        return _line_module(C, sc, zero_arms=(j,))
    x = F(t)
    sc = {1: -x, 2: 1}
    sc.update({j: x - lam[j] for j in range(3, m + 1)})
    return _line_module(C, sc)


def mouth_modules(C, t):
    """Mouth of the tube with index t: arm simples followed by E^(t)."""
    spec = _spec_of(C)
    t = parse_tube_index(t)
    if t != INF and C.field.characteristic:
        t = mpq(int(C.field(t)))
    i0 = spec.tube_of(t)
    out = []
    if i0 is not None:
        out.extend(R.simple(C, f"{i0},{k}") for k in range(1, spec.weights[i0 - 1]))
    out.append(mouth_module_E(C, t))
    return out


def tube_rank(C, t) -> int:
    spec = _spec_of(C)
    i0 = spec.tube_of(parse_tube_index(t))
    return spec.weights[i0 - 1] if i0 is not None else 1


def arm_module_F(C, i):
    """F_i = tau S(i,1): the mouth module of the i-th exceptional tube."""
    spec = _spec_of(C)
    return mouth_module_E(C, spec.params[i - 1])


@dataclass
class FamilyVerification:
    sample: list
    periods: dict = dc_field(default_factory=dict)
    failures: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self):
        return {
            "sample": [format_tube_index(t) for t in self.sample],
            "periods": {format_tube_index(t): p for t, p in self.periods.items()},
            "failures": list(self.failures),
            "ok": self.ok,
        }


def verify_canonical_family(C, sample, mouths=None) -> FamilyVerification:
    """Bricks, orthogonality within and across tubes, and tau-periods."""
    from .ar import mouth_permutation, tau_orbit

    sample = [parse_tube_index(t) for t in sample]
    rep = FamilyVerification(sample)
    mouths = mouths or {format_tube_index(t): mouth_modules(C, t) for t in sample}
    for t in sample:
        key = format_tube_index(t)
        mouth = mouths[key]
        for a, M in enumerate(mouth):
            if not M.check_relations():
                rep.failures.append(f"tube {key}: module {a} violates a relation")
            elif not R.is_brick(M):
                rep.failures.append(f"tube {key}: module {a} is not a brick")
        for a in range(len(mouth)):
            for b in range(a + 1, len(mouth)):
                if not R.are_orthogonal(mouth[a], mouth[b]):
                    rep.failures.append(f"tube {key}: modules {a},{b} not orthogonal")
        if rep.failures:
            continue
        try:
            period = len(tau_orbit(mouth[0]))
            mouth_permutation(mouth)
        except Exception as exc:  # reported, not raised
            rep.failures.append(f"tube {key}: {exc}")
            continue
        rep.periods[t] = period
        if hasattr(C, "canonical_spec") and period != tube_rank(C, t):
            rep.failures.append(f"tube {key}: tau-period {period} != rank {tube_rank(C, t)}")
    keys = [format_tube_index(t) for t in sample]
    for a in range(len(keys)):
        for b in range(a + 1, len(keys)):
            for M in mouths[keys[a]]:
                for N in mouths[keys[b]]:
                    if not R.are_orthogonal(M, N):
                        rep.failures.append(f"tubes {keys[a]} and {keys[b]} are not orthogonal")
    return rep
