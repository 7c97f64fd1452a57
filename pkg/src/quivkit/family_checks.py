"""Checks on computed tube and quasi-tube fragments.

Covers the counts s, p, r of a fragment, the saturation conditions MS1-MS3,
and standardness.  The infinite radical is never computed.  A stable tube is
certified standard when its mouth consists of pairwise orthogonal bricks,
and a family is refuted by an explicit nonzero map that factors through a
simple module.  Everything else is reported as inconclusive.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from . import linalg as la
from . import rep as R
from .ar import knit_tube, tau_orbit
from .errors import DepthInsufficient, HasProjectives

CERTIFIED = "certified"
REFUTED = "refuted"
INCONCLUSIVE = "inconclusive"


def quasi_tube_stats(T, branch_depth: int = 0) -> tuple:
    """(s, p, r) of a knitted fragment.

    The fragment must be deep enough to have met every projective inserted
    along its rank cycle, which we take as ``depth >= rank + branch_depth``.
    """
    if T.depth < T.rank + branch_depth:
        raise DepthInsufficient(f"depth {T.depth} < rank {T.rank} + branch depth {branch_depth}")
    return T.s, T.p, T.rank


def fragment_from(X, extra_depth: int = 3):
    """Knit the quasi-tube whose mouth is the tau-orbit of X."""
    mouth = tau_orbit(X)
    return knit_tube(mouth, len(mouth) + extra_depth)


def fragment_modules(T):
    return list(T.stable_modules()) + list(T.projectives)


def _unit(n, x):
    return tuple(1 if k == x else 0 for k in range(n))


def _dims_json(M):
    return list(M.dims)


@dataclass
class Verdict:
    status: str
    evidence: dict = dc_field(default_factory=dict)

    def to_json(self):
        return {"status": self.status, "evidence": self.evidence}


@dataclass
class FamilyReport:
    """Per-fragment counts, MS1-MS3 results with witnesses, and a standardness verdict."""

    stats: list = dc_field(default_factory=list)
    ms1: bool = False
    ms2: bool = False
    ms3: bool = False
    witnesses: dict = dc_field(default_factory=dict)
    standardness: Verdict | None = None
    counterexamples: list = dc_field(default_factory=list)
    notes: list = dc_field(default_factory=list)

    def to_json(self):
        return {
            "stats": [dict(s) for s in self.stats],
            "MS1": self.ms1,
            "MS2": self.ms2,
            "MS3": self.ms3,
            "witnesses": self.witnesses,
            "standardness": self.standardness.to_json() if self.standardness else None,
            "counterexamples": list(self.counterexamples),
            "notes": list(self.notes),
        }


def check_ms(fragments, S: int, T_mod: int, names=None, branch_depth: int = 0) -> FamilyReport:
    """MS1-MS3 on a family given by knitted fragments.

    ``S`` and ``T_mod`` are vertex indices of the two designated simples.
    MS3 is checked per fragment only: it is never claimed that the given
    fragments exhaust the family.
    """
    names = list(names) if names is not None else [str(k) for k in range(len(fragments))]
    rep = FamilyReport()
    w = rep.witnesses
    ms1_bad, allowed = [], {S, T_mod}
    inside = set()
    for nm, T in zip(names, fragments):
        s, p, r = quasi_tube_stats(T, branch_depth)
        rep.stats.append({"fragment": nm, "s": s, "p": p, "r": r, "bound": s + p <= r - 1})
        if s + p != r - 1:
            ms1_bad.append({"fragment": nm, "s": s, "p": p, "r": r})
        for M in T.simples:
            x = M.dims.index(1)
            inside.add(x)
            allowed.add(x)
        for P in T.projectives:
            allowed.update(x for x, d in enumerate(R.top_dims(P)) if d)
            allowed.update(x for x, d in enumerate(R.socle_dims(P)) if d)
    rep.ms1 = not ms1_bad
    if ms1_bad:
        w["MS1"] = ms1_bad

    ms2_bad = [{"simple_in_family": x} for x in sorted(inside & {S, T_mod})]
    for nm, T in zip(names, fragments):
        for M in fragment_modules(T):
            extra = [x for x, d in enumerate(M.dims) if d and x not in allowed]
            if extra:
                ms2_bad.append({"fragment": nm, "module": _dims_json(M), "factors": extra})
                break
    rep.ms2 = not ms2_bad
    if ms2_bad:
        w["MS2"] = ms2_bad

    ms3_found, ms3_bad = {}, []
    for nm, T in zip(names, fragments):
        n = len(T.mouth[0].dims)
        hit = next((M for M in fragment_modules(T)
                    if R.socle_dims(M) == _unit(n, S) and R.top_dims(M) == _unit(n, T_mod)), None)
        if hit is None:
            ms3_bad.append(nm)
        else:
            ms3_found[nm] = _dims_json(hit)
    rep.ms3 = not ms3_bad
    w["MS3"] = {"E": ms3_found, "missing": ms3_bad}
    rep.notes.append("MS3 checked on the given fragments; completeness of the family is not verifiable")
    return rep


def standardness_via_mouth(mouth) -> Verdict:
    """A stable tube is standard iff its mouth consists of pairwise orthogonal bricks.

    Accepts a knitted fragment or the list of mouth modules.
    """
    if hasattr(mouth, "projectives"):
        if mouth.projectives:
            raise HasProjectives("the mouth criterion applies to stable tubes only")
        mouth = mouth.mouth
    for k, M in enumerate(mouth):
        e = R.hom_dim(M, M)
        if e != 1:
            return Verdict(REFUTED, {"not_brick": k, "dims": _dims_json(M), "end_dim": e})
    for a in range(len(mouth)):
        for b in range(len(mouth)):
            if a != b and R.hom_dim(mouth[a], mouth[b]):
                return Verdict(REFUTED, {"hom": [a, b], "dims": [_dims_json(mouth[a]), _dims_json(mouth[b])]})
    return Verdict(CERTIFIED, {"mouth": [_dims_json(M) for M in mouth]})


def simple_factorization(M, x: int | None = None):
    """A nonzero endomorphism of M that factors as M -> S(x) -> M.

    Returns (f, x) or None.  Such an f lies in the infinite radical whenever
    M and S(x) sit in different components.
    """
    A, F = M.algebra, M.field
    tops, socs = R.top_dims(M), R.socle_dims(M)
    for y in ([x] if x is not None else range(A.nvertices)):
        if not (tops[y] and socs[y]):
            continue
        S = R.simple(A, y)
        for p in R.hom(M, S).basis:
            for i in R.hom(S, M).basis:
                f = R.compose(i, p, F)
                if not R.is_zero_morphism(f):
                    return f, y
    return None


def refute_by_factorization(M, name: str = "M") -> Verdict:
    hit = simple_factorization(M)
    if hit is None:
        return Verdict(INCONCLUSIVE, {"module": name, "reason": "no endomorphism factors through a simple"})
    f, y = hit
    return Verdict(REFUTED, {
        "module": name,
        "dims": _dims_json(M),
        "through": M.algebra.vertices[y],
        "rank": sum(int(la.rank(m, M.field)) for m in f if m.size),
    })


def certify_by_ideal(A, family) -> Verdict:
    """Certify through the annihilator ideal of a family.

    The certificate holds when the two-sided identities hold and r_A(I) = eI
    with Q_{A/I} acyclic.
    """
    from .ideals import ideal_identities, theorem45_check, annihilator

    I = annihilator(A, family, "I")
    ids = ideal_identities(A, family, I)
    th = theorem45_check(A, I)
    ok = ids.ok and th["r(I) = eI"] and th["acyclic"]
    ev = {"identities": ids.to_json(), "r(I) = eI": th["r(I) = eI"], "acyclic": th["acyclic"],
          "quotient_dim": th["presentation"].dim}
    return Verdict(CERTIFIED if ok else INCONCLUSIVE, ev)
