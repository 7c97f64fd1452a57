"""Command-line front end: ``quivkit <command> [options]``.

Every command prints one report.  ``--format json`` is the default,
``text`` renders the same data as indented key/value lines, and ``dot``
is available for commands that produce a quiver or a tube fragment.  The
exit status is 0 when every check in the report holds, 1 when one fails,
and 2 for bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field as dc_field
from pathlib import Path

from . import rep as R
from .algebra import algebra_to_json, gabriel_presentation
from .ar import (
    ext1_dim,
    is_injective_indecomposable,
    is_projective_indecomposable,
    knit_tube,
    order_mouth,
    stable_hom_dims,
    tau,
    tau_inverse,
)
from .canonical import CanonicalSpec, canonical_algebra, mouth_modules, verify_canonical_family
from .errors import QuivkitError
from .extensions import branch_extension
from .family_checks import check_ms, fragment_from, refute_by_factorization, standardness_via_mouth
from .formats import load_algebra, load_automorphism, load_extension_spec, load_representation, parse_field
from .ideals import annihilator, generated_ideal, ideal_identities, is_deforming, radical_ideal, theorem45_check
from .iso import match_presentations
from .pipelines import EXAMPLES, example_report
from .quiver import PathElement, quiver_to_dot
from .selfinjective import (
    AutomorphismPower,
    OrbitAlgebra,
    RepetitiveAlgebra,
    RepetitiveAutomorphism,
    classify,
    is_selfinjective,
    is_symmetric,
    trivial_extension,
)


@dataclass
class RunConfig:
    """Settings recorded in every report."""

    field: str = "Q"
    seed: int = 0
    depth: int = 4
    extra: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        if self.depth < 1:
            raise ValueError("depth must be positive")


class Report:
    def __init__(self, command, config: RunConfig, result: dict, checks=None, dot: str | None = None):
        self.command, self.config, self.result = command, config, result
        self.checks = dict(checks or {})
        self.dot = dot

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_json(self):
        return {"command": self.command, "config": asdict(self.config), "checks": self.checks,
                "ok": self.ok, "result": self.result}


def _text(obj, indent=0) -> list:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines += _text(v, indent + 1)
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and not _flat(v):
                lines.append(f"{pad}-")
                lines += _text(v, indent + 1)
            else:
                lines.append(f"{pad}- {_scalar(v)}")
    else:
        lines.append(pad + _scalar(obj))
    return lines


def _flat(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _scalar(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def render(report: Report, fmt: str) -> str:
    if fmt == "dot":
        if report.dot is None:
            raise QuivkitError(f"command {report.command!r} has no DOT output")
        return report.dot
    if fmt == "text":
        head = [f"{report.command}: {'ok' if report.ok else 'FAILED'}"]
        head += [f"  [{'x' if v else ' '}] {k}" for k, v in report.checks.items()]
        return "\n".join(head + _text(report.result)) + "\n"
    return json.dumps(report.to_json(), indent=2, ensure_ascii=False, default=str) + "\n"


# ---------------------------------------------------------------------------
# commands


def cmd_canonical(args, cfg):
    F = parse_field(args.field)
    C = canonical_algebra(CanonicalSpec.make(args.weights.split(","), args.params.split(",") if args.params else None), F)
    res = {"spec": C.canonical_spec.to_json(), "algebra": algebra_to_json(C), "dim": C.dim, "mouths": {}}
    checks = {}
    tubes = args.verify_tubes.split(",") if args.verify_tubes else []
    for t in tubes:
        res["mouths"][t] = [M.to_json() for M in mouth_modules(C, t)]
    if tubes:
        v = verify_canonical_family(C, tubes)
        res["verification"] = v.to_json()
        checks["mouths are orthogonal bricks with the expected periods"] = v.ok
    return Report("canonical", cfg, res, checks, quiver_to_dot(C.quiver, C.relations, "C"))


def cmd_extend(args, cfg):
    spec = load_extension_spec(args.spec)
    B, steps = branch_extension(spec)
    res = {"algebra": algebra_to_json(B), "dim": B.dim, "steps": steps}
    return Report("extend", cfg, res, {}, quiver_to_dot(B.quiver, B.relations, "B"))


def _orbit(args):
    F = parse_field(args.field)
    B = load_algebra(args.base, field=F)
    spec = load_automorphism(args.auto, B)
    Bh = RepetitiveAlgebra(B)
    g = RepetitiveAutomorphism(Bh, spec, window=(-1, 0, 1))
    g = AutomorphismPower(g, args.power) if args.power > 1 else g
    return B, spec, OrbitAlgebra(g)


def cmd_orbit(args, cfg):
    B, spec, orb = _orbit(args)
    A = orb.presentation.algebra
    res = {"automorphism": spec.to_json(B), "class": classify(spec), "period": list(orb.g.period()),
           "algebra": algebra_to_json(A), "dim": A.dim,
           "selfinjective": is_selfinjective(A), "symmetric": is_symmetric(A, seed=cfg.seed)}
    checks = {"selfinjective": res["selfinjective"]}
    if args.match:
        m = match_presentations(A, load_algebra(args.match, field=A.field))
        res["match"] = m.to_json(A.field)
        checks["matches target presentation"] = m.ok
    return Report("orbit", cfg, res, checks, quiver_to_dot(A.quiver, A.relations, "A"))


def cmd_trivext(args, cfg):
    F = parse_field(args.field)
    B = load_algebra(args.base, field=F)
    T = gabriel_presentation(trivial_extension(B)).algebra
    res = {"algebra": algebra_to_json(T), "dim": T.dim, "symmetric": is_symmetric(T, seed=cfg.seed)}
    checks = {"symmetric": res["symmetric"]}
    if args.match:
        m = match_presentations(T, load_algebra(args.match, field=F))
        res["match"] = m.to_json(F)
        checks["matches target presentation"] = m.ok
    return Report("trivext", cfg, res, checks, quiver_to_dot(T.quiver, T.relations, "TB"))


def cmd_check45(args, cfg):
    A = load_algebra(args.algebra, field=parse_field(args.field))
    family = [_rep_over(p, A) for p in args.family or []]
    if args.ideal == "rad":
        I = radical_ideal(A)
    elif args.ideal:
        data = json.loads(Path(args.ideal).read_text())
        gens = [A.element_sparse(PathElement.build(A.quiver, [(t["coef"], t["path"]) for t in g], A.field))
                for g in data["generators"]]
        I = generated_ideal(A, gens)
    else:
        I = annihilator(A, family, "I")
    th = theorem45_check(A, I)
    res = {"ideal_dim": I.dim, "r(I) = eI": th["r(I) = eI"], "acyclic": th["acyclic"],
           "quotient": algebra_to_json(th["presentation"]), "deforming": is_deforming(A, I)}
    checks = {"r(I) = eI": th["r(I) = eI"], "Q_{A/I} acyclic": th["acyclic"]}
    if family:
        ids = ideal_identities(A, family, I)
        res["identities"] = ids.to_json()
        checks.update(ids.checks)
    if args.match:
        m = match_presentations(th["presentation"], load_algebra(args.match, field=A.field))
        res["match"] = m.to_json(A.field)
        checks["A/I matches target"] = m.ok
    return Report("check45", cfg, res, checks)


def _rep_over(path, A):
    d = json.loads(Path(path).read_text())
    return load_representation(d, Path(path).parent, algebra=A)


def cmd_tau(args, cfg):
    M = load_representation(args.rep)
    N = tau_inverse(M) if args.inverse else tau(M)
    return Report("tau", cfg, {"input_dims": list(M.dims), "dims": list(N.dims), "module": N.to_json()})


def cmd_ext1(args, cfg):
    X = load_representation(args.rep)
    Y = _rep_over(args.rep2, X.algebra)
    e = ext1_dim(X, Y)
    res = {"ext1": e}
    checks = {}
    if R.is_indecomposable(X) and not is_projective_indecomposable(X):
        res["D Hom-bar(Y, tau X)"] = stable_hom_dims(Y, tau(X))[1]
        checks["Ext1 = D Hom-bar(Y, tau X)"] = e == res["D Hom-bar(Y, tau X)"]
    if R.is_indecomposable(Y) and not is_injective_indecomposable(Y):
        res["D Hom-underline(tau^- Y, X)"] = stable_hom_dims(tau_inverse(Y), X)[0]
        checks["Ext1 = D Hom-underline(tau^- Y, X)"] = e == res["D Hom-underline(tau^- Y, X)"]
    return Report("ext1", cfg, res, checks)


def cmd_knit(args, cfg):
    M = load_representation(args.rep)
    T = fragment_from(M, max(args.depth - 1, 0)) if args.orbit else knit_tube(order_mouth([M]), args.depth)
    res = {"rank": T.rank, "depth": T.depth, "s": T.s, "p": T.p,
           "layers": [[list(N.dims) for N in layer] for layer in T.layers],
           "projectives": [list(P.dims) for P in T.projectives], "anomalies": [list(map(str, a)) for a in T.anomalies]}
    return Report("knit", cfg, res, {"no anomalies": not T.anomalies}, T.to_dot())


def cmd_verify(args, cfg):
    A = load_algebra(args.algebra, field=parse_field(args.field))
    frags = [fragment_from(_rep_over(p, A), args.depth) for p in args.mouth]
    S, T = A.vertex_index(args.S), A.vertex_index(args.T)
    fam = check_ms(frags, S, T, [Path(p).stem for p in args.mouth])
    res = fam.to_json()
    verdicts = {}
    for p, fr in zip(args.mouth, frags):
        if fr.projectives:
            verdicts[Path(p).stem] = refute_by_factorization(fr.projectives[0], "P").to_json()
        else:
            verdicts[Path(p).stem] = standardness_via_mouth(fr).to_json()
    res["standardness"] = verdicts
    checks = {"MS1": fam.ms1, "MS2": fam.ms2, "MS3": fam.ms3,
              "s+p <= r-1": all(s["bound"] for s in fam.stats)}
    return Report("verify", cfg, res, checks)


def cmd_example(args, cfg):
    rep = example_report(args.name, parse_field(args.field))
    checks = rep.pop("checks")
    return Report(f"example {args.name}", cfg, rep, checks)


def cmd_rep(args, cfg):
    M = load_representation(args.rep)
    if args.action == "check":
        ok = M.check_relations()
        return Report("rep check", cfg, {"dims": list(M.dims)}, {"relations hold": ok})
    if args.action == "hom":
        N = _rep_over(args.rep2, M.algebra)
        H = R.hom(M, N)
        return Report("rep hom", cfg, {"dim": H.dim, "basis": [[m.tolist() for m in f] for f in H.basis]})
    parts = R.decompose(M, seed=cfg.seed)
    return Report("rep decompose", cfg, {"summands": [P.to_json() for P in parts],
                                         "dims": [list(P.dims) for P in parts]})


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text", "dot"), default="json")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", help="write the report here instead of stdout")
    p = argparse.ArgumentParser(prog="quivkit", description="Exact computations with bound quiver algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    def field_arg(sp):
        sp.add_argument("--field", default="Q", help="Q or GF(p)")

    s = add("canonical", help="canonical algebra and tube mouths")
    s.add_argument("--weights", required=True)
    s.add_argument("--params")
    s.add_argument("--verify-tubes")
    field_arg(s)
    s.set_defaults(func=cmd_canonical)

    s = add("extend", help="branch (co)extension from a JSON spec")
    s.add_argument("--spec", required=True)
    s.set_defaults(func=cmd_extend)

    s = add("orbit", help="orbit algebra of the repetitive category")
    s.add_argument("--base", required=True)
    s.add_argument("--auto", default="nu")
    s.add_argument("--power", type=int, default=1)
    s.add_argument("--match")
    field_arg(s)
    s.set_defaults(func=cmd_orbit)

    s = add("trivext", help="trivial extension")
    s.add_argument("--base", required=True)
    s.add_argument("--match")
    field_arg(s)
    s.set_defaults(func=cmd_trivext)

    s = add("check45", help="annihilator ideal conditions")
    s.add_argument("--algebra", required=True)
    s.add_argument("--ideal", help="JSON file {\"generators\": [[{\"coef\", \"path\"}]]}, or \"rad\"")
    s.add_argument("--family", nargs="*", help="representation files")
    s.add_argument("--match")
    field_arg(s)
    s.set_defaults(func=cmd_check45)

    s = add("tau", help="Auslander-Reiten translate")
    s.add_argument("--rep", required=True)
    s.add_argument("--inverse", action="store_true")
    s.set_defaults(func=cmd_tau)

    s = add("ext1", help="dim Ext^1(X, Y)")
    s.add_argument("--rep", required=True)
    s.add_argument("--rep2", required=True)
    s.set_defaults(func=cmd_ext1)

    s = add("knit", help="knit a tube from a mouth module")
    s.add_argument("--rep", required=True)
    s.add_argument("--depth", type=int, default=4)
    s.add_argument("--orbit", action="store_true", help="take the whole tau-orbit of the module as mouth")
    s.set_defaults(func=cmd_knit)

    s = add("verify", help="MS1-MS3 and standardness for a family of tubes")
    s.add_argument("--algebra", required=True)
    s.add_argument("--mouth", nargs="+", required=True, help="one mouth module file per tube")
    s.add_argument("--S", required=True)
    s.add_argument("--T", required=True)
    s.add_argument("--depth", type=int, default=3, help="layers beyond the rank")
    field_arg(s)
    s.set_defaults(func=cmd_verify)

    s = add("example", help="run a worked example end to end")
    s.add_argument("name", choices=EXAMPLES)
    field_arg(s)
    s.set_defaults(func=cmd_example)

    s = add("rep", help="representation utilities")
    s.add_argument("action", choices=("check", "hom", "decompose"))
    s.add_argument("--rep", required=True)
    s.add_argument("--rep2")
    s.set_defaults(func=cmd_rep)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(field=getattr(args, "field", "Q"), seed=args.seed,
                    depth=getattr(args, "depth", 4) or 1)
    try:
        report = args.func(args, cfg)
        text = render(report, args.format)
    except (QuivkitError, ValueError, KeyError, OSError) as exc:
        err = {"command": args.command, "error": type(exc).__name__, "message": str(exc)}
        print(json.dumps(err, indent=2), file=sys.stderr)
        return 2
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
