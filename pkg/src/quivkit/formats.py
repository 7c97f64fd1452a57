"""JSON file formats for algebras, representations, extension specs and automorphisms.

An algebra reference is a path to an algebra file, an inline algebra object,
``{"canonical": {"weights": [...], "params": [...]}}`` or
``{"fixture": name}``.  Relative paths resolve against the referring file.
"""

from __future__ import annotations

import json
from pathlib import Path

from . import rep as R
from .algebra import algebra_from_json
from .canonical import CanonicalSpec, canonical_algebra, mouth_module_E, mouth_modules
from .errors import BadField, BadSpec
from .extensions import Branch, BranchExtensionSpec
from .field import GF, QQ, field_from_json
from .selfinjective import AutomorphismSpec, nakayama_spec


def parse_field(text) -> object:
    """``Q``, ``GF(p)``, ``GF:p`` or a JSON field tag."""
    if text is None or isinstance(text, dict):
        return field_from_json(text)
    t = str(text).strip().upper().replace(" ", "")
    if t in ("Q", "QQ"):
        return QQ
    for pre in ("GF(", "GF:", "GF"):
        if t.startswith(pre):
            num = t[len(pre):].rstrip(")")
            if num.isdigit():
                return GF(int(num))
    raise BadField(f"unknown field {text!r}")


def read_json(path) -> dict:
    return json.loads(Path(path).read_text())


def load_algebra(ref, base: Path | None = None, field=None):
    base = base or Path.cwd()
    if isinstance(ref, (str, Path)):
        p = Path(ref)
        p = p if p.is_absolute() else base / p
        return load_algebra(read_json(p), p.parent, field)
    if "canonical" in ref:
        c = ref["canonical"]
        F = field or parse_field(ref.get("field"))
        return canonical_algebra(CanonicalSpec.make(c["weights"], c.get("params")), F)
    if "fixture" in ref:
        from .examples import load_fixture

        return load_fixture(ref["fixture"], field or QQ)
    if field is not None and "field" not in ref:
        ref = dict(ref, field=field.tag())
    return algebra_from_json(ref)


def load_representation(ref, base: Path | None = None, algebra=None):
    """A representation file: ``{"algebra": ref, "dims": {...}, "maps": {...}}``.

    ``{"algebra": ref, "mouth": t, "index": k}`` picks a canonical mouth module.
    """
    base = base or Path.cwd()
    if isinstance(ref, (str, Path)):
        p = Path(ref)
        p = p if p.is_absolute() else base / p
        return load_representation(read_json(p), p.parent, algebra)
    A = algebra if algebra is not None else load_algebra(ref["algebra"], base)
    if "mouth" in ref:
        if ref.get("index") is None:
            return mouth_module_E(A, ref["mouth"])
        return mouth_modules(A, ref["mouth"])[int(ref["index"])]
    if "simple" in ref:
        return R.simple(A, str(ref["simple"]))
    if "projective" in ref:
        return R.projective(A, str(ref["projective"]))
    if "injective" in ref:
        return R.injective(A, str(ref["injective"]))
    return R.representation_from_json(A, ref)


def load_extension_spec(ref, base: Path | None = None) -> BranchExtensionSpec:
    """``{"base": algebra ref, "direction": ..., "prefix": bool, "attachments": [...]}``.

    Each attachment is ``{"module": rep ref without "algebra", "branch":
    {"vertices", "arrows": [[name, from, to]], "root"}, "arrow": name}``.
    """
    base = base or Path.cwd()
    if isinstance(ref, (str, Path)):
        p = Path(ref)
        p = p if p.is_absolute() else base / p
        return load_extension_spec(read_json(p), p.parent)
    if "base" not in ref or "attachments" not in ref:
        raise BadSpec("extension spec needs 'base' and 'attachments'")
    A = load_algebra(ref["base"], base)
    atts = []
    for a in ref["attachments"]:
        M = load_representation(dict(a["module"], algebra=None), base, algebra=A)
        b = a["branch"]
        br = Branch(b["vertices"], [tuple(x) for x in b.get("arrows", [])], b.get("root"))
        atts.append((M, br, a.get("arrow")))
    return BranchExtensionSpec(A, atts, ref.get("direction", "coextension"), bool(ref.get("prefix", True)))


def load_automorphism(ref, B, base: Path | None = None) -> AutomorphismSpec:
    """``{"name": ..., "vertex_map": {x: [shift, y]}, "scalars": {...}}``; ``"nu"`` for Nakayama."""
    if ref in (None, "nu"):
        return nakayama_spec(B)
    base = base or Path.cwd()
    if isinstance(ref, (str, Path)):
        p = Path(ref)
        p = p if p.is_absolute() else base / p
        return load_automorphism(read_json(p), B, p.parent)
    mapping = {x: (int(v[0]), str(v[1])) for x, v in ref["vertex_map"].items()}
    return AutomorphismSpec.from_labels(B, mapping, scalars=ref.get("scalars"), name=ref.get("name", "g"))
