"""Worked instances: a branch coextension of C((2,2,3)) and its orbit algebras.

Fixture presentations live in ``quivkit/data``; builders here construct the
same algebras from the library operations so that the two can be compared.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from importlib import resources

from . import rep as R
from .algebra import build_bound_quiver_algebra
from .canonical import CanonicalSpec, canonical_algebra, mouth_module_E
from .extensions import Branch, BranchExtensionSpec, branch_extension
from .field import QQ
from .quiver import Arrow, PathElement, Quiver
from .selfinjective import (
    AutomorphismPower,
    AutomorphismSpec,
    OrbitAlgebra,
    RepetitiveAlgebra,
    RepetitiveAutomorphism,
    hat_module_from,
    nakayama_spec,
    push_down,
)

FIXTURES = ("ex71_B", "ex71_A", "ex71_A_computed", "ex72_A", "ex72_A_computed", "ex72_Bstar", "ex72_Bstar_computed",
            "ex73_A", "ex73_A_computed")

# canonical labels -> the numbering used for the coextension
C_VERTICES = {"0": "5", "w": "10", "1,1": "6", "2,1": "7", "3,1": "8", "3,2": "9"}
C_ARROWS = {"a1_1": "alpha1", "a1_2": "alpha2", "a2_1": "beta1", "a2_2": "beta2",
            "a3_1": "gamma1", "a3_2": "gamma2", "a3_3": "gamma3"}


def fixture_json(name: str) -> dict:
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}")
    return json.loads(resources.files("quivkit.data").joinpath(f"{name}.json").read_text())


def load_fixture(name: str, field=QQ):
    d = fixture_json(name)
    q = Quiver(d["vertices"], [Arrow(a["name"], a["from"], a["to"]) for a in d["arrows"]])
    rels = [PathElement.build(q, [(t["coef"], t["path"]) for t in r], field) for r in d["relations"]]
    return build_bound_quiver_algebra(q, rels, field)


def canonical_223(field=QQ):
    return canonical_algebra(CanonicalSpec.make((2, 2, 3), ("inf", 0, 1)), field)


def coextension_B(field=QQ):
    """[E(inf), L1, E(0), L2, E(1), L3] C with the numbering 1..10."""
    C = canonical_223(field)
    spec = BranchExtensionSpec(
        C,
        [
            (mouth_module_E(C, "inf"), Branch(["1"]), "sigma1"),
            (mouth_module_E(C, 0), Branch(["2"]), "xi1"),
            (mouth_module_E(C, 1), Branch(["4", "3"], [("eta1", "4", "3")], root="4"), "eta2"),
        ],
        direction="coextension",
        prefix=False,
    )
    B, steps = branch_extension(spec)
    B = B.relabel(C_VERTICES, C_ARROWS)
    B.branch_metadata = steps
    return B, C


def phi_spec(B) -> AutomorphismSpec:
    """Level data of the square root of the Nakayama shift swapping 1..5 and 6..10."""
    mp = {}
    for l in range(1, 11):
        mp[str(l)] = (0, str(l + 5)) if l <= 5 else (1, str(l - 5))
    return AutomorphismSpec.from_labels(B, mp, name="phi")


@dataclass
class OrbitInstance:
    name: str
    B: object
    Bhat: RepetitiveAlgebra
    g: object
    orbit: OrbitAlgebra
    extra: dict = dc_field(default_factory=dict)

    @property
    def A(self):
        """The orbit algebra in its Gabriel presentation."""
        return self.orbit.presentation.algebra


def example_71(field=QQ) -> OrbitInstance:
    B, C = coextension_B(field)
    Bh = RepetitiveAlgebra(B)
    phi = RepetitiveAutomorphism(Bh, phi_spec(B), window=(-1, 0, 1))
    return OrbitInstance("7.1", B, Bh, phi, OrbitAlgebra(phi), {"C": C})


def example_72(field=QQ) -> OrbitInstance:
    B, C = coextension_B(field)
    Bh = RepetitiveAlgebra(B)
    phi = RepetitiveAutomorphism(Bh, phi_spec(B), window=(-1, 0, 1))
    g = AutomorphismPower(phi, 3)
    return OrbitInstance("7.2", B, Bh, g, OrbitAlgebra(g), {"C": C, "phi": phi})


def example_73(field=QQ) -> OrbitInstance:
    C = canonical_223(field)
    Bh = RepetitiveAlgebra(C)
    nu = RepetitiveAutomorphism(Bh, nakayama_spec(C))
    return OrbitInstance("7.3", C, Bh, nu, OrbitAlgebra(nu), {"C": C})


def phi_squared_is_nu(phi: RepetitiveAutomorphism) -> bool:
    """phi^2 agrees with the Nakayama shift on every object of level 0."""
    return all(phi.obj(phi.obj((0, x))) == (1, x) for x in range(phi.n))


def canonical_module_in(M, B):
    """A C-module as a module over an algebra built on the renumbered canonical quiver."""
    return R.transport(M, B, C_VERTICES, C_ARROWS)


def push_to_orbit(inst: OrbitInstance, M, level: int = 0):
    """Push a module over C or B, placed at ``level``, down to the orbit algebra."""
    C = inst.extra.get("C")
    if M.algebra is not inst.B and M.algebra is C:
        M = canonical_module_in(M, inst.B)
    return push_down(hat_module_from(M, inst.Bhat, level), inst.orbit)


def orbit_vertex(inst: OrbitInstance, label: str, power: int = 0, g=None) -> int:
    """Index in the orbit algebra of the object g^power((0, label))."""
    g = g or inst.g
    o = (0, inst.B.vertex_index(label))
    for _ in range(power):
        o = g.obj(o)
    _, f = inst.orbit.reduce(o)
    return inst.orbit.dindex[f]


def coray_family(inst: OrbitInstance, tubes=("inf", 0, 1, 2, 5), depth: int = 2):
    """B-modules from the canonical tubes (first ``depth`` layers) and the new injectives, as A-modules."""
    from .ar import knit_tube
    from .canonical import mouth_modules

    B, C = inst.B, inst.extra["C"]
    mods = []
    for t in tubes:
        mods += [canonical_module_in(M, B) for M in knit_tube(mouth_modules(C, t), depth).stable_modules()]
    new = [v for v in B.vertices if v not in set(C_VERTICES.values())]
    mods += [R.injective(B, v) for v in new]
    return [push_to_orbit(inst, M) for M in mods]
