"""Acceptance suite: one test per criterion, plus clearly named supplementary checks.

Every comparison is exact (dimensions, isomorphism classes, subspace
equality).  The only tolerances are the wall-clock budgets below.
"""

import json
import os
import subprocess
import sys
import time

import pytest

from quivkit import QQ, CanonicalSpec, canonical_algebra, rep as R
from quivkit.ar import ext1_dim, stable_hom_dims, tau, tau_inverse
from quivkit.canonical import arm_module_F, mouth_module_E, verify_canonical_family
from quivkit.errors import ProjectiveInput
from quivkit.field import GF
from randmod import random_module

CANONICAL_BUDGET_S = 10.0
EXAMPLE_71_BUDGET_S = 120.0
SAMPLE = ("inf", 0, 1, 2, 5)
AR_SEEDS_PER_ALGEBRA = 15
KRONECKER_PARAMS = (0, 1, -1, 2, QQ(1) / 3)


def canonical(weights, field=QQ):
    return canonical_algebra(CanonicalSpec.make(weights, ("inf", 0, 1)), field)


@pytest.fixture(scope="module")
def report71():
    from quivkit.pipelines import report_71

    t0 = time.perf_counter()
    rep = report_71(QQ)
    return rep, time.perf_counter() - t0


@pytest.fixture(scope="module")
def report72():
    from quivkit.pipelines import report_72

    return report_72(QQ)


@pytest.fixture(scope="module")
def report73():
    from quivkit.pipelines import report_73

    return report_73(QQ)


def failed(checks, names=None):
    names = checks if names is None else names
    return [n for n in names if not checks[n]]


# ---------------------------------------------------------------------------
# 1. canonical tube data


def test_criterion_1_canonical_tubes():
    t0 = time.perf_counter()
    C = canonical((2, 2, 3))
    rep = verify_canonical_family(C, SAMPLE)
    elapsed = time.perf_counter() - t0
    assert rep.ok, rep.failures
    assert [rep.periods[C.canonical_spec.params[0]], rep.periods[0], rep.periods[1], rep.periods[2],
            rep.periods[5]] == [2, 2, 3, 1, 1]
    assert elapsed < CANONICAL_BUDGET_S, f"{elapsed:.2f} s"


# ---------------------------------------------------------------------------
# 2. Ext table between the simples of a canonical algebra


def arm_simples(C, i):
    """S_(i,1), ..., S_(i,p-1) ordered so that tau S_(i,j+1) = S_(i,j) and tau S_(i,1) = F_i."""
    p = C.canonical_spec.weights[i - 1]
    simples = [R.simple(C, f"{i},{j}") for j in range(1, p)]
    F = arm_module_F(C, i)
    assert R.is_isomorphic(tau(simples[0]), F)
    assert R.is_isomorphic(tau(F), simples[-1])
    for j in range(1, p - 1):
        assert R.is_isomorphic(tau(simples[j]), simples[j - 1])
    return simples


def ext_table_violations(C):
    S, T = R.simple(C, "0"), R.simple(C, "w")
    bad = []

    def want(name, got, expected):
        if got != expected:
            bad.append(f"{name}: {got} != {expected}")

    arms = [arm_simples(C, i) for i in range(1, 4)]
    tube_simples = [M for arm in arms for M in arm]
    for X in tube_simples:
        for Y in tube_simples:
            want("Ext(S', S'') vs tau", ext1_dim(X, Y), 1 if R.is_isomorphic(tau(X), Y) else 0)
    for i, arm in enumerate(arms, start=1):
        p = len(arm) + 1
        want(f"Ext(T, S({i},{p - 1}))", ext1_dim(T, arm[-1]), 1)
        for j in range(1, p - 1):
            want(f"Ext(T, S({i},{j}))", ext1_dim(T, arm[j - 1]), 0)
        want(f"Ext(S({i},1), S)", ext1_dim(arm[0], S), 1)
        for j in range(2, p):
            want(f"Ext(S({i},{j}), S)", ext1_dim(arm[j - 1], S), 0)
        for j in range(1, p):
            want(f"Ext(S({i},{j}), T)", ext1_dim(arm[j - 1], T), 0)
            want(f"Ext(S, S({i},{j}))", ext1_dim(S, arm[j - 1]), 0)
    return bad


def test_criterion_2_ext_table():
    bad = {w: ext_table_violations(canonical(w)) for w in ((2, 2, 3), (3, 3, 3))}
    assert not any(bad.values()), bad


# ---------------------------------------------------------------------------
# 3. AR formula property suite


def _ar_algebras():
    from quivkit.algebra import gabriel_presentation
    from quivkit.examples import load_fixture
    from quivkit.selfinjective import trivial_extension

    C = canonical((2, 2, 3))
    return {
        "C(2,2,3)": C,
        "C(2,2,3)/GF(101)": canonical((2, 2, 3), GF(101)),
        "T(C)": gabriel_presentation(trivial_extension(C)).algebra,
        "B": load_fixture("ex71_B"),
    }


def test_criterion_3_ar_formulas():
    pairs, bad = 0, []
    for name, A in _ar_algebras().items():
        for seed in range(AR_SEEDS_PER_ALGEBRA):
            X, Y = random_module(A, seed), random_module(A, 10_000 + seed)
            e = ext1_dim(X, Y)
            try:
                bar = stable_hom_dims(Y, tau(X))[1]
            except ProjectiveInput:
                bar = 0
            try:
                under = stable_hom_dims(tau_inverse(Y), X)[0]
            except ProjectiveInput:
                under = 0
            if not e == bar == under:
                bad.append((name, seed, e, bar, under))
            for Z in R.decompose(X):
                try:
                    tZ = tau(Z)
                except ProjectiveInput:
                    continue
                if not R.is_isomorphic(tau_inverse(tZ), Z):
                    bad.append((name, seed, "tau^- tau", Z.dims))
            pairs += 1
    assert pairs >= 50
    assert not bad, bad


# ---------------------------------------------------------------------------
# 4. Kronecker sub-case


def test_criterion_4_kronecker():
    K = canonical_algebra(CanonicalSpec.make((1, 1), ("inf", 0)), QQ)
    for lam in KRONECKER_PARAMS:
        Rl = R.Representation(K, [1, 1], [QQ.array([[1]]), QQ.array([[lam]])])
        assert R.is_isomorphic(tau(Rl), Rl), lam

    C = canonical((2, 2, 3))
    spec = C.canonical_spec
    e = ["0", "w"]
    w = C.vertex_index("w")
    restricted = []
    for t in SAMPLE:
        E = mouth_module_E(C, t)
        res = R.restrict(E, e)
        assert res.dims == (1, 1)
        assert R.is_isomorphic(tau(res), res), t
        restricted.append(res)
        i = spec.tube_of(t)
        zero_arms = [k for k in (1, 2, 3) if not E.path_matrix(C.names_to_indices(spec.arm_path(k)), w).any()]
        assert zero_arms == ([i] if i is not None else []), (t, zero_arms)
    for a in range(len(restricted)):
        for b in range(a + 1, len(restricted)):
            assert not R.is_isomorphic(restricted[a], restricted[b])


# ---------------------------------------------------------------------------
# 5. worked example with a square root of the Nakayama shift


@pytest.mark.slow
def test_criterion_5_example_71(report71):
    rep, elapsed = report71
    assert elapsed < EXAMPLE_71_BUDGET_S, f"{elapsed:.1f} s"
    assert rep["B"]["vertices"] == 10
    assert rep["standardness"]["evidence"]["through"] == rep["family"]["S"]
    assert not failed(rep["checks"]), failed(rep["checks"])


@pytest.mark.slow
def test_criterion_5_supplementary_computed_presentation(report71):
    rep, _ = report71
    names = ["B matches stated", "phi^2 = nu", "A matches computed", "A selfinjective",
             "s+p <= r-1", "E(1) endomorphism through S(5)"]
    assert not failed(rep["checks"], names)


def test_criterion_5_supplementary_characteristic_two():
    from quivkit.examples import example_71, load_fixture
    from quivkit.iso import match_presentations
    from quivkit.selfinjective import is_symmetric

    A = example_71(GF(2)).A
    assert is_symmetric(A)
    assert match_presentations(A, load_fixture("ex71_A_computed", GF(2))).status == "isomorphic"


# ---------------------------------------------------------------------------
# 6. trivial extension of the canonical algebra


@pytest.mark.slow
def test_criterion_6_example_73(report73):
    assert not failed(report73["checks"]), failed(report73["checks"])


@pytest.mark.slow
def test_criterion_6_supplementary_computed_presentation(report73):
    names = ["A matches computed", "T(C) matches computed", "A symmetric", "C0 certified",
             "C1 refuted by projective"]
    assert not failed(report73["checks"], names)


# ---------------------------------------------------------------------------
# 7. ideal identities on the cube of the square root


@pytest.mark.slow
def test_criterion_7_ideal_toolkit(report72):
    names = ["r(I) = eI", "l(I) = Ie", "Ie = J", "eI = J'", "eIe = J ∩ J'", "(eIe)^2 = 0", "IeI = 0",
             "Q_{A/I} acyclic", "A/I matches B"]
    assert not failed(report72["checks"], names), failed(report72["checks"], names)


# ---------------------------------------------------------------------------
# 8. saturation conditions and quasi-tube statistics


@pytest.mark.slow
def test_criterion_8_ms_statistics(report71, report72, report73):
    rep71, _ = report71
    fams = [("7.1", rep71["family"]), ("7.3", report73["C0"])]
    fams += [(f"7.2/{k}", f) for k, f in enumerate(report72["families"])]
    bad = []
    for name, fam in fams:
        for flag in ("MS1", "MS2", "MS3"):
            if not fam[flag]:
                bad.append((name, flag, fam["witnesses"].get(flag)))
        for s in fam["stats"]:
            if s["s"] + s["p"] != s["r"] - 1:
                bad.append((name, "MS1 equality", s))
    for d in report73["C1"]:
        if not d["bound"]:
            bad.append(("7.3/C1", d))
    assert not bad, bad
    for rep in (rep71, report72, report73):
        assert rep["checks"]["s+p <= r-1"]


# ---------------------------------------------------------------------------
# 9. determinism


@pytest.mark.slow
def test_criterion_9_determinism(report71, report72, report73):
    here = {"7.1": report71[0], "7.2": report72, "7.3": report73}
    code = ("import json; from quivkit.pipelines import REPORTS; "
            "print(json.dumps({k: f() for k, f in sorted(REPORTS.items())}, sort_keys=True))")
    env = dict(os.environ, PYTHONHASHSEED="12345")
    runs = [subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True).stdout
            for _ in range(2)]
    assert runs[0] == runs[1]
    assert runs[0].strip() == json.dumps(here, sort_keys=True)
