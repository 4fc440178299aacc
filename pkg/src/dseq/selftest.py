"""Seeded end-to-end verification pass.

Runs every law battery plus the axiom checkers, comonad laws, coalgebra
laws, differential-combinator axioms, and chain-rule cross-checks on
deterministic random fixtures.  Each suite draws from its own labeled
stream, so reruns with the same seed and trial count reproduce the same
fixtures and the same report, byte for byte.
"""

from .axioms import DSeq, check_ds_primed, check_ds_unprimed
from .comonad import check_cd_axioms, check_coalgebra, check_comonad_laws, omega
from .faa import chain_equivalence_check
from .fixtures import (CORRUPT_BUILDERS, random_dim, random_poly_map,
                       random_tower, rng_for)
from .laws import (base_category_laws, omega_structure_laws,
                   tower_axiom_closure_laws, tower_identity_laws,
                   tower_naturality_laws)
from .reports import LawReport, bool_entry


def _collapse(report, source, t, order):
    """Fold a nested report into per-family booleans for trial t."""
    for fam in sorted({e.axiom for e in source.entries}):
        ok = all(e.passed for e in source.entries if e.axiom == fam)
        report.add(bool_entry(fam, t, 0, ok, order))


def ds_axiom_suite(rng, trials, order=3, tol=None):
    """Both axiom checkers accept random lifted towers and agree; each
    hand-corrupted fixture is rejected for exactly its target axiom."""
    report = LawReport("ds")
    for t in range(trials):
        a, b = random_dim(rng), random_dim(rng)
        tower = omega(random_poly_map(rng, a, b), order)
        primed = check_ds_primed(tower, tol)
        unprimed = check_ds_unprimed(tower, tol)
        report.add(bool_entry("ds.primed", t, 0, primed.passed, order))
        report.add(bool_entry("ds.unprimed", t, 0, unprimed.passed, order))
        report.add(bool_entry("ds.agree", t, 0,
                              primed.passed == unprimed.passed, order))
    for k, (name, build) in enumerate(sorted(CORRUPT_BUILDERS.items())):
        bad = build()
        failing = {e.axiom for e in check_ds_primed(bad, tol).failing()}
        report.add(bool_entry("ds.rejects", trials, k, failing == {name},
                              bad.order))
    return report.sort()


def comonad_suite(rng, trials, order=3, tol=None):
    report = LawReport("comonad")
    for t in range(trials):
        a, b = random_dim(rng), random_dim(rng)
        tower = random_tower(rng, a, b, order)
        _collapse(report, check_comonad_laws(tower, tol), t, order)
    return report.sort()


def coalgebra_suite(rng, trials, order=3, tol=None):
    report = LawReport("coalgebra")
    for t in range(trials):
        a, b = random_dim(rng), random_dim(rng)
        f = random_poly_map(rng, a, b)
        _collapse(report, check_coalgebra(f, order, tol), t, order)
    return report.sort()


def cd_suite(rng, trials, order=3, tol=None):
    report = LawReport("cd")
    for t in range(trials):
        a, b, c = (random_dim(rng) for _ in range(3))
        su = DSeq.verify(omega(random_poly_map(rng, a, b), order), tol)
        sw = DSeq.verify(omega(random_poly_map(rng, a, b), order), tol)
        sv = DSeq.verify(omega(random_poly_map(rng, b, c), order), tol)
        nested = check_cd_axioms([su, (su, sw), (su, sv)], tol)
        _collapse(report, nested, t, order)
    return report.sort()


def chain_suite(rng, trials, order=3, tol=None):
    report = LawReport("chain")
    for t in range(trials):
        inner = random_poly_map(rng, 1, 1)
        outer = random_poly_map(rng, 1, 1)
        n = 1 + t % order
        _collapse(report, chain_equivalence_check(inner, outer, n, order, tol),
                  t, n)
    return report.sort()


SUITE_BUILDERS = (
    ("base", lambda rng, trials, order, tol:
        base_category_laws(rng, trials, "poly", tol)),
    ("base_elem", lambda rng, trials, order, tol:
        base_category_laws(rng, trials, "elementary", tol)),
    ("pre_d", tower_identity_laws),
    ("ds", ds_axiom_suite),
    ("ds_closure", tower_axiom_closure_laws),
    ("ds_naturality", tower_naturality_laws),
    ("omega", omega_structure_laws),
    ("comonad", comonad_suite),
    ("coalgebra", coalgebra_suite),
    ("cd", cd_suite),
    ("chain", chain_suite),
)


def run_selftest(seed, trials, order=3, tol=None):
    """Run every suite on fresh labeled streams; returns a summary dict."""
    suites = []
    ok = True
    for name, build in SUITE_BUILDERS:
        report = build(rng_for(seed, name), trials, order, tol)
        suites.append({
            "suite": name,
            "pass": report.passed,
            "checked": len(report.entries),
            "failed": len(report.failing()),
        })
        ok = ok and report.passed
    return {"seed": seed, "trials": trials, "pass": ok, "suites": suites}
