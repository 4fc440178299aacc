"""Axiom checkers for derivative towers.

Two equivalent formulations are implemented.  The termwise ("primed") form
checks each tower entry against structural block maps pushed through k
doublings; the tower-level ("unprimed") form states the same laws as
equalities of residual towers under left scalar actions.  The primed
instance at (n + k, k) coincides with the unprimed instance at (n, k), so
the two checkers must agree in aggregate on every input.

Axiom identifiers:
    DS.1': zeroed directions kill the term         (vanishing)
    DS.2': terms are additive in each direction    (additivity)
    DS.3': embedding (a,0,0,b) recovers the previous term   (lift)
    DS.4': swapping the two middle blocks fixes the term    (symmetry)
with DS.1 .. DS.4 the tower-level counterparts.
"""

from dataclasses import dataclass

from .errors import AxiomViolation
from .maps import canonical_map, compose, pfunctor_apply, proj, zero_map
from .reports import LawReport, map_entry, seq_entry
from .sequences import PreDSeq, seq_identity, seq_zero


def _canon(kind, seq, n, k):
    """Structural map of `kind` built at block size 2^(n-k) * dom, then
    pushed through k doublings."""
    block = seq.dom << (n - k)
    return pfunctor_apply(canonical_map(kind, block, seq.base), k)


def check_ds_primed(seq, tol=None):
    """Termwise axiom battery over every in-budget instance (n, k <= n)."""
    report = LawReport("ds_primed")
    order = seq.order
    for n in range(order):
        f_next = seq.terms[n + 1]
        for k in range(n + 1):
            lhs = compose(_canon("zpair", seq, n, k), f_next)
            zero = zero_map(seq.dom << n, seq.cod, seq.base)
            report.add(map_entry("DS.1'", n, k, n + 1, lhs, zero, tol))

            lhs = compose(_canon("sumv", seq, n, k), f_next)
            rhs = (compose(_canon("sumproj0", seq, n, k), f_next)
                   + compose(_canon("sumproj1", seq, n, k), f_next))
            report.add(map_entry("DS.2'", n, k, n + 1, lhs, rhs, tol))
    for n in range(order - 1):
        f_next2 = seq.terms[n + 2]
        for k in range(n + 1):
            lhs = compose(_canon("lift", seq, n, k), f_next2)
            report.add(map_entry("DS.3'", n, k, n + 2, lhs, seq.terms[n + 1], tol))

            lhs = compose(_canon("flip", seq, n, k), f_next2)
            report.add(map_entry("DS.4'", n, k, n + 2, lhs, f_next2, tol))
    return report.sort()


def check_ds_unprimed(seq, tol=None):
    """Tower-level battery: the same laws as equalities of shifted towers."""
    report = LawReport("ds_unprimed")
    order = seq.order
    for n in range(order):
        shifted = seq
        for _ in range(n + 1):
            shifted = shifted.differential()
        zp = canonical_map("zpair", seq.dom << n, seq.base)
        lhs = shifted.lmul(zp)
        rhs = seq_zero(seq.dom << n, seq.cod, lhs.order, seq.base)
        report.add(seq_entry("DS.1", n, 0, lhs, rhs, tol))

        sv = canonical_map("sumv", seq.dom << n, seq.base)
        p0 = canonical_map("sumproj0", seq.dom << n, seq.base)
        p1 = canonical_map("sumproj1", seq.dom << n, seq.base)
        report.add(seq_entry("DS.2", n, 0, shifted.lmul(sv),
                             shifted.lmul(p0) + shifted.lmul(p1), tol))
    for n in range(order - 1):
        once = seq
        for _ in range(n + 1):
            once = once.differential()
        twice = once.differential()
        lf = canonical_map("lift", seq.dom << n, seq.base)
        lhs = twice.lmul(lf)
        report.add(seq_entry("DS.3", n, 0, lhs, once.truncate(lhs.order), tol))

        fl = canonical_map("flip", seq.dom << n, seq.base)
        report.add(seq_entry("DS.4", n, 0, twice.lmul(fl), twice, tol))
    return report.sort()


def is_linear(seq, tol=None):
    """True iff every term factors as the all-ones block selection followed
    by the order-0 term."""
    ident = seq_identity(seq.dom, seq.order, seq.base)
    for n, f_n in enumerate(seq.terms):
        if not compose(ident.terms[n], seq.terms[0]).equal(f_n, tol):
            return False
    return True


def t2(seq):
    """Second-order tangent carrier on the triple domain (a, b, c): the map
    at a, plus the directional terms in b and in c.  Costs one order."""
    d = seq.dom
    first = seq.lmul(proj(d, 2 * d, 0, seq.base))
    diff = seq.differential()
    second = diff.lmul(canonical_map("sumproj0", d, seq.base))
    third = diff.lmul(canonical_map("sumproj1", d, seq.base))
    return first.pair(second.pair(third))


@dataclass(frozen=True)
class DSeq:
    """A tower stamped by a successful termwise axiom run at its full depth."""

    seq: PreDSeq
    stamp: tuple  # ((axiom, n, k), ...) instances that were verified

    @classmethod
    def verify(cls, seq, tol=None):
        report = check_ds_primed(seq, tol)
        if not report.passed:
            bad = report.failing()[0]
            raise AxiomViolation(
                f"tower fails {bad.axiom} at (n={bad.n}, k={bad.k}); "
                "not a valid derivative tower")
        return cls(seq, tuple((e.axiom, e.n, e.k) for e in report.entries))

    @property
    def order(self):
        return self.seq.order
