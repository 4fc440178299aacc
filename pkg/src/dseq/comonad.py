"""Tower-of-towers structure: extraction, duplication, and the CD battery.

omega lifts a base map to its full derivative tower by iterating the joint
derivative.  counit extracts the order-0 term; comult views a tower as the
triangle of all its shifts, sharing terms with the source rather than
copying them.  The three comonad laws hold for arbitrary towers because
both sides of each law reduce to index arithmetic over one shared family.
"""

from .axioms import DSeq
from .errors import AxiomViolation, InsufficientOrder
from .maps import canonical_map, compose, proj
from .reports import LawReport, bool_entry, map_entry, seq_entry
from .sequences import PreDSeq, seq_identity, seq_proj, seq_zero


def omega(f, order):
    """Full derivative tower of a base map, truncated at `order`."""
    terms = [f]
    for _ in range(order):
        terms.append(terms[-1].differential())
    return PreDSeq(f.dom, f.cod, tuple(terms))


def counit(seq):
    """Order-0 term of a tower."""
    return seq.terms[0]


class DeltaTable:
    """Triangle of shifted towers: entry(n, m) is term n + m of the source.

    row(n) is the n-fold shift as a tower of residual order N - n.  Rows and
    entries are views onto the source's term tuple, never copies.
    """

    def __init__(self, source):
        self.source = source

    @property
    def order(self):
        return self.source.order

    def entry(self, n, m):
        if n + m > self.order:
            raise InsufficientOrder(
                f"entry ({n}, {m}) outside triangle of order {self.order}")
        return self.source.terms[n + m]

    def row(self, n):
        if n > self.order:
            raise InsufficientOrder(
                f"row {n} outside triangle of order {self.order}")
        return PreDSeq(self.source.dom << n, self.source.cod,
                       self.source.terms[n:])


def comult(seq):
    return DeltaTable(seq)


def check_comonad_laws(seq, tol=None):
    """The three laws, valid for arbitrary towers (no axioms assumed).

    comonad.counit-l:  row 0 of the triangle is the tower itself.
    comonad.counit-r:  taking the order-0 term of each row rebuilds the tower.
    comonad.coassoc:   duplicating each row agrees with shifting the triangle.
    """
    report = LawReport("comonad")
    table = comult(seq)
    report.add(seq_entry("comonad.counit-l", 0, 0, table.row(0), seq, tol))
    for n in range(seq.order + 1):
        report.add(map_entry("comonad.counit-r", n, 0, n,
                             counit(table.row(n)), seq.terms[n], tol))
    for n in range(seq.order + 1):
        for m in range(seq.order - n + 1):
            lhs = comult(table.row(n)).row(m)
            rhs = table.row(n + m)
            report.add(seq_entry("comonad.coassoc", n, m, lhs, rhs, tol))
    return report.sort()


def check_coalgebra(f, order, tol=None):
    """omega is a coalgebra structure on its base map.

    coalgebra.counit: extracting order 0 from omega(f) gives back f.
    coalgebra.square: re-lifting term n of omega(f) at residual order
    reproduces row n of the triangle, term by term.
    """
    report = LawReport("coalgebra")
    tower = omega(f, order)
    report.add(map_entry("coalgebra.counit", 0, 0, 0, counit(tower), f, tol))
    table = comult(tower)
    for n in range(order + 1):
        relift = omega(tower.terms[n], order - n)
        row = table.row(n)
        for m in range(order - n + 1):
            report.add(map_entry("coalgebra.square", n, m, n + m,
                                 relift.terms[m], row.terms[m], tol))
    return report.sort()


def _require_stamped(fixtures):
    out = []
    for fx in fixtures:
        group = []
        for item in (fx if isinstance(fx, tuple) else (fx,)):
            if isinstance(item, DSeq):
                if item.order < 3:
                    raise InsufficientOrder(
                        "CD battery needs stamped towers of order >= 3")
                group.append(item.seq)
            else:
                raise AxiomViolation("CD battery takes stamped towers")
        out.append(tuple(group))
    return out


def check_cd_axioms(fixtures, tol=None):
    """Differential-combinator axioms at the tower level.

    Fixtures are stamped towers (singletons) or stamped pairs; pairs with
    equal signatures feed the additive and pairing axioms, pairs with
    composable signatures feed the chain rule.  The identifiers follow the
    usual numbering:

    CD.1 shift is additive          CD.5 chain rule (two routes)
    CD.2 shift is linear in the     CD.6 second shift restricted to
         direction argument              (a,0,0,b) is the first shift
    CD.3 shift of identities and    CD.7 second shift is symmetric in
         projections                     the two middle blocks
    CD.4 shift respects pairing
    plus CD.4-implied, the meta check that CD.4 never fails while CD.3
    and CD.5 pass.
    """
    report = LawReport("cd")
    groups = _require_stamped(fixtures)

    def ident_scaled(kind, dim, base, order):
        # tower-level structural map: identity tower scaled by the block map
        k = canonical_map(kind, dim, base)
        return seq_identity(k.dom, order, base).rmul(k)

    for idx, group in enumerate(groups):
        if len(group) == 1:
            f, = group
            n_ord = f.order
            base = f.base
            a = f.dom

            zero = seq_zero(a, f.cod, n_ord, base)
            report.add(seq_entry("CD.1", idx, 0, (f + f).differential(),
                                 f.differential() + f.differential(), tol))
            report.add(seq_entry("CD.1", idx, 1, zero.differential(),
                                 seq_zero(2 * a, f.cod, n_ord - 1, base), tol))

            df = f.differential()
            report.add(seq_entry(
                "CD.2", idx, 0,
                ident_scaled("sumv", a, base, n_ord).compose(df),
                ident_scaled("sumproj0", a, base, n_ord).compose(df)
                + ident_scaled("sumproj1", a, base, n_ord).compose(df), tol))
            report.add(seq_entry(
                "CD.2", idx, 1,
                ident_scaled("zpair", a, base, n_ord).compose(df),
                seq_zero(a, f.cod, n_ord, base), tol))

            ident = seq_identity(a, n_ord, base)
            report.add(seq_entry(
                "CD.3", idx, 0, ident.differential(),
                seq_identity(2 * a, n_ord, base).rmul(proj(a, a, 1, base)), tol))
            for j in (0, 1):
                pj = seq_proj(a, a, j, n_ord, base)
                back = compose(proj(2 * a, 2 * a, 1, base), proj(a, a, j, base))
                report.add(seq_entry(
                    "CD.3", idx, 1 + j, pj.differential(),
                    seq_identity(4 * a, n_ord, base).rmul(back), tol))

            report.add(seq_entry("CD.4", idx, 0, f.pair(f).differential(),
                                 f.differential().pair(f.differential()), tol))

            d2 = f.differential().differential()
            report.add(seq_entry(
                "CD.6", idx, 0,
                ident_scaled("lift", a, base, n_ord).compose(d2),
                f.differential().truncate(n_ord - 2), tol))
            report.add(seq_entry(
                "CD.7", idx, 0,
                ident_scaled("flip", a, base, n_ord).compose(d2), d2, tol))
            continue

        f, g = group
        if f.dom == g.dom and f.cod == g.cod:
            report.add(seq_entry("CD.1", idx, 0, (f + g).differential(),
                                 f.differential() + g.differential(), tol))
            report.add(seq_entry("CD.4", idx, 0, f.pair(g).differential(),
                                 f.differential().pair(g.differential()), tol))
        if f.cod == g.dom:
            report.add(seq_entry("CD.5", idx, 0, f.compose(g).differential(),
                                 f.tangent().compose(g.differential()), tol))
            explicit = seq_proj(f.dom, f.dom, 0, f.order, f.base).compose(f) \
                .pair(f.differential()) \
                .compose(g.differential())
            report.add(seq_entry("CD.5", idx, 1, f.compose(g).differential(),
                                 explicit, tol))

    cd3_ok = cd4_ok = cd5_ok = True
    for e in report.entries:
        if e.axiom == "CD.3":
            cd3_ok = cd3_ok and e.passed
        elif e.axiom == "CD.4":
            cd4_ok = cd4_ok and e.passed
        elif e.axiom == "CD.5":
            cd5_ok = cd5_ok and e.passed
    report.add(bool_entry("CD.4-implied", 0, 0,
                          not (cd3_ok and cd5_ok) or cd4_ok))
    return report.sort()
