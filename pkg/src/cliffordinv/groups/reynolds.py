"""Group averaging of polynomials and exact spaces of invariants.

The action of a matrix ``g`` on a polynomial substitutes each variable by
the corresponding linear form of ``g^T`` (see ``Polynomial.act``).

Averaging over a group equals averaging over the orbit of the polynomial,
because every orbit point is hit by the same number of group elements.  The
orbit is found by BFS under the generators alone, which is far cheaper
than summing over 92160 elements.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import BudgetError
from ..exact import Polynomial, monomials, nullspace
from ..exact.linalg import polys_to_rows, rref
from .closure import GroupClosure

__all__ = [
    "polynomial_orbit",
    "reynolds_average",
    "is_invariant",
    "invariant_space",
    "invariant_space_by_projection",
    "echelon_basis",
]


def _check_dim(p, dim):
    if p.nvars != dim:
        raise ValueError(f"polynomial in {p.nvars} variables, group acts on {dim}")


def polynomial_orbit(p, gens, max_size=10**6):
    """The orbit of ``p`` under the group generated by ``gens``."""
    for g in gens:
        _check_dim(p, g.dim)
    seen = {p.key(): p}
    frontier = [p]
    while frontier:
        nxt = []
        for q in frontier:
            for g in gens:
                r = q.act(g)
                k = r.key()
                if k not in seen:
                    seen[k] = r
                    nxt.append(r)
                    if len(seen) > max_size:
                        raise BudgetError(f"orbit larger than {max_size}", partial=len(seen))
        frontier = nxt
    return list(seen.values())


def _sum(polys, nvars):
    acc = {}
    for q in polys:
        for e, c in q.terms.items():
            acc[e] = acc[e] + c if e in acc else c
    return Polynomial(nvars, acc)


def reynolds_average(group, p, method="orbit"):
    """``(1/|G|) sum_g g.p``.

    ``group`` is a GroupClosure or a list of generators.  ``method="all"``
    sums over every element of a closure (the direct definition), used to
    cross-check the orbit route on small groups.
    """
    if method == "all":
        if not isinstance(group, GroupClosure):
            raise TypeError("method='all' needs a GroupClosure")
        _check_dim(p, group.dim)
        total = _sum((p.act(g) for g in group), p.nvars)
        return total.scale(Fraction(1, group.order))
    gens = group.generators if isinstance(group, GroupClosure) else list(group)
    orbit = polynomial_orbit(p, gens)
    return _sum(orbit, p.nvars).scale(Fraction(1, len(orbit)))


def is_invariant(p, gens):
    return all(p.act(g) == p for g in gens)


def echelon_basis(polys):
    """Reduced echelon basis (as polynomials) of the span of ``polys``."""
    polys = [q for q in polys if q]
    if not polys:
        return []
    nvars = polys[0].nvars
    rows, index = polys_to_rows(polys)
    red, _ = rref(rows, len(index))
    keys = [None] * len(index)
    for e, i in index.items():
        keys[i] = e
    return [Polynomial(nvars, {keys[i]: c for i, c in enumerate(r) if c}) for r in red]


def invariant_space(gens, degree, max_monomials=20000):
    """Echelon basis of the degree-``degree`` invariants of ``<gens>``.

    Monomial generators (signed permutations, diagonal phases) are handled
    by orbit sums of monomials; the remaining generators are imposed as
    linear conditions solved by an exact nullspace.
    """
    gens = list(gens)
    nvars = gens[0].dim
    mono_gens = [g for g in gens if g.is_monomial()]
    other = [g for g in gens if not g.is_monomial()]
    all_monos = list(monomials(nvars, degree))
    if len(all_monos) > max_monomials:
        raise BudgetError(f"{len(all_monos)} monomials exceed the budget {max_monomials}")
    covered = set()
    partial = []
    for e in all_monos:
        if e in covered:
            continue
        orbit = polynomial_orbit(Polynomial.monomial(e), mono_gens) if mono_gens else [Polynomial.monomial(e)]
        for q in orbit:
            covered.update(q.terms)
        avg = _sum(orbit, nvars)
        if avg:
            partial.append(avg.scale(Fraction(1, len(orbit))))
    if not other or not partial:
        return echelon_basis(partial)
    # f = sum a_k partial_k with g.f = f for every non-monomial generator
    diffs = [[g_b - b for g_b, b in zip((b.act(g) for b in partial), partial)] for g in other]
    index = {}
    for block in diffs:
        for q in block:
            for e in q.terms:
                index.setdefault(e, len(index))
    rows = []
    for block in diffs:
        cols = [polys_to_rows([q], index)[0][0] for q in block]
        for i in range(len(index)):
            rows.append([col[i] for col in cols])
    if not rows:
        return echelon_basis(partial)
    kernel = nullspace(rows, len(partial))
    combos = []
    for v in kernel:
        acc = Polynomial(nvars)
        for c, b in zip(v, partial):
            if c:
                acc = acc + b.scale(c)
        combos.append(acc)
    return echelon_basis(combos)


def invariant_space_by_projection(closure, degree, method="all"):
    """Echelon basis of the Reynolds images of every degree-``degree`` monomial."""
    images = [
        reynolds_average(closure, Polynomial.monomial(e), method=method)
        for e in monomials(closure.dim, degree)
    ]
    return echelon_basis(images)
