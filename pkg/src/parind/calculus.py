"""Decision procedures for parabolically induced representations.

All rules here concern representations attached to a supercuspidal datum and
coefficients in an algebraically closed field of characteristic p.  Inputs
whose sigma is only the trivial extension of a supercuspidal representation
(``core_supercuspidal``) are first replaced by their e-minimal form, which
describes the same irreducible representation; results are always reported
in that canonical form.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import lattice as _lat
from .errors import InvalidM1Triple, InvalidNesting, MixedAmbient, NotSupercuspidal, ParindError
from .parabolic import ParabolicSet, all_subsets, between, subset_key
from .rootsys import orthogonal_subsets
from .triples import (GTriple, SigmaDescriptor, minimize_triple, p_sigma, sigma_descriptor,
                      validate_triple)
from .weyl import check_separating_root, double_coset_reps, product_set, separating_root


def _require_core(sigma: SigmaDescriptor):
    if not sigma.core_supercuspidal:
        raise NotSupercuspidal("this rule needs sigma supercuspidal (or a trivial extension of one)")


def canonical(t: GTriple) -> GTriple:
    """Validate, check the supercuspidal hypothesis and pass to the e-minimal form."""
    validate_triple(t)
    _require_core(t.sigma)
    return minimize_triple(t)


# ---------------------------------------------------------------------------
# constituents and lattices

def constituents(P: ParabolicSet, sigma: SigmaDescriptor) -> list:
    """Irreducible constituents of the induction of sigma from P (each with multiplicity one).

    One triple per Q with P <= Q <= P(sigma).
    """
    if sigma.levi.members != P.members or sigma.ambient != P.ambient:
        raise MixedAmbient("sigma must be a representation of the Levi of P")
    _require_core(sigma)
    top = p_sigma(sigma).members
    return [minimize_triple(GTriple(P, sigma, ParabolicSet(P.rs, q, P.ambient)))
            for q in between(P.members, top)]


@dataclass(frozen=True)
class Constituent:
    triple: GTriple
    marker: frozenset


@dataclass(frozen=True)
class SubrepLattice:
    """Subrepresentations of Ind_{P_1}(sigma_1), as upper sets of subsets of ``index_set``.

    ``elements[k]`` is a family of markers; the subrepresentation it stands
    for has exactly the constituents carrying those markers.
    """

    P1: ParabolicSet
    source: Optional[GTriple]
    index_set: frozenset
    constituents: tuple
    elements: tuple
    hasse_edges: tuple = field(repr=False)

    def __len__(self):
        return len(self.elements)

    @property
    def rs(self):
        return self.P1.rs

    def constituent(self, marker) -> Constituent:
        marker = frozenset(marker)
        for c in self.constituents:
            if c.marker == marker:
                return c
        raise KeyError(sorted(marker))

    def constituents_of(self, k: int) -> list:
        fam = self.elements[k]
        return [c for c in self.constituents if c.marker in fam]

    def principal(self, marker) -> int:
        """Index of the smallest subrepresentation having the given constituent as quotient."""
        marker = frozenset(marker)
        fam = frozenset(s for s in all_subsets(self.index_set) if marker <= s)
        return self.elements.index(fam)

    @property
    def zero(self) -> int:
        return self.elements.index(frozenset())

    @property
    def whole(self) -> int:
        return self.elements.index(frozenset(all_subsets(self.index_set)))

    def join_irreducibles(self) -> list:
        return [k for k, fam in enumerate(self.elements) if len(_lat.minimal_members(fam)) == 1]

    def to_dot(self, name: str = "lattice") -> str:
        return _lat.to_dot(list(self.elements), list(self.hasse_edges), self.rs.labels,
                           socle=self.principal(self.index_set), top=self.whole, name=name)


def _build_lattice(P1: ParabolicSet, source, index_set, cons, fams) -> SubrepLattice:
    return SubrepLattice(P1=P1, source=source, index_set=frozenset(index_set),
                         constituents=tuple(cons), elements=tuple(fams),
                         hasse_edges=tuple(_lat.hasse_edges(fams)))


def _lift(P1: ParabolicSet, m1_triple: GTriple) -> GTriple:
    """Check the M_1-level triple and return its canonical form, retagged to the ambient of P_1."""
    if m1_triple.rs != P1.rs:
        raise InvalidM1Triple("triple and P_1 live in different root systems")
    if m1_triple.ambient != P1.members:
        raise InvalidM1Triple(
            f"triple lives in the Levi {P1.rs.label_list(m1_triple.ambient)}, expected {P1}")
    try:
        validate_triple(m1_triple)
    except ParindError as exc:
        raise InvalidM1Triple(f"invalid triple in M_1: {exc}") from exc
    _require_core(m1_triple.sigma)
    return minimize_triple(m1_triple)


def subrep_lattice(P1: ParabolicSet, m1_triple: GTriple) -> SubrepLattice:
    """Lattice of subrepresentations of Ind_{P_1} I_{M_1}(P, sigma, Q)."""
    t = _lift(P1, m1_triple)
    sigma = t.sigma.retag(P1.ambient)
    top = p_sigma(sigma).members
    index = top - P1.members
    P = t.P.retag(P1.ambient)
    fams = _lat.upper_sets(index)  # trips the size guard before anything is enumerated
    cons = []
    for extra in all_subsets(index):
        Qp = ParabolicSet(P1.rs, t.Q.members | extra, P1.ambient)
        cons.append(Constituent(GTriple(P, sigma, Qp), extra))
    return _build_lattice(P1, t, index, cons, fams)


def socle_cosocle(lat: SubrepLattice):
    """Both are irreducible: the socle carries the full marker, the cosocle the empty one."""
    return lat.constituent(lat.index_set), lat.constituent(frozenset())


def is_irreducible_induction(P1: ParabolicSet, m1_triple: GTriple) -> bool:
    t = _lift(P1, m1_triple)
    return p_sigma(t.sigma.retag(P1.ambient)).members <= P1.members


def steinberg_lattice(P: ParabolicSet, Q: ParabolicSet) -> SubrepLattice:
    """Lattice of Ind_P St_Q^P: upper sets of subsets of the roots outside P."""
    if P.rs != Q.rs or P.ambient != Q.ambient:
        raise MixedAmbient("P and Q must share one ambient group")
    if not Q.members <= P.members:
        raise InvalidNesting(f"Q = {Q} is not contained in P = {P}")
    rs = P.rs
    trivial = sigma_descriptor(rs, (), rs.delta, ambient=P.members)
    m1 = GTriple(trivial.levi, trivial, Q.retag(P.members))
    return subrep_lattice(P, m1)


# ---------------------------------------------------------------------------
# adjoints of parabolic induction

@dataclass(frozen=True)
class AdjointResult:
    vanishes: bool
    result_triple: Optional[GTriple] = None


def _adjoint_setup(P1: ParabolicSet, t: GTriple):
    if P1.rs != t.rs or P1.ambient != t.ambient:
        raise MixedAmbient("P_1 must be a standard parabolic of the triple's ambient group")
    return canonical(t)


def _restrict(t: GTriple, M1: frozenset) -> GTriple:
    return GTriple(t.P.retag(M1), t.sigma.retag(M1), ParabolicSet(t.rs, t.Q.members & M1, M1))


def left_adjoint(P1: ParabolicSet, t: GTriple) -> AdjointResult:
    """Jacquet functor (N_1-coinvariants) of I(P, sigma, Q).

    Non-zero exactly when P_1 contains P and P_1 together with Q generates a
    group containing P(sigma); it is then I_{M_1}(P n M_1, sigma, Q n M_1).
    Valid for coefficients in an algebraically closed field of characteristic p.
    """
    t = _adjoint_setup(P1, t)
    M1 = P1.members
    if t.P.members <= M1 and t.p_sigma.members <= (M1 | t.Q.members):
        return AdjointResult(False, _restrict(t, M1))
    return AdjointResult(True, None)


def right_adjoint(P1: ParabolicSet, t: GTriple) -> AdjointResult:
    """Right adjoint of induction (the ordinary part on admissibles) of I(P, sigma, Q).

    Non-zero exactly when P_1 contains Q.  Needs coefficients of
    characteristic p (p nilpotent, noetherian ring in the general setting).
    """
    t = _adjoint_setup(P1, t)
    M1 = P1.members
    if t.Q.members <= M1:
        return AdjointResult(False, _restrict(t, M1))
    return AdjointResult(True, None)


@dataclass(frozen=True)
class Cuspidality:
    left_cuspidal: bool
    right_cuspidal: bool
    supercuspidal: bool


def cuspidality(t: GTriple) -> Cuspidality:
    t = canonical(t)
    full = t.ambient
    Q, Ps = t.Q.members, t.p_sigma.members
    left = Q == t.P.members and Ps == full
    right = Q == full and Ps == full
    return Cuspidality(left, right, left and right)


# ---------------------------------------------------------------------------
# unramified twists

@dataclass(frozen=True)
class TwistReport:
    candidate_roots: frozenset
    active_roots: frozenset
    ignored_roots: frozenset
    conditions: tuple

    @property
    def always_irreducible(self) -> bool:
        return not self.active_roots

    def locus(self, labels) -> str:
        """Describe the set of unramified characters making the induction reducible.

        It is the union of one hypersurface per active root (a closed set);
        irreducibility holds off it.
        """
        if not self.active_roots:
            return "reducibility locus is empty: irreducible for every unramified character"
        names = ", ".join(labels[i] for i in sorted(self.active_roots))
        return (f"reducibility locus is the union of {len(self.active_roots)} hypersurface(s) "
                f"chi(a_x) = chi_x(a_x) for x in {{{names}}}; irreducible off this closed set")


def unramified_twist_conditions(P1: ParabolicSet, m1_triple: GTriple, declared_nr) -> TwistReport:
    """Conditions on an unramified character chi making Ind_{P_1}(chi sigma_1) irreducible.

    Candidates are the roots outside P_1 orthogonal to the Levi of sigma; which
    of them admit a twisting character chi_a depends on arithmetic of the
    field, so the caller declares them.  Declared roots that are not
    candidates are reported as ignored.
    """
    t = _lift(P1, m1_triple)
    rs = P1.rs
    declared = frozenset(getattr(declared_nr, "members", declared_nr))
    P = t.P.members
    cand = frozenset(a for a in P1.ambient - P1.members if orthogonal_subsets(rs, {a}, P))
    active = cand & declared
    conds = tuple(f"chi(a_{rs.labels[a]}) != chi_{rs.labels[a]}(a_{rs.labels[a]})"
                  for a in sorted(active))
    return TwistReport(cand, active, declared - cand, conds)


# ---------------------------------------------------------------------------
# double coset filtration behind the composite of Jacquet functor and induction

@dataclass(frozen=True)
class Cell:
    rep: object
    survivor: bool
    witness: Optional[tuple]
    witness_verified: bool


@dataclass(frozen=True)
class GeometricLemmaReport:
    P: ParabolicSet
    P1: ParabolicSet
    cells: tuple
    p_in_m1: frozenset
    p1_in_m: frozenset

    @property
    def survivors(self) -> list:
        return [c for c in self.cells if c.survivor]


def geometric_lemma_report(P: ParabolicSet, P1: ParabolicSet) -> GeometricLemmaReport:
    """Filter Ind_P by (P, P_1)-double cosets and say which layers survive N_1-coinvariants.

    Cells are listed open-first; only the closed cell P P_1 (identity) survives,
    giving Ind_{P n M_1}^{M_1} of the Jacquet module along P_1 n M.  Every other
    cell carries a separating root b (positive, outside M_1, with w(b) in -Phi_N)
    that kills its coinvariants.
    """
    if P.rs != P1.rs or P.ambient != P1.ambient:
        raise MixedAmbient("P and P_1 must share one ambient group")
    rs = P.rs
    if P.ambient != rs.delta:
        raise MixedAmbient("the double coset report is computed in the full group")
    M, M1 = P.members, P1.members
    prods = product_set(rs, M, M1)
    cells = []
    for w in double_coset_reps(rs, M, M1):
        if w.length == 0:
            cells.append(Cell(w, True, None, True))
            continue
        beta = separating_root(rs, M, M1, w, prods)
        cells.append(Cell(w, False, beta, check_separating_root(rs, M, M1, w, beta)))
    return GeometricLemmaReport(P, P1, tuple(cells), M & M1, M1 & M)


__all__ = [
    "AdjointResult", "Cell", "Constituent", "Cuspidality", "GeometricLemmaReport",
    "SubrepLattice", "TwistReport", "canonical", "constituents", "cuspidality",
    "geometric_lemma_report", "is_irreducible_induction", "left_adjoint", "right_adjoint",
    "socle_cosocle", "steinberg_lattice", "subrep_lattice", "subset_key",
    "unramified_twist_conditions",
]
