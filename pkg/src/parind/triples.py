"""Combinatorial descriptors of Levi representations and of triples (P, sigma, Q).

A representation sigma of a standard Levi M is never realised as a module.
It is recorded only through

* ``levi``: the simple roots of M, tagged with the ambient group,
* ``trivial_on``: the simple roots a (anywhere in the full root basis) for
  which Z intersected with the derived group of M_a acts trivially on sigma,
* flags: ``supercuspidal``, ``irreducible_admissible`` and
  ``core_supercuspidal`` (sigma is the trivial extension of a supercuspidal
  representation of a smaller Levi).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import InconsistentDescriptor, MixedAmbient, NotEMinimal, QOutOfRange
from .parabolic import ParabolicSet, between
from .rootsys import RootSystem, orthogonal_subsets


@dataclass(frozen=True)
class SigmaDescriptor:
    levi: ParabolicSet
    trivial_on: frozenset
    supercuspidal: bool = True
    irreducible_admissible: bool = True
    core_supercuspidal: Optional[bool] = None

    def __post_init__(self):
        rs = self.levi.rs
        T = frozenset(self.trivial_on)
        object.__setattr__(self, "trivial_on", T)
        if not T <= rs.delta:
            raise InconsistentDescriptor("trivial_on must be a subset of the simple roots")
        core = self.core_supercuspidal
        if core is None:
            core = self.supercuspidal
        if self.supercuspidal and not core:
            raise InconsistentDescriptor("a supercuspidal descriptor has a supercuspidal core")
        object.__setattr__(self, "core_supercuspidal", bool(core))
        if core and not self.irreducible_admissible:
            raise InconsistentDescriptor("supercuspidal (or extended supercuspidal) implies irreducible admissible")
        P = self.levi.members
        if self.supercuspidal:
            if P & T:
                raise InconsistentDescriptor(
                    f"supercuspidal sigma is e-minimal, but it is trivial on {rs.label_list(P & T)} inside its Levi")
            if not orthogonal_subsets(rs, P, T):
                raise InconsistentDescriptor(
                    f"supercuspidal sigma needs {rs.label_list(P)} orthogonal to {rs.label_list(T - P)}")
        elif core:
            pmin = P - T
            if not orthogonal_subsets(rs, pmin, T):
                raise InconsistentDescriptor(
                    f"the supercuspidal core lives on {rs.label_list(pmin)}, which must be orthogonal "
                    f"to {rs.label_list(T)}")

    @property
    def rs(self) -> RootSystem:
        return self.levi.rs

    @property
    def ambient(self) -> frozenset:
        return self.levi.ambient

    @property
    def delta_sigma(self) -> frozenset:
        """Roots of the ambient group off the Levi on which sigma is trivial."""
        return (self.trivial_on & self.ambient) - self.levi.members

    def retag(self, ambient: Iterable[int]) -> "SigmaDescriptor":
        return SigmaDescriptor(self.levi.retag(ambient), self.trivial_on, self.supercuspidal,
                               self.irreducible_admissible, self.core_supercuspidal)


def sigma_descriptor(rs: RootSystem, levi: Iterable = (), trivial_on: Iterable = (),
                     supercuspidal: bool = True, irreducible_admissible: bool = True,
                     core_supercuspidal: Optional[bool] = None, ambient=None) -> SigmaDescriptor:
    amb = rs.delta if ambient is None else rs.indices(getattr(ambient, "members", ambient))
    return SigmaDescriptor(ParabolicSet(rs, rs.indices(levi), amb), rs.indices(trivial_on),
                           supercuspidal, irreducible_admissible, core_supercuspidal)


def p_sigma(sigma: SigmaDescriptor) -> ParabolicSet:
    """Largest standard parabolic of the ambient group to which sigma extends."""
    return ParabolicSet(sigma.rs, sigma.levi.members | sigma.delta_sigma, sigma.ambient)


def minimize(sigma: SigmaDescriptor):
    """Return ``(P_min, sigma_min)`` with sigma the trivial extension of sigma_min.

    P_min keeps the roots of the Levi on which sigma is *not* trivial.
    """
    pmin = ParabolicSet(sigma.rs, sigma.levi.members - sigma.trivial_on, sigma.ambient)
    if pmin.members == sigma.levi.members:
        return pmin, sigma
    smin = SigmaDescriptor(pmin, sigma.trivial_on, sigma.core_supercuspidal,
                           sigma.irreducible_admissible, sigma.core_supercuspidal)
    return pmin, smin


def is_e_minimal(sigma: SigmaDescriptor) -> bool:
    return not (sigma.levi.members & sigma.trivial_on)


def check_e_minimal_orthogonality(sigma: SigmaDescriptor) -> bool:
    if not is_e_minimal(sigma):
        raise NotEMinimal(f"sigma is trivial on {sigma.rs.label_list(sigma.levi.members & sigma.trivial_on)} "
                          "inside its own Levi; minimize it first")
    return orthogonal_subsets(sigma.rs, sigma.levi.members, sigma.delta_sigma)


def require_consistent(sigma: SigmaDescriptor) -> SigmaDescriptor:
    """Reject descriptors whose e-minimal core breaks the orthogonality constraint."""
    _, smin = minimize(sigma)
    if not check_e_minimal_orthogonality(smin):
        rs = sigma.rs
        raise InconsistentDescriptor(
            f"e-minimal core on {rs.label_list(smin.levi.members)} is not orthogonal to "
            f"{rs.label_list(smin.delta_sigma)}; no representation has this data")
    return sigma


@dataclass(frozen=True)
class GTriple:
    """The datum (P, sigma, Q) of the irreducible I(P, sigma, Q) of the ambient group."""

    P: ParabolicSet
    sigma: SigmaDescriptor
    Q: ParabolicSet
    p_sigma: ParabolicSet = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if not (self.P.ambient == self.Q.ambient == self.sigma.ambient):
            raise MixedAmbient("P, sigma and Q must share one ambient group")
        if self.P.rs != self.Q.rs:
            raise MixedAmbient("P and Q live in different root systems")
        if self.sigma.levi.members != self.P.members:
            raise InconsistentDescriptor("sigma must be a representation of the Levi of P")
        object.__setattr__(self, "p_sigma", p_sigma(self.sigma))

    @property
    def rs(self) -> RootSystem:
        return self.P.rs

    @property
    def ambient(self) -> frozenset:
        return self.P.ambient

    def retag(self, ambient: Iterable[int]) -> "GTriple":
        ambient = frozenset(ambient)
        return GTriple(self.P.retag(ambient), self.sigma.retag(ambient), self.Q.retag(ambient))

    def name(self) -> str:
        rs = self.rs
        group = "G" if self.ambient == rs.delta else "M{" + ",".join(rs.label_list(self.ambient)) + "}"
        return f"I_{group}({self.P}, sigma, {self.Q})"

    def label(self) -> str:
        """The two distinguished cases: e(sigma) and e(sigma) x St."""
        full = self.p_sigma.is_full
        if full and self.Q.is_full and self.Q.members == self.P.members:
            return "sigma"
        if full and self.Q.is_full:
            return "e(sigma)"
        if full and self.Q.members == self.P.members:
            return "e(sigma)xSt"
        return ""

    def __str__(self):
        lab = self.label()
        return self.name() + (f" [{lab}]" if lab else "")


def triple(rs: RootSystem, P: Iterable = (), trivial_on: Iterable = (), Q: Optional[Iterable] = None,
           supercuspidal: bool = True, ambient=None, core_supercuspidal: Optional[bool] = None,
           irreducible_admissible: bool = True) -> GTriple:
    """Convenience constructor; the result is validated."""
    sigma = sigma_descriptor(rs, P, trivial_on, supercuspidal, irreducible_admissible,
                             core_supercuspidal, ambient=ambient)
    Qs = ParabolicSet(rs, rs.indices(P if Q is None else Q), sigma.ambient)
    return validate_triple(GTriple(sigma.levi, sigma, Qs))


def validate_triple(t: GTriple) -> GTriple:
    rs = t.rs
    if not t.P.members <= t.Q.members:
        bad = min(t.P.members - t.Q.members)
        raise QOutOfRange(rs.labels[bad], f"Q misses {rs.labels[bad]} from P")
    outside = t.Q.members - t.p_sigma.members
    if outside:
        bad = min(outside)
        raise QOutOfRange(rs.labels[bad], f"Q contains {rs.labels[bad]}, outside P(sigma) = {t.p_sigma}")
    return t


def minimize_triple(t: GTriple) -> GTriple:
    pmin, smin = minimize(t.sigma)
    if pmin.members == t.P.members:
        return t
    return GTriple(pmin, smin, t.Q)


def valid_qs(sigma: SigmaDescriptor):
    """Every Q with P <= Q <= P(sigma), in (size, lex) order."""
    lo, hi = sigma.levi.members, p_sigma(sigma).members
    return [ParabolicSet(sigma.rs, q, sigma.ambient) for q in between(lo, hi)]
