"""Exhaustive invariant checks over small root systems.

Each ``check_*`` function runs one invariant over every relevant instance of
one root system and returns a :class:`Check`; the first counterexample found
is recorded verbatim.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import product
from typing import Callable, Optional

from .calculus import (constituents, cuspidality, geometric_lemma_report, is_irreducible_induction,
                       left_adjoint, right_adjoint, subrep_lattice)
from .parabolic import ParabolicSet, all_subsets, between
from .rootsys import RootSystem, orthogonal_subsets, root_system
from .triples import GTriple, SigmaDescriptor, minimize_triple, p_sigma, valid_qs
from .weyl import (bruhat_leq, check_separating_root, double_coset_reps, generate_weyl,
                   longest_element, min_coset_reps, product_set,
                   separating_root)
from .errors import WitnessMissing

log = logging.getLogger(__name__)

DEFAULT_TYPES = ("A1", "A2", "A1xA1", "B2")
ACCEPTANCE_TYPES = ("A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1xA1", "A1xA2")


@dataclass
class Check:
    name: str
    system: str
    passed: bool = True
    checked: int = 0
    counterexample: Optional[str] = None

    def fail(self, msg: str):
        if self.passed:
            self.passed = False
            self.counterexample = msg


# ---------------------------------------------------------------------------
# corpora

def supercuspidal_descriptors(rs: RootSystem, ambient=None):
    """Every descriptor admissible for a supercuspidal sigma of a Levi of ``ambient``."""
    amb = rs.delta if ambient is None else frozenset(ambient)
    for P in all_subsets(amb):
        for T in all_subsets(rs.delta - P):
            if orthogonal_subsets(rs, P, T):
                yield SigmaDescriptor(ParabolicSet(rs, P, amb), T, True)


def core_descriptors(rs: RootSystem, ambient=None):
    """Descriptors that are trivial extensions of a supercuspidal (including supercuspidals)."""
    amb = rs.delta if ambient is None else frozenset(ambient)
    for P in all_subsets(amb):
        for T in all_subsets(rs.delta):
            if orthogonal_subsets(rs, P - T, T):
                yield SigmaDescriptor(ParabolicSet(rs, P, amb), T, not (P & T),
                                      core_supercuspidal=True)


def triples_of(descriptors):
    for sigma in descriptors:
        for Q in valid_qs(sigma):
            yield GTriple(sigma.levi, sigma, Q)


def m1_instances(rs: RootSystem):
    """Every (P_1, triple in M_1) accepted by the lattice rules."""
    for P1 in all_subsets(rs.delta):
        P1s = ParabolicSet(rs, P1, rs.delta)
        for t in triples_of(supercuspidal_descriptors(rs, P1)):
            yield P1s, t


def proper_parabolics(rs: RootSystem, ambient: frozenset):
    return [ParabolicSet(rs, s, ambient) for s in all_subsets(ambient) if s != ambient]


# ---------------------------------------------------------------------------
# Weyl group checks

def check_bruhat_order(rs: RootSystem, leq: Callable = bruhat_leq) -> Check:
    c = Check("bruhat-partial-order", rs.name)
    W = list(generate_weyl(rs))
    rel = {(u.idx, w.idx): leq(u, w) for u in W for w in W}
    for u in W:
        c.checked += 1
        if not rel[u.idx, u.idx]:
            c.fail(f"not reflexive at {u}")
        if not rel[W[0].idx, u.idx]:
            c.fail(f"identity is not below {u}")
        for w in W:
            if u.idx != w.idx and rel[u.idx, w.idx] and rel[w.idx, u.idx]:
                c.fail(f"not antisymmetric: {u} and {w}")
            if rel[u.idx, w.idx]:
                for v in W:
                    if rel[w.idx, v.idx] and not rel[u.idx, v.idx]:
                        c.fail(f"not transitive: {u} <= {w} <= {v}")
    return c


def check_w0_reversal(rs: RootSystem, leq: Callable = bruhat_leq) -> Check:
    c = Check("bruhat-w0-reversal", rs.name)
    W = list(generate_weyl(rs))
    w0 = longest_element(rs)
    for u in W:
        for w in W:
            c.checked += 1
            if leq(u, w) != leq(w * w0, u * w0):
                c.fail(f"{u} <= {w} is {leq(u, w)} but {w * w0} <= {u * w0} is {leq(w * w0, u * w0)}")
    return c


def check_bruhat_subwords(rs: RootSystem, leq: Callable = bruhat_leq) -> Check:
    """Compare with the subword property: u <= w iff u is a product of a subword
    of one (any) reduced word of w."""
    c = Check("bruhat-subword", rs.name)
    W = generate_weyl(rs)
    gens = W.generators
    for w in W:
        below = set()
        word = w.word
        for mask in range(1 << len(word)):
            x = W.identity
            for k, i in enumerate(word):
                if mask >> k & 1:
                    x = W.mul(x, gens[i])
            below.add(x.idx)
        for u in W:
            c.checked += 1
            if leq(u, w) != (u.idx in below):
                c.fail(f"{u} <= {w} is {leq(u, w)}, subwords say {u.idx in below}")
    return c


def check_lengths(rs: RootSystem) -> Check:
    c = Check("length-subadditivity", rs.name)
    W = list(generate_weyl(rs))
    w0 = longest_element(rs)
    if w0.length != rs.npos:
        c.fail(f"longest element has length {w0.length}, expected {rs.npos}")
    for u in W:
        if u.inversions() != u.length:
            c.fail(f"{u}: word length {u.length} but {u.inversions()} inversions")
        for w in W:
            c.checked += 1
            lw = (u * w).length
            if lw > u.length + w.length or (lw - u.length - w.length) % 2:
                c.fail(f"l({u} * {w}) = {lw}")
    return c


def check_coset_counts(rs: RootSystem) -> Check:
    c = Check("coset-rep-count", rs.name)
    W = generate_weyl(rs)
    for Q in all_subsets(rs.delta):
        c.checked += 1
        reps = min_coset_reps(rs, Q)
        WQ = W.subgroup(Q)
        if len(reps) * len(WQ) != len(W):
            c.fail(f"Q={rs.label_list(Q)}: {len(reps)} * {len(WQ)} != {len(W)}")
        for w in reps:
            if min(W.mul(v, w).length for v in WQ) != w.length:
                c.fail(f"{w} is not of minimal length in its W_Q coset, Q={rs.label_list(Q)}")
    return c


def check_double_cosets(rs: RootSystem, leq: Callable = bruhat_leq) -> Check:
    c = Check("double-coset-partition", rs.name)
    W = generate_weyl(rs)
    for I, J in product(list(all_subsets(rs.delta)), repeat=2):
        c.checked += 1
        reps = double_coset_reps(rs, I, J)
        seen = set()
        for w in reps:
            cell = {W.mul(W.mul(a, w), b) for a in W.subgroup(I) for b in W.subgroup(J)}
            if cell & seen:
                c.fail(f"overlapping double cosets at {w}, I={rs.label_list(I)}, J={rs.label_list(J)}")
            if min(x.length for x in cell) != w.length:
                c.fail(f"{w} is not minimal in its double coset")
            seen |= cell
        if len(seen) != len(W):
            c.fail(f"double cosets miss elements for I={rs.label_list(I)}, J={rs.label_list(J)}")
        if reps[-1].length != 0:
            c.fail("identity double coset is not last")
        for k in range(1, len(reps)):
            head = reps[:k]
            tail = reps[k:]
            if any(leq(w, v) for w in head for v in tail):
                c.fail(f"prefix {[str(x) for x in head]} is not open")
    return c


def check_separating_roots(rs: RootSystem) -> Check:
    c = Check("separating-root", rs.name)
    W = generate_weyl(rs)
    for M, M1 in product(list(all_subsets(rs.delta)), repeat=2):
        prods = product_set(rs, M, M1)
        for w in W:
            c.checked += 1
            try:
                beta = separating_root(rs, M, M1, w, prods)
            except WitnessMissing as exc:
                c.fail(str(exc))
                continue
            if (beta is None) != (w in prods):
                c.fail(f"witness presence wrong for {w}")
            elif beta is not None and not check_separating_root(rs, M, M1, w, beta):
                c.fail(f"witness {beta} for {w} fails the re-check")
    return c


def check_geometric_lemma(rs: RootSystem) -> Check:
    c = Check("geometric-lemma", rs.name)
    for M, M1 in product(list(all_subsets(rs.delta)), repeat=2):
        c.checked += 1
        rep = geometric_lemma_report(ParabolicSet(rs, M, rs.delta), ParabolicSet(rs, M1, rs.delta))
        surv = rep.survivors
        if len(surv) != 1 or surv[0].rep.length != 0 or rep.cells[-1] is not surv[0]:
            c.fail(f"survivors {[str(s.rep) for s in surv]} for M={rs.label_list(M)}, M1={rs.label_list(M1)}")
        for cell in rep.cells:
            if not cell.survivor and (cell.witness is None or not cell.witness_verified):
                c.fail(f"cell {cell.rep} lacks a verified witness")
    return c


# ---------------------------------------------------------------------------
# representation-level checks

def brute_force_upper_set_count(n: int) -> int:
    """Count upward-closed families of subsets of an n-set by scanning all families."""
    subsets = list(range(1 << n))
    count = 0
    for fam_mask in range(1 << len(subsets)):
        fam = [s for s in subsets if fam_mask >> s & 1]
        ok = True
        for s in fam:
            for t in subsets:
                if t & s == s and not fam_mask >> t & 1:
                    ok = False
                    break
            if not ok:
                break
        count += ok
    return count


def check_constituent_counts(rs: RootSystem) -> Check:
    c = Check("constituent-count", rs.name)
    for sigma in supercuspidal_descriptors(rs):
        c.checked += 1
        cons = constituents(sigma.levi, sigma)
        want = 2 ** len(sigma.delta_sigma)
        if len(cons) != want or len(set(cons)) != want:
            c.fail(f"P={rs.label_list(sigma.levi.members)}, trivial_on={rs.label_list(sigma.trivial_on)}: "
                   f"{len(cons)} constituents, expected {want}")
    return c


def check_lattice_sizes(rs: RootSystem, brute: Optional[dict] = None) -> Check:
    c = Check("lattice-size", rs.name)
    brute = {} if brute is None else brute
    for P1, t in m1_instances(rs):
        c.checked += 1
        lat = subrep_lattice(P1, t)
        n = len(lat.index_set)
        if n not in brute:
            brute[n] = brute_force_upper_set_count(n)
        if len(lat) != brute[n]:
            c.fail(f"P1={P1}, {t.name()}: lattice has {len(lat)} elements, brute force {brute[n]}")
        if len(lat.join_irreducibles()) != len(lat.constituents) or len(lat.constituents) != 2 ** n:
            c.fail(f"P1={P1}, {t.name()}: join-irreducibles do not match constituents")
    return c


def check_irreducibility(rs: RootSystem) -> Check:
    c = Check("irreducibility-criterion", rs.name)
    for P1, t in m1_instances(rs):
        c.checked += 1
        if is_irreducible_induction(P1, t) != (len(subrep_lattice(P1, t)) == 2):
            c.fail(f"P1={P1}, {t.name()}: criterion disagrees with lattice size")
    return c


def check_adjoint_identity(rs: RootSystem) -> Check:
    c = Check("adjoint-identity", rs.name)
    G = ParabolicSet(rs, rs.delta, rs.delta)
    for t in triples_of(supercuspidal_descriptors(rs)):
        c.checked += 1
        for fn in (left_adjoint, right_adjoint):
            res = fn(G, t)
            if res.vanishes or res.result_triple != t:
                c.fail(f"{fn.__name__}(G, {t.name()}) is not the identity")
    return c


def check_cuspidality(rs: RootSystem) -> Check:
    c = Check("cuspidality-crosscheck", rs.name)
    proper = proper_parabolics(rs, rs.delta)
    for t in triples_of(supercuspidal_descriptors(rs)):
        c.checked += 1
        cl = cuspidality(t)
        left = all(left_adjoint(P1, t).vanishes for P1 in proper)
        right = all(right_adjoint(P1, t).vanishes for P1 in proper)
        if (cl.left_cuspidal, cl.right_cuspidal) != (left, right):
            c.fail(f"{t.name()}: closed form {(cl.left_cuspidal, cl.right_cuspidal)}, from adjoints {(left, right)}")
        if cl.supercuspidal != (left and right) or cl.supercuspidal != (t.P.members == rs.delta):
            c.fail(f"{t.name()}: supercuspidal flag inconsistent")
    return c


def check_transitivity(rs: RootSystem) -> Check:
    c = Check("jacquet-transitivity", rs.name)
    for t in triples_of(supercuspidal_descriptors(rs)):
        for P2s in all_subsets(rs.delta):
            P2 = ParabolicSet(rs, P2s, rs.delta)
            for P1s in all_subsets(P2s):
                P1 = ParabolicSet(rs, P1s, rs.delta)
                for fn in (left_adjoint, right_adjoint):
                    c.checked += 1
                    direct = fn(P1, t)
                    step = fn(P2, t)
                    if step.vanishes:
                        two = step
                    else:
                        two = fn(ParabolicSet(rs, P1s, P2s), step.result_triple)
                    if direct != two:
                        c.fail(f"{fn.__name__}: {t.name()} through P2={P2} to P1={P1}: {direct} vs {two}")
    return c


def check_minimalization(rs: RootSystem) -> Check:
    c = Check("minimalization-invariance", rs.name)
    G = rs.delta
    parabolics = [ParabolicSet(rs, s, G) for s in all_subsets(G)]
    for t in triples_of(core_descriptors(rs)):
        m = minimize_triple(t)
        c.checked += 1
        if p_sigma(m.sigma) != p_sigma(t.sigma):
            c.fail(f"{t.name()}: P(sigma) changes under minimization")
        if cuspidality(t) != cuspidality(m):
            c.fail(f"{t.name()}: cuspidality changes under minimization")
        for P1 in parabolics:
            for fn in (left_adjoint, right_adjoint):
                if fn(P1, t) != fn(P1, m):
                    c.fail(f"{fn.__name__}({P1}) differs on {t.name()} and its minimal form")
        if t.Q.members == t.P.members:
            cons = constituents(t.P, t.sigma)
            expect = [minimize_triple(GTriple(t.P, t.sigma, ParabolicSet(rs, q, G)))
                      for q in between(t.P.members, p_sigma(t.sigma).members)]
            if cons != expect or not set(cons) <= set(constituents(m.P, m.sigma)):
                c.fail(f"constituents of the induction from {t.P} are not canonical")
    for P1, t in m1_instances_with_cores(rs):
        c.checked += 1
        m = minimize_triple(t)
        if is_irreducible_induction(P1, t) != is_irreducible_induction(P1, m) or \
                subrep_lattice(P1, t) != subrep_lattice(P1, m):
            c.fail(f"lattice of Ind from {P1} differs on {t.name()} and its minimal form")
    return c


def m1_instances_with_cores(rs: RootSystem):
    for P1 in all_subsets(rs.delta):
        P1s = ParabolicSet(rs, P1, rs.delta)
        for t in triples_of(core_descriptors(rs, P1)):
            yield P1s, t


WEYL_CHECKS = (check_bruhat_order, check_w0_reversal, check_bruhat_subwords, check_lengths, check_coset_counts,
               check_double_cosets, check_separating_roots, check_geometric_lemma)
REP_CHECKS = (check_constituent_counts, check_lattice_sizes, check_irreducibility,
              check_adjoint_identity, check_cuspidality, check_transitivity, check_minimalization)
ALL_CHECKS = WEYL_CHECKS + REP_CHECKS


def verify_all(types=DEFAULT_TYPES, rank_bound: Optional[int] = None, leq: Callable = bruhat_leq,
               checks=ALL_CHECKS) -> list:
    """Run every invariant over every listed system (skipping those above ``rank_bound``)."""
    results = []
    brute: dict = {}
    for name in types:
        rs = root_system(name)
        if rank_bound is not None and rs.rank > rank_bound:
            log.info("skipping %s: rank %d above bound %d", name, rs.rank, rank_bound)
            continue
        for chk in checks:
            if chk in (check_bruhat_order, check_w0_reversal, check_bruhat_subwords, check_double_cosets):
                res = chk(rs, leq=leq)
            elif chk is check_lattice_sizes:
                res = chk(rs, brute)
            else:
                res = chk(rs)
            res.system = name
            results.append(res)
    return results


def separation_summary(rs: RootSystem):
    """(elements, pairs, failures) for the separating-root check over every (M, M1)."""
    res = check_separating_roots(rs)
    W = generate_weyl(rs)
    npairs = 4 ** rs.rank
    return len(W), npairs, res


__all__ = ["ACCEPTANCE_TYPES", "ALL_CHECKS", "Check", "DEFAULT_TYPES", "brute_force_upper_set_count",
           "core_descriptors", "separation_summary", "m1_instances",
           "supercuspidal_descriptors", "triples_of", "verify_all"]
