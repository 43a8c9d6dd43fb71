"""Plain-data reports for every task, and their JSON / text / DOT renderings.

Reports are nested dicts of strings, ints, bools, lists and ``None`` so that
``json.loads`` followed by :func:`to_json` reproduces the exact bytes.
"""
from __future__ import annotations

import json

from .calculus import (AdjointResult, Cuspidality, GeometricLemmaReport, SubrepLattice,
                       TwistReport, socle_cosocle)
from .errors import InputError
from .parabolic import ParabolicSet
from .lattice import minimal_members
from .triples import GTriple, p_sigma
from .verify import Check


def to_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def _braces(items) -> str:
    return "{" + ",".join(items) + "}"


# ---------------------------------------------------------------------------
# object -> dict

def triple_dict(t: GTriple) -> dict:
    rs = t.rs
    return {
        "name": t.name(),
        "ambient": rs.label_list(t.ambient),
        "P": t.P.labels(),
        "Q": t.Q.labels(),
        "P_sigma": t.p_sigma.labels(),
        "trivial_on": rs.label_list(t.sigma.trivial_on),
        "supercuspidal": t.sigma.supercuspidal,
        "label": t.label(),
    }


def triple_text(d: dict) -> str:
    return d["name"] + (f" [{d['label']}]" if d["label"] else "")


def constituents_report(rs, P: ParabolicSet, trivial_on, cons: list) -> dict:
    return {
        "task": "constituents",
        "cartan": rs.name,
        "P": P.labels(),
        "trivial_on": rs.label_list(trivial_on),
        "count": len(cons),
        "constituents": [triple_dict(t) for t in cons],
    }


def lattice_report(task: str, lat: SubrepLattice) -> dict:
    rs = lat.rs
    socle, cosocle = socle_cosocle(lat)
    elements = []
    for k, fam in enumerate(lat.elements):
        elements.append({
            "id": k,
            "generators": [rs.label_list(s) for s in minimal_members(fam)],
            "constituents": [rs.label_list(c.marker) for c in lat.constituents_of(k)],
        })
    return {
        "task": task,
        "cartan": rs.name,
        "P1": lat.P1.labels(),
        "source": triple_dict(lat.source),
        "index_set": rs.label_list(lat.index_set),
        "size": len(lat),
        "irreducible": len(lat) == 2,
        "constituents": [{"marker": rs.label_list(c.marker), "triple": triple_dict(c.triple)}
                         for c in lat.constituents],
        "elements": elements,
        "hasse_edges": [list(e) for e in lat.hasse_edges],
        "socle": {"marker": rs.label_list(socle.marker), "triple": triple_dict(socle.triple)},
        "cosocle": {"marker": rs.label_list(cosocle.marker), "triple": triple_dict(cosocle.triple)},
    }


def adjoint_report(task: str, P1: ParabolicSet, given: GTriple, canon: GTriple, res: AdjointResult) -> dict:
    return {
        "task": task,
        "cartan": P1.rs.name,
        "P1": P1.labels(),
        "input": triple_dict(given),
        "canonical": triple_dict(canon),
        "vanishes": res.vanishes,
        "result": None if res.result_triple is None else triple_dict(res.result_triple),
    }


def cuspidal_report(given: GTriple, canon: GTriple, c: Cuspidality) -> dict:
    return {
        "task": "cuspidal",
        "cartan": given.rs.name,
        "input": triple_dict(given),
        "canonical": triple_dict(canon),
        "left_cuspidal": c.left_cuspidal,
        "right_cuspidal": c.right_cuspidal,
        "supercuspidal": c.supercuspidal,
    }


def irreducible_report(P1: ParabolicSet, given: GTriple, canon: GTriple, irreducible: bool) -> dict:
    rs = P1.rs
    ps = canon.sigma.retag(P1.ambient)
    return {
        "task": "irreducible",
        "cartan": rs.name,
        "P1": P1.labels(),
        "input": triple_dict(given),
        "P_sigma": p_sigma(ps).labels(),
        "irreducible": irreducible,
    }


def twist_report(P1: ParabolicSet, given: GTriple, rep: TwistReport) -> dict:
    rs = P1.rs
    return {
        "task": "twist",
        "cartan": rs.name,
        "P1": P1.labels(),
        "input": triple_dict(given),
        "candidate_roots": rs.label_list(rep.candidate_roots),
        "active_roots": rs.label_list(rep.active_roots),
        "ignored_roots": rs.label_list(rep.ignored_roots),
        "conditions": list(rep.conditions),
        "always_irreducible": rep.always_irreducible,
        "locus": rep.locus(rs.labels),
    }


def geometric_lemma_dict(rep: GeometricLemmaReport) -> dict:
    rs = rep.P.rs
    cells = []
    for c in rep.cells:
        cells.append({
            "rep": str(c.rep),
            "length": c.rep.length,
            "survivor": c.survivor,
            "witness": None if c.witness is None else rs.format_root(c.witness),
            "witness_verified": c.witness_verified,
        })
    return {
        "task": "geometric-lemma",
        "cartan": rs.name,
        "P": rep.P.labels(),
        "P1": rep.P1.labels(),
        "cells": cells,
        "survivor": (f"Ind from {_braces(rs.label_list(rep.p_in_m1))} to M1 = "
                     f"{_braces(rep.P1.labels())} of the Jacquet module along "
                     f"{_braces(rs.label_list(rep.p1_in_m))} in M = {_braces(rep.P.labels())}"),
    }


def coset_reps_report(rs, Q, reps, order: int) -> dict:
    return {
        "task": "weyl:coset-reps",
        "cartan": rs.name,
        "Q": rs.label_list(Q),
        "group_order": order,
        "count": len(reps),
        "reps": [str(w) for w in reps],
    }


def double_cosets_report(rs, I, J, reps) -> dict:
    return {
        "task": "weyl:double-cosets",
        "cartan": rs.name,
        "I": rs.label_list(I),
        "J": rs.label_list(J),
        "count": len(reps),
        "reps": [str(w) for w in reps],
    }


def check_dict(c: Check) -> dict:
    return {"name": c.name, "system": c.system, "passed": c.passed, "checked": c.checked,
            "counterexample": c.counterexample}


def separation_report(rs, nelem: int, npairs: int, check: Check) -> dict:
    if check.passed:
        msg = f"checked {nelem} elements x {npairs} (D_M, D_M1) pairs: all witnesses found"
    else:
        msg = f"checked {nelem} elements x {npairs} (D_M, D_M1) pairs: FAILED: {check.counterexample}"
    return {"task": "verify:lemma55", "cartan": rs.name, "elements": nelem, "pairs": npairs,
            "passed": check.passed, "counterexample": check.counterexample, "message": msg}


def verify_all_report(types, rank_bound, checks: list) -> dict:
    passed = all(c.passed for c in checks)
    if not checks:
        msg = "warning: nothing checked"
    elif passed:
        msg = f"all {len(checks)} invariant checks passed"
    else:
        msg = f"{sum(not c.passed for c in checks)} of {len(checks)} invariant checks FAILED"
    return {"task": "verify:all", "types": list(types), "rank_bound": rank_bound,
            "results": [check_dict(c) for c in checks], "passed": passed, "message": msg}


# ---------------------------------------------------------------------------
# dict -> text

def _lat_text(r: dict) -> list:
    out = [f"{r['task']} in {r['cartan']}: Ind from P1 = {_braces(r['P1'])} of {triple_text(r['source'])}",
           f"index set: {_braces(r['index_set'])}",
           f"constituents ({len(r['constituents'])}):"]
    for c in r["constituents"]:
        out.append(f"  marker {_braces(c['marker'])}: {triple_text(c['triple'])}")
    out.append(f"subrepresentations ({r['size']}):")
    for e in r["elements"]:
        gens = " + ".join("<" + _braces(g) + ">" for g in e["generators"]) or "0"
        out.append(f"  [{e['id']}] {gens}")
    out.append("covers: " + ", ".join(f"{i}<{j}" for i, j in r["hasse_edges"]))
    out.append(f"socle: marker {_braces(r['socle']['marker'])}: {triple_text(r['socle']['triple'])}")
    out.append(f"cosocle: marker {_braces(r['cosocle']['marker'])}: {triple_text(r['cosocle']['triple'])}")
    out.append("irreducible: " + ("yes" if r["irreducible"] else "no"))
    return out


def _yn(b: bool) -> str:
    return "yes" if b else "no"


def to_text(r: dict) -> str:
    task = r["task"]
    if task == "constituents":
        out = [f"constituents of Ind from P = {_braces(r['P'])} in {r['cartan']} "
               f"(trivial_on = {_braces(r['trivial_on'])}): {r['count']}"]
        out += ["  " + triple_text(t) for t in r["constituents"]]
    elif task in ("lattice", "steinberg-lattice"):
        out = _lat_text(r)
    elif task in ("adjoint-left", "adjoint-right"):
        kind = "left adjoint (Jacquet functor)" if task == "adjoint-left" else "right adjoint"
        out = [f"{kind} along P1 = {_braces(r['P1'])} in {r['cartan']} of {triple_text(r['input'])}"]
        if r["canonical"] != r["input"]:
            out.append(f"  canonical form: {triple_text(r['canonical'])}")
        out.append("  vanishes" if r["vanishes"] else f"  result: {triple_text(r['result'])}")
    elif task == "cuspidal":
        out = [f"cuspidality of {triple_text(r['input'])} in {r['cartan']}"]
        if r["canonical"] != r["input"]:
            out.append(f"  canonical form: {triple_text(r['canonical'])}")
        out += [f"  left cuspidal: {_yn(r['left_cuspidal'])}",
                f"  right cuspidal: {_yn(r['right_cuspidal'])}",
                f"  supercuspidal: {_yn(r['supercuspidal'])}"]
    elif task == "irreducible":
        out = [f"Ind from P1 = {_braces(r['P1'])} of {triple_text(r['input'])} in {r['cartan']}: "
               + ("irreducible" if r["irreducible"] else "reducible")
               + f" (P(sigma) = {_braces(r['P_sigma'])})"]
    elif task == "twist":
        out = [f"unramified twists of Ind from P1 = {_braces(r['P1'])} of {triple_text(r['input'])} "
               f"in {r['cartan']}",
               f"  candidate roots: {_braces(r['candidate_roots'])}",
               f"  active roots: {_braces(r['active_roots'])}"]
        if r["ignored_roots"]:
            out.append(f"  ignored (not candidates): {_braces(r['ignored_roots'])}")
        out += [f"  irreducible iff {c}" for c in r["conditions"]]
        out.append(f"  {r['locus']}")
    elif task == "geometric-lemma":
        out = [f"double cosets W_M \\ W / W_M1 for M = {_braces(r['P'])}, M1 = {_braces(r['P1'])} "
               f"in {r['cartan']} ({len(r['cells'])} cells, open first)"]
        for c in r["cells"]:
            if c["survivor"]:
                out.append(f"  {c['rep']}: survives")
            else:
                ok = "verified" if c["witness_verified"] else "NOT VERIFIED"
                out.append(f"  {c['rep']}: vanishes, witness {c['witness']} ({ok})")
        out.append(f"  surviving layer: {r['survivor']}")
    elif task == "weyl:coset-reps":
        out = [f"minimal representatives of W_Q \\ W for Q = {_braces(r['Q'])} in {r['cartan']}: "
               f"{r['count']} of |W| = {r['group_order']}"]
        out += ["  " + w for w in r["reps"]]
    elif task == "weyl:double-cosets":
        out = [f"minimal representatives of W_I \\ W / W_J for I = {_braces(r['I'])}, "
               f"J = {_braces(r['J'])} in {r['cartan']}: {r['count']}"]
        out += ["  " + w for w in r["reps"]]
    elif task == "verify:lemma55":
        out = [r["message"]]
    elif task == "verify:all":
        out = []
        for c in r["results"]:
            line = f"{'PASS' if c['passed'] else 'FAIL'} {c['system']} {c['name']} ({c['checked']} checked)"
            if not c["passed"]:
                line += f": {c['counterexample']}"
            out.append(line)
        out.append(r["message"])
    else:  # pragma: no cover - tasks are validated before dispatch
        raise InputError(f"no text rendering for task {task!r}")
    return "\n".join(out) + "\n"


def render(report: dict, fmt: str, lattice: SubrepLattice = None) -> str:
    if fmt == "json":
        return to_json(report)
    if fmt == "text":
        return to_text(report)
    if fmt == "dot":
        if lattice is None:
            raise InputError(f"--format dot is only available for lattice tasks, not {report['task']!r}")
        return lattice.to_dot(name=report["task"])
    raise InputError(f"unknown format {fmt!r}")
