"""Command line front-end.

    parind TASK [PROBLEM.json | -] [--format text|json|dot] [--out PATH] [payload flags]

The problem file is a JSON object with a ``cartan`` entry, optionally the
``task`` and the task's payload fields; flags override or supply any of
them.  Exit codes: 0 success, 1 failed verification, 2 malformed input,
3 semantic error, 4 resource guard.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Optional

from . import calculus, serialize, verify, weyl
from .errors import InputError, InvalidM1Triple, ParindError, SemanticError
from .parabolic import ParabolicSet
from .rootsys import cartan_from_spec, build_root_system
from .triples import GTriple, require_consistent, sigma_descriptor, validate_triple

log = logging.getLogger("parind")

_TRIPLE = ("P", "trivial_on", "Q", "supercuspidal", "core_supercuspidal")

# task -> (payload fields allowed, fields required)
TASKS = {
    "constituents": (("P", "trivial_on", "supercuspidal", "core_supercuspidal"), ()),
    "lattice": (_TRIPLE + ("P1",), ("P1",)),
    "steinberg-lattice": (("P", "Q"), ()),
    "adjoint-left": (_TRIPLE + ("P1",), ("P1",)),
    "adjoint-right": (_TRIPLE + ("P1",), ("P1",)),
    "cuspidal": (_TRIPLE, ()),
    "irreducible": (_TRIPLE + ("P1",), ("P1",)),
    "twist": (_TRIPLE + ("P1", "declared_nr"), ("P1",)),
    "geometric-lemma": (("P", "P1"), ()),
    "weyl:coset-reps": (("Q",), ()),
    "weyl:double-cosets": (("I", "J"), ()),
    "verify:lemma55": ((), ()),
    "verify:all": (("types", "rank_bound"), ()),
}
LATTICE_TASKS = ("lattice", "steinberg-lattice")
_SUBSET_FIELDS = ("P", "trivial_on", "Q", "P1", "declared_nr", "I", "J")
_BOOL_FIELDS = ("supercuspidal", "core_supercuspidal")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="parind", allow_abbrev=False,
        description="Combinatorics of parabolically induced mod-p representations.",
        epilog="tasks: " + ", ".join(TASKS))
    p.add_argument("args", nargs="*", metavar="TASK|PROBLEM",
                   help="task name and/or problem file ('-' reads stdin)")
    p.add_argument("--task", choices=sorted(TASKS))
    p.add_argument("--format", choices=("text", "json", "dot"), default="text")
    p.add_argument("--out", help="write the report here instead of stdout")
    cart = p.add_mutually_exclusive_group()
    cart.add_argument("--cartan-type", help="e.g. A2, B3, A1xA2")
    cart.add_argument("--cartan-matrix", help="JSON matrix, e.g. '[[2,-1],[-1,2]]'")
    for name in _SUBSET_FIELDS:
        flag = "--" + name.replace("_", "-")
        p.add_argument(flag, dest=name, metavar="LABELS",
                       help=f"comma separated simple roots for {name} ('' for none)")
    for name in _BOOL_FIELDS:
        p.add_argument("--" + name.replace("_", "-"), dest=name, choices=("true", "false"))
    p.add_argument("--types", help="comma separated Cartan types for verify:all")
    p.add_argument("--rank-bound", type=int, dest="rank_bound")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


# ---------------------------------------------------------------------------
# problem assembly and validation

def _split(text: str) -> list:
    return [x.strip() for x in text.split(",") if x.strip()]


def _read_problem(path: Optional[str]) -> dict:
    if path is None:
        return {}
    try:
        if path == "-":
            raw = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                raw = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise InputError(f"{path}: the problem must be a JSON object")
    return data


def assemble(ns: argparse.Namespace) -> dict:
    """Merge the problem file with command line overrides."""
    args = list(ns.args)
    task = ns.task
    if task is None and args and args[0] in TASKS:
        task = args.pop(0)
    if len(args) > 1:
        raise InputError(f"unexpected arguments: {args[1:]}")
    problem = _read_problem(args[0] if args else None)
    if task is not None:
        if "task" in problem and problem["task"] != task:
            log.info("task %s from the command line overrides %r", task, problem["task"])
        problem["task"] = task
    if ns.cartan_type is not None:
        problem["cartan"] = ns.cartan_type
    if ns.cartan_matrix is not None:
        try:
            problem["cartan"] = {"matrix": json.loads(ns.cartan_matrix)}
        except json.JSONDecodeError as exc:
            raise InputError(f"--cartan-matrix: invalid JSON: {exc.msg}") from None
    for name in _SUBSET_FIELDS:
        val = getattr(ns, name)
        if val is not None:
            problem[name] = _split(val)
    for name in _BOOL_FIELDS:
        val = getattr(ns, name)
        if val is not None:
            problem[name] = val == "true"
    if ns.types is not None:
        problem["types"] = _split(ns.types)
    if ns.rank_bound is not None:
        problem["rank_bound"] = ns.rank_bound
    return problem


def validate_problem(problem: dict) -> str:
    task = problem.get("task")
    if task is None:
        raise InputError("no task given (first argument, --task, or 'task' in the problem file)")
    if task not in TASKS:
        raise InputError(f"field 'task': unknown task {task!r}")
    allowed, required = TASKS[task]
    known = {"task", "cartan"} | set(allowed)
    unknown = sorted(set(problem) - known)
    if unknown:
        raise InputError(f"unknown or inapplicable fields for task {task}: {unknown}")
    if task != "verify:all" and "cartan" not in problem:
        raise InputError("field 'cartan' is required")
    for name in required:
        if name not in problem:
            raise InputError(f"field {name!r} is required for task {task}")
    for name in _SUBSET_FIELDS:
        if name in problem:
            val = problem[name]
            if not isinstance(val, list) or not all(isinstance(x, str) for x in val):
                raise InputError(f"field {name!r} must be a list of simple root labels")
            if len(set(val)) != len(val):
                raise InputError(f"field {name!r} repeats a label")
    for name in _BOOL_FIELDS:
        if name in problem and not isinstance(problem[name], bool):
            raise InputError(f"field {name!r} must be true or false")
    if "types" in problem:
        if not isinstance(problem["types"], list) or not all(isinstance(x, str) for x in problem["types"]):
            raise InputError("field 'types' must be a list of Cartan type strings")
    if "rank_bound" in problem:
        rb = problem["rank_bound"]
        if not isinstance(rb, int) or isinstance(rb, bool) or rb < 0:
            raise InputError("field 'rank_bound' must be a non-negative integer")
    return task


def _subset(rs, problem: dict, name: str, default=()) -> frozenset:
    labels = problem.get(name, list(default))
    bad = [x for x in labels if x not in rs.labels]
    if bad:
        raise InputError(f"field {name!r}: unknown simple root label(s) {bad}; known: {list(rs.labels)}")
    return rs.indices(labels)


def _triple(rs, problem: dict, ambient: frozenset) -> GTriple:
    P = _subset(rs, problem, "P")
    T = _subset(rs, problem, "trivial_on")
    Q = _subset(rs, problem, "Q", problem.get("P", ()))
    sc = problem.get("supercuspidal", True)
    sigma = require_consistent(sigma_descriptor(rs, P, T, sc, core_supercuspidal=problem.get("core_supercuspidal"),
                                                ambient=ambient))
    return validate_triple(GTriple(sigma.levi, sigma, ParabolicSet(rs, Q, ambient)))


def _m1_triple(rs, problem: dict, P1: ParabolicSet) -> GTriple:
    """The triple of the Levi M_1, with construction errors reported against M_1."""
    try:
        return _triple(rs, problem, P1.members)
    except SemanticError as exc:
        raise InvalidM1Triple(f"not a valid triple of the Levi M1 = {P1}: {exc}") from exc


# ---------------------------------------------------------------------------
# dispatch

def run_task(task: str, problem: dict):
    """Return ``(report, lattice_or_None)``."""
    if task == "verify:all":
        types = problem.get("types", list(verify.DEFAULT_TYPES))
        rb = problem.get("rank_bound")
        return serialize.verify_all_report(types, rb, verify.verify_all(types, rb)), None

    datum = cartan_from_spec(problem["cartan"])
    rs = build_root_system(datum)
    full = rs.delta

    if task == "constituents":
        P = _subset(rs, problem, "P")
        T = _subset(rs, problem, "trivial_on")
        sigma = require_consistent(sigma_descriptor(
            rs, P, T, problem.get("supercuspidal", True),
            core_supercuspidal=problem.get("core_supercuspidal")))
        cons = calculus.constituents(sigma.levi, sigma)
        return serialize.constituents_report(rs, sigma.levi, T, cons), None
    if task == "lattice":
        P1 = ParabolicSet(rs, _subset(rs, problem, "P1"), full)
        lat = calculus.subrep_lattice(P1, _m1_triple(rs, problem, P1))
        return serialize.lattice_report(task, lat), lat
    if task == "steinberg-lattice":
        P = ParabolicSet(rs, _subset(rs, problem, "P"), full)
        Q = ParabolicSet(rs, _subset(rs, problem, "Q", problem.get("P", ())), full)
        lat = calculus.steinberg_lattice(P, Q)
        return serialize.lattice_report(task, lat), lat
    if task in ("adjoint-left", "adjoint-right"):
        P1 = ParabolicSet(rs, _subset(rs, problem, "P1"), full)
        t = _triple(rs, problem, full)
        fn = calculus.left_adjoint if task == "adjoint-left" else calculus.right_adjoint
        res = fn(P1, t)
        return serialize.adjoint_report(task, P1, t, calculus.canonical(t), res), None
    if task == "cuspidal":
        t = _triple(rs, problem, full)
        return serialize.cuspidal_report(t, calculus.canonical(t), calculus.cuspidality(t)), None
    if task == "irreducible":
        P1 = ParabolicSet(rs, _subset(rs, problem, "P1"), full)
        t = _m1_triple(rs, problem, P1)
        irr = calculus.is_irreducible_induction(P1, t)
        return serialize.irreducible_report(P1, t, calculus.canonical(t), irr), None
    if task == "twist":
        P1 = ParabolicSet(rs, _subset(rs, problem, "P1"), full)
        t = _m1_triple(rs, problem, P1)
        rep = calculus.unramified_twist_conditions(P1, t, _subset(rs, problem, "declared_nr"))
        return serialize.twist_report(P1, t, rep), None
    if task == "geometric-lemma":
        P = ParabolicSet(rs, _subset(rs, problem, "P"), full)
        P1 = ParabolicSet(rs, _subset(rs, problem, "P1"), full)
        return serialize.geometric_lemma_dict(calculus.geometric_lemma_report(P, P1)), None
    if task == "weyl:coset-reps":
        Q = _subset(rs, problem, "Q")
        W = weyl.generate_weyl(rs)
        return serialize.coset_reps_report(rs, Q, weyl.min_coset_reps(rs, Q).reps, len(W)), None
    if task == "weyl:double-cosets":
        I, J = _subset(rs, problem, "I"), _subset(rs, problem, "J")
        return serialize.double_cosets_report(rs, I, J, weyl.double_coset_reps(rs, I, J)), None
    if task == "verify:lemma55":
        nelem, npairs, chk = verify.separation_summary(rs)
        return serialize.separation_report(rs, nelem, npairs, chk), None
    raise InputError(f"unknown task {task!r}")  # pragma: no cover


def _failed(report: dict) -> bool:
    return report.get("passed") is False


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors itself
        return 0 if exc.code == 0 else 2
    logging.basicConfig(level=logging.INFO if ns.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s", stream=sys.stderr)
    try:
        problem = assemble(ns)
        task = validate_problem(problem)
        if ns.format == "dot" and task not in LATTICE_TASKS:
            raise InputError(f"--format dot is only available for {', '.join(LATTICE_TASKS)}")
        report, lat = run_task(task, problem)
        text = serialize.render(report, ns.format, lat)
    except ParindError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    if task == "verify:all" and not report["results"] and ns.format != "text":
        print("warning: nothing checked", file=sys.stderr)
    if ns.out:
        try:
            with open(ns.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: cannot write {ns.out}: {exc.strerror}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    return 1 if _failed(report) else 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
