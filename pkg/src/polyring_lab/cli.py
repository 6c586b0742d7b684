"""Command-line front end: ``polyring-lab GROUP COMMAND [options]``.

Exit codes: 0 success or witness found, 1 nothing found within budget (or a
failed recheck), 2 invalid input, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import signal
import sys
import warnings

import numpy as np

from . import algebras, ramsey, semigroups, terms, zariski
from .algebras import FiniteGroupoid, InstanceError, SymbolicPolyring
from .terms import ParseError, Signature, TermError, parse_term, to_text

OK, NONE, INVALID, VIOLATION = 0, 1, 2, 3


class Invalid(Exception):
    pass


class Outcome:
    """Report payload plus exit code and an optional short text rendering."""

    def __init__(self, report, code=OK, text=None, rows=None):
        self.report = report
        self.code = code
        self.text = text
        self.rows = rows


# --------------------------------------------------------------------------
# argument helpers


def _ints(text):
    try:
        return [int(v) for v in text.replace(" ", "").split(",") if v != ""]
    except ValueError:
        raise Invalid(f"expected comma-separated integers, got {text!r}") from None


def _signature(args, instance=None):
    if instance is not None and not isinstance(instance, FiniteGroupoid):
        return instance.signature
    ops = {}
    for item in (args.ops or "").split(","):
        if item:
            name, _, k = item.partition(":")
            ops[name] = int(k or 2)
    return Signature.of(**ops)


def _instance(spec):
    if spec is None:
        raise Invalid("--alg is required")
    try:
        inst = algebras.named_instance(spec)
    except FileNotFoundError:
        raise Invalid(f"no such instance: {spec}") from None
    if isinstance(inst, FiniteGroupoid):
        raise Invalid(f"{spec} is a groupoid, not a polyring")
    return inst


def _groupoid(spec):
    try:
        return semigroups.named_semigroup(spec)
    except (ValueError, IndexError):
        pass
    try:
        g = algebras.load_instance(spec)
    except FileNotFoundError:
        raise Invalid(f"no such groupoid: {spec}") from None
    if not isinstance(g, FiniteGroupoid):
        raise Invalid(f"{spec} has no mul table")
    return g


def _element(v, instance):
    if isinstance(instance, SymbolicPolyring):
        if isinstance(v, list):
            if len(v) != instance.dimension:
                raise Invalid(f"element {v} has wrong dimension")
            return tuple(int(c) for c in v)
        return instance.constant(int(v))
    if isinstance(v, list) or not 0 <= int(v) < instance.size:
        raise Invalid(f"element {v} outside the carrier")
    return int(v)


def _point(text, instance):
    """``1,2`` or a JSON list such as ``[[1,0],[0,1]]``."""
    text = text.strip()
    try:
        raw = json.loads(text if text.startswith("[") else f"[{text}]")
    except json.JSONDecodeError:
        raise Invalid(f"cannot read point {text!r}") from None
    return tuple(_element(v, instance) for v in raw)


def _coloring(args):
    if getattr(args, "csv", None):
        with open(args.csv, encoding="utf-8") as fh:
            return ramsey.Coloring.from_csv(fh.read())
    if not args.coloring:
        raise Invalid("a coloring is required (--coloring RULE or --csv FILE)")
    return ramsey.Coloring.from_rule(args.coloring, seed=args.seed)


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = [_jsonable(v) for v in x]
        return sorted(items) if isinstance(x, (set, frozenset)) else items
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, np.ndarray):
        return x.tolist()
    return x


def _braces(values):
    return "{" + ",".join(str(v) for v in sorted(values)) + "}"


# --------------------------------------------------------------------------
# term


def cmd_term_normalize(args):
    t = parse_term(args.term, _signature(args, _maybe_instance(args)))
    p = terms.normalize(t)
    return Outcome({"term": to_text(t), "normal_form": str(p), "monomials": len(p)}, text=str(p))


def cmd_term_degree(args):
    t = parse_term(args.term, _signature(args, _maybe_instance(args)))
    vs = set(_ints(args.vars)) if args.vars else None
    d = terms.degree(t, vs)
    return Outcome({"term": to_text(t), "vars": sorted(vs) if vs else None, "degree": d,
                    "upper_bound": True}, text=str(d))


def cmd_term_decompose_sum(args):
    t = parse_term(args.term, _signature(args, _maybe_instance(args)))
    n = args.n if args.n is not None else terms.max_var(t)
    G = terms.sum_decompose(t, n)
    x_vars = set(range(1, n + 1))
    return Outcome({"term": to_text(t), "n": n, "G": str(G), "degree_F": terms.degree(t),
                    "degree_x_G": terms.degree(G, x_vars)}, text=str(G))


def cmd_term_decompose_shift(args):
    inst = _instance(args.alg)
    t = parse_term(args.term, inst.signature)
    a = _point(args.point, inst)
    H = terms.shift_decompose(t, a, inst, len(a))
    return Outcome({"term": to_text(t), "point": list(a), "H": str(H), "degree_F": terms.degree(t),
                    "degree_H": terms.degree(H)}, text=str(H))


def _maybe_instance(args):
    return _instance(args.alg) if getattr(args, "alg", None) else None


# --------------------------------------------------------------------------
# alg


def cmd_alg_check(args):
    inst = _instance(args.alg)
    rep = algebras.check_axioms(inst, seed=args.seed)
    return Outcome(rep.to_dict(), OK if rep.ok else NONE, "ok" if rep.ok else f"{len(rep.failures)} failures")


def cmd_alg_enum_ops(args):
    inst = _instance(args.alg)
    cap = args.budget_nodes if args.budget_nodes is not None else args.cap
    res = algebras.enumerate_distributive_ops(inst, args.arity, cap=cap, mode=args.mode)
    report = {"arity": args.arity, "count": len(res.tables), "complete": res.complete, "mode": res.mode,
              "examined": res.examined}
    if args.tables:
        report["tables"] = [t.ravel().tolist() for t in res.tables]
    return Outcome(report, OK if res.complete else NONE, str(len(res.tables)))


def cmd_alg_groupoid_ring(args):
    g = _groupoid(args.groupoid)
    inst = algebras.groupoid_ring(g, args.modulus, args.support_bound, args.limit)
    doc = algebras.instance_to_json(inst)
    return Outcome({"size": inst.size, "instance": doc}, text=json.dumps(doc, sort_keys=True))


def cmd_alg_product(args):
    parts = [_instance(a) for a in args.alg]
    if any(isinstance(p, SymbolicPolyring) for p in parts):
        raise Invalid("direct products need finite instances")
    inst = algebras.direct_product(parts)
    doc = algebras.instance_to_json(inst)
    return Outcome({"size": inst.size, "instance": doc}, text=json.dumps(doc, sort_keys=True))


# --------------------------------------------------------------------------
# zariski


def _clone(args):
    inst = _instance(args.alg)
    if isinstance(inst, SymbolicPolyring):
        raise Invalid("clones need a finite instance")
    cap = args.budget_nodes if args.budget_nodes is not None else args.cap
    return zariski.term_clone(inst, args.n, cap)


def cmd_zariski_clone(args):
    c = _clone(args)
    report = {"n": args.n, "functions": len(c), "status": c.status}
    if args.list:
        report["terms"] = [to_text(f.provenance) for f in c.functions]
    return Outcome(report, OK if c.complete else NONE, f"{len(c)} functions ({c.status})")


def _subset(text, space, n):
    if not text:
        return None
    pts = []
    for chunk in text.split(";"):
        if chunk.strip():
            p = tuple(_ints(chunk))
            if len(p) != n:
                raise Invalid(f"point {chunk!r} is not in K^{n}")
            pts.append(p)
    missing = set(pts) - set(space.points)
    if missing:
        raise Invalid(f"points outside the space: {sorted(missing)}")
    return pts


def cmd_zariski_analyze(args):
    c = _clone(args)
    space = zariski.closed_base(c, args.union_arity)
    rep = zariski.analyze(space, _subset(args.subset, space, args.n))
    if args.compare_product and args.n > 1:
        line = zariski.closed_base(zariski.term_clone(c.instance, 1, args.cap))
        rep["product_comparison"] = zariski.compare_topologies(space, zariski.product_space(line, args.n))
    text = (f"points={rep['points']} discrete={rep['discrete']} ind={rep['ind']} "
            f"pseudocharacter={rep['space_pseudocharacter']}")
    return Outcome(rep, text=text)


def cmd_zariski_cantor(args):
    rep = zariski.verify_cantor_example(args.m)
    ok = rep["complement_identity"] and rep["cylinders_algebraic"]
    text = (f"complement_identity={rep['complement_identity']} "
            f"unit_vectors={rep['complement_identity_unit_vectors']} "
            f"cylinders_algebraic={rep['cylinders_algebraic']}")
    return Outcome(rep, OK if ok else NONE, text)


def cmd_zariski_certificate(args):
    inst = _instance(args.alg)
    sig = inst.signature
    ts = [parse_term(t, sig) for t in args.terms.split(";") if t.strip()]
    if args.a_kind == "graph":
        if not args.a_term:
            raise Invalid("--a-term is required for a graph set")
        A = zariski.FiniteValuedSet("graph", parse_term(args.a_term, sig))
    elif args.a_kind == "points":
        A = zariski.FiniteValuedSet("points", points=tuple(
            _point(p, inst) for p in (args.a_points or "").split(";") if p.strip()))
    else:
        A = zariski.FiniteValuedSet()
    budget = args.budget_nodes if args.budget_nodes is not None else 20000
    res = zariski.nowhere_dense_certificate(inst, ts, A, args.m, budget=budget, window=args.window,
                                            seed=args.seed, dims=args.dims)
    doc = res.to_json()
    return Outcome(doc, OK if isinstance(res, zariski.Certificate) else NONE,
                   json.dumps(doc, sort_keys=True))


def cmd_zariski_verify(args):
    try:
        with open(args.path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise Invalid(str(exc)) from None
    ok, problems = zariski.verify_certificate(text)
    return Outcome({"ok": ok, "problems": problems}, OK if ok else NONE,
                   "ok" if ok else "\n".join(problems))


# --------------------------------------------------------------------------
# ramsey


def cmd_ramsey_fs(args):
    seq = _ints(args.seq)
    s = ramsey.fs_set(seq, args.bound)
    return Outcome({"sequence": seq, "fs": sorted(s)}, text=_braces(s), rows=[[v] for v in sorted(s)])


def cmd_ramsey_fp(args):
    seq = _ints(args.seq)
    if args.groupoid:
        g = _groupoid(args.groupoid)
        if any(not 0 <= v < g.size for v in seq):
            raise Invalid("sequence elements must lie in the groupoid")
        s = ramsey.fp_set(seq, g)
    elif args.mod:
        s = ramsey.fp_set(seq, lambda a, b: a * b % args.mod)
    else:
        s = ramsey.fp_set(seq)
    return Outcome({"sequence": seq, "fp": sorted(s)}, text=_braces(s), rows=[[v] for v in sorted(s)])


def cmd_ramsey_schur(args):
    c = _coloring(args)
    hit = ramsey.schur_search(c, args.distinct)
    if hit is None:
        return Outcome({"N": c.N, "found": False}, NONE, "none")
    x, y, col = hit
    return Outcome({"N": c.N, "found": True, "x": x, "y": y, "sum": x + y, "color": col},
                   text=f"{x} + {y} = {x + y} (color {col})")


def cmd_ramsey_schur_number(args):
    res = ramsey.schur_number(args.r, args.budget_nodes, args.distinct)
    return Outcome(res.to_json(), text=f"{res.N} certificate {res.coloring.parts()}")


def _witness(w, coloring):
    if w is None:
        return Outcome({"found": False}, NONE, "none")
    ok = ramsey.recheck_witness(w, coloring)
    doc = {"found": True, "recheck": ok, **w.to_json()}
    return Outcome(doc, OK if ok else NONE, f"{w.sequences} color {w.color}")


def cmd_ramsey_folkman(args):
    c = _coloring(args)
    return _witness(ramsey.folkman_search(c, args.n, not args.allow_repeats), c)


def cmd_ramsey_hilbert(args):
    c = _coloring(args)
    return _witness(ramsey.hilbert_cube_search(c, args.n, args.b_count, not args.allow_repeats), c)


def cmd_ramsey_simultaneous(args):
    c = _coloring(args)
    return _witness(ramsey.simultaneous_fs_fp_search(c, args.L, not args.allow_repeats), c)


def cmd_ramsey_product_fs(args):
    gc = ramsey.GridColoring.from_rule(args.grid, seed=args.seed)
    return _witness(ramsey.product_fs_search(gc, args.m, args.L, args.budget_nodes), gc)


def cmd_ramsey_keylemma(args):
    if args.term:
        inst = _instance(args.alg)
        if isinstance(inst, SymbolicPolyring):
            raise Invalid("the Key Lemma check needs a finite instance")
        F = parse_term(args.term, inst.signature)
        kw = {"max_tuples": args.budget_nodes} if args.budget_nodes is not None else {}
        rep = ramsey.verify_key_lemma(inst, F, args.mode, args.trials, args.seed, args.n, **kw)
    else:
        rep = ramsey.key_lemma_campaign(args.pairs, args.tuples_per_pair, args.seed, args.max_degree,
                                        args.max_carrier)
    code = VIOLATION if rep.counterexamples else OK
    return Outcome(rep.to_json(), code, f"{rep.tuples} tuples, {rep.counterexamples} counterexamples")


# --------------------------------------------------------------------------
# sgrp


def cmd_sgrp_idempotents(args):
    g = _groupoid(args.groupoid)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        idem = semigroups.find_idempotents(g)
    report = {"idempotents": sorted(idem), "is_associative": g.is_associative()}
    if caught:
        report["warning"] = str(caught[0].message)
    if args.x is not None:
        report["idempotent_power"] = semigroups.idempotent_power(g, args.x)
    return Outcome(report, OK if idem else NONE, _braces(idem))


def cmd_sgrp_ideals(args):
    rep = semigroups.ideal_structure(_groupoid(args.groupoid))
    return Outcome(rep.to_json(), text=f"minimal left ideals {rep.minimal_left_ideals}, "
                                       f"smallest ideal {_braces(rep.smallest_ideal)}")


def cmd_sgrp_cancel(args):
    rep = semigroups.weak_left_cancellativity(_groupoid(args.groupoid))
    return Outcome(rep, text=f"max solutions {rep['max_solutions']}")


# --------------------------------------------------------------------------
# parser


def _global_flags(p, suppress):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--seed", type=int, default=d(0), help="seed for every randomized step")
    p.add_argument("--budget-nodes", type=int, default=d(None), help="search node / tuple cap")
    p.add_argument("--budget-seconds", type=float, default=d(None), help="wall-clock cap")
    p.add_argument("--format", choices=["text", "json", "csv"], default=d("text"))
    p.add_argument("--out", default=d(None), help="write the report here instead of stdout")


def build_parser():
    parser = argparse.ArgumentParser(prog="polyring-lab", description=__doc__.splitlines()[0])
    _global_flags(parser, False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, True)
    groups = parser.add_subparsers(dest="group", required=True)

    def leaf(group, name, fn, help_=None):
        p = group.add_parser(name, parents=[common], help=help_)
        p.set_defaults(fn=fn)
        return p

    term = groups.add_parser("term", help="terms and decompositions").add_subparsers(dest="cmd", required=True)
    for name, fn in [("normalize", cmd_term_normalize), ("degree", cmd_term_degree),
                     ("decompose-sum", cmd_term_decompose_sum)]:
        p = leaf(term, name, fn)
        p.add_argument("term")
        p.add_argument("--ops", help="signature as name:arity,... (default: none)")
        p.add_argument("--alg", help="take the signature from an instance")
        if name == "degree":
            p.add_argument("--vars", help="variable indices, e.g. 1,2 (default: all)")
        if name == "decompose-sum":
            p.add_argument("--n", type=int)
    p = leaf(term, "decompose-shift", cmd_term_decompose_shift)
    p.add_argument("term")
    p.add_argument("--alg", required=True)
    p.add_argument("--point", required=True, help="e.g. 1,2 or [[1,0],[0,1]]")

    alg = groups.add_parser("alg", help="polyring instances").add_subparsers(dest="cmd", required=True)
    p = leaf(alg, "check", cmd_alg_check)
    p.add_argument("--alg", required=True)
    p = leaf(alg, "enum-ops", cmd_alg_enum_ops)
    p.add_argument("--alg", required=True)
    p.add_argument("--arity", type=int, default=2)
    p.add_argument("--mode", choices=["auto", "structural", "brute", "generators"], default="auto")
    p.add_argument("--cap", type=int, default=100_000)
    p.add_argument("--tables", action="store_true", help="include the tables")
    p = leaf(alg, "groupoid-ring", cmd_alg_groupoid_ring)
    p.add_argument("--groupoid", required=True)
    p.add_argument("--modulus", type=int, required=True)
    p.add_argument("--support-bound", type=int)
    p.add_argument("--limit", type=int, default=4096)
    p = leaf(alg, "product", cmd_alg_product)
    p.add_argument("--alg", action="append", required=True, help="repeat for each factor")

    z = groups.add_parser("zariski", help="Zariski topologies").add_subparsers(dest="cmd", required=True)
    for name, fn in [("clone", cmd_zariski_clone), ("analyze", cmd_zariski_analyze)]:
        p = leaf(z, name, fn)
        p.add_argument("--alg", required=True)
        p.add_argument("--n", type=int, default=1)
        p.add_argument("--cap", type=int, default=4096)
        if name == "clone":
            p.add_argument("--list", action="store_true", help="list representative terms")
        else:
            p.add_argument("--union-arity", type=int)
            p.add_argument("--subset", help="points as 0,1;1,1")
            p.add_argument("--compare-product", action="store_true")
    p = leaf(z, "cantor", cmd_zariski_cantor)
    p.add_argument("--m", type=int, required=True)
    p = leaf(z, "certificate", cmd_zariski_certificate)
    p.add_argument("--alg", required=True)
    p.add_argument("--terms", required=True, help="semicolon-separated terms F_0;...;F_k")
    p.add_argument("--a-kind", choices=["empty", "graph", "points"], default="empty")
    p.add_argument("--a-term")
    p.add_argument("--a-points")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--window", type=int, default=4)
    p.add_argument("--dims", type=int)
    p = leaf(z, "verify", cmd_zariski_verify)
    p.add_argument("path")

    r = groups.add_parser("ramsey", help="finite-sums combinatorics").add_subparsers(dest="cmd", required=True)
    p = leaf(r, "fs", cmd_ramsey_fs)
    p.add_argument("seq")
    p.add_argument("--bound", type=int)
    p = leaf(r, "fp", cmd_ramsey_fp)
    p.add_argument("seq")
    p.add_argument("--mod", type=int)
    p.add_argument("--groupoid")
    p = leaf(r, "schur-number", cmd_ramsey_schur_number)
    p.add_argument("r", type=int)
    p.add_argument("--distinct", action="store_true")
    for name, fn in [("schur", cmd_ramsey_schur), ("folkman", cmd_ramsey_folkman),
                     ("hilbert", cmd_ramsey_hilbert), ("simultaneous", cmd_ramsey_simultaneous)]:
        p = leaf(r, name, fn)
        p.add_argument("--coloring", help="parity:N, mod:k:N, const:N, random:r:N, parts:1,4/2,3")
        p.add_argument("--csv", help="element,color file")
        if name == "schur":
            p.add_argument("--distinct", action="store_true")
        else:
            p.add_argument("--allow-repeats", action="store_true")
        if name in ("folkman", "hilbert"):
            p.add_argument("--n", type=int, required=True)
        if name == "hilbert":
            p.add_argument("--b-count", type=int, default=2)
        if name == "simultaneous":
            p.add_argument("--L", type=int, required=True)
    p = leaf(r, "product-fs", cmd_ramsey_product_fs)
    p.add_argument("--grid", required=True, help="sum-parity:AxB, checkerboard:AxB, random:r:AxB")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--L", type=int, required=True)
    p = leaf(r, "keylemma", cmd_ramsey_keylemma)
    p.add_argument("--alg")
    p.add_argument("--term", help="check one term (otherwise run the random campaign)")
    p.add_argument("--mode", choices=["exhaustive", "random"], default="exhaustive")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--n", type=int)
    p.add_argument("--pairs", type=int, default=500)
    p.add_argument("--tuples-per-pair", type=int, default=20)
    p.add_argument("--max-degree", type=int, default=3)
    p.add_argument("--max-carrier", type=int, default=12)

    s = groups.add_parser("sgrp", help="finite semigroups").add_subparsers(dest="cmd", required=True)
    for name, fn in [("idempotents", cmd_sgrp_idempotents), ("ideals", cmd_sgrp_ideals),
                     ("cancel", cmd_sgrp_cancel)]:
        p = leaf(s, name, fn)
        p.add_argument("--groupoid", required=True, help="z6-mul, left-zero:2, ... or a JSON file")
        if name == "idempotents":
            p.add_argument("--x", type=int, help="also report the idempotent power of x")
    return parser


# --------------------------------------------------------------------------
# output


def _flatten(prefix, value, rows):
    if isinstance(value, dict):
        for k, v in value.items():
            _flatten(f"{prefix}.{k}" if prefix else str(k), v, rows)
    else:
        rows.append([prefix, json.dumps(value) if isinstance(value, (list, dict)) else value])


def render(outcome, fmt, argv, seed):
    report = _jsonable(outcome.report)
    if fmt == "json":
        doc = {"report": report, "exit_code": outcome.code, "replay": {"argv": list(argv), "seed": seed}}
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if outcome.rows is not None:
            w.writerows(outcome.rows)
        else:
            rows = []
            _flatten("", report, rows)
            w.writerow(["key", "value"])
            w.writerows(rows)
        return buf.getvalue()
    if outcome.text is not None:
        return outcome.text + "\n"
    rows = []
    _flatten("", report, rows)
    width = max((len(k) for k, _ in rows), default=0)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in rows)


def _on_alarm(signum, frame):
    raise ramsey.BudgetExceeded("time budget exhausted")


def dispatch(args, argv=()):
    """Run a parsed command; returns (exit code, rendered report)."""
    if args.budget_nodes is not None and args.budget_nodes < 0 or \
            args.budget_seconds is not None and args.budget_seconds < 0:
        return INVALID, "budgets must be non-negative\n"
    timer = args.budget_seconds is not None and hasattr(signal, "SIGALRM")
    if timer:
        signal.signal(signal.SIGALRM, _on_alarm)
        signal.setitimer(signal.ITIMER_REAL, max(args.budget_seconds, 1e-3))
    try:
        outcome = args.fn(args)
    except ramsey.BudgetExceeded as exc:
        outcome = Outcome({"found": False, "reason": str(exc)}, NONE, f"budget exhausted: {exc}")
    except ramsey.KeyLemmaViolation as exc:
        outcome = Outcome({"violation": str(exc)}, VIOLATION, f"invariant violation: {exc}")
    except zariski.CoverViolation as exc:
        outcome = Outcome({"error": str(exc), "point": list(exc.point)}, INVALID, f"error: {exc}")
    except (Invalid, ParseError, TermError, InstanceError, zariski.CertificateError,
            semigroups.NotAssociative, ValueError, OSError) as exc:
        outcome = Outcome({"error": str(exc)}, INVALID, f"error: {exc}")
    finally:
        if timer:
            signal.setitimer(signal.ITIMER_REAL, 0)
    return outcome.code, render(outcome, args.format, argv, args.seed)


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INVALID if exc.code else 0
    code, text = dispatch(args, argv)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
