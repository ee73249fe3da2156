"""Command-line front end.

Commands: ball, order, check, poly, curvature, export.  Exit status:
0 on success (conjecture outcomes never change it), 2 on usage errors,
3 when a resource cap or timeout produced only a partial report, 1 when
a theorem-backed check fails.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from itertools import combinations

from . import curvature as curvature_mod
from . import orders, polynomials, posets, projections, reflections, serialize
from .ball import enumerate_ball
from .errors import CoxkitError, DomainError, ResourceError
from .matrices import longest_length, parse_coxeter_matrix

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_PARTIAL = 3

THEOREM_CHECKS = ("graded", "projections", "refinement", "sperner", "phi", "monoid")
CONJECTURE_CHECKS = ("logconcave", "shellability", "curvature")
ALL_CHECKS = THEOREM_CHECKS + CONJECTURE_CHECKS


class UsageError(Exception):
    pass


def _load_config(path: str) -> dict:
    out = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise UsageError(f"bad config line: {line!r}")
            key, value = line.split("=", 1)
            out[key.strip().replace("-", "_")] = value.strip()
    return out


def _resolve_matrix(args):
    if getattr(args, "matrix", None):
        return parse_coxeter_matrix(args.matrix)
    if getattr(args, "type", None):
        return parse_coxeter_matrix(args.type)
    raise UsageError("one of --type or --matrix is required")


def _resolve_radius(args, matrix):
    raw = getattr(args, "radius", None)
    if raw is None or raw == "auto":
        length = longest_length(matrix)
        if length is None:
            raise UsageError(
                "--radius is required for this system (no finite longest element)")
        return length
    try:
        value = int(raw)
    except ValueError as exc:
        raise UsageError(f"bad radius {raw!r}") from exc
    if value < 0:
        raise UsageError("radius must be >= 0")
    return value


def _build_ball(args):
    matrix = _resolve_matrix(args)
    radius = _resolve_radius(args, matrix)
    cap = getattr(args, "cap_elements", None) or 2_000_000
    ball = enumerate_ball(matrix, radius, cap=int(cap))
    if (getattr(args, "radius", None) in (None, "auto")
            and not ball.is_complete_group):
        raise CoxkitError("auto radius did not close the group; file a bug")
    return ball


def _parse_k_range(raw, default_hi):
    if raw is None:
        return list(range(default_hi + 1))
    raw = str(raw)
    if ".." in raw:
        lo, hi = raw.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(x) for x in raw.split(",")]


def _max_k(ball, table):
    """Smallest k whose slice already holds every reflection."""
    top = max((ball.length(t) for t in table.reflections), default=1)
    return (top - 1) // 2


def _emit(args, text):
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, payload):
    _emit(args, json.dumps(payload, indent=2, sort_keys=True) + "\n")


# -- subcommands ----------------------------------------------------------


def cmd_ball(args) -> int:
    ball = _build_ball(args)
    _emit_json(args, serialize.ball_to_json_dict(ball))
    print(f"ball: {len(ball)} elements, radius {ball.radius}, "
          f"complete={ball.is_complete_group}", file=sys.stderr)
    return EXIT_OK


def _order_poset(args, ball):
    kind = args.kind
    table = reflections.reflections_in_ball(ball)
    if kind == "torder":
        return reflections.t_order_poset(table), ball
    if kind == "bruhat":
        n = len(ball)
        pairs = [(u, v) for u in range(n) for v in range(n)
                 if u != v and ball.bruhat_leq(u, v)]
        return posets.Poset.from_relation(
            list(range(n)), pairs, rank=[ball.length(w) for w in range(n)],
            metadata={"kind": "bruhat"}), ball
    k = int(args.k or 0)
    if kind in ("weak", "intermediate"):
        kk = 0 if kind == "weak" else k
        return orders.intermediate_poset(
            ball, reflections.t_k_set(table, kk)), ball
    if kind == "absolute":
        alt = orders.k_absolute_length_all(table, k)
        poset = orders.k_absolute_poset(alt)
        # lattice-type structure is reported, not asserted
        poset.metadata["meet_semilattice"] = posets.is_meet_semilattice(poset)
        return poset, ball
    raise UsageError(f"unknown order kind {kind!r}")


def cmd_order(args) -> int:
    ball = _build_ball(args)
    poset, ball = _order_poset(args, ball)
    fmt = args.format or "json"
    if fmt == "json":
        _emit_json(args, serialize.poset_to_json_dict(poset))
    elif fmt == "dot":
        label = lambda w: "".join(str(c + 1) for c in ball.word(w)) or "e"
        _emit(args, serialize.poset_to_dot(poset, label_fn=label))
    elif fmt == "csv":
        rows = "\n".join(f"{i},{j}" for i, j in poset.covers)
        _emit(args, "lower,upper\n" + rows + ("\n" if rows else ""))
    else:
        raise UsageError(f"unknown format {fmt!r}")
    return EXIT_OK


def cmd_poly(args) -> int:
    ball = _build_ball(args)
    table = reflections.reflections_in_ball(ball)
    ks = _parse_k_range(args.k, _max_k(ball, table))
    rows = []
    for k in ks:
        poly = polynomials.gen_poly(orders.k_absolute_length_all(table, k))
        rows.append({
            "k": k,
            "coeffs": list(poly.coeffs),
            "log_concave": polynomials.is_log_concave(poly),
            "unimodal": polynomials.is_unimodal(poly),
            "truncated": poly.truncated,
        })
    _emit_json(args, {"schema": 1, "type": args.type or args.matrix,
                      "polynomials": rows})
    return EXIT_OK


def cmd_curvature(args) -> int:
    ball = _build_ball(args)
    table = reflections.reflections_in_ball(ball)
    k = int(args.k or 0)
    graph = orders.omega_graph(ball, reflections.t_k_set(table, k))
    report = curvature_mod.curvature_spectrum(graph)
    if (args.format or "json") == "csv":
        _emit(args, serialize.curvature_to_csv(report))
    else:
        _emit_json(args, serialize.curvature_to_json_dict(report))
    return EXIT_OK


def cmd_export(args) -> int:
    with open(args.input, encoding="utf-8") as fh:
        data = json.load(fh)
    if "covers" not in data:
        raise UsageError("input is not a poset JSON file")
    poset = serialize.poset_from_json_dict(data)
    fmt = args.format or "dot"
    if fmt == "dot":
        _emit(args, serialize.poset_to_dot(poset))
    elif fmt == "json":
        _emit_json(args, serialize.poset_to_json_dict(poset))
    elif fmt == "csv":
        rows = "\n".join(f"{i},{j}" for i, j in poset.covers)
        _emit(args, "lower,upper\n" + rows + ("\n" if rows else ""))
    else:
        raise UsageError(f"unknown format {fmt!r}")
    return EXIT_OK


# -- the check suite ---------------------------------------------------------


def _ideal_sets(ball, table, mode):
    """The reflection sets X used by the ideal-quantified checks."""
    tpos = reflections.t_order_poset(table)
    if mode == "all":
        for ideal in posets.order_ideals(tpos):
            yield frozenset(tpos.nodes[i] for i in ideal)
    else:
        for k in range(_max_k(ball, table) + 1):
            yield frozenset(reflections.t_k_set(table, k))


def _check_graded(ball, table, args):
    failures = []
    count = 0
    for X in _ideal_sets(ball, table, args.ideal):
        count += 1
        J = frozenset(s for s in ball.matrix.generators
                      if ball.right[ball.identity][s] in X)
        poset = orders.intermediate_poset(ball, X)
        qj = projections.projection_map(ball, J, "Q")
        rank_fn = lambda w: ball.length(w) - ball.length(qj(w))
        rep = posets.check_graded(poset, rank_fn)
        if not rep.ok:
            failures.append({"X_size": len(X), "bad_covers": rep.bad_covers[:5]})
        for i, j in poset.covers:
            if ball.length(poset.nodes[j]) - ball.length(poset.nodes[i]) != 1:
                failures.append({"X_size": len(X), "length_gap_cover": [i, j]})
                break
        comps = poset.components()
        minreps = sum(1 for w in range(len(ball))
                      if not (ball.left_descents(w) & J))
        if len(comps) != minreps:
            failures.append({"X_size": len(X), "components": len(comps),
                             "expected": minreps})
        else:
            base = poset.subposet(comps[0])
            for comp in comps[1:]:
                iso, _ = posets.poset_isomorphic(base, poset.subposet(comp))
                if not iso:
                    failures.append({"X_size": len(X),
                                     "non_isomorphic_component": True})
                    break
    return {"ok": not failures, "ideals_checked": count, "failures": failures}


def _check_projections(ball, table, args):
    failures = []
    gens = list(ball.matrix.generators)
    count = 0
    for X in _ideal_sets(ball, table, args.ideal):
        poset = orders.intermediate_poset(ball, X)
        for r in range(len(gens) + 1):
            for J in combinations(gens, r):
                count += 1
                pmap = projections.projection_map(ball, J, "P")
                rep = projections.is_order_preserving(pmap, poset)
                if not rep.ok:
                    failures.append({"X_size": len(X), "J": list(J),
                                     "violations": rep.violations[:5]})
    return {"ok": not failures, "maps_checked": count, "failures": failures}


def _check_refinement(ball, table, args):
    ks = _parse_k_range(args.k, _max_k(ball, table))
    rep = orders.refinement_chain_check(table, max(ks))
    return {"ok": rep.ok,
            "containments": [[str(a), str(b), ok] for a, b, ok in rep.containments],
            "equals_bruhat_at": rep.equals_bruhat_at}


def _check_sperner(ball, table, args):
    ks = _parse_k_range(args.k, _max_k(ball, table))
    rows = []
    ok = True
    for k in ks:
        poset = orders.intermediate_poset(ball, reflections.t_k_set(table, k))
        rep = posets.strong_sperner_check(poset, rank_fn=lambda w: ball.length(w))
        ok = ok and rep.ok
        rows.append({"k": k, "ok": rep.ok,
                     "rows": [[r.h, r.flow_value, r.top_rank_sum, r.ok]
                              for r in rep.rows]})
    return {"ok": ok, "per_k": rows}


def _check_phi(ball, table, args):
    name = ball.matrix.name or ""
    ks = _parse_k_range(args.k, _max_k(ball, table))
    n = len(ball)
    bruhat_pairs = [(u, v) for u in range(n) for v in range(n)
                    if u != v and ball.bruhat_leq(u, v)]
    bruhat = posets.Poset.from_relation(
        list(range(n)), bruhat_pairs, rank=[ball.length(w) for w in range(n)])
    rows = []
    ok = True
    for k in ks:
        pk = orders.intermediate_poset(ball, reflections.t_k_set(table, k))
        image = projections.phi_k_image_poset(ball, pk)
        graded = posets.is_graded(image)
        row = {"k": k, "image_size": image.n, "graded": graded}
        if name.startswith("A"):
            iso, _ = posets.poset_isomorphic(image, bruhat)
            row["isomorphic_to_bruhat"] = iso
            row["ok"] = iso
        elif name == "B3" and k == 0:
            row["ok"] = not graded  # the expected negative
        else:
            row["ok"] = True  # informational
        ok = ok and row["ok"]
        rows.append(row)
    return {"ok": ok, "per_k": rows}


def _check_monoid(ball, table, args):
    ks = _parse_k_range(args.k, _max_k(ball, table))
    gens = [projections.projection_map(ball, [s], "P")
            for s in ball.matrix.generators]
    rows = []
    ok = True
    for k in ks:
        pk = orders.intermediate_poset(ball, reflections.t_k_set(table, k))
        rep = projections.projection_monoid(ball, gens, poset=pk)
        good = (rep.size == len(ball) and rep.idempotent and rep.braid_ok
                and rep.order_preserving)
        ok = ok and good
        rows.append({"k": k, "size": rep.size, "idempotent": rep.idempotent,
                     "braid_ok": rep.braid_ok,
                     "order_preserving": rep.order_preserving, "ok": good})
    return {"ok": ok, "per_k": rows}


def _check_logconcave(ball, table, args):
    ks = _parse_k_range(args.k, _max_k(ball, table))
    rows = []
    for k in ks:
        poly = polynomials.gen_poly(orders.k_absolute_length_all(table, k))
        rows.append({"k": k, "coeffs": list(poly.coeffs),
                     "log_concave": polynomials.is_log_concave(poly),
                     "unimodal": polynomials.is_unimodal(poly)})
    return {"ok": True, "conjecture": True, "per_k": rows}


def _check_shellability(ball, table, args):
    ks = _parse_k_range(args.k, _max_k(ball, table))
    rows = []
    for k in ks:
        inter = orders.intermediate_poset(ball, reflections.t_k_set(table, k))
        absol = orders.k_absolute_poset(orders.k_absolute_length_all(table, k))
        for flavor, poset in (("intermediate", inter), ("absolute", absol)):
            for c in ball.coxeter_elements():
                if not poset.leq(ball.identity, c):
                    continue
                interval = poset.interval(ball.identity, c)
                verdict = posets.shellability(posets.order_complex(interval))
                rows.append({"k": k, "order": flavor,
                             "coxeter_element": list(ball.word(c)),
                             "status": verdict.status})
    return {"ok": True, "conjecture": True, "intervals": rows}


def _check_curvature(ball, table, args):
    ks = _parse_k_range(args.k, _max_k(ball, table))
    rows = []
    for k in ks:
        graph = orders.omega_graph(ball, reflections.t_k_set(table, k))
        rep = curvature_mod.curvature_spectrum(graph)
        rows.append({
            "k": k, "edges": len(rep.records), "skipped": len(rep.errors),
            "kappa_min": str(rep.kappa_min()), "kappa_max": str(rep.kappa_max()),
        })
    return {"ok": True, "conjecture": True, "per_k": rows}


_CHECK_FNS = {
    "graded": _check_graded,
    "projections": _check_projections,
    "refinement": _check_refinement,
    "sperner": _check_sperner,
    "phi": _check_phi,
    "monoid": _check_monoid,
    "logconcave": _check_logconcave,
    "shellability": _check_shellability,
    "curvature": _check_curvature,
}


def cmd_check(args) -> int:
    names = [c.strip() for c in (args.checks or "").split(",") if c.strip()]
    if not names:
        raise UsageError("at least one check must be enabled via --checks")
    for name in names:
        if name not in _CHECK_FNS:
            raise UsageError(f"unknown check {name!r} "
                             f"(available: {', '.join(ALL_CHECKS)})")
    ball = _build_ball(args)
    table = reflections.reflections_in_ball(ball)
    deadline = None
    if args.timeout_secs:
        deadline = time.monotonic() + float(args.timeout_secs)
    report = {"schema": 1, "type": args.type or args.matrix,
              "radius": ball.radius, "elements": len(ball), "checks": {}}
    partial = False
    theorem_failed = False
    for name in names:
        if deadline is not None and time.monotonic() > deadline:
            report["checks"][name] = {"ok": None, "skipped": "timeout"}
            partial = True
            continue
        try:
            result = _CHECK_FNS[name](ball, table, args)
        except ResourceError as exc:
            report["checks"][name] = {"ok": None, "skipped": str(exc)}
            partial = True
            continue
        report["checks"][name] = result
        if name in THEOREM_CHECKS and not result["ok"]:
            theorem_failed = True
    report["status"] = ("partial" if partial
                        else "failed" if theorem_failed else "ok")
    _emit_json(args, report)
    if partial:
        return EXIT_PARTIAL
    return EXIT_CHECK_FAILED if theorem_failed else EXIT_OK


# -- argument parsing ----------------------------------------------------------


def _add_common(sub):
    sub.add_argument("--type", help="named Coxeter type, e.g. A3, B4, I2(7)")
    sub.add_argument("--matrix", help="explicit matrix, e.g. '1 3; 3 1'")
    sub.add_argument("--radius", help="ball radius, or 'auto' for full finite groups")
    sub.add_argument("--k", help="slice parameter: single value, 'a..b', or comma list")
    sub.add_argument("--out", help="output file (default stdout)")
    sub.add_argument("--format", help="dot | json | csv")
    sub.add_argument("--cap-elements", dest="cap_elements",
                     help="ball element cap (default 2000000)")
    sub.add_argument("--timeout-secs", dest="timeout_secs",
                     help="soft wall-clock budget for check suites")
    sub.add_argument("--config", help="key=value file supplying flag defaults")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coxkit",
        description="Length-bounded Coxeter group balls, reflection orders, "
                    "and theorem/conjecture check suites.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("ball", help="enumerate a ball and emit JSON")
    _add_common(p)
    p.set_defaults(fn=cmd_ball)

    p = subs.add_parser("order", help="build an order on a ball")
    _add_common(p)
    p.add_argument("--kind", default="intermediate",
                   help="weak | intermediate | absolute | bruhat | torder")
    p.set_defaults(fn=cmd_order)

    p = subs.add_parser("check", help="run a verification suite")
    _add_common(p)
    p.add_argument("--checks", help="comma list: " + ",".join(ALL_CHECKS))
    p.add_argument("--ideal", default="tk", choices=("tk", "all"),
                   help="quantify ideal checks over T_k slices or all ideals")
    p.set_defaults(fn=cmd_check)

    p = subs.add_parser("poly", help="distance generating polynomials")
    _add_common(p)
    p.set_defaults(fn=cmd_poly)

    p = subs.add_parser("curvature", help="edge curvature spectrum")
    _add_common(p)
    p.set_defaults(fn=cmd_curvature)

    p = subs.add_parser("export", help="convert a saved poset JSON file")
    _add_common(p)
    p.add_argument("--in", dest="input", required=True, help="input JSON file")
    p.set_defaults(fn=cmd_export)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "config", None):
            defaults = _load_config(args.config)
            for key, value in defaults.items():
                if getattr(args, key, None) in (None, "tk", "intermediate"):
                    setattr(args, key, value)
        return args.fn(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_PARTIAL
    except (CoxkitError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
