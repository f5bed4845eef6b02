"""Command line interface.

Exit codes: 0 success, 1 the queried property fails, 2 usage error,
3 invalid input (unreadable or malformed system file or expression).
"""
from __future__ import annotations

import argparse
import json
import random
import sys as _sys
from pathlib import Path

from . import expr
from .corpus import SuiteResult, corpus, invariant_suite
from .dynamics import Gbds, condition_L, condition_L_bruteforce, cycles
from .errors import DomainError, ParseError, UsageError, ValidationError
from .fixtures import FIXTURES
from .genalg import AlgElement, core_form, diag_leq, orthogonalize, refine_family
from .groupoid import (
    bisection_in_iso_direct,
    bisection_in_iso_interior,
    convolve,
    effectiveness_suite,
    fn_adjoint,
    fn_equal,
    kappa,
)
from .scalar import Scalar
from .paths import boundary_paths, build_graph, singular_vertices
from .sysfile import load_system, system_to_data


class Outcome:
    def __init__(self, data: dict, lines: list[str], code: int = 0):
        self.data, self.lines, self.code = data, lines, code


def _load(source: str) -> Gbds:
    if source.startswith("@"):
        name = source[1:].upper()
        if name not in FIXTURES:
            raise ParseError(f"unknown built-in system {source!r}; choose from {', '.join('@' + k for k in FIXTURES)}")
        return FIXTURES[name]()
    if not Path(source).exists():
        raise ParseError(f"no such system file: {source}")
    return load_system(source)


def _verdict(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


# -- commands ----------------------------------------------------------------------------------

def cmd_check(sys: Gbds, args) -> Outcome:
    data = system_to_data(sys)
    data["defaulted_ideals"] = list(sys.defaulted_ideals)
    data["singular_atoms"] = [sys.algebra.names[a] for a in singular_vertices(sys)]
    lines = [
        f"valid system: {sys.algebra.atom_count} atom(s), {len(sys.alphabet)} letter(s)",
        "atoms: " + ", ".join(sys.algebra.names),
        "alphabet: " + ", ".join(sys.alphabet),
    ]
    for l in sys.alphabet:
        imgs = ", ".join(f"{n}->{{{','.join(data['actions'][l][n])}}}" for n in sys.algebra.names)
        note = " (defaulted to the range)" if l in sys.defaulted_ideals else ""
        lines.append(f"  θ_{l}: {imgs}; I_{l} generated by {{{','.join(data['ideals'][l])}}}{note}")
    lines.append("singular atoms: " + (", ".join(data["singular_atoms"]) or "none"))
    return Outcome(data, lines)


def cmd_condition_l(sys: Gbds, args) -> Outcome:
    res = condition_L(sys)
    brute = condition_L_bruteforce(sys)
    agree = res.holds == (brute is None)
    data = {
        "condition_L": res.holds,
        "cross_check_agrees": agree,
        "certificate": [
            {"base": list(b.names()), "stop": reason} for b, reason in res.certificate
        ],
    }
    if res.witness:
        w, A = res.witness
        data["witness"] = {"word": expr.format_word(sys, w), "set": list(A.names())}
        lines = [f"FAIL: witness cycle without exits ({expr.format_word(sys, w)}, {expr.format_atoms(sys, A)})"]
    else:
        lines = [f"PASS: no cycle without exits (searched {len(res.certificate)} base sets)"]
    lines.append(f"brute-force cross-check: {'agrees' if agree else 'DISAGREES'}")
    code = 0 if res.holds and agree else 1
    return Outcome(data, lines, code)


def cmd_cycles(sys: Gbds, args) -> Outcome:
    if args.max_len < 1:
        raise UsageError("--max-len must be at least 1")
    infos = cycles(sys, args.max_len)
    data = {
        "cycles": [
            {
                "word": expr.format_word(sys, c.word),
                "cycle_atoms": list(c.cycle_atoms.names()),
                "no_exit_atoms": list(c.no_exit_atoms.names()),
            }
            for c in infos
        ]
    }
    lines = [f"{len(infos)} words of length <= {args.max_len} carry cycles"]
    for c in infos:
        ne = expr.format_atoms(sys, c.no_exit_atoms) if c.no_exit_atoms else "none"
        lines.append(
            f"  {expr.format_word(sys, c.word)}: cycle on subsets of {expr.format_atoms(sys, c.cycle_atoms)}, "
            f"without exits on subsets of {ne}"
        )
    return Outcome(data, lines)


def cmd_graph(sys: Gbds, args) -> Outcome:
    g = build_graph(sys)
    fv = lambda v: expr.format_vertex(sys, v)
    edges = [
        {"letter": l, "atom": sys.algebra.names[c], "source": fv(g.source[(l, c)]), "range": fv(g.range[(l, c)])}
        for l, c in g.edges
    ]
    data = {"vertices": [fv(v) for v in g.vertices], "edges": edges}
    lines = ["vertices: " + ", ".join(data["vertices"])]
    lines += [f"  e^{e['letter']}_{e['atom']}: {e['range']} <- {e['source']}  (range <- source)" for e in edges]
    return Outcome(data, lines)


def cmd_boundary(sys: Gbds, args) -> Outcome:
    e = boundary_paths(sys, args.depth, infinite=not args.no_infinite)
    data = {
        "depth": args.depth,
        "finite": [expr.format_path(sys, p) for p in e.finite],
        "prefixes": [expr.format_path(sys, p) for p in e.prefixes],
        "eventually_periodic": [expr.format_boundary(sys, mu) for mu in e.infinite],
    }
    lines = [f"finite boundary paths of length <= {args.depth}: {len(e.finite)}"]
    lines += ["  " + s for s in data["finite"]]
    lines.append(f"regular-ended prefixes of length {args.depth}: {len(e.prefixes)}")
    lines += ["  " + s for s in data["prefixes"]]
    if not args.no_infinite:
        lines.append(f"eventually periodic paths (prefix + period <= {args.depth}): {len(e.infinite)}")
        lines += ["  " + s for s in data["eventually_periodic"]]
    return Outcome(data, lines)


def cmd_mul(sys: Gbds, args) -> Outcome:
    x = expr.parse_element(sys, args.x)
    y = expr.parse_element(sys, args.y)
    z = x * y
    ok = fn_equal(convolve(kappa(x), kappa(y)), kappa(z))
    data = {"product": expr.format_element(z), "oracle_agrees": ok}
    lines = [expr.format_element(z), f"groupoid cross-check: {_verdict(ok)}"]
    return Outcome(data, lines, 0 if ok else 1)


def cmd_eq(sys: Gbds, args) -> Outcome:
    x = expr.parse_element(sys, args.x)
    y = expr.parse_element(sys, args.y)
    ok = fn_equal(kappa(x), kappa(y))
    data = {"equal": ok, "syntactically_equal": x == y}
    lines = ["equal" if ok else "not equal"]
    return Outcome(data, lines, 0 if ok else 1)


def cmd_normalize_diag(sys: Gbds, args) -> Outcome:
    x = expr.parse_element(sys, args.x)
    if not x.is_diagonal():
        raise UsageError("normalize-diag needs a diagonal element (left word = right word in every term)")
    family = list(x.terms)
    refined = refine_family(sys, family)
    q = orthogonalize(sys, refined)
    # x = sum over w of (sum of coefficients of the terms above w) q_w
    coeffs = {}
    for w in refined:
        coeffs[w] = sum((x.terms[u] for u in family if diag_leq(sys, w, u)), Scalar(0))
    rebuilt = AlgElement.zero(sys)
    for w in refined:
        rebuilt = rebuilt + q[w].scale(coeffs[w])
    ok = fn_equal(kappa(x), kappa(rebuilt))
    fq = lambda w: expr.format_element(q[w])
    data = {
        "refined_family": [expr.format_triple(sys, w) for w in refined],
        "projections": {expr.format_triple(sys, w): fq(w) for w in refined},
        "coefficients": {expr.format_triple(sys, w): str(coeffs[w]) for w in refined},
        "reconstruction_holds": ok,
    }
    lines = [f"refined family ({len(refined)} members):"]
    for w in refined:
        lines.append(f"  q[{expr.format_triple(sys, w)}] = {fq(w)}   coefficient {coeffs[w]}")
    lines.append(f"x = sum of coefficient * q: {_verdict(ok)}")
    return Outcome(data, lines, 0 if ok else 1)


def cmd_core(sys: Gbds, args) -> Outcome:
    x = expr.parse_element(sys, args.x)
    rows, all_ok = [], True
    for t, _ in x.sorted_terms():
        form = core_form(sys, t)
        normal = None
        if form is not None:
            k = kappa(AlgElement.of(sys, t))
            normal = fn_equal(convolve(k, fn_adjoint(k)), convolve(fn_adjoint(k), k))
        all_ok &= form is not None
        rows.append({"term": expr.format_triple(sys, t), "form": form, "normal_by_oracle": normal})
    data = {"in_core_span": all_ok, "terms": rows}
    names = {1: "alpha = beta", 2: "alpha = beta gamma, no-exit cycle", 3: "beta = alpha gamma, no-exit cycle"}
    lines = [("every term is an abelian core generator" if all_ok else "some term is not an abelian core generator")]
    for r in rows:
        what = names.get(r["form"], "not a core generator")
        extra = "" if r["normal_by_oracle"] is None else f"; normal: {r['normal_by_oracle']}"
        lines.append(f"  {r['term']}: {what}{extra}")
    return Outcome(data, lines, 0 if all_ok else 1)


def cmd_iso_interior(sys: Gbds, args) -> Outcome:
    t = expr.parse_group_elem(sys, args.t)
    cyl = expr.parse_cylinder(sys, args.cyl)
    ok = bisection_in_iso_interior(sys, t, cyl)
    direct = bisection_in_iso_direct(sys, t, cyl)
    data = {"in_interior": ok, "enumeration_agrees": ok == direct}
    lines = [
        f"{{{expr.format_group_elem(sys, t)}}} x N({expr.format_cylinder(sys, cyl)}) "
        + ("lies in the interior of the isotropy" if ok else "is not inside the isotropy"),
        f"fixed-point enumeration: {'agrees' if ok == direct else 'DISAGREES'}",
    ]
    return Outcome(data, lines, 0 if ok and ok == direct else 1)


def cmd_effective(sys: Gbds, args) -> Outcome:
    r = effectiveness_suite(sys, shadow_depth=args.depth)
    data = {
        "condition_L": r.condition_L,
        "topologically_free": r.topologically_free,
        "effective": r.effective,
        "principal_shadow": r.principal_shadow,
        "consistent": r.consistent,
    }
    lines = [f"{k}: {v}" for k, v in data.items()]
    if r.witness_bisection:
        t, cyl = r.witness_bisection
        lines.append(
            f"non-unit interior isotropy bisection: {{{expr.format_group_elem(sys, t)}}} x N({expr.format_cylinder(sys, cyl)})"
        )
    return Outcome(data, lines, 0 if r.consistent else 1)


def cmd_corpus(args) -> Outcome:
    systems = corpus(args.seed, args.count, args.max_atoms)
    rng = random.Random(args.seed)
    total = SuiteResult()
    rows = []
    for i, s in enumerate(systems):
        per = invariant_suite(s, rng, pairs=args.pairs)
        for name, (p, n) in per.checks.items():
            c = total.checks.setdefault(name, [0, 0])
            c[0] += p
            c[1] += n
        rows.append({
            "index": i,
            "atoms": s.algebra.atom_count,
            "letters": len(s.alphabet),
            "condition_L": condition_L(s).holds,
            "ok": per.ok,
        })
    data = {
        "seed": args.seed,
        "count": args.count,
        "checks": {k: {"passed": p, "total": n} for k, (p, n) in total.checks.items()},
        "systems": rows,
        "all_passed": total.ok,
    }
    width = max(len(k) for k in total.checks)
    lines = [f"corpus seed={args.seed} count={args.count}"]
    lines += [f"  {k:<{width}}  {p:>6}/{n:<6} {_verdict(p == n)}" for k, (p, n) in total.checks.items()]
    lines.append(f"systems with condition L: {sum(r['condition_L'] for r in rows)}/{len(rows)}")
    return Outcome(data, lines, 0 if total.ok else 1)


# -- wiring ------------------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gbds", description="Finite generalized Boolean dynamical systems.")
    p.add_argument("--format", choices=["text", "json"], default="text", help="output format")
    sub = p.add_subparsers(dest="command", required=True)

    def with_system(name, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("system", help="system file (YAML/JSON) or @F1..@F4")
        return sp

    with_system("check", "validate a system file")
    with_system("condition-l", "decide Condition (L)")
    sp = with_system("cycles", "list cycles and their no-exit parts")
    sp.add_argument("--max-len", type=int, default=3)
    with_system("graph", "print the topological graph")
    sp = with_system("boundary", "enumerate boundary paths")
    sp.add_argument("--depth", type=int, default=2)
    sp.add_argument("--no-infinite", action="store_true", help="skip eventually periodic paths")
    sp = with_system("mul", "multiply two elements")
    sp.add_argument("x")
    sp.add_argument("y")
    sp = with_system("eq", "decide equality of two elements")
    sp.add_argument("x")
    sp.add_argument("y")
    sp = with_system("normalize-diag", "write a diagonal element over orthogonal projections")
    sp.add_argument("x")
    sp = with_system("core", "test abelian core membership of each term")
    sp.add_argument("x")
    sp = with_system("iso-interior", "is {t} x N(alpha, A) in the isotropy interior")
    sp.add_argument("t", help="group element such as 'a', 'ab^-1', 'e'")
    sp.add_argument("cyl", help="cylinder such as 'a.{v}'")
    sp = with_system("effective", "Condition (L), topological freeness, effectiveness")
    sp.add_argument("--depth", type=int, default=2, help="depth of the principal shadow")
    sp = sub.add_parser("corpus", help="run the invariant suite on random systems")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--count", type=int, default=20)
    sp.add_argument("--max-atoms", type=int, default=4)
    sp.add_argument("--pairs", type=int, default=20, help="random product pairs per system")
    return p


COMMANDS = {
    "check": cmd_check,
    "condition-l": cmd_condition_l,
    "cycles": cmd_cycles,
    "graph": cmd_graph,
    "boundary": cmd_boundary,
    "mul": cmd_mul,
    "eq": cmd_eq,
    "normalize-diag": cmd_normalize_diag,
    "core": cmd_core,
    "iso-interior": cmd_iso_interior,
    "effective": cmd_effective,
}


def run(argv: list[str] | None = None) -> tuple[int, str]:
    """Run the CLI and return (exit code, output text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), ""
    try:
        if args.command == "corpus":
            if args.count < 0 or not 1 <= args.max_atoms <= 6:
                raise UsageError("--count must be >= 0 and --max-atoms in 1..6")
            out = cmd_corpus(args)
        else:
            out = COMMANDS[args.command](_load(args.system), args)
    except (ParseError, ValidationError) as exc:
        return 3, _error(args, "invalid input", exc)
    except (UsageError, DomainError) as exc:
        return 2, _error(args, "usage error", exc)
    if args.format == "json":
        return out.code, json.dumps(out.data, sort_keys=True, indent=2, ensure_ascii=False)
    return out.code, "\n".join(out.lines)


def _error(args, kind: str, exc: Exception) -> str:
    if getattr(args, "format", "text") == "json":
        return json.dumps({"error": kind, "message": str(exc)}, sort_keys=True, ensure_ascii=False)
    return f"{kind}: {exc}"


def main(argv: list[str] | None = None) -> int:
    code, text = run(argv)
    if text:
        stream = _sys.stdout if code in (0, 1) else _sys.stderr
        print(text, file=stream)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
