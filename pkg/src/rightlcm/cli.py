"""Command-line front end: condition checks, normal forms, norms, ideal lattices and oracle runs.

    rightlcm check TARGET [--conditions D1,D3,...]
    rightlcm normal-form TARGET EXPR
    rightlcm norm TARGET EXPR
    rightlcm lattice TARGET [--radius R] [--format dot|text]
    rightlcm oracle TARGET [--radius R] [--pairs N]
    rightlcm quotient TARGET
    rightlcm reconstruct TARGET

TARGET is a catalog name or a config file.  ``RIGHTLCM_BUDGET`` sets the
default candidate budget; ``--budget`` overrides it.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from typing import Callable, Dict, List

from . import catalog, lab
from .algebra import StarAlgebra
from .automata import MealyElement, ZappaSzep
from .config import ConfigError, SemigroupConfig, load
from .core import FamilyMismatch, Semigroup, Status, UnsupportedFamily, Verdict, monoid_of, shortlex_ball, unit_ball
from .expressions import ExpressionError, parse_expression
from .oracle import generate_ball, oracle_diagonal_norm
from .suite import run_suite


def _selfsim_only(fn):
    def run(S, budget):
        if not isinstance(S, ZappaSzep):
            raise UnsupportedFamily("defined only for self-similar families")
        return fn(S.group, budget)
    return run


CONDITIONS: Dict[str, Callable[[Semigroup, object], Verdict]] = {
    "C1": lab.check_C1,
    "C2": lab.check_C2,
    "D1": lab.check_D1,
    "D3": lab.check_D3,
    "effectiveness": lab.check_effectiveness,
    "strong-effectiveness": lab.check_strong_effectiveness,
    "recurrent": _selfsim_only(lambda G, b: lab.check_recurrent(G, b)),
    "right-cancellative": _selfsim_only(lambda G, b: lab.check_selfsim_right_cancellative(G, b.depth, b)),
}


def format_witness(S: Semigroup, w) -> str:
    """Render witnesses built from elements, units, dicts and tuples."""
    M = monoid_of(S)

    def fmt(x):
        if x is None:
            return "none"
        if isinstance(x, MealyElement) and isinstance(S, ZappaSzep):
            return S.group.format(x)
        try:
            if M.contains(x):
                return M.format_element(x)
        except Exception:  # witness parts need not be elements
            pass
        if isinstance(x, dict):
            return "{" + ", ".join(f"{fmt(k)}: {fmt(v)}" for k, v in x.items()) + "}"
        if isinstance(x, (list, tuple)):
            return "(" + ", ".join(fmt(y) for y in x) + ")"
        if isinstance(x, float):
            return "inf" if x == float("inf") else repr(x)
        return str(x)

    return fmt(w)


def _record(S, name, v: Verdict) -> str:
    lines = [f"{name}: {v.status.value}"]
    if v.witness is not None:
        lines.append(f"  witness: {format_witness(S, v.witness)}")
    if v.basis:
        lines.append(f"  basis: {v.basis}")
    if v.budget is not None:
        lines.append(f"  budget: {v.budget.describe()}")
    return "\n".join(lines)


def _budget(cfg: SemigroupConfig, args):
    kw = {}
    for attr, key in (("radius", "radius"), ("depth", "depth"), ("budget", "max_candidates")):
        val = getattr(args, attr, None)
        if val is not None:
            kw[key] = val
    return replace(cfg.budget, **kw)


# -- commands ----------------------------------------------------------------

def cmd_check(cfg, args, out) -> int:
    S = cfg.semigroup
    budget = _budget(cfg, args)
    names = [c.strip() for c in (args.conditions or "").split(",") if c.strip()]
    unknown = [c for c in names if c not in CONDITIONS]
    if unknown:
        raise ConfigError(f"unknown condition(s) {', '.join(unknown)}; known: {', '.join(CONDITIONS)}",
                          "--conditions")
    explicit = bool(names)
    names = names or list(CONDITIONS)
    out.append(f"# {cfg.name}: {S.name}")
    bad = []
    for name in names:
        try:
            v = CONDITIONS[name](S, budget)
        except UnsupportedFamily as exc:
            if explicit:
                out.append(f"{name}: not applicable\n  reason: {exc}")
            continue
        out.append(_record(S, name, v))
        if v.status is Status.FAILS and cfg.expect.get(name) == "holds":
            bad.append(name)
        elif cfg.expect.get(name) and v.status.value != cfg.expect[name]:
            out.append(f"  note: expected {cfg.expect[name]}")
    if bad:
        out.append(f"# FAILS where holds was expected: {', '.join(bad)}")
    return 1 if bad else 0


def cmd_normal_form(cfg, args, out) -> int:
    alg = StarAlgebra(cfg.semigroup)
    out.append(str(parse_expression(alg, args.expression)))
    return 0


def cmd_norm(cfg, args, out) -> int:
    alg = StarAlgebra(cfg.semigroup)
    d = parse_expression(alg, args.expression)
    if not d.is_diagonal():
        raise ExpressionError(f"{d} is not a combination of ideal projections", 0, args.expression)
    res = alg.diagonal_norm(d, _budget(cfg, args))
    S = alg.S
    if res.status is Status.UNKNOWN:
        out.append("norm: unknown (a projection could not be decided within the budget)")
        return 1
    if res.value is not None:
        out.append(f"norm: {res.value}")
    else:
        out.append(f"norm: sqrt({res.squared}) (irrational; squared value exact)")
    if res.witness:
        A, t = res.witness
        out.append(f"  attained on ideals: {{{', '.join(S.format_element(x) for x in A)}}}")
        out.append(f"  at basis vector: {format_witness(cfg.semigroup, t)}")
    if args.radius is not None:
        ball = generate_ball(cfg.semigroup, args.radius)
        low = oracle_diagonal_norm(d.diagonal_terms(), ball)
        out.append(f"  truncated lower bound at radius {args.radius}: squared {low.squared}")
    return 0


def lattice_graph(S: Semigroup, radius: int):
    """Ideal classes of the ball, Hasse edges of inclusion, and unit-orbit labels."""
    M = monoid_of(S)
    nodes = list(dict.fromkeys(M.canonical(x) for x in shortlex_ball(M, radius)))
    below = {p: [q for q in nodes if q != p and M._left_divide(p, q) is not None] for p in nodes}
    edges = []
    for p in nodes:
        for q in below[p]:
            # Hasse edge unless some r sits strictly between pS and qS
            if not any(q in below[r] for r in below[p]):
                edges.append((p, q))
    parent = {p: p for p in nodes}

    def find(p):
        while parent[p] != p:
            parent[p] = parent[parent[p]]
            p = parent[p]
        return p

    units = unit_ball(M, 1) if M.identity is not None else []
    index = set(nodes)
    for p in nodes:
        for x in units:
            q = M.canonical(M._mul(x, p))
            if q in index:
                parent[find(q)] = find(p)
    roots = {}
    orbit = {p: roots.setdefault(find(p), len(roots)) for p in nodes}
    return nodes, edges, orbit


_PALETTE = ["lightblue", "palegreen", "lightsalmon", "khaki", "plum", "lightgrey",
            "aquamarine", "pink", "wheat", "lightcyan"]


def cmd_lattice(cfg, args, out) -> int:
    S = cfg.semigroup
    M = monoid_of(S)
    radius = 2 if args.radius is None else args.radius
    nodes, edges, orbit = lattice_graph(S, radius)
    name = {p: M.format_element(p) for p in nodes}
    if args.format == "text":
        out.append(f"# ideal classes pS in the ball of radius {radius}: {len(nodes)}")
        for p in nodes:
            out.append(f"node {name[p]} orbit {orbit[p]}")
        for p, q in edges:
            out.append(f"edge {name[p]} > {name[q]}")
        return 0
    out.append("digraph ideals {")
    out.append("  node [style=filled];")
    for i, p in enumerate(nodes):
        label = (name[p] + "S").replace('"', '\\"')
        color = _PALETTE[orbit[p] % len(_PALETTE)]
        out.append(f'  n{i} [label="{label}", fillcolor={color}];')
    ids = {p: i for i, p in enumerate(nodes)}
    for p, q in edges:
        out.append(f"  n{ids[p]} -> n{ids[q]};")
    out.append("}")
    return 0


def cmd_oracle(cfg, args, out) -> int:
    radius = 4 if args.radius is None else args.radius
    res = run_suite(cfg.semigroup, radius, pairs=args.pairs, seed=args.seed, budget=_budget(cfg, args))
    out.append(f"{cfg.name}: {res.summary()}")
    return 0 if res.ok else 1


def cmd_quotient(cfg, args, out) -> int:
    S = cfg.semigroup
    budget = _budget(cfg, args)
    Q = lab.build_quotient(S, budget)
    out.append(f"# quotient of {S.name} by left multiplication with units")
    out.append(_record(S, "C1", Q.c1))
    for k, v in Q.checks.items():
        out.append(f"checked {k}: {v}")
    radius = 2 if args.radius is None else args.radius
    classes = list(dict.fromkeys(Q.cls(x) for x in shortlex_ball(S, radius)))
    out.append(f"classes in the ball of radius {radius}: {len(classes)}")
    out.append("  " + " ".join(Q.format(c) for c in classes))
    return 0


def cmd_reconstruct(cfg, args, out) -> int:
    S = cfg.semigroup
    budget = _budget(cfg, args)
    r = lab.reconstruct_semidirect(S, budget=budget)
    if r.ok:
        out.append(f"{cfg.name}: S is the semidirect product of its units by the quotient on the "
                   f"ball of radius {budget.radius} ({r.elements} elements, {r.pairs} products checked)")
        return 0
    out.append(f"{cfg.name}: reconstruction failed: {r.message}; "
               f"counterexample {format_witness(S, r.counterexample)}")
    return 1


COMMANDS = {
    "check": cmd_check, "normal-form": cmd_normal_form, "norm": cmd_norm, "lattice": cmd_lattice,
    "oracle": cmd_oracle, "quotient": cmd_quotient, "reconstruct": cmd_reconstruct,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rightlcm", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help_, expression=False):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("target", help="catalog name or config file (catalog: " + ", ".join(catalog.CATALOG) + ")")
        if expression:
            sp.add_argument("expression")
        sp.add_argument("--radius", type=int, help="ball radius")
        sp.add_argument("--depth", type=int, help="word depth for self-similar searches")
        sp.add_argument("--budget", type=int, help="maximum number of search candidates")
        sp.add_argument("--format", choices=("dot", "text"), default="text" if name != "lattice" else "dot")
        sp.add_argument("-o", "--output", help="write the report to this file")
        return sp

    add("check", "run condition checkers").add_argument(
        "--conditions", default="", help="comma-separated list; empty runs all: " + ", ".join(CONDITIONS))
    add("normal-form", "reduce an algebra expression", expression=True)
    add("norm", "exact norm of a diagonal element", expression=True)
    add("lattice", "ideal lattice of a ball as a graph")
    sp = add("oracle", "crosscheck against the truncated regular representation")
    sp.add_argument("--pairs", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    add("quotient", "quotient by left unit multiplication")
    add("reconstruct", "rebuild S as units semidirect quotient")
    return p


def main(argv: List[str] = None) -> int:
    args = build_parser().parse_args(argv)
    out: List[str] = []
    try:
        cfg = load(args.target)
        code = COMMANDS[args.command](cfg, args, out)
    except (ConfigError, ExpressionError, FamilyMismatch) as exc:
        print(f"rightlcm: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"rightlcm: {args.command}: {exc}", file=sys.stderr)
        return 2
    except lab.ReplayError as exc:
        print(f"rightlcm: internal check failed: {exc}", file=sys.stderr)
        return 3
    text = "\n".join(out) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
