"""Command-line interface.

    esdom <compute|enumerate|verify|formula|tree|audit|rank|roles|generate>
          [--file F | --gen SPEC] [--set S] [--script F] [--all-sets]
          [--construct] [--cap N] [--quiet]

Machine-readable lines come first as ``key=value`` (or ``CHECK ...`` for
audits); anything meant for people follows a ``# ---`` separator. With
``--quiet`` only the values of the machine lines are printed.

Exit codes: 0 success, 1 a property failed, 2 usage or input error,
3 solver cap exceeded.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import sys
from typing import NamedTuple

from . import audit as audit_mod
from .closed_forms import construct_optimal_set, gamma_esp_formula, n_esp_formula
from .edgelist import format_edge_list, read_edge_list
from .exceptions import CapExceededError, InvalidGraphError, NotEsdSetError
from .generators import FamilyQuery, generate
from .graph import VertexSet, is_tree
from .rank import adjacency_matrix, rank, rank_bound_check
from .solver import DEFAULT_CAP, Mode, enumerate_minimum_esd, solve
from .trees import TreeBuildScript, build, deconstruct, esd_set_from_coloring, recognize
from .verify import check_esd, classify_roles, esd_violation

COMMANDS = ("compute", "enumerate", "verify", "formula", "tree", "audit", "rank", "roles", "generate")


class CliResult(NamedTuple):
    code: int
    stdout: str
    stderr: str


class _Output:
    def __init__(self):
        self.machine: list = []
        self.human: list[str] = []
        self.code = 0

    def kv(self, key, value):
        self.machine.append((key, value))

    def raw(self, line):
        self.machine.append(line)

    def render(self, quiet: bool) -> str:
        lines = []
        for item in self.machine:
            if isinstance(item, tuple):
                lines.append(str(item[1]) if quiet else f"{item[0]}={item[1]}")
            else:
                lines.append(item)
        if self.human and not quiet:
            lines.append("# ---")
            lines.extend(self.human)
        return "\n".join(lines) + ("\n" if lines else "")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="esdom", description="End super domination toolkit")
    parser.add_argument("command", choices=COMMANDS)
    source = parser.add_mutually_exclusive_group()
    source.add_argument("--file", help="edge-list file")
    source.add_argument("--gen", help="family spec such as cycle:8 or kbip:3,4")
    parser.add_argument("--set", dest="vset", help='vertex set such as "0,3"')
    parser.add_argument("--script", help="tree build script file")
    parser.add_argument("--all-sets", action="store_true", help="list every minimum ESD-set")
    parser.add_argument("--construct", action="store_true", help="formula: print the explicit optimal set")
    parser.add_argument("--cap", type=int, default=DEFAULT_CAP, help="solver order cap")
    parser.add_argument("--quiet", action="store_true", help="print values only")
    return parser


def _graph(args):
    if args.file:
        return read_edge_list(args.file)
    if args.gen:
        return generate(args.gen)
    raise InvalidGraphError("this command needs --file or --gen")


def _need_set(args, g) -> VertexSet:
    if args.vset is None:
        raise InvalidGraphError("this command needs --set")
    return VertexSet.parse(args.vset, g.n)


def cmd_compute(args, out: _Output):
    g = _graph(args)
    out.kv("n", g.n)
    out.kv("m", g.m)
    out.kv("gamma", solve(g, Mode.DOM, args.cap).value)
    out.kv("gamma_sp", solve(g, Mode.SUPER, args.cap).value)
    res = solve(g, Mode.ESD, args.cap)
    out.kv("gamma_esp", res.value)
    out.kv("esd_set", res.witness_set)
    out.kv("certificate", res.certificate)
    for u, v in res.certificate.witness.items():
        out.human.append(f"vertex {u} (degree {res.certificate.degrees[u]}) is privately witnessed by {v}")


def cmd_enumerate(args, out: _Output):
    g = _graph(args)
    res = enumerate_minimum_esd(g, materialize=args.all_sets, cap=args.cap)
    out.kv("gamma_esp", res.value)
    out.kv("N_esp", res.count)
    for s in res.sets or ():
        out.kv("set", s)


def cmd_verify(args, out: _Output):
    g = _graph(args)
    s = _need_set(args, g)
    reason = esd_violation(g, s)
    if reason is None:
        out.kv("result", "PASS")
        out.kv("certificate", check_esd(g, s))
    else:
        out.kv("result", "FAIL")
        out.kv("reason", reason)
        out.code = 1


def cmd_formula(args, out: _Output):
    if not args.gen:
        raise InvalidGraphError("formula needs --gen")
    q = FamilyQuery.parse(args.gen)
    out.kv("family", q)
    values = []
    for key, fn in (("gamma_esp", gamma_esp_formula), ("N_esp", n_esp_formula)):
        try:
            values.append((key, fn(q)))
        except InvalidGraphError as exc:
            out.human.append(f"{key}: {exc}")
    if not values:
        raise InvalidGraphError(f"no closed form is known for {q}")
    for key, value in values:
        out.kv(key, value)
    if args.construct:
        out.kv("set", construct_optimal_set(q))


def cmd_tree(args, out: _Output):
    if args.script:
        with open(args.script) as fh:
            colored = build(TreeBuildScript.parse(fh.read()))
        out.kv("n", colored.tree.n)
        out.kv("coloring", colored.coloring_string())
        out.kv("blue", esd_set_from_coloring(colored))
        out.kv("edges", ",".join(f"{u}-{v}" for u, v in colored.tree.edges()))
        return
    g = _graph(args)
    if not is_tree(g):
        raise InvalidGraphError("input is not a tree")
    colored = recognize(g)
    if colored is None:
        out.kv("in_family", 0)
        out.raw("NOT-IN-FAMILY")
        return
    out.kv("in_family", 1)
    out.kv("coloring", colored.coloring_string())
    out.kv("blue", esd_set_from_coloring(colored))
    script, order = deconstruct(colored)
    out.human.append("build script (labels of the built tree):")
    out.human.extend(str(script).splitlines())
    out.human.append("built label -> input vertex: " + ",".join(f"{i}->{v}" for i, v in enumerate(order)))


def cmd_audit(args, out: _Output):
    g = _graph(args)
    report = audit_mod.audit_all(g, args.cap)
    for record in report.records:
        out.raw(record.to_line())
    counts = {s: sum(r.status is s for r in report.records) for s in audit_mod.Status}
    out.kv("summary", " ".join(f"{s.value.lower()}={c}" for s, c in counts.items()))
    if not report.ok:
        out.code = 1


def cmd_rank(args, out: _Output):
    g = _graph(args)
    out.kv("rank", rank(adjacency_matrix(g)))
    gamma = solve(g, Mode.ESD, args.cap).value
    out.kv("gamma_esp", gamma)
    if not g.is_connected():
        out.kv("bound", "SKIP")
        out.human.append("the rank bound is only stated for connected graphs")
        return
    rb = rank_bound_check(g, gamma)
    out.kv("n_minus_gamma_esp", rb.n_minus_gamma)
    out.kv("holds", int(rb.holds))
    out.kv("equality", int(rb.equality))
    out.kv("complete_bipartite", int(rb.complete_bipartite))
    if not (rb.holds and rb.characterization_ok):
        out.code = 1


def cmd_roles(args, out: _Output):
    g = _graph(args)
    s = _need_set(args, g) if args.vset is not None else solve(g, Mode.ESD, args.cap).witness_set
    out.kv("esd_set", s)
    try:
        roles = classify_roles(g, s)
    except NotEsdSetError as exc:
        out.kv("result", "FAIL")
        out.kv("reason", exc.reason)
        out.code = 1
        return
    for v, role in roles.items():
        out.kv(f"role[{v}]", role.value)


def cmd_generate(args, out: _Output):
    g = _graph(args)
    for line in format_edge_list(g).splitlines():
        out.raw(line)


HANDLERS = {name: globals()[f"cmd_{name}"] for name in COMMANDS}


def run(argv) -> CliResult:
    """Run one command; returns the exit code and captured output."""
    err = io.StringIO()
    with contextlib.redirect_stderr(err):
        try:
            args = build_parser().parse_args(argv)
        except SystemExit as exc:
            return CliResult(int(exc.code or 0), "", err.getvalue())
    out = _Output()
    try:
        HANDLERS[args.command](args, out)
    except CapExceededError as exc:
        return CliResult(3, "", f"esdom: {exc}\n")
    except (InvalidGraphError, OSError) as exc:
        return CliResult(2, "", f"esdom: {exc}\n")
    return CliResult(out.code, out.render(args.quiet), err.getvalue())


def main(argv=None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(result.stdout)
    sys.stderr.write(result.stderr)
    return result.code


if __name__ == "__main__":
    sys.exit(main())
