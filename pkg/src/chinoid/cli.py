"""Command-line front end.

    chinoid normalize -n 3 "a3 a1 a2"
    chinoid leaves -n 4 --format json
    chinoid kappa -n 4 --prime P3 "a3 a2 a2"
    chinoid act -n 4 --family standard --lambda 2,3 --word "a3 a1" --vector "(0,0)"
    chinoid verify -n 3 --box 5

Exit status: 0 on success, 1 if a verification fails, 2 on bad input,
3 when a congruence class outgrows the closure budget.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import core, diagrams, quotients, reps, verify

EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_BUDGET = 3


class UsageError(ValueError):
    pass


# -- input parsing ------------------------------------------------------


def _word(text: str, n: int | None) -> tuple[int, core.Word]:
    w = core.parse_word(text)
    if n is None:
        if not w:
            raise UsageError("give -n for the empty word")
        n = max(w)
    return n, core.check_word(w, n)


def _require_n(args) -> int:
    if args.n is None:
        raise UsageError(f"{args.command} needs -n")
    if args.n < 1:
        raise UsageError("rank must be positive")
    return args.n


_STEP = re.compile(r"(arc|dot)\((\d+)(?:,(\d+))?\)")


def parse_steps(text: str) -> list[diagrams.Step]:
    """``"arc(2,3) dot(1)"`` -> steps."""
    steps = []
    for tok in text.replace(";", " ").split():
        m = _STEP.fullmatch(tok)
        if not m or (m[1] == "arc") != (m[3] is not None):
            raise UsageError(f"bad step {tok!r}; expected arc(i,j) or dot(i)")
        lo = int(m[2])
        steps.append(diagrams.Step(m[1], lo, int(m[3]) if m[3] else lo))
    if not steps:
        raise UsageError("empty branch")
    return steps


_TERM = re.compile(r"(?:([-+]?\d+(?:/\d+)?)\s*\*\s*)?\(([^)]*)\)")


def parse_vector(text: str, arity: int) -> reps.SparseVector:
    """A JSON map ``{"(2,1)": "1"}`` or a sum like ``3/2*(2,1) + (0,0)``."""
    text = text.strip()
    if text.startswith("{"):
        v = reps.SparseVector.from_json(json.loads(text), arity)
    else:
        terms = {}
        for part in text.split("+"):
            m = _TERM.fullmatch(part.strip())
            if not m:
                raise UsageError(f"bad vector term {part.strip()!r}")
            idx = tuple(int(x) for x in m[2].split(",") if x.strip())
            c = Fraction(m[1]) if m[1] else Fraction(1)
            terms[idx] = terms.get(idx, 0) + c
        v = reps.SparseVector(arity, terms)
    if v.arity != arity:
        raise UsageError(f"vector has arity {v.arity}, module has {arity}")
    return v


def build_rep(n: int, fid: str, lambdas, mu, nu) -> reps.MonomialRep:
    """The module named by ``--family`` with its parameters."""
    if fid == "standard":
        return reps.standard_module(n, list(lambdas) + [x for x in (mu, nu) if x is not None])
    if fid == "trivial":
        return reps.trivial_module()
    if n not in (2, 3, 4):
        raise UsageError(f"only standard and trivial modules exist for n={n}")
    fam = reps.family(n, fid)
    if fid == "1-dim":
        return fam(c=lambdas)
    values = list(lambdas) + [x for x in (mu, nu) if x is not None]
    if len(values) != len(fam.params):
        raise UsageError(f"family {fid} takes {len(fam.params)} parameters ({', '.join(fam.params)})")
    return fam(**dict(zip(fam.params, values)))


# -- output -------------------------------------------------------------


def _emit(args, text: str, data) -> None:
    if args.format == "json":
        print(json.dumps(data, ensure_ascii=False))
    else:
        print(text)


def _report_line(r: reps.Report) -> str:
    mark = "PASS" if r.passed else "FAIL"
    line = f"{mark}  {r.name}  ({r.checked} checked)"
    if not r.passed:
        line += "  " + json.dumps(r.witness, default=str, ensure_ascii=False)
    return line


# -- subcommands --------------------------------------------------------


def cmd_normalize(args) -> int:
    n, w = _word(args.word, args.n)
    cf = core.normalize_fast(w, n) if args.fast else core.normalize(w, n)
    _emit(args, core.format_word(cf.expand()), cf.to_json())
    return 0


def cmd_multiply(args) -> int:
    n = args.n or max(core.parse_word(args.x) + core.parse_word(args.y) + (1,))
    _, x = _word(args.x, n)
    _, y = _word(args.y, n)
    cf = core.multiply(core.normalize(x, n), core.normalize(y, n))
    _emit(args, core.format_word(cf.expand()), cf.to_json())
    return 0


def cmd_class(args) -> int:
    n, w = _word(args.word, args.n)
    members = sorted(core.congruence_class(w, n))
    words = [core.format_word(m) for m in members]
    _emit(args, "\n".join(words), {"n": n, "word": core.format_word(w), "class": words})
    return 0


def _tree_rows(n: int, prune: bool):
    rows = []
    for branch in diagrams.walk(n, prune):
        d = branch.leaf
        entry = catalog_entry_name(d)
        rows.append((len(branch.diagrams), branch, entry))
    return rows


def catalog_entry_name(d: diagrams.Diagram) -> str | None:
    if not diagrams.is_leaf(d):
        return None
    entry = diagrams.catalog_entry(d)
    return entry.name if entry else None


def cmd_tree(args) -> int:
    n = _require_n(args)
    rows = _tree_rows(n, not args.no_prune)
    lines = []
    for depth, branch, name in rows:
        tag = "  leaf" + (f" {name}" if name else "") if diagrams.is_leaf(branch.leaf) else ""
        lines.append("  " * (depth - 1) + branch.leaf.render() + tag)
    data = [{"depth": depth, "step": str(branch.steps[-1]), "diagram": branch.leaf.to_json(),
             "leaf": diagrams.is_leaf(branch.leaf)} for depth, branch, _ in rows]
    _emit(args, "\n".join(lines), data)
    return 0


def cmd_leaves(args) -> int:
    n = _require_n(args)
    leaves = diagrams.enumerate_leaves(n)
    lines = []
    for k, b in enumerate(leaves):
        name = catalog_entry_name(b.leaf)
        lines.append(f"{k:3d}  {b.leaf.render()}  {name or ''}  [{b}]".rstrip())
    _emit(args, "\n".join(lines), [b.leaf.to_json() for b in leaves])
    return 0


def _branch(args, n: int) -> diagrams.Branch:
    given = [x is not None for x in (args.leaf, args.branch, args.prime)]
    if sum(given) != 1:
        raise UsageError("give exactly one of --leaf, --branch, --prime")
    if args.branch is not None:
        return diagrams.branch_from_steps(n, parse_steps(args.branch))
    if args.prime is not None:
        return diagrams.leaf_for(n, args.prime)
    leaves = diagrams.enumerate_leaves(n)
    if not 0 <= args.leaf < len(leaves):
        raise UsageError(f"leaf index must be in 0..{len(leaves) - 1}")
    return leaves[args.leaf]


def cmd_kappa(args) -> int:
    n, w = _word(args.word, args.n)
    branch = _branch(args, n)
    image = quotients.apply_branch(branch, w).canonical()
    parts = [f"[{core.format_word(image.quotient.letters)}]"]
    for f in image.factors:
        if isinstance(f, quotients.ArcFactor):
            parts.append(f"(p^{f.b.a} q^{f.b.b}, g^{f.g.e})")
        else:
            parts.append(f"g^{f.g.e}")
    _emit(args, " x ".join(parts), image.to_json())
    return 0


def cmd_act(args) -> int:
    n = _require_n(args)
    rep = build_rep(n, args.family, args.lambdas or [], args.mu, args.nu)
    _, w = _word(args.word, n)
    v = parse_vector(args.vector, rep.arity)
    out = reps.act(rep, w, v)
    if out:
        text = " + ".join(f"{reps.format_scalar(c)}*{idx}".replace(" ", "") for idx, c in sorted(out.items()))
    else:
        text = "0"
    _emit(args, text, out.to_json())
    return 0


def cmd_verify(args) -> int:
    n = _require_n(args)
    results = verify.run_suite(n, args.box, args.seed)
    ok = all(r.passed for r in results)
    text = "\n".join(_report_line(r) for r in results)
    text += f"\n{sum(r.passed for r in results)}/{len(results)} checks passed"
    _emit(args, text, {"n": n, "box": args.box, "seed": args.seed, "passed": ok,
                       "reports": [r.to_json() for r in results]})
    return 0 if ok else EXIT_FAIL


def cmd_catalog(args) -> int:
    n = _require_n(args)
    fams = reps.family_catalog(n) if n in (2, 3, 4) else []
    lines = []
    data = {"n": n, "families": [], "primes": []}
    if n % 2 == 0 and n > 4:
        lines.append(f"standard  lambda_1..lambda_{n // 2} != 0")
        data["families"].append({"id": "standard", "params": [f"lambda_{j}" for j in range(1, n // 2 + 1)],
                                 "constraint": "all nonzero", "action": ""})
    for f in fams:
        lines.append(f"{f.id:9s} {f.constraint:26s} {f.action_text}")
        data["families"].append({"id": f.id, "params": list(f.params), "constraint": f.constraint,
                                 "action": f.action_text})
    for entry in diagrams.PRIME_CATALOG.get(n, ()):
        d = diagrams.Diagram(n, entry.arcs, entry.dots)
        lines.append(f"{d.render()}  {entry.describe()}")
        data["primes"].append({"name": entry.name, "diagram": d.to_json(), "relations": entry.describe()})
    _emit(args, "\n".join(lines) if lines else f"no catalog for n={n}", data)
    return 0


# -- argument parsing ---------------------------------------------------


def _scalars(text: str):
    try:
        return reps.parse_scalars(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _scalar(text: str):
    return _scalars(text)[0]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-n", type=int, default=None, help="rank of the Chinese monoid")
    common.add_argument("--format", choices=["text", "json"], default="text")

    parser = argparse.ArgumentParser(prog="chinoid", description="Chinese monoid computations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", parents=[common], help="canonical form of a word")
    p.add_argument("word")
    p.add_argument("--fast", action="store_true", help="use letter insertion instead of the class closure")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("multiply", parents=[common], help="canonical form of a product")
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=cmd_multiply)

    p = sub.add_parser("class", parents=[common], help="all words congruent to a word")
    p.add_argument("word")
    p.set_defaults(func=cmd_class)

    p = sub.add_parser("tree", parents=[common], help="the diagram tree")
    p.add_argument("--no-prune", action="store_true", help="keep children whose dot lands on the boundary")
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("leaves", parents=[common], help="leaf diagrams (minimal primes)")
    p.set_defaults(func=cmd_leaves)

    p = sub.add_parser("kappa", parents=[common], help="image of a word under a branch homomorphism")
    p.add_argument("word")
    p.add_argument("--leaf", type=int, help="index into the leaf list")
    p.add_argument("--branch", help='steps such as "arc(2,3) arc(1,4)"')
    p.add_argument("--prime", help="catalog name such as P3")
    p.set_defaults(func=cmd_kappa)

    p = sub.add_parser("act", parents=[common], help="act by a word on a vector")
    p.add_argument("--family", required=True)
    p.add_argument("--lambda", dest="lambdas", type=_scalars, help="comma separated rationals")
    p.add_argument("--mu", type=_scalar)
    p.add_argument("--nu", type=_scalar)
    p.add_argument("--word", required=True)
    p.add_argument("--vector", required=True)
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("verify", parents=[common], help="run the invariant suite")
    p.add_argument("--box", type=int, default=4)
    p.add_argument("--seed", type=lambda s: int(s, 0), default=reps.DEFAULT_SEED)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalog", parents=[common], help="families of simple modules and minimal primes")
    p.set_defaults(func=cmd_catalog)
    return parser


@dataclass(frozen=True)
class Command:
    """A parsed-ahead invocation: subcommand, rank, extra arguments, output format."""

    subcommand: str
    n: int | None = None
    args: tuple[str, ...] = ()
    format: str = "text"

    def argv(self) -> list[str]:
        out = [self.subcommand, *self.args, "--format", self.format]
        if self.n is not None:
            out += ["-n", str(self.n)]
        return out


def run(cmd: Command) -> int:
    """Execute a Command, printing to stdout; returns the exit status."""
    try:
        return main(cmd.argv())
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_PARSE


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except core.ClassBudgetExceeded as exc:
        print(f"chinoid: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, ValueError, KeyError, ZeroDivisionError) as exc:
        print(f"chinoid: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
