"""Command-line front end.

Every subcommand prints a JSON report (sorted keys, two-space indent) or,
with ``--text``, a human-readable summary.  ``--out FILE`` writes the JSON
report to a file; when ``--out`` is absent and ``REDGW_REPORT_DIR`` is set the
report goes to ``$REDGW_REPORT_DIR/<subcommand>.json``.

Exit codes: 0 success, 2 invalid input, 1 internal failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from . import __version__
from .audit import vanishing_verdicts
from .charts import build_atlas
from .comparison import ComparisonInput, compare
from .lines import line_count
from .trees import WeightedTree, advancing_sequences, assign_strata, enumerate_strata, run_sequence

REPORT_DIR_ENV = "REDGW_REPORT_DIR"
log = logging.getLogger("redgw")


class UsageError(ValueError):
    """Invalid flags or inputs; maps to exit code 2."""


@dataclass
class CliConfig:
    subcommand: str
    n: Optional[int] = None
    degrees: Tuple[int, ...] = ()
    d: Optional[int] = None
    k: int = 0
    genus: int = 1
    gw0: Optional[Fraction] = None
    tree: Optional[str] = None
    out: Optional[str] = None
    verbosity: int = 0
    text: bool = False
    extra: dict = field(default_factory=dict)


def _degrees(text: str) -> Tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        degs = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"degrees must be comma-separated integers, got {text!r}")
    if any(w < 1 for w in degs):
        raise argparse.ArgumentTypeError("degrees must be positive")
    return degs


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected an integer or p/q, got {text!r}")


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the JSON report to this file")
    common.add_argument("--text", action="store_true", help="print a text summary instead of JSON")
    common.add_argument("-v", "--verbose", action="count", default=0)

    p = _Parser(prog="redgw", description="Genus-one standard vs reduced GW bookkeeping.")
    p.add_argument("--version", action="version", version=f"redgw {__version__}")
    sub = p.add_subparsers(dest="subcommand", metavar="SUBCOMMAND", parser_class=_Parser)
    sub.required = True

    def target(sp, need_d=True):
        sp.add_argument("--n", type=_positive, required=True, help="ambient P^n")
        sp.add_argument("--degrees", type=_degrees, required=True,
                        help="comma-separated hypersurface degrees")
        if need_d:
            sp.add_argument("--d", type=_positive, required=True, help="curve degree")
            sp.add_argument("--k", type=_nonneg, default=0, help="number of marked points")

    sp = sub.add_parser("coefficient", parents=[common], help="standard-minus-reduced coefficient")
    target(sp)
    sp.add_argument("--gw0", type=_rational, help="genus-zero invariant; enables the correction")
    sp.add_argument("--genus", type=int, choices=(0, 1), default=1,
                    help="genus used in the reported sign factor")
    sp.add_argument("--intermediates", action="store_true",
                    help="include the intermediate classes of the computation")
    sp.add_argument("--no-auto-gw0", action="store_true",
                    help="do not fill GW_0 from the line count when d = 1")

    sp = sub.add_parser("audit", parents=[common], help="dimension audit of the strata")
    target(sp)
    sp.add_argument("--tree", help="restrict to the strata reached from this tree (JSON file, '-' for stdin)")

    sp = sub.add_parser("strata", parents=[common], help="strata of a tree over all advancing sequences")
    sp.add_argument("--tree", required=True, help="tree JSON file, '-' for stdin")

    sp = sub.add_parser("advance", parents=[common], help="run an advancing sequence on a tree")
    sp.add_argument("--tree", required=True, help="tree JSON file, '-' for stdin")
    sp.add_argument("--at", default=None,
                    help="comma-separated vertices to advance at; omitted lists every sequence")

    sp = sub.add_parser("charts", parents=[common], help="chart equations and branch labels")
    sp.add_argument("--tree", required=True, help="tree JSON file, '-' for stdin")
    sp.add_argument("--n", type=_positive, required=True)
    sp.add_argument("--m", type=_nonneg, default=0)
    sp.add_argument("--p-fields", action="store_true", help="add the t_1..t_m equations")
    sp.add_argument("--sequence", default=None,
                    help="comma-separated advancing sequence; omitted means every sequence")

    sp = sub.add_parser("lines", parents=[common], help="number of lines on a complete intersection")
    target(sp, need_d=False)

    sub.add_parser("selftest", parents=[common], help="run the invariant suite")
    return p


def parse_config(argv: Sequence[str]) -> CliConfig:
    ns = build_parser().parse_args(list(argv))
    cfg = CliConfig(ns.subcommand, out=ns.out, verbosity=ns.verbose, text=ns.text)
    for name in ("n", "degrees", "d", "k", "genus", "gw0", "tree"):
        if getattr(ns, name, None) is not None:
            setattr(cfg, name, getattr(ns, name))
    for name in ("intermediates", "no_auto_gw0", "at", "m", "p_fields", "sequence"):
        if hasattr(ns, name):
            cfg.extra[name] = getattr(ns, name)
    return cfg


def _read_tree(path: str) -> WeightedTree:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
        data = json.loads(text)
    except OSError as exc:
        raise UsageError(f"cannot read tree: {exc}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"tree is not valid JSON: {exc}") from None
    return WeightedTree.from_json(data)


def _split(text: Optional[str]) -> Optional[List[str]]:
    if text is None:
        return None
    return [v for v in text.split(",") if v]


def _strata_report(t: WeightedTree) -> dict:
    seqs = []
    for seq in advancing_sequences(t):
        strata = assign_strata(t, seq)
        seqs.append({
            "steps": list(seq.steps),
            "final": seq.final.to_json(),
            "assignment": {v: mu.to_json() for v, mu in sorted(strata.items())},
        })
    return {
        "tree": t.to_json(),
        "d": t.total_weight,
        "k": t.k,
        "sequences": seqs,
        "strata": [mu.to_json() for mu in enumerate_strata(t)],
    }


# handlers return (json report, text summary)

def cmd_coefficient(cfg: CliConfig):
    inp = ComparisonInput(cfg.n, cfg.degrees, cfg.d, cfg.k, cfg.gw0)
    rep = compare(inp, auto_fill=not cfg.extra.get("no_auto_gw0"),
                  intermediates=cfg.extra.get("intermediates", False))
    data = rep.to_json()
    if cfg.genus != 1:
        from .comparison import sign_factor

        data["sign_factor"] = sign_factor(inp, cfg.genus)
    data["genus"] = cfg.genus
    return data, rep.to_text()


def cmd_audit(cfg: CliConfig):
    strata = None
    if cfg.tree:
        t = _read_tree(cfg.tree)
        if t.total_weight != cfg.d or t.k != cfg.k:
            raise UsageError(f"tree has d={t.total_weight}, k={t.k}; flags say d={cfg.d}, k={cfg.k}")
        strata = enumerate_strata(t)
    rep = vanishing_verdicts(cfg.n, cfg.degrees, cfg.d, cfg.k, strata)
    data = rep.to_json()
    text = [f"dim Q = {rep.dim_Q}, threshold dim = {rep.dim_B}, "
            f"|F| dim = {rep.dim_F_tot} ({'vanishes' if rep.F_contribution_vanishes else 'survives'})"]
    for v in rep.verdicts:
        text.append(f"  {v.stratum}: dim {v.dim_X} -> {v.verdict}")
    survivors = rep.survivors()
    text.append("survivors: " + (", ".join(map(str, survivors)) if survivors else "none"))
    return data, "\n".join(text)


def cmd_strata(cfg: CliConfig):
    t = _read_tree(cfg.tree)
    data = _strata_report(t)
    text = [str(t), ""]
    text += [str(mu) for mu in enumerate_strata(t)]
    return data, "\n".join(text)


def cmd_advance(cfg: CliConfig):
    t = _read_tree(cfg.tree)
    steps = _split(cfg.extra.get("at"))
    if steps is None:
        return cmd_strata(cfg)
    trees = run_sequence(t, steps)
    data = {
        "steps": steps,
        "trees": [x.to_json() for x in trees],
        "assignment": {v: mu.to_json() for v, mu in sorted(assign_strata(t, steps).items())},
    }
    text = []
    for i, x in enumerate(trees):
        text.append(f"Gamma[{i}]" + (f" (after {steps[i - 1]})" if i else ""))
        text.append(str(x))
    return data, "\n".join(text)


def cmd_charts(cfg: CliConfig):
    t = _read_tree(cfg.tree)
    given = _split(cfg.extra.get("sequence"))
    seqs = [given] if given is not None else [s.steps for s in advancing_sequences(t)]
    atlases = [build_atlas(t, s, cfg.n, cfg.extra.get("m", 0), cfg.extra.get("p_fields", False))
               for s in seqs]
    data = {"tree": t.to_json(), "atlases": [a.to_json() for a in atlases]}
    text = "\n\n".join(f"sequence {','.join(a.sequence) or '(empty)'}\n{a}" for a in atlases)
    return data, text


def cmd_lines(cfg: CliConfig):
    count = line_count(cfg.n, cfg.degrees)
    data = {"inputs": {"n": cfg.n, "degrees": list(cfg.degrees)}, "lines": count,
            "methods_agree": True}
    degs = ",".join(map(str, cfg.degrees))
    return data, f"lines on ({degs}) in P^{cfg.n}: {count}"


def cmd_selftest(cfg: CliConfig):
    from .selftest import run_all

    results = run_all()
    data = {"ok": all(r.ok for r in results), "checks": [r.to_json() for r in results]}
    text = "\n".join(f"{'PASS' if r.ok else 'FAIL'} {r.name} ({r.seconds:.2f}s)"
                     + (f": {r.detail}" if r.detail else "") for r in results)
    return data, text


HANDLERS = {
    "coefficient": cmd_coefficient,
    "audit": cmd_audit,
    "strata": cmd_strata,
    "advance": cmd_advance,
    "charts": cmd_charts,
    "lines": cmd_lines,
    "selftest": cmd_selftest,
}


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def _destination(cfg: CliConfig) -> Optional[Path]:
    if cfg.out:
        return Path(cfg.out)
    folder = os.environ.get(REPORT_DIR_ENV)
    if folder:
        return Path(folder) / f"{cfg.subcommand}.json"
    return None


def run(argv: Optional[Sequence[str]] = None, stdout=None) -> Tuple[int, Optional[dict]]:
    """Parse, dispatch and emit; returns the exit code and the report."""
    stdout = stdout or sys.stdout
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg = parse_config(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 2, None
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0), None
    logging.basicConfig(level=logging.WARNING - 10 * min(cfg.verbosity, 2),
                        format="%(levelname)s %(message)s")
    log.debug("config %s", cfg)
    try:
        report, text = HANDLERS[cfg.subcommand](cfg)
    except ValueError as exc:  # every domain validation error derives from ValueError
        print(f"error: {exc}", file=sys.stderr)
        return 2, None
    except Exception as exc:
        log.debug("internal failure", exc_info=True)
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1, None
    payload = dumps(report)
    dest = _destination(cfg)
    if dest is not None:
        dest.parent.mkdir(parents=True, exist_ok=True)
        dest.write_text(payload)
        log.info("wrote %s", dest)
    stdout.write(text + "\n" if cfg.text else payload)
    if cfg.subcommand == "selftest" and not report["ok"]:
        return 1, report
    return 0, report


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run(argv)[0]


if __name__ == "__main__":
    sys.exit(main())
