"""Command-line entry point.  Every invocation prints one JSON report.

Positions in reports are 1-based; ``end`` is inclusive.
Exit status: 0 found/exhausted, 1 not-found/budget-exceeded, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import __version__
from .collinear import DEFAULT_MAX_POINTS, equal_average_factorization, find_double_ap, lattice_path
from .detectors import find_abelian_square, find_additive_power, min_discrepancy_scan
from .ejs import ejs_encode, near_additive_square, shift_to_positive
from .errors import AddiwordError, NotFound, ParseError
from .search import DEFAULT_DEPTH_BUDGET, DEFAULT_NODE_BUDGET, PATTERNS, SearchConfig, count_avoiding, longest_avoiding
from .words import Alphabet, Factor, Word, parse_word, prefix_sums

EXIT = {"found": 0, "not-found": 1, "budget-exceeded": 1, "error": 2}


def _block(ps, f: Factor) -> dict:
    return {
        "start": f.start + 1,
        "end": f.start + f.length,
        "length": f.length,
        "sum": ps[f.start + f.length] - ps[f.start],
    }


def _digest(w: Word) -> dict:
    return {"length": len(w), "alphabet": sorted(set(w))}


def _read_word(args) -> Word:
    if args.word is not None:
        text = args.word
    elif args.file in (None, "-"):
        text = sys.stdin.read()
    else:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    return parse_word(text)


def cmd_detect(args, w):
    ps = prefix_sums(w)
    if args.pattern == "min-discrepancy":
        rep = min_discrepancy_scan(w, args.half_len)
        blocks = [_block(ps, rep.u), _block(ps, rep.v)]
        return "found", {"pattern": args.pattern, "blocks": blocks, "discrepancy": rep.discrepancy}
    if args.pattern == "abelian-square":
        loc = find_abelian_square(w, args.min_half_len)
    else:
        loc = find_additive_power(w, 3 if args.pattern == "additive-cube" else 2, args.min_half_len)
    if loc is None:
        return "not-found", {"pattern": args.pattern, "blocks": []}
    return "found", {"pattern": args.pattern, "blocks": [_block(ps, f) for f in loc.blocks]}


def cmd_theorem1(args, w):
    try:
        near, align = near_additive_square(w, args.min_block_len)
    except NotFound as e:
        return "not-found", {"min_block_len": args.min_block_len, "reason": str(e)}
    ps = prefix_sums(w)
    return "found", {
        "min_block_len": args.min_block_len,
        "u": _block(ps, near.u),
        "v": _block(ps, near.v),
        "discrepancy": near.discrepancy,
        "bound_c": near.bound_c,
        "shift_offset": near.shift_offset,
        "k": align.k,
        "alphas": list(align.alpha),
    }


def path_svg(w: Sequence[int], highlight: Sequence[int], size: int = 800) -> str:
    """SVG drawing of the lattice path with the chosen points circled."""
    path = lattice_path(w)
    xs = [p.index for p in path]
    ys = [p.ordinate for p in path]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    pad = 20
    sx = (size - 2 * pad) / max(1, x1 - x0)
    sy = (size - 2 * pad) / max(1, y1 - y0)

    def at(i):
        return pad + (xs[i] - x0) * sx, size - pad - (ys[i] - y0) * sy

    pts = " ".join("%.2f,%.2f" % at(i) for i in range(len(path)))
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {size} {size}" width="{size}" height="{size}">',
        f'<polyline points="{pts}" fill="none" stroke="#444" stroke-width="1"/>',
    ]
    if highlight:
        (ax, ay), (bx, by) = at(highlight[0]), at(highlight[-1])
        out.append(f'<line x1="{ax:.2f}" y1="{ay:.2f}" x2="{bx:.2f}" y2="{by:.2f}" stroke="#c33" stroke-dasharray="4 3"/>')
    for i in highlight:
        cx, cy = at(i)
        out.append(f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="5" fill="none" stroke="#c33" stroke-width="2"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def cmd_theorem2(args, w):
    fac = equal_average_factorization(w, args.k, args.max_points)
    if fac is None:
        return "not-found", {"k": args.k, "max_points": args.max_points}
    ps = prefix_sums(w)
    factors = []
    for f in fac.factors:
        b = _block(ps, f)
        b["average"] = f"{fac.common_average.numerator}/{fac.common_average.denominator}"
        factors.append(b)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(path_svg(w, fac.points))
    avg = fac.common_average
    return "found", {
        "k": args.k,
        "max_points": args.max_points,
        "indices": list(fac.points),
        "factors": factors,
        "common_average": f"{avg.numerator}/{avg.denominator}",
    }


def cmd_ap(args, w):
    tri = find_double_ap(w)
    if tri is None:
        return "not-found", {"triple": None}
    return "found", {"triple": {"i": tri.i + 1, "j": tri.j + 1, "k": tri.k + 1, "values": list(tri.values)}}


def cmd_encode(args, w):
    shifted, offset = shift_to_positive(w)
    bw = ejs_encode(shifted)
    return "found", {"shift_offset": offset, "bits": str(bw), "zeros": len(bw.zero_positions)}


def cmd_search(args):
    alphabet = Alphabet(parse_word(args.alphabet))
    cfg = SearchConfig(alphabet, args.pattern, args.depth_budget, args.node_budget)
    res = longest_avoiding(cfg, workers=args.threads)
    result = {
        "alphabet": list(alphabet.symbols),
        "pattern": cfg.pattern,
        "verdict": res.verdict,
        "g": res.g,
        "depth_reached": res.depth_reached,
        "witness": list(res.witness),
        "nodes_visited": res.nodes_visited,
        "budget_hit": res.budget_hit,
    }
    if args.count_at is not None:
        result["count_at"] = {"length": args.count_at, "count": count_avoiding(cfg, args.count_at)}
    return ("found" if res.exhausted else "budget-exceeded"), result


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="addiword", description="Additive and abelian patterns in integer words.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    def word_cmd(name, help):
        p = sub.add_parser(name, help=help)
        src = p.add_mutually_exclusive_group()
        src.add_argument("--file", "-f", help="word file (default: stdin)")
        src.add_argument("--word", "-w", help="word given inline, e.g. '2 1 3 5'")
        return p

    p = word_cmd("detect", "locate an additive square/cube or abelian square")
    p.add_argument("--pattern", default="additive-square", choices=[*PATTERNS, "min-discrepancy"])
    p.add_argument("--min-half-len", type=int, default=1)
    p.add_argument("--half-len", type=int, default=1, help="block length for min-discrepancy")

    p = word_cmd("theorem1", "adjacent equal-length blocks with bounded sum gap")
    p.add_argument("--min-block-len", type=int, default=1)

    p = word_cmd("theorem2", "adjacent factors with equal averages")
    p.add_argument("--k", "-k", type=int, default=2)
    p.add_argument("--max-points", type=int, default=DEFAULT_MAX_POINTS)
    p.add_argument("--svg", metavar="PATH", help="write the lattice path as SVG")

    word_cmd("ap", "indices and values both in arithmetic progression")
    word_cmd("encode", "binary encoding 1^x1 0 1^x2 0 ...")

    p = sub.add_parser("search", help="longest word avoiding a pattern")
    p.add_argument("--alphabet", required=True, help='e.g. "1,2,3,4"')
    p.add_argument("--pattern", default="additive-square", choices=PATTERNS)
    p.add_argument("--depth-budget", type=int, default=DEFAULT_DEPTH_BUDGET)
    p.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.add_argument("--count-at", type=int)
    p.add_argument("--threads", type=int, help="worker processes (default $ADDIWORD_THREADS or 1)")
    return parser


COMMANDS = {
    "detect": cmd_detect,
    "theorem1": cmd_theorem1,
    "theorem2": cmd_theorem2,
    "ap": cmd_ap,
    "encode": cmd_encode,
}


def run(argv: Optional[Sequence[str]] = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    report = {"command": args.command, "input": None}
    try:
        if args.command == "search":
            status, result = cmd_search(args)
        else:
            w = _read_word(args)
            report["input"] = _digest(w)
            status, result = COMMANDS[args.command](args, w)
    except (AddiwordError, OSError) as e:
        kind = "parse" if isinstance(e, ParseError) else type(e).__name__
        print(f"addiword: {e}", file=sys.stderr)
        status, result = "error", {"error": kind, "message": str(e)}
        if isinstance(e, ParseError):
            result.update(line=e.line, column=e.column, token_index=e.index)
    report["status"] = status
    report["result"] = result
    json.dump(report, stdout, indent=2)
    stdout.write("\n")
    return EXIT[status]


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
