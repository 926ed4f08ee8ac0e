"""Command-line entry point.

Exit status: 0 success, 1 verification failure, 2 usage error, 3 input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from cihash import fixtures
from cihash.core import BUILTIN_FUNCTIONS, orbit
from cihash.hashing import NonAsciiError, digest, initial_point, preprocess, trace_document

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 3

DEFAULT_EPSILONS = "0.1,0.01,0.001,0.0001,0.00001"


class InputError(Exception):
    pass


def read_message(source: str, keep_newline: bool) -> bytes:
    try:
        if source == "-":
            data = sys.stdin.buffer.read()
        else:
            data = Path(source).read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc.strerror or exc}") from exc
    if not keep_newline:
        data = data.rstrip(b"\r\n")
    return data


def emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def parse_epsilons(value: str) -> list[float]:
    try:
        eps = [float(v) for v in value.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a list of numbers: {value!r}")
    if not eps or any(e <= 0 for e in eps):
        raise argparse.ArgumentTypeError("epsilons must be positive")
    return eps


def positive_int(value: str) -> int:
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {value!r}")
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {n}")
    return n


def cmd_hash(args) -> int:
    msg = read_message(args.input, args.keep_newline)
    print(digest(msg, BUILTIN_FUNCTIONS[args.function]).hex)
    return EXIT_OK


def cmd_trace(args) -> int:
    msg = read_message(args.input, args.keep_newline)
    emit(trace_document(msg), args.out)
    if args.figure:
        from cihash.plotting import plot_orbit

        point = initial_point(msg)
        plot_orbit(orbit(BUILTIN_FUNCTIONS["negation"], point), args.figure,
                   title=f"orbit over {len(point.strategy)} steps")
    return EXIT_OK


def cmd_avalanche(args) -> int:
    from cihash.analysis import avalanche_report, random_ascii_corpus

    corpus = random_ascii_corpus(args.min_len, args.max_len)
    report = avalanche_report(corpus, args.trials, args.seed, args.mode)
    if not args.out:
        sys.stdout.write(report.to_text())
        return EXIT_OK
    out = Path(args.out)
    out.write_text(report.to_text())
    out.with_suffix(".csv").write_text(report.table())
    if not args.no_figure:
        from cihash.plotting import plot_avalanche

        plot_avalanche(report, out.with_suffix(".png"))
    return EXIT_OK


def cmd_collisions(args) -> int:
    from cihash.analysis import collision_scan

    result = collision_scan(args.width, args.samples, args.seed)
    emit(result.to_text(), args.out)
    return EXIT_OK


def cmd_verify_chaos(args) -> int:
    from cihash import topology as topo

    n = args.cells
    results = [topo.periodic_suite(n, e, args.trials, args.seed, args.depth) for e in args.epsilon]
    results.append(topo.transitive_suite(n, args.trials, args.seed, args.depth))
    results.append(topo.metric_suite(n, args.trials, args.seed, args.depth))
    if n > 1:
        results.extend(topo.sensitivity_suite(n, e, args.trials, args.seed) for e in args.epsilon)
    for r in results:
        print(r.line())
    ok = all(r.ok for r in results)
    print("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_FAIL


def selftest_lines() -> tuple[list[str], bool]:
    """Stage-by-stage comparison with the worked example, plus digest vectors."""
    pre = preprocess(fixtures.WORKED_MESSAGE)
    produced = {name: str(bs) for name, bs in pre.trace}
    produced["E"] = str(pre.initial_state)
    lines, ok = [], True
    for name, display in fixtures.STAGES.items():
        expected = fixtures.bits(display)
        match = produced[name] == expected
        ok &= match
        lines.append(f"stage {name}: {'MATCH' if match else 'MISMATCH'} ({len(expected)} bits)")
    for label, message, published in fixtures.DIGEST_VECTORS:
        got = digest(message).hex
        if got == published:
            lines.append(f"vector {label!r}: MATCH {got}")
        else:
            dist = bin(int(got, 16) ^ int(published, 16)).count("1")
            lines.append(f"vector {label!r}: MISMATCH published {published} got {got} "
                         f"(hamming {dist}; informational)")
    lines.append("PASS" if ok else "FAIL")
    return lines, ok


def cmd_selftest(args) -> int:
    lines, ok = selftest_lines()
    print("\n".join(lines))
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cihash",
        description="Chaotic-iterations hash, chaos witnesses and statistical campaigns.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def with_input(p):
        p.add_argument("--input", default="-", metavar="PATH|-",
                       help="message file, or - for standard input (default)")
        p.add_argument("--keep-newline", action="store_true",
                       help="keep trailing CR/LF bytes (stripped by default)")

    p = sub.add_parser("hash", help="print the 64-hex-digit digest")
    with_input(p)
    p.add_argument("--function", choices=sorted(BUILTIN_FUNCTIONS), default="negation",
                   help="iteration function (default: negation)")
    p.set_defaults(func=cmd_hash)

    p = sub.add_parser("trace", help="print every intermediate bit string")
    with_input(p)
    p.add_argument("--out", metavar="PATH", help="write the document here instead of stdout")
    p.add_argument("--figure", metavar="PATH", help="also render the orbit raster to PATH")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("avalanche", help="seeded single-edit avalanche campaign")
    p.add_argument("--trials", type=positive_int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=("char", "bit", "mixed"), default="mixed",
                   help="mutation model (default: mixed)")
    p.add_argument("--min-len", type=positive_int, default=10)
    p.add_argument("--max-len", type=positive_int, default=500)
    p.add_argument("--out", metavar="PATH",
                   help="report path; the per-trial table (.csv) and figure (.png) go next to it")
    p.add_argument("--no-figure", action="store_true", help="skip the figure")
    p.set_defaults(func=cmd_avalanche)

    p = sub.add_parser("collisions", help="truncated-digest collision count")
    p.add_argument("--width", type=int, default=16, choices=range(8, 33), metavar="W",
                   help="digest prefix width in bits, 8..32 (default 16)")
    p.add_argument("--samples", type=positive_int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_collisions)

    p = sub.add_parser("verify-chaos", help="simulate the periodic/transitive/metric witnesses")
    p.add_argument("--cells", type=positive_int, default=4, help="state width N")
    p.add_argument("--trials", type=positive_int, default=100)
    p.add_argument("--epsilon", type=parse_epsilons, default=parse_epsilons(DEFAULT_EPSILONS),
                   metavar="E[,E...]")
    p.add_argument("--depth", type=positive_int, default=16, help="strategy truncation depth K")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify_chaos)

    p = sub.add_parser("selftest", help="replay the worked example stage by stage")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "avalanche" and args.min_len > args.max_len:
            print("cihash: error: --min-len exceeds --max-len", file=sys.stderr)
            return EXIT_USAGE
        return args.func(args)
    except (InputError, NonAsciiError) as exc:
        print(f"cihash: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
