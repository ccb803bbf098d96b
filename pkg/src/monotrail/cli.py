"""Command-line entry point: ``monotrail {gen,solve,verify,sweep,oracle,diagnose}``.

Exit codes: 0 ok, 1 certificate rejected, 2 parse error, 3 I/O error,
4 size guard, 5 flag/mode guard, 70 internal error.
"""
from __future__ import annotations

import argparse
import sys
import traceback
from typing import Optional, Sequence

from . import formats
from .circuit import BadK, check_trail, proof_trace, solve
from .constructions import (
    AffinePlaneParams,
    BadM,
    BadN,
    NotPrime,
    affine_plane_coloring,
    extremal_bipartite_split,
    random_coloring,
)
from .oracle import TooLarge, best_monochromatic, worst_case_search
from .sweep import CertificateFailure, rows_to_csv, run_sweep, summarize

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_PARSE = 2
EXIT_IO = 3
EXIT_TOO_LARGE = 4
EXIT_USAGE = 5
EXIT_INTERNAL = 70


class UsageError(Exception):
    pass


class InternalError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _out(text: str, path: Optional[str]) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def cmd_gen(args) -> int:
    fam = args.family
    if fam == "extremal":
        if args.n is None:
            raise UsageError("--family extremal needs --n")
        c = extremal_bipartite_split(args.n)
    elif fam == "affine":
        if args.q is None or args.m is None:
            raise UsageError("--family affine needs --q and --m")
        c = affine_plane_coloring(AffinePlaneParams(args.q, args.m))
    else:
        if args.n is None or args.k is None or args.seed is None:
            raise UsageError("--family random needs --n, --k and --seed")
        c = random_coloring(args.n, args.k, args.seed)
    text = formats.format_ecg(c)
    params = f"n={c.n} k={c.k}\n"
    if args.out is None or args.out == "-":
        sys.stdout.write(text)
        sys.stderr.write(params)
    else:
        _out(text, args.out)
        sys.stdout.write(params)
    return EXIT_OK


def cmd_solve(args) -> int:
    c = formats.read_ecg(args.input)
    report = solve(c)
    code = check_trail(c, report.circuit)
    if code is not None:
        raise InternalError(f"solve produced an invalid certificate: {code}")
    if args.cert:
        formats.write_cert(report.circuit, args.cert)
        if check_trail(c, formats.read_cert(args.cert)) is not None:
            raise InternalError("written certificate does not verify")
    verdict = "pass" if report.satisfied else "below-threshold"
    print(f"{report.color} {report.length} {report.threshold} {verdict}")
    if args.trace:
        for f in report.eulerized.forests:
            edges = " ".join(f"{u}-{v}" for u, v in f.edges)
            print(f"forest color={f.color} size={len(f)}: {edges}".rstrip())
        if c.k == 2:
            for line in proof_trace(c).lines():
                print(line)
        else:
            print(f"case trace skipped: k={c.k}")
    return EXIT_OK


def cmd_verify(args) -> int:
    c = formats.read_ecg(args.input)
    t = formats.read_cert(args.cert)
    if t.color >= c.k:
        raise formats.ParseError(2, f"certificate colour {t.color} out of range for k={c.k}")
    code = check_trail(c, t)
    if code is None:
        print("ok")
        return EXIT_OK
    print(code)
    return EXIT_REJECTED


def cmd_sweep(args) -> int:
    if args.n_min > args.n_max or args.step < 1 or args.n_min < 2:
        raise UsageError("need 2 <= --n-min <= --n-max and --step >= 1")
    if args.seeds < 1 or args.threads < 1:
        raise UsageError("--seeds and --threads must be >= 1")
    ns = range(args.n_min, args.n_max + 1, args.step)
    seeds = range(args.seed_start, args.seed_start + args.seeds)
    rows = run_sweep(args.family, ns, seeds, k=args.k, threads=args.threads, timing=args.timing)
    _out(rows_to_csv(rows), args.out)
    summary = summarize(rows)
    dest = sys.stderr if args.out in (None, "-") else sys.stdout
    for key, val in summary.items():
        print(f"{key}={val:.6g}" if isinstance(val, float) else f"{key}={val}", file=dest)
    return EXIT_OK


def cmd_oracle(args) -> int:
    if args.mode == "worstcase":
        if args.n is None:
            raise UsageError("--mode worstcase needs --n")
        if args.n < 1:
            raise UsageError("--n must be >= 1")
        w = worst_case_search(args.n, args.objective, allow_seven=args.allow_7, workers=args.workers)
        print(f"value={w.value}")
        print(f"witness color={w.witness.color}: " + " ".join(map(str, w.witness.vertices)))
        if args.out:
            formats.write_ecg(w.coloring, args.out)
        print("n,mode,value,witness_file")
        print(f"{w.n},{w.mode},{w.value},{args.out or ''}")
        return EXIT_OK
    if args.input is None:
        raise UsageError(f"--mode {args.mode} needs -i/--input")
    c = formats.read_ecg(args.input)
    r = best_monochromatic(c, args.mode)
    print(f"value={r.best} color={r.witness.color}")
    print("witness: " + " ".join(map(str, r.witness.vertices)))
    return EXIT_OK


def cmd_diagnose(args) -> int:
    c = formats.read_ecg(args.input)
    if c.k != 2:
        raise BadK(f"diagnose needs a two-colouring, got k={c.k}")
    for line in proof_trace(c, eulerized=not args.raw).lines():
        print(line)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="monotrail", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="write a colouring in ecg format")
    g.add_argument("--family", choices=["extremal", "affine", "random"], required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--q", type=int)
    g.add_argument("--m", type=int)
    g.add_argument("--seed", type=int)
    g.add_argument("-o", "--out")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", help="extract and certify a long monochromatic circuit")
    s.add_argument("-i", "--input", required=True)
    s.add_argument("--trace", action="store_true")
    s.add_argument("--cert")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="check a certificate against a colouring")
    v.add_argument("-i", "--input", required=True)
    v.add_argument("-c", "--cert", required=True)
    v.set_defaults(func=cmd_verify)

    w = sub.add_parser("sweep", help="run a family over a range of n and seeds")
    w.add_argument("--family", choices=["extremal", "random"], required=True)
    w.add_argument("--n-min", type=int, required=True)
    w.add_argument("--n-max", type=int, required=True)
    w.add_argument("--step", type=int, default=1)
    w.add_argument("--seeds", type=int, default=1, help="number of seeds")
    w.add_argument("--seed-start", type=int, default=0)
    w.add_argument("--k", type=int, default=2)
    w.add_argument("--threads", type=int, default=1)
    w.add_argument("--timing", action="store_true", help="fill runtime_ms (otherwise 0)")
    w.add_argument("-o", "--out")
    w.set_defaults(func=cmd_sweep)

    o = sub.add_parser("oracle", help="exact longest trail/circuit, or worst case over K_n")
    o.add_argument("--mode", choices=["trail", "circuit", "worstcase"], required=True)
    o.add_argument("-i", "--input")
    o.add_argument("--n", type=int)
    o.add_argument("--objective", choices=["trail", "circuit"], default="trail")
    o.add_argument("--allow-7", action="store_true")
    o.add_argument("--workers", type=int, default=1)
    o.add_argument("-o", "--out", help="where to write the worst-case colouring")
    o.set_defaults(func=cmd_oracle)

    d = sub.add_parser("diagnose", help="case analysis of a two-colouring")
    d.add_argument("-i", "--input", required=True)
    d.add_argument("--raw", action="store_true", help="skip Eulerization")
    d.set_defaults(func=cmd_diagnose)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except formats.ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except TooLarge as e:
        print(f"too large: {e}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except (UsageError, BadK, BadN, BadM, NotPrime) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"i/o error: {e}", file=sys.stderr)
        return EXIT_IO
    except (InternalError, CertificateFailure) as e:
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception:
        traceback.print_exc()
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
