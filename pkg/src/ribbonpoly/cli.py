"""Command-line interface.

Subcommands:
    poly br|tutte|penrose <file> [--at K]   polynomial of a graph file
    lens graph|tau|orbit|scan               lens-space generators and scans
    verify poincare|suite                   verification batteries

Exit codes: 0 success, 1 assertion or verification failure, 2 usage error.
All numeric output is exact and locale-independent; identical invocations
print identical bytes regardless of worker count.
"""

from __future__ import annotations

import argparse
import sys

from .graphfile import GraphFileError, parse_graph_file, write_graph_file
from .lens import (LensParams, TheoremCheckError, lens_heegaard_graph,
                   q_orbit, scan_rows_to_csv, scan_tau_orbits, tau)
from .polynomials import (EnumerationCapError, bollobas_riordan, penrose,
                          penrose_eval, tutte)
from .ribbon import RibbonGraphError
from .verify import check_poincare, verify_suite


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="ribbonpoly",
        description="Polynomial invariants of embedded graphs and the "
                    "Heegaard graphs of lens spaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_poly = sub.add_parser("poly", help="compute a polynomial of a graph file")
    p_poly.add_argument("which", choices=("br", "tutte", "penrose"))
    p_poly.add_argument("file", help="ribbon graph file")
    p_poly.add_argument("--at", type=int, default=None, metavar="K",
                        help="evaluate the Penrose polynomial at integer K")
    p_poly.add_argument("--cap", type=int, default=None,
                        help="edge cap for the subset enumeration")
    p_poly.add_argument("--workers", type=int, default=None,
                        help="worker threads for the enumeration")

    p_lens = sub.add_parser("lens", help="lens-space Heegaard graphs and tau")
    lens_sub = p_lens.add_subparsers(dest="lens_command", required=True)

    p_graph = lens_sub.add_parser("graph", help="write the Heegaard graph of L(p,q)")
    p_graph.add_argument("--p", type=int, required=True)
    p_graph.add_argument("--q", type=int, required=True)
    p_graph.add_argument("-o", "--output", default=None,
                         help="output file (default: stdout)")

    p_tau = lens_sub.add_parser("tau", help="spanning-tree count of C_p(+-1,+-q)")
    p_tau.add_argument("--p", type=int, required=True)
    p_tau.add_argument("--q", type=int, required=True)

    p_orbit = lens_sub.add_parser("orbit", help="the orbit {+-q^+-1} mod p")
    p_orbit.add_argument("--p", type=int, required=True)
    p_orbit.add_argument("--q", type=int, required=True)

    p_scan = lens_sub.add_parser("scan", help="tau per orbit for all p <= pmax")
    p_scan.add_argument("--pmax", type=int, required=True)
    p_scan.add_argument("--csv", default=None, help="write CSV to this path")

    p_verify = sub.add_parser("verify", help="verification batteries")
    verify_sub = p_verify.add_subparsers(dest="verify_command", required=True)
    p_poincare = verify_sub.add_parser(
        "poincare", help="recompute the Poincare-sphere Penrose polynomial")
    p_poincare.add_argument("--workers", type=int, default=None)
    p_suite = verify_sub.add_parser("suite", help="run the invariant batteries")
    p_suite.add_argument("--level", choices=("quick", "full"), default="quick")

    return parser


def _log(msg):
    print(msg, file=sys.stderr)


def _cmd_poly(args):
    try:
        with open(args.file) as fh:
            text = fh.read()
    except OSError as exc:
        print("cannot read %s: %s" % (args.file, exc), file=sys.stderr)
        return 2
    G = parse_graph_file(text)
    if args.at is not None:
        if args.which != "penrose":
            print("--at applies only to 'poly penrose'", file=sys.stderr)
            return 2
        print(penrose_eval(G, args.at, cap=args.cap, workers=args.workers))
        return 0
    if args.which == "br":
        poly = bollobas_riordan(G, cap=args.cap, workers=args.workers)
    elif args.which == "tutte":
        poly = tutte(G, cap=args.cap, workers=args.workers)
    else:
        poly = penrose(G, cap=args.cap, workers=args.workers)
    print(poly)
    return 0


def _cmd_lens(args):
    params = LensParams(args.p, args.q) if args.lens_command != "scan" else None
    if args.lens_command == "graph":
        text = write_graph_file(lens_heegaard_graph(params))
        if args.output:
            with open(args.output, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    elif args.lens_command == "tau":
        print(tau(params))
    elif args.lens_command == "orbit":
        print("{%s}" % "|".join(str(m) for m in q_orbit(params).members))
    return 0


def _cmd_scan(args):
    rows, collisions = scan_tau_orbits(args.pmax)
    csv = scan_rows_to_csv(rows)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(csv)
    else:
        sys.stdout.write(csv)
    for c in collisions:
        print("collision: p=%d orbits %d and %d share tau=%d"
              % (c.p, c.orbit_rep_a, c.orbit_rep_b, c.tau), file=sys.stderr)
    return 0


def _cmd_verify(args):
    if args.verify_command == "poincare":
        display = check_poincare(workers=args.workers, log=_log)
        print(display)
        return 0
    ok = verify_suite(level=args.level, log=None, out=print)
    return 0 if ok else 1


def run_command(argv):
    """Entry point used by tests: returns the process exit status."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        if args.command == "poly":
            return _cmd_poly(args)
        if args.command == "lens":
            if args.lens_command == "scan":
                return _cmd_scan(args)
            return _cmd_lens(args)
        if args.command == "verify":
            return _cmd_verify(args)
    except (GraphFileError, RibbonGraphError, EnumerationCapError,
            TheoremCheckError, AssertionError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    return 2


def main():
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
