"""Command-line front end.

Setting ``NCGB_MAX_MEMORY_MB`` caps the address space of the process.

Exit codes: 0 success, 1 usage or input error, 2 inconsistent presentation
(the ideal contains 1), 3 bounded run not certified complete while
``--require-complete`` is set.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
import time
from pathlib import Path

from .corpus import CORPUS_LABELS, example
from .engine import EngineConfig, free_gbasis, hfree_gbasis
from .errors import InconsistentIdealError, ParseError
from .ordering import OrderingSpec
from .parsing import parse_input

EXIT_OK, EXIT_USAGE, EXIT_INCONSISTENT, EXIT_INCOMPLETE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ncgb", description="Noncommutative Groebner bases via letterplace completion.")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", metavar="FILE", help="presentation file ('-' for stdin)")
    src.add_argument("--example", metavar="LABEL",
                     help="corpus label, e.g. klein or heckeDd15 (dNN sets the bound)")
    src.add_argument("--list-examples", action="store_true", help="list corpus labels and exit")
    p.add_argument("--degbound", type=int, metavar="N", help="weight bound (overrides the input)")
    p.add_argument("--variant", choices=("std", "noc", "bas"), help="pair strategy")
    p.add_argument("--order", choices=("left", "right"), help="graded left or right lex")
    p.add_argument("--homogeneous", action="store_true",
                   help="treat input as homogeneous and skip homogenization")
    p.add_argument("--minimal", action="store_true", help="print only the minimal basis")
    p.add_argument("--check", action="store_true", help="cross-check with the reference oracle")
    p.add_argument("--trace", action="store_true", help="print the completion trace")
    p.add_argument("--json-like", action="store_true", help="flat key=value record output")
    p.add_argument("--require-complete", action="store_true",
                   help="exit 3 unless the bound certifies completeness")
    p.add_argument("--emit", action="store_true",
                   help="print the presentation in input-file format and exit")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    return p


def _load(args):
    if args.input is not None:
        text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text()
        parsed = parse_input(text, name=Path(args.input).stem if args.input != "-" else "stdin")
        pres = parsed.presentation
        variant = parsed.config.variant if parsed.config else "std"
    else:
        pres = example(args.example)
        variant = "std"
    bound = args.degbound if args.degbound is not None else pres.bound
    spec = pres.spec
    if args.order:
        spec = OrderingSpec(spec.letters, "direct" if args.order == "right" else "reverse")
    return pres, spec, bound, args.variant or variant


def _cap_memory():
    mb = os.environ.get("NCGB_MAX_MEMORY_MB")
    if not mb:
        return
    try:
        import resource

        limit = int(mb) * 1024 * 1024
        resource.setrlimit(resource.RLIMIT_AS, (limit, limit))
    except (ValueError, OSError, ImportError) as exc:
        logging.getLogger("ncgb").warning("cannot apply NCGB_MAX_MEMORY_MB=%s: %s", mb, exc)


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    _cap_memory()
    if args.list_examples:
        print("klein")
        for label in CORPUS_LABELS:
            print(label)
        return EXIT_OK
    try:
        pres, spec, bound, variant = _load(args)
    except (ParseError, ValueError, OSError) as exc:
        print(f"ncgb: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.emit:
        out = pres if bound is None else pres.with_bound(bound)
        sys.stdout.write(out.to_input_text(variant if variant != "std" else None))
        return EXIT_OK
    if bound is None:
        print("ncgb: no weight bound; use 'degbound' in the input or --degbound", file=sys.stderr)
        return EXIT_USAGE
    if bound < pres.max_degree:
        print(f"ncgb: weight bound {bound} is below the maximal generator degree {pres.max_degree}",
              file=sys.stderr)
        return EXIT_USAGE
    cfg = EngineConfig(weight_bound=bound, variant=variant, trace=args.trace)
    gens = [g.with_spec(spec) for g in pres.generators]
    t0 = time.perf_counter()
    try:
        if args.homogeneous:
            res = hfree_gbasis(gens, spec, cfg)
        else:
            res = free_gbasis(gens, spec, cfg)
    except MemoryError:
        print("ncgb: out of memory", file=sys.stderr)
        return EXIT_USAGE
    except InconsistentIdealError as exc:
        print(f"ncgb: {exc}", file=sys.stderr)
        if args.json_like:
            print("inconsistent=true")
        return EXIT_INCONSISTENT
    except ValueError as exc:
        print(f"ncgb: {exc}", file=sys.stderr)
        return EXIT_USAGE
    logging.getLogger("ncgb").info("completion took %.2fs", time.perf_counter() - t0)
    s = res.stats

    check = None
    if args.check:
        from .oracle import nc_buchberger

        ref = nc_buchberger(gens, spec, max_deg=bound)
        check = {str(f) for f in ref} == {str(f) for f in res.minimal_basis}

    if args.json_like:
        print(f"label={pres.label}")
        for line in res.record():
            if args.minimal and line.startswith("basis["):
                continue
            print(line)
        if args.trace:
            for k, line in enumerate(res.trace):
                print(f"trace[{k}]={line}")
        if check is not None:
            print(f"oracle_agrees={'true' if check else 'false'}")
    else:
        if args.trace:
            for line in res.trace:
                print(line)
            print()
        print(f"# {pres.label}: {spec.order_name}, variant {variant}, bound {bound}")
        if not args.minimal:
            print(f"# basis: {s.basis_count}d{s.max_degree}")
            for f in res.basis:
                print(f)
        print(f"# minimal basis: {s.minimal_count}d{s.minimal_max_degree}")
        for f in res.minimal_basis:
            print(f)
        print(f"# pairs reduced: {s.pairs_reduced}, saturations: {s.saturations}")
        print(f"# certified complete: {'true' if res.certified_complete else 'false'}")
        if check is not None:
            print(f"# oracle agrees: {'true' if check else 'false'}")
    if check is False:
        print("ncgb: oracle disagrees with the engine", file=sys.stderr)
    if args.require_complete and not res.certified_complete:
        print(f"ncgb: bound {bound} does not certify completeness "
              f"(needs {2 * s.minimal_max_degree - 1})", file=sys.stderr)
        return EXIT_INCOMPLETE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
