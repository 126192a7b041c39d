"""Command-line front end.

Exit status: 0 success, 1 negative verification, 2 oracle cap exceeded,
64 usage error (bad flags, unreadable or malformed input).
"""

from __future__ import annotations

import argparse
import random
import sys

from . import __version__
from .certificates import CertificateError, classification_to_dict, dumps, load_certificate
from .families import FORBIDDEN, MINIMAL, FamilySpec, build_family, random_caterpillar, random_long_haired_caterpillar
from .oracle import ENV_CAP, pthin_exact
from .patterns import detect, minimality_audit, ta_battery
from .recognition import classify
from .thinness import CapExceeded, check_representation, min_classes_for_ordering
from .tree import TreeFormatError, is_simple_path, parse_tree, random_tree, serialize_tree
from .sweeps import agreement_sweep

EXIT_OK, EXIT_NEGATIVE, EXIT_CAP, EXIT_USAGE = 0, 1, 2, 64

GEN_FAMILIES = FORBIDDEN + ("TA", "Path", "Star", "Spider", "Caterpillar",
                            "Random", "RandomCaterpillar", "RandomLongHairedCaterpillar")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None


def _tree(path: str):
    try:
        return parse_tree(_read(path))
    except TreeFormatError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _ints(text: str, what: str) -> list:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"{what} must be integers, got {text!r}") from None


def cmd_recognize(args, out):
    t = _tree(args.input)
    c = classify(t)
    print(c.value, file=out)
    if args.certificate:
        _write(args.certificate, dumps(classification_to_dict(c)))
    return EXIT_OK


def cmd_verify(args, out):
    t = _tree(args.input)
    try:
        cert = load_certificate(_read(args.certificate))
    except CertificateError as exc:
        print(f"invalid certificate: {exc}", file=out)
        return EXIT_NEGATIVE
    w = cert["witness"]
    if w is not None:
        if w.is_valid(t):
            print(f"ok: induced {w.family} on vertices {' '.join(map(str, w.vertices))}", file=out)
            return EXIT_OK
        print(f"invalid witness: mapping does not embed {w.family} as an induced subtree", file=out)
        return EXIT_NEGATIVE
    rep = cert["representation"]
    try:
        rep.validate(t.n)
    except ValueError as exc:
        print(f"invalid certificate: {exc}", file=out)
        return EXIT_NEGATIVE
    c0 = cert["c0"]
    if c0 is not None and (not all(0 <= v < t.n for v in c0) or not is_simple_path(t, c0)):
        print("invalid certificate: c0 is not a simple path of the tree", file=out)
        return EXIT_NEGATIVE
    bad = check_representation(t, rep, strong=args.strong)
    if bad is not None:
        print(bad, file=out)
        return EXIT_NEGATIVE
    kind = "strongly consistent" if args.strong else "consistent"
    print(f"ok: {kind} with {rep.k} class{'es' if rep.k > 1 else ''}", file=out)
    return EXIT_OK


def cmd_exact(args, out):
    t = _tree(args.input)
    k, _ = pthin_exact(t, cap=args.max_n)
    print(f"pthin={k}", file=out)
    return EXIT_OK


def cmd_min_classes(args, out):
    t = _tree(args.input)
    lines = _read(args.ordering).split("\n")
    if len([ln for ln in lines if ln.strip()]) != 1:
        raise UsageError("ordering file must hold exactly one line of vertex ids")
    ordering = _ints(lines[0] if lines[0].strip() else next(ln for ln in lines if ln.strip()), "ordering")
    if sorted(ordering) != list(range(t.n)):
        raise UsageError(f"ordering is not a permutation of 0..{t.n - 1}")
    rep = min_classes_for_ordering(t, ordering, strong=args.strong)
    print(f"k={rep.k}", file=out)
    for members in rep.class_members():
        print(" ".join(map(str, members)), file=out)
    return EXIT_OK


def _gen_tree(args):
    fam = args.family
    params = tuple(_ints(args.params, "params")) if args.params else ()
    rng = random.Random(args.seed)
    if fam in ("Random", "RandomCaterpillar", "RandomLongHairedCaterpillar"):
        if args.n is None or args.n < 1:
            raise UsageError(f"{fam} needs --n N with N >= 1")
        if fam == "Random":
            return random_tree(args.n, args.seed)
        if fam == "RandomCaterpillar":
            return random_caterpillar(rng, max_n=args.n)
        return random_long_haired_caterpillar(rng, max_n=args.n)
    if fam in ("Path", "Star") and not params:
        if args.n is None:
            raise UsageError(f"{fam} needs --n N or --params")
        params = (args.n,) if fam == "Path" else (args.n - 1,)
    if fam in ("T2", "T3", "T4", "T5") and not params:
        params = MINIMAL[fam]
    try:
        return build_family(FamilySpec(fam, params))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_gen(args, out):
    t = _gen_tree(args)
    _write(args.output, serialize_tree(t) + "\n")
    print(f"wrote {args.family} with n={t.n} to {args.output}", file=out)
    return EXIT_OK


def cmd_detect(args, out):
    t = _tree(args.input)
    w = detect(t)
    print("none" if w is None else f"{w.family}: {' '.join(map(str, w.vertices))}", file=out)
    return EXIT_OK


def cmd_enumerate(args, out):
    result = agreement_sweep(args.n, cap=args.max_n)
    for edges, verdict, bucket in result.mismatches[:10]:
        print(f"mismatch: edges={edges} classify={verdict} oracle={bucket}", file=out)
    for edges, what in result.bad_certificates[:10]:
        print(f"bad {what} certificate: edges={edges}", file=out)
    print(result.summary(), file=out)
    return EXIT_OK if result.ok else EXIT_NEGATIVE


def cmd_audit(args, out):
    if args.ta:
        report = ta_battery()
    else:
        if args.family not in MINIMAL:
            raise UsageError(f"unknown forbidden family {args.family!r}; choose from {', '.join(MINIMAL)}")
        report = minimality_audit(FamilySpec(args.family, MINIMAL[args.family]))
    for line in report.lines():
        print(line, file=out)
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="thinspect", description="Classify trees by proper thinness, with certificates.",
                epilog=f"Oracle size caps can be overridden with the {ENV_CAP} environment variable.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    s = sub.add_parser("recognize", help="print pthin=1, pthin=2 or pthin>=3")
    s.add_argument("--input", required=True, metavar="FILE")
    s.add_argument("--certificate", metavar="OUT", help="write the classification certificate here")
    s.set_defaults(func=cmd_recognize)

    s = sub.add_parser("verify", help="check a certificate against a tree")
    s.add_argument("--input", required=True, metavar="FILE")
    s.add_argument("--certificate", required=True, metavar="FILE")
    s.add_argument("--strong", action="store_true", help="require strong consistency")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("exact", help="exact proper thinness by exhaustive search")
    s.add_argument("--input", required=True, metavar="FILE")
    s.add_argument("--max-n", type=int, metavar="N", help="size cap for the search")
    s.set_defaults(func=cmd_exact)

    s = sub.add_parser("min-classes", help="fewest classes for a fixed ordering")
    s.add_argument("--input", required=True, metavar="FILE")
    s.add_argument("--ordering", required=True, metavar="FILE")
    s.add_argument("--strong", action="store_true")
    s.set_defaults(func=cmd_min_classes)

    s = sub.add_parser("gen", help="write a named or random tree")
    s.add_argument("--family", required=True, choices=GEN_FAMILIES, metavar="NAME",
                   help=", ".join(GEN_FAMILIES))
    s.add_argument("--params", metavar="i,j,k")
    s.add_argument("--n", type=int, metavar="N")
    s.add_argument("--seed", type=int, default=0, metavar="S")
    s.add_argument("--output", required=True, metavar="FILE")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("detect", help="find a forbidden induced subtree")
    s.add_argument("--input", required=True, metavar="FILE")
    s.set_defaults(func=cmd_detect)

    s = sub.add_parser("enumerate", help="exhaustive classify-versus-oracle sweep")
    s.add_argument("--n", type=int, required=True, choices=range(1, 10), metavar="N")
    s.add_argument("--check", required=True, choices=["agreement"])
    s.add_argument("--max-n", type=int, metavar="N", help="oracle size cap")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("audit", help="family minimality audit or the T_A battery")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--family", metavar="NAME")
    g.add_argument("--ta", action="store_true")
    s.set_defaults(func=cmd_audit)
    return p


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"thinspect: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"thinspect: {exc}", file=sys.stderr)
        return EXIT_CAP


run = main


def entry() -> None:
    sys.exit(main())
