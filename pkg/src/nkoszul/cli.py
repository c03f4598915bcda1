"""Command-line front end.

Reads algebra definition files, runs one computation per invocation and
prints a deterministic key/value report (or JSON with --json).  Exit
codes: 0 success, 1 parse or validation error, 2 internal invariant
failure.
"""

import argparse
import json
import sys
import time

from .algebra import Morphism, circ, bullet, hilbert_dims
from .definitions import (definition_from_algebra, parse_definition,
                          serialize_definition)
from .errors import ContractViolation, DefinitionError, DimensionMismatch
from .koszul import (ContractedComplex, generalized_homology, koszul_K,
                     koszul_L, koszulity_check, tor_dims, verdict_string)
from .reduction import lemma3_check, reduction_operator
from .words import index_word


class _Parser(argparse.ArgumentParser):
    # validation failures must exit 1, not argparse's default 2
    def error(self, message):
        self.exit(1, "%s: error: %s\n" % (self.prog, message))


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--nmax", type=int, default=None,
                        help="total-degree bound (default 2N+2)")
    common.add_argument("--imax", type=int, default=4,
                        help="homological-index bound (default 4)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--field", default=None,
                        help="override the file's field: rational or gf:P")
    common.add_argument("--json", action="store_true", dest="as_json")
    common.add_argument("--timing", action="store_true")

    parser = _Parser(prog="nkoszul",
                     description="Exact computations on homogeneous algebras")
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    def cmd(name, nfiles=1, **extra):
        p = sub.add_parser(name, parents=[common], **extra)
        p.add_argument("files", nargs=nfiles, metavar="FILE")
        return p

    cmd("hilbert", help="graded dimensions up to --nmax")
    cmd("dual", help="definition of the dual algebra")
    cmd("circ", nfiles=2, help="white product of two algebras")
    cmd("bullet", nfiles=2, help="black product of two algebras")
    p = cmd("koszul-complex", help="position dimensions of the Koszul slices")
    p.add_argument("--family", choices=("K", "L"), default="K")
    p = cmd("homology", help="generalized homology of the chain slices")
    p.add_argument("--p", type=int, default=None,
                   help="which power to take kernels of (default: all)")
    p = cmd("contracted", help="homology of the contracted complex")
    p.add_argument("--p", type=int, default=None, help="default N-1")
    p.add_argument("--r", type=int, default=0)
    cmd("koszulity", help="exactness verdict for the contracted complex")
    cmd("tor", help="Tor dimensions from the bar complex, with purity")
    p = cmd("lemma3", help="does R commute with tensor powers of E")
    p.add_argument("--r", type=int, default=1)
    cmd("reduce", help="lexicographic reduction operator of the relations")
    return parser


def _load(path, field_override):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise DefinitionError(str(exc), source=path) from None
    defn = parse_definition(text, source=path)
    if field_override and field_override != defn.field_spec:
        from .definitions import AlgebraDefinition
        defn = AlgebraDefinition(field_override, defn.generators, defn.degree,
                                 [[(c, w) for c, w in terms]
                                  for terms in defn.relations])
    return defn


def _word_name(defn, word):
    return ".".join(defn.generators[k] for k in word)


class _Report:
    """Ordered key/value pairs with one text and one JSON rendering."""

    def __init__(self):
        self.items = []

    def add(self, key, value):
        self.items.append((key, value))

    def text(self):
        lines = []
        for key, value in self.items:
            if isinstance(value, str) and "\n" in value:
                lines.append("%s:" % key)
                for part in value.rstrip("\n").split("\n"):
                    lines.append("  " + part)
            elif isinstance(value, (list, tuple)):
                lines.append("%s: %s" % (key, " ".join(str(v) for v in value)))
            elif isinstance(value, bool):
                lines.append("%s: %s" % (key, "true" if value else "false"))
            else:
                lines.append("%s: %s" % (key, value))
        return "\n".join(lines) + "\n"

    def json(self):
        out = {}
        for key, value in self.items:
            out[key] = list(value) if isinstance(value, tuple) else value
        return json.dumps(out, sort_keys=True) + "\n"


def _header(report, args, defns, paths):
    report.add("command", args.command)
    for i, path in enumerate(paths):
        report.add("input" if len(paths) == 1 else "input%d" % (i + 1), path)
    main = defns[0]
    report.add("field", main.field_spec)
    report.add("generators", list(main.generators))
    report.add("degree", main.degree)
    report.add("seed", args.seed)


def _bounds(args, N):
    nmax = args.nmax if args.nmax is not None else 2 * N + 2
    if nmax <= 0 or args.imax <= 0:
        raise DimensionMismatch("--nmax and --imax must be positive")
    return nmax, args.imax


def _run(args):
    report = _Report()
    defns = [_load(path, args.field) for path in args.files]
    algebras = [d.to_algebra() for d in defns]
    A = algebras[0]
    nmax, imax = _bounds(args, A.N)
    _header(report, args, defns, args.files)
    cmdname = args.command

    if cmdname in ("circ", "bullet"):
        B = algebras[1]
        if A.N != B.N:
            raise DimensionMismatch(
                "operands have degrees %d and %d" % (A.N, B.N))

    if cmdname == "hilbert":
        report.add("nmax", nmax)
        report.add("dims", hilbert_dims(A, nmax))
    elif cmdname == "dual":
        out = definition_from_algebra(A.dual())
        report.add("dual", serialize_definition(out))
    elif cmdname in ("circ", "bullet"):
        op = circ if cmdname == "circ" else bullet
        prod = op(algebras[0], algebras[1])
        out = definition_from_algebra(prod)
        report.add("product", serialize_definition(out))
    elif cmdname == "koszul-complex":
        ident = Morphism.identity(A)
        if args.family == "K":
            report.add("family", "K")
            report.add("nmax", nmax)
            for n in range(nmax + 1):
                sl = koszul_K(ident, n)
                sl.verify_dN()
                report.add("slice n=%d" % n,
                           [sl.position_dim(k) for k in range(n + 1)])
        else:
            report.add("family", "L")
            report.add("nmax", nmax)
            for sl in koszul_L(ident, nmax):
                sl.verify_dN()
                report.add("chain delta=%d" % sl.delta,
                           [p.dim for p in sl.positions])
    elif cmdname == "homology":
        ps = [args.p] if args.p is not None else list(range(1, A.N))
        ident = Morphism.identity(A)
        report.add("nmax", nmax)
        for n in range(nmax + 1):
            sl = koszul_K(ident, n)
            for p in ps:
                h = generalized_homology(sl, p)
                dims = [h.entries[(p, sl.positions[k].label)]
                        for k in range(n + 1)]
                report.add("homology n=%d p=%d" % (n, p), dims)
    elif cmdname == "contracted":
        p = args.p if args.p is not None else A.N - 1
        cc = ContractedComplex(A, p, args.r, imax, nmax)
        report.add("p", p)
        report.add("r", args.r)
        report.add("nmax", nmax)
        report.add("imax", imax)
        for i in range(imax + 1):
            report.add("h i=%d" % i,
                       [cc.homology_dim(i, t) for t in range(nmax + 1)])
        report.add("h0_expected", cc.expected_h0_dims(nmax))
    elif cmdname == "koszulity":
        report.add("nmax", nmax)
        report.add("verdict", verdict_string(koszulity_check(A, nmax)))
    elif cmdname == "tor":
        report.add("nmax", nmax)
        report.add("imax", imax)
        table = tor_dims(A, imax, nmax)
        pure = True
        for i in range(imax + 1):
            dims = [table.get((i, t), 0) for t in range(nmax + 1)]
            report.add("tor i=%d" % i, dims)
            expected = i // 2 * A.N + (i % 2)
            pure = pure and all(
                d == 0 for t, d in enumerate(dims) if t != expected)
        report.add("pure", pure)
    elif cmdname == "lemma3":
        if args.r < 1:
            raise DimensionMismatch("--r must be at least 1")
        res = lemma3_check(A.relations, args.r, A.dim_e)
        report.add("r", args.r)
        report.add("equal", res.equal)
        report.add("conclusion", res.conclusion)
    elif cmdname == "reduce":
        op = reduction_operator(A.relations, A.N)
        defn = defns[0]
        leading = [_word_name(defn, index_word(w, A.dim_e, A.N))
                   for w in op.leading_words]
        report.add("relations", A.relations.dim)
        report.add("leading_words", leading)
        report.add("image_dim", len(op.image_words()))
        mat = op.S.matrix
        for w in op.leading_words:
            terms = []
            for i in range(mat.nrows):
                c = mat.rows[i][w]
                if c:
                    terms.append("%s*%s" % (
                        c, _word_name(defn, index_word(i, A.dim_e, A.N))))
            name = _word_name(defn, index_word(w, A.dim_e, A.N))
            report.add("rewrite %s" % name, " + ".join(terms) if terms else "0")
    return report


def main(argv=None):
    args = _build_parser().parse_args(argv)
    start = time.monotonic()
    try:
        report = _run(args)
    except DefinitionError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 1
    except (DimensionMismatch, ValueError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 1
    except ContractViolation as exc:
        sys.stderr.write(
            "internal bug: %s (an invariant failed; please report)\n" % exc)
        return 2
    if args.timing:
        report.add("timing_ms", int((time.monotonic() - start) * 1000))
    sys.stdout.write(report.json() if args.as_json else report.text())
    return 0


if __name__ == "__main__":
    sys.exit(main())
