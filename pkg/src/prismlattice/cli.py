"""Command-line entry point.

Exit codes: 0 success or positive answer, 1 definitive negative answer,
2 usage error, 3 internal invariant violation.  Data goes to stdout and
diagnostics to stderr.
"""
import argparse
import csv
import json
import os
import sys
from fractions import Fraction
from multiprocessing import Pool

from . import alexander, census, changemaker, contfrac, ctype, families, isometry, lattice

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_INVARIANT = 0, 1, 2, 3
WORKERS_ENV = "PRISMLATTICE_WORKERS"


class UsageError(Exception):
    pass


def _dump(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _ints(tokens):
    out = []
    for tok in tokens:
        for piece in tok.replace("(", " ").replace(")", " ").replace(",", " ").split():
            try:
                out.append(int(piece))
            except ValueError:
                raise UsageError(f"not an integer: {piece!r}")
    return out


def _fraction(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational number: {text!r}")


def _read_gram(path):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not JSON: {exc}")
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise UsageError(f"{path} must hold a JSON array of arrays")
    if not all(isinstance(x, int) and not isinstance(x, bool) for r in data for x in r):
        raise UsageError(f"{path}: Gram entries must be integers")
    try:
        return lattice.GramLattice(data)
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}")


def _frac_str(x):
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# -- subcommands ------------------------------------------------------------------------


def cmd_cf_expand(args):
    x = _fraction(args.value)
    try:
        cf = contfrac.neg_expand(x) if args.neg else contfrac.pos_expand(x)
    except ValueError as exc:
        raise UsageError(str(exc))
    if args.json:
        print(_dump({"value": _frac_str(x), "kind": "neg" if args.neg else "pos", "cf": list(cf)}))
    else:
        print(" ".join(map(str, cf)))
    return EXIT_OK


def cmd_cf_eval(args):
    cf = _ints(args.coeffs)
    try:
        x = contfrac.neg_eval(cf) if args.neg else contfrac.pos_eval(cf)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(str(exc))
    if args.json:
        print(_dump({"cf": cf, "kind": "neg" if args.neg else "pos", "value": _frac_str(x)}))
    else:
        print(_frac_str(x))
    return EXIT_OK


def cmd_shortvecs(args):
    L = _read_gram(args.gram)
    vecs = lattice.vectors_with_norms(L, args.bound)
    if args.json:
        print(_dump([{"vector": list(v), "norm": n} for v, n in vecs]))
    else:
        for v, n in vecs:
            print(n, " ".join(map(str, v)))
    return EXIT_OK


def cmd_ctype_build(args):
    try:
        C = ctype.build_ctype(args.p, args.q)
    except ValueError as exc:
        raise UsageError(str(exc))
    if args.json:
        print(_dump({"p": C.p, "q": C.q, "norms": list(C.norms), "gram": [list(r) for r in C.gram],
                     "det": C.lattice.det()}))
    elif args.norms:
        print(" ".join(map(str, C.norms)))
    else:
        for row in C.gram:
            print(" ".join(f"{x:3d}" for x in row))
    return EXIT_OK


def cmd_ctype_recover(args):
    L = _read_gram(args.gram)
    found = ctype.is_ctype(L)
    if found is None:
        print("not C-type", file=sys.stderr)
        print(_dump({"is_ctype": False}))
        return EXIT_NO
    (p, q), M = found
    print(_dump({"is_ctype": True, "p": p, "q": q, "witness": [list(r) for r in M]}))
    return EXIT_OK


def cmd_cm_enum(args):
    for length in ([args.len] if args.exact else range(1, args.len + 1)):
        for sigma in changemaker.enumerate_changemakers(length, args.norm_max):
            if args.json:
                print(_dump({"sigma": list(sigma), "norm": changemaker.norm(sigma)}))
            else:
                print(" ".join(map(str, sigma)))
    return EXIT_OK


def cmd_cm_basis(args):
    sigma = _ints(args.sigma)
    try:
        S = changemaker.standard_basis(sigma)
    except ValueError as exc:
        raise UsageError(str(exc))
    if args.json:
        print(_dump([{"j": j, "vector": list(S.v(j)), "kind": S.kind(j),
                      "gappy_indices": list(S.gappy_indices[j - 1])}
                     for j in range(1, len(S.vectors) + 1)]))
    else:
        for j in range(1, len(S.vectors) + 1):
            gaps = S.gappy_indices[j - 1]
            extra = f" gaps={','.join(map(str, gaps))}" if gaps else ""
            print(f"v{j}", " ".join(f"{c:2d}" for c in S.v(j)), S.kind(j) + extra)
    return EXIT_OK


def cmd_iso(args):
    L1, L2 = _read_gram(args.gram1), _read_gram(args.gram2)
    M = isometry.are_isometric(L1, L2)
    if M is None:
        print("not isometric")
        return EXIT_NO
    print(_dump({"isometric": True, "witness": [list(r) for r in M]}))
    return EXIT_OK


def cmd_classify(args):
    try:
        recs = families.classify(args.p, args.q)
    except ValueError as exc:
        raise UsageError(str(exc))
    print(_dump({"p": args.p, "q": args.q, "families": [r.as_dict() for r in recs]}))
    return EXIT_OK if recs else EXIT_NO


def cmd_verify_tables(args):
    reports = families.verify_tables(args.s_max, args.t_max)
    by_row = {}
    for rep in reports:
        by_row.setdefault(rep.row_id, []).append(rep)
    if args.json:
        print(_dump([rep.as_dict() for rep in reports]))
    else:
        for row_id, reps in by_row.items():
            bad = [r for r in reps if not r.ok]
            status = "PASS" if not bad else "FAIL"
            detail = "" if not bad else f" first failure s={bad[0].s} t={bad[0].t}: ({bad[0].failed}) {bad[0].message}"
            print(f"{row_id} {status} {len(reps) - len(bad)}/{len(reps)}{detail}")
    ok = all(r.ok for r in reports)
    print(f"{sum(r.ok for r in reports)}/{len(reports)} instances pass", file=sys.stderr)
    return EXIT_OK if ok else EXIT_NO


def _examine(args):
    sigma, exhaustive = args
    return census.examine(sigma, exhaustive=exhaustive)


def _workers(requested):
    if requested is not None:
        return requested
    env = os.environ.get(WORKERS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise UsageError(f"{WORKERS_ENV} must be an integer, got {env!r}")
    return 1


def cmd_search(args):
    jobs = ((sigma, args.exhaustive)
            for length in range(1, args.len + 1)
            for sigma in changemaker.enumerate_changemakers(length, args.norm_max))
    workers = _workers(args.workers)
    try:
        out = open(args.out, "w", newline="") if args.out != "-" else sys.stdout
    except OSError as exc:
        raise UsageError(f"cannot write {args.out}: {exc}")
    writer = None
    if args.csv:
        writer = csv.writer(out, delimiter="|", lineterminator="\n")
        writer.writerow(census.CSV_COLUMNS)
    total = hits = 0
    pool = Pool(workers) if workers > 1 else None
    try:
        # imap keeps enumeration order, so output does not depend on the worker count
        results = pool.imap(_examine, jobs, chunksize=64) if pool else map(_examine, jobs)
        for rec in results:
            total += 1
            if args.only_ctype and not rec.is_ctype:
                continue
            hits += rec.is_ctype
            if writer:
                writer.writerow(rec.csv_row())
            else:
                out.write(rec.to_json(with_witness=args.witness) + "\n")
    finally:
        if pool:
            pool.close()
            pool.join()
        if out is not sys.stdout:
            out.close()
    print(f"{total} changemakers examined, {hits} C-type complements", file=sys.stderr)
    return EXIT_OK


def cmd_alexander(args):
    sigma = _ints(args.sigma)
    try:
        rep = alexander.alexander_report(sigma)
    except ValueError as exc:
        raise UsageError(str(exc))
    if args.json:
        print(_dump(rep.as_dict()))
    else:
        coeffs = rep.polynomial.as_dict()
        print(f"q = {rep.q}")
        print("torsion:", " ".join(map(str, rep.torsion.t)) or "0")
        print("coeffs:", " ".join(f"{i}:{b}" for i, b in sorted(coeffs.items())))
        print(f"genus = {rep.genus}")
        print(f"lspace_shape = {rep.polynomial.lspace_shape()}")
    return EXIT_OK


# -- parser -----------------------------------------------------------------------------


def build_parser():
    ap = argparse.ArgumentParser(prog="prismlattice", description="C-type and changemaker lattice tools")
    sub = ap.add_subparsers(dest="command", required=True)

    cf = sub.add_parser("cf", help="continued fractions").add_subparsers(dest="action", required=True)
    for name, fn, helptext in (("expand", cmd_cf_expand, "expand a rational"),
                               ("eval", cmd_cf_eval, "evaluate a coefficient list")):
        p = cf.add_parser(name, help=helptext)
        kind = p.add_mutually_exclusive_group(required=True)
        kind.add_argument("--neg", action="store_true", help="Hirzebruch-Jung [a1,...]^-")
        kind.add_argument("--pos", action="store_true", help="regular [a1,...]^+")
        if name == "expand":
            p.add_argument("value", help="rational such as 9/7")
        else:
            p.add_argument("coeffs", nargs="+", help="coefficients, space or comma separated")
        p.add_argument("--json", action="store_true")
        p.set_defaults(func=fn)

    lat = sub.add_parser("lattice", help="generic lattice queries").add_subparsers(dest="action", required=True)
    p = lat.add_parser("shortvecs", help="all nonzero vectors of norm <= B")
    p.add_argument("--gram", required=True, help="JSON array-of-arrays file")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_shortvecs)

    ct = sub.add_parser("ctype", help="C-type lattices").add_subparsers(dest="action", required=True)
    p = ct.add_parser("build", help="C(p, q) in its vertex basis")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--gram", action="store_true", help="print the Gram matrix (default)")
    fmt.add_argument("--norms", action="store_true", help="print the vertex norms")
    fmt.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_ctype_build)
    p = ct.add_parser("recover", help="decide whether a Gram matrix is some C(p, q)")
    p.add_argument("--gram", required=True)
    p.set_defaults(func=cmd_ctype_recover)

    cm = sub.add_parser("cm", help="changemaker vectors").add_subparsers(dest="action", required=True)
    p = cm.add_parser("enum", help="changemakers with sigma_0 = 1")
    p.add_argument("--len", type=int, required=True, help="maximum length")
    p.add_argument("--norm-max", type=int, required=True)
    p.add_argument("--exact", action="store_true", help="only the given length")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_cm_enum)
    p = cm.add_parser("basis", help="standard basis of (sigma)^perp")
    p.add_argument("sigma", nargs="+")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_cm_basis)

    p = sub.add_parser("iso", help="isometry test for two Gram matrices")
    p.add_argument("--gram1", required=True)
    p.add_argument("--gram2", required=True)
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("classify", help="families containing (p, q)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify-tables", help="certify every row of the changemaker table")
    p.add_argument("--s-max", type=int, default=5)
    p.add_argument("--t-max", type=int, default=5)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_tables)

    p = sub.add_parser("search", help="exhaustive census of changemaker complements")
    p.add_argument("--len", type=int, required=True, help="maximum length of sigma")
    p.add_argument("--norm-max", type=int, required=True)
    p.add_argument("--out", default="-", help="output file (default stdout)")
    p.add_argument("--csv", action="store_true", help="pipe-separated columns instead of JSON lines")
    p.add_argument("--only-ctype", action="store_true", help="emit C-type records only")
    p.add_argument("--witness", action="store_true", help="include the isometry witness")
    p.add_argument("--exhaustive", action="store_true",
                   help="test every candidate C(p, q) by isometry search instead of recovery")
    p.add_argument("--workers", type=int, default=None, help=f"worker processes (or ${WORKERS_ENV})")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("alexander", help="torsion coefficients and Alexander polynomial of sigma")
    p.add_argument("sigma", nargs="+")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_alexander)
    return ap


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (AssertionError, ArithmeticError) as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


def main():
    sys.exit(run())
