"""Command-line interface: ``nesthilb <command> ...``.

Exit codes: 0 when every check passes, 1 when a check fails, 2 for usage,
parse and input-invariant errors. JSON reports carry a ``report`` key naming
the schema in ``nesthilb/schemas`` they validate against.
"""

import argparse
import csv
import io
import json
import sys

from . import __version__
from .errors import (DegenerateParameters, InvariantViolation, NesthilbError, NotNested,
                     ParseError, ZeroFunctional)
from .exactcore.field import Field
from .io import chain_to_json, ideal_to_json, parse_input, point_to_json
from .ideal import ZeroDimIdeal
from .nest import NestChain, elementary_transform, intermediate_chain, residual, validate_chain
from .resolution import resolution_report
from .sampling import make_rng


class UsageError(Exception):
    pass


def _field_arg(text):
    try:
        return Field.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_list(text):
    try:
        return [int(v) for v in text.replace(" ", "").split(",") if v]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _scalar_list(text):
    return [v for v in text.replace(" ", "").split(",") if v]


def _add_common(p, top=False):
    d = (lambda v: v) if top else (lambda v: argparse.SUPPRESS)
    p.add_argument("--field", type=_field_arg, default=d(None),
                   help="q or fp:<prime> (default: the input file's field, else fp:32003)")
    p.add_argument("--seed", type=int, default=d(0), help="seed for every random choice")
    p.add_argument("--format", choices=["json", "csv"], default=d("json"))
    p.add_argument("--out", default=d(None), help="write the report here instead of stdout")


def _field(args):
    return args.field or Field.prime()


def _rows_csv(columns, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow(["" if r.get(c) is None else r.get(c) for c in columns])
    return buf.getvalue()


class Output:
    """A report plus an optional CSV rendering and a pass/fail verdict."""

    def __init__(self, report, ok=True, csv_text=None, text=None):
        self.report = report
        self.ok = ok
        self.csv_text = csv_text
        self.text = text


def _need_ideal(obj, what):
    if not isinstance(obj, ZeroDimIdeal):
        raise UsageError(f"{what} needs an ideal file (with 'pieces')")
    return obj


def _need_chain(obj, what):
    if not isinstance(obj, NestChain):
        raise UsageError(f"{what} needs a chain file (with 'ideals')")
    return obj


# -- commands -----------------------------------------------------------------

def cmd_resolve(args):
    I = _need_ideal(parse_input(args.input, args.field), "resolve")
    pieces = []
    for p, local in I.pieces.items():
        rep = resolution_report(local)
        rep["point"] = point_to_json(I.field, p)
        pieces.append(rep)
    ok = all(r["minor_identity"] for r in pieces)
    rows = [{"point": " ".join(map(str, r["point"])), "colength": r["colength"],
             "generators": len(r["generators"]), "e0": r["ext_dims"][0], "e1": r["ext_dims"][1],
             "e2": r["ext_dims"][2], "minor_identity": r["minor_identity"],
             "rho_surjective": r["rho_surjective"]} for r in pieces]
    cols = ["point", "colength", "generators", "e0", "e1", "e2", "minor_identity",
            "rho_surjective"]
    return Output({"report": "resolve", "field": I.field.to_json(), "colength": I.colength,
                   "pieces": pieces, "ok": ok}, ok, _rows_csv(cols, rows))


def cmd_ext_check(args):
    I = _need_ideal(parse_input(args.input, args.field), "ext-check")
    pieces = []
    for p, local in I.pieces.items():
        rep = resolution_report(local)
        e = rep["ext_dims"]
        pieces.append({"point": point_to_json(I.field, p), "colength": local.colength,
                       "ext_dims": e, "e0_ok": e[0] == local.colength,
                       "e2_ok": e[2] == local.colength,
                       "rho_surjective": rep["rho_surjective"]})
    ok = all(r["e0_ok"] and r["e2_ok"] and r["rho_surjective"] for r in pieces)
    rows = [{**r, "point": " ".join(map(str, r["point"])), "e0": r["ext_dims"][0],
             "e1": r["ext_dims"][1], "e2": r["ext_dims"][2]} for r in pieces]
    cols = ["point", "colength", "e0", "e1", "e2", "e0_ok", "e2_ok", "rho_surjective"]
    return Output({"report": "ext_check", "field": I.field.to_json(), "pieces": pieces,
                   "ok": ok}, ok, _rows_csv(cols, rows))


def cmd_chain_validate(args):
    chain = parse_input(args.input, args.field, check=False)
    if isinstance(chain, ZeroDimIdeal):
        chain = NestChain([chain])
    rep = validate_chain(chain)
    out = {"report": "chain_validate", "field": chain.field.to_json(), **rep.to_json(),
           "detail": rep.detail}
    rows = [{"index": k, "colength": n, "contained_in_previous": "" if k == 0 else rep.links[k - 1]}
            for k, n in enumerate(rep.lengths)]
    return Output(out, rep.valid,
                  _rows_csv(["index", "colength", "contained_in_previous"], rows))


def _chain_rows(chain):
    return [{"index": k, "colength": I.colength,
             "support": " ".join("(" + ",".join(map(str, point_to_json(I.field, p))) + ")"
                                 for p in I.support())}
            for k, I in enumerate(chain.ideals)]


def cmd_chain_interpolate(args):
    chain = _need_chain(parse_input(args.input, args.field), "chain interpolate")
    if len(chain) != 2:
        raise UsageError("chain interpolate needs a chain of exactly two ideals I ⊇ J")
    I, J = chain.ideals
    targets = args.targets
    if targets is None:
        targets = list(range(I.colength + 1, J.colength))
    full = intermediate_chain(I, J, targets)
    rep = validate_chain(full)
    want = [I.colength] + sorted(targets) + [J.colength]
    ok = rep.valid and rep.lengths == want
    out = {"report": "chain_interpolate", **chain_to_json(full), "lengths": rep.lengths,
           "valid": rep.valid, "ok": ok}
    return Output(out, ok, _rows_csv(["index", "colength", "support"], _chain_rows(full)))


def cmd_chain_transform(args):
    I = _need_ideal(parse_input(args.input, args.field), "chain transform")
    field = I.field
    try:
        point = tuple(field(v) for v in args.point)
        phi = [field(v) for v in args.phi]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad scalar: {exc}") from None
    if len(point) != 2:
        raise UsageError("--point needs two coordinates")
    J = elementary_transform(I, point, phi)
    res = residual(I, J)
    ok = res.total == 1 and validate_chain(NestChain([I, J])).valid
    out = {"report": "chain_transform", "field": field.to_json(),
           "ideal": ideal_to_json(J, with_field=False), "colength": J.colength,
           "residual": [{"point": point_to_json(field, p), "multiplicity": m}
                        for p, m in res.points], "ok": ok}
    rows = [{"colength": J.colength, "point": " ".join(map(str, point_to_json(field, p))),
             "multiplicity": m} for p, m in res.points]
    return Output(out, ok, _rows_csv(["colength", "point", "multiplicity"], rows))


def cmd_strata_census(args):
    from math import comb

    from .strata import census_to_csv, emptiness_census
    field = _field(args)
    reports = []
    for i in args.i:
        ns = [args.n] if args.n is not None else range(1, comb(i, 2) + 1)
        reports += [emptiness_census(n, i, field) for n in ns]
    ok = all(r.consistent for r in reports)
    return Output({"report": "strata_census", "reports": [r.to_json() for r in reports],
                   "ok": ok}, ok, census_to_csv(reports))


def cmd_strata_bounds(args):
    from .strata import bound_tables
    table = bound_tables(args.i_max)
    return Output({"report": "strata_bounds", **table.to_json()}, table.ok, table.to_csv())


TANGENT_COLUMNS = ["pattern", "n", "fixed_point", "lengths", "tangent_dim", "expected_dim",
                   "excess"]


def _tangent_row(rep):
    d = rep.to_json()
    d["lengths"] = " ".join(map(str, d["lengths"]))
    return d


def cmd_tangent(args):
    from .tangent import tangent_dim_chain
    path = args.input or args.chain_file
    if path is None or (args.input and args.chain_file):
        raise UsageError("tangent needs exactly one input file")
    obj = parse_input(path, args.field)
    rep = tangent_dim_chain(obj, args.label or str(path))
    out = {"report": "tangent", **rep.to_json()}
    return Output(out, True, _rows_csv(TANGENT_COLUMNS[2:], [_tangent_row(rep)]))


def cmd_census(args):
    from .tangent import census, parse_pattern, summarize
    try:
        offsets = parse_pattern(args.pattern)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    reports = census(offsets, args.n_max, _field(args), n_min=args.n_min)
    summary = summarize(reports)
    out = {"report": "census", "pattern": args.pattern, "summary": summary,
           "points": [r.to_json() for r in reports]}
    # the identity pattern (and n,n+1) must be smooth; longer patterns only bounded below
    if len(offsets) == 1 or offsets == [0, 1]:
        ok = all(r.excess == 0 for r in reports)
    else:
        ok = all(r.excess >= 0 for r in reports)
    out["ok"] = ok
    return Output(out, ok, _rows_csv(TANGENT_COLUMNS, [_tangent_row(r) for r in reports]))


def _param_vectors(args):
    from .family23 import ParameterVector
    field = _field(args)
    rng = make_rng(args.seed)
    return [ParameterVector.random(field, rng) for _ in range(args.samples)]


def cmd_family23_verify(args):
    from .family23 import verify_family
    samples = _param_vectors(args)
    rows = []
    for k, a in enumerate(samples):
        rep = verify_family(a, literal_i4=args.literal_i4)
        rows.append({"sample": k, "ok": rep["ok"], "valid": rep["valid"],
                     "lengths_ok": rep["lengths_ok"], "m7_contained": rep["m7_contained"],
                     "genericity_ok": rep["genericity_ok"], "diagnostics": rep["diagnostics"]})
    ok = all(r["ok"] for r in rows)
    cols = ["sample", "ok", "valid", "lengths_ok", "m7_contained", "genericity_ok"]
    return Output({"report": "family23_verify", "field": _field(args).to_json(),
                   "seed": args.seed, "samples": rows, "ok": ok}, ok, _rows_csv(cols, rows))


def cmd_family23_rank(args):
    from .family23 import N_PARAMS, differential_rank
    rows = []
    for k, a in enumerate(_param_vectors(args)):
        try:
            rows.append({"sample": k, "rank": differential_rank(a, literal_i4=args.literal_i4)})
        except DegenerateParameters as exc:
            rows.append({"sample": k, "rank": None, "degenerate_index": exc.index})
    ok = all(r["rank"] == N_PARAMS for r in rows)
    return Output({"report": "family23_rank", "field": _field(args).to_json(),
                   "seed": args.seed, "parameters": N_PARAMS, "samples": rows, "ok": ok},
                  ok, _rows_csv(["sample", "rank"], rows))


def cmd_family23_summary(args):
    from .family23 import reducibility_summary
    try:
        summ = reducibility_summary([args.lengths] if args.lengths else ())
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    ok = summ["reducible"]
    row = {k: v for k, v in summ.items() if k != "tuples"}
    cols = ["punctual_family_dim", "global_component_dim", "curvilinear_dim", "reducible"]
    return Output({"report": "family23_summary", **summ, "ok": ok}, ok, _rows_csv(cols, [row]))


def cmd_suite(args):
    from .suites import SUITES, run_suite
    if args.name not in SUITES and args.name != "all":
        raise UsageError(f"unknown suite {args.name!r}; choose from "
                         f"{', '.join(sorted(SUITES))} or all")
    text = io.StringIO()
    code, results = run_suite(args.name, args.field, args.seed, stream=text)
    ok = code == 0 and all(r.within_budget for r in results)
    out = {"report": "suite", "suite": args.name, "seed": args.seed,
           "results": [r.to_json() for r in results], "ok": ok}
    rows = [{"criterion": r.number, "name": r.name, "passed": r.passed,
             "seconds": round(r.seconds, 3), "budget": r.budget, "summary": r.summary}
            for r in results]
    csv_text = _rows_csv(["criterion", "name", "passed", "seconds", "budget", "summary"], rows)
    return Output(out, ok, csv_text, text.getvalue())


# -- parser -------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="nesthilb",
        description="Exact computations on Hilbert schemes of points in the plane "
                    "and their nested versions.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _add_common(parser, top=True)
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    def add(parent, name, fn, help_):
        p = parent.add_parser(name, help=help_, description=help_)
        _add_common(p)
        p.set_defaults(func=fn)
        return p

    p = add(sub, "resolve", cmd_resolve, "Hilbert-Burch resolution at each support point")
    p.add_argument("input")
    p = add(sub, "ext-check", cmd_ext_check, "Ext dimensions and the rho surjectivity check")
    p.add_argument("input")

    chain = sub.add_parser("chain", help="nested chains of ideals")
    csub = chain.add_subparsers(dest="chain_command", metavar="action")
    csub.required = True
    p = add(csub, "validate", cmd_chain_validate, "check containments and colengths")
    p.add_argument("input")
    p = add(csub, "interpolate", cmd_chain_interpolate,
            "fill in intermediate ideals between I ⊇ J")
    p.add_argument("input")
    p.add_argument("--targets", type=_int_list, default=None,
                   help="intermediate colengths (default: every one)")
    p = add(csub, "transform", cmd_chain_transform, "elementary transformation at a point")
    p.add_argument("input")
    p.add_argument("--point", type=_scalar_list, required=True, help="x,y")
    p.add_argument("--phi", type=_scalar_list, required=True,
                   help="functional on the fiber, comma-separated")

    strata = sub.add_parser("strata", help="generator-count strata")
    ssub = strata.add_subparsers(dest="strata_command", metavar="action")
    ssub.required = True
    p = add(ssub, "census", cmd_strata_census, "emptiness census over monomial ideals")
    p.add_argument("--i", type=_int_list, default=[3, 4, 5], help="generator counts")
    p.add_argument("--n", type=int, default=None, help="colength bound (default: 1..C(i,2))")
    p = add(ssub, "bounds", cmd_strata_bounds, "codimension bound tables")
    p.add_argument("--i-max", type=int, default=12)

    p = add(sub, "tangent", cmd_tangent, "tangent space dimension at an ideal or chain")
    p.add_argument("input", nargs="?")
    p.add_argument("--chain", dest="chain_file", default=None, help="same as the positional file")
    p.add_argument("--label", default=None)

    p = add(sub, "census", cmd_census, "tangent dimensions at all torus-fixed chains")
    p.add_argument("--pattern", default="n", help="e.g. n,n+1,n+2")
    p.add_argument("--n-max", "--nmax", dest="n_max", type=int, default=4)
    p.add_argument("--n-min", type=int, default=1)

    fam = sub.add_parser("family23", help="the 46-parameter family of length-23 chains")
    fsub = fam.add_subparsers(dest="family_command", metavar="action")
    fsub.required = True
    for name, fn, help_ in (("verify", cmd_family23_verify, "build and validate random members"),
                            ("rank", cmd_family23_rank, "differential rank at random members")):
        p = add(fsub, name, fn, help_)
        p.add_argument("--samples", type=int, default=5)
        p.add_argument("--literal-i4", action="store_true",
                       help="build I_4 from its two quadrics alone")
    p = add(fsub, "summary", cmd_family23_summary, "dimension count and reducibility criterion")
    p.add_argument("--lengths", type=_int_list, default=None,
                   help="also evaluate the criterion for this length tuple")

    p = add(sub, "suite", cmd_suite, "run an acceptance suite")
    p.add_argument("name", help="smoothness, strata, family23, resolution, nest or all")
    return parser


def _emit(out, args):
    fmt = args.format
    if fmt == "csv":
        if out.csv_text is None:
            raise UsageError("this command has no csv output")
        text = out.csv_text
    else:
        text = json.dumps(out.report, indent=2, default=str) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        out = args.func(args)
        if out.text:
            sys.stderr.write(out.text)
        _emit(out, args)
    except UsageError as exc:
        print(f"nesthilb: error: {exc}", file=sys.stderr)
        return 2
    except (ParseError, InvariantViolation) as exc:
        print(f"nesthilb: input error: {exc}", file=sys.stderr)
        return 2
    except (NotNested, ZeroFunctional, ValueError) as exc:
        print(f"nesthilb: error: {exc}", file=sys.stderr)
        return 2
    except NesthilbError as exc:
        print(f"nesthilb: failed: {exc}", file=sys.stderr)
        return 1
    return 0 if out.ok else 1


if __name__ == "__main__":
    sys.exit(main())
