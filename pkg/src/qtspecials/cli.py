"""Command-line interface: tables, identity verification and sampling.

Every rational in the output is rendered as "p/q" with an explicit
denominator; nothing is ever printed as a decimal.  Output is byte-stable
for a fixed command line and seed.  The JSON shapes are documented in the
README.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .errors import QtError
from .identities import run_identity_suite, run_specials_suite
from .partitions import enumerate_sub, format_partition, parse_partition
from .scalars import as_rational, format_rational, parse_rational
from .wcore import AtPoint, FormalQ, QtPoint


def _seed_default() -> int:
    env = os.environ.get("QTSPECIALS_SEED")
    return int(env) if env else 0


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=("json", "csv"), default="json",
                   help="output format (default json)")
    p.add_argument("--out", help="write output to this path instead of stdout")


def _add_point(p: argparse.ArgumentParser, need_alpha=True):
    p.add_argument("--q", help='rational literal, e.g. "1/2"')
    p.add_argument("--t", help='rational literal, e.g. "1/3"')
    if need_alpha:
        p.add_argument("--alpha", type=int,
                       help="positive integer: report the t=q^alpha, q->1 limit")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qtspecials",
        description="Exact partition-indexed qt-special numbers: tables, "
                    "identity verification, densities and sampling.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("binom", help="one qt-binomial coefficient")
    p.add_argument("--lambda", dest="lam", required=True, help='partition, e.g. "2,1"')
    p.add_argument("--mu", required=True, help="partition (same length)")
    _add_point(p)
    _add_common(p)

    p = sub.add_parser("stirling", help="table of qt-Stirling numbers")
    p.add_argument("--kind", choices=("first", "second"), required=True)
    p.add_argument("--bound", required=True, help="top partition of the table")
    _add_point(p)
    p.add_argument("--seed", type=int, default=None)
    _add_common(p)

    for name in ("bernoulli", "bell", "catalan", "fibonacci"):
        p = sub.add_parser(name, help=f"qt-{name} number(s)")
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--lambda", dest="lam", help="single partition")
        g.add_argument("--bound", help="emit the whole table below this partition")
        _add_point(p)
        _add_common(p)

    p = sub.add_parser("verify", help="run the full identity suite")
    p.add_argument("--bound", required=True, help='e.g. "3,3" (length sets n)')
    p.add_argument("--n", type=int, default=None,
                   help="optional sanity check against the bound length")
    p.add_argument("--points", type=int, default=5)
    p.add_argument("--seed", type=int, default=None)
    _add_common(p)

    p = sub.add_parser("density", help="exact masses of one density")
    p.add_argument("--kind", choices=("g", "f", "poisson"), required=True)
    p.add_argument("--lambda", dest="lam", help="required for g and f")
    p.add_argument("--z", required=True)
    _add_point(p, need_alpha=False)
    p.add_argument("--n", type=int, default=None, help="length (poisson only)")
    p.add_argument("--part-cap", type=int, default=10)
    p.add_argument("--trunc", type=int, default=40)
    _add_common(p)

    p = sub.add_parser("sample", help="seeded draws from a density")
    p.add_argument("--kind", choices=("g", "f", "poisson"), required=True)
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--z", required=True)
    _add_point(p, need_alpha=False)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--part-cap", type=int, default=10)
    p.add_argument("--trunc", type=int, default=40)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, default=None)
    _add_common(p)

    p = sub.add_parser("exp", help="both exponentials: product vs series")
    p.add_argument("--z", required=True)
    _add_point(p, need_alpha=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--part-cap", type=int, default=20)
    p.add_argument("--trunc", type=int, default=40)
    _add_common(p)

    return parser


def _point_from(args, n: int, max_part: int) -> QtPoint:
    if args.q is None or args.t is None:
        raise ValueError("--q and --t are required here")
    return QtPoint(parse_rational(args.q), parse_rational(args.t),
                   n=n, max_part=max_part)


def _value_mode(args, lam):
    """AtPoint when q,t given; alpha-limit when --alpha given."""
    if getattr(args, "alpha", None) is not None:
        if args.q is not None or args.t is not None:
            raise ValueError("--alpha excludes --q/--t")
        return None  # caller takes the alpha-limit path
    return AtPoint(_point_from(args, len(lam), max(lam[0] + 2, 4)))


def _emit(args, payload: dict, csv_rows):
    """payload for json; (header, rows) for csv."""
    if args.format == "json":
        text = json.dumps(payload, indent=2) + "\n"
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        header, rows = csv_rows
        w.writerow(header)
        w.writerows(rows)
        text = buf.getvalue()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_binom(args) -> int:
    from .binomial import qt_binomial
    from .specials import alpha_limit

    lam = parse_partition(args.lam)
    mu = tuple(int(x) for x in args.mu.split(","))
    if args.alpha is not None:
        value = alpha_limit(lambda m: qt_binomial(lam, mu, m), args.alpha)
        meta = {"alpha": args.alpha}
    else:
        mode = _value_mode(args, lam)
        value = qt_binomial(lam, mu, mode)
        meta = {"q": args.q, "t": args.t}
    payload = {"command": "binom", "lambda": format_partition(lam),
               "mu": format_partition(mu), **meta,
               "value": format_rational(value)}
    _emit(args, payload, (("lambda", "mu", "value"),
                          [(format_partition(lam), format_partition(mu),
                            format_rational(value))]))
    return 0


def _cmd_stirling(args) -> int:
    from .specials import StirlingTable

    bound = parse_partition(args.bound)
    mode = _value_mode(args, bound) if args.alpha is None else None
    if mode is None:
        from .specials import alpha_limit, stirling

        entries = {}
        for nu in enumerate_sub(bound):
            for mu in enumerate_sub(nu):
                entries[(nu, mu)] = alpha_limit(
                    lambda m, nu=nu, mu=mu: stirling(args.kind, nu, mu, m),
                    args.alpha,
                )
        meta = {"alpha": args.alpha}
    else:
        table = StirlingTable.build(args.kind, bound, mode)
        entries = table.entries
        meta = {"q": args.q, "t": args.t}
    nested: dict = {}
    rows = []
    for (nu, mu), val in entries.items():
        nested.setdefault(format_partition(nu), {})[format_partition(mu)] = (
            format_rational(val)
        )
        rows.append((format_partition(nu), format_partition(mu), format_rational(val)))
    payload = {"command": "stirling", "kind": args.kind, "n": len(bound),
               "bound": format_partition(bound), **meta,
               "seed": args.seed if args.seed is not None else _seed_default(),
               "entries": nested}
    _emit(args, payload, (("nu", "mu", "value"), rows))
    return 0


def _cmd_sequence(args, name: str) -> int:
    from . import specials

    fn = getattr(specials, name)
    shape = parse_partition(args.lam if args.lam else args.bound)
    lams = [shape] if args.lam else enumerate_sub(shape)
    values = {}
    if args.alpha is not None:
        for lam in lams:
            values[lam] = specials.alpha_limit(
                lambda m, lam=lam: fn(lam, m), args.alpha)
        meta = {"alpha": args.alpha}
    else:
        # window covers the doubled index that the Catalan ratio reaches
        point = _point_from(args, len(shape), 2 * shape[0] + 2 if shape[0] else 4)
        mode = AtPoint(point)
        for lam in lams:
            values[lam] = fn(lam, mode)
        meta = {"q": args.q, "t": args.t}
    table = {format_partition(l): format_rational(v) for l, v in values.items()}
    payload = {"command": name, **meta, "values": table}
    rows = [(format_partition(l), format_rational(v)) for l, v in values.items()]
    _emit(args, payload, (("lambda", "value"), rows))
    return 0


def _cmd_verify(args) -> int:
    bound = parse_partition(args.bound)
    if args.n is not None and args.n != len(bound):
        raise ValueError(f"--n {args.n} does not match bound length {len(bound)}")
    seed = args.seed if args.seed is not None else _seed_default()
    report = run_identity_suite(bound, points=args.points, seed=seed)
    run_specials_suite(bound, points=min(args.points, 3), seed=seed, report=report)
    payload = report.to_dict()
    rows = [(c["name"],
             ";".join(f"{k}={v}" for k, v in c["params"].items()),
             c["residual"], str(c["pass"]).lower())
            for c in payload["checks"]]
    _emit(args, payload, (("name", "params", "residual", "pass"), rows))
    return 0 if report.all_pass else 1


def _density_spec(args):
    from .distributions import DensitySpec

    z = parse_rational(args.z)
    if args.kind == "poisson":
        if args.n is None:
            raise ValueError("--n is required for the poisson density")
        point = _point_from(args, args.n, max(args.part_cap + 1, 4))
        return DensitySpec(kind="poisson", z=z, point=point,
                           part_cap=args.part_cap, trunc=args.trunc)
    if not args.lam:
        raise ValueError("--lambda is required for g and f")
    lam = parse_partition(args.lam)
    point = _point_from(args, len(lam), max(lam[0] + 2, 4))
    kind = {"g": "binomial_g", "f": "binomial_f"}[args.kind]
    return DensitySpec(kind=kind, z=z, point=point, lam=lam)


def _cmd_density(args) -> int:
    from .distributions import density, poisson_normalization

    spec = _density_spec(args)
    masses = {mu: density(spec, mu) for mu in spec.support()}
    total = sum(masses.values(), as_rational(0))
    payload = {"command": "density", "kind": args.kind, "z": args.z,
               "q": args.q, "t": args.t,
               "masses": {format_partition(m): format_rational(v)
                          for m, v in masses.items()},
               "total": format_rational(total)}
    if args.kind == "poisson":
        _, tail = poisson_normalization(spec)
        payload["tail_bound"] = format_rational(tail)
    rows = [(format_partition(m), format_rational(v)) for m, v in masses.items()]
    rows.append(("total", format_rational(total)))
    _emit(args, payload, (("partition", "mass"), rows))
    return 0


def _cmd_sample(args) -> int:
    from .distributions import sample

    spec = _density_spec(args)
    seed = args.seed if args.seed is not None else _seed_default()
    result = sample(spec, args.count, seed)
    text = "\n".join(result.to_jsonl_lines()) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_exp(args) -> int:
    from .distributions import exp_E, exp_e

    z = parse_rational(args.z)
    point = _point_from(args, args.n, max(args.part_cap + 1, 4))
    E = exp_E(z, point, args.n, args.part_cap, args.trunc)
    e = exp_e(z, point, args.n, args.part_cap, args.trunc)
    Eneg = exp_E(-z, point, args.n, args.part_cap, args.trunc)
    recip = e.series * Eneg.series - 1
    payload = {
        "command": "exp", "z": args.z, "q": args.q, "t": args.t, "n": args.n,
        "part_cap": args.part_cap, "trunc": args.trunc,
        "upper": {"product": format_rational(E.product),
                  "series": format_rational(E.series),
                  "difference": format_rational(E.difference)},
        "lower": {"product": format_rational(e.product),
                  "series": format_rational(e.series),
                  "difference": format_rational(e.difference)},
        "reciprocal_residual": format_rational(recip),
    }
    rows = [("upper_product", format_rational(E.product)),
            ("upper_series", format_rational(E.series)),
            ("lower_product", format_rational(e.product)),
            ("lower_series", format_rational(e.series)),
            ("reciprocal_residual", format_rational(recip))]
    _emit(args, payload, (("quantity", "value"), rows))
    return 0


_DISPATCH = {
    "binom": _cmd_binom,
    "stirling": _cmd_stirling,
    "verify": _cmd_verify,
    "density": _cmd_density,
    "sample": _cmd_sample,
    "exp": _cmd_exp,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command in ("bernoulli", "bell", "catalan", "fibonacci"):
            return _cmd_sequence(args, args.command)
        return _DISPATCH[args.command](args)
    except (QtError, ValueError, ZeroDivisionError) as exc:
        record = {"error": {"type": type(exc).__name__, "message": str(exc)}}
        sys.stdout.write(json.dumps(record) + "\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
