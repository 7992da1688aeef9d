"""Command-line front end.

Exit codes: 0 ok, 1 verification failure, 2 domain/resonance error,
3 polar multiplicity, 64 usage error. Complex numbers are written as
[re, im] pairs.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import warnings

import numpy as np

from . import cfunction, hyperfun, rankone, series, shiftops, spherical, transform
from .errors import HoshiftError
from .root_system import Multiplicity, build_bc, mult_shift_data, rho

EXIT_OK, EXIT_VERIFY, EXIT_DOMAIN, EXIT_POLAR, EXIT_USAGE = 0, 1, 2, 3, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def cpair(z) -> list:
    z = complex(z)
    return [z.real, z.imag]


def _num(x) -> str:
    return repr(float(x))


def _parse_complex_list(text: str) -> list:
    try:
        return [complex(p.strip().replace(" ", "")) for p in text.split(",") if p.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"cannot parse complex list {text!r}") from exc


def _parse_float_list(text: str) -> list:
    try:
        return [float(p) for p in text.split(",") if p.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"cannot parse number list {text!r}") from exc


def _parse_mult(text: str) -> Multiplicity:
    vals = _parse_float_list(text)
    if len(vals) != 3:
        raise argparse.ArgumentTypeError("--mult needs three values m_s,m_m,m_l")
    return Multiplicity(*vals)


def _common(p, lam=True, point=True):
    p.add_argument("--rank", type=int, default=1)
    p.add_argument("--mult", type=_parse_mult, default=Multiplicity(2, 0, 1), help="m_s,m_m,m_l")
    if lam:
        p.add_argument("--lambda", dest="lam", type=_parse_complex_list, default=None,
                       help="comma separated complex coordinates, e.g. 2.3+0.1j,0.5")
    if point:
        p.add_argument("--point", type=_parse_float_list, default=None)
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="hoshift", description="BC_n hypergeometric functions and shift operators")
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="evaluate F, the Frobenius series or a chi-spherical function")
    _common(p)
    p.add_argument("--route", choices=("chamber", "frobenius", "spherical"), default="chamber")
    p.add_argument("--l", type=int, default=0)
    p.add_argument("--sign", type=int, choices=(1, -1), default=1)
    p.add_argument("--picture", choices=spherical.PICTURES, default="noncompact")

    p = sub.add_parser("table", help="Harish-Chandra coefficient table")
    _common(p, point=False)

    p = sub.add_parser("cfunc", help="c-function value and flags")
    _common(p, point=False)

    p = sub.add_parser("verify", help="run invariant suites")
    _common(p, lam=False, point=False)
    p.add_argument("--suite", choices=("all",) + tuple(SUITES), default="all")

    p = sub.add_parser("transform", help="rank-one transform by both routes")
    _common(p, point=False)
    _transform_args(p)

    p = sub.add_parser("growth", help="exponential type of the transform")
    _common(p, lam=False, point=False)
    _transform_args(p)
    p.add_argument("--direction", type=complex, default=1.0)
    p.add_argument("--xi-max", type=float, default=80.0)
    p.add_argument("--xi-count", type=int, default=40)
    p.add_argument("--plot-data", default=None, help="also write whitespace separated columns here")

    p = sub.add_parser("shift-verify", help="per-point residuals of the lowering chain")
    _common(p, point=False)
    p.add_argument("--l", type=int, default=1)
    p.add_argument("--points", type=_parse_float_list, default=None, help="s values")
    return ap


def _transform_args(p):
    p.add_argument("--r", type=float, default=0.3)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--l", type=int, default=1)
    p.add_argument("--nodes", type=int, default=200)
    p.add_argument("--picture", choices=spherical.PICTURES, default=None)


def _lam(args, rank, default):
    lam = args.lam if args.lam is not None else default
    if len(lam) != rank:
        raise UsageError(f"--lambda needs {rank} coordinates, got {len(lam)}")
    return np.array(lam, dtype=np.complex128)


def _emit(args, payload=None, rows=None, header=None):
    if args.format == "csv" and rows is not None:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        text = buf.getvalue()
    else:
        text = json.dumps(payload, indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_eval(args) -> int:
    rs = build_bc(args.rank)
    m = args.mult
    lam = _lam(args, args.rank, [2.3] * args.rank)
    point = args.point if args.point is not None else [0.8 - 0.2 * i for i in range(args.rank)]
    if len(point) != args.rank:
        raise UsageError(f"--point needs {args.rank} coordinates")
    out = {"route": args.route, "lambda": [cpair(z) for z in lam], "m": list(m.as_tuple()),
           "point": list(point)}
    if args.route == "chamber":
        ev = hyperfun.eval_F(lam, m, rs, point, args.order)
        out["value"] = cpair(ev.value)
        out["terms"] = [{"w": str(w), "c": cpair(c), "phi": cpair(p)} for w, c, p in ev.terms]
        out["diagnostics"] = {"truncation": ev.truncation_diag, "cancellation": ev.cancellation,
                              "order": args.order or series.default_order(rs)}
    elif args.route == "frobenius":
        if args.rank != 1:
            raise UsageError("the frobenius route is rank one only; --point is s")
        s = point[0]
        M = args.order or rankone.order_for(lam[0], abs(1 - s) / 2)
        val, diag = rankone.series_eval(rankone.frobenius_build(m.ms, m.ml, lam[0], M), s)
        out["value"] = cpair(val)
        out["diagnostics"] = {"last_term": diag, "order": M}
    else:
        if args.rank != 1:
            raise UsageError("the spherical route is rank one only; --point is t")
        val = spherical.chi_spherical(lam, args.l, m, point[0], args.sign, args.picture)
        out["value"] = cpair(val)
        out["l"] = args.l
        out["sign"] = args.sign
        out["picture"] = args.picture
    _emit(args, out)
    return EXIT_OK


def cmd_table(args) -> int:
    rs = build_bc(args.rank)
    lam = _lam(args, args.rank, [2.3] * args.rank)
    tbl = series.gamma_coefficients(lam, args.mult, rs, args.order)
    if args.format == "csv":
        buf = io.StringIO()
        tbl.to_csv(buf)
        text = buf.getvalue()
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return EXIT_OK
    rows = [{"mu": list(p), "height": h, "gamma": cpair(g)} for p, h, g in tbl.rows()]
    _emit(args, {"lambda": [cpair(z) for z in lam], "m": list(args.mult.as_tuple()),
                 "max_height": tbl.max_height, "table": rows})
    return EXIT_OK


def cmd_cfunc(args) -> int:
    rs = build_bc(args.rank)
    lam = _lam(args, args.rank, list(rho(rs, args.mult)))
    ct = cfunction.c_tilde(lam, args.mult, rs)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        polar = cfunction.is_polar(args.mult, rs)
    out = {"lambda": [cpair(z) for z in lam], "m": list(args.mult.as_tuple())}
    flags = {"is_pole": ct.is_pole, "is_zero": ct.is_zero, "indeterminate": ct.indeterminate,
             "polar": polar}
    out["c"] = cpair(cfunction.c_norm(lam, args.mult, rs))
    out["flags"] = flags
    _emit(args, out)
    return EXIT_OK


def cmd_transform(args) -> int:
    try:
        f = transform.make_bump(args.r)
    except HoshiftError as exc:
        raise UsageError(str(exc)) from None
    lam = _lam(args, 1, [2.0])[0]
    picture = args.picture or "compact"
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        d = transform.transform_direct(f, lam, args.l, args.q, args.nodes, picture)
        s = transform.transform_shifted(f, lam, args.l, args.q, args.nodes, picture)
    out = {"r": args.r, "q": args.q, "l": args.l, "lambda": cpair(lam), "picture": picture,
           "nodes": args.nodes, "direct": cpair(d), "shifted": cpair(s),
           "relative_difference": abs(d - s) / max(abs(d), 1e-300),
           "warnings": [str(w.message) for w in caught]}
    _emit(args, out)
    return EXIT_OK


def cmd_growth(args) -> int:
    try:
        f = transform.make_bump(args.r)
    except HoshiftError as exc:
        raise UsageError(str(exc)) from None
    if args.xi_count < 4:
        raise UsageError("--xi-count must be at least 4")
    xi = np.linspace(args.xi_max / args.xi_count, args.xi_max, args.xi_count)
    picture = args.picture or "noncompact"
    rep = transform.growth_estimate(f, args.direction, args.l, args.q, xi, args.nodes, picture)
    rows = [[_num(x), _num(v.real), _num(v.imag), _num(la)]
            for x, v, la in zip(rep.xi_grid, rep.values, rep.log_abs)]
    if args.plot_data:
        with open(args.plot_data, "w") as fh:
            fh.write("# xi re im log_abs\n")
            for r in rows:
                fh.write(" ".join(r) + "\n")
    out = {"direction": cpair(rep.direction), "r": rep.r, "q": args.q, "l": args.l,
           "picture": picture, "fitted_type": rep.fitted_type, "residual": rep.residual,
           "bound": 1.05 * rep.r + 0.02, "within_bound": rep.fitted_type <= 1.05 * rep.r + 0.02,
           "xi_grid": rep.xi_grid.tolist(), "log_abs": rep.log_abs.tolist()}
    _emit(args, out, rows, ["xi", "re", "im", "log_abs"])
    return EXIT_OK


def cmd_shift_verify(args) -> int:
    m_prime = args.mult
    L = abs(args.l)
    lam = _lam(args, 1, [2.3])[0]
    pts = args.points if args.points is not None else list(np.linspace(-0.5, 2.2, 10))
    M = args.order or 160
    b1 = shiftops.shift_basis()[0]
    target = m_prime - b1 * L
    C = shiftops.chain_constant(m_prime, L)
    chained = shiftops.apply_chain(m_prime, L, rankone.frobenius_build(m_prime.ms, m_prime.ml, lam, M))
    direct = rankone.frobenius_build(target.ms, target.ml, lam, M)
    rows, worst = [], 0.0
    for s in pts:
        a = rankone.series_eval(chained, s)[0] / C
        b = rankone.series_eval(direct, s)[0]
        rel = abs(a - b) / max(abs(b), 1e-300)
        worst = max(worst, rel)
        rows.append([_num(x) for x in (s, a.real, a.imag, b.real, b.imag, abs(a - b), rel)])
    out = {"m_prime": list(m_prime.as_tuple()), "m_target": list(target.as_tuple()), "l": L,
           "lambda": cpair(lam), "chain_constant": C, "max_relative_residual": worst,
           "points": [dict(zip(("s", "chain_re", "chain_im", "direct_re", "direct_im", "abs", "rel"),
                               [float(x) for x in r])) for r in rows]}
    _emit(args, out, rows, ["s", "chain_re", "chain_im", "direct_re", "direct_im", "abs_residual",
                            "rel_residual"])
    return EXIT_OK if worst < 1e-7 else EXIT_VERIFY


# verification suites: each returns (max residual, tolerance)

def _weyl_residual(rng, rank, N, samples=3):
    rs = build_bc(rank)
    worst = 0.0
    for _ in range(samples):
        m = Multiplicity(*rng.uniform(0.5, 2.5, 3))
        lam = rng.uniform(0.3, 2.5, rank) + 1j * rng.uniform(-0.5, 0.5, rank)
        X = 0.6 + 0.4 * np.arange(rank)[::-1] + rng.uniform(0.0, 0.3, rank)
        base = hyperfun.eval_F(lam, m, rs, X, N).value
        for w in rs.weyl_group:
            v = hyperfun.eval_F(w.act(lam), m, rs, X, N).value
            worst = max(worst, abs(v - base) / abs(base))
    return worst


def _suite_weyl(rng):
    return _weyl_residual(rng, 1, 40), 1e-9


def _suite_weyl2(rng):
    return _weyl_residual(rng, 2, 12), 1e-6


def _suite_shift(rng):
    worst = 0.0
    for L in (1, 2):
        for q in (1, 2):
            m = Multiplicity(2 * (q - 1), 0, 1)
            data = mult_shift_data(m, L)
            lam = complex(rng.uniform(0.5, 4), rng.uniform(-1, 1))
            M = 160
            C = shiftops.chain_constant(data.m_prime, L)
            out = shiftops.apply_chain(data.m_prime, L,
                                       rankone.frobenius_build(data.m_prime.ms, data.m_prime.ml, lam, M))
            ref = rankone.frobenius_build(data.m_plus.ms, data.m_plus.ml, lam, M)
            for s in np.linspace(-0.6, 2.4, 7):
                a = rankone.series_eval(out, s)[0] / C
                b = rankone.series_eval(ref, s)[0]
                worst = max(worst, abs(a - b) / abs(b))
    return worst, 1e-7


def _suite_sign(rng):
    worst = 0.0
    for q in (1, 2, 3):
        for L in (0, 1, 2, 3):
            m = (2 * (q - 1), 0, 1)
            lam = complex(rng.uniform(0.5, 4), rng.uniform(-1, 1))
            for t in np.linspace(0.1, 2.0, 5):
                a = spherical.chi_spherical(lam, L, m, t, 1, "compact")
                b = spherical.chi_spherical(lam, L, m, t, -1, "compact")
                worst = max(worst, abs(a - b) / abs(a))
    return worst, 1e-8


def _suite_adjoint(rng):
    worst = 0.0
    for F, H in shiftops.ADJOINT_PAIRS:
        lhs, rhs = shiftops.adjoint_sides(F, H)
        worst = max(worst, abs(lhs - rhs))
    return worst, 1e-8


def _suite_transform(rng):
    worst = 0.0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for q, L, r, lam in ((2, 1, 0.3, 2.0), (1, 2, 0.4, 1.5), (3, 1, 0.35, 2.5 + 0.5j)):
            f = transform.make_bump(r)
            d = transform.transform_direct(f, lam, L, q)
            s = transform.transform_shifted(f, lam, L, q)
            worst = max(worst, abs(d - s) / abs(d))
    return worst, 1e-8


SUITES = {"weyl": _suite_weyl, "weyl2": _suite_weyl2, "shift": _suite_shift, "sign": _suite_sign,
          "adjoint": _suite_adjoint, "transform": _suite_transform}


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    report, ok = [], True
    for name in names:
        rng = np.random.default_rng([args.seed, list(SUITES).index(name)])
        worst, tol = SUITES[name](rng)
        passed = bool(worst < tol)
        ok &= passed
        report.append({"suite": name, "passed": passed, "max_residual": float(worst), "tolerance": tol})
    rows = [[r["suite"], "pass" if r["passed"] else "fail", _num(r["max_residual"]), _num(r["tolerance"])]
            for r in report]
    _emit(args, {"seed": args.seed, "passed": ok, "suites": report}, rows,
          ["suite", "status", "max_residual", "tolerance"])
    return EXIT_OK if ok else EXIT_VERIFY


COMMANDS = {"eval": cmd_eval, "table": cmd_table, "cfunc": cmd_cfunc, "verify": cmd_verify,
            "transform": cmd_transform, "growth": cmd_growth, "shift-verify": cmd_shift_verify}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.cmd](args)
    except UsageError as exc:
        sys.stderr.write(f"hoshift: usage error: {exc}\n")
        return EXIT_USAGE
    except HoshiftError as exc:
        sys.stdout.write(json.dumps({"error": exc.kind, "message": str(exc)}, indent=2) + "\n")
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
