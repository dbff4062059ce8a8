"""Command-line entry point: ``qhlag <subcommand> ...``.

Ring sources are ``preset:NAME``, ``quadric:N``, ``hypersurface:N,D`` or a
path to a presentation JSON file.  Every report records where its ring
came from.  Exit status: 0 ok, 1 a verification failed, 2 bad usage or
input.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from pathlib import Path

from . import lagrangian as lg
from . import quadalg, refined, specseq
from .exactalg import AlgebraError, CoeffElement, format_fraction
from .presets import hypersurface_model, kunneth, load_preset, quadric, table1_rows
from .qhring import QHElement, mul, parse_ring, pow as qpow, ring_to_document, verify_presentation


class VerificationFailed(Exception):
    """Carries a finished report whose verdict is negative."""

    def __init__(self, report: dict):
        super().__init__("verification failed")
        self.report = report


def load_ring(source: str, verify: bool = True):
    kind, _, arg = source.partition(":")
    if kind == "preset" and arg:
        return load_preset(arg, verify=verify)
    if kind == "quadric" and arg:
        return quadric(int(arg))
    if kind == "hypersurface" and arg:
        n, d = (int(x) for x in arg.split(","))
        return hypersurface_model(n, d)
    path = Path(source)
    if not path.is_file():
        raise AlgebraError(f"ring source {source!r} is neither a known scheme nor a file")
    ring = parse_ring(path)
    if not verify:
        return ring
    report = verify_presentation(ring)
    if not report.passed:
        raise VerificationFailed({"command": "load", "provenance": {"ring": source},
                                  "result": report.to_json()})
    return ring


def _jsonable(x):
    if isinstance(x, Fraction):
        return format_fraction(x)
    if isinstance(x, (QHElement, CoeffElement)):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def dump_json(report: dict) -> str:
    return json.dumps(_jsonable(report), indent=2, sort_keys=True)


def render_text(report, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    for key, value in report.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(render_text(value, indent + 1))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for item in value:
                lines.append(render_text(item, indent + 1))
                lines.append("")
        elif isinstance(value, list):
            lines.append(f"{pad}{key}: " + ", ".join(str(v) for v in _jsonable(value)))
        else:
            lines.append(f"{pad}{key}: {_jsonable(value)}")
    return "\n".join(line for line in lines if line is not None)


def _datum(ring, text: str, chi: int) -> lg.LagrangianDatum:
    return lg.LagrangianDatum.from_class(ring, text, chi)


# -- subcommands ----------------------------------------------------------------------------

def cmd_verify(args):
    ring = load_ring(args.ring, verify=False)
    rep = verify_presentation(ring)
    return {"result": rep.to_json()}, rep.passed


def cmd_mul(args):
    ring = load_ring(args.ring)
    a, b = ring.parse(args.a), ring.parse(args.b)
    return {"result": {"a": a, "b": b, "product": mul(ring, a, b)}}, True


def cmd_pow(args):
    ring = load_ring(args.ring)
    x = ring.parse(args.x)
    return {"result": {"x": x, "k": args.k, "power": qpow(ring, x, args.k)}}, True


def cmd_cubic(args):
    ring = load_ring(args.ring)
    L = _datum(ring, args.lagrangian, args.chi)
    c = ring.parse(args.c) if args.c else None
    cert = lg.cubic_coefficients(ring, L, c)
    out = cert.to_json()
    out["c"] = str(cert.c)
    out["perfect_square"] = lg.is_perfect_square(cert.delta)
    return {"result": out}, cert.residual_zero


def cmd_gamma(args):
    ring = load_ring(args.ring)
    cert = lg.gamma_sphere(ring, _datum(ring, args.lagrangian, args.chi))
    out = cert.to_json()
    out["checks"] = cert.checks
    return {"result": out}, cert.residual_zero and all(
        v for k, v in cert.checks.items() if k != "branch")


def cmd_lambda(args):
    ring = load_ring(args.ring)
    rep = lg.lambda_eigenvalue(ring, ring.parse(args.lagrangian))
    return {"result": rep.to_json()}, rep.verified


def cmd_gw_sum(args):
    ring = load_ring(args.ring)
    L = _datum(ring, args.lagrangian, args.chi)
    value = lg.gw_sigma_sum(ring, ring.parse(args.c), L)
    return {"result": {"c": args.c, "gw_sum": value}}, True


def cmd_ideal(args):
    ring = load_ring(args.ring)
    ideal = lg.ideal_of(ring, ring.parse(args.lagrangian))
    out = {"rank": ideal.rank, "generators": [str(g) for g in ideal.generators],
           "folded_rows": ideal.rows, "closed": ideal.is_closed()}
    ok = out["closed"]
    if args.member:
        out["member"] = args.member
        out["contains"] = ideal.contains(ring.parse(args.member))
    return {"result": out}, ok


def cmd_pair(args):
    ring = load_ring(args.ring)
    rep = lg.pair_relation(ring, _datum(ring, args.l1, args.chi1), _datum(ring, args.l2, args.chi2))
    return {"result": rep.to_json()}, rep.holds


def _model_report(ring, chi):
    L = lg.LagrangianDatum.from_class(ring, "a", chi)
    cube = qpow(ring, L.klass, 3)
    cert = lg.cubic_coefficients(ring, L)
    out = {"cube": cube, "cubic": cert.to_json(), "minimal_chern": ring.minimal_chern}
    cm = ring.minimal_chern
    if cm and L.n % cm == 0:
        g = lg.gamma_sphere(ring, L)
        out["gamma"] = g.gamma
        out["checks"] = g.checks
    return out, cert.residual_zero


def cmd_quadric(args):
    out, ok = _model_report(quadric(args.n), 2)
    return {"provenance": {"ring": f"quadric:{args.n}"}, "result": out}, ok


def cmd_hypersurface(args):
    out, ok = _model_report(hypersurface_model(args.n, args.d), 2)
    return {"provenance": {"ring": f"hypersurface:{args.n},{args.d}"}, "result": out}, ok


def cmd_kunneth(args):
    ring = kunneth(load_ring(args.left), load_ring(args.right))
    out = {"ring": ring.name, "basis_size": len(ring.basis),
           "verified": verify_presentation(ring).passed}
    ok = out["verified"]
    if args.lagrangian:
        L = _datum(ring, args.lagrangian, args.chi)
        cert = lg.cubic_coefficients(ring, L)
        out["cube"] = qpow(ring, L.klass, 3)
        out["cubic"] = cert.to_json()
        ok = ok and cert.residual_zero
    return {"provenance": {"left": args.left, "right": args.right}, "result": out}, ok


def cmd_refined(args):
    if args.refined_cmd == "cubic":
        ring = load_ring(args.ring)
        L = _datum(ring, args.lagrangian, args.chi)
        cert = refined.refined_cubic(ring, L)
        out = cert.to_json()
        out["quotient"] = cert.group.to_json()
        out["specialized_delta"] = str(refined.specialize(cert.delta_t))
        out["orientation_flip"] = refined.orientation_flip_check(ring, L)
        ok = cert.residual_zero and all(cert.checks.values())
        return {"result": out}, ok
    rep = refined.reference_check(args.manifold, getattr(args, "class"))
    return {"provenance": {"reference": "data/reference.json", "ring": f"preset:{args.manifold}"},
            "result": rep.to_json()}, rep.passed


def cmd_specialize(args):
    ring = load_ring(args.ring)
    if args.element:
        x = ring.parse(args.element)
        return {"result": {"element": x,
                           "specialized": refined.specialize(x, args.target, args.maslov)}}, True
    special = refined.specialize(ring, args.target, args.maslov)
    out = {"ring": ring_to_document(special)}
    ok = True
    if args.against:
        other = load_ring(args.against)
        out["matches"] = other.table == special.table and other.names == special.names
        ok = out["matches"]
    return {"result": out}, ok


def _pair_arg(text: str):
    try:
        s, t = (Fraction(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'sigma,tau', got {text!r}") from None
    return quadalg.QuadraticAlgebraPresentation(s, t)


def cmd_quadalg(args):
    a = quadalg.QuadraticAlgebraPresentation(args.sigma, args.tau)
    out = {"sigma": a.sigma, "tau": a.tau, "delta": quadalg.delta(a),
           "normal_form": list(quadalg.normal_form(a))}
    if args.shift is not None:
        b = quadalg.change_lift(a, args.shift)
        out["shifted"] = {"sigma": b.sigma, "tau": b.tau, "delta": quadalg.delta(b)}
    if args.isomorphic is not None:
        out["isomorphic"] = quadalg.isomorphic(a, args.isomorphic)
    return {"result": out}, True


def cmd_specseq(args):
    betti = [int(x) for x in args.betti.split(",")]
    n = len(betti) - 1
    page = specseq.e1_page(betti, args.maslov, n)
    out = {"n": n, "maslov": args.maslov, "nu": page.nu,
           "antidiagonals": {str(t): page.total(t) for t in range(-1, n + 1)},
           "rank_bound_qh_n": specseq.rank_bound_qh_n(betti, args.maslov, n),
           "collapse_forced": specseq.collapse_forced(betti, args.maslov, n)}
    if args.classify:
        out["classification"] = specseq.classify_homology_sphere(
            n, args.maslov, args.nonzero_class).to_json()
    return {"result": out}, True


def table1_row(row: dict) -> dict:
    ring = load_preset(row["manifold"])
    L = lg.LagrangianDatum.from_class(ring, row["class"], 2)
    cert = lg.cubic_coefficients(ring, L)
    lam = lg.lambda_eigenvalue(ring, L.klass)
    ok = (cert.residual_zero and lam.verified and cert.delta == row["delta"]
          and lam.lam == row["lambda"])
    return {"manifold": row["manifold"], "class": row["class"],
            "delta": cert.delta, "expected_delta": row["delta"],
            "lambda": lam.lam, "expected_lambda": row["lambda"], "match": ok}


def cmd_table1(args):
    rows = table1_rows()
    with ThreadPoolExecutor(max_workers=args.jobs) as pool:
        results = list(pool.map(table1_row, rows))
    matched = sum(r["match"] for r in results)
    return {"provenance": {"reference": "data/reference.json"},
            "result": {"rows": results, "summary": f"{matched}/{len(rows)} rows match"}}, \
        matched == len(rows)


# -- parser ---------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qhlag", description="Lagrangian invariants from quantum homology")
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    sub = p.add_subparsers(dest="command", required=True)

    def ring_cmd(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--ring", required=True, help="preset:NAME, quadric:N, hypersurface:N,D or a path")
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        sp.set_defaults(fn=fn)
        return sp

    ring_cmd("verify", cmd_verify, "check a presentation")
    sp = ring_cmd("mul", cmd_mul, "quantum product of two elements")
    sp.add_argument("a")
    sp.add_argument("b")
    sp = ring_cmd("pow", cmd_pow, "quantum power")
    sp.add_argument("x")
    sp.add_argument("k", type=int)
    for name, fn, help_ in (("cubic", cmd_cubic, "cubic relation of [L]"),
                            ("gamma", cmd_gamma, "sphere constant"),
                            ("gw-sum", cmd_gw_sum, "GW sum from the mixed cubic")):
        sp = ring_cmd(name, fn, help_)
        sp.add_argument("--lagrangian", required=True)
        sp.add_argument("--chi", type=int, default=2)
        if name != "gamma":
            sp.add_argument("--c", required=name == "gw-sum")
    sp = ring_cmd("lambda", cmd_lambda, "eigenvalue of PD(c1)*")
    sp.add_argument("--lagrangian", required=True)
    sp = ring_cmd("ideal", cmd_ideal, "ideal generated by [L]")
    sp.add_argument("--lagrangian", required=True)
    sp.add_argument("--member")
    sp = ring_cmd("pair", cmd_pair, "relations between two Lagrangian classes")
    sp.add_argument("--l1", required=True)
    sp.add_argument("--l2", required=True)
    sp.add_argument("--chi1", type=int, default=2)
    sp.add_argument("--chi2", type=int, default=2)

    sp = sub.add_parser("quadric", help="sphere in the quadric model")
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(fn=cmd_quadric)
    sp = sub.add_parser("hypersurface", help="sphere in a Fano hypersurface model")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.set_defaults(fn=cmd_hypersurface)
    sp = sub.add_parser("kunneth", help="product of two presentations")
    sp.add_argument("--left", required=True)
    sp.add_argument("--right", required=True)
    sp.add_argument("--lagrangian")
    sp.add_argument("--chi", type=int, default=4)
    sp.set_defaults(fn=cmd_kunneth)

    sp = sub.add_parser("refined", help="group-ring refinements")
    rsub = sp.add_subparsers(dest="refined_cmd", required=True)
    rc = rsub.add_parser("cubic")
    rc.add_argument("--ring", required=True)
    rc.add_argument("--lagrangian", required=True)
    rc.add_argument("--chi", type=int, default=2)
    rk = rsub.add_parser("check")
    rk.add_argument("--manifold", required=True)
    rk.add_argument("--class", required=True)
    for r in (rc, rk):
        r.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    sp.set_defaults(fn=cmd_refined)

    sp = ring_cmd("specialize", cmd_specialize, "collapse group-ring coefficients")
    sp.add_argument("--target", choices=("q", "t"), default="q")
    sp.add_argument("--maslov", type=int)
    sp.add_argument("--element")
    sp.add_argument("--against", help="ring source to compare the specialized table with")

    sp = sub.add_parser("quadalg", help="quadratic algebra x^2 = sigma x + tau")
    sp.add_argument("--sigma", type=Fraction, required=True)
    sp.add_argument("--tau", type=Fraction, required=True)
    sp.add_argument("--shift", type=Fraction)
    sp.add_argument("--isomorphic", type=_pair_arg, metavar="SIGMA,TAU")
    sp.set_defaults(fn=cmd_quadalg)

    sp = sub.add_parser("specseq", help="E1 page bookkeeping from Betti numbers")
    sp.add_argument("--betti", required=True, help="comma separated b0,...,bn")
    sp.add_argument("--maslov", type=int, required=True)
    sp.add_argument("--classify", action="store_true")
    sp.add_argument("--nonzero-class", action="store_true")
    sp.set_defaults(fn=cmd_specseq)

    sp = sub.add_parser("table1", help="reproduce the discriminant table against reference data")
    sp.add_argument("--jobs", type=int, default=4)
    sp.set_defaults(fn=cmd_table1)
    for name in ("quadric", "hypersurface", "kunneth", "quadalg", "specseq", "table1"):
        sub.choices[name].add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        body, ok = args.fn(args)
    except VerificationFailed as exc:
        body, ok = exc.report, False
    except (lg.NoCubicRelation, refined.ReferenceMissing) as exc:
        print(f"qhlag: {exc}", file=sys.stderr)
        return 1
    except (AlgebraError, ValueError, OSError) as exc:
        print(f"qhlag: error: {exc}", file=sys.stderr)
        return 2
    command = args.command + (f" {args.refined_cmd}" if args.command == "refined" else "")
    report = {"command": command, "ok": ok}
    prov = body.pop("provenance", None)
    if prov is None and getattr(args, "ring", None):
        prov = {"ring": args.ring}
    if prov:
        report["provenance"] = prov
    report.update(body)
    print(dump_json(report) if args.json else render_text(report))
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
