"""Command-line front end.

    mickepler spectrum --s 1/2 --m 1/2 --lambda1 0.5 --lambda2 0.25 --n-max 2
    mickepler eval --basis spherical --n 2 --j 1 --points 10
    mickepler coefficients --s 0 --m 0 --n-max 3 --format csv
    mickepler verify all --n-max 3 --seed 7

Exit codes: 0 success, 1 a verification check failed, 2 usage error or an
inadmissible quantum number (the message names the violated rule).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from .basis_mic import psi
from .channels import (Constants, OscCylindricalQN, OscSphericalQN, ParabolicQN,
                       QuantumNumberError, SphericalQN, energy_mic, epsilon_scale,
                       format_half, half_int, make_channel)
from .coords import Hyperspherical4, Spherical3
from .interbasis import coefficient_table, expand_osc_cylindrical
from .ks_duality import hyperspherical_to_cart4, osc_params_from_level
from .oscillator4d import osc_energy, psi_osc
from .specfun import DomainError
from .verify import GridSpec, default_channels, reports_to_json, run_checks

CHECKS = ("ortho", "residual-mic", "residual-osc", "interbasis", "duality", "eigen",
          "spectrum", "all")
BASES = ("spherical", "parabolic", "osc-spherical", "osc-cylindrical")


def fmt_num(x) -> str:
    """17 significant digits, lowercase scientific notation."""
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return str(x)
    if isinstance(x, (float, np.floating)):
        return f"{float(x):.16e}"
    return str(x)


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("units and channel")
    g.add_argument("--hbar", type=float, default=1.0)
    g.add_argument("--mass", type=float, default=1.0)
    g.add_argument("--charge", type=float, default=1.0)
    g.add_argument("--s", default=None, help='half-integer, e.g. "1/2" or "0.5" (default 0)')
    g.add_argument("--m", default=None, help="half-integer (default 0)")
    g.add_argument("--lambda1", type=float, default=None)
    g.add_argument("--lambda2", type=float, default=None)
    o = p.add_argument_group("output")
    o.add_argument("--format", choices=("json", "csv"), default="json")
    o.add_argument("--out", default=None, help="output file (default stdout)")
    o.add_argument("--seed", type=int, default=0)
    o.add_argument("--grid-radial", type=int, default=None)
    o.add_argument("--grid-angular", type=int, default=None)
    o.add_argument("--workers", type=int, default=None, help="default: available CPUs")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    ap = argparse.ArgumentParser(prog="mickepler", description=__doc__.split("\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", parents=[common], help="levels and dual oscillator data")
    sp.add_argument("--n-max", default="4")

    ev = sub.add_parser("eval", parents=[common], help="wavefunction values along a ray")
    ev.add_argument("--basis", choices=BASES, required=True)
    ev.add_argument("--n", default=None)
    ev.add_argument("--j", default=None)
    ev.add_argument("--n1", type=int, default=None)
    ev.add_argument("--n2", type=int, default=None)
    ev.add_argument("--N", type=int, default=None, dest="N")
    ev.add_argument("--L", default=None, dest="L")
    ev.add_argument("--N1", type=int, default=None, dest="N1")
    ev.add_argument("--N2", type=int, default=None, dest="N2")
    ev.add_argument("--points", type=int, default=10)
    ev.add_argument("--r-min", type=float, default=0.1, help="first radius (r or u)")
    ev.add_argument("--r-max", type=float, default=5.0)
    ev.add_argument("--theta", type=float, default=1.0, help="theta (3D) or beta (4D)")
    ev.add_argument("--phi", type=float, default=0.0, help="phi (3D) or alpha (4D)")
    ev.add_argument("--gamma", type=float, default=0.0)

    co = sub.add_parser("coefficients", parents=[common], help="interbasis coefficient table")
    co.add_argument("--n-max", default="3")
    co.add_argument("--system", choices=("3d", "4d"), default="3d")

    ve = sub.add_parser("verify", parents=[common], help="run verification suites")
    ve.add_argument("check", choices=CHECKS)
    ve.add_argument("--n-max", default="3")
    ve.add_argument("--n", default=None, help="alias for --n-max")
    ve.add_argument("--channel", action="append", default=None, metavar="S,M,L1,L2",
                    help="channel as s,m,lambda1,lambda2; repeatable")
    ve.add_argument("--tolerance", type=float, default=None,
                    help="replace every tolerance (e.g. 1e-30 forces failures)")
    ve.add_argument("--emit-coefficients", default=None, metavar="PATH",
                    help="also write the 3D coefficient table as CSV")
    return ap


def _constants(args) -> Constants:
    return Constants(hbar=args.hbar, mass=args.mass, charge=args.charge)


def _channel(args):
    return make_channel(args.s or "0", args.m or "0", args.lambda1 or 0.0, args.lambda2 or 0.0,
                        _constants(args))


def _channels_for_verify(args):
    if args.channel:
        out = []
        for text in args.channel:
            parts = [p.strip() for p in text.split(",")]
            if len(parts) not in (2, 4):
                raise QuantumNumberError(f"--channel needs s,m or s,m,lambda1,lambda2, got {text!r}")
            lam = [float(x) for x in parts[2:]] or [0.0, 0.0]
            out.append(make_channel(parts[0], parts[1], *lam, _constants(args)))
        return out
    if any(v is not None for v in (args.s, args.m, args.lambda1, args.lambda2)):
        return [_channel(args)]
    return default_channels(_constants(args))


def _rows_to_text(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2, sort_keys=True) + "\n"
    if not rows:
        return ""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    keys = list(rows[0])
    w.writerow(keys)
    for row in rows:
        w.writerow([fmt_num(row[k]) for k in keys])
    return buf.getvalue()


def _emit(text: str, path: str | None):
    if path:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_spectrum(args) -> int:
    ch = _channel(args)
    rows = []
    for n in ch.n_values(half_int(args.n_max)):
        op = osc_params_from_level(n, ch)
        N = int(2 * (n - 1))
        oq = OscSphericalQN(N, ch.m_plus, ch.m, ch.s, 2 * ch.lambda1, 2 * ch.lambda2, ch.constants)
        rows.append({
            "n": format_half(n), "j_min": format_half(ch.m_plus), "j_max": format_half(n - 1),
            "E": energy_mic(n, ch), "epsilon": epsilon_scale(n, ch), "omega": op.omega,
            "eps_osc": osc_energy(oq, op), "N": N,
        })
    _emit(_rows_to_text(rows, args.format), args.out)
    return 0


def _need(args, *names):
    missing = [f"--{k}" for k in names if getattr(args, k) is None]
    if missing:
        raise QuantumNumberError(f"basis {args.basis} requires {', '.join(missing)}")


def cmd_eval(args) -> int:
    ch = _channel(args)
    if args.points < 1:
        raise QuantumNumberError("--points must be >= 1")
    radii = np.linspace(args.r_min, args.r_max, args.points)
    if args.r_min <= 0:
        raise QuantumNumberError("--r-min must be > 0 (wavefunctions are evaluated off the origin)")
    if args.basis in ("spherical", "parabolic"):
        if args.basis == "spherical":
            _need(args, "n", "j")
            qn = SphericalQN(half_int(args.n), half_int(args.j), ch)
        else:
            _need(args, "n1", "n2")
            qn = ParabolicQN(args.n1, args.n2, ch)
        p = Spherical3(radii, np.full_like(radii, args.theta), np.full_like(radii, args.phi))
        vals = psi(qn, p)
        coords = {"r": radii, "theta": p.theta, "phi": p.phi}
    else:
        c1, c2 = 2 * ch.lambda1, 2 * ch.lambda2
        if args.basis == "osc-spherical":
            _need(args, "N", "L")
            qn = OscSphericalQN(args.N, half_int(args.L), ch.m, ch.s, c1, c2, ch.constants)
        else:
            _need(args, "N1", "N2")
            qn = OscCylindricalQN(args.N1, args.N2, int(ch.m + ch.s), int(ch.m - ch.s), c1, c2,
                                  ch.constants)
        h = Hyperspherical4(radii, np.full_like(radii, args.phi), np.full_like(radii, args.theta),
                            np.full_like(radii, args.gamma))
        u = hyperspherical_to_cart4(h)
        vals = psi_osc(qn, u)
        coords = {"u": radii, "alpha": h.alpha, "beta": h.beta, "gamma": h.gamma,
                  "u0": u.u0, "u1": u.u1, "u2": u.u2, "u3": u.u3}
    vals = np.asarray(vals, dtype=complex)
    rows = []
    for i in range(len(radii)):
        row = {k: float(v[i]) for k, v in coords.items()}
        row.update(re=float(vals[i].real), im=float(vals[i].imag), abs=float(abs(vals[i])))
        rows.append(row)
    _emit(_rows_to_text(rows, args.format), args.out)
    return 0


def _coefficient_rows(ch, n_max, system: str) -> list[dict]:
    if system == "3d":
        return coefficient_table(ch, n_max)
    rows = []
    for r in coefficient_table(ch, n_max):
        if r["2j"] != int(2 * ch.m_plus):
            continue
        pq = ParabolicQN(r["n1"], r["n2"], ch)
        oq = OscCylindricalQN.from_mic(pq)
        for L, w in expand_osc_cylindrical(oq):
            rows.append({"N": oq.N, "N1": oq.N1, "N2": oq.N2, "M1": oq.M1, "M2": oq.M2,
                         "2L": int(2 * L), "W": w})
    return rows


def cmd_coefficients(args) -> int:
    ch = _channel(args)
    _emit(_rows_to_text(_coefficient_rows(ch, half_int(args.n_max), args.system), args.format),
          args.out)
    return 0


def cmd_verify(args) -> int:
    n_max = half_int(args.n if args.n is not None else args.n_max)
    channels = _channels_for_verify(args)
    grid = GridSpec.from_counts(args.grid_radial, args.grid_angular)
    reports = run_checks([args.check], channels, n_max, grid, args.seed, args.workers,
                         args.tolerance)
    if args.format == "json":
        text = reports_to_json(reports)
    else:
        text = _rows_to_text([{"check_name": r.check_name,
                               "channel": json.dumps(r.parameters.get("channel"), sort_keys=True),
                               "max_error": r.max_error, "tolerance": r.tolerance,
                               "passed": r.passed} for r in reports], "csv")
    _emit(text, args.out)
    if args.emit_coefficients:
        rows = [dict(r, channel=f"{format_half(ch.s)},{format_half(ch.m)},{ch.lambda1!r},{ch.lambda2!r}")
                for ch in channels for r in coefficient_table(ch, n_max)]
        _emit(_rows_to_text(rows, "csv"), args.emit_coefficients)
    failed = [r for r in reports if not r.passed]
    for r in failed:
        print(f"FAILED {r.check_name}: {r.max_error:.3e} > {r.tolerance:.3e}", file=sys.stderr)
    return 1 if failed else 0


COMMANDS = {"spectrum": cmd_spectrum, "eval": cmd_eval, "coefficients": cmd_coefficients,
            "verify": cmd_verify}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (QuantumNumberError, DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
