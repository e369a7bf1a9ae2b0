"""Batch command-line driver writing CSV tables.

Exit codes: 0 success, 2 usage or validation error, 3 numerical failure.
Options may also come from a ``key=value`` file given with ``--config``;
command-line flags take precedence over the file.
"""
import argparse
import csv
import io
import math
import sys

from . import constants
from .cavity import BoxCavity, MirrorMicrocavity
from .errors import DomainError, NonConvergenceError, PreconditionError, ResourceError
from .microcavity import L0Convention, ReservoirModel, microcavity_report
from .oracle import DEFAULT_ORACLE_MODES, fit_log_slope, scaling_study, solve_box
from .profile import ProfileRequest, half_width, profile_samples
from .thermo import Dimensionality, ThermoState, critical_densities, solve_mu, u_crit_finite

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERICAL = 3


def fmt(value):
    """Scientific notation with 9 significant digits; ints and strings pass through."""
    if isinstance(value, bool) or isinstance(value, (int, str)):
        return str(value)
    return f"{value:.8e}"


def positive_float(text):
    value = float(text)
    if not (math.isfinite(value) and value > 0):
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text!r}")
    return value


def nonnegative_float(text):
    value = float(text)
    if not (math.isfinite(value) and value >= 0):
        raise argparse.ArgumentTypeError(f"expected a non-negative number, got {text!r}")
    return value


def float_list(text):
    try:
        return [positive_float(v) for v in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def box_arg(text):
    edges = float_list(text)
    if len(edges) != 3:
        raise argparse.ArgumentTypeError(f"--box needs three comma-separated edges, got {text!r}")
    return BoxCavity(*edges)


def positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _common():
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--out", help="write CSV here instead of stdout")
    parent.add_argument("--config", help="key=value file supplying defaults for any long option")
    return parent


def build_parser():
    common = _common()
    parser = argparse.ArgumentParser(prog="photon-bec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("constants", parents=[common], help="physical constants in use")

    p = sub.add_parser("critical", parents=[common], help="critical energy densities")
    p.add_argument("--temp", type=positive_float, action="append", required=True, help="temperature in K (repeatable)")
    p.add_argument("--box", type=box_arg, help="optional box L1,L2,L3 in m for finite-cavity terms")

    p = sub.add_parser("solve-mu", parents=[common], help="thermodynamic-limit chemical potential")
    p.add_argument("--temp", type=positive_float, required=True)
    p.add_argument("--energy-density", type=nonnegative_float, required=True, help="J/m3 (dim 3) or J/m2 (dim 2)")
    p.add_argument("--dim", type=int, choices=(3, 2), default=3)

    p = sub.add_parser("oracle", parents=[common], help="finite-box mode-sum solve")
    p.add_argument("--box", type=box_arg, required=True)
    p.add_argument("--temp", type=positive_float, required=True)
    p.add_argument("--energy-density", type=positive_float, required=True, help="J/m3")
    p.add_argument("--max-modes", type=positive_int, default=DEFAULT_ORACLE_MODES)

    p = sub.add_parser("scaling", parents=[common], help="mu_R versus cavity size in the condensed regime")
    p.add_argument("--box", type=box_arg, required=True)
    p.add_argument("--scales", type=float_list, required=True)
    p.add_argument("--temp", type=positive_float, required=True)
    p.add_argument("--u-mult", type=positive_float, default=2.0, help="target as a multiple of the bulk critical density")
    p.add_argument("--max-modes", type=positive_int, default=DEFAULT_ORACLE_MODES)

    p = sub.add_parser("profile", parents=[common], help="condensate profile samples")
    p.add_argument("--box", type=box_arg, required=True)
    p.add_argument("--n1", type=positive_int, action="append", required=True, help="condensate occupation (repeatable)")
    p.add_argument("--axis", type=int, choices=(1, 2, 3), default=1)
    p.add_argument("--points", type=int, default=512)

    p = sub.add_parser("microcavity", parents=[common], help="mirror-microcavity critical energy and power")
    p.add_argument("--rcurv", type=positive_float, default=1.0)
    p.add_argument("--d0", type=positive_float, default=1.46e-6)
    p.add_argument("--temp", type=positive_float, default=300.0)
    p.add_argument("--ratio", type=nonnegative_float, default=None, help="N_exc/N_ph (default 50)")
    p.add_argument("--tau-exc", type=positive_float, help="excitation lifetime in s")
    p.add_argument("--tau-ph", type=positive_float, help="photon lifetime in s")
    p.add_argument("--l0", choices=("d0", "va"), default="d0", help="length used for P_crit in the summary row")
    return parser


def _read_config(path):
    values = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise DomainError(f"{path}:{lineno}: expected key=value")
            key, value = (part.strip() for part in line.split("=", 1))
            values[key.replace("_", "-")] = value
    return values


def _config_argv(parser, command, config, explicit):
    """Translate config entries into option tokens for one subcommand.

    Keys belonging only to other subcommands are ignored, so one file can serve
    every command.  List-valued (append) options named on the command line are
    skipped so the flags replace rather than extend the file's values.
    """
    choices = parser._subparsers._group_actions[0].choices
    subparser = choices[command]
    argv = []
    for key, value in config.items():
        option = f"--{key}"
        if option in ("--config", "--out") or not any(option in p._option_string_actions for p in choices.values()):
            raise DomainError(f"unknown config key {key!r}")
        action = subparser._option_string_actions.get(option)
        if action is None:
            continue
        if isinstance(action, argparse._AppendAction):
            if option in explicit:
                continue
            items = value.split(",")
        else:
            items = [value]
        for item in items:
            argv += [option, item]
    return argv


def _parse(argv):
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    command = next((tok for tok in argv if tok in COMMANDS), None)
    if known.config and command is not None:
        explicit = {tok.split("=", 1)[0] for tok in argv if tok.startswith("--")}
        rest = argv[:argv.index(command)] + argv[argv.index(command) + 1:]
        # store options are last-wins, so flags placed after the file's values override them
        argv = [command] + _config_argv(parser, command, _read_config(known.config), explicit) + rest
    return parser.parse_args(argv)


def _cmd_constants(args):
    c = constants.CODATA2018
    header = ["name", "value", "unit"]
    rows = [("hbar", c.hbar, "J s"), ("c", c.c, "m/s"), ("k_B", c.k_B, "J/K"), ("hbar_c", c.hbar_c, "J m")]
    return header, rows


def _cmd_critical(args):
    header = ["temperature_K", "u_crit_bulk_J_m3", "u_crit_surface_J_m2"]
    if args.box is not None:
        header += ["V_R_m3", "A_R_m2", "u_crit_finite_J_m3"]
    rows = []
    for T in args.temp:
        beta = constants.beta_from_temperature(T)
        crit = critical_densities(beta)
        row = [T, crit.bulk, crit.surface]
        if args.box is not None:
            V, A = args.box.volume, args.box.area
            row += [V, A, u_crit_finite(beta, V, A)]
        rows.append(row)
    return header, rows


def _cmd_solve_mu(args):
    beta = constants.beta_from_temperature(args.temp)
    dim = Dimensionality.BULK if args.dim == 3 else Dimensionality.SURFACE
    sol = solve_mu(ThermoState(beta, args.energy_density, dim))
    header = ["temperature_K", "dim", "target_u", "mu_J", "beta_mu", "regime", "condensate_density"]
    return header, [[args.temp, args.dim, args.energy_density, sol.mu, beta * sol.mu, sol.regime.value,
                     sol.condensate_density]]


def _cmd_oracle(args):
    beta = constants.beta_from_temperature(args.temp)
    box = args.box
    res = solve_box(box, beta, args.energy_density, args.max_modes)
    limit = solve_mu(ThermoState(beta, args.energy_density, Dimensionality.BULK))
    header = ["mu_R_J", "u_R_J_m3", "ground_term_J_m3", "entropy_J_K_m3", "modes_used", "tail_estimate_J_m3",
              "u_crit_finite_J_m3", "mu_limit_J"]
    return header, [[res.mu_R, res.u_R, res.ground_term, res.entropy, res.modes_used, res.tail_estimate,
                     u_crit_finite(beta, box.volume, box.area), limit.mu]]


def _cmd_scaling(args):
    beta = constants.beta_from_temperature(args.temp)
    target = args.u_mult * critical_densities(beta).bulk
    points = scaling_study(args.box, args.scales, beta, target, args.max_modes)
    slope = fit_log_slope([p.R for p in points], [p.result.mu_R for p in points])
    header = ["scale", "R_m", "mu_R_J", "ground_term_J_m3", "excess_J_m3", "epsilon_1_J", "fitted_slope"]
    rows = [[p.scale, p.R, p.result.mu_R, p.result.ground_term, target - p.u_crit_finite, p.epsilon_1, slope]
            for p in points]
    return header, rows


def _cmd_profile(args):
    header = ["n1", "x_m", "f", "half_width_m"]
    rows = []
    for n1 in args.n1:
        request = ProfileRequest(args.box, n1, args.axis, args.points)
        x, f = profile_samples(request)
        width = half_width(args.box, n1, args.axis)
        rows.extend([n1, float(xi), float(fi), width] for xi, fi in zip(x, f))
    return header, rows


def _cmd_microcavity(args):
    if args.tau_exc is not None or args.tau_ph is not None:
        if args.tau_exc is None or args.tau_ph is None:
            raise DomainError("--tau-exc and --tau-ph must be given together")
        if args.ratio is not None:
            raise DomainError("give either --ratio or the two lifetimes, not both")
        reservoir = ReservoirModel.from_lifetimes(args.tau_exc, args.tau_ph)
    else:
        reservoir = ReservoirModel(50.0 if args.ratio is None else args.ratio)
    report = microcavity_report(MirrorMicrocavity(args.rcurv, args.d0), args.temp, reservoir)
    rows = [list(r) for r in report.rows()]
    chosen = L0Convention.PAPER_D0 if args.l0 == "d0" else L0Convention.VOLUME_OVER_AREA
    power = report.P_paper_D0 if chosen is L0Convention.PAPER_D0 else report.P_volume_over_area
    rows.append(["P_crit", "selected", power, "W"])
    return ["quantity", "variant", "value", "unit"], rows


COMMANDS = {
    "constants": _cmd_constants,
    "critical": _cmd_critical,
    "solve-mu": _cmd_solve_mu,
    "oracle": _cmd_oracle,
    "scaling": _cmd_scaling,
    "profile": _cmd_profile,
    "microcavity": _cmd_microcavity,
}


def _write(header, rows, out):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([fmt(v) for v in row])
    text = buf.getvalue()
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run_cli(argv=None) -> int:
    try:
        args = _parse(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    except (DomainError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        header, rows = COMMANDS[args.command](args)
        _write(header, rows, args.out)
    except NonConvergenceError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (DomainError, PreconditionError, ResourceError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def main():
    sys.exit(run_cli())
