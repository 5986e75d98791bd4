"""Command line: ``sweep`` to CSV, ``analyze`` one state, ``validate`` the closed forms.

Exit codes: 0 success, 1 validation deviation at or above tolerance,
2 invalid arguments or state spec, 3 output write failure, 4 state file
rejected by density-matrix validation.
"""
from __future__ import annotations

import argparse
import io
import math
import re
import sys
from dataclasses import dataclass

import numpy as np

from . import analytic, linalg
from .criteria import CLASSIFY_TOL, CriteriaReport, partial_transpose, realign, report
from .errors import BoundEntError, InvalidState
from .model import DensityMatrix, check_alpha, evolve, horodecki_state, upb_pyramid_state, upb_tiles_state
from .statefile import read_state
from .validation import CHECKS, run_agreement

EXIT_OK = 0
EXIT_DEVIATION = 1
EXIT_USAGE = 2
EXIT_WRITE = 3
EXIT_BAD_STATE = 4

CSV_HEADER = "t,alpha,beta,N1,N2,pt_trace_norm,realign_trace_norm,concurrence_lb,classification"
DEFAULT_ALPHA_GRID = "2:5:0.25"
DEFAULT_T_GRID = "0:pi:pi/200"


class UsageError(BoundEntError, ValueError):
    pass


_VALUE_RE = re.compile(
    r"^(?P<sign>[+-])?"
    r"(?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?"
    r"(?:(?P<star>\*)?(?P<pi>pi))?"
    r"(?:/(?P<den>\d+\.?\d*|\.\d+))?$")


def parse_value(text: str) -> float:
    """Parse a number that may use ``pi``: ``1.5``, ``pi``, ``-pi/4``, ``2pi``, ``3*pi/4``."""
    s = text.strip().replace(" ", "")
    m = _VALUE_RE.match(s)
    if m is None or (m.group("num") is None and m.group("pi") is None) \
            or (m.group("star") and m.group("num") is None):
        raise UsageError(f"cannot parse value {text!r}")
    value = float(m.group("num")) if m.group("num") else 1.0
    if m.group("pi"):
        value *= math.pi
    if m.group("den"):
        den = float(m.group("den"))
        if den == 0.0:
            raise UsageError(f"division by zero in {text!r}")
        value /= den
    return -value if m.group("sign") == "-" else value


def parse_grid(text: str) -> np.ndarray:
    """``start:end:step`` into an inclusive grid with exact endpoints."""
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"grid {text!r} is not of the form start:end:step")
    start, end, step = (parse_value(p) for p in parts)
    if step <= 0.0 or end < start:
        raise UsageError(f"grid {text!r} needs step > 0 and end >= start")
    span = (end - start) / step
    n_int = round(span)
    if abs(span - n_int) > 1e-9 * max(1.0, span):
        raise UsageError(f"grid {text!r}: step does not divide the interval")
    if n_int == 0:
        return np.array([start])
    return np.linspace(start, end, n_int + 1)


def uniform_grid(t_start: float, t_end: float, steps: int) -> np.ndarray:
    """``t_start + k (t_end - t_start) / (steps - 1)``, last point pinned to ``t_end``."""
    return np.linspace(t_start, t_end, steps)


def _parse_value_arg(text: str) -> float:
    try:
        return parse_value(text)
    except UsageError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


@dataclass(frozen=True)
class StateSpec:
    kind: str
    alpha: float | None = None
    path: str | None = None

    KINDS = ("horodecki", "upb-tiles", "upb-pyramid", "file")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise UsageError(f"unknown state kind {self.kind!r}")
        if (self.alpha is not None) != (self.kind == "horodecki"):
            raise UsageError("alpha is required for, and only for, horodecki states")
        if (self.path is not None) != (self.kind == "file"):
            raise UsageError("path is required for, and only for, file states")

    @classmethod
    def parse(cls, text: str) -> "StateSpec":
        """``horodecki:<alpha>`` | ``upb-tiles`` | ``upb-pyramid`` | ``file:<path>``"""
        kind, sep, arg = text.partition(":")
        if kind == "horodecki":
            if not arg:
                raise UsageError("horodecki state needs an alpha, e.g. horodecki:3.5")
            alpha = parse_value(arg)
            try:
                check_alpha(alpha)
            except BoundEntError as exc:
                raise UsageError(str(exc)) from exc
            return cls("horodecki", alpha=alpha)
        if kind == "file":
            if not arg:
                raise UsageError("file state needs a path, e.g. file:rho.txt")
            return cls("file", path=arg)
        if sep:
            raise UsageError(f"state {kind!r} takes no argument")
        return cls(kind)

    def build(self) -> DensityMatrix:
        if self.kind == "horodecki":
            return horodecki_state(self.alpha)
        if self.kind == "upb-tiles":
            return upb_tiles_state()
        if self.kind == "upb-pyramid":
            return upb_pyramid_state()
        try:
            return read_state(self.path)
        except OSError as exc:
            raise UsageError(f"cannot read state file {self.path!r}: {exc}") from exc


@dataclass(frozen=True)
class SweepRecord:
    t: float
    alpha: float
    beta: float
    report: CriteriaReport

    def csv_row(self) -> str:
        r = self.report
        alpha = "n/a" if math.isnan(self.alpha) else _num(self.alpha)
        return ",".join([
            _num(self.t), alpha, _num(self.beta), _num(r.n1), _num(r.n2),
            _num(r.pt_trace_norm), _num(r.realign_trace_norm), _num(r.concurrence_lb),
            r.classification.value,
        ])


def _num(x: float) -> str:
    # 12 significant digits; "+0" keeps -0.0 from leaking into the output
    return f"{x + 0.0:.11e}"


def sweep_records(spec: StateSpec, beta: float, t_start: float, t_end: float,
                  steps: int, tol: float = CLASSIFY_TOL) -> list[SweepRecord]:
    if steps < 2:
        raise UsageError("steps must be at least 2")
    if not t_end > t_start:
        raise UsageError("t_end must exceed t_start")
    rho0 = spec.build()
    alpha = spec.alpha if spec.alpha is not None else math.nan
    return [SweepRecord(float(t), alpha, beta, report(evolve(rho0, float(t), beta), tol))
            for t in uniform_grid(t_start, t_end, steps)]


def format_csv(records) -> str:
    return "\n".join([CSV_HEADER] + [rec.csv_row() for rec in records]) + "\n"


def run_sweep(spec: StateSpec, beta: float, t_start: float, t_end: float, steps: int,
              out_path: str, tol: float = CLASSIFY_TOL) -> int:
    try:
        text = format_csv(sweep_records(spec, beta, t_start, t_end, steps, tol))
    except InvalidState as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_STATE
    except BoundEntError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if out_path == "-":
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {out_path!r}: {exc}", file=sys.stderr)
        return EXIT_WRITE
    return EXIT_OK


def _fmt_list(values) -> str:
    return "[" + ", ".join(f"{v:.12g}" for v in values) + "]"


def analyze(spec: StateSpec, t: float, beta: float, tol: float = CLASSIFY_TOL) -> str:
    """Human-readable report for one state at one time."""
    rho = evolve(spec.build(), t, beta)
    rep = report(rho, tol)
    pt_eigs = linalg.hermitian_eigenvalues(partial_transpose(rho))
    r_svals = linalg.singular_values(realign(rho))

    out = io.StringIO()
    label = spec.kind if spec.kind != "horodecki" else f"horodecki alpha={spec.alpha:.12g}"
    if spec.kind == "file":
        label = f"file {spec.path}"
    out.write(f"state: {label}\nt: {t:.12g}\nbeta: {beta:.12g}\n")
    out.write(f"N1: {rep.n1:.12g}\n")
    out.write(f"N2: {rep.n2:.12g}\n")
    out.write(f"pt_trace_norm: {rep.pt_trace_norm:.12g}\n")
    out.write(f"realign_trace_norm: {rep.realign_trace_norm:.12g}\n")
    out.write(f"concurrence_lb: {rep.concurrence_lb:.12g}\n")
    out.write(f"concurrence_lb_raw: {rep.concurrence_lb_raw:.12g}\n")
    out.write(f"classification: {rep.classification.value}\n")
    out.write(f"pt_spectrum: {_fmt_list(pt_eigs)}\n")
    out.write(f"realign_singular_values: {_fmt_list(r_svals)}\n")

    if spec.kind == "horodecki":
        out.write("closed form comparison")
        if beta != -1.0:
            out.write(" skipped: closed forms exist only for beta = -1\n")
            return out.getvalue()
        out.write(" (numeric, closed, |diff|):\n")
        closed_eigs = analytic.pt_spectrum_closed(spec.alpha, t)
        closed_svals = analytic.realign_singular_spectrum_closed(spec.alpha, t)
        rows = [
            ("N1", rep.n1, analytic.negativity_closed(spec.alpha, t)),
            ("realign_trace_norm", rep.realign_trace_norm, analytic.realign_norm_closed(spec.alpha, t)),
        ]
        rows += [(f"pt_eig[{i}]", a, b) for i, (a, b) in enumerate(zip(pt_eigs, closed_eigs))]
        rows += [(f"realign_sv[{i}]", a, b) for i, (a, b) in enumerate(zip(r_svals, closed_svals))]
        for name, num, closed in rows:
            out.write(f"  {name}: {num:.12g} {closed:.12g} {abs(num - closed):.3e}\n")
    return out.getvalue()


def validate(alpha_grid: str = DEFAULT_ALPHA_GRID, t_grid: str = DEFAULT_T_GRID,
             tol: float = 1e-9, stream=None) -> int:
    stream = sys.stdout if stream is None else stream
    try:
        alphas = parse_grid(alpha_grid)
        times = parse_grid(t_grid)
        for a in alphas:
            check_alpha(float(a))
    except BoundEntError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    result = run_agreement(alphas, times)
    stream.write(f"grid points: {result.n_points}\n")
    for name in CHECKS:
        dev = result.max_dev[name]
        status = "ok" if dev < tol else "FAIL"
        alpha, t = result.worst_point[name]
        stream.write(f"{name}: max deviation {dev:.3e} at alpha={alpha:.6g}, t={t:.6g} [{status}]\n")
    return EXIT_OK if result.passed(tol) else EXIT_DEVIATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boundent", description="Dynamics of bound entangled two-qutrit states.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sweep", help="evolve a state over a time grid and write CSV")
    p.add_argument("--state", required=True)
    p.add_argument("--beta", type=_parse_value_arg, default=-1.0)
    p.add_argument("--t-start", type=_parse_value_arg, default=0.0)
    p.add_argument("--t-end", type=_parse_value_arg, default=math.pi)
    p.add_argument("--steps", type=int, default=315)
    p.add_argument("--out", default="-", help="output path, '-' for stdout")
    p.add_argument("--tol", type=float, default=CLASSIFY_TOL, help="classification tolerance")

    p = sub.add_parser("analyze", help="report every criterion for one state")
    p.add_argument("--state", required=True)
    p.add_argument("--t", type=_parse_value_arg, default=0.0)
    p.add_argument("--beta", type=_parse_value_arg, default=-1.0)
    p.add_argument("--tol", type=float, default=CLASSIFY_TOL, help="classification tolerance")

    p = sub.add_parser("validate", help="check numerics against the closed forms")
    p.add_argument("--alpha-grid", default=DEFAULT_ALPHA_GRID)
    p.add_argument("--t-grid", default=DEFAULT_T_GRID)
    p.add_argument("--tol", type=float, default=1e-9)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "validate":
        return validate(args.alpha_grid, args.t_grid, args.tol)
    try:
        spec = StateSpec.parse(args.state)
    except BoundEntError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.command == "sweep":
        return run_sweep(spec, args.beta, args.t_start, args.t_end, args.steps, args.out, args.tol)
    try:
        sys.stdout.write(analyze(spec, args.t, args.beta, args.tol))
    except InvalidState as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_STATE
    except BoundEntError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
