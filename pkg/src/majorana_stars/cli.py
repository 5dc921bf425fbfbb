"""Command-line front end: ``majorana-stars {stars,sweep,evolve}``.

Output is deterministic: floats are written with 17 significant digits and
records keep a fixed key order, so identical arguments give identical bytes.
Exit codes: 0 success, 2 usage or parameter error, 3 solver failure.
"""
from __future__ import annotations

import argparse
import json
import math
import re
import sys
import time
from fractions import Fraction

from . import __version__
from .algebra import SymmetryKind
from .dynamics import EvolutionSpec, TrajectoryError, kerr_evolve
from .starsolver import RootFindingError, SolverConfig, StarSet, stars
from .states import (
    cat_four,
    cat_two,
    coherent,
    from_amplitudes,
    load_amplitudes,
    squeezed_vacuum,
)

EXIT_USAGE = 2
EXIT_NUMERIC = 3

_NUM = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_COMPLEX_RE = re.compile(rf"^(?P<re>[+-]?{_NUM})(?:(?P<im>[+-]{_NUM})i)?$|^(?P<pim>[+-]?{_NUM})i$")


class UsageError(ValueError):
    pass


def parse_complex(text: str) -> complex:
    """``"2"``, ``"0.2+0.3i"``, ``"1-2i"``, ``"0.5i"``, ``"1e-3i"``; no spaces."""
    m = _COMPLEX_RE.match(text.strip())
    if not m:
        raise argparse.ArgumentTypeError(f"not a complex number of the form RE+IMi: {text!r}")
    if m.group("pim") is not None:
        return complex(0.0, float(m.group("pim")))
    return complex(float(m.group("re")), float(m.group("im") or 0.0))


def parse_times(text: str) -> tuple[float, ...]:
    """Comma list, or ``start:stop:step`` with ``stop`` included when hit."""
    if ":" in text:
        try:
            start, stop, step = (float(v) for v in text.split(":"))
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad time range {text!r}") from None
        if step <= 0 or stop < start:
            raise argparse.ArgumentTypeError(f"bad time range {text!r}")
        count = int(math.floor((stop - start) / step + 1e-9)) + 1
        return tuple(start + i * step for i in range(count))
    try:
        return tuple(float(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad time list {text!r}") from None


def _state_kind(text: str) -> str:
    if text in ("coherent", "squeezed", "cat2", "cat4") or text.startswith("file:"):
        return text
    raise argparse.ArgumentTypeError(f"unknown state {text!r}")


# ---------------------------------------------------------------- building blocks

def _symmetry(args) -> SymmetryKind:
    if args.symmetry == "hw":
        if args.cutoff is None:
            raise UsageError("--symmetry hw needs --cutoff")
        return SymmetryKind.hw(args.cutoff)
    if args.symmetry == "su2":
        if args.spin is None:
            raise UsageError("--symmetry su2 needs --spin")
        return SymmetryKind.su2(Fraction(args.spin))
    if args.cutoff is None or args.bargmann is None:
        raise UsageError("--symmetry su11 needs --bargmann and --cutoff")
    return SymmetryKind.su11(args.bargmann, args.cutoff)


def _state(args, sym):
    kind = args.state
    if kind.startswith("file:"):
        return from_amplitudes(sym, load_amplitudes(kind[5:]))
    if kind == "squeezed":
        if args.xi is None:
            raise UsageError("--state squeezed needs --xi")
        return squeezed_vacuum(sym, args.xi)
    if args.alpha is None:
        raise UsageError(f"--state {kind} needs --alpha")
    builder = {"coherent": coherent, "cat2": cat_two, "cat4": cat_four}[kind]
    return builder(sym, args.alpha)


def _config(args) -> SolverConfig:
    return SolverConfig(args.root_tol, args.residual_tol, args.max_iter, args.cluster_radius)


def _cplx(z):
    return None if z is None else [z.real, z.imag]


def _spec_echo(args, sym, cfg, **extra) -> dict:
    echo = sym.describe()
    echo["state"] = args.state
    echo["alpha"] = _cplx(args.alpha)
    echo["xi"] = _cplx(args.xi)
    echo.update(extra)
    echo["solver"] = cfg.describe()
    return echo


def _star_payload(star_set: StarSet) -> dict:
    return {
        "stars": [{"theta": s.theta, "phi": s.phi, "multiplicity": s.multiplicity} for s in star_set.stars],
        "south_pole_count": star_set.south_pole_count,
        "residual_max": star_set.residual_max,
    }


def _record(spec_echo, star_set, elapsed, timing, t=None) -> dict:
    rec = {"spec": spec_echo}
    if t is not None:
        rec["t"] = t
    rec.update(_star_payload(star_set))
    rec["version"] = __version__
    if timing:
        rec["wall_time"] = elapsed
    return rec


# ---------------------------------------------------------------- serialization

def _fmt_float(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError(f"non-finite value {x!r} cannot be serialized")
    return "%.17g" % x


def dumps(obj, indent=2, _level=0) -> str:
    """Minimal JSON writer with fixed 17-significant-digit floats."""
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _fmt_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{dumps(str(k))}: {dumps(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in obj):
            return "[" + ", ".join(dumps(v) for v in obj) + "]"
        items = [pad + dumps(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    if hasattr(obj, "item"):
        return dumps(obj.item(), indent, _level)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


CSV_COLUMNS = ("star_index", "theta", "phi", "multiplicity", "residual_max")


def _csv_rows(rec, lead=()):
    rows = []
    for i, s in enumerate(rec["stars"]):
        rows.append((*lead, i, s["theta"], s["phi"], s["multiplicity"], rec["residual_max"]))
    if rec["south_pole_count"]:
        rows.append((*lead, len(rec["stars"]), math.pi, 0.0, rec["south_pole_count"], rec["residual_max"]))
    return rows


def to_csv(records, lead_column=None) -> str:
    header = ((lead_column,) if lead_column else ()) + CSV_COLUMNS
    lines = [",".join(header)]
    for rec in records:
        lead = ()
        if lead_column == "t":
            lead = (rec["t"],)
        elif lead_column:
            lead = (rec["sweep_value"],)
        for row in _csv_rows(rec, lead):
            lines.append(",".join(_fmt_float(v) if isinstance(v, float) else str(v) for v in row))
    return "\n".join(lines) + "\n"


def _emit(args, text: str):
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------- commands

def _solve_one(args, sym, state, cfg, **extra):
    t0 = time.perf_counter()
    star_set = stars(state, cfg)
    return _record(_spec_echo(args, sym, cfg, **extra), star_set, time.perf_counter() - t0, args.timing)


def cmd_stars(args) -> int:
    sym = _symmetry(args)
    cfg = _config(args)
    rec = _solve_one(args, sym, _state(args, sym), cfg)
    _emit(args, dumps(rec) + "\n" if args.out == "json" else to_csv([rec]))
    return 0


def cmd_sweep(args) -> int:
    cfg = _config(args)
    records = []
    for raw in args.values.split(","):
        raw = raw.strip()
        if args.param == "cutoff":
            try:
                args.cutoff = int(raw)
            except ValueError:
                raise UsageError(f"cutoff values must be integers, got {raw!r}") from None
            value = args.cutoff
        else:
            try:
                z = parse_complex(raw)
            except argparse.ArgumentTypeError as err:
                raise UsageError(str(err)) from None
            setattr(args, args.param, z)
            value = [z.real, z.imag]
        sym = _symmetry(args)
        rec = _solve_one(args, sym, _state(args, sym), cfg, sweep={"param": args.param, "value": value})
        rec["sweep_value"] = raw
        records.append(rec)
    if args.out == "json":
        for rec in records:
            del rec["sweep_value"]
        _emit(args, dumps(records) + "\n")
    else:
        _emit(args, to_csv(records, lead_column=args.param))
    return 0


def cmd_evolve(args) -> int:
    sym = _symmetry(args)
    cfg = _config(args)
    spec = EvolutionSpec(args.omega_nl, args.omega_lin, args.times)
    state = _state(args, sym)
    echo = _spec_echo(args, sym, cfg, omega_nl=spec.omega_nl, omega_lin=spec.omega_lin)
    records = []
    for t in spec.times:
        t0 = time.perf_counter()
        try:
            star_set = stars(kerr_evolve(state, spec, t), cfg)
        except RootFindingError as err:
            raise TrajectoryError(t, err) from err
        records.append(_record(echo, star_set, time.perf_counter() - t0, args.timing, t=t))
    _emit(args, dumps(records) + "\n" if args.out == "json" else to_csv(records, lead_column="t"))
    return 0


def _add_common(p, state_default=None):
    g = p.add_argument_group("state")
    g.add_argument("--symmetry", choices=("hw", "su2", "su11"), default="hw")
    g.add_argument("--cutoff", type=int, help="truncation N_c (hw, su11)")
    g.add_argument("--spin", type=Fraction, help="spin j (su2), e.g. 0.5 or 3/2")
    g.add_argument("--bargmann", type=float, help="Bargmann index k (su11)")
    g.add_argument("--state", type=_state_kind, default=state_default, required=state_default is None,
                   help="coherent | squeezed | cat2 | cat4 | file:PATH")
    g.add_argument("--alpha", type=parse_complex, help="coherent parameter, RE+IMi")
    g.add_argument("--xi", type=parse_complex, help="squeezing parameter, RE+IMi")
    s = p.add_argument_group("solver")
    defaults = SolverConfig()
    s.add_argument("--root-tol", type=float, default=defaults.root_tol)
    s.add_argument("--residual-tol", type=float, default=defaults.residual_tol)
    s.add_argument("--max-iter", type=int, default=defaults.max_iter)
    s.add_argument("--cluster-radius", type=float, default=defaults.cluster_radius)
    o = p.add_argument_group("output")
    o.add_argument("--out", choices=("json", "csv"), default="json")
    o.add_argument("-o", "--output", help="write to this file instead of stdout")
    o.add_argument("--timing", action="store_true", help="add wall_time (breaks byte-identical output)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="majorana-stars", description="Majorana constellations of pure states.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stars", help="constellation of one state")
    _add_common(p)
    p.set_defaults(func=cmd_stars)

    p = sub.add_parser("sweep", help="one constellation per parameter value")
    _add_common(p, state_default="squeezed")
    p.add_argument("--param", choices=("xi", "alpha", "cutoff"), required=True)
    p.add_argument("--values", required=True, help="comma-separated values")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("evolve", help="constellations along Kerr evolution")
    _add_common(p, state_default="coherent")
    p.add_argument("--omega-nl", type=float, required=True, help="nonlinear strength Omega")
    p.add_argument("--omega-lin", type=float, default=0.0, help="linear splitting omega")
    p.add_argument("--times", type=parse_times, required=True, help="t0,t1,... or start:stop:step")
    p.set_defaults(func=cmd_evolve)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except RootFindingError as err:
        print(f"error: {err}", file=sys.stderr)
        print(f"  iterations: {err.iterations}; worst residual: {max(err.residuals, default=float('nan')):.3g}",
              file=sys.stderr)
        return EXIT_NUMERIC
    except (ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
