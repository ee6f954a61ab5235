"""Batch front end: job files in, canonical JSON reports out.

Job file::

    vars: x,y,z,w
    params: a1,a2
    t: 2
    command: discriminant
    options: charts=on,field=Q
    matrix:
    x; y; z
    w; x; y+a1

Exit codes: 0 ok, 2 parse error, 3 precondition, 4 resource, 5 internal.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from .algebra.fields import field_from_name
from .algebra.parsing import ParseError
from .algebra.ring import PolyRing
from .groebner import DEFAULT_BUDGET, INFINITE, ResourceExhausted
from .ideals import Ideal, hypersurface_degree, minors
from .model import (
    PreconditionError,
    VersalFamily,
    is_singular,
    nu_star,
    presentation_from_strings,
    tau_g,
    tjurina_transform_maximal,
    versal_unfolding,
)

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_RESOURCE, EXIT_INTERNAL = 0, 2, 3, 4, 5

COMMANDS = (
    "discriminant", "contribution-a", "contribution-b", "tjurina-transform", "tau-g", "versal",
    "h1-split", "gamma", "nu-star", "point-count", "counterexample",
)
# commands that take their input from options alone
MATRIX_FREE = ("point-count", "counterexample")


@dataclass
class JobSpec:
    variables: list
    params: list
    minor_size: int | None
    command: str
    matrix: list  # rows of entry strings
    options: dict = field(default_factory=dict)

    def echo(self) -> dict:
        return {
            "vars": self.variables, "params": self.params, "t": self.minor_size,
            "command": self.command, "options": dict(sorted(self.options.items())), "matrix": self.matrix,
        }


def _split_list(text):
    return [p.strip() for p in text.split(",") if p.strip()]


def parse_job(text: str) -> JobSpec:
    header = {}
    rows = []
    in_matrix = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if in_matrix:
            rows.append([e.strip() for e in line.split(";")])
            continue
        if ":" not in line:
            raise ParseError(f"line {lineno}: expected 'key: value'")
        key, val = (s.strip() for s in line.split(":", 1))
        if key == "matrix":
            in_matrix = True
            if val:
                rows.append([e.strip() for e in val.split(";")])
            continue
        if key not in ("vars", "params", "t", "command", "options"):
            raise ParseError(f"line {lineno}: unknown key {key!r}")
        header[key] = val
    command = header.get("command")
    if command not in COMMANDS:
        raise ParseError(f"unknown or missing command {command!r}")
    opts = {}
    for item in _split_list(header.get("options", "")):
        if "=" not in item:
            raise ParseError(f"option {item!r} is not key=value")
        k, v = item.split("=", 1)
        opts[k.strip()] = v.strip()
    variables = _split_list(header.get("vars", ""))
    params = _split_list(header.get("params", ""))
    if set(variables) & set(params):
        raise ParseError("vars and params overlap")
    t = header.get("t")
    try:
        t = int(t) if t is not None else None
    except ValueError:
        raise ParseError(f"t must be an integer, got {t!r}") from None
    if command not in MATRIX_FREE:
        if not rows:
            raise ParseError("missing matrix block")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ParseError("ragged matrix")
        if not variables:
            raise ParseError("missing vars")
        if t is None:
            raise ParseError("missing t")
    return JobSpec(variables, params, t, command, rows, opts)


# --------------------------------------------------------------------------
# option helpers


def _flag(opts, key, default):
    v = opts.get(key)
    if v is None:
        return default
    if v.lower() in ("on", "true", "yes", "1"):
        return True
    if v.lower() in ("off", "false", "no", "0"):
        return False
    raise ParseError(f"option {key} must be on/off")


def _int_opt(opts, key, default=None):
    v = opts.get(key)
    if v is None:
        return default
    try:
        return int(v)
    except ValueError:
        raise ParseError(f"option {key} must be an integer") from None


def _int_seq(opts, key):
    v = opts.get(key)
    if v is None:
        raise ParseError(f"missing option {key}")
    try:
        return [int(x) for x in v.split(":")]
    except ValueError:
        raise ParseError(f"option {key} must be integers separated by ':'") from None


def _field(opts):
    try:
        return field_from_name(opts.get("field", "Q"))
    except ValueError as e:
        raise ParseError(str(e)) from None


def _build(spec: JobSpec):
    """A user-declared family when params are given, otherwise a presentation."""
    F = _field(spec.options)
    if spec.params:
        return VersalFamily.declared(spec.matrix, spec.variables, spec.params, spec.minor_size, field=F)
    return presentation_from_strings(spec.matrix, spec.variables, spec.minor_size, field=F)


def _family(obj, budget):
    return obj if isinstance(obj, VersalFamily) else versal_unfolding(obj, budget)


def _principal_degree(I):
    gens = I.canonical_generators()
    if len(gens) == 1 and not gens[0].is_constant():
        return hypersurface_degree(I)
    return None


def _int_value(v):
    return "INFINITE" if v is INFINITE else v


# --------------------------------------------------------------------------
# dispatch


def execute(spec: JobSpec) -> dict:
    """Run a parsed job; returns the result part {ideals, integers} and metadata."""
    from . import discriminant as disc
    from . import invariants as inv

    opts = spec.options
    budget = _int_opt(opts, "budget", DEFAULT_BUDGET)
    ideals, ints, meta = {}, {}, {"field": opts.get("field", "Q")}
    cmd = spec.command
    minor_size = opts.get("minor_size", "auto")
    if minor_size != "auto":
        minor_size = _int_opt(opts, "minor_size")

    if cmd == "point-count":
        ints["points"] = inv.hilbert_burch_point_count(_int_seq(opts, "l"), _int_seq(opts, "k"))
    elif cmd == "counterexample":
        rep = inv.counterexample_verify(_int_opt(opts, "k", 3), _int_opt(opts, "l", 3), budget)
        ints.update(tau=rep.tau, mu=rep.mu, wahl_equality=rep.wahl_equality, chart_taus=list(rep.chart_taus))
        meta["charts"] = [label for label, _ in rep.transform_singularity_types]
    else:
        obj = _build(spec)
        if cmd == "discriminant":
            res = disc.discriminant(obj, charts=_flag(opts, "charts", True), minor_size=minor_size, budget=budget)
            ideals["I_A"] = res.I_A.canonical_strings()
            ideals["I_B"] = res.I_B.canonical_strings()
            for name, I in (("I_A", res.I_A), ("I_B", res.I_B)):
                d = _principal_degree(I)
                if d is not None:
                    ints[f"{name}_degree"] = d
            meta.update(res.metadata)
        elif cmd == "contribution-a":
            ideals["I_A"] = disc.contribution_A(_family(obj, budget), budget=budget).canonical_strings()
        elif cmd == "contribution-b":
            fam = _family(obj, budget)
            fn = disc.contribution_B_charted if _flag(opts, "charts", True) else disc.contribution_B
            ideals["I_B"] = fn(fam, minor_size, budget=budget, meta=meta).canonical_strings()
        elif cmd == "tjurina-transform":
            T = tjurina_transform_maximal(obj)
            ideals["I_Tj"] = sorted(str(g) for g in T.ideal.gens)
            meta["transform_vars"] = list(T.transform_vars)
        elif cmd == "tau-g":
            E = obj.presentation() if isinstance(obj, VersalFamily) else obj
            ints["tau_G"] = _int_value(tau_g(E, budget))
        elif cmd == "versal":
            fam = _family(obj, budget)
            ideals["matrix"] = ["; ".join(str(e) for e in row) for row in fam.matrix.rows]
            ints["parameters"] = len(fam.parameters)
            meta["parameters"] = list(fam.parameters)
        elif cmd == "h1-split":
            s = inv.h1_split(obj, budget)
            ints.update(tau_X=s.tau_X, tau_Y_total=s.tau_Y_total, h1=s.h1)
        elif cmd == "gamma":
            ints["gamma"] = inv.gamma_invariant(obj, budget)
        elif cmd == "nu-star":
            E = obj.presentation() if isinstance(obj, VersalFamily) else obj
            R = PolyRing(list(E.geometric_vars), field=E.ring.field)
            I = minors(E.matrix, E.minor_size).to_ring(R)
            nu = nu_star(I, E.geometric_vars)
            ints["nu_star"] = list(nu)
            ints["singular"] = is_singular(nu, E.expected_codim)
    meta = {k: v for k, v in meta.items() if _flag(opts, "timings", False) or not k.startswith("time")}
    return {"result": {"ideals": ideals, "integers": ints}, "metadata": meta}


def run_job(spec: JobSpec) -> dict:
    out = execute(spec)
    return {"command": spec.command, "input_echo": spec.echo(), **out}


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, default=str)


def _error(code, stage, exc):
    payload = {"error": type(exc).__name__, "stage": stage, "message": str(exc)}
    print(json.dumps(payload, sort_keys=True), file=sys.stderr)
    return code


def run_file(path, out=None) -> int:
    out = out or sys.stdout
    try:
        spec = parse_job(Path(path).read_text())
    except (ParseError, OSError) as e:
        return _error(EXIT_PARSE, "parse", e)
    try:
        report = run_job(spec)
    except ParseError as e:
        return _error(EXIT_PARSE, "parse", e)
    except PreconditionError as e:
        return _error(EXIT_PRECONDITION, spec.command, e)
    except ResourceExhausted as e:
        return _error(EXIT_RESOURCE, e.stage or spec.command, e)
    except Exception as e:  # noqa: BLE001
        return _error(EXIT_INTERNAL, spec.command, e)
    print(dumps(report), file=out)
    return EXIT_OK


# --------------------------------------------------------------------------
# golden corpus


def _ideal_in(strings, variables, fieldname="Q"):
    R = PolyRing(variables or ["_z"], field=field_from_name(fieldname))
    gens = [R(s) for s in strings if s != "0"]
    return Ideal(R, gens)


def compare_expected(spec: JobSpec, got: dict, expected: dict):
    """List of mismatch descriptions; ideals are compared as ideals."""
    problems = []
    for key, want in expected.get("ideals", {}).items():
        have = got["result"]["ideals"].get(key)
        if have is None:
            problems.append(f"{key}: missing")
            continue
        variables = sorted({v for s in list(want) + list(have) for v in _tokens(s)} | set(spec.params))
        fname = spec.options.get("field", "Q")
        if _ideal_in(want, variables, fname) != _ideal_in(have, variables, fname):
            problems.append(f"{key}: expected {want} got {have}")
    for key, want in expected.get("integers", {}).items():
        have = got["result"]["integers"].get(key)
        if have != want:
            problems.append(f"{key}: expected {want!r} got {have!r}")
    return problems


def _tokens(text):
    import re

    return re.findall(r"[A-Za-z_][A-Za-z_0-9]*", text)


def verify_golden(corpus_dir, out=None) -> int:
    out = out or sys.stdout
    corpus = Path(corpus_dir)
    jobs = sorted(corpus.glob("*.job")) if corpus.is_dir() else []
    if not jobs:
        print(f"no jobs found in {corpus}", file=sys.stderr)
        return EXIT_PARSE
    failed = 0
    for job in jobs:
        exp_path = job.with_suffix(".expected.json")
        t0 = time.perf_counter()
        try:
            spec = parse_job(job.read_text())
            expected = json.loads(exp_path.read_text())
            problems = compare_expected(spec, run_job(spec), expected)
        except Exception as e:  # noqa: BLE001
            problems = [f"{type(e).__name__}: {e}"]
        dt = time.perf_counter() - t0
        status = "ok" if not problems else "FAIL"
        failed += bool(problems)
        print(f"{job.stem:<32} {status:<5} {dt:8.2f}s", file=out)
        for p in problems:
            print(f"    {p}", file=out)
    print(f"{len(jobs) - failed}/{len(jobs)} passed", file=out)
    return 1 if failed else 0


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="eids", description="discriminants and invariants of determinantal singularities")
    sub = ap.add_subparsers(dest="cmd", required=True)
    r = sub.add_parser("run", help="run one job file")
    r.add_argument("job")
    v = sub.add_parser("verify", help="run a golden corpus")
    v.add_argument("corpus")
    args = ap.parse_args(argv)
    if args.cmd == "run":
        return run_file(args.job)
    return verify_golden(args.corpus)


if __name__ == "__main__":
    sys.exit(main())
