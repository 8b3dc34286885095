"""Command-line surface.

Every subcommand emits in one of three formats (table, json-lines, csv) and
exits with 0 on success, 1 on a machine-detectable negative result (gap
violations, identity failures, an invalid digit string), 2 on usage or
configuration errors, and 3 when a resource bound would be exceeded.

Digit strings are read and written least-significant digit first; --msd adds
a most-significant-first rendering for human readers, but the wire formats
are always LSD-first. Rationals are always emitted as exact numerator and
denominator plus a 12-significant-digit decimal rendering.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from .errors import ConfigError, PreconditionError, ResourceLimitError
from .fib_core import basis, decimal_str, fib, run_identity_suite
from .generic_proxinv import (
    DEFAULT_MAX_PAIRS,
    ConstraintFunction,
    ViolationReport,
    check_system,
    f_generic,
)
from .numeration import (
    BINARY,
    DEFAULT_ENUM_BOUND,
    DigitString,
    FIB_EVEN,
    NumerationSystem,
    decode,
    encode,
    fib_two_fold,
    is_valid_fib,
    is_valid_fraenkel,
)
from .optimum_search import (
    DEFAULT_MAX_POINTS,
    FiniteInstance,
    compare_with_conjecture,
    exact_optimum,
)
from .proxinv_fib import (
    compare_by_f,
    compare_by_value,
    f_value,
    max_f_up_to_length,
    supremum_partial,
    verify_range,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

ENV_PREFIX = "PROXINV_"
BUILTIN_SYSTEMS = {"fib-even": FIB_EVEN, "binary": BINARY}

CONFIG_FORMAT = 1


@dataclass(frozen=True)
class RunConfig:
    """Effective output format and resource bounds for one invocation.

    Bounds resolve as: command-line flag, then PROXINV_* environment
    variable, then the built-in default.
    """

    format: str = "table"
    workers: int = 1
    max_pairs: int = DEFAULT_MAX_PAIRS
    max_points: int = DEFAULT_MAX_POINTS
    max_enum_len: int = DEFAULT_ENUM_BOUND
    msd: bool = False


def _env_int(name: str) -> int | None:
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"environment variable {ENV_PREFIX + name} is not an integer: {raw!r}")


def _resolve_run_config(args: argparse.Namespace) -> RunConfig:
    def pick(flag: int | None, env_name: str, default: int) -> int:
        if flag is not None:
            return flag
        env = _env_int(env_name)
        return env if env is not None else default

    workers = pick(getattr(args, "workers", None), "WORKERS", os.cpu_count() or 1)
    if workers < 1:
        raise ConfigError(f"worker count must be >= 1, got {workers}")
    return RunConfig(
        format=getattr(args, "format", None) or "table",
        workers=workers,
        max_pairs=pick(getattr(args, "max_pairs", None), "MAX_PAIRS", DEFAULT_MAX_PAIRS),
        max_points=pick(getattr(args, "max_points", None), "MAX_POINTS", DEFAULT_MAX_POINTS),
        max_enum_len=pick(getattr(args, "max_enum_len", None), "MAX_ENUM_LEN", DEFAULT_ENUM_BOUND),
        msd=bool(getattr(args, "msd", False)),
    )


def rational_json(q: Fraction) -> dict[str, Any]:
    return {"num": q.numerator, "den": q.denominator, "decimal": decimal_str(q)}


def rational_text(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator} (~{decimal_str(q)})"


def digits_text(x: DigitString, msd: bool = False) -> str:
    if not x.digits:
        return "ε"
    order = reversed(x.digits) if msd else x.digits
    return "[" + ",".join(str(d) for d in order) + "]"


class Emitter:
    """Write records in the selected format.

    json-lines output is one sorted-key JSON object per line; table output is
    the human-readable lines supplied by each handler; csv output flattens
    records to key,value rows except for violation reports, which use the
    pinned a,b,gap_num,gap_den,req_num,req_den schema.
    """

    def __init__(self, fmt: str, stream=None):
        self.fmt = fmt
        self.stream = stream if stream is not None else sys.stdout
        self._csv = csv.writer(self.stream) if fmt == "csv" else None

    def record(self, data: dict[str, Any], table_lines: Sequence[str]) -> None:
        if self.fmt == "json-lines":
            print(json.dumps(data, sort_keys=True), file=self.stream)
        elif self.fmt == "table":
            for line in table_lines:
                print(line, file=self.stream)
        else:
            for key in sorted(data):
                value = data[key]
                if isinstance(value, (dict, list)):
                    value = json.dumps(value, sort_keys=True)
                self._csv.writerow([key, value])

    def violation_report(self, command: str, report: ViolationReport) -> None:
        summary = f"pairs={report.pairs_checked} violations={len(report.violations)}"
        if self.fmt == "csv":
            self._csv.writerow(["a", "b", "gap_num", "gap_den", "req_num", "req_den"])
            for v in report.violations:
                self._csv.writerow(
                    [v.a, v.b, v.gap.numerator, v.gap.denominator,
                     v.required.numerator, v.required.denominator]
                )
            print(summary, file=sys.stderr)
            return
        if self.fmt == "json-lines":
            for v in report.violations:
                self.record(
                    {
                        "type": "violation",
                        "a": v.a,
                        "b": v.b,
                        "gap": rational_json(v.gap),
                        "required": rational_json(v.required),
                    },
                    (),
                )
            self.record(
                {
                    "type": "summary",
                    "command": command,
                    "range": list(report.range_checked),
                    "constraint": report.constraint,
                    "pairs_checked": report.pairs_checked,
                    "violations": len(report.violations),
                },
                (),
            )
            return
        for v in report.violations:
            print(
                f"violation a={v.a} b={v.b} gap={v.gap.numerator}/{v.gap.denominator} "
                f"required={v.required.numerator}/{v.required.denominator}",
                file=self.stream,
            )
        print(summary, file=self.stream)


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise PreconditionError(f"not a rational number: {text!r}")


def parse_digits(text: str) -> DigitString:
    cleaned = text.strip().strip("[]")
    if cleaned in ("", "ε", "eps"):
        return DigitString()
    parts = cleaned.replace(",", " ").split()
    try:
        return DigitString(tuple(int(p) for p in parts))
    except ValueError:
        raise PreconditionError(f"digit strings look like 2,1,1 (LSD first); got {text!r}")


def parse_points(text: str) -> tuple[int, ...]:
    parts = text.replace(",", " ").split()
    try:
        points = sorted({int(p) for p in parts})
    except ValueError:
        raise PreconditionError(f"points look like 1,2,3; got {text!r}")
    return tuple(points)


def parse_constraint(text: str) -> ConstraintFunction:
    kind, _, rest = text.partition(":")
    if kind == "reciprocal":
        return ConstraintFunction.reciprocal(parse_rational(rest) if rest else 1)
    if kind == "constant":
        if not rest:
            raise PreconditionError("constant constraint needs a value, e.g. constant:1/4")
        return ConstraintFunction.constant(parse_rational(rest))
    raise PreconditionError(
        f"unknown constraint {text!r}; use reciprocal, reciprocal:K, or constant:V "
        f"(tables come from a configuration document)"
    )


def _reject_unknown(mapping: dict, allowed: set[str], where: str) -> None:
    unknown = set(mapping) - allowed
    if unknown:
        raise ConfigError(f"unknown field(s) {sorted(unknown)} in {where}")


def _config_rational(value: Any, where: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise ConfigError(
            f"{where} must be an integer or a string like \"1/2\" (floats are "
            f"rejected to keep values exact), got {value!r}"
        )
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"{where} is not a rational: {value!r}")


def _config_int_list(value: Any, where: str) -> list[int]:
    if not isinstance(value, list) or not all(
        isinstance(v, int) and not isinstance(v, bool) for v in value
    ):
        raise ConfigError(f"{where} must be a list of integers, got {value!r}")
    return value


def _system_from_config(spec: Any) -> NumerationSystem:
    if not isinstance(spec, dict):
        raise ConfigError("'system' must be an object")
    _reject_unknown(spec, {"name", "basis", "recurrence"}, "'system'")
    name = spec.get("name", "config")
    if not isinstance(name, str):
        raise ConfigError("'system.name' must be a string")
    if ("basis" in spec) == ("recurrence" in spec):
        raise ConfigError("'system' must declare exactly one of 'basis' or 'recurrence'")
    if "basis" in spec:
        return NumerationSystem.from_basis(name, _config_int_list(spec["basis"], "'system.basis'"))
    rec = spec["recurrence"]
    if not isinstance(rec, dict):
        raise ConfigError("'system.recurrence' must be an object")
    _reject_unknown(rec, {"coefficients", "initial_values"}, "'system.recurrence'")
    if "coefficients" not in rec or "initial_values" not in rec:
        raise ConfigError("'system.recurrence' needs 'coefficients' and 'initial_values'")
    return NumerationSystem.from_recurrence(
        name,
        _config_int_list(rec["coefficients"], "'system.recurrence.coefficients'"),
        _config_int_list(rec["initial_values"], "'system.recurrence.initial_values'"),
    )


def _constraint_from_config(spec: Any) -> ConstraintFunction:
    if not isinstance(spec, dict):
        raise ConfigError("'constraint' must be an object")
    kind = spec.get("kind")
    if kind == "reciprocal":
        _reject_unknown(spec, {"kind", "scale"}, "'constraint'")
        scale = _config_rational(spec.get("scale", 1), "'constraint.scale'")
        return ConstraintFunction.reciprocal(scale)
    if kind == "constant":
        _reject_unknown(spec, {"kind", "value"}, "'constraint'")
        if "value" not in spec:
            raise ConfigError("constant constraint needs 'value'")
        return ConstraintFunction.constant(_config_rational(spec["value"], "'constraint.value'"))
    if kind == "table":
        _reject_unknown(spec, {"kind", "values", "tail"}, "'constraint'")
        values = spec.get("values")
        if not isinstance(values, list) or not values:
            raise ConfigError("table constraint needs a non-empty 'values' list")
        table = [_config_rational(v, "'constraint.values' entry") for v in values]
        tail = _config_rational(spec.get("tail", 0), "'constraint.tail'")
        return ConstraintFunction.from_table(table, tail)
    raise ConfigError(f"'constraint.kind' must be reciprocal, constant, or table, got {kind!r}")


def load_config_document(path: str) -> tuple[NumerationSystem | None, ConstraintFunction | None]:
    """Load a versioned configuration document (JSON, format: 1).

    The document may declare a numeration system (explicit basis or linear
    recurrence) and a constraint function. Unknown fields anywhere are
    rejected, not ignored.
    """
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read configuration {path!r}: {exc}")
    except json.JSONDecodeError as exc:
        raise ConfigError(f"configuration {path!r} is not valid JSON: {exc}")
    if not isinstance(data, dict):
        raise ConfigError("configuration document must be a JSON object")
    _reject_unknown(data, {"format", "system", "constraint"}, "configuration document")
    if data.get("format") != CONFIG_FORMAT:
        raise ConfigError(
            f"configuration 'format' must be {CONFIG_FORMAT}, got {data.get('format')!r}"
        )
    system = _system_from_config(data["system"]) if "system" in data else None
    constraint = _constraint_from_config(data["constraint"]) if "constraint" in data else None
    return system, constraint


def _resolve_system(args: argparse.Namespace) -> NumerationSystem:
    name = getattr(args, "system", None)
    config_path = getattr(args, "config", None)
    if name is not None and config_path is not None:
        raise ConfigError("give either --system or --config, not both")
    if name is not None:
        try:
            return BUILTIN_SYSTEMS[name]
        except KeyError:
            raise ConfigError(
                f"unknown system {name!r}; built-ins are {sorted(BUILTIN_SYSTEMS)}"
            )
    if config_path is not None:
        system, _ = load_config_document(config_path)
        if system is None:
            raise ConfigError(f"configuration {config_path!r} declares no system")
        return system
    return FIB_EVEN


def _resolve_constraint(args: argparse.Namespace) -> ConstraintFunction:
    flag = getattr(args, "constraint", None)
    if flag is not None:
        return parse_constraint(flag)
    config_path = getattr(args, "config", None)
    if config_path is not None:
        _, constraint = load_config_document(config_path)
        if constraint is not None:
            return constraint
    return ConstraintFunction.reciprocal()


def _cmd_fib(args, cfg: RunConfig, em: Emitter) -> int:
    value = fib(args.n)
    em.record({"command": "fib", "n": args.n, "value": value}, [f"fib({args.n}) = {value}"])
    return EXIT_OK


def _cmd_basis(args, cfg: RunConfig, em: Emitter) -> int:
    value = basis(args.i)
    em.record({"command": "basis", "i": args.i, "value": value}, [f"basis({args.i}) = {value}"])
    return EXIT_OK


def _cmd_encode(args, cfg: RunConfig, em: Emitter) -> int:
    system = _resolve_system(args)
    ds = encode(args.n, system)
    lines = [f"encode({args.n}) = {digits_text(ds)}  (LSD first, system {system.name})"]
    if cfg.msd:
        lines.append(f"msd-first: {digits_text(ds, msd=True)}")
    em.record(
        {"command": "encode", "n": args.n, "system": system.name, "digits": list(ds.digits)},
        lines,
    )
    return EXIT_OK


def _cmd_decode(args, cfg: RunConfig, em: Emitter) -> int:
    system = _resolve_system(args)
    ds = parse_digits(args.digits)
    value = decode(ds, system)
    em.record(
        {"command": "decode", "digits": list(ds.digits), "system": system.name, "value": value},
        [f"decode({digits_text(ds)}) = {value}  (system {system.name})"],
    )
    return EXIT_OK


def _cmd_validate(args, cfg: RunConfig, em: Emitter) -> int:
    ds = parse_digits(args.digits)
    if getattr(args, "system", None) is not None or getattr(args, "config", None) is not None:
        system = _resolve_system(args)
        valid = is_valid_fraenkel(ds, system)
        em.record(
            {"command": "validate", "digits": list(ds.digits), "system": system.name,
             "fraenkel": valid, "valid": valid},
            [f"fraenkel prefix-sum rule ({system.name}): {valid}"],
        )
        return EXIT_OK if valid else EXIT_NEGATIVE
    forbidden = is_valid_fib(ds)
    fraenkel = is_valid_fraenkel(ds, FIB_EVEN)
    two_fold = fib_two_fold(ds)
    valid = forbidden and fraenkel and two_fold
    em.record(
        {"command": "validate", "digits": list(ds.digits), "forbidden_factor": forbidden,
         "fraenkel": fraenkel, "two_fold": two_fold, "valid": valid},
        [
            f"forbidden-factor rule: {forbidden}",
            f"fraenkel prefix-sum rule: {fraenkel}",
            f"two-fold digit rule: {two_fold}",
            f"valid: {valid}",
        ],
    )
    return EXIT_OK if valid else EXIT_NEGATIVE


def _cmd_eval_f(args, cfg: RunConfig, em: Emitter) -> int:
    system = _resolve_system(args)
    q = f_value(args.n) if system is FIB_EVEN else f_generic(args.n, system)
    em.record(
        {"command": "eval-f", "n": args.n, "system": system.name, "value": rational_json(q)},
        [f"f({args.n}) = {rational_text(q)}  (system {system.name})"],
    )
    return EXIT_OK


_REL_SYMBOL = {"less": "<", "equal": "=", "greater": ">"}


def _cmd_compare(args, cfg: RunConfig, em: Emitter) -> int:
    by_value = compare_by_value(args.a, args.b)
    by_f = compare_by_f(args.a, args.b)
    lines = [
        f"integer order: {args.a} {_REL_SYMBOL[by_value.relation]} {args.b}"
        + (f"  (decided at digit {by_value.witness_position})" if by_value.witness_position else ""),
        f"f order: f({args.a}) {_REL_SYMBOL[by_f.relation]} f({args.b})"
        + (f"  (decided at digit {by_f.witness_position})" if by_f.witness_position else ""),
    ]
    em.record(
        {
            "command": "compare",
            "a": args.a,
            "b": args.b,
            "by_value": {"relation": by_value.relation, "witness_position": by_value.witness_position},
            "by_f": {"relation": by_f.relation, "witness_position": by_f.witness_position},
        },
        lines,
    )
    return EXIT_OK


def _cmd_verify(args, cfg: RunConfig, em: Emitter) -> int:
    constraint = _resolve_constraint(args)
    report = verify_range(args.max, constraint, workers=cfg.workers, max_pairs=cfg.max_pairs)
    em.violation_report("verify", report)
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def _cmd_check_system(args, cfg: RunConfig, em: Emitter) -> int:
    system = _resolve_system(args)
    constraint = _resolve_constraint(args)
    report = check_system(system, constraint, args.max, workers=cfg.workers, max_pairs=cfg.max_pairs)
    em.violation_report("check-system", report)
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def _cmd_sup(args, cfg: RunConfig, em: Emitter) -> int:
    value = supremum_partial(args.n)
    argmax, f_max = max_f_up_to_length(args.n)
    em.record(
        {
            "command": "sup",
            "n": args.n,
            "partial_sum": rational_json(value),
            "argmax": argmax,
            "f_argmax": rational_json(f_max),
        },
        [
            f"partial_sum({args.n}) = {rational_text(value)}",
            f"argmax over length <= {args.n}: {argmax}",
            f"f({argmax}) = {rational_text(f_max)}",
        ],
    )
    return EXIT_OK


def _cmd_identities(args, cfg: RunConfig, em: Emitter) -> int:
    result = run_identity_suite(limit=args.limit, catalan_limit=args.catalan_limit)
    for kind in sorted(result.evaluated):
        em.record(
            {"type": "kind", "kind": kind, "evaluated": result.evaluated[kind]},
            [f"{kind}: evaluated={result.evaluated[kind]}"],
        )
    for verdict in result.failures:
        em.record(
            {
                "type": "failure",
                "kind": verdict.kind.value,
                "params": list(verdict.params),
                "lhs": rational_json(verdict.lhs),
                "rhs": rational_json(verdict.rhs),
                "relation_claimed": verdict.relation_claimed,
            },
            [f"FAILURE {verdict.kind.value}{verdict.params}: "
             f"lhs={verdict.lhs} rhs={verdict.rhs} claimed {verdict.relation_claimed}"],
        )
    em.record(
        {
            "type": "summary",
            "command": "identities",
            "evaluated": result.total,
            "failures": len(result.failures),
            "catfrac_equalities": result.catfrac_equalities,
        },
        [f"identities evaluated={result.total} failures={len(result.failures)}"],
    )
    return EXIT_OK if result.ok else EXIT_NEGATIVE


def _cmd_search_optimum(args, cfg: RunConfig, em: Emitter) -> int:
    constraint = _resolve_constraint(args)
    points = parse_points(args.points)
    inst = FiniteInstance(points, constraint)
    result = exact_optimum(inst, max_points=cfg.max_points)
    witness_json = {str(p): rational_json(v) for p, v in result.witness.items()}
    lines = [
        f"optimum = {rational_text(result.optimum)}",
        f"order = {list(result.order)}",
        f"orders_explored = {result.orders_explored}",
    ]
    lines += [f"value({p}) = {rational_text(v)}" for p, v in result.witness.items()]
    em.record(
        {
            "command": "search-optimum",
            "points": list(points),
            "constraint": constraint.description,
            "optimum": rational_json(result.optimum),
            "order": list(result.order),
            "orders_explored": result.orders_explored,
            "witness": witness_json,
        },
        lines,
    )
    return EXIT_OK


def _cmd_conjecture(args, cfg: RunConfig, em: Emitter) -> int:
    report = compare_with_conjecture(args.n, max_points=cfg.max_points)
    lines = [
        f"points = 1..{report.points[-1]}",
        f"exact_optimum = {rational_text(report.optimum.optimum)}",
        f"conjectured_bound = {rational_text(report.conjectured)}",
        f"f_length_max = {rational_text(report.f_length_max)}  (at a = {report.f_length_argmax})",
        f"f_max_on_points = {rational_text(report.f_max_on_points)}",
        f"orders_explored = {report.optimum.orders_explored}",
    ]
    lines += [f"flag {key}={value}" for key, value in sorted(report.flags.items())]
    em.record(
        {
            "command": "conjecture",
            "n": report.n,
            "points": list(report.points),
            "optimum": rational_json(report.optimum.optimum),
            "conjectured": rational_json(report.conjectured),
            "f_length_max": rational_json(report.f_length_max),
            "f_length_argmax": report.f_length_argmax,
            "f_max_on_points": rational_json(report.f_max_on_points),
            "orders_explored": report.optimum.orders_explored,
            "flags": report.flags,
            "witness": {str(p): rational_json(v) for p, v in report.optimum.witness.items()},
        },
        lines,
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["table", "json-lines", "csv"], default=None,
                        help="output format (default: table)")
    common.add_argument("--workers", type=int, default=None,
                        help="worker processes for pair scans (default: available parallelism)")
    common.add_argument("--max-pairs", type=int, default=None, dest="max_pairs",
                        help=f"pair-count bound for range checks (default {DEFAULT_MAX_PAIRS})")
    common.add_argument("--max-points", type=int, default=None, dest="max_points",
                        help=f"point bound for the exact optimum search (default {DEFAULT_MAX_POINTS})")
    common.add_argument("--max-enum-len", type=int, default=None, dest="max_enum_len",
                        help=f"length bound for enumeration (default {DEFAULT_ENUM_BOUND})")
    common.add_argument("--msd", action="store_true",
                        help="also show digit strings most-significant first")

    parser = argparse.ArgumentParser(
        prog="proxinv",
        description="Fibonacci numeration systems and exact proximity-inversion checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, help_text: str, system_opts: bool = False) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(handler=handler)
        if system_opts:
            p.add_argument("--system", choices=sorted(BUILTIN_SYSTEMS), default=None,
                           help="a built-in numeration system (default: fib-even)")
            p.add_argument("--config", default=None,
                           help="configuration document declaring a system and/or constraint")
        return p

    p = add("fib", _cmd_fib, "print a Fibonacci number")
    p.add_argument("n", type=int)

    p = add("basis", _cmd_basis, "print a basis element u_i = fib(2i)")
    p.add_argument("i", type=int)

    p = add("encode", _cmd_encode, "encode an integer as a digit string", system_opts=True)
    p.add_argument("n", type=int)

    p = add("decode", _cmd_decode, "decode a digit string (LSD first)", system_opts=True)
    p.add_argument("digits")

    p = add("validate", _cmd_validate, "run the validity checkers on a digit string",
            system_opts=True)
    p.add_argument("digits")

    p = add("eval-f", _cmd_eval_f, "evaluate the reciprocal digit map", system_opts=True)
    p.add_argument("n", type=int)

    p = add("compare", _cmd_compare, "compare two integers by digits, both orderings")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)

    p = add("verify", _cmd_verify, "exhaustively check |f(a)-f(b)| >= c(b-a) on 0..N")
    p.add_argument("--max", type=int, required=True, help="inclusive range end N")
    p.add_argument("--constraint", default=None,
                   help="reciprocal (default), reciprocal:K, or constant:V")

    p = add("sup", _cmd_sup, "partial sums of the supremum and the length-bounded argmax")
    p.add_argument("--n", type=int, required=True)

    p = add("identities", _cmd_identities, "sweep the identity suite over its ranges")
    p.add_argument("--limit", type=int, default=80)
    p.add_argument("--catalan-limit", type=int, default=150, dest="catalan_limit")

    p = add("search-optimum", _cmd_search_optimum, "exact optimum for an explicit point set")
    p.add_argument("--points", required=True, help="comma-separated points, e.g. 1,2,3")
    p.add_argument("--constraint", default=None,
                   help="reciprocal (default), reciprocal:K, or constant:V")

    p = add("conjecture", _cmd_conjecture,
            "compare the exact optimum of {1..fib(2n)} with the conjectured bound")
    p.add_argument("--n", type=int, required=True)

    p = add("check-system", _cmd_check_system,
            "exhaustively check an arbitrary system against a constraint", system_opts=True)
    p.add_argument("--max", type=int, required=True, help="inclusive range end N")
    p.add_argument("--constraint", default=None,
                   help="reciprocal (default), reciprocal:K, or constant:V")

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return EXIT_OK
        return code if isinstance(code, int) else EXIT_USAGE
    try:
        cfg = _resolve_run_config(args)
        emitter = Emitter(cfg.format)
        return args.handler(args, cfg, emitter)
    except (ConfigError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
