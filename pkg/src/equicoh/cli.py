"""Command-line front end.

Subcommands wrap the library one-to-one: validation, Poincare series,
graded image bases, membership checks, localization sums and Euler
classes, plus the x-ray variants.  All JSON output is canonical (sorted
keys, two-space indent, rationals as strings), so identical inputs yield
byte-identical bytes across runs.  Exit codes: 0 success or member, 1
semantic failure (invalid input, non-member), 2 usage, I/O or parse
failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .core import SurfaceClass
from .errors import (
    EquicohError,
    InputError,
    InternalInconsistencyError,
    ParseError,
    SchemaError,
)
from .graph import (
    format_rational,
    parse_graph,
    report_to_json,
    validate_graph,
)
from .s1 import (
    DEFAULT_MAX_DEGREE,
    check_membership,
    class_to_dict,
    class_to_vector,
    degree_slots,
    equivariant_series,
    euler_class,
    image_basis,
    localize,
    parse_class,
    poincare_manifold,
)
from .xray import (
    DEFAULT_XRAY_MAX_DEGREE,
    check_membership_xray,
    image_basis_xray,
    parse_class_torus,
    parse_xray,
    validate_xray,
    xray_class_to_vector,
    xray_degree_slots,
)

MAX_DEGREE_ENV = "EQUICOH_MAX_DEGREE"


class UsageError(EquicohError):
    """Bad flag/environment values that argparse cannot catch itself."""


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    paths: tuple[str, ...]
    max_degree: int
    output_format: str
    fail_fast: bool = False

    def __post_init__(self):
        if self.max_degree < 0:
            raise UsageError("max degree must be nonnegative")
        if self.output_format not in ("text", "json"):
            raise UsageError(f"unknown output format {self.output_format!r}")


def _env_max_degree() -> int | None:
    raw = os.environ.get(MAX_DEGREE_ENV)
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{MAX_DEGREE_ENV} must be an integer, got {raw!r}") from None


def _config(args, default_max: int) -> RunConfig:
    max_degree = args.max_degree if getattr(args, "max_degree", None) is not None else None
    if max_degree is None:
        max_degree = _env_max_degree()
    if max_degree is None:
        max_degree = default_max
    return RunConfig(
        subcommand=args.subcommand,
        paths=tuple(getattr(args, name) for name in args.path_names),
        max_degree=max_degree,
        output_format=args.format,
        fail_fast=getattr(args, "fail_fast", False),
    )


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _dump(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True)


def _report_lines(report) -> list[str]:
    if not report:
        return ["ok"]
    return [f"{v.code}: {v.message}" for v in report]


def _emit_report(report, fmt: str) -> int:
    if fmt == "json":
        print(_dump(report_to_json(report)))
    else:
        print("\n".join(_report_lines(report)))
    return 0 if not report else 1


def _laurent_text(element) -> str:
    if not element.terms:
        return "0"
    bits = []
    for power in sorted(element.terms, reverse=True):
        coeff = element.terms[power]
        if isinstance(coeff, SurfaceClass):
            coeff = f"({coeff!r})"
        bits.append(f"{coeff} * u^{power}" if power else f"{coeff}")
    return " + ".join(bits)


def _surface_entry_json(value: SurfaceClass) -> dict:
    return {
        "c0": format_rational(value.c0),
        "c1": [format_rational(x) for x in value.c1],
        "c2": format_rational(value.c2),
    }


def _table(headers: list[str], rows: list[list[str]]) -> str:
    widths = [
        max(len(h), *(len(row[i]) for row in rows)) if rows else len(h)
        for i, h in enumerate(headers)
    ]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    for row in rows:
        lines.append("  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


def _load_valid_graph(path: str, fmt: str):
    """Parse and validate; on violations print the report and return None."""
    graph = parse_graph(_read(path))
    report = validate_graph(graph)
    if report:
        _emit_report(report, fmt)
        return None
    return graph


def _load_valid_xray(path: str, fmt: str):
    xray = parse_xray(_read(path))
    report = validate_xray(xray)
    if report:
        _emit_report(report, fmt)
        return None
    return xray


def _validate_document(path: str, strictly_xray: bool):
    """Parse and validate one file, dispatching on its "kind" field."""
    text = _read(path)
    doc = json.loads(text)
    if strictly_xray or (isinstance(doc, dict) and doc.get("kind") == "xray"):
        return validate_xray(parse_xray(doc))
    return validate_graph(parse_graph(doc))


def _validate_one(path: str, strictly_xray: bool) -> tuple[int, object]:
    """(status, report-or-error-dict) for one batch file, exceptions captured."""
    try:
        report = _validate_document(path, strictly_xray)
        return (0 if not report else 1, report)
    except json.JSONDecodeError as exc:
        return (2, {"code": "parse", "message": str(exc)})
    except ParseError as exc:
        return (2, {"code": "parse", "message": str(exc)})
    except SchemaError as exc:
        return (2, {"code": "schema", "message": str(exc)})
    except OSError as exc:
        return (2, {"code": "io", "message": str(exc)})
    except InputError as exc:
        return (1, {"code": "input", "message": str(exc)})


def _cmd_validate_impl(args, strictly_xray: bool) -> int:
    config = _config(args, DEFAULT_MAX_DEGREE)
    path = config.paths[0]
    if not os.path.isdir(path):
        try:
            report = _validate_document(path, strictly_xray)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.lineno, exc.colno) from None
        return _emit_report(report, config.output_format)

    names = sorted(n for n in os.listdir(path) if n.endswith(".json"))
    results: list[tuple[str, int, object]] = []
    if config.fail_fast:
        for name in names:
            status, payload = _validate_one(os.path.join(path, name), strictly_xray)
            results.append((name, status, payload))
            if status:
                break
    else:
        with ThreadPoolExecutor(max_workers=min(8, max(1, len(names)))) as pool:
            statuses = pool.map(
                lambda n: _validate_one(os.path.join(path, n), strictly_xray), names
            )
            results = [(n, s, p) for n, (s, p) in zip(names, statuses)]

    if config.output_format == "json":
        entries = []
        for name, status, payload in results:
            entry: dict = {"path": name, "status": status}
            if isinstance(payload, dict):
                entry["error"] = payload
            else:
                entry["report"] = report_to_json(payload)
            entries.append(entry)
        print(_dump({"kind": "batch", "results": entries}))
    else:
        for name, status, payload in results:
            if isinstance(payload, dict):
                print(f"{name}: error: {payload['message']}")
            else:
                for line in _report_lines(payload):
                    print(f"{name}: {line}")
    return max((status for _, status, _ in results), default=0)


def cmd_validate(args) -> int:
    return _cmd_validate_impl(args, strictly_xray=False)


def cmd_xray_validate(args) -> int:
    return _cmd_validate_impl(args, strictly_xray=True)


def cmd_poincare(args) -> int:
    config = _config(args, DEFAULT_MAX_DEGREE)
    graph = _load_valid_graph(config.paths[0], config.output_format)
    if graph is None:
        return 1
    if args.equivariant:
        series = equivariant_series(graph, "manifold")
        upper = config.max_degree
    else:
        series = poincare_manifold(graph)
        upper = min(config.max_degree, max(len(series.numerator) - 1, 0))
    coefficients = [series.coefficient(k) for k in range(upper + 1)]
    if config.output_format == "json":
        print(
            _dump(
                {
                    "kind": "poincare",
                    "equivariant": bool(args.equivariant),
                    "coefficients": coefficients,
                    "numerator": list(series.numerator),
                    "denominator_power": series.denominator_power,
                }
            )
        )
    else:
        print(" ".join(str(c) for c in coefficients))
        print("numerator: " + " ".join(str(n) for n in series.numerator))
        if series.denominator_power:
            print(f"denominator: (1 - t^2)^{series.denominator_power}")
    return 0


def cmd_basis(args) -> int:
    config = _config(args, DEFAULT_MAX_DEGREE)
    path = config.paths[0]
    graph = _load_valid_graph(path, config.output_format)
    if graph is None:
        return 1
    basis = image_basis(graph, args.degree, config.max_degree)
    if config.output_format == "json":
        print(_dump([class_to_dict(b, path) for b in basis]))
        return 0
    slots = degree_slots(graph, args.degree)
    headers = [s.label for s in slots]
    rows = [
        [format_rational(x) for x in class_to_vector(graph, args.degree, b)]
        for b in basis
    ]
    if not headers:
        print(f"no classes in degree {args.degree}")
    else:
        print(_table(headers, rows))
    return 0


def cmd_check(args) -> int:
    config = _config(args, DEFAULT_MAX_DEGREE)
    graph = _load_valid_graph(config.paths[0], config.output_format)
    if graph is None:
        return 1
    alpha = parse_class(_read(config.paths[1]), graph)
    decision = check_membership(graph, alpha)
    if config.output_format == "json":
        print(_dump(decision.to_dict()))
    elif decision.member:
        print("member")
    else:
        for violation in decision.violations:
            print(f"{violation.kind}: {violation.detail}")
    return 0 if decision.member else 1


def cmd_localize(args) -> int:
    config = _config(args, DEFAULT_MAX_DEGREE)
    graph = _load_valid_graph(config.paths[0], config.output_format)
    if graph is None:
        return 1
    alpha = parse_class(_read(config.paths[1]), graph)
    total = localize(graph, alpha)
    if config.output_format == "json":
        print(
            _dump(
                {
                    "kind": "localization",
                    "terms": {
                        str(k): format_rational(c) for k, c in total.terms.items()
                    },
                    "polynomial": total.is_polynomial(),
                }
            )
        )
    else:
        print(_laurent_text(total))
        print("polynomial: " + ("yes" if total.is_polynomial() else "no"))
    return 0


def cmd_euler(args) -> int:
    config = _config(args, DEFAULT_MAX_DEGREE)
    graph = _load_valid_graph(config.paths[0], config.output_format)
    if graph is None:
        return 1
    euler = euler_class(graph, args.component)
    if config.output_format == "json":
        terms: dict[str, object] = {}
        for power, coeff in euler.laurent.terms.items():
            if isinstance(coeff, SurfaceClass):
                terms[str(power)] = _surface_entry_json(coeff)
            else:
                terms[str(power)] = format_rational(coeff)
        print(
            _dump(
                {
                    "kind": "euler",
                    "component": euler.component,
                    "component_kind": euler.kind,
                    "terms": terms,
                }
            )
        )
    else:
        print(_laurent_text(euler.laurent))
    return 0


def cmd_xray_check(args) -> int:
    config = _config(args, DEFAULT_XRAY_MAX_DEGREE)
    xray = _load_valid_xray(config.paths[0], config.output_format)
    if xray is None:
        return 1
    alpha = parse_class_torus(_read(config.paths[1]), xray)
    decision = check_membership_xray(xray, alpha)
    if config.output_format == "json":
        print(_dump(decision.to_dict()))
    elif decision.member:
        print("member")
    else:
        for violation in decision.violations:
            print(f"{violation.kind}: {violation.detail}")
    return 0 if decision.member else 1


def cmd_xray_basis(args) -> int:
    config = _config(args, DEFAULT_XRAY_MAX_DEGREE)
    path = config.paths[0]
    xray = _load_valid_xray(path, config.output_format)
    if xray is None:
        return 1
    basis = image_basis_xray(xray, args.degree, config.max_degree)
    if config.output_format == "json":
        print(_dump([class_to_dict(b, path) for b in basis]))
        return 0
    slots = xray_degree_slots(xray, args.degree)
    headers = [s.label for s in slots]
    rows = [
        [format_rational(x) for x in xray_class_to_vector(xray, args.degree, b)]
        for b in basis
    ]
    if not headers:
        print(f"no classes in degree {args.degree}")
    else:
        print(_table(headers, rows))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="equicoh",
        description="Equivariant cohomology of circle and complexity-one torus "
        "actions from decorated graphs and x-rays.",
    )
    sub = parser.add_subparsers(dest="subcommand")

    def add(name: str, handler, paths: list[str], **kwargs) -> argparse.ArgumentParser:
        p = sub.add_parser(name, **kwargs)
        for path_name in paths:
            p.add_argument(path_name)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.set_defaults(handler=handler, path_names=tuple(paths))
        return p

    p = add("validate", cmd_validate, ["path"], help="validate a graph or x-ray file, or a directory of them")
    p.add_argument("--fail-fast", action="store_true")

    p = add("poincare", cmd_poincare, ["path"], help="Poincare series of the manifold behind a graph")
    p.add_argument("--equivariant", action="store_true")
    p.add_argument("--max-degree", type=int)

    p = add("basis", cmd_basis, ["path"], help="canonical basis of the degree-k image")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--max-degree", type=int)

    add("check", cmd_check, ["graph", "class_path"], help="membership of a class document")
    add("localize", cmd_localize, ["graph", "class_path"], help="localization sum of a class document")

    p = add("euler", cmd_euler, ["path"], help="equivariant Euler class of one fixed component")
    p.add_argument("--component", required=True)

    p = add("xray-validate", cmd_xray_validate, ["path"], help="validate an x-ray file or directory")
    p.add_argument("--fail-fast", action="store_true")

    add("xray-check", cmd_xray_check, ["xray", "class_path"], help="membership for a complexity-one x-ray")

    p = add("xray-basis", cmd_xray_basis, ["path"], help="canonical basis of the degree-k x-ray image")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--max-degree", type=int)

    return parser


def _error(args, code: str, message: str, status: int = 2) -> int:
    if getattr(args, "format", "text") == "json":
        print(_dump({"kind": "error", "code": code, "message": message}))
    else:
        print(f"error: {message}", file=sys.stderr)
    return status


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "handler"):
        parser.print_usage(sys.stderr)
        return 2
    try:
        return args.handler(args)
    except ParseError as exc:
        return _error(args, "parse", str(exc))
    except SchemaError as exc:
        return _error(args, "schema", str(exc))
    except UsageError as exc:
        return _error(args, "usage", str(exc))
    except OSError as exc:
        return _error(args, "io", str(exc))
    except InternalInconsistencyError as exc:
        return _error(args, "inconsistency", str(exc), status=1)
    except InputError as exc:
        return _error(args, "input", str(exc), status=1)


if __name__ == "__main__":
    sys.exit(main())
