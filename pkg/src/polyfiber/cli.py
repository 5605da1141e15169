"""Command-line front end.

Exit codes: 0 when at least one verdict is decisive, 2 when every outcome is
inconclusive, 1 on input errors.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from polyfiber import certify, report
from polyfiber.corpus import BUILTINS, build_pinchuk
from polyfiber.fiber import FiberRefinementError, solve_fiber
from polyfiber.parser import ParseError, ProblemSpec, format_problem, parse_problem_file, render
from polyfiber.polycore import jacobian_matrix, leading_form, total_degree
from polyfiber.systems import build_thm18_system

EXIT_OK, EXIT_INPUT, EXIT_INCONCLUSIVE = 0, 1, 2
# fiber boxes are shrunk to this width before printing
FIBER_WIDTH = Fraction(1, 10**6)


class InputError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    source: str | None = None
    target: tuple[Fraction, ...] | None = None
    fmt: str = "text"
    seed: int = 0
    assume_det_nonvanishing: bool = False
    thm: str = "18"
    col: int = 1
    check: str | None = None
    emit_path: str | None = None


def parse_target(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(part.strip()) for part in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(
            f"bad target {text!r}; expected comma-separated rationals like 1/2,-3") from None


def load_spec(source: str, assume: bool = False) -> ProblemSpec:
    path = Path(source)
    if not path.exists():
        if source in BUILTINS:
            f = BUILTINS[source]()
            return ProblemSpec(f.nvars, f, assume_det_nonvanishing=assume)
        raise InputError(f"{source}: no such file or builtin")
    try:
        spec = parse_problem_file(path.read_text())
    except ParseError as exc:
        raise InputError(f"{source}:{exc.line}:{exc.col}: {exc.message}") from None
    if assume and not spec.assume_det_nonvanishing:
        spec = ProblemSpec(spec.nvars, spec.map, spec.gmatrix, spec.alpha, spec.target, True,
                           spec.defaults_applied)
    return spec


def _certificate_exit(certs) -> int:
    return EXIT_OK if any(c.decisive for c in certs) else EXIT_INCONCLUSIVE


def _map_strings(spec):
    return [render(p) for p in spec.map]


def run(cfg: RunConfig) -> tuple[int, dict, str]:
    """Execute one command; returns the exit code, the JSON document and the text report."""
    doc: dict = {"command": cfg.command, "input": cfg.source}
    lines: list[str] = []

    if cfg.command == "emit":
        if cfg.source not in BUILTINS:
            raise InputError(f"unknown builtin {cfg.source!r}; choose from {', '.join(BUILTINS)}")
        return _emit(cfg.source, cfg.emit_path, doc)

    if cfg.command == "pinchuk":
        return _pinchuk(cfg, doc)

    spec = load_spec(cfg.source, cfg.assume_det_nonvanishing)
    if cfg.target is not None:
        if len(cfg.target) != spec.nvars:
            raise InputError(f"target needs {spec.nvars} coordinates")
        spec = spec.with_target(cfg.target)
    doc["nvars"] = spec.nvars
    doc["map"] = _map_strings(spec)

    if cfg.command == "analyze":
        certs = certify.analyze(spec, seed=cfg.seed)
        doc["certificates"] = [report.certificate_dict(c) for c in certs]
        lines.extend(report.certificate_text(c) for c in certs)
        winner = certify.first_surjective(certs)
        lines.append(f"result: Surjective via {winner.via}" if winner else "result: no surjectivity certificate")
        code = _certificate_exit(certs)
    elif cfg.command == "fiber":
        if spec.nvars != 2:
            raise InputError(f"fiber queries need exactly 2 variables, got {spec.nvars}")
        try:
            rep = solve_fiber(spec.map, spec.target, width=FIBER_WIDTH)
        except FiberRefinementError as exc:
            doc["error"] = str(exc)
            lines.append(f"fiber: inconclusive ({exc})")
            code = EXIT_INCONCLUSIVE
        else:
            doc["fiber"] = report.fiber_dict(rep)
            lines.append(report.fiber_text(rep))
            code = EXIT_OK
    elif cfg.command == "leadform":
        rows = []
        for k, p in enumerate(spec.map, start=1):
            d = total_degree(p)
            rows.append({"component": f"p{k}", "degree": report.degree(d), "form": render(leading_form(p))})
            lines.append(f"p{k}: degree {d}, leading form {render(leading_form(p))}")
        doc["leading_forms"] = rows
        code = EXIT_OK
    elif cfg.command == "necessary":
        if cfg.thm == "17":
            if not 1 <= cfg.col <= spec.nvars:
                raise InputError(f"column must be between 1 and {spec.nvars}")
            cert = certify.check_thm17(spec.gmatrix, cfg.col - 1, seed=cfg.seed)
        else:
            cert = certify.check_thm18(spec.map, seed=cfg.seed)
        doc["certificates"] = [report.certificate_dict(cert)]
        lines.append(report.certificate_text(cert))
        code = _certificate_exit([cert])
    else:
        raise InputError(f"unknown command {cfg.command!r}")
    doc["exit_code"] = code
    return code, doc, "\n".join(lines)


def _emit(name: str, path: str | None, doc: dict):
    if not path:
        raise InputError("emit needs an output path")
    f = BUILTINS[name]()
    spec = ProblemSpec(f.nvars, f)
    Path(path).write_text(format_problem(spec, comment=f"builtin map: {name}"))
    doc.update({"nvars": f.nvars, "written": str(path), "exit_code": EXIT_OK})
    return EXIT_OK, doc, f"wrote {name} to {path}"


def _pinchuk(cfg: RunConfig, doc: dict):
    P = build_pinchuk()
    f = P.map
    doc["nvars"] = 2
    doc["map"] = [render(f[0]), render(f[1])]
    lines = [f"degrees: h {total_degree(P.h)}, f {total_degree(P.f)}, "
             f"p {total_degree(P.p)}, q {total_degree(P.q)}",
             f"leading forms: p -> {render(leading_form(P.p))}, q -> {render(leading_form(P.q))}"]
    code = EXIT_OK
    if cfg.check is not None:
        if cfg.check != "thm18":
            raise InputError(f"unknown check {cfg.check!r}")
        for j, name in enumerate("pq"):
            forms = build_thm18_system(f, j).forms
            lines.append(f"products for {name}: " + ", ".join(render(g) for g in forms))
        cert = certify.check_thm18(f, seed=cfg.seed)
        doc["certificates"] = [report.certificate_dict(cert)]
        lines.append(report.certificate_text(cert))
        code = _certificate_exit([cert])
    if cfg.emit_path:
        Path(cfg.emit_path).write_text(format_problem(ProblemSpec(2, f), comment="builtin map: pinchuk"))
        doc["written"] = cfg.emit_path
        lines.append(f"wrote pinchuk to {cfg.emit_path}")
    doc["exit_code"] = code
    return code, doc, "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--assume-det-nonvanishing", action="store_true",
                        help="treat an undecided matrix determinant as never vanishing")

    ap = argparse.ArgumentParser(prog="polyfiber", description="Surjectivity certificates and fibers of polynomial maps.")
    sub = ap.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="run every surjectivity pipeline")
    a.add_argument("source", help="problem file or builtin name")
    a.add_argument("--target", type=parse_target)

    fb = sub.add_parser("fiber", parents=[common], help="count real points in a fiber (2 variables)")
    fb.add_argument("source")
    fb.add_argument("--target", type=parse_target)

    lf = sub.add_parser("leadform", parents=[common], help="show leading forms")
    lf.add_argument("source")

    ne = sub.add_parser("necessary", parents=[common], help="check a necessary condition")
    ne.add_argument("source")
    ne.add_argument("--thm", choices=["17", "18", "column", "jacobian"], default="18",
                    help="17/column: matrix column forms; 18/jacobian: component-gradient products")
    ne.add_argument("--col", type=int, default=1, help="1-based matrix column")

    pk = sub.add_parser("pinchuk", parents=[common], help="build the Pinchuk map")
    pk.add_argument("--check", choices=["thm18"])
    pk.add_argument("--emit", dest="emit_path")

    em = sub.add_parser("emit", parents=[common], help="write a builtin map as a problem file")
    em.add_argument("source", metavar="builtin")
    em.add_argument("emit_path", metavar="path")
    return ap


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    thm = getattr(ns, "thm", "18")
    return RunConfig(
        command=ns.command,
        source=getattr(ns, "source", None),
        target=getattr(ns, "target", None),
        fmt=ns.format,
        seed=ns.seed,
        assume_det_nonvanishing=ns.assume_det_nonvanishing,
        thm={"column": "17", "jacobian": "18"}.get(thm, thm),
        col=getattr(ns, "col", 1),
        check=getattr(ns, "check", None),
        emit_path=getattr(ns, "emit_path", None),
    )


def main(argv=None) -> int:
    try:
        ns = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    cfg = config_from_args(ns)
    try:
        code, doc, text = run(cfg)
    except (InputError, OSError) as exc:
        if cfg.fmt == "json":
            print(report.to_json({"command": cfg.command, "input": cfg.source,
                                  "exit_code": EXIT_INPUT, "error": str(exc)}))
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(report.to_json(doc) if cfg.fmt == "json" else text)
    return code


if __name__ == "__main__":
    sys.exit(main())
