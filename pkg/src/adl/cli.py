"""Command line front end.

Three subcommands cover the toolchain surface:

``adlc check``
    Parse and validate description files; print diagnostics.
``adlc emit``
    Validate, then run the selected back ends and write the output tree.
``adlc inspect``
    Summarize a payload file from its embedded schema and object table.

Exit codes: 0 on success, 1 for diagnosed problems in the input (syntax,
validation, payload, or emission errors), 2 for usage and I/O failures.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from . import ast
from .backends import (
    EmitError,
    EmitterConfig,
    FileSet,
    emit_converters,
    emit_dataobjects,
    emit_manifest,
    write_fileset,
)
from .diagnostics import Diagnostic, Severity
from .errors import PayloadError
from .metamodel import MetaModel, build_model, resolve
from .parser import parse_source
from .runtime.codec import describe_payload

BACKEND_NAMES = ("objects", "converters", "manifest")
CONVERTER_FORMATS = ("self-describing-binary", "canonical-json")


@dataclass(frozen=True)
class CliConfig:
    """One parsed invocation, independent of argparse."""

    command: str
    sources: tuple[str, ...] = ()
    output_root: str = "generated"
    backends: tuple[str, ...] = BACKEND_NAMES
    converter_format: str = "self-describing-binary"
    scripting_shim: bool = False
    payload: str = ""


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="adlc",
        description="compile object description files to C++, converters, and reflection metadata",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="parse and validate description files")
    check.add_argument("sources", nargs="+", metavar="FILE", help="description source files")

    emit = sub.add_parser("emit", help="validate, then generate code and metadata")
    emit.add_argument("sources", nargs="+", metavar="FILE", help="description source files")
    emit.add_argument("--out", default="generated", metavar="DIR", help="output tree root")
    emit.add_argument(
        "--backends",
        default=",".join(BACKEND_NAMES),
        metavar="LIST",
        help="comma-separated back ends to run (objects, converters, manifest)",
    )
    emit.add_argument(
        "--format",
        choices=CONVERTER_FORMATS,
        default="self-describing-binary",
        dest="converter_format",
        help="converter output format",
    )
    emit.add_argument(
        "--shim",
        action="store_true",
        help="also emit the scripting shim module next to the manifest",
    )

    inspect = sub.add_parser("inspect", help="summarize a payload file")
    inspect.add_argument("payload", metavar="FILE", help="payload file to describe")
    return parser


def config_from_args(args: argparse.Namespace) -> CliConfig | None:
    if args.command == "check":
        return CliConfig(command="check", sources=tuple(args.sources))
    if args.command == "emit":
        backends = tuple(name.strip() for name in args.backends.split(",") if name.strip())
        for name in backends:
            if name not in BACKEND_NAMES:
                print(
                    f"adlc: error: unknown backend '{name}' "
                    f"(choose from {', '.join(BACKEND_NAMES)})",
                    file=sys.stderr,
                )
                return None
        if not backends:
            print("adlc: error: no backends selected", file=sys.stderr)
            return None
        return CliConfig(
            command="emit",
            sources=tuple(args.sources),
            output_root=args.out,
            backends=backends,
            converter_format=args.converter_format,
            scripting_shim=args.shim,
        )
    return CliConfig(command="inspect", payload=args.payload)


def _print_diagnostics(diagnostics: list[Diagnostic]) -> None:
    ordered = sorted(diagnostics, key=lambda d: (d.pos.file, d.pos.line, d.pos.column))
    for diagnostic in ordered:
        print(diagnostic.render(), file=sys.stderr)


def _compile(sources: tuple[str, ...]) -> tuple[MetaModel | None, list[Diagnostic], int]:
    """Parse, build, and resolve; (model, diagnostics, exit code)."""
    units: list[ast.CompilationUnit] = []
    diagnostics: list[Diagnostic] = []
    for path in sources:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            reason = exc.strerror or str(exc)
            print(f"adlc: error: cannot read '{path}': {reason}", file=sys.stderr)
            return None, diagnostics, 2
        except UnicodeDecodeError as exc:
            print(f"adlc: error: cannot read '{path}': {exc.reason}", file=sys.stderr)
            return None, diagnostics, 2
        unit, unit_diags = parse_source(text, path)
        units.append(unit)
        diagnostics.extend(unit_diags)
    if any(d.severity is Severity.ERROR for d in diagnostics):
        return None, diagnostics, 1
    model, build_diags = build_model(units)
    diagnostics.extend(build_diags)
    if any(d.severity is Severity.ERROR for d in diagnostics):
        return None, diagnostics, 1
    model, resolve_diags = resolve(model)
    diagnostics.extend(resolve_diags)
    if any(d.severity is Severity.ERROR for d in diagnostics):
        return None, diagnostics, 1
    return model, diagnostics, 0


def run_check(config: CliConfig) -> int:
    _, diagnostics, code = _compile(config.sources)
    _print_diagnostics(diagnostics)
    return code


def run_emit(config: CliConfig) -> int:
    model, diagnostics, code = _compile(config.sources)
    _print_diagnostics(diagnostics)
    if code != 0 or model is None:
        return code
    emitter_config = EmitterConfig(
        output_root=config.output_root,
        converter_format=config.converter_format,
        scripting_shim=config.scripting_shim,
    )
    files = FileSet()
    warnings: list[Diagnostic] = []
    try:
        if "objects" in config.backends:
            files.merge(emit_dataobjects(model, emitter_config))
        if "converters" in config.backends:
            converter_files, converter_warnings = emit_converters(model, emitter_config)
            files.merge(converter_files)
            warnings.extend(converter_warnings)
        if "manifest" in config.backends:
            files.merge(emit_manifest(model, emitter_config))
    except EmitError as exc:
        print(f"adlc: error: {exc}", file=sys.stderr)
        return 1
    _print_diagnostics(warnings)
    try:
        results = write_fileset(files, emitter_config.output_root)
    except OSError as exc:
        reason = exc.strerror or str(exc)
        print(f"adlc: error: cannot write under '{config.output_root}': {reason}", file=sys.stderr)
        return 2
    root = Path(emitter_config.output_root)
    for path, status in results:
        verb = "wrote" if status == "written" else "unchanged"
        print(f"{verb} {(root / path).as_posix()}")
    return 0


def run_inspect(config: CliConfig) -> int:
    try:
        data = Path(config.payload).read_bytes()
    except OSError as exc:
        reason = exc.strerror or str(exc)
        print(f"adlc: error: cannot read '{config.payload}': {reason}", file=sys.stderr)
        return 2
    try:
        summary = describe_payload(data)
    except PayloadError as exc:
        print(f"adlc: error: {exc}", file=sys.stderr)
        return 1
    noun = "object" if summary.total_objects == 1 else "objects"
    print(f"payload version {summary.version}: {summary.total_objects} {noun}")
    for cls in summary.classes:
        print(
            f"  {cls.qualified_name}  classId=0x{cls.class_id:08x}"
            f"  category={cls.category}  count={cls.count}"
        )
    return 0


def run(config: CliConfig) -> int:
    if config.command == "check":
        return run_check(config)
    if config.command == "emit":
        return run_emit(config)
    return run_inspect(config)


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_arg_parser().parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    config = config_from_args(args)
    if config is None:
        return 2
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
