"""Command-line front end: ``relmon check|convert|export|report``.

Exit codes: 0 when every law holds, 1 on a law violation, 2 on malformed
input or when an enumeration would exceed its cap.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import suites
from .bundle import load_bundle_file
from .core import check_category, presented_to_json
from .errors import RelmonError, ResourceError, StructuralError
from .semiring import SEMIRINGS, Semiring, check_semiring, load_semiring

EXIT_PASS, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


# --------------------------------------------------------------------------
# report assembly


def assemble(target: str, bounds: dict, sections) -> dict:
    """Combine ``[(section id, LawReport)]`` into one ordered JSON report."""
    axioms, parts = [], []
    for sec, rep in sections:
        body = rep.to_json()
        for a in body["axioms"]:
            axioms.append({**a, "id": f"{sec}/{a['id']}"})
        part = {"id": sec, "subject": rep.subject, "verdict": rep.verdict}
        if rep.notes:
            part["notes"] = list(rep.notes)
        parts.append(part)
    verdict = "pass" if all(rep.passed for _, rep in sections) else "fail"
    return {"target": target, "bounds": bounds, "axioms": axioms, "sections": parts,
            "verdict": verdict}


def format_report(doc: dict) -> str:
    lines = [f"target: {doc['target']}"]
    if doc.get("bounds"):
        lines.append("bounds: " + ", ".join(f"{k}={v}" for k, v in doc["bounds"].items()))
    by_section = {}
    for a in doc["axioms"]:
        sec, _, ax = a["id"].partition("/")
        by_section.setdefault(sec, []).append((ax, a))
    for part in doc.get("sections", []):
        lines.append(f"{part['id']}: {part['subject']}: {part['verdict'].upper()}")
        for ax, a in by_section.get(part["id"], []):
            cov = str(a.get("checked", ""))
            if a.get("total") is not None:
                cov += f"/{a['total']}"
            if a.get("sampled"):
                cov += " sampled"
            mark = "FAIL" if a["verdict"] == "fail" else "ok"
            lines.append(f"  [{mark:>4}] {ax} ({cov})")
            if "witness" in a:
                w = a["witness"]
                lines.append(f"         witness {json.dumps(w['witness'], sort_keys=True)}: "
                             f"lhs={json.dumps(w['lhs'])} rhs={json.dumps(w['rhs'])}")
        for n in part.get("notes", []):
            lines.append(f"  note: {n}")
    lines.append(f"verdict: {doc['verdict'].upper()}")
    return "\n".join(lines)


def _emit(doc: dict, fmt: str, out=None):
    text = (json.dumps(doc, indent=2, sort_keys=False) if fmt == "json"
            else format_report(doc)) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _write_json(data, out):
    text = json.dumps(data, indent=2, sort_keys=True) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from None


# --------------------------------------------------------------------------
# parameters


def _semiring(value: str) -> Semiring:
    if value in SEMIRINGS:
        return SEMIRINGS[value]
    try:
        R = load_semiring(value)
    except OSError:
        raise InputError(f"unknown semiring {value!r}: not one of {sorted(SEMIRINGS)} "
                         f"and not a readable JSON file") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{value}: invalid JSON ({exc})") from None
    rep = check_semiring(R)
    if not rep.passed:
        raise InputError(f"semiring {R.name} fails {', '.join(rep.failed_axioms())}")
    return R


def _params(args) -> suites.Params:
    for flag in ("kappa", "max_word", "max_dim"):
        if getattr(args, flag) < 1:
            raise InputError(f"--{flag.replace('_', '-')} must be at least 1")
    return suites.Params(args.kappa, args.max_word, args.max_dim, _semiring(args.semiring))


def _semiring_loader(cli_semiring: Semiring):
    def load(name):
        if name in SEMIRINGS:
            return SEMIRINGS[name]
        if name == cli_semiring.name:
            return cli_semiring
        raise InputError(f"artifact uses semiring {name!r}; pass it with --semiring")
    return load


def _require_builtin(name):
    if name not in suites.BUILTINS:
        raise InputError(f"unknown builtin {name!r}; known: {', '.join(suites.BUILTINS)}")


# --------------------------------------------------------------------------
# commands


def cmd_check(args) -> int:
    if (args.builtin is None) == (args.file is None):
        raise InputError("check needs exactly one of --builtin NAME or a JSON file")
    p = _params(args)
    if args.builtin is not None:
        _require_builtin(args.builtin)
        target = f"builtin:{args.builtin}"
        sections = [(sec, run()) for sec, run in suites.suite(args.builtin, p)]
        bounds = p.bounds()
    else:
        target = args.file
        try:
            bundle = load_bundle_file(args.file)
        except OSError as exc:
            raise InputError(f"cannot read {args.file}: {exc.strerror}") from None
        sections = bundle.reports()
        bounds = {}
    doc = assemble(target, bounds, sections)
    _emit(doc, args.format, args.out)
    return EXIT_PASS if doc["verdict"] == "pass" else EXIT_FAIL


def _source(args, p, want_kind):
    """``(structure, builtin, steps)`` for a conversion source."""
    if (args.builtin is None) == (args.file is None):
        raise InputError("convert needs exactly one of --builtin NAME or an artifact file")
    if args.builtin is not None:
        _require_builtin(args.builtin)
        obj = suites.source_object(args.builtin, p, want_kind)
        steps = ["d-to-kleisli"] if want_kind == "kleisli-extension" else []
        return obj, args.builtin, p, steps
    return suites.rebuild(_read_json(args.file), _semiring_loader(p.semiring))


def cmd_convert(args) -> int:
    p = _params(args)
    src_kind, _ = suites.DIRECTIONS[args.direction]
    obj, builtin, p, steps = _source(args, p, src_kind)
    if suites.kind_of(obj) != src_kind:
        raise InputError(f"{args.direction} needs a {src_kind}, the source is a "
                         f"{suites.kind_of(obj)}")
    rep = suites.checker(obj)
    if not rep.passed:
        doc = assemble(f"source:{obj.name}", p.bounds(), [("source", rep)])
        sys.stderr.write(format_report(doc) + "\n")
        return EXIT_FAIL
    out = suites.convert(obj, args.direction)
    if args.verify:
        vrep = suites.checker(out)
        doc = assemble(f"converted:{out.name}", p.bounds(), [("target", vrep)])
        sys.stderr.write(format_report(doc) + "\n")
        if not vrep.passed:
            return EXIT_FAIL
    _write_json(suites.artifact(out, builtin, p, steps + [args.direction]), args.out)
    return EXIT_PASS


def cmd_export(args) -> int:
    p = _params(args)
    _require_builtin(args.builtin)
    cat = suites.export(args.kind, args.builtin, p)
    if args.verify:
        rep = check_category(cat)
        sys.stderr.write(rep.format_text() + "\n")
        if not rep.passed:
            return EXIT_FAIL
    _write_json(presented_to_json(cat), args.out)
    return EXIT_PASS


def cmd_report(args) -> int:
    doc = _read_json(args.file)
    if not isinstance(doc, dict) or not {"target", "axioms", "verdict"} <= set(doc):
        raise InputError(f"{args.file} is not a relmon report")
    if "bounds" in doc and doc["bounds"] is None:
        doc["bounds"] = {}
    if args.format == "json":
        _emit(doc, "json", args.out)
    else:
        _emit(doc, "text", args.out)
    return EXIT_PASS if doc["verdict"] == "pass" else EXIT_FAIL


# --------------------------------------------------------------------------


def _bounds_flags(p):
    p.add_argument("--builtin", help=f"builtin instance ({', '.join(suites.BUILTINS)})")
    p.add_argument("--kappa", type=int, default=3, help="largest test set size (default 3)")
    p.add_argument("--max-word", type=int, default=3, help="longest word enumerated (default 3)")
    p.add_argument("--max-dim", type=int, default=3,
                   help="largest dimension, or pointed-set size (default 3)")
    p.add_argument("--semiring", default="bool",
                   help="bool, z2, z3 or a JSON semiring table (default bool)")
    p.add_argument("--out", help="write output here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="relmon",
                                     description="Check relative monads, distributive laws "
                                                 "and their liftings on bounded instances.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run every applicable law checker")
    p.add_argument("file", nargs="?", help="JSON bundle or presented category")
    _bounds_flags(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("convert", help="convert between laws, liftings and Kleisli extensions")
    p.add_argument("direction", choices=sorted(suites.DIRECTIONS))
    p.add_argument("file", nargs="?", help="artifact written by an earlier convert")
    _bounds_flags(p)
    p.add_argument("--verify", action="store_true", help="re-check the converted structure")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("export", help="write Kl(T) or the algebra category as JSON")
    p.add_argument("kind", choices=("kleisli", "em"))
    _bounds_flags(p)
    p.add_argument("--verify", action="store_true", help="check the exported category")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("report", help="render a saved JSON report")
    p.add_argument("file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "export" and args.builtin is None:
        parser.error("export needs --builtin")
    try:
        return args.func(args)
    except ResourceError as exc:
        est = f" (estimated size {exc.estimate})" if exc.estimate is not None else ""
        sys.stderr.write(f"relmon: resource limit: {exc}{est}\n")
        return EXIT_INPUT
    except (InputError, StructuralError, RelmonError) as exc:
        sys.stderr.write(f"relmon: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
