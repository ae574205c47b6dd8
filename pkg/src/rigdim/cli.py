"""Command line front end and the ``.alg`` / ``.mod`` file formats.

Algebra files are TOML::

    field = "Q"
    name = "CYC2"
    relations = ["alpha*beta", "beta*alpha"]

    [quiver]
    vertices = ["1", "2"]
    arrows = [
      { name = "alpha", from = "1", to = "2" },
      { name = "beta", from = "2", to = "1" },
    ]

Module files list the summands of a module.  A summand is either a standard
label (``"P1"``, ``"I2"``, ``"S1"``, ``"P1/rad2"``) or an explicit table with
``dims`` and one row-major matrix per arrow, entries as exact strings.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Tuple

import tomli

from .endoglobal import NonBasicInput, NotGenerator, NotGeneratorCogenerator, SplitnessError, mueller_check
from .exactla import FieldSpec, Matrix
from .homological import (
    DEFAULT_CUTOFF,
    IncompleteList,
    NotSelfInjective,
    ext_dim,
    homological_dims,
    max_orthogonal_check,
    nodes_and_rho,
    rigidity_degree,
)
from .quiveralg import Algebra, AlgebraError, Quiver, build_algebra, parse_relation
from .repmod import (
    InconclusiveError,
    ModuleError,
    Representation,
    UnsupportedCharacteristic,
    direct_sum,
    injective,
    projective,
    simple,
)
from .rigidity import SelfInjectiveInput, serial_quotient, enumerate_indecomposables, rigidity_dimension

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_UNSUPPORTED = 3
EXIT_INCONCLUSIVE = 4


class FormatError(ValueError):
    pass


class Unsupported(RuntimeError):
    pass


# -- algebra files ------------------------------------------------------------

@dataclass
class AlgebraPresentation:
    algebra: Algebra
    cutoff: int
    seed: int
    source: str


def _load_toml(path) -> dict:
    try:
        with open(path, "rb") as fh:
            return tomli.load(fh)
    except OSError as exc:
        raise FormatError(f"{path}: {exc.strerror}") from exc
    except tomli.TOMLDecodeError as exc:
        raise FormatError(f"{path}: {exc}") from exc


def parse_algebra_text(data: dict, source: str = "<memory>") -> AlgebraPresentation:
    try:
        field = FieldSpec.parse(str(data.get("field", "Q")))
    except ValueError as exc:
        raise FormatError(f"{source}: bad field: {exc}") from exc
    q = data.get("quiver")
    if not isinstance(q, dict):
        raise FormatError(f"{source}: missing [quiver] table")
    vertices = [str(v) for v in q.get("vertices", [])]
    arrows = []
    for a in q.get("arrows", []):
        try:
            arrows.append((str(a["name"]), str(a["from"]), str(a["to"])))
        except (KeyError, TypeError) as exc:
            raise FormatError(f"{source}: arrow entries need name, from and to") from exc
    options = data.get("options", {})
    try:
        quiver = Quiver.from_names(vertices, arrows)
        relations = []
        for text in data.get("relations", []):
            try:
                relations.append(parse_relation(text))
            except (ValueError, KeyError) as exc:
                raise FormatError(f"{source}: cannot parse relation {text!r}: {exc}") from exc
        alg = build_algebra(
            field,
            quiver,
            relations,
            max_path_length=int(options.get("max_path_length", 64)),
            name=str(data.get("name", Path(source).stem)),
        )
    except AlgebraError as exc:
        raise FormatError(f"{source}: {exc}") from exc
    return AlgebraPresentation(alg, int(options.get("cutoff", DEFAULT_CUTOFF)), int(options.get("seed", 0)), source)


def parse_algebra_file(path) -> AlgebraPresentation:
    return parse_algebra_text(_load_toml(path), str(path))


def _toml_str(s: str) -> str:
    return json.dumps(s)


# -- module files -------------------------------------------------------------

_LABEL = re.compile(r"^(P|I|S)(.+?)(?:/rad(\d+))?$")


def standard_module(alg: Algebra, label: str) -> Representation:
    m = _LABEL.match(label.strip())
    if not m:
        raise FormatError(f"unknown module label {label!r}")
    kind, vertex, j = m.groups()
    if vertex not in alg.vertices:
        raise FormatError(f"label {label!r} names an unknown vertex")
    v = alg.vertices.index(vertex)
    if j is not None:
        if kind != "P":
            raise FormatError(f"only projectives can be truncated: {label!r}")
        return serial_quotient(alg, v, int(j)).with_label(label)
    if kind == "P":
        return projective(alg, v)
    if kind == "I":
        return injective(alg, v)
    return simple(alg, v)


def _explicit_module(alg: Algebra, table: dict, source: str) -> Representation:
    field = alg.field
    try:
        dims = [int(d) for d in table["dims"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"{source}: summand needs integer dims") from exc
    if len(dims) != alg.n_vertices:
        raise FormatError(f"{source}: expected {alg.n_vertices} dims, got {len(dims)}")
    given = table.get("arrows", {})
    unknown = set(given) - {g.name for g in alg.generators}
    if unknown:
        raise FormatError(f"{source}: unknown arrows {sorted(unknown)}")
    mats = []
    for g in alg.generators:
        rows, cols = dims[g.target], dims[g.source]
        raw = given.get(g.name)
        if raw is None:
            mats.append(Matrix.zeros(field, rows, cols))
            continue
        try:
            entries = [[field(_exact(x)) for x in row] for row in raw]
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"{source}: bad entry in matrix {g.name}: {exc}") from exc
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise FormatError(f"{source}: matrix {g.name} must be {rows}x{cols}")
        mats.append(Matrix(field, entries, cols))
    try:
        return Representation(alg, dims, mats, label=str(table.get("label", "")))
    except ModuleError as exc:
        raise FormatError(f"{source}: {exc}") from exc


def _exact(x):
    if isinstance(x, float):
        raise TypeError("floating point entries are not allowed; write them as strings")
    return x


def parse_module_data(alg: Algebra, data: dict, source: str = "<memory>") -> List[Representation]:
    out = []
    for entry in data.get("summands", []):
        if isinstance(entry, str):
            out.append(standard_module(alg, entry))
        else:
            raise FormatError(f"{source}: summands must be labels; use [[summand]] tables for explicit modules")
    for table in data.get("summand", []):
        out.append(_explicit_module(alg, table, source))
    if not out:
        raise FormatError(f"{source}: no summands")
    return out


def parse_module_file(alg: Algebra, path) -> List[Representation]:
    return parse_module_data(alg, _load_toml(path), str(path))


def format_module(M: Representation) -> str:
    alg = M.algebra
    lines = ["[[summand]]"]
    if M.label:
        lines.append(f"label = {_toml_str(M.label)}")
    lines.append("dims = [" + ", ".join(str(d) for d in M.dims) + "]")
    lines.append("")
    lines.append("[summand.arrows]")
    for g, mat in zip(alg.generators, M.mats):
        rows = ", ".join("[" + ", ".join(_toml_str(str(x)) for x in row) + "]" for row in mat.rows)
        lines.append(f"{g.name} = [{rows}]")
    return "\n".join(lines) + "\n"


def load_indecs(alg: Algebra, spec: str) -> Tuple[List[Representation], bool]:
    """``auto`` or a directory of ``.mod`` files (completeness decided by the caller)."""
    if spec == "auto":
        found = enumerate_indecomposables(alg)
        return found.modules, found.complete
    folder = Path(spec)
    if not folder.is_dir():
        raise FormatError(f"{spec}: not a directory")
    mods = []
    for path in sorted(folder.glob("*.mod")):
        mods.extend(parse_module_file(alg, path))
    return mods, False


# -- commands -----------------------------------------------------------------

def _statuses(obj):
    if isinstance(obj, dict):
        if "status" in obj and "value" in obj:
            yield obj["status"]
        for v in obj.values():
            yield from _statuses(v)
    elif isinstance(obj, list):
        for v in obj:
            yield from _statuses(v)


def _summands(args, alg) -> List[Representation]:
    return parse_module_file(alg, args.module)


def cmd_invariants(args, pres: AlgebraPresentation) -> dict:
    alg = pres.algebra
    dims = homological_dims(alg, args.cutoff, args.seed)
    out = {"algebra": alg.name, "field": str(alg.field), "dim": alg.dim}
    out.update(dims.to_json())
    if dims.selfinjective:
        out["nodes"] = nodes_and_rho(alg, args.cutoff, args.seed).to_json()
    return out


def _indecs_for(args, alg):
    mods, complete = load_indecs(alg, args.indecs)
    if args.indecs == "auto" and not complete:
        raise Unsupported("automatic enumeration needs a Nakayama algebra; pass --indecs DIR --complete")
    if args.indecs != "auto":
        complete = args.complete
    return mods, complete


def cmd_cf(args, pres: AlgebraPresentation) -> dict:
    alg = pres.algebra
    mods, complete = _indecs_for(args, alg)
    report = rigidity_dimension(alg, indecs=mods, complete=complete, cutoff=args.cutoff, seed=args.seed)
    out = {"algebra": alg.name}
    out.update(report.to_json())
    return out


def cmd_evd(args, pres: AlgebraPresentation) -> dict:
    summands = _summands(args, pres.algebra)
    return {"module": [X.label for X in summands], "evd": rigidity_degree(summands, args.cutoff, args.seed).to_json()}


def cmd_ext(args, pres: AlgebraPresentation) -> dict:
    alg = pres.algebra
    M = direct_sum(parse_module_file(alg, args.source))
    N = direct_sum(parse_module_file(alg, args.target))
    return {"from": M.label, "to": N.label, "degree": args.degree, "dim": ext_dim(M, N, args.degree, args.seed)}


def cmd_mueller(args, pres: AlgebraPresentation) -> dict:
    summands = _summands(args, pres.algebra)
    out = {"module": [X.label for X in summands]}
    out.update(mueller_check(summands, args.cutoff, args.seed).to_json())
    return out


def cmd_maxortho(args, pres: AlgebraPresentation) -> dict:
    alg = pres.algebra
    summands = _summands(args, alg)
    mods, complete = _indecs_for(args, alg)
    ok = max_orthogonal_check(summands, args.n, mods, complete=complete, seed=args.seed)
    return {"module": [X.label for X in summands], "n": args.n, "maximal_orthogonal": ok}


def cmd_indecs(args, pres: AlgebraPresentation) -> dict:
    found = enumerate_indecomposables(pres.algebra)
    files = []
    if args.output:
        folder = Path(args.output)
        folder.mkdir(parents=True, exist_ok=True)
        for k, M in enumerate(found.modules):
            name = f"{k:02d}_{re.sub(r'[^A-Za-z0-9]+', '_', M.label)}.mod"
            (folder / name).write_text(format_module(M))
            files.append(str(folder / name))
    return {
        "algebra": pres.algebra.name,
        "complete": found.complete,
        "modules": [{"label": M.label, "dims": list(M.dims)} for M in found.modules],
        "files": files,
    }


COMMANDS = {
    "invariants": cmd_invariants,
    "cf": cmd_cf,
    "evd": cmd_evd,
    "ext": cmd_ext,
    "mueller": cmd_mueller,
    "maxortho": cmd_maxortho,
    "indecs": cmd_indecs,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rigdim", description="Exact homological invariants and rigidity dimension of quiver algebras.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("algebra", help="algebra file (.alg)")
    common.add_argument("--cutoff", type=int, default=None, help=f"resolution cutoff (default {DEFAULT_CUTOFF})")
    common.add_argument("--seed", type=int, default=None, help="seed for certificate searches (default 0)")
    common.add_argument("--strict", action="store_true", help="exit 4 unless every value is exact or certified infinite")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("invariants", parents=[common], help="gldim, domdim, idim, nodes")
    p = sub.add_parser("cf", parents=[common], help="rigidity dimension")
    p.add_argument("--indecs", default="auto", help="'auto' or a directory of .mod files")
    p.add_argument("--complete", action="store_true", help="trust a user list of indecomposables as complete")
    p = sub.add_parser("evd", parents=[common], help="rigidity degree of a module")
    p.add_argument("--module", required=True)
    p = sub.add_parser("ext", parents=[common], help="dim Ext^i(M, N)")
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", dest="target", required=True)
    p.add_argument("--degree", type=int, required=True)
    p = sub.add_parser("mueller", parents=[common], help="compare evd+2 with domdim End(M)")
    p.add_argument("--module", required=True)
    p = sub.add_parser("maxortho", parents=[common], help="maximal n-orthogonality")
    p.add_argument("--module", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--indecs", default="auto")
    p.add_argument("--complete", action="store_true")
    p = sub.add_parser("indecs", parents=[common], help="enumerate indecomposables")
    p.add_argument("-o", "--output", default=None, help="directory for one .mod file per module")
    return parser


def run(argv: Optional[List[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        pres = parse_algebra_file(args.algebra)
        if args.cutoff is None:
            args.cutoff = pres.cutoff
        if args.seed is None:
            args.seed = pres.seed
        result = COMMANDS[args.command](args, pres)
    except (FormatError, AlgebraError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_PARSE
    except (NotGenerator, NotGeneratorCogenerator, NonBasicInput) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_PARSE
    except (Unsupported, UnsupportedCharacteristic, IncompleteList, SplitnessError, SelfInjectiveInput, NotSelfInjective) as exc:
        print(f"unsupported: {exc}", file=stderr)
        return EXIT_UNSUPPORTED
    except InconclusiveError as exc:
        print(f"inconclusive: {exc}", file=stderr)
        return EXIT_INCONCLUSIVE
    except ModuleError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_PARSE
    print(json.dumps(result, indent=2), file=stdout)
    if args.strict and any(s == "at_least" for s in _statuses(result)):
        print("strict: some values are only lower bounds", file=stderr)
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
