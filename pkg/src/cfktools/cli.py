"""Command-line front end.

Verbs: torus, staircase, double, d1, classify, diagram, table.  The global
--json flag switches every verb to a versioned JSON document (schema key
"cfk-1"); the default is aligned human-readable text.  Usage errors exit
with 2, computation errors with 1.
"""

from __future__ import annotations

import csv
import io
import json
import math
import sys

import click

from . import diagrams
from .doubles import (
    build_double_complex,
    classify_iterates,
    delta_double_double,
    hfk_hat_double,
    verify_splitting,
)
from .errors import CFKError, InvalidParameter, InvalidTorusParameters
from .filtered import complex_from_json_dict, from_staircase, tensor, validate
from .homology import d1_general, hat_homology_ranks
from .laurent import alexander_torus
from .staircase import (
    Staircase,
    alexander_of_staircase,
    d1_closed_form,
    delta_whitehead,
    staircase_from_alexander,
    tau,
    vertices,
)

SCHEMA = "cfk-1"


def _parse_staircase(text: str) -> Staircase:
    try:
        steps = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise click.UsageError(
            f"malformed staircase vector {text!r}: expected comma-separated integers"
        )
    try:
        return Staircase(steps)
    except ValueError as exc:
        raise click.UsageError(f"malformed staircase vector {text!r}: {exc}")


def _torus_staircase(p: int, q: int) -> Staircase:
    try:
        return staircase_from_alexander(alexander_torus(p, q))
    except InvalidTorusParameters as exc:
        raise click.UsageError(str(exc))


def _knot_report(knot: str, stair: Staircase) -> dict:
    poly = alexander_of_staircase(stair)
    return {
        "knot": knot,
        "alexander": str(poly),
        "alexander_pairs": poly.to_pairs(),
        "steps": list(stair.steps),
        "vertices": [{"i": v.i, "j": v.j, "gr": v.gr} for v in vertices(stair)],
        "tau": tau(stair),
        "d1": d1_closed_form(stair),
        "delta_whitehead": delta_whitehead(stair),
    }


def _emit(ctx: click.Context, payload: dict, text: str) -> None:
    if ctx.obj.get("json"):
        document = {"schema": SCHEMA, **payload}
        click.echo(json.dumps(document, indent=2, sort_keys=True))
    else:
        click.echo(text)


def _report_text(report: dict) -> str:
    verts = " ".join(f"({v['i']},{v['j']})" for v in report["vertices"])
    rows = [
        ("knot", report["knot"]),
        ("alexander", report["alexander"]),
        ("staircase", ",".join(str(s) for s in report["steps"]) or "(unknot)"),
        ("vertices", verts),
        ("tau", report["tau"]),
        ("d1", report["d1"]),
        ("delta_whitehead", report["delta_whitehead"]),
    ]
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k:<{width}}  {v}" for k, v in rows)


@click.group()
@click.option("--json", "as_json", is_flag=True, help="Emit JSON documents.")
@click.pass_context
def main(ctx: click.Context, as_json: bool) -> None:
    """Invariants of staircase knots and their doubles."""
    ctx.obj = {"json": as_json}


@main.command()
@click.argument("p", type=int)
@click.argument("q", type=int)
@click.pass_context
def torus(ctx: click.Context, p: int, q: int) -> None:
    """Invariant report for the (P, Q) torus knot."""
    report = _knot_report(f"T({p},{q})", _torus_staircase(p, q))
    _emit(ctx, report, _report_text(report))


@main.command()
@click.argument("steps")
@click.pass_context
def staircase(ctx: click.Context, steps: str) -> None:
    """Invariant report for the staircase with STEPS like 1,2,2,1."""
    stair = _parse_staircase(steps)
    report = _knot_report(str(stair), stair)
    _emit(ctx, report, _report_text(report))


@main.command()
@click.argument("m", type=int)
@click.option("--verify", is_flag=True, help="Check the trefoil + acyclic splitting.")
@click.option("--delta2", is_flag=True, help="Compute delta of the second double (both routes).")
@click.pass_context
def double(ctx: click.Context, m: int, verify: bool, delta2: bool) -> None:
    """Build the double of T(2, 2M+1) and report on it."""
    try:
        complex = build_double_complex(m)
    except InvalidParameter as exc:
        raise click.UsageError(str(exc))
    try:
        report: dict = {
            "knot": f"D(T(2,{2 * m + 1}))",
            "generators": len(complex.generators),
            "arrows": len(complex.arrows),
            "valid": validate(complex) is None,
            "hfk_ranks": [
                {"alexander": a, "maslov": mm, "rank": r}
                for (a, mm), r in sorted(hfk_hat_double(m).items(), reverse=True)
            ],
        }
        lines = [
            f"knot        {report['knot']}",
            f"generators  {report['generators']}",
            f"arrows      {report['arrows']}",
            f"valid       {report['valid']}",
            "hat ranks   (alexander, maslov) -> rank",
        ]
        for row in report["hfk_ranks"]:
            lines.append(f"            ({row['alexander']},{row['maslov']}) -> {row['rank']}")
        if verify:
            split = verify_splitting(complex)
            report["splitting"] = split.to_dict()
            lines.append(
                f"splitting   trefoil={split.trefoil_summand} "
                f"acyclic_rest={split.acyclic_rest} components={list(split.component_sizes)}"
            )
        if delta2:
            value = delta_double_double(m, via="both")
            report["delta_double_double"] = value
            lines.append(f"delta(D^2)  {value}")
    except CFKError as exc:
        raise click.ClickException(str(exc))
    _emit(ctx, report, "\n".join(lines))


@main.command()
@click.option("--complex", "path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.pass_context
def d1(ctx: click.Context, path: str) -> None:
    """Correction term of +1 surgery for a complex in a JSON file."""
    with open(path, encoding="utf-8") as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as exc:
            raise click.ClickException(f"unreadable JSON in {path}: {exc}")
    try:
        complex = complex_from_json_dict(data)
    except ValueError as exc:
        raise click.ClickException(str(exc))
    violation = validate(complex)
    if violation:
        raise click.ClickException(f"invalid complex: {violation}")
    try:
        value = d1_general(complex)
    except CFKError as exc:
        raise click.ClickException(str(exc))
    report = {
        "file": path,
        "generators": len(complex.generators),
        "hat_ranks": {str(k): v for k, v in sorted(hat_homology_ranks(complex).items())},
        "d1": value,
    }
    _emit(ctx, report, f"d1  {value}")


@main.group()
@click.pass_context
def classify(ctx: click.Context) -> None:
    """Distinguishability of a knot's iterated doubles."""


def _classify_text(report: dict) -> str:
    lines = [
        f"verdict          {report['verdict']}",
        f"tau              {report['tau']}",
        f"delta_whitehead  {report['delta_whitehead']}",
        f"note             {report['note']}",
    ]
    if report["delta_double_double"] is not None:
        lines.insert(3, f"delta(D^2)       {report['delta_double_double']}")
    if report["psi"]:
        lines.append(f"psi rows         {report['psi']}")
    if report["summand_certificate"] is not None:
        lines.append(f"psi unimodular   {report['summand_certificate']}")
    return "\n".join(lines)


@classify.command("torus")
@click.argument("p", type=int)
@click.argument("q", type=int)
@click.pass_context
def classify_torus(ctx: click.Context, p: int, q: int) -> None:
    """Classify the double of the (P, Q) torus knot."""
    stair = _torus_staircase(p, q)
    try:
        report = classify_iterates(stair).to_dict()
    except CFKError as exc:
        raise click.ClickException(str(exc))
    report["knot"] = f"T({p},{q})"
    _emit(ctx, report, _classify_text(report))


@classify.command("staircase")
@click.argument("steps")
@click.pass_context
def classify_staircase(ctx: click.Context, steps: str) -> None:
    """Classify the double of a staircase knot."""
    stair = _parse_staircase(steps)
    try:
        report = classify_iterates(stair).to_dict()
    except CFKError as exc:
        raise click.ClickException(str(exc))
    report["knot"] = str(stair)
    _emit(ctx, report, _classify_text(report))


@main.group()
def diagram() -> None:
    """Render a grid diagram to an SVG file."""


def _write_svg(document: str, path: str) -> None:
    try:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(document)
    except OSError as exc:
        raise click.ClickException(f"cannot write {path}: {exc}")
    click.echo(f"wrote {path}")


def _maybe_square(complex, square: bool):
    return tensor(complex, complex) if square else complex


@diagram.command("torus")
@click.argument("p", type=int)
@click.argument("q", type=int)
@click.option("--svg", "path", required=True, type=click.Path(dir_okay=False))
@click.option("--tensor-square", is_flag=True, help="Draw the complex tensored with itself.")
def diagram_torus(p: int, q: int, path: str, tensor_square: bool) -> None:
    """Diagram of the (P, Q) torus knot complex."""
    complex = _maybe_square(from_staircase(_torus_staircase(p, q)), tensor_square)
    _write_svg(diagrams.svg_for_complex(complex), path)


@diagram.command("staircase")
@click.argument("steps")
@click.option("--svg", "path", required=True, type=click.Path(dir_okay=False))
@click.option("--tensor-square", is_flag=True, help="Draw the complex tensored with itself.")
def diagram_staircase(steps: str, path: str, tensor_square: bool) -> None:
    """Diagram of a staircase complex."""
    complex = _maybe_square(from_staircase(_parse_staircase(steps)), tensor_square)
    _write_svg(diagrams.svg_for_complex(complex), path)


@diagram.command("double")
@click.argument("m", type=int)
@click.option("--svg", "path", required=True, type=click.Path(dir_okay=False))
def diagram_double(m: int, path: str) -> None:
    """Diagram of the double of T(2, 2M+1)."""
    try:
        complex = build_double_complex(m)
    except CFKError as exc:
        raise click.UsageError(str(exc))
    _write_svg(diagrams.svg_for_complex(complex), path)


@diagram.command("complex")
@click.argument("source", type=click.Path(exists=True, dir_okay=False))
@click.option("--svg", "path", required=True, type=click.Path(dir_okay=False))
@click.option("--tensor-square", is_flag=True, help="Draw the complex tensored with itself.")
def diagram_complex(source: str, path: str, tensor_square: bool) -> None:
    """Diagram of a complex loaded from a JSON file."""
    with open(source, encoding="utf-8") as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as exc:
            raise click.ClickException(f"unreadable JSON in {source}: {exc}")
    try:
        complex = complex_from_json_dict(data)
    except ValueError as exc:
        raise click.ClickException(str(exc))
    _write_svg(diagrams.svg_for_complex(_maybe_square(complex, tensor_square)), path)


def _family_rows(family: str) -> tuple[list[str], list[dict]]:
    kind, _, arg = family.partition(":")
    try:
        limit = int(arg)
    except ValueError:
        raise click.UsageError(
            f"malformed family {family!r}: expected torus:N or t2:M"
        )
    rows: list[dict] = []
    if kind == "torus":
        for q in range(3, limit + 1):
            for p in range(2, q):
                if math.gcd(p, q) == 1:
                    rows.append(_knot_report(f"T({p},{q})", _torus_staircase(p, q)))
        header = ["knot", "steps", "alexander", "tau", "d1", "delta_whitehead"]
    elif kind == "t2":
        for m in range(1, limit + 1):
            stair = Staircase((1,) * (2 * m))
            report = _knot_report(f"T(2,{2 * m + 1})", stair)
            report["delta_double_double"] = delta_double_double(m, via="splitting")
            rows.append(report)
        header = [
            "knot",
            "steps",
            "alexander",
            "tau",
            "d1",
            "delta_whitehead",
            "delta_double_double",
        ]
    else:
        raise click.UsageError(f"unknown family kind {kind!r}: expected torus or t2")
    if not rows:
        raise click.UsageError(f"family {family!r} is empty")
    return header, rows


@main.command()
@click.option("--family", required=True, help="torus:N (coprime p<q<=N) or t2:M (m=1..M).")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["csv", "json"]),
    default="csv",
    show_default=True,
)
@click.pass_context
def table(ctx: click.Context, family: str, fmt: str) -> None:
    """Batch invariant table for a knot family."""
    if ctx.obj.get("json"):
        fmt = "json"
    header, rows = _family_rows(family)
    if fmt == "json":
        document = {
            "schema": SCHEMA,
            "family": family,
            "rows": [{k: row[k] for k in header} for row in rows],
        }
        click.echo(json.dumps(document, indent=2, sort_keys=True))
        return
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(
            [",".join(str(s) for s in row[k]) if k == "steps" else row[k] for k in header]
        )
    sys.stdout.write(buffer.getvalue())


if __name__ == "__main__":
    main()
