"""Command-line surface: build seeds, mutate, transport elements, run the
relation suite, tropical utilities, and the local JSON service."""

from __future__ import annotations

import json
import sys

import click

from . import service
from .builders import build_disk_seed, build_triangle
from .errors import QClusterError
from .qtorus import (
    TorusElement,
    element_from_dict,
    element_to_dict,
    render_element,
)
from .quiver import mutate_quiver, quiver_from_dict, quiver_to_dict
from .rootdata import cartan_data, validate_reduced_word
from .transport import MutationPath, transport
from .tropical import (
    LusztigDatum,
    TropicalPoint,
    count_F0_dim,
    orbit_normal_form,
    trop_mutate,
)
from .uq import KappaContext, relation_suite


def parse_word(text):
    return tuple(int(ch) for ch in text.replace(",", "") if not ch.isspace())


def emit(data, as_json, text=None):
    if as_json:
        click.echo(json.dumps(data, sort_keys=True))
    else:
        click.echo(text if text is not None else json.dumps(data, sort_keys=True))


def fail(exc):
    payload = {"error": {"type": type(exc).__name__, "message": str(exc)}}
    click.echo(json.dumps(payload, sort_keys=True), err=True)
    sys.exit(1)


@click.group()
def main():
    """Exact workbench for Fock-Goncharov quantum cluster seeds."""


@main.command()
@click.option("--type", "type_name", required=True, help='Cartan type, e.g. "A3"')
@click.option("--word", required=True, help='reduced word, e.g. "123121"')
@click.option("--shape", type=click.Choice(["triangle", "disk"]), default="disk")
@click.option("--out", type=click.Path(), default=None)
@click.option("--json", "as_json", is_flag=True)
def build(type_name, word, shape, out, as_json):
    """Build the triangle or disk seed for a reduced word of w0."""
    try:
        c = cartan_data(type_name)
        w = parse_word(word)
        if shape == "triangle":
            quiver = build_triangle(c, w).quiver
        else:
            quiver = build_disk_seed(c, w).quiver
    except (QClusterError, ValueError) as exc:
        fail(exc)
    data = quiver_to_dict(quiver)
    if out:
        with open(out, "w") as fh:
            json.dump(data, fh, sort_keys=True)
    summary = (
        f"{shape} seed for {type_name} word {word}: {len(quiver)} vertices, "
        f"{len(quiver.mutable_ids())} mutable, {len(quiver.frozen_ids())} frozen"
    )
    emit(data, as_json, summary)


@main.command()
@click.option("--seed", "seed_path", required=True, type=click.Path(exists=True))
@click.option("--at", "vertex", required=True)
@click.option("--out", type=click.Path(), default=None)
@click.option("--json", "as_json", is_flag=True)
def mutate(seed_path, vertex, out, as_json):
    """Mutate a seed (JSON file) at a mutable vertex."""
    try:
        with open(seed_path) as fh:
            quiver = quiver_from_dict(json.load(fh))
        result = mutate_quiver(quiver, vertex)
    except (QClusterError, ValueError) as exc:
        fail(exc)
    data = quiver_to_dict(result)
    if out:
        with open(out, "w") as fh:
            json.dump(data, fh, sort_keys=True)
    emit(data, as_json, f"mutated at {vertex}: " + json.dumps(data["eps2"]))


@main.command("transport")
@click.option("--seed", "seed_path", required=True, type=click.Path(exists=True))
@click.option("--element", "element_path", required=True, type=click.Path(exists=True))
@click.option("--path", "path_text", required=True, help='comma-separated vertex ids')
@click.option("--json", "as_json", is_flag=True)
def transport_cmd(seed_path, element_path, path_text, as_json):
    """Re-express an element in the chart at the end of a mutation path."""
    try:
        with open(seed_path) as fh:
            quiver = quiver_from_dict(json.load(fh))
        with open(element_path) as fh:
            element = element_from_dict(quiver, json.load(fh))
        steps = tuple(s.strip() for s in path_text.split(",") if s.strip())
        out = transport(element, MutationPath(quiver, steps))
    except (QClusterError, ValueError) as exc:
        fail(exc)
    emit(element_to_dict(out), as_json, render_element(out))


@main.command()
@click.option("--type", "type_name", required=True)
@click.option("--word", required=True)
@click.option("--quotient", is_flag=True)
@click.option("--json", "as_json", is_flag=True)
def verify(type_name, word, quotient, as_json):
    """Run the full quantum-group relation suite on the disk seed."""
    try:
        ctx = KappaContext(cartan_data(type_name), parse_word(word), quotient=quotient)
        report = relation_suite(ctx)
    except (QClusterError, ValueError) as exc:
        fail(exc)
    n = len(report["cases"])
    if as_json:
        emit(report, True)
    else:
        for case in report["cases"]:
            if not case["ok"]:
                click.echo(f"FAIL {case['name']} ({case['residual_terms']} residual terms)")
        if report["ok"]:
            click.echo(f"all {n} relation cases pass")
        else:
            bad = sum(1 for case in report["cases"] if not case["ok"])
            click.echo(f"{bad} of {n} relation cases FAIL")
    if not report["ok"]:
        sys.exit(1)


@main.command()
@click.option("--type", "type_name", required=True)
@click.option("--word", required=True)
@click.option("--json", "as_json", is_flag=True)
def pbw(type_name, word, as_json):
    """Braid-twisted root vector images E_{i,k}, F_{i,k} with gradings."""
    from .uq import pbw_elements

    try:
        c = cartan_data(type_name)
        w = parse_word(word)
        ctx = KappaContext(c, w)
        es, fs = pbw_elements(ctx, w)
        seq = validate_reduced_word(c, w)
    except (QClusterError, ValueError) as exc:
        fail(exc)
    rows = []
    for k, (e_img, f_img) in enumerate(zip(es, fs)):
        rows.append(
            {
                "k": k + 1,
                "root": list(seq.roots[k]),
                "E": element_to_dict(e_img),
                "F": element_to_dict(f_img),
                "positive": e_img.coefficients_positive()
                and f_img.coefficients_positive(),
            }
        )
    if as_json:
        emit({"pbw": rows}, True)
    else:
        for row in rows:
            click.echo(
                f"E_{{i,{row['k']}}} root {row['root']}: "
                f"{render_element(element_from_dict(ctx.disk.quiver, row['E']))}"
            )


@main.command()
@click.option("--type", "type_name", required=True)
@click.option("--word", required=True, help="reference word for the chart")
@click.option("--seq", "seq_text", required=True, help='braid word, e.g. "1,2,1"')
@click.option("--gen", "gen_name", required=True, help='generator, e.g. "E1"')
@click.option("--json", "as_json", is_flag=True)
def braid(type_name, word, seq_text, gen_name, as_json):
    """kappa image of T_{i_1}...T_{i_m}(generator) in the reference chart."""
    from .uq import UqExpression, braid_apply

    try:
        c = cartan_data(type_name)
        ctx = KappaContext(c, parse_word(word))
        seq = tuple(int(s) for s in seq_text.split(","))
        kind, idx = gen_name[:-1], int(gen_name[-1])
        expr = braid_apply(c, seq, UqExpression.gen(kind, idx))
        image = ctx.kappa(expr)
    except (QClusterError, ValueError) as exc:
        fail(exc)
    emit(element_to_dict(image), as_json, render_element(image))


@main.group()
def trop():
    """Tropical points, evaluation, and lattice counts."""


@trop.command("mutate")
@click.option("--seed", "seed_path", required=True, type=click.Path(exists=True))
@click.option("--point", "point_text", required=True, help='JSON {"id": int, ...}')
@click.option("--at", "vertex", required=True)
@click.option("--json", "as_json", is_flag=True)
def trop_mutate_cmd(seed_path, point_text, vertex, as_json):
    try:
        with open(seed_path) as fh:
            quiver = quiver_from_dict(json.load(fh))
        p = TropicalPoint(quiver, json.loads(point_text))
        out = trop_mutate(p, vertex)
    except (QClusterError, ValueError) as exc:
        fail(exc)
    emit(out.as_dict(), as_json, json.dumps(out.as_dict(), sort_keys=True))


@trop.command("count")
@click.option("--type", "type_name", required=True)
@click.option("--word", required=True)
@click.option("--lam", required=True, help='JSON pair of simple-root vectors')
@click.option("--json", "as_json", is_flag=True)
def trop_count_cmd(type_name, word, lam, as_json):
    """Dimension count of the degree-lambda slice of the zeroth filtration."""
    try:
        c = cartan_data(type_name)
        w = parse_word(word)
        validate_reduced_word(c, w)
        pair = json.loads(lam)
        n = count_F0_dim(c, w, (tuple(pair[0]), tuple(pair[1])))
    except (QClusterError, ValueError) as exc:
        fail(exc)
    emit({"count": n}, as_json, str(n))


@trop.command("normal-form")
@click.option("--type", "type_name", required=True)
@click.option("--datum", required=True, help='JSON {"word","a","lam","c","mu"}')
@click.option("--json", "as_json", is_flag=True)
def trop_normal_form_cmd(type_name, datum, as_json):
    try:
        c = cartan_data(type_name)
        d = json.loads(datum)
        ld = LusztigDatum(
            c,
            tuple(d["word"]),
            tuple(d["a"]),
            tuple(d["lam"]),
            tuple(d["c"]),
            tuple(d["mu"]),
        )
        out = orbit_normal_form(ld)
    except (QClusterError, ValueError) as exc:
        fail(exc)
    data = {
        "word": list(out.word),
        "a": list(out.a),
        "lam": list(out.lam),
        "c": list(out.c),
        "mu": list(out.mu),
    }
    emit(data, as_json, json.dumps(data, sort_keys=True))


@main.command()
@click.option("--port", default=None, type=int, help="default $QCLUSTER_PORT or 8777")
@click.option("--host", default="127.0.0.1")
def serve(port, host):
    """Run the local JSON service the explorer talks to."""
    import os

    import uvicorn

    if port is None:
        port = int(os.environ.get("QCLUSTER_PORT", "8777"))
    uvicorn.run(service.create_app(), host=host, port=port, log_level="warning")


if __name__ == "__main__":
    main()
